/*
 * Python veneer over the C++ core.  Exposes the main operations -- catalog
 * lookup, identity verification, rank count tables, rank-difference series,
 * and named series expansion -- with exact coefficients serialized as
 * decimal strings so nothing is lost crossing the boundary.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qrank/errors.hpp"
#include "qrank/lambert.hpp"
#include "qrank/ranks.hpp"
#include "qrank/registry.hpp"
#include "qrank/series.hpp"

namespace py = pybind11;
using namespace qrank;

namespace {

py::dict report_to_dict(const VerifyReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["order"] = r.order;
    d["pass"] = r.pass;
    if (r.mismatch) {
        py::dict m;
        m["exponent"] = r.mismatch->exponent;
        m["lhs"] = r.mismatch->lhs.get_str();
        m["rhs"] = r.mismatch->rhs.get_str();
        d["mismatch"] = m;
    } else {
        d["mismatch"] = py::none();
    }
    d["millis"] = r.millis;
    d["error"] = r.error;
    return d;
}

RankKind kind_of(const std::string& k) {
    if (k == "m2") return RankKind::m2;
    if (k == "dyson") return RankKind::dyson;
    throw UnknownIdError("rank kind must be 'm2' or 'dyson', got '" + k + "'");
}

SeriesExpr resolve(const std::string& name) {
    if (name == "omega")
        return SeriesExpr([](long n) { return omega(n); }, "omega");
    return find_check(name).rhs;
}

} // namespace

PYBIND11_MODULE(_qrank, m) {
    m.doc() = "exact q-series engine for overpartition rank differences";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const UnknownIdError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const OutOfRangeError& e) {
            PyErr_SetString(PyExc_IndexError, e.what());
        }
        // Every other engine error derives from std::runtime_error and is
        // translated to RuntimeError by the default machinery.
    });

    m.def("catalog_ids", []() {
        std::vector<std::string> out;
        for (const auto& c : catalog()) out.push_back(c.id);
        return out;
    });

    m.def("catalog_info", []() {
        py::list out;
        for (const auto& c : catalog()) {
            py::dict d;
            d["id"] = c.id;
            d["tier"] = tier_name(c.tier);
            d["statement"] = c.statement;
            d["default_order"] = c.default_order;
            out.append(d);
        }
        return out;
    });

    m.def(
        "verify",
        [](const std::string& id, long order) {
            VerifyReport r;
            {
                py::gil_scoped_release nogil;
                r = verify(id, order);
            }
            return report_to_dict(r);
        },
        py::arg("id"), py::arg("order") = 0,
        "Verify one catalog identity; order <= 0 uses the entry default.");

    m.def(
        "verify_all",
        [](long order, int jobs, const std::vector<std::string>& ids) {
            std::vector<VerifyReport> rs;
            {
                py::gil_scoped_release nogil;
                rs = verify_all(order, jobs, ids);
            }
            py::list out;
            for (const auto& r : rs) out.append(report_to_dict(r));
            return out;
        },
        py::arg("order") = 0, py::arg("jobs") = 1,
        py::arg("ids") = std::vector<std::string>{},
        "Verify several identities (all of them when ids is empty).");

    m.def(
        "count_table",
        [](const std::string& kind, long modulus, long max_n) {
            RankTable t;
            {
                py::gil_scoped_release nogil;
                t = count_table(kind_of(kind), modulus, max_n);
            }
            return t.counts;
        },
        py::arg("kind"), py::arg("modulus"), py::arg("max_n"),
        "Residue count rows for n = 0..max_n (the n = 0 row is zero).");

    m.def(
        "rank_diff",
        [](const std::string& kind, long l, long s, long t, long d, long n,
           bool analytic) {
            QSeries q = QSeries::zero(1);
            {
                py::gil_scoped_release nogil;
                q = rank_diff_series(kind_of(kind), l, s, t, d,
                                     analytic ? DiffSource::analytic
                                              : DiffSource::enumeration,
                                     n);
            }
            std::vector<std::string> out;
            for (long e = 0; e < n; ++e) out.push_back(q.coeff(e).get_str());
            return out;
        },
        py::arg("kind"), py::arg("l"), py::arg("s"), py::arg("t"), py::arg("d"),
        py::arg("n"), py::arg("analytic") = true,
        "Coefficients of the rank-difference series below n, as strings.");

    m.def(
        "series_coeffs",
        [](const std::string& name, long order) {
            SeriesExpr expr = resolve(name);
            QSeries s = QSeries::zero(1);
            {
                py::gil_scoped_release nogil;
                s = expr.eval(order);
            }
            py::list out;
            for (long e = s.min_exp(); e < order; ++e)
                out.append(py::make_tuple(e, s.coeff(e).get_str()));
            return out;
        },
        py::arg("name"), py::arg("order") = 10,
        "(exponent, coefficient) pairs below the order; name is 'omega' or a "
        "catalog id (whose formula side prints).");

    m.def("overpartition_count",
          [](long n) {
              py::gil_scoped_release nogil;
              return count_overpartitions(n);
          },
          py::arg("n"));
}
