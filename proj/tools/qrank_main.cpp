/*
 * Command-line front door.
 *
 *   qrank verify --id eq-1.6 [--order N] [--format json|csv|text]
 *   qrank verify --all [--order N] [--jobs K] [--format ...]
 *   qrank table  --rank m2|dyson --modulus L --max-n N [--format ...]
 *   qrank series --name EXPR --order N [--format ...]
 *
 * Exit status: 0 all selected checks pass (or the table/series printed),
 * 1 at least one verification mismatch or evaluation error, 2 usage error
 * (bad flags, unknown id or name, out-of-range request).
 *
 * All reports go to standard output; diagnostics go to standard error.
 * Coefficients are serialized as decimal strings ("p/q", or "p" when the
 * denominator is 1) so arbitrary-precision values survive every format.
 */

#include <algorithm>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrank/errors.hpp"
#include "qrank/lambert.hpp"
#include "qrank/ranks.hpp"
#include "qrank/registry.hpp"
#include "qrank/series.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qrank;

enum class Format { text, csv, json };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    return Format::json;
}

ordered_json report_json(const VerifyReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["pass"] = r.pass;
    if (r.mismatch) {
        ordered_json m;
        m["exponent"] = r.mismatch->exponent;
        m["lhs"] = r.mismatch->lhs.get_str();
        m["rhs"] = r.mismatch->rhs.get_str();
        j["mismatch"] = m;
    } else {
        j["mismatch"] = nullptr;
    }
    j["millis"] = r.millis;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

void print_reports_csv(const std::vector<VerifyReport>& reports) {
    std::cout << "id,order,pass,mismatch_exponent,mismatch_lhs,mismatch_rhs,"
                 "millis,error\n";
    for (const auto& r : reports) {
        std::cout << r.id << ',' << r.order << ','
                  << (r.pass ? "true" : "false") << ',';
        if (r.mismatch)
            std::cout << r.mismatch->exponent << ','
                      << r.mismatch->lhs.get_str() << ','
                      << r.mismatch->rhs.get_str();
        else
            std::cout << ",,";
        std::cout << ',' << r.millis << ',' << r.error << '\n';
    }
}

void print_reports_text(const std::vector<VerifyReport>& reports) {
    long passed = 0, total_ms = 0;
    for (const auto& r : reports) {
        total_ms += r.millis;
        if (!r.error.empty()) {
            std::cout << "[ERR ] " << r.id << " order=" << r.order << " "
                      << r.error << '\n';
        } else if (r.pass) {
            ++passed;
            std::cout << "[ OK ] " << r.id << " order=" << r.order << " ("
                      << r.millis << " ms)\n";
        } else {
            std::cout << "[FAIL] " << r.id << " order=" << r.order
                      << " first mismatch at q^" << r.mismatch->exponent
                      << ": lhs=" << r.mismatch->lhs.get_str()
                      << " rhs=" << r.mismatch->rhs.get_str() << '\n';
        }
    }
    if (reports.size() != 1)
        std::cout << "summary: " << passed << "/" << reports.size()
                  << " passed (" << total_ms << " ms)\n";
}

int cmd_verify(const std::string& id, bool all, long order, long jobs,
               Format format) {
    std::vector<VerifyReport> reports;
    if (all) {
        reports = verify_all(order, jobs);
    } else {
        reports.push_back(verify(id, order));
    }

    if (format == Format::json) {
        if (all) {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            std::cout << arr.dump(2) << '\n';
        } else {
            std::cout << report_json(reports.front()).dump(2) << '\n';
        }
    } else if (format == Format::csv) {
        print_reports_csv(reports);
    } else {
        print_reports_text(reports);
    }

    bool ok = std::all_of(reports.begin(), reports.end(),
                          [](const VerifyReport& r) { return r.pass; });
    return ok ? 0 : 1;
}

int cmd_table(const std::string& rank, long modulus, long max_n,
              Format format) {
    RankKind kind = rank == "dyson" ? RankKind::dyson : RankKind::m2;
    RankTable t = count_table(kind, modulus, max_n);

    if (format == Format::json) {
        ordered_json j;
        j["rank"] = rank;
        j["modulus"] = modulus;
        j["max_n"] = max_n;
        ordered_json rows = ordered_json::array();
        for (long n = 0; n <= max_n; ++n) {
            ordered_json row;
            row["n"] = n;
            row["counts"] = t.counts[static_cast<size_t>(n)];
            row["total"] = t.total(n);
            rows.push_back(row);
        }
        j["rows"] = rows;
        std::cout << j.dump(2) << '\n';
    } else {
        const char sep = format == Format::csv ? ',' : '\t';
        std::cout << "n";
        for (long s = 0; s < modulus; ++s) std::cout << sep << 's' << s;
        std::cout << sep << "total\n";
        for (long n = 0; n <= max_n; ++n) {
            std::cout << n;
            for (long s = 0; s < modulus; ++s) std::cout << sep << t.at(s, n);
            std::cout << sep << t.total(n) << '\n';
        }
    }
    return 0;
}

/* Resolve a series name: "omega", one of the rank-difference shorthands
 * R01(d) / R12(d) / R02(d), or a catalog id (whose formula side prints). */
SeriesExpr resolve_series(const std::string& name) {
    if (name == "omega")
        return SeriesExpr([](long n) { return omega(n); }, "omega");
    static const std::regex rform(R"(^R(01|12|02)\((\d)\)$)");
    std::smatch m;
    if (std::regex_match(name, m, rform)) {
        const std::string family = m[1];
        const long d = std::stol(m[2]);
        long eq = 0;
        if (family == "01" && d <= 2) eq = 5 + d;
        if (family == "12" && d <= 4) eq = 8 + d;
        if (family == "02" && d <= 4) eq = 13 + d;
        if (eq == 0) throw UnknownIdError("no series named " + name);
        return find_check("eq-1." + std::to_string(eq)).rhs;
    }
    return find_check(name).rhs;
}

int cmd_series(const std::string& name, long order, Format format) {
    SeriesExpr expr = resolve_series(name);
    QSeries s = expr.eval(order);

    if (format == Format::json) {
        ordered_json j;
        j["name"] = name;
        j["order"] = order;
        ordered_json terms = ordered_json::array();
        for (long e = s.min_exp(); e < order; ++e) {
            ordered_json t;
            t["exponent"] = e;
            t["coefficient"] = s.coeff(e).get_str();
            terms.push_back(t);
        }
        j["terms"] = terms;
        std::cout << j.dump(2) << '\n';
    } else {
        const char sep = format == Format::csv ? ',' : ' ';
        if (format == Format::csv) std::cout << "exponent,coefficient\n";
        for (long e = s.min_exp(); e < order; ++e)
            std::cout << e << sep << s.coeff(e).get_str() << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine for overpartition rank differences"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string id, name, rank = "m2";
    bool all = false;
    long order = 0, jobs = 1, modulus = 3, max_n = 10, series_order = 10;

    CLI::App* v = app.add_subcommand("verify", "check catalog identities");
    v->add_option("--id", id, "catalog identity id");
    v->add_flag("--all", all, "verify the whole catalog");
    v->add_option("--order", order, "verification order (default: per entry)")
        ->check(CLI::PositiveNumber);
    v->add_option("--jobs", jobs, "worker threads for --all")
        ->check(CLI::PositiveNumber);
    v->add_option("--format", format_name, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* t = app.add_subcommand("table", "rank residue count table");
    t->add_option("--rank", rank, "rank statistic")
        ->check(CLI::IsMember({"m2", "dyson"}));
    t->add_option("--modulus", modulus, "residue modulus")
        ->check(CLI::PositiveNumber);
    t->add_option("--max-n", max_n, "largest weight")
        ->check(CLI::NonNegativeNumber);
    t->add_option("--format", format_name, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* s = app.add_subcommand("series", "print series coefficients");
    s->add_option("--name", name, "omega, R01(d), R12(d), R02(d) or id")
        ->required();
    s->add_option("--order", series_order, "print exponents below this")
        ->check(CLI::PositiveNumber);
    s->add_option("--format", format_name, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Format format = parse_format(format_name);
    try {
        if (v->parsed()) {
            if (all == !id.empty()) {
                std::cerr << "error: pass exactly one of --id or --all\n";
                return 2;
            }
            return cmd_verify(id, all, order, jobs, format);
        }
        if (t->parsed()) return cmd_table(rank, modulus, max_n, format);
        if (s->parsed()) return cmd_series(name, series_order, format);
    } catch (const UnknownIdError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
