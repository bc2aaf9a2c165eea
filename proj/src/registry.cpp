#include "qrank/registry.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "qrank/errors.hpp"

namespace qrank {

QSeries SeriesExpr::eval(long order) const {
    try {
        return ensure_trunc(order, builder_);
    } catch (const Error& e) {
        if (label_.empty()) throw;
        throw Error(std::string(e.what()) + " [in " + label_ + "]");
    }
}

SeriesExpr SeriesExpr::operator-() const {
    Builder f = builder_;
    return SeriesExpr([f](long n) { return f(n).negated(); }, "-(" + label_ + ")");
}

SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b) {
    SeriesExpr::Builder fa = a.builder_, fb = b.builder_;
    return SeriesExpr([fa, fb](long n) { return fa(n) + fb(n); },
                      "(" + a.label_ + " + " + b.label_ + ")");
}

SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b) {
    SeriesExpr::Builder fa = a.builder_, fb = b.builder_;
    return SeriesExpr([fa, fb](long n) { return fa(n) - fb(n); },
                      "(" + a.label_ + " - " + b.label_ + ")");
}

SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b) {
    SeriesExpr::Builder fa = a.builder_, fb = b.builder_;
    return SeriesExpr([fa, fb](long n) { return fa(n) * fb(n); },
                      "(" + a.label_ + " * " + b.label_ + ")");
}

SeriesExpr operator/(const SeriesExpr& a, const SeriesExpr& b) {
    SeriesExpr::Builder fa = a.builder_, fb = b.builder_;
    return SeriesExpr([fa, fb](long n) { return fa(n) * invert(fb(n).trimmed()); },
                      "(" + a.label_ + " / " + b.label_ + ")");
}

SeriesExpr se_constant(const Rat& c) {
    return SeriesExpr([c](long n) { return QSeries::monomial(c, 0, n); }, rat_str(c));
}

SeriesExpr se_monomial(const Rat& c, long e) {
    std::string label = (c == 1 ? "" : rat_str(c) + "*") + "q^" + std::to_string(e);
    return SeriesExpr([c, e](long n) { return QSeries::monomial(c, e, std::max(n, e + 1)); },
                      std::move(label));
}

SeriesExpr se_scale(const Rat& c, const SeriesExpr& x) {
    return SeriesExpr([c, x](long n) { return x.raw(n).scaled(c); },
                      rat_str(c) + "*" + x.label());
}

SeriesExpr se_shift(const SeriesExpr& x, long m) {
    return SeriesExpr([x, m](long n) { return x.raw(n).shifted(m); },
                      "q^" + std::to_string(m) + "*" + x.label());
}

SeriesExpr se_dilate(const SeriesExpr& x, long k) {
    return SeriesExpr([x, k](long n) { return x.raw(n).dilated(k); },
                      x.label() + "|q->q^" + std::to_string(k));
}

SeriesExpr se_extract(const SeriesExpr& x, long l, long d) {
    return SeriesExpr([x, l, d](long n) { return x.raw(n).extracted(l, d); },
                      "[" + x.label() + "]_{" + std::to_string(l) + "n+" + std::to_string(d) + "}");
}

const IdentityCheck& find_check(const std::string& id) {
    for (const auto& check : catalog())
        if (check.id == id) return check;
    throw UnknownIdError("no identity with id '" + id + "'");
}

VerifyReport verify_check(const IdentityCheck& check, long order) {
    VerifyReport report;
    report.id = check.id;
    report.order = order > 0 ? order : check.default_order;
    const auto start = std::chrono::steady_clock::now();
    try {
        const QSeries lhs = check.lhs.eval(report.order);
        const QSeries rhs = check.rhs.eval(report.order);
        const CompareResult cmp = eq_upto(lhs, rhs, report.order);
        report.pass = cmp.pass;
        report.mismatch = cmp.mismatch;
    } catch (const Error& e) {
        report.pass = false;
        report.error = e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    report.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

VerifyReport verify(const std::string& id, long order) {
    return verify_check(find_check(id), order);
}

std::vector<VerifyReport> verify_all(long order, int jobs, const std::vector<std::string>& ids) {
    std::vector<const IdentityCheck*> selected;
    if (ids.empty()) {
        for (const auto& check : catalog()) selected.push_back(&check);
    } else {
        for (const auto& id : ids) selected.push_back(&find_check(id));
    }
    std::vector<VerifyReport> reports(selected.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(selected.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i)
            reports[i] = verify_check(*selected[i], order);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= selected.size()) return;
                reports[i] = verify_check(*selected[i], order);
            }
        });
    }
    for (auto& w : workers) w.join();
    return reports;
}

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::theorem: return "theorem";
        case Tier::lemma: return "lemma";
        case Tier::chain: return "chain";
        case Tier::property: return "property";
    }
    return "unknown";
}

long required_truncation(long level, long k, long floor_value) {
    if (level < 1 || k < 0) throw UnsupportedCaseError("required_truncation needs level >= 1, k >= 0");
    // k * level^2 / 12 * prod_{p | level} (1 - 1/p^2), rounded up.
    Rat bound = Rat(k) * Rat(level) * Rat(level) / 12;
    long rest = level;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        bound *= Rat(p * p - 1, p * p);
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1) bound *= Rat(rest * rest - 1, rest * rest);
    mpz_class q, r;
    mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), bound.get_num().get_mpz_t(),
                bound.get_den().get_mpz_t());
    long result = static_cast<long>(q.get_si());
    if (level == 10) result = std::max(result, 72 * k);
    return std::max(result, floor_value);
}

} // namespace qrank
