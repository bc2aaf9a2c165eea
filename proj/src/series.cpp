#include "qrank/series.hpp"

#include <cmath>
#include <sstream>

namespace qrank {

namespace {
const Rat kZero = 0;
}

QSeries::QSeries(long min_exp, long trunc, std::vector<Rat> coeffs)
    : min_exp_(min_exp), trunc_(trunc), coeffs_(std::move(coeffs)) {
    if (trunc_ <= min_exp_)
        throw Error("QSeries: empty window [" + std::to_string(min_exp_) + ", " +
                    std::to_string(trunc_) + ")");
    if (static_cast<long>(coeffs_.size()) != trunc_ - min_exp_)
        throw Error("QSeries: coefficient count does not match window");
}

QSeries QSeries::zero(long trunc) {
    long lo = std::min(0L, trunc - 1);
    return QSeries(lo, trunc, std::vector<Rat>(trunc - lo));
}

QSeries QSeries::one(long trunc) { return monomial(1, 0, trunc); }

QSeries QSeries::monomial(const Rat& c, long exp, long trunc) {
    if (exp >= trunc)
        throw OutOfRangeError("monomial: exponent " + std::to_string(exp) +
                              " not below truncation " + std::to_string(trunc));
    long lo = std::min(exp, std::min(0L, trunc - 1));
    std::vector<Rat> v(trunc - lo);
    v[exp - lo] = c;
    return QSeries(lo, trunc, std::move(v));
}

QSeries QSeries::from_coeffs(const std::vector<long>& c, long trunc) {
    if (trunc < static_cast<long>(c.size()))
        throw Error("from_coeffs: more coefficients than the truncation admits");
    std::vector<Rat> v(trunc);
    for (size_t i = 0; i < c.size(); ++i) v[i] = c[i];
    return QSeries(0, trunc, std::move(v));
}

const Rat& QSeries::coeff(long n) const {
    if (n >= trunc_)
        throw OutOfRangeError("coeff: exponent " + std::to_string(n) +
                              " is at or beyond truncation " + std::to_string(trunc_));
    if (n < min_exp_) return kZero;
    return coeffs_[n - min_exp_];
}

bool QSeries::known_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

QSeries QSeries::negated() const {
    std::vector<Rat> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return QSeries(min_exp_, trunc_, std::move(v));
}

QSeries QSeries::scaled(const Rat& c) const {
    std::vector<Rat> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = c * coeffs_[i];
    return QSeries(min_exp_, trunc_, std::move(v));
}

QSeries QSeries::shifted(long m) const {
    return QSeries(min_exp_ + m, trunc_ + m, coeffs_);
}

QSeries QSeries::dilated(long k) const {
    if (k < 1) throw UnsupportedCaseError("dilate: k must be >= 1");
    long lo = k * min_exp_;
    long hi = k * (trunc_ - 1) + 1;
    std::vector<Rat> v(hi - lo);
    for (size_t i = 0; i < coeffs_.size(); ++i) v[k * static_cast<long>(i)] = coeffs_[i];
    return QSeries(lo, hi, std::move(v));
}

QSeries QSeries::extracted(long l, long d) const {
    if (l < 1 || d < 0 || d >= l)
        throw UnsupportedCaseError("extract_progression: need l >= 1 and 0 <= d < l");
    if (min_exp_ < 0)
        throw UnsupportedCaseError("extract_progression: input must have min_exp >= 0");
    // Largest n with l*n + d < trunc, plus one.  Floor division: the
    // numerator is negative exactly when not even q^d is known.
    const long num = trunc_ - 1 - d;
    long hi = (num >= 0 ? num / l : -((-num + l - 1) / l)) + 1;
    if (hi < 1)
        throw TruncationError("extract_progression: no known coefficient on the progression");
    std::vector<Rat> v(hi);
    for (long n = 0; n < hi; ++n) {
        long e = l * n + d;
        if (e >= min_exp_) v[n] = coeffs_[e - min_exp_];
    }
    return QSeries(0, hi, std::move(v));
}

QSeries QSeries::inverted() const {
    if (coeffs_[0] == 0)
        throw LeadingZeroError("invert: zero coefficient at min_exp " +
                               std::to_string(min_exp_));
    // Write the series as q^m * u with u(0) != 0; invert u by the standard
    // recurrence, which preserves the length of the known window.
    long len = trunc_ - min_exp_;
    std::vector<Rat> b(len);
    b[0] = 1 / coeffs_[0];
    for (long n = 1; n < len; ++n) {
        Rat acc = 0;
        for (long k = 1; k <= n; ++k) acc += coeffs_[k] * b[n - k];
        b[n] = -acc / coeffs_[0];
    }
    return QSeries(-min_exp_, -min_exp_ + len, std::move(b));
}

QSeries QSeries::trimmed() const {
    long i = 0;
    long len = static_cast<long>(coeffs_.size());
    while (i < len && coeffs_[i] == 0) ++i;
    if (i == len) return QSeries(trunc_ - 1, trunc_, {Rat(0)});
    return QSeries(min_exp_ + i, trunc_,
                   std::vector<Rat>(coeffs_.begin() + i, coeffs_.end()));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long lo = std::min(a.min_exp_, b.min_exp_);
    long hi = std::min(a.trunc_, b.trunc_);
    std::vector<Rat> v(hi - lo);
    for (long n = lo; n < hi; ++n) {
        Rat c = 0;
        if (n >= a.min_exp_ && n < a.trunc_) c += a.coeffs_[n - a.min_exp_];
        if (n >= b.min_exp_ && n < b.trunc_) c += b.coeffs_[n - b.min_exp_];
        v[n - lo] = std::move(c);
    }
    return QSeries(lo, hi, std::move(v));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.negated(); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    long lo = a.min_exp_ + b.min_exp_;
    long hi = std::min(a.trunc_ + b.min_exp_, b.trunc_ + a.min_exp_);
    std::vector<Rat> v(hi - lo);
    long la = a.trunc_ - a.min_exp_, lb = b.trunc_ - b.min_exp_;
    for (long i = 0; i < la; ++i) {
        if (a.coeffs_[i] == 0) continue;
        long jmax = std::min(lb, hi - lo - i);
        for (long j = 0; j < jmax; ++j) {
            if (b.coeffs_[j] == 0) continue;
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QSeries(lo, hi, std::move(v));
}

bool QSeries::operator==(const QSeries& o) const {
    return min_exp_ == o.min_exp_ && trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

std::string QSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (long n = min_exp_; n < trunc_; ++n) {
        const Rat& c = coeffs_[n - min_exp_];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (n == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "q";
            if (n != 1) out << "^" << n;
        }
    }
    if (first) out << "0";
    out << " + O(q^" << trunc_ << ")";
    return out.str();
}

QSeries invert(const QSeries& a) { return a.inverted(); }
QSeries dilate(const QSeries& a, long k) { return a.dilated(k); }
QSeries shift(const QSeries& a, long m) { return a.shifted(m); }
QSeries extract_progression(const QSeries& a, long l, long d) { return a.extracted(l, d); }

CompareResult eq_upto(const QSeries& a, const QSeries& b, long n_max) {
    if (n_max > a.trunc() || n_max > b.trunc())
        throw OutOfRangeError("eq_upto: bound " + std::to_string(n_max) +
                              " exceeds a truncation (" + std::to_string(a.trunc()) +
                              ", " + std::to_string(b.trunc()) + ")");
    for (long n = std::min(a.min_exp(), b.min_exp()); n < n_max; ++n) {
        const Rat& x = a.coeff(n);
        const Rat& y = b.coeff(n);
        if (x != y) return {false, Mismatch{n, x, y}};
    }
    return {true, std::nullopt};
}

QSeries ensure_trunc(long n, const std::function<QSeries(long)>& build) {
    // Requests past this bound mean the builder cannot converge on the
    // target; give up before the escalation arithmetic can overflow.
    constexpr long kMaxRequest = 1L << 40;
    long req = std::max(n, 1L);
    for (int attempt = 0; attempt < 64 && req <= kMaxRequest; ++attempt) {
        std::optional<QSeries> s;
        try {
            s = build(req);
        } catch (const TruncationError&) {
            req = req * 2 + 8;
            continue;
        }
        if (s->trunc() >= n) return *s;
        long got = std::max(s->trunc(), 1L);
        // Additive bump covers constant deficits (Laurent shifts); the ratio
        // step covers multiplicative shrinkage (extraction by l).
        const double scaled = std::ceil(static_cast<double>(req) *
                                        static_cast<double>(n) /
                                        static_cast<double>(got));
        const long ratio = scaled > static_cast<double>(kMaxRequest)
                               ? kMaxRequest + 1
                               : static_cast<long>(scaled);
        req = std::max(req + (n - got), ratio + 8);
    }
    throw TruncationError("ensure_trunc: target " + std::to_string(n) +
                          " not reached; the builder cannot deliver it");
}

} // namespace qrank
