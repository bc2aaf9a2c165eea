#include "qrank/products.hpp"

#include <cmath>
#include <map>

namespace qrank {

namespace {

/* In-place multiply of a dense window [0, n) by (1 - s q^t), t >= 1. */
void mul_factor(std::vector<Rat>& c, int s, long t) {
    long n = static_cast<long>(c.size());
    for (long j = n - 1; j >= t; --j) {
        if (c[j - t] == 0) continue;
        if (s > 0)
            c[j] -= c[j - t];
        else
            c[j] += c[j - t];
    }
}

} // namespace

QSeries pochhammer(int sign, long a, long m, long n) {
    if (sign != 1 && sign != -1) throw UnsupportedCaseError("pochhammer: sign must be +-1");
    if (a < 0 || m < 1) throw UnsupportedCaseError("pochhammer: need a >= 0 and m >= 1");
    if (n < 1) throw TruncationError("pochhammer: truncation must be >= 1");
    if (sign == 1 && a == 0)
        throw VanishingFactorError("pochhammer: (1; q^" + std::to_string(m) +
                                   ") contains the factor 1 - q^0");
    std::vector<Rat> c(n);
    c[0] = 1;
    long t = a;
    if (t == 0) { // sign == -1: the factor (1 + q^0) = 2
        c[0] = 2;
        t = m;
    }
    for (; t < n; t += m) mul_factor(c, sign, t);
    return QSeries(0, n, std::move(c));
}

QSeries pochhammer_fin(int sign, long a, long m, long cnt, long n) {
    if (sign != 1 && sign != -1) throw UnsupportedCaseError("pochhammer_fin: sign must be +-1");
    if (a < 0 || m < 1 || cnt < 0)
        throw UnsupportedCaseError("pochhammer_fin: need a >= 0, m >= 1, cnt >= 0");
    if (n < 1) throw TruncationError("pochhammer_fin: truncation must be >= 1");
    std::vector<Rat> c(n);
    c[0] = 1;
    for (long r = 0; r < cnt; ++r) {
        long t = a + r * m;
        if (t >= n) break; // factors beyond the window cannot change it
        if (t == 0) {
            // (1 - sign): 0 for sign = +1 (the whole product vanishes), 2 for -1.
            Rat f = 1 - sign;
            for (Rat& x : c) x *= f;
        } else {
            mul_factor(c, sign, t);
        }
    }
    return QSeries(0, n, std::move(c));
}

QSeries p_special(int sign, long j, long k, long n) {
    if (j < 0 || j >= k)
        throw UnsupportedCaseError("p_special: need 0 <= j < k (use p_normalize first)");
    if (sign == 1 && j == 0)
        throw VanishingFactorError("p_special: P(1, q^k) vanishes identically");
    return pochhammer(sign, j, k, n) * pochhammer(sign, k - j, k, n);
}

PNormalized p_normalize(int sign, long j, long k) {
    if (sign != 1 && sign != -1) throw UnsupportedCaseError("p_normalize: sign must be +-1");
    if (k < 1) throw UnsupportedCaseError("p_normalize: need k >= 1");
    PNormalized r{Rat(1), 0, sign, j};
    // P(z Q, Q) = -z^{-1} P(z, Q) with z = sign*q^j lowers j by k at the cost
    // of the monomial -sign*q^{-j'}; the inverse direction raises it.
    while (r.j_norm >= k) {
        r.j_norm -= k;
        r.coeff *= -sign;
        r.shift += -r.j_norm;
    }
    while (r.j_norm < 0) {
        r.coeff *= -sign;
        r.shift += r.j_norm;
        r.j_norm += k;
    }
    return r;
}

QSeries p_series(int sign, long j, long k, long n) {
    PNormalized pn = p_normalize(sign, j, k);
    if (pn.sign == 1 && pn.j_norm == 0) {
        // P(q^{mk}, q^k) contains a (1 - 1) factor: identically zero.
        return QSeries::zero(n);
    }
    long inner = n - pn.shift;
    if (inner < 1) throw TruncationError("p_series: truncation too small after normalization");
    return p_special(pn.sign, pn.j_norm, k, inner).shifted(pn.shift).scaled(pn.coeff);
}

QSeries triple_product_theta(int sign, long j, long k, long n) {
    if (sign != 1 && sign != -1)
        throw UnsupportedCaseError("triple_product_theta: sign must be +-1");
    if (k < 1) throw UnsupportedCaseError("triple_product_theta: need k >= 1");
    if (n < 1) throw TruncationError("triple_product_theta: truncation must be >= 1");
    // Include every m with k m^2 + j m < n; |m| <= bound suffices since
    // k m^2 - |j| |m| >= n outside it.
    double ja = std::abs(static_cast<double>(j));
    long bound =
        static_cast<long>(std::ceil((ja + std::sqrt(ja * ja + 4.0 * k * n)) / (2.0 * k))) + 2;
    std::map<long, Rat> acc;
    long lo = 0;
    for (long m = -bound; m <= bound; ++m) {
        long e = k * m * m + j * m;
        if (e >= n) continue;
        Rat c = (sign == -1 && (m & 1L)) ? -1 : 1;
        acc[e] += c;
        lo = std::min(lo, e);
    }
    std::vector<Rat> v(n - lo);
    for (auto& [e, c] : acc) v[e - lo] = std::move(c);
    return QSeries(lo, n, std::move(v));
}

QSeries eval_product(const ProductSpec& spec, long n) {
    long inner = n - spec.lead_exp;
    if (inner < 1) throw TruncationError("eval_product: truncation at or below the leading exponent");
    QSeries acc = QSeries::one(inner);
    for (const ProductFactor& f : spec.factors) {
        if (f.power == 0) continue;
        QSeries base = pochhammer(f.sign, f.offset, f.modulus, inner);
        if (f.power < 0) {
            // Leading coefficient is 1 (or 2 for a (-1; .) factor), never 0.
            base = base.inverted();
        }
        for (long i = 0; i < std::labs(f.power); ++i) acc = acc * base;
    }
    return acc.scaled(spec.lead).shifted(spec.lead_exp);
}

} // namespace qrank
