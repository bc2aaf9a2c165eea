#pragma once

/*
 * Infinite and finite q-Pochhammer products, the two-variable product
 *
 *   P(z, Q) = prod_{r>=1} (1 - z Q^{r-1}) (1 - z^{-1} Q^r),
 *
 * evaluated at z = (+-1) q^j, Q = q^k on the integer q-grid, and theta series
 * via the triple product.  Everything returns truncated QSeries.
 */

#include <vector>

#include "qrank/series.hpp"

namespace qrank {

/* prod_{r>=0} (1 - sign * q^{a + r m}) truncated below n.  sign is +1 or -1;
 * (sign, a) = (+1, 0) would contain the factor (1 - 1) and is rejected with
 * VanishingFactorError. */
QSeries pochhammer(int sign, long a, long m, long n);

/* The finite product with exactly cnt factors, prod_{r=0}^{cnt-1}
 * (1 - sign * q^{a + r m}).  A (1 - 1) factor here legitimately produces the
 * zero series. */
QSeries pochhammer_fin(int sign, long a, long m, long cnt, long n);

/* P(sign * q^j, q^k) for 0 <= j < k, as the pair of one-sided products
 * with offsets j and k - j.  (sign, j) = (+1, 0) is P(1, .) = 0 and is
 * rejected with VanishingFactorError. */
QSeries p_special(int sign, long j, long k, long n);

/* Exponent normalization for the two-variable product: rewrites
 * P(sign * q^j, q^k) as coeff * q^shift * P(sign * q^j_norm, q^k) with
 * 0 <= j_norm < k, using the quasi-periodicity
 * P(z Q, Q) = -z^{-1} P(z, Q).  This is the single audited place where
 * exponents are reduced. */
struct PNormalized {
    Rat coeff;   // always +1 or -1
    long shift;  // power of q pulled out
    int sign;    // unchanged by normalization
    long j_norm; // in [0, k)
};
PNormalized p_normalize(int sign, long j, long k);

/* Full evaluation of P(sign * q^j, q^k) for arbitrary integer j: normalize,
 * then evaluate.  When the normalized argument is exactly +1 (sign = +1,
 * j_norm = 0) the product vanishes identically and the zero series is
 * returned -- callers dividing by it will hit LeadingZeroError. */
QSeries p_series(int sign, long j, long k, long n);

/* sum_{n in Z} z^n Q^{n^2} with z = sign * q^j, Q = q^k, i.e. the series
 * sum_n sign^n q^{k n^2 + j n}, truncated below n. */
QSeries triple_product_theta(int sign, long j, long k, long n);

/* One factor group of a product expression: (sign * q^offset ; q^modulus)
 * to the given integer power (negative = denominator). */
struct ProductFactor {
    int sign = +1;
    long offset = 0;
    long modulus = 1;
    long power = 1;
};

/* lead * q^lead_exp * prod factors. */
struct ProductSpec {
    Rat lead = 1;
    long lead_exp = 0;
    std::vector<ProductFactor> factors;
};

/* Evaluate a product spec truncated below n.  The result has
 * min_exp = lead_exp and a window of n - lead_exp known coefficients. */
QSeries eval_product(const ProductSpec& spec, long n);

} // namespace qrank
