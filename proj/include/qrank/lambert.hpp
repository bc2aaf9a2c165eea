#pragma once

/*
 * Bilateral Lambert-type sums
 *
 *   sum_{n in Z} (+-1)^n q^{A n^2 + B n + C} * N(n) / prod_i (1 - s_i q^{D_i n + E_i}),
 *
 * their named specializations on the integer q-grid (y = q^l), the
 * three-term combination g(a), the rank generating functions, and the
 * mock-theta-adjacent series.  Every function returns a series truncated no
 * lower than the requested bound.
 */

#include <vector>

#include "qrank/products.hpp"
#include "qrank/series.hpp"

namespace qrank {

/* One numerator summand: coeff * q^{F n + G}. */
struct NumeratorTerm {
    Rat coeff = 1;
    long f = 0;
    long g = 0;
};

/* One denominator factor (1 - sign * q^{D n + E}). */
struct DenomFactor {
    int sign = +1;
    long d = 0;
    long e = 0;
};

struct BilateralSum {
    long a = 1; // quadratic coefficient, must be positive
    long b = 0;
    long c = 0;
    std::vector<NumeratorTerm> numerator = {NumeratorTerm{}};
    std::vector<DenomFactor> denom;
    bool alternating = true;
    bool primed = false; // omit the n = 0 term
};

/* Expand truncated below n.  The summation range is chosen conservatively
 * from the quadratic growth of the exponent; range_mult widens it by that
 * factor so tests can confirm the range was already sufficient.  Denominator
 * factors with negative exponent are rewritten through
 * 1/(1 - s q^M) = -s q^{-M} / (1 - s q^{-M}); a factor that is exactly
 * (1 - q^0) raises PoleTermError, while (1 + q^0) contributes 1/2. */
QSeries expand_bilateral(const BilateralSum& sum, long n, int range_mult = 1);

/* Sigma(a, b) = sum_{n in Z} (-1)^n y^{2bn + l n(n+2)} / (1 - y^{2ln + 2a})
 * with y = q^l, as a q-series.  a must not be divisible by l. */
QSeries sigma_ab(long a, long b, long l, long n);

/* The primed a = 0 variant (n = 0 omitted). */
QSeries sigma_0b(long b, long l, long n);

/* S2bar(b) = sum'_{n in Z} (-1)^n q^{n^2 + 2bn} / (1 - q^{2ln}), 1 <= b <= l. */
QSeries s2bar(long b, long l, long n);

/* g(a) = -[P(y^{4a}, y^{2l}) P(-1, y^l) / (P(-y^{2a}, y^l) P(y^{-2a}, y^{2l}))]
 *        * Sigma(a, 0)  -  y^{4a} Sigma(2a, a)  -  Sigma(0, -a),
 * on the q-grid with y = q^l.  Requires a >= 1 and a not divisible by l. */
QSeries g_of_a(long a, long l, long n);

/* Overpartition generating function (-q)_inf / (q)_inf. */
QSeries pbar_gf(long n);

/* Generating function of the M2-rank count at fixed rank m:
 * (2(-q)_inf/(q)_inf) sum_{j>=1} (-1)^{j+1} q^{j^2+2|m|j} (1-q^{2j})/(1+q^{2j}). */
QSeries gf_m2_fixed_m(long m, long n);

/* Generating function of the M2-rank residue count (rank = s mod m):
 * (2(-q)_inf/(q)_inf) sum'_{n in Z} (-1)^n q^{n^2+2n} (q^{2sn} + q^{2(m-s)n})
 *                                   / ((1+q^{2n})(1-q^{2mn})).   0 <= s < m. */
QSeries gf_m2_residue(long s, long m, long n);

/* Dyson-rank analogues for overpartitions, the same shapes with every linear
 * exponent halved:
 * (2(-q)_inf/(q)_inf) sum_{j>=1} (-1)^{j+1} q^{j^2+|m|j} (1-q^j)/(1+q^j), and
 * (2(-q)_inf/(q)_inf) sum'_{n in Z} (-1)^n q^{n^2+n} (q^{sn} + q^{(m-s)n})
 *                                   / ((1+q^n)(1-q^{mn})).
 * Both are validated against direct enumeration in the test suites. */
QSeries gf_dyson_fixed_m(long m, long n);
QSeries gf_dyson_residue(long s, long m, long n);

/* g2(x, Q) = ((-Q)_inf/(Q)_inf) sum_{n in Z} (-1)^n Q^{n(n+1)} / (1 - x Q^n)
 * at x = q^a, Q = q^k. */
QSeries g2_spec(long a, long k, long n);

/* g3(x, Q) = (1/(Q)_inf) sum_{n in Z} (-1)^n Q^{(3/2) n(n+1)} / (1 - x Q^n)
 * at x = q^a, Q = q^k. */
QSeries g3_spec(long a, long k, long n);

/* omega(q) = sum_{j>=0} q^{2j(j+1)} / ((q; q^2)_{j+1})^2. */
QSeries omega(long n);

/* The bracket of the master decomposition:
 *   (-1)^m q^{m(2l-m)}
 *   - P(y^{4m}, y^{2l}) P(-1, y^l) / (P(-y^{2m}, y^l) P(y^{-2m}, y^{2l}))
 *   - sum''_a (-1)^{m+a} q^{(a+m)(a-m+2l)} y^{-4a}
 *       P(y^{4a}, y^{2l}) P(-1, y^l) / (P(-y^{2a}, y^l) P(y^{-2a}, y^{2l}))
 * where a runs over 1..(l-1)/2 excluding a = +-m (mod l).
 * Supported (l, m): (3,1), (5,1), (5,2). */
QSeries s2bar_bracket(long l, long m, long n);

/* The same bracket in the closed single-quotient form. */
QSeries s2bar_bracket_closed(long l, long m, long n);

/* The full decomposition of S2bar(l - m):
 *   -g(m)
 *   + sum''_a (-1)^{m+a} q^{(a+m)(a-m+2l)} y^{-4a}
 *       P(-y^{2m}, y^l) P(y^{4a}, y^{2l}) P(y^{2a}, y^{2l}) P0^2
 *       / (P(y^{2a+2m}, y^{2l}) P(y^{2m-2a}, y^{2l}) P(-y^{2a}, y^l) P(y^{2m}, y^{2l}))
 *   + Sigma(m, 0) * bracket,
 * with P0 = (y^{2l}; y^{2l})_inf, evaluating the bracket either term by term
 * or in its closed form. */
QSeries s2bar_decomposed(long l, long m, long n, bool closed_bracket = false);

} // namespace qrank
