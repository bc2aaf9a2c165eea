#include "qrank/lambert.hpp"

#include <cmath>
#include <cstdlib>

#include "qrank/errors.hpp"

namespace qrank {

namespace {

/*
 * A single summand coeff * q^e / prod_i (1 - s_i q^{m_i}) after all exponent
 * rewrites, so every m_i >= 1.  Expansion is a chain of in-place geometric
 * accumulations w[j] += s_i * w[j - m_i].
 */
struct PreparedTerm {
    Rat coeff;
    long e = 0;
    std::vector<std::pair<int, long>> geoms; // (sign, positive exponent)
};

/* Normalize one raw summand.  A factor (1 - s q^M) with M < 0 is rewritten
 * via 1/(1 - s q^M) = -s q^{-M} / (1 - s q^{-M}).  M = 0 means a removable
 * constant: (1 + 1) contributes 1/2, (1 - 1) is a genuine pole. */
PreparedTerm prepare_term(Rat coeff, long e, const std::vector<std::pair<int, long>>& factors) {
    PreparedTerm t;
    t.e = e;
    for (const auto& [sign, m] : factors) {
        if (m == 0) {
            if (sign == +1)
                throw PoleTermError("bilateral summand hits a vanishing factor 1 - q^0");
            coeff /= 2;
        } else if (m < 0) {
            coeff *= -sign;
            t.e += -m;
            t.geoms.emplace_back(sign, -m);
        } else {
            t.geoms.emplace_back(sign, m);
        }
    }
    t.coeff = coeff;
    return t;
}

/* Sum the prepared terms into one series truncated at n. */
QSeries assemble_terms(const std::vector<PreparedTerm>& terms, long n) {
    long lo = 0;
    for (const auto& t : terms)
        if (t.e < lo) lo = t.e;
    std::vector<Rat> acc(static_cast<std::size_t>(n - lo), Rat(0));
    std::vector<Rat> w;
    for (const auto& t : terms) {
        if (t.e >= n || t.coeff == 0) continue;
        const long len = n - t.e;
        w.assign(static_cast<std::size_t>(len), Rat(0));
        w[0] = t.coeff;
        for (const auto& [sign, m] : t.geoms) {
            for (long j = m; j < len; ++j) {
                const Rat& prev = w[static_cast<std::size_t>(j - m)];
                if (prev == 0) continue;
                if (sign > 0)
                    w[static_cast<std::size_t>(j)] += prev;
                else
                    w[static_cast<std::size_t>(j)] -= prev;
            }
        }
        const long base = t.e - lo;
        for (long j = 0; j < len; ++j)
            acc[static_cast<std::size_t>(base + j)] += w[static_cast<std::size_t>(j)];
    }
    return QSeries(lo, n, std::move(acc));
}

long isqrt_ceil(double x) {
    if (x <= 0) return 0;
    return static_cast<long>(std::ceil(std::sqrt(x)));
}

} // namespace

QSeries expand_bilateral(const BilateralSum& sum, long n, int range_mult) {
    if (sum.a <= 0) throw UnsupportedCaseError("bilateral sum needs a positive quadratic coefficient");
    if (n < 1) throw TruncationError("expand_bilateral needs a positive truncation");
    if (range_mult < 1) range_mult = 1;

    // Conservative |n| bound: beyond it every summand exponent is >= n even
    // after the worst-case linear drift from numerator and rewrites.
    long w = std::labs(sum.b);
    long v = std::labs(sum.c);
    long fmax = 0, gmax = 0;
    for (const auto& t : sum.numerator) {
        fmax = std::max(fmax, std::labs(t.f));
        gmax = std::max(gmax, std::labs(t.g));
    }
    long dsum = 0, esum = 0;
    for (const auto& f : sum.denom) {
        dsum += std::labs(f.d);
        esum += std::labs(f.e);
    }
    w += fmax + dsum;
    v += gmax + esum;
    const double disc = static_cast<double>(w) * w + 4.0 * sum.a * (v + n);
    long range = (w + isqrt_ceil(disc)) / (2 * sum.a) + 2;
    range *= range_mult;

    std::vector<PreparedTerm> terms;
    for (long k = -range; k <= range; ++k) {
        if (sum.primed && k == 0) continue;
        const long quad = sum.a * k * k + sum.b * k + sum.c;
        // Cheap skip: with |k| past the drift bound the exponent cannot
        // reach below n for any numerator/denominator combination.
        if (quad - w * std::labs(k) - v >= n) continue;
        const int alt = (sum.alternating && (k % 2 != 0)) ? -1 : +1;
        std::vector<std::pair<int, long>> factors;
        factors.reserve(sum.denom.size());
        for (const auto& f : sum.denom) factors.emplace_back(f.sign, f.d * k + f.e);
        for (const auto& t : sum.numerator) {
            Rat c = t.coeff * alt;
            terms.push_back(prepare_term(c, quad + t.f * k + t.g, factors));
        }
    }
    return assemble_terms(terms, n);
}

QSeries sigma_ab(long a, long b, long l, long n) {
    if (l < 1) throw UnsupportedCaseError("sigma_ab needs l >= 1");
    if (a % l == 0)
        throw UnsupportedCaseError("sigma_ab pole: a divisible by l");
    BilateralSum s;
    s.a = l * l;
    s.b = 2 * l * (b + l);
    s.c = 0;
    s.denom = {DenomFactor{+1, 2 * l * l, 2 * l * a}};
    s.alternating = true;
    s.primed = false;
    return expand_bilateral(s, n);
}

QSeries sigma_0b(long b, long l, long n) {
    if (l < 1) throw UnsupportedCaseError("sigma_0b needs l >= 1");
    BilateralSum s;
    s.a = l * l;
    s.b = 2 * l * (b + l);
    s.c = 0;
    s.denom = {DenomFactor{+1, 2 * l * l, 0}};
    s.alternating = true;
    s.primed = true;
    return expand_bilateral(s, n);
}

QSeries s2bar(long b, long l, long n) {
    if (l < 1 || b < 1 || b > l)
        throw UnsupportedCaseError("s2bar needs 1 <= b <= l");
    BilateralSum s;
    s.a = 1;
    s.b = 2 * b;
    s.c = 0;
    s.denom = {DenomFactor{+1, 2 * l, 0}};
    s.alternating = true;
    s.primed = true;
    return expand_bilateral(s, n);
}

QSeries g_of_a(long a, long l, long n) {
    if (a < 1 || l < 1 || a % l == 0)
        throw UnsupportedCaseError("g_of_a needs a >= 1 with a not divisible by l");
    return ensure_trunc(n, [=](long req) {
        const long l2 = l * l;
        QSeries ratio = p_series(+1, 4 * a * l, 2 * l2, req) * p_series(-1, 0, l2, req) *
                        invert(p_series(-1, 2 * a * l, l2, req).trimmed()) *
                        invert(p_series(+1, -2 * a * l, 2 * l2, req).trimmed());
        QSeries out = (ratio * sigma_ab(a, 0, l, req)).negated();
        out = out - shift(sigma_ab(2 * a, a, l, req), 4 * a * l);
        out = out - sigma_0b(-a, l, req);
        return out;
    });
}

QSeries pbar_gf(long n) {
    return pochhammer(-1, 1, 1, n) * invert(pochhammer(+1, 1, 1, n));
}

namespace {

/* Shared shell of the fixed-rank generating functions:
 * prefactor * sum_{j>=1} (-1)^{j+1} q^{quad(j) + lin*j} (1 - q^{step*j}) / (1 + q^{step*j})
 * with quad(j) = j^2, lin = step * |m|.  step = 2 gives the M2 kernel,
 * step = 1 the Dyson kernel. */
QSeries gf_fixed_rank(long m, long step, long n) {
    return ensure_trunc(n, [=](long req) {
        const long am = std::labs(m);
        std::vector<PreparedTerm> terms;
        for (long j = 1; j * j + step * am * j < req; ++j) {
            const Rat sgn = (j % 2 == 0) ? Rat(-1) : Rat(1);
            const long e = j * j + step * am * j;
            const std::vector<std::pair<int, long>> fac = {{-1, step * j}};
            terms.push_back(prepare_term(sgn, e, fac));
            terms.push_back(prepare_term(-sgn, e + step * j, fac));
        }
        return pbar_gf(req).scaled(2) * assemble_terms(terms, req);
    });
}

/* Shared shell of the residue-class generating functions:
 * prefactor * sum'_{n in Z} (-1)^n q^{n^2 + step*n} (q^{step*s*n} + q^{step*(m-s)*n})
 *                           / ((1 + q^{step*n})(1 - q^{step*m*n})). */
QSeries gf_residue_rank(long s, long m, long step, long n) {
    if (m < 1 || s < 0 || s >= m)
        throw UnsupportedCaseError("residue generating function needs 0 <= s < m");
    return ensure_trunc(n, [=](long req) {
        BilateralSum sum;
        sum.a = 1;
        sum.b = step;
        sum.c = 0;
        sum.numerator = {NumeratorTerm{1, step * s, 0}, NumeratorTerm{1, step * (m - s), 0}};
        sum.denom = {DenomFactor{-1, step, 0}, DenomFactor{+1, step * m, 0}};
        sum.alternating = true;
        sum.primed = true;
        return pbar_gf(req).scaled(2) * expand_bilateral(sum, req);
    });
}

} // namespace

QSeries gf_m2_fixed_m(long m, long n) { return gf_fixed_rank(m, 2, n); }
QSeries gf_dyson_fixed_m(long m, long n) { return gf_fixed_rank(m, 1, n); }
QSeries gf_m2_residue(long s, long m, long n) { return gf_residue_rank(s, m, 2, n); }
QSeries gf_dyson_residue(long s, long m, long n) { return gf_residue_rank(s, m, 1, n); }

QSeries g2_spec(long a, long k, long n) {
    if (a < 1 || k < 1) throw UnsupportedCaseError("g2_spec needs a >= 1, k >= 1");
    return ensure_trunc(n, [=](long req) {
        BilateralSum sum;
        sum.a = k;
        sum.b = k;
        sum.c = 0;
        sum.denom = {DenomFactor{+1, k, a}};
        sum.alternating = true;
        sum.primed = false;
        QSeries pre = pochhammer(-1, k, k, req) * invert(pochhammer(+1, k, k, req));
        return pre * expand_bilateral(sum, req);
    });
}

QSeries g3_spec(long a, long k, long n) {
    if (a < 1 || k < 1) throw UnsupportedCaseError("g3_spec needs a >= 1, k >= 1");
    return ensure_trunc(n, [=](long req) {
        // Exponent (3k/2) j (j+1) is an integer for every j even when 3k/2
        // is not, so the sum is assembled directly rather than through
        // BilateralSum (whose quadratic coefficient must be an integer).
        std::vector<PreparedTerm> terms;
        const long drift = std::labs(k) + std::labs(a);
        long range = 2;
        while (3 * k * range * (range - 1) / 2 - drift * range - std::labs(a) < req) ++range;
        for (long j = -range; j <= range; ++j) {
            const long e = 3 * k * (j * (j + 1) / 2);
            if (e - drift * std::labs(j) - std::labs(a) >= req) continue;
            const Rat sgn = (j % 2 == 0) ? Rat(1) : Rat(-1);
            terms.push_back(prepare_term(sgn, e, {{+1, k * j + a}}));
        }
        return invert(pochhammer(+1, k, k, req)) * assemble_terms(terms, req);
    });
}

QSeries omega(long n) {
    if (n < 1) throw TruncationError("omega needs a positive truncation");
    QSeries acc = QSeries::zero(n);
    for (long j = 0; 2 * j * (j + 1) < n; ++j) {
        QSeries block = invert(pochhammer_fin(+1, 1, 2, j + 1, n));
        acc = acc + (block * block).shifted(2 * j * (j + 1));
    }
    return acc;
}

namespace {

void check_bracket_case(long l, long m) {
    const bool ok = (l == 3 && m == 1) || (l == 5 && m == 1) || (l == 5 && m == 2);
    if (!ok) throw UnsupportedCaseError("bracket decomposition supports (l, m) in {(3,1), (5,1), (5,2)}");
}

/* P(y^{4a}, y^{2l}) P(-1, y^l) / (P(-y^{2a}, y^l) P(y^{-2a}, y^{2l})) on the
 * q-grid, the quotient multiplying Sigma(a, 0) throughout the decomposition. */
QSeries bracket_quotient(long a, long l, long req) {
    const long l2 = l * l;
    return p_series(+1, 4 * a * l, 2 * l2, req) * p_series(-1, 0, l2, req) *
           invert(p_series(-1, 2 * a * l, l2, req).trimmed()) *
           invert(p_series(+1, -2 * a * l, 2 * l2, req).trimmed());
}

/* The a-values of the primed correction sum: 1..(l-1)/2 minus a = +-m (mod l). */
std::vector<long> correction_indices(long l, long m) {
    std::vector<long> out;
    for (long a = 1; a <= (l - 1) / 2; ++a) {
        const long r = ((a - m) % l + l) % l;
        const long s = ((a + m) % l + l) % l;
        if (r == 0 || s == 0) continue;
        out.push_back(a);
    }
    return out;
}

} // namespace

QSeries s2bar_bracket(long l, long m, long n) {
    check_bracket_case(l, m);
    return ensure_trunc(n, [=](long req) {
        const int msign = (m % 2 == 0) ? +1 : -1;
        QSeries out = QSeries::monomial(Rat(msign), m * (2 * l - m), std::max(req, m * (2 * l - m) + 1));
        out = out - bracket_quotient(m, l, req);
        for (long a : correction_indices(l, m)) {
            const int asign = ((m + a) % 2 == 0) ? +1 : -1;
            const long e = (a + m) * (a - m + 2 * l) - 4 * a * l;
            out = out - bracket_quotient(a, l, req).shifted(e).scaled(Rat(asign));
        }
        return out;
    });
}

QSeries s2bar_bracket_closed(long l, long m, long n) {
    check_bracket_case(l, m);
    return ensure_trunc(n, [=](long req) {
        const long ll = l * l; // 9 or 25
        QSeries ratio = pochhammer(+1, 1, 1, req) * pochhammer(-1, ll, ll, req) *
                        invert(pochhammer(-1, 1, 1, req)) * invert(pochhammer(+1, ll, ll, req));
        long e = 0;
        Rat c = 0;
        if (l == 3 && m == 1) { e = 5; c = -1; }
        if (l == 5 && m == 2) { e = 16; c = 1; }
        if (l == 5 && m == 1) { e = 9; c = -1; }
        return ratio.shifted(e).scaled(c);
    });
}

QSeries s2bar_decomposed(long l, long m, long n, bool closed_bracket) {
    check_bracket_case(l, m);
    return ensure_trunc(n, [=](long req) {
        const long l2 = l * l;
        QSeries out = g_of_a(m, l, req).negated();
        QSeries p0 = pochhammer(+1, 2 * l2, 2 * l2, req);
        for (long a : correction_indices(l, m)) {
            const int asign = ((m + a) % 2 == 0) ? +1 : -1;
            const long e = (a + m) * (a - m + 2 * l) - 4 * a * l;
            QSeries quot = p_series(-1, 2 * m * l, l2, req) * p_series(+1, 4 * a * l, 2 * l2, req) *
                           p_series(+1, 2 * a * l, 2 * l2, req) * p0 * p0 *
                           invert(p_series(+1, (2 * a + 2 * m) * l, 2 * l2, req).trimmed()) *
                           invert(p_series(+1, (2 * m - 2 * a) * l, 2 * l2, req).trimmed()) *
                           invert(p_series(-1, 2 * a * l, l2, req).trimmed()) *
                           invert(p_series(+1, 2 * m * l, 2 * l2, req).trimmed());
            out = out + quot.shifted(e).scaled(Rat(asign));
        }
        QSeries bracket = closed_bracket ? s2bar_bracket_closed(l, m, req) : s2bar_bracket(l, m, req);
        out = out + sigma_ab(m, 0, l, req) * bracket;
        return out;
    });
}

} // namespace qrank
