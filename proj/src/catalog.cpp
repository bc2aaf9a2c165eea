/*
 * The identity catalog.
 *
 * Each entry equates two independently encoded series expressions:
 * rank-difference series extracted from the residue generating functions on
 * one side, product/Lambert formulas on the other, plus the supporting
 * product and bilateral-sum identities the main results rest on.  All
 * formulas for modulus 5 live on the grid y = q^5 and are written here
 * directly in base q.
 */

#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qrank/lambert.hpp"
#include "qrank/products.hpp"
#include "qrank/registry.hpp"

namespace qrank {
namespace {

using SE = SeriesExpr;

/* (q^a; q^m)_inf */
SE E(long a, long m) {
    std::ostringstream os;
    os << "(q^" << a << ";q^" << m << ")";
    return SE([a, m](long n) { return pochhammer(+1, a, m, n); }, os.str());
}

/* (-q^a; q^m)_inf */
SE En(long a, long m) {
    std::ostringstream os;
    os << "(-q^" << a << ";q^" << m << ")";
    return SE([a, m](long n) { return pochhammer(-1, a, m, n); }, os.str());
}

/* (q^{a_1}, q^{a_2}, ...; q^m)_inf; a negative a_i means -q^{|a_i|}. */
SE B(std::initializer_list<long> offsets, long m) {
    std::vector<long> offs(offsets);
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < offs.size(); ++i) {
        if (i) os << ",";
        os << (offs[i] < 0 ? "-q^" : "q^") << std::abs(offs[i]);
    }
    os << ";q^" << m << ")";
    return SE(
        [offs, m](long n) {
            QSeries r = offs[0] < 0 ? pochhammer(-1, -offs[0], m, n)
                                    : pochhammer(+1, offs[0], m, n);
            for (size_t i = 1; i < offs.size(); ++i)
                r = r * (offs[i] < 0 ? pochhammer(-1, -offs[i], m, n)
                                     : pochhammer(+1, offs[i], m, n));
            return r;
        },
        os.str());
}

/* x^p by repeated multiplication, p >= 1. */
SE W(const SE& x, int p) {
    SE r = x;
    for (int i = 1; i < p; ++i) r = r * x;
    return r;
}

/* P((+-1) q^j, q^k) */
SE P(int sign, long j, long k) {
    std::ostringstream os;
    os << "P(" << (sign < 0 ? "-" : "") << "q^" << j << ",q^" << k << ")";
    return SE([sign, j, k](long n) { return p_series(sign, j, k, n); },
              os.str());
}

/* sum_n (+-1)^n q^{k n^2 + j n} */
SE TH(int sign, long j, long k) {
    std::ostringstream os;
    os << "theta(" << (sign < 0 ? "-" : "+") << ",q^" << j << ",q^" << k
       << ")";
    return SE(
        [sign, j, k](long n) { return triple_product_theta(sign, j, k, n); },
        os.str());
}

/* Integer constant and monomial c*q^e. */
SE K(long c) { return se_constant(Rat(c)); }
SE Q(long c, long e) { return se_monomial(Rat(c), e); }

/* The Lambert sums of the closed-form rank-difference formulas:
 * Lam(a, l) = sum_{n in Z} (-1)^n q^{l n^2 + 2 l n} / (1 - q^{2 l n + 2a}). */
SE Lam(long a, long l) {
    BilateralSum s;
    s.a = l;
    s.b = 2 * l;
    s.c = 0;
    s.denom = {DenomFactor{+1, 2 * l, 2 * a}};
    std::ostringstream os;
    os << "LSum(" << a << ";" << l << ")";
    return SE([s](long n) { return expand_bilateral(s, n); }, os.str());
}

SE Sg(long a, long b, long l) {
    std::ostringstream os;
    os << "Sigma(" << a << "," << b << ";" << l << ")";
    return SE([a, b, l](long n) { return sigma_ab(a, b, l, n); }, os.str());
}

SE S2(long b, long l) {
    std::ostringstream os;
    os << "S2bar(" << b << ";" << l << ")";
    return SE([b, l](long n) { return s2bar(b, l, n); }, os.str());
}

SE G(long a, long l) {
    std::ostringstream os;
    os << "g(" << a << ";" << l << ")";
    return SE([a, l](long n) { return g_of_a(a, l, n); }, os.str());
}

SE M2R(long s, long m) {
    std::ostringstream os;
    os << "gfM2res(" << s << "," << m << ")";
    return SE([s, m](long n) { return gf_m2_residue(s, m, n); }, os.str());
}

SE DYR(long s, long m) {
    std::ostringstream os;
    os << "gfDYres(" << s << "," << m << ")";
    return SE([s, m](long n) { return gf_dyson_residue(s, m, n); }, os.str());
}

SE G2(long a, long k) {
    std::ostringstream os;
    os << "g2(q^" << a << ",q^" << k << ")";
    return SE([a, k](long n) { return g2_spec(a, k, n); }, os.str());
}

SE G3(long a, long k) {
    std::ostringstream os;
    os << "g3(q^" << a << ",q^" << k << ")";
    return SE([a, k](long n) { return g3_spec(a, k, n); }, os.str());
}

SE OM() {
    return SE([](long n) { return omega(n); }, "omega");
}

SE BRK(long l, long m) {
    std::ostringstream os;
    os << "bracket(" << l << "," << m << ")";
    return SE([l, m](long n) { return s2bar_bracket(l, m, n); }, os.str());
}

SE BRKC(long l, long m) {
    std::ostringstream os;
    os << "bracketClosed(" << l << "," << m << ")";
    return SE([l, m](long n) { return s2bar_bracket_closed(l, m, n); },
              os.str());
}

SE DEC(long l, long m) {
    std::ostringstream os;
    os << "decomposed(" << l << "," << m << ")";
    return SE([l, m](long n) { return s2bar_decomposed(l, m, n); }, os.str());
}

/* (q)_inf / (2 (-q)_inf) */
SE half_ratio() { return se_scale(Rat(1, 2), E(1, 1) / En(1, 1)); }

/* Rank-difference series on the y = q^l grid: residue-d extraction of the
 * difference between two residue-class generating functions. */
SE m2_diff(long s, long t, long l, long d) {
    return se_extract(M2R(s, l) - M2R(t, l), l, d);
}
SE dy_diff(long s, long t, long l, long d) {
    return se_extract(DYR(s, l) - DYR(t, l), l, d);
}

/* The four-term bilateral-vs-product relation, all terms moved left:
 *   y^{4a} Sigma(a+b, a) + Sigma(b-a, -a) + r1 Sigma(b, 0) - r2 = 0
 * on the grid y = q^l. */
SE four_term_relation(long l, long a, long b) {
    const long ll = l * l, tll = 2 * l * l;
    SE r1 = P(+1, 4 * a * l, tll) * P(-1, 0, ll) /
            (P(-1, 2 * a * l, ll) * P(+1, -2 * a * l, tll));
    SE r2 = P(-1, 2 * b * l, ll) * P(+1, 4 * a * l, tll) *
            P(+1, 2 * a * l, tll) * W(E(tll, tll), 2) /
            (P(+1, (2 * b + 2 * a) * l, tll) * P(+1, (2 * b - 2 * a) * l, tll) *
             P(-1, 2 * a * l, ll) * P(+1, 2 * b * l, tll));
    return Q(1, 4 * a * l) * Sg(a + b, a, l) + Sg(b - a, -a, l) +
           r1 * Sg(b, 0, l) - r2;
}

/* Product side of the duplication relation 2g(a) - g(2a) + 1/2 = ... on the
 * grid y = q^l. */
SE duplication_rhs(long l, long a) {
    const long ll = l * l, tll = 2 * l * l;
    SE t1 = W(P(+1, 6 * a * l, tll), 2) * W(E(tll, tll), 2) /
            (W(P(+1, 2 * a * l, tll), 2) * P(+1, 8 * a * l, tll));
    SE t2 = W(P(+1, 2 * a * l, ll), 2) * P(+1, 4 * a * l, ll) *
            W(E(ll, ll), 2) /
            (W(P(-1, 2 * a * l, ll), 2) * P(-1, 4 * a * l, ll) *
             P(-1, 0, ll));
    return t1 - t2;
}

/* Theta-quotient form of the triple-product consequence at z = q^a, base
 * q^l: theta ratio on the left, theta sum on the right. */
SE theta_quotient_lhs(long l, long a) {
    return TH(-1, 0, l) * P(+1, 4 * a, 2 * l) * P(-1, 0, l) /
           (P(-1, 2 * a, l) * P(+1, 2 * a, 2 * l));
}
SE theta_sum_rhs(long l, long a) {
    return TH(-1, 2 * a, l) + TH(-1, -2 * a, l);
}

std::vector<IdentityCheck> build_catalog() {
    std::vector<IdentityCheck> v;
    auto add = [&v](const char* id, Tier tier, const char* stmt, long ord,
                    SE lhs, SE rhs) {
        v.push_back(IdentityCheck{id, tier, stmt, ord, std::move(lhs),
                                  std::move(rhs)});
    };

    /* ---- closed forms of the modulus-3 rank differences ---- */

    add("eq-1.5", Tier::theorem,
        "R01(0) = -1 + (-q)(q^3;q^3)^2 / ((q)(-q^3;q^3)^2)", 200,
        m2_diff(0, 1, 3, 0),
        K(-1) + En(1, 1) * W(E(3, 3), 2) / (E(1, 1) * W(En(3, 3), 2)));

    add("eq-1.6", Tier::theorem, "R01(1) = 2 (q^3;q^3)(q^6;q^6) / (q)", 200,
        m2_diff(0, 1, 3, 1), K(2) * E(3, 3) * E(6, 6) / E(1, 1));

    add("eq-1.7", Tier::theorem,
        "R01(2) = 4 (q^6;q^6)^4 / ((q^2;q^2)(q^3;q^3)^2)"
        " + 6q (-q^3;q^3)/(q^3;q^3) LSum(1;3)",
        200, m2_diff(0, 1, 3, 2),
        K(4) * W(E(6, 6), 4) / (E(2, 2) * W(E(3, 3), 2)) +
            Q(6, 1) * En(3, 3) / E(3, 3) * Lam(1, 3));

    /* ---- closed forms of the modulus-5 rank differences ---- */

    add("eq-1.8", Tier::theorem,
        "R12(0) = 10q^2 (q^10;q^10)^4 (q,q^2,q^8,q^9;q^10) / ((q)^3 (q;q^2))"
        " + 2q (q^5;q^5) / ((q;q^2)^5 (q^3,q^4,q^6,q^7;q^10))",
        60, m2_diff(1, 2, 5, 0),
        Q(10, 2) * W(E(10, 10), 4) * B({1, 2, 8, 9}, 10) /
                (W(E(1, 1), 3) * E(1, 2)) +
            Q(2, 1) * E(5, 5) / (W(E(1, 2), 5) * B({3, 4, 6, 7}, 10)));

    add("eq-1.9", Tier::theorem,
        "R12(1) = -6q^3 (-q^5;q^5)/(q^5;q^5) LSum(2;5)"
        " + 4q (q^10;q^10)^2 / ((q;q^2)^5 (q^4,q^6;q^10)(q^5;q^5))"
        " + 20q^3 (q^10;q^10)^7 (q,q^9;q^10)^2 (q^2,q^8;q^10)^3"
        " / ((q)^4 (q^5;q^5)^2)",
        60, m2_diff(1, 2, 5, 1),
        Q(-6, 3) * En(5, 5) / E(5, 5) * Lam(2, 5) +
            Q(4, 1) * W(E(10, 10), 2) /
                (W(E(1, 2), 5) * B({4, 6}, 10) * E(5, 5)) +
            Q(20, 3) * W(E(10, 10), 7) * W(B({1, 9}, 10), 2) *
                W(B({2, 8}, 10), 3) / (W(E(1, 1), 4) * W(E(5, 5), 2)));

    add("eq-1.10", Tier::theorem,
        "R12(2) = 10q (q^10;q^10)^3"
        " / ((q)^2 (q^3,q^7;q^10)^3 (q,q^2,q^8,q^9;q^10))",
        60, m2_diff(1, 2, 5, 2),
        Q(10, 1) * W(E(10, 10), 3) /
            (W(E(1, 1), 2) * W(B({3, 7}, 10), 3) * B({1, 2, 8, 9}, 10)));

    add("eq-1.11", Tier::theorem,
        "R12(3) = 10 (q^10;q^10)^3"
        " / ((q)^2 (q^3,q^4,q^6,q^7;q^10)(q,q^9;q^10)^3)"
        " - 8 (q^5;q^5) / ((q;q^2)^5 (q^2,q^3,q^7,q^8;q^10))",
        60, m2_diff(1, 2, 5, 3),
        K(10) * W(E(10, 10), 3) /
                (W(E(1, 1), 2) * B({3, 4, 6, 7}, 10) * W(B({1, 9}, 10), 3)) -
            K(8) * E(5, 5) / (W(E(1, 2), 5) * B({2, 3, 7, 8}, 10)));

    add("eq-1.12", Tier::theorem,
        "R12(4) = -2q (-q^5;q^5)/(q^5;q^5) LSum(1;5)"
        " + 4 (q^2;q^2) / ((q;q^2)^4 (q^2,q^3,q^7,q^8;q^10)^3)",
        60, m2_diff(1, 2, 5, 4),
        Q(-2, 1) * En(5, 5) / E(5, 5) * Lam(1, 5) +
            K(4) * E(2, 2) / (W(E(1, 2), 4) * W(B({2, 3, 7, 8}, 10), 3)));

    add("eq-1.13", Tier::theorem,
        "R02(0) = -1 + (q^5;q^5)^6 / ((q;q^2)^6 (q^3,q^4,q^6,q^7;q^10)"
        "(q^10;q^10)^5) + q^2 (q)(q^10;q^10) / ((q^3,q^4,q^6,q^7;q^10)^3"
        "(q^5;q^5)) + 4q (q^5;q^5)^2 (q,q^9;q^10) / ((q;q^2)^6"
        " (q^4,q^6,q^10;q^10)) - 10q^2 (q^10;q^10)^3 / ((q)^2"
        " (q^2,q^8;q^10)(q^3,q^7;q^10)^4)",
        60, m2_diff(0, 2, 5, 0),
        K(-1) +
            W(E(5, 5), 6) /
                (W(E(1, 2), 6) * B({3, 4, 6, 7}, 10) * W(E(10, 10), 5)) +
            Q(1, 2) * E(1, 1) * E(10, 10) /
                (W(B({3, 4, 6, 7}, 10), 3) * E(5, 5)) +
            Q(4, 1) * W(E(5, 5), 2) * B({1, 9}, 10) /
                (W(E(1, 2), 6) * B({4, 6, 10}, 10)) -
            Q(10, 2) * W(E(10, 10), 3) /
                (W(E(1, 1), 2) * B({2, 8}, 10) * W(B({3, 7}, 10), 4)));

    add("eq-1.14", Tier::theorem,
        "R02(1) = 2q^3 (-q^5;q^5)/(q^5;q^5) LSum(2;5)"
        " + 2 (q^5;q^5)^4 / ((q;q^2)^6 (q^4,q^6;q^10)(q^10;q^10)^3)"
        " + 2q^2 (q)(q^10;q^10)^3 / ((q^3,q^7;q^10)^2 (q^4,q^6;q^10)^3"
        " (q^5;q^5)^3)",
        60, m2_diff(0, 2, 5, 1),
        Q(2, 3) * En(5, 5) / E(5, 5) * Lam(2, 5) +
            K(2) * W(E(5, 5), 4) /
                (W(E(1, 2), 6) * B({4, 6}, 10) * W(E(10, 10), 3)) +
            Q(2, 2) * E(1, 1) * W(E(10, 10), 3) /
                (W(B({3, 7}, 10), 2) * W(B({4, 6}, 10), 3) * W(E(5, 5), 3)));

    add("eq-1.15", Tier::theorem,
        "R02(2) = 4 (q^3,q^7;q^10)(q^5;q^5)^2 / ((q;q^2)^6"
        " (q^4,q^6,q^10;q^10)) - 10q (q^10;q^10)^3 / ((q)^2"
        " (q^3,q^7;q^10)^3 (q,q^2,q^8,q^9;q^10))",
        60, m2_diff(0, 2, 5, 2),
        K(4) * B({3, 7}, 10) * W(E(5, 5), 2) /
                (W(E(1, 2), 6) * B({4, 6, 10}, 10)) -
            Q(10, 1) * W(E(10, 10), 3) /
                (W(E(1, 1), 2) * W(B({3, 7}, 10), 3) * B({1, 2, 8, 9}, 10)));

    add("eq-1.16", Tier::theorem,
        "R02(3) = 4 (q^5;q^5) / ((q;q^2)^5 (q^2,q^3,q^7,q^8;q^10))", 60,
        m2_diff(0, 2, 5, 3),
        K(4) * E(5, 5) / (W(E(1, 2), 5) * B({2, 3, 7, 8}, 10)));

    add("eq-1.17", Tier::theorem,
        "R02(4) = 4q (-q^5;q^5)/(q^5;q^5) LSum(1;5)"
        " - 10 (q^10;q^10)^3 (q^5;q^5)(q^4,q^6;q^10) / ((q,q^9;q^10)(q)^3"
        " (q^3,q^7;q^10)) - 2q^-1 (q^10;q^10)(-q^2,-q^3;q^5)"
        " / ((-q,-q^4;q^5)(q,q^2,q^8,q^9;q^10)) + 2q^-1 (q^5;q^5)^2"
        " (q^2,q^8;q^10)^5 (q^10;q^10)^2 / ((q;q^2)^4 (q,q^9;q^10)^4"
        " (q^2;q^2)^3)",
        60, m2_diff(0, 2, 5, 4),
        Q(4, 1) * En(5, 5) / E(5, 5) * Lam(1, 5) -
            K(10) * W(E(10, 10), 3) * E(5, 5) * B({4, 6}, 10) /
                (B({1, 9}, 10) * W(E(1, 1), 3) * B({3, 7}, 10)) -
            Q(2, -1) * E(10, 10) * B({-2, -3}, 5) /
                (B({-1, -4}, 5) * B({1, 2, 8, 9}, 10)) +
            Q(2, -1) * W(E(5, 5), 2) * W(B({2, 8}, 10), 5) *
                W(E(10, 10), 2) /
                (W(E(1, 2), 4) * W(B({1, 9}, 10), 4) * W(E(2, 2), 3)));

    add("cor-1.3", Tier::theorem,
        "6 omega = [M2 rank diff, d=2 mod 3] - [Dyson rank diff, d=2 mod 3]",
        100, K(6) * OM(), m2_diff(0, 1, 3, 2) - dy_diff(0, 1, 3, 2));

    /* ---- the even S2bar value is an infinite product ---- */

    add("lem-2.1-l3", Tier::lemma,
        "S2bar(3) at modulus 3 = -(q)/(2(-q)) + 1/2", 500, S2(3, 3),
        se_constant(Rat(1, 2)) - half_ratio());

    add("lem-2.1-l5", Tier::lemma,
        "S2bar(5) at modulus 5 = -(q)/(2(-q)) + 1/2", 500, S2(5, 5),
        se_constant(Rat(1, 2)) - half_ratio());

    /* ---- antisymmetry of S2bar under b -> l - b ---- */

    add("prop-2.6-l3b1", Tier::lemma, "S2bar(1) + S2bar(2) = 0 (modulus 3)",
        500, S2(1, 3) + S2(2, 3), K(0));
    add("prop-2.6-l5b1", Tier::lemma, "S2bar(1) + S2bar(4) = 0 (modulus 5)",
        500, S2(1, 5) + S2(4, 5), K(0));
    add("prop-2.6-l5b2", Tier::lemma, "S2bar(2) + S2bar(3) = 0 (modulus 5)",
        500, S2(2, 5) + S2(3, 5), K(0));

    /* ---- four-term bilateral/product relation instances ---- */

    add("eq-3.2-l5a1b2", Tier::chain,
        "y^4 Sigma(3,1) + Sigma(1,-1) + r1 Sigma(2,0) - r2 = 0 (y = q^5)",
        500, four_term_relation(5, 1, 2), K(0));
    add("eq-3.2-l5a2b1", Tier::chain,
        "y^8 Sigma(3,2) + Sigma(-1,-2) + r1 Sigma(1,0) - r2 = 0 (y = q^5)",
        500, four_term_relation(5, 2, 1), K(0));

    /* ---- duplication and reflection laws for g ---- */

    add("eq-3.19-l3a1", Tier::chain,
        "2g(1) - g(2) + 1/2 = theta-quotient difference (modulus 3)", 500,
        K(2) * G(1, 3) - G(2, 3) + se_constant(Rat(1, 2)),
        duplication_rhs(3, 1));
    add("eq-3.19-l5a1", Tier::chain,
        "2g(1) - g(2) + 1/2 = theta-quotient difference (modulus 5)", 500,
        K(2) * G(1, 5) - G(2, 5) + se_constant(Rat(1, 2)),
        duplication_rhs(5, 1));
    add("eq-3.19-l5a2", Tier::chain,
        "2g(2) - g(4) + 1/2 = theta-quotient difference (modulus 5)", 500,
        K(2) * G(2, 5) - G(4, 5) + se_constant(Rat(1, 2)),
        duplication_rhs(5, 2));

    add("eq-3.20-l3a1", Tier::chain, "g(1) + g(2) = 0 (modulus 3)", 500,
        G(1, 3) + G(2, 3), K(0));
    add("eq-3.20-l5a1", Tier::chain, "g(1) + g(4) = 0 (modulus 5)", 500,
        G(1, 5) + G(4, 5), K(0));
    add("eq-3.20-l5a2", Tier::chain, "g(2) + g(3) = 0 (modulus 5)", 500,
        G(2, 5) + G(3, 5), K(0));

    add("prop-3.11-l3a1", Tier::chain, "g(1) - g(4) = -1 (modulus 3)", 500,
        G(1, 3) - G(4, 3), K(-1));
    add("prop-3.11-l5a1", Tier::chain, "g(1) - g(6) = -1 (modulus 5)", 500,
        G(1, 5) - G(6, 5), K(-1));
    add("prop-3.11-l5a2", Tier::chain, "g(2) - g(7) = -1 (modulus 5)", 500,
        G(2, 5) - G(7, 5), K(-1));

    /* ---- triple-product consequence: theta quotient = theta sum ---- */

    add("eq-3.12-spec-l3a1", Tier::chain,
        "theta(-,0;3) P(q^4,q^6)P(-1,q^3) / (P(-q^2,q^3)P(q^2,q^6))"
        " = theta(-,2;3) + theta(-,-2;3)",
        500, theta_quotient_lhs(3, 1), theta_sum_rhs(3, 1));
    add("eq-3.12-spec-l5a1", Tier::chain,
        "theta(-,0;5) P(q^4,q^10)P(-1,q^5) / (P(-q^2,q^5)P(q^2,q^10))"
        " = theta(-,2;5) + theta(-,-2;5)",
        500, theta_quotient_lhs(5, 1), theta_sum_rhs(5, 1));
    add("eq-3.12-spec-l5a2", Tier::chain,
        "theta(-,0;5) P(q^8,q^10)P(-1,q^5) / (P(-q^4,q^5)P(q^4,q^10))"
        " = theta(-,4;5) + theta(-,-4;5)",
        500, theta_quotient_lhs(5, 2), theta_sum_rhs(5, 2));

    /* ---- master decomposition of S2bar(l - m) ---- */

    add("eq-4.3-l3m1", Tier::chain,
        "decomposition(3,1) = S2bar(2) (modulus 3)", 500, DEC(3, 1),
        S2(2, 3));
    add("eq-4.3-l5m1", Tier::chain,
        "decomposition(5,1) = S2bar(4) (modulus 5)", 500, DEC(5, 1),
        S2(4, 5));
    add("eq-4.3-l5m2", Tier::chain,
        "decomposition(5,2) = S2bar(3) (modulus 5)", 500, DEC(5, 2),
        S2(3, 5));

    /* ---- closed forms of the Sigma(m,0) bracket ---- */

    add("prop-4.1-a", Tier::lemma,
        "bracket(3,1) = -q^5 (q)(-q^9;q^9) / ((-q)(q^9;q^9))", 500, BRK(3, 1),
        BRKC(3, 1));
    add("prop-4.1-b", Tier::lemma,
        "bracket(5,2) = q^16 (q)(-q^25;q^25) / ((-q)(q^25;q^25))", 500,
        BRK(5, 2), BRKC(5, 2));
    add("prop-4.1-c", Tier::lemma,
        "bracket(5,1) = -q^9 (q)(-q^25;q^25) / ((-q)(q^25;q^25))", 500,
        BRK(5, 1), BRKC(5, 1));

    /* ---- dissections of (q)/(-q) ---- */

    add("eq-4.4", Tier::chain,
        "(q)/(-q) = (q^9;q^9)/(-q^9;q^9) - 2q (q^3,q^15,q^18;q^18)", 500,
        E(1, 1) / En(1, 1),
        E(9, 9) / En(9, 9) - Q(2, 1) * B({3, 15, 18}, 18));

    add("eq-4.5", Tier::chain,
        "(q)/(-q) = (q^25;q^25)/(-q^25;q^25) - 2q (q^15,q^35,q^50;q^50)"
        " + 2q^4 (q^5,q^45,q^50;q^50)",
        500, E(1, 1) / En(1, 1),
        E(25, 25) / En(25, 25) - Q(2, 1) * B({15, 35, 50}, 50) +
            Q(2, 4) * B({5, 45, 50}, 50));

    /* ---- rank-difference generating functions as S2bar sums ---- */

    add("eq-4.6", Tier::chain,
        "[gf of N2(0,3,n)-N2(1,3,n)] (q)/(2(-q)) = 3 S2bar(1) + S2bar(3)",
        500, (M2R(0, 3) - M2R(1, 3)) * half_ratio(),
        K(3) * S2(1, 3) + S2(3, 3));

    add("eq-4.7", Tier::chain,
        "S2bar(1) = g(1) + q^5 Sigma(1,0) (q)(-q^9;q^9)/((-q)(q^9;q^9))"
        " (modulus 3)",
        500, S2(1, 3),
        G(1, 3) + Q(1, 5) * Sg(1, 0, 3) * E(1, 1) * En(9, 9) /
                      (En(1, 1) * E(9, 9)));

    add("eq-4.8", Tier::chain,
        "S2bar(3) = -(q)/(2(-q)) + 1/2 (modulus 3)", 500, S2(3, 3),
        se_constant(Rat(1, 2)) - half_ratio());

    add("eq-4.9", Tier::chain,
        "[gf of N2(1,5,n)-N2(2,5,n)] (q)/(2(-q)) = -S2bar(1) - 3 S2bar(3)",
        500, (M2R(1, 5) - M2R(2, 5)) * half_ratio(),
        -S2(1, 5) - K(3) * S2(3, 5));

    add("eq-4.10", Tier::chain,
        "S2bar(1) = g(1) + q^9 Sigma(1,0) (q)(-q^25;q^25)/((-q)(q^25;q^25))"
        " - q^3 (q^50;q^50)^2 (-q^10,-q^15;q^25)"
        " / ((q^10,q^40;q^50)(-q^5,-q^20;q^25)) (modulus 5)",
        500, S2(1, 5),
        G(1, 5) +
            Q(1, 9) * Sg(1, 0, 5) * E(1, 1) * En(25, 25) /
                (En(1, 1) * E(25, 25)) -
            Q(1, 3) * W(E(50, 50), 2) * B({-10, -15}, 25) /
                (B({10, 40}, 50) * B({-5, -20}, 25)));

    add("eq-4.11", Tier::chain,
        "S2bar(3) = -g(2) + q^16 Sigma(2,0) (q)(-q^25;q^25)/((-q)(q^25;q^25))"
        " - q^7 (q^50;q^50)^2 (-q^5,-q^20;q^25)"
        " / ((q^20,q^30;q^50)(-q^10,-q^15;q^25)) (modulus 5)",
        500, S2(3, 5),
        -G(2, 5) +
            Q(1, 16) * Sg(2, 0, 5) * E(1, 1) * En(25, 25) /
                (En(1, 1) * E(25, 25)) -
            Q(1, 7) * W(E(50, 50), 2) * B({-5, -20}, 25) /
                (B({20, 30}, 50) * B({-10, -15}, 25)));

    /* ---- coefficient identities from the modulus-5 comparison, first
     * residue family ---- */

    add("eq-4.12", Tier::chain,
        "3g(2) - g(1) = five-term eta/theta combination (modulus 5)", 500,
        K(3) * G(2, 5) - G(1, 5),
        Q(5, 10) * W(E(50, 50), 4) * B({5, 10, 40, 45}, 50) * E(25, 25) /
                (W(E(5, 5), 3) * E(5, 10) * En(25, 25)) +
            Q(1, 5) * W(E(25, 25), 2) /
                (W(E(5, 10), 5) * B({15, 20, 30, 35}, 50) * En(25, 25)) +
            Q(4, 10) * W(E(50, 50), 3) * B({5, 45}, 50) /
                (W(E(5, 10), 5) * B({20, 30}, 50) * E(25, 25)) +
            Q(20, 20) * W(E(50, 50), 7) * W(B({5, 45}, 50), 2) *
                W(B({10, 40}, 50), 3) * B({5, 45, 50}, 50) /
                (W(E(5, 5), 4) * W(E(25, 25), 2)) -
            Q(4, 5) * E(10, 10) * B({15, 35, 50}, 50) /
                (W(E(5, 10), 4) * W(B({10, 15, 35, 40}, 50), 3)));

    add("eq-4.13", Tier::chain,
        "(q^5,q^10,q^40,q^45;q^50)(q^15,q^35,q^50;q^50) / ((q^5;q^5)"
        "(q^5;q^10)) = q^5 (q^50;q^50)^2 (q^5,q^45;q^50)^2"
        " (q^10,q^40;q^50)^3 / (q^5;q^5)^2"
        " + 1/((q^15,q^35;q^50)^3 (q^10,q^40;q^50))",
        500,
        B({5, 10, 40, 45}, 50) * B({15, 35, 50}, 50) / (E(5, 5) * E(5, 10)),
        Q(1, 5) * W(E(50, 50), 2) * W(B({5, 45}, 50), 2) *
                W(B({10, 40}, 50), 3) / W(E(5, 5), 2) +
            K(1) / (W(B({15, 35}, 50), 3) * B({10, 40}, 50)));

    add("eq-4.14", Tier::chain,
        "3 (-q^5,-q^20;q^25)(q^50;q^50)^2 / ((q^20,q^30;q^50)"
        "(-q^10,-q^15;q^25)) = five-term combination (modulus 5)",
        500,
        K(3) * B({-5, -20}, 25) * W(E(50, 50), 2) /
            (B({20, 30}, 50) * B({-10, -15}, 25)),
        K(-4) * W(E(50, 50), 2) * B({15, 35, 50}, 50) /
                (W(E(5, 10), 5) * B({20, 30}, 50) * E(25, 25)) -
            Q(20, 10) * W(E(50, 50), 7) * W(B({5, 45}, 50), 2) *
                W(B({10, 40}, 50), 3) * B({15, 35, 50}, 50) /
                (W(E(5, 5), 4) * W(E(25, 25), 2)) +
            K(5) * W(E(50, 50), 3) * E(25, 25) /
                (W(E(5, 5), 2) * W(B({15, 35}, 50), 3) *
                 B({5, 10, 40, 45}, 50) * En(25, 25)) +
            K(10) * W(E(50, 50), 3) * B({5, 45, 50}, 50) /
                (W(E(5, 5), 2) * W(B({5, 45}, 50), 3) *
                 B({15, 20, 30, 35}, 50)) -
            K(8) * E(25, 25) * B({5, 45, 50}, 50) /
                (W(E(5, 10), 5) * B({10, 15, 35, 40}, 50)));

    add("eq-4.15", Tier::chain,
        "(-q^10,-q^15;q^25)(q^50;q^50)^2 / ((q^10,q^40;q^50)"
        "(-q^5,-q^20;q^25)) = four-term combination (modulus 5)",
        500,
        B({-10, -15}, 25) * W(E(50, 50), 2) /
            (B({10, 40}, 50) * B({-5, -20}, 25)),
        Q(-10, 5) * W(E(50, 50), 3) * B({15, 35, 50}, 50) /
                (W(E(5, 5), 2) * W(B({15, 35}, 50), 3) *
                 B({5, 10, 40, 45}, 50)) +
            K(5) * W(E(50, 50), 3) * E(25, 25) /
                (W(E(5, 5), 2) * W(B({5, 45}, 50), 3) *
                 B({15, 20, 30, 35}, 50) * En(25, 25)) -
            K(4) * W(E(25, 25), 2) /
                (W(E(5, 10), 5) * B({10, 15, 35, 40}, 50) * En(25, 25)) +
            Q(4, 5) * E(10, 10) * B({5, 45, 50}, 50) /
                (W(E(5, 10), 4) * W(B({10, 15, 35, 40}, 50), 3)));

    add("eq-4.16", Tier::chain,
        "0 = five-term eta/theta combination (modulus 5)", 500, K(0),
        Q(5, 10) * W(E(50, 50), 4) * B({5, 10, 40, 45}, 50) *
                B({5, 45, 50}, 50) / (W(E(5, 5), 3) * E(5, 10)) +
            Q(1, 5) * E(25, 25) * B({5, 45, 50}, 50) /
                (W(E(5, 10), 5) * B({15, 20, 30, 35}, 50)) -
            K(5) * W(E(50, 50), 3) * B({15, 35, 50}, 50) /
                (W(E(5, 5), 2) * W(B({5, 45}, 50), 3) *
                 B({15, 20, 30, 35}, 50)) +
            K(4) * E(25, 25) * E(50, 50) /
                (W(E(5, 10), 5) * B({10, 40}, 50)) +
            E(10, 10) * E(25, 25) /
                (W(E(5, 10), 4) * W(B({10, 15, 35, 40}, 50), 3) *
                 En(25, 25)));

    /* ---- second residue family ---- */

    add("eq-4.18", Tier::chain,
        "[gf of N2(0,5,n)-N2(2,5,n)] (q)/(2(-q)) = S2bar(5) + 2 S2bar(1)"
        " + S2bar(3)",
        500, (M2R(0, 5) - M2R(2, 5)) * half_ratio(),
        S2(5, 5) + K(2) * S2(1, 5) + S2(3, 5));

    add("eq-4.19", Tier::chain,
        "1/2 + 2g(1) - g(2) = nine-term eta/theta combination (modulus 5)",
        500, se_constant(Rat(1, 2)) + K(2) * G(1, 5) - G(2, 5),
        se_scale(Rat(1, 2),
                 W(E(25, 25), 7) /
                     (W(E(5, 10), 6) * B({15, 20, 30, 35}, 50) *
                      W(E(50, 50), 5) * En(25, 25))) +
            se_scale(Rat(1, 2),
                     Q(1, 10) * E(5, 5) * E(50, 50) * E(25, 25) /
                         (W(B({15, 20, 30, 35}, 50), 3) * E(25, 25) *
                          En(25, 25))) +
            Q(2, 5) * W(E(25, 25), 3) * B({5, 25, 45}, 50) /
                (W(E(5, 10), 6) * B({20, 30, 50}, 50)) -
            Q(5, 10) * W(E(50, 50), 3) * E(25, 25) /
                (W(E(5, 5), 2) * B({10, 40}, 50) * W(B({15, 35}, 50), 4) *
                 En(25, 25)) +
            Q(2, 15) * E(5, 5) * W(E(50, 50), 3) * B({5, 45, 50}, 50) /
                (W(B({15, 35}, 50), 2) * W(B({20, 30}, 50), 3) *
                 W(E(25, 25), 3)) +
            Q(10, 5) * W(E(50, 50), 4) * E(25, 25) * B({20, 30}, 50) /
                (B({5, 45}, 50) * W(E(5, 5), 3)) +
            K(2) * E(50, 50) * B({-10, -15}, 25) * B({15, 35, 50}, 50) /
                (B({-5, -20}, 25) * B({5, 10, 40, 45}, 50)) -
            K(2) * W(E(25, 25), 2) * W(B({10, 40}, 50), 5) *
                W(E(50, 50), 2) * B({15, 35, 50}, 50) /
                (W(E(5, 10), 4) * W(B({5, 45}, 50), 4) * W(E(10, 10), 3)) +
            Q(2, 5) * W(E(25, 25), 4) * B({5, 45}, 50) /
                (W(E(5, 10), 6) * B({20, 30}, 50) * W(E(50, 50), 2)));

    add("eq-4.20", Tier::chain, "0 = 0", 500, K(0), K(0));

    add("eq-4.21", Tier::chain,
        "2q^10 (q^5;q^5)(q^50;q^50)^4 / ((q^15,q^35;q^50)(q^20,q^30;q^50)^3"
        "(q^25;q^25)^3) = three-term combination (modulus 5)",
        500,
        Q(2, 10) * E(5, 5) * W(E(50, 50), 4) /
            (B({15, 35}, 50) * W(B({20, 30}, 50), 3) * W(E(25, 25), 3)),
        Q(1, 5) * W(E(50, 50), 2) * B({-5, -20}, 25) /
                (B({-10, -15}, 25) * B({20, 30}, 50)) +
            Q(4, 5) * E(25, 25) * B({5, 45, 50}, 50) /
                (W(E(5, 10), 5) * B({10, 15, 35, 40}, 50)) -
            Q(5, 5) * W(E(50, 50), 3) * E(25, 25) /
                (W(E(5, 5), 2) * W(B({15, 35}, 50), 3) *
                 B({5, 10, 40, 45}, 50) * En(25, 25)));

    add("eq-4.22", Tier::chain,
        "4 (q^15,q^35;q^50)^2 (q^25;q^25)^2 / ((q^5;q^10)^6"
        "(q^20,q^30;q^50)) = two-term combination (modulus 5)",
        500,
        K(4) * W(B({15, 35}, 50), 2) * W(E(25, 25), 2) /
            (W(E(5, 10), 6) * B({20, 30}, 50)),
        K(2) * W(E(25, 25), 2) /
                (W(E(5, 10), 5) * B({10, 15, 35, 40}, 50) * En(25, 25)) +
            K(2) * W(E(25, 25), 2) * W(B({10, 40}, 50), 5) *
                W(E(50, 50), 2) * B({5, 45, 50}, 50) /
                (W(E(5, 10), 4) * W(B({5, 45}, 50), 4) * W(E(10, 10), 3)));

    add("eq-4.23", Tier::chain,
        "(q^25;q^25)^6 (q^5,q^45,q^50;q^50) / ((q^5;q^10)^6"
        "(q^15,q^20,q^30,q^35;q^50)(q^50;q^50)^5) = seven-term combination"
        " (modulus 5)",
        500,
        W(E(25, 25), 6) * B({5, 45, 50}, 50) /
            (W(E(5, 10), 6) * B({15, 20, 30, 35}, 50) * W(E(50, 50), 5)),
        Q(-1, 10) * E(5, 5) * E(50, 50) * B({5, 45, 50}, 50) /
                (W(B({15, 20, 30, 35}, 50), 3) * E(25, 25)) -
            Q(4, 5) * W(E(25, 25), 2) * B({5, 45}, 50) * B({5, 45, 50}, 50) /
                (W(E(5, 10), 6) * B({20, 30, 50}, 50)) +
            Q(10, 10) * W(E(50, 50), 3) * B({5, 45, 50}, 50) /
                (W(E(5, 5), 2) * B({10, 40}, 50) * W(B({15, 35}, 50), 4)) +
            K(4) * E(25, 25) * B({15, 35, 50}, 50) /
                (W(E(5, 10), 5) * B({10, 15, 35, 40}, 50)) +
            K(5) * W(E(50, 50), 3) * W(E(25, 25), 2) * B({20, 30}, 50) /
                (B({5, 45}, 50) * W(E(5, 5), 3) * B({15, 35}, 50) *
                 En(25, 25)) +
            Q(1, -5) * E(50, 50) * B({-10, -15}, 25) * E(25, 25) /
                (B({-5, -20}, 25) * B({5, 10, 40, 45}, 50) * En(25, 25)) -
            Q(1, -5) * W(E(25, 25), 3) * W(B({10, 40}, 50), 5) *
                W(E(50, 50), 2) /
                (W(E(5, 10), 4) * W(B({5, 45}, 50), 4) * W(E(10, 10), 3) *
                 En(25, 25)));

    /* ---- theta addition relation used to settle the constant term ---- */

    add("addthm-spec", Tier::chain,
        "P(-q^2,q^3)^4 - P(q^2,q^3)^4 - q^2 P(-1,q^3)^3 P(-q^4,q^3) = 0",
        500,
        W(P(-1, 2, 3), 4) - W(P(+1, 2, 3), 4) -
            Q(1, 2) * W(P(-1, 0, 3), 3) * P(-1, 4, 3),
        K(0));

    /* ---- mock theta connection ---- */

    add("eq-5.1", Tier::chain, "omega = g3(q, q^2)", 300, OM(), G3(1, 2));

    add("eq-5.5", Tier::chain,
        "g3(q,q^2) = 2 g2(q,q^3) - (q^6;q^6)^4 / ((q^2;q^2)(q^3;q^3)^2)", 300,
        G3(1, 2),
        K(2) * G2(1, 3) - W(E(6, 6), 4) / (E(2, 2) * W(E(3, 3), 2)));

    add("eq-5.3-final", Tier::chain,
        "[M2 rank diff, d=2 mod 3] - [Dyson rank diff, d=2 mod 3]"
        " = 12 g2(q,q^3) - 6 (q^6;q^6)^4 / ((q^2;q^2)(q^3;q^3)^2)",
        100, m2_diff(0, 1, 3, 2) - dy_diff(0, 1, 3, 2),
        K(12) * G2(1, 3) - K(6) * W(E(6, 6), 4) / (E(2, 2) * W(E(3, 3), 2)));

    return v;
}

} // namespace

const std::vector<IdentityCheck>& catalog() {
    static const std::vector<IdentityCheck> entries = build_catalog();
    return entries;
}

} // namespace qrank
