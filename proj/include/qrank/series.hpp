#pragma once

/*
 * Truncated Laurent series in q with exact rational coefficients.
 *
 * A QSeries tracks the window [min_exp, trunc).  Coefficients below min_exp
 * are identically zero by construction; coefficients at exponents >= trunc are
 * UNKNOWN, and asking for one throws OutOfRangeError instead of returning a
 * silent zero.  Every operation computes the tightest truncation bound that is
 * provable from its inputs:
 *
 *   add/sub:   trunc = min(a.trunc, b.trunc)
 *   mul:       trunc = min(a.trunc + b.min_exp, b.trunc + a.min_exp)
 *   invert:    trunc = a.trunc - 2*a.min_exp      (min_exp flips sign)
 *   shift m:   trunc = a.trunc + m
 *   dilate k:  trunc = k*(a.trunc - 1) + 1
 *   extract:   trunc = floor((a.trunc - 1 - d)/l) + 1
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrank/errors.hpp"
#include "qrank/rational.hpp"

namespace qrank {

class QSeries {
  public:
    /* coeffs[i] is the coefficient of q^(min_exp + i); coeffs.size() must be
     * trunc - min_exp, which must be positive. */
    QSeries(long min_exp, long trunc, std::vector<Rat> coeffs);

    static QSeries zero(long trunc);
    static QSeries one(long trunc);
    static QSeries monomial(const Rat& c, long exp, long trunc);
    /* Convenience for tests: coefficients c0, c1, ... of q^0, q^1, ... */
    static QSeries from_coeffs(const std::vector<long>& c, long trunc);

    long min_exp() const { return min_exp_; }
    long trunc() const { return trunc_; }

    /* Exact coefficient of q^n.  Zero below min_exp; OutOfRangeError at or
     * beyond trunc. */
    const Rat& coeff(long n) const;

    /* True when every stored coefficient is zero (the series is zero as far
     * as it is known). */
    bool known_zero() const;

    QSeries negated() const;
    QSeries scaled(const Rat& c) const;
    /* Multiplication by q^m. */
    QSeries shifted(long m) const;
    /* q -> q^k, k >= 1. */
    QSeries dilated(long k) const;
    /* Keep exponents congruent to d mod l and divide them by l; requires
     * min_exp >= 0 and 0 <= d < l.  Throws TruncationError when not even the
     * n = 0 coefficient is known. */
    QSeries extracted(long l, long d) const;
    /* Multiplicative inverse; requires a nonzero coefficient at min_exp. */
    QSeries inverted() const;
    /* Re-anchor min_exp at the first nonzero stored coefficient (the zero
     * series trims to a single zero coefficient just below trunc). */
    QSeries trimmed() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /* Structural equality (same window, same coefficients); mainly for the
     * algebraic-law tests, which construct both sides identically. */
    bool operator==(const QSeries& o) const;

    /* Human-readable "1 - q + 2*q^3 + O(q^8)" form. */
    std::string str() const;

  private:
    long min_exp_;
    long trunc_;
    std::vector<Rat> coeffs_;
};

inline QSeries operator*(const Rat& c, const QSeries& s) { return s.scaled(c); }
inline QSeries operator-(const QSeries& s) { return s.negated(); }

/* Free-function spellings used throughout the higher modules. */
QSeries invert(const QSeries& a);
QSeries dilate(const QSeries& a, long k);
QSeries shift(const QSeries& a, long m);
QSeries extract_progression(const QSeries& a, long l, long d);

struct Mismatch {
    long exponent = 0;
    Rat lhs;
    Rat rhs;
};

struct CompareResult {
    bool pass = false;
    std::optional<Mismatch> mismatch;
};

/* Compare all coefficients at exponents < n_max (from the lower of the two
 * min_exps upward).  Requires n_max <= min(a.trunc, b.trunc): comparing into
 * the unknown region is an OutOfRangeError, not a pass. */
CompareResult eq_upto(const QSeries& a, const QSeries& b, long n_max);

/* Evaluate build(request) with increasing requests until the result's
 * truncation reaches n.  build must be monotone: a larger request never
 * yields a smaller truncation.  TruncationError from build is treated as
 * "request more". */
QSeries ensure_trunc(long n, const std::function<QSeries(long)>& build);

} // namespace qrank
