#pragma once

/*
 * Identity registry: lazily evaluated series expressions, the catalog of
 * named identities, and the verification driver.
 *
 * A SeriesExpr wraps a builder long -> QSeries.  eval(order) re-invokes the
 * builder with geometrically growing requests until the result is truncated
 * no lower than `order`, so composite expressions whose intermediate steps
 * shrink the window (division, extraction, dilation) still deliver the
 * requested precision.
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrank/series.hpp"

namespace qrank {

class SeriesExpr {
  public:
    using Builder = std::function<QSeries(long)>;

    SeriesExpr() : SeriesExpr([](long n) { return QSeries::zero(n); }, "0") {}
    SeriesExpr(Builder builder, std::string label)
        : builder_(std::move(builder)), label_(std::move(label)) {}

    /* Evaluate with trunc >= order guaranteed. */
    QSeries eval(long order) const;
    /* One raw builder call at the given request, no retry. */
    QSeries raw(long request) const { return builder_(request); }
    const std::string& label() const { return label_; }

    SeriesExpr operator-() const;

    friend SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b);
    friend SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b);
    friend SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b);
    /* Division multiplies by the inverse of the trimmed divisor. */
    friend SeriesExpr operator/(const SeriesExpr& a, const SeriesExpr& b);

  private:
    Builder builder_;
    std::string label_;
};

SeriesExpr se_constant(const Rat& c);
SeriesExpr se_monomial(const Rat& c, long e);
SeriesExpr se_scale(const Rat& c, const SeriesExpr& x);
SeriesExpr se_shift(const SeriesExpr& x, long m);
SeriesExpr se_dilate(const SeriesExpr& x, long k);
SeriesExpr se_extract(const SeriesExpr& x, long l, long d);

enum class Tier { theorem, lemma, chain, property };

struct IdentityCheck {
    std::string id;
    Tier tier = Tier::lemma;
    std::string statement; // human-readable form of the asserted equality
    long default_order = 100;
    SeriesExpr lhs;
    SeriesExpr rhs;
};

struct VerifyReport {
    std::string id;
    long order = 0;
    bool pass = false;
    std::optional<Mismatch> mismatch; // first differing coefficient, if any
    std::string error;                // nonempty when evaluation itself threw
    long millis = 0;
};

/* The full list of registered identities, in stable order. */
const std::vector<IdentityCheck>& catalog();

/* Lookup by id; throws UnknownIdError. */
const IdentityCheck& find_check(const std::string& id);

/* Compare lhs and rhs of one check through every exponent below `order`
 * (order <= 0 selects the check's default).  Evaluation errors are captured
 * in the report rather than propagated. */
VerifyReport verify_check(const IdentityCheck& check, long order = 0);
VerifyReport verify(const std::string& id, long order = 0);

/* Verify several checks (all of them when ids is empty), optionally on
 * `jobs` worker threads.  Reports come back in catalog order. */
std::vector<VerifyReport> verify_all(long order = 0, int jobs = 1,
                                     const std::vector<std::string>& ids = {});

std::string tier_name(Tier t);

/* Working precision needed to certify an eta-quotient identity on Gamma_0(N)
 * of weight-derived bound k: the Sturm-style bound
 * ceil(k * N^2 / 12 * prod_{p | N} (1 - 1/p^2)), raised to 72k at level 10
 * and floored at `floor_value`. */
long required_truncation(long level, long k, long floor_value = 500);

} // namespace qrank
