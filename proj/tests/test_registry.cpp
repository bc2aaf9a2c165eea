#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qrank/errors.hpp"
#include "qrank/registry.hpp"
#include "qrank/series.hpp"

using namespace qrank;

TEST_CASE("catalog shape: unique ids, tiers, lookup round-trip") {
    const auto& cat = catalog();
    CHECK(cat.size() == 62);

    std::set<std::string> ids;
    long theorems = 0, lemmas = 0, chains = 0;
    for (const auto& c : cat) {
        CHECK(!c.id.empty());
        CHECK(!c.statement.empty());
        CHECK(c.default_order >= 1);
        CHECK(ids.insert(c.id).second);
        if (c.tier == Tier::theorem) ++theorems;
        if (c.tier == Tier::lemma) ++lemmas;
        if (c.tier == Tier::chain) ++chains;
        CHECK(&find_check(c.id) == &c);
    }
    CHECK(theorems == 14);
    CHECK(lemmas == 8);
    CHECK(chains == 40);

    CHECK(find_check("eq-1.6").tier == Tier::theorem);
    CHECK(find_check("eq-1.6").default_order == 200);
    CHECK(find_check("prop-4.1-a").tier == Tier::lemma);
    CHECK(find_check("eq-4.12").tier == Tier::chain);
    CHECK(tier_name(Tier::theorem) == "theorem");
    CHECK(tier_name(Tier::lemma) == "lemma");
    CHECK(tier_name(Tier::chain) == "chain");
    CHECK(tier_name(Tier::property) == "property");

    CHECK_THROWS_AS(find_check("nonsense"), UnknownIdError);
    CHECK_THROWS_AS(find_check(""), UnknownIdError);
}

TEST_CASE("series expressions compose lazily") {
    SeriesExpr x = se_monomial(Rat(1), 1) + se_constant(Rat(2));
    QSeries v = x.eval(10);
    CHECK(v.coeff(0) == 2);
    CHECK(v.coeff(1) == 1);

    QSeries d = se_dilate(x, 3).eval(10);
    CHECK(d.coeff(0) == 2);
    CHECK(d.coeff(3) == 1);
    CHECK(d.coeff(1) == 0);

    QSeries e = se_extract(se_dilate(x, 3), 3, 0).eval(5);
    CHECK(e.coeff(0) == 2);
    CHECK(e.coeff(1) == 1);

    QSeries s = se_shift(x, 2).eval(8);
    CHECK(s.coeff(2) == 2);
    CHECK(s.coeff(3) == 1);

    QSeries p = (x * x).eval(6);
    CHECK(p.coeff(0) == 4);
    CHECK(p.coeff(1) == 4);
    CHECK(p.coeff(2) == 1);

    QSeries n = (-x).eval(4);
    CHECK(n.coeff(0) == -2);

    QSeries sc = se_scale(Rat(1, 2), x).eval(4);
    CHECK(sc.coeff(0) == 1);
    CHECK(sc.coeff(1) == Rat(1, 2));

    // Division trims the divisor, so a shifted unit works as a denominator.
    SeriesExpr q = se_constant(Rat(1)) / (se_monomial(Rat(1), 0) - se_monomial(Rat(1), 1));
    QSeries geo = q.eval(6);
    for (long i = 0; i < 6; ++i) CHECK(geo.coeff(i) == 1);

    // eval grows the request until the window reaches the order.
    CHECK(se_monomial(Rat(1), 7).raw(3).coeff(7) == 1);
    CHECK(x.eval(500).trunc() >= 500);
    CHECK(x.label().size() > 0);
}

TEST_CASE("verification: passes, defaults, and explicit orders") {
    VerifyReport r = verify("eq-1.6", 40);
    CHECK(r.pass);
    CHECK(r.id == "eq-1.6");
    CHECK(r.order == 40);
    CHECK(!r.mismatch.has_value());
    CHECK(r.error.empty());
    CHECK(r.millis >= 0);

    CHECK(verify("lem-2.1-l3", 60).pass);
    CHECK(verify("prop-2.6-l3b1", 80).pass);
    CHECK(verify("eq-4.20", 5000).pass);

    // order <= 0 selects the check's default.
    VerifyReport d = verify("lem-2.1-l3", 0);
    CHECK(d.order == find_check("lem-2.1-l3").default_order);

    CHECK_THROWS_AS(verify("nonsense", 10), UnknownIdError);
}

TEST_CASE("a planted discrepancy is caught at its exponent") {
    IdentityCheck mut = find_check("eq-1.6");
    mut.rhs = mut.rhs + se_monomial(Rat(1), 7);
    VerifyReport r = verify_check(mut, 50);
    CHECK(!r.pass);
    REQUIRE(r.mismatch.has_value());
    CHECK(r.mismatch->exponent == 7);
    CHECK(r.mismatch->rhs - r.mismatch->lhs == 1);
    CHECK(r.error.empty());
}

TEST_CASE("evaluation failures are reported, not thrown") {
    IdentityCheck bad;
    bad.id = "zero-divisor";
    bad.statement = "1/0 on the left";
    bad.default_order = 10;
    bad.lhs = se_constant(Rat(1)) / se_constant(Rat(0));
    bad.rhs = se_constant(Rat(1));
    VerifyReport r = verify_check(bad, 10);
    CHECK(!r.pass);
    CHECK(!r.error.empty());
    CHECK(r.error.find("[in ") != std::string::npos);
}

TEST_CASE("verify_all: selection order, parallel determinism, whole-catalog smoke") {
    const std::vector<std::string> ids = {"eq-4.20", "lem-2.1-l3", "prop-2.6-l3b1",
                                          "eq-1.6"};
    auto seq = verify_all(50, 1, ids);
    auto par = verify_all(50, 8, ids);
    REQUIRE(seq.size() == ids.size());
    REQUIRE(par.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        CHECK(seq[i].id == ids[i]);
        CHECK(par[i].id == ids[i]);
        CHECK(seq[i].pass == par[i].pass);
        CHECK(seq[i].order == par[i].order);
        CHECK(seq[i].mismatch.has_value() == par[i].mismatch.has_value());
        CHECK(seq[i].pass);
    }

    CHECK_THROWS_AS(verify_all(10, 1, {"eq-1.6", "nope"}), UnknownIdError);

    // Order 8 exercises every catalog entry cheaply; an empty ids list means
    // the full catalog, reported in catalog order.
    auto all = verify_all(8, 4);
    const auto& cat = catalog();
    REQUIRE(all.size() == cat.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CAPTURE(all[i].id);
        CHECK(all[i].id == cat[i].id);
        CHECK(all[i].pass);
        CHECK(all[i].error.empty());
    }
}

TEST_CASE("certification bound for modular-form identities") {
    CHECK(required_truncation(10, 1, 1) == 72);
    CHECK(required_truncation(10, 0, 1) == 1);
    CHECK(required_truncation(10, 1) == 500);
    CHECK(required_truncation(10, 6) == 500);
    CHECK(required_truncation(10, 7) == 504);
    CHECK(required_truncation(3, 1, 1) == 1);
    CHECK(required_truncation(6, 10, 1) == 20);
    for (long k = 1; k < 12; ++k)
        CHECK(required_truncation(10, k + 1, 1) >= required_truncation(10, k, 1));
    CHECK_THROWS_AS(required_truncation(0, 1), UnsupportedCaseError);
    CHECK_THROWS_AS(required_truncation(-2, 1), UnsupportedCaseError);
}
