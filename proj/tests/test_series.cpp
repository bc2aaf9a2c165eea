#include <doctest.h>

#include <random>
#include <vector>

#include "qrank/errors.hpp"
#include "qrank/series.hpp"

using namespace qrank;

namespace {

/* Deterministic coefficient stream so the same series can be rebuilt at any
 * truncation: two builds agree wherever their windows overlap. */
Rat det_coeff(long tag, long e) {
    const long num = ((e * 37 + tag * 101) % 19 + 19) % 19 - 9;
    const long den = ((e + tag) % 3 + 3) % 3 + 1;
    return rat(num, den);
}

QSeries det_series(long tag, long min_exp, long trunc) {
    std::vector<Rat> c;
    for (long e = min_exp; e < trunc; ++e)
        c.push_back(e == min_exp ? Rat(1) : det_coeff(tag, e));
    return QSeries(min_exp, trunc, std::move(c));
}

QSeries random_series(std::mt19937& rng) {
    std::uniform_int_distribution<long> me(-3, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    const long lo = me(rng);
    std::vector<Rat> c;
    for (long e = lo; e < lo + 12; ++e) c.push_back(rat(num(rng), den(rng)));
    return QSeries(lo, lo + 12, std::move(c));
}

} // namespace

TEST_CASE("window bookkeeping and coefficient access") {
    QSeries s(0, 3, {Rat(1), Rat(2), Rat(3)});
    CHECK(s.min_exp() == 0);
    CHECK(s.trunc() == 3);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(2) == 3);
    CHECK(s.coeff(-5) == 0);             // below the window: provably zero
    CHECK_THROWS_AS(s.coeff(3), OutOfRangeError); // at trunc: unknown
    CHECK_THROWS_AS(QSeries(2, 2, {}), Error);
    CHECK_THROWS_AS(QSeries(0, 2, {Rat(1)}), Error);
    CHECK_THROWS_AS(QSeries::monomial(Rat(1), 5, 5), OutOfRangeError);
    CHECK_THROWS_AS(QSeries::from_coeffs({1, 2, 3}, 2), Error);
    CHECK(QSeries::zero(4).known_zero());
    CHECK_FALSE(QSeries::monomial(Rat(1), 1, 4).known_zero());
}

TEST_CASE("trimmed re-anchors at the first nonzero coefficient") {
    QSeries s(0, 6, {Rat(0), Rat(0), Rat(3), Rat(0), Rat(1), Rat(0)});
    QSeries t = s.trimmed();
    CHECK(t.min_exp() == 2);
    CHECK(t.trunc() == 6);
    CHECK(t.coeff(2) == 3);
    QSeries z = QSeries::zero(8).trimmed();
    CHECK(z.min_exp() == 7);
    CHECK(z.trunc() == 8);
    CHECK(z.known_zero());
}

TEST_CASE("partition numbers from the inverted pentagonal series") {
    // prod (1 - q^r) = sum_j (-1)^j q^{j(3j-1)/2}; its inverse generates
    // the partition numbers 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42.
    const long N = 24;
    std::vector<Rat> c(N, Rat(0));
    for (long j = -6; j <= 6; ++j) {
        const long e = j * (3 * j - 1) / 2;
        if (e >= 0 && e < N) c[static_cast<std::size_t>(e)] += (j % 2 == 0 ? 1 : -1);
    }
    QSeries euler(0, N, std::move(c));
    QSeries parts = euler.inverted();
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n)
        CHECK(parts.coeff(n) == expected[n]);
    // A series times its inverse is 1 on the whole provable window.
    QSeries prod = euler * parts;
    CHECK(eq_upto(prod, QSeries::one(prod.trunc()), prod.trunc()).pass);
}

TEST_CASE("ring laws on random Laurent windows") {
    std::mt19937 rng(20260819);
    for (int i = 0; i < 1000; ++i) {
        QSeries a = random_series(rng);
        QSeries b = random_series(rng);
        QSeries c = random_series(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(-(-a) == a);
        CHECK(a - b == a + b.negated());
        CHECK(a.scaled(rat(1, 2)).scaled(rat(2, 1)) == a);
    }
}

TEST_CASE("additive and multiplicative identities") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        QSeries a = random_series(rng);
        QSeries zero = QSeries::zero(a.trunc());
        QSeries one = QSeries::one(a.trunc());
        QSeries a0 = a + zero;
        CHECK(eq_upto(a0, a, a0.trunc()).pass);
        QSeries a1 = a * one;
        CHECK(eq_upto(a1, a, a1.trunc()).pass);
    }
}

TEST_CASE("truncation soundness: wider windows never change known coefficients") {
    for (long tag1 = 1; tag1 <= 5; ++tag1) {
        for (long tag2 = 6; tag2 <= 8; ++tag2) {
            QSeries a = det_series(tag1, -2, 30);
            QSeries b = det_series(tag2, 1, 30);
            QSeries A = det_series(tag1, -2, 60);
            QSeries B = det_series(tag2, 1, 60);
            QSeries small = a * b;
            QSeries big = A * B;
            CHECK(eq_upto(small, big, small.trunc()).pass);
            QSeries inv_small = a.inverted();
            QSeries inv_big = A.inverted();
            CHECK(eq_upto(inv_small, inv_big, inv_small.trunc()).pass);
            QSeries unit = a * inv_small;
            CHECK(eq_upto(unit, QSeries::one(unit.trunc()), unit.trunc()).pass);
        }
    }
}

TEST_CASE("inversion of a Laurent leader lands on the mirrored exponent") {
    // 1 / (q^{-2} (1 - q)) = q^2 (1 + q + q^2 + ...)
    std::vector<Rat> c(12, Rat(0));
    c[0] = 1;
    c[1] = -1;
    QSeries s(-2, 10, std::move(c));
    QSeries inv = s.inverted();
    CHECK(inv.min_exp() == 2);
    CHECK(inv.trunc() == 14);
    for (long e = 2; e < 14; ++e) CHECK(inv.coeff(e) == 1);
    CHECK(inv.coeff(1) == 0);

    std::vector<Rat> z(4, Rat(0));
    z[1] = 1;
    CHECK_THROWS_AS(QSeries(0, 4, std::move(z)).inverted(), LeadingZeroError);
}

TEST_CASE("shift, dilate, extract round trips") {
    QSeries a = det_series(3, 0, 40);
    CHECK(a.shifted(5).shifted(-5) == a);
    CHECK(a.dilated(3).extracted(3, 0) == a);
    QSeries moved = a.dilated(3).shifted(1);
    CHECK(moved.extracted(3, 1) == a);
    CHECK(moved.extracted(3, 0).known_zero());

    // Reassembling the three progressions of a series recovers it.
    QSeries s = det_series(9, 0, 40);
    long bound = s.trunc();
    QSeries parts = QSeries::zero(s.trunc());
    for (long d = 0; d < 3; ++d) {
        QSeries piece = s.extracted(3, d).dilated(3).shifted(d);
        bound = std::min(bound, piece.trunc());
        parts = parts + piece;
    }
    CHECK(eq_upto(parts, s, bound).pass);

    CHECK_THROWS_AS(a.dilated(0), UnsupportedCaseError);
    CHECK_THROWS_AS(a.extracted(3, 3), UnsupportedCaseError);
    CHECK_THROWS_AS(det_series(1, -2, 10).extracted(3, 0), UnsupportedCaseError);
    CHECK_THROWS_AS(QSeries::one(1).extracted(3, 1), TruncationError);
}

TEST_CASE("scaling by a rational keeps exact coefficients") {
    QSeries s = QSeries::from_coeffs({1, -2, 0, 0, 2}, 6);
    QSeries h = s.scaled(rat(1, 2));
    CHECK(h.coeff(0) == rat(1, 2));
    CHECK(h.coeff(1) == -1);
    CHECK(h.coeff(4) == 1);
    CHECK(h.coeff(5) == 0);
}

TEST_CASE("eq_upto reports the first mismatch and refuses unknown regions") {
    QSeries a = det_series(4, 0, 20);
    QSeries b = a + QSeries::monomial(Rat(1), 7, 20);
    CompareResult r = eq_upto(a, b, 20);
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.mismatch.has_value());
    CHECK(r.mismatch->exponent == 7);
    CHECK(r.mismatch->rhs - r.mismatch->lhs == 1);
    CHECK(eq_upto(a, a, 20).pass);
    CHECK_THROWS_AS(eq_upto(a, b, 21), OutOfRangeError);

    // Mismatch below both min_exps is impossible; below one of them the
    // shorter window's implicit zeros participate.
    QSeries c = det_series(4, 2, 20);
    CompareResult s = eq_upto(a, c, 20);
    REQUIRE_FALSE(s.pass);
    CHECK(s.mismatch->exponent < 2);
}

TEST_CASE("ensure_trunc grows requests until the target is met") {
    int calls = 0;
    QSeries s = ensure_trunc(50, [&calls](long req) {
        ++calls;
        return QSeries::one(std::max(1L, req / 4));
    });
    CHECK(s.trunc() >= 50);
    CHECK(calls > 1);

    // TruncationError from the builder means "ask for more".
    QSeries t = ensure_trunc(30, [](long req) {
        if (req < 100) throw TruncationError("not yet");
        return QSeries::one(req);
    });
    CHECK(t.trunc() >= 30);

    // A builder that can never deliver fails cleanly.
    CHECK_THROWS_AS(ensure_trunc(50, [](long) { return QSeries::one(3); }),
                    TruncationError);
    CHECK_THROWS_AS(
        ensure_trunc(50, [](long) -> QSeries { throw TruncationError("x"); }),
        TruncationError);
}

TEST_CASE("str renders coefficients and the truncation marker") {
    QSeries s = QSeries::from_coeffs({1, -1}, 8);
    std::string text = s.str();
    CHECK(text.find("O(q^8)") != std::string::npos);
}
