#pragma once

/*
 * Overpartition enumeration and rank statistics.
 *
 * An overpartition of n is a nonincreasing sequence of positive parts in
 * which the first occurrence of each distinct part value may be overlined.
 * Two rank statistics are computed:
 *
 *   dyson rank = largest part - number of parts,
 *
 *   m2 rank    = ceil(largest/2) - #parts + #(odd non-overlined parts) - chi,
 *     chi = 1 when the partition is nonempty, its largest part is odd, and
 *     no overlined copy of the largest part is present; otherwise chi = 0.
 *
 * The empty overpartition has rank 0 under both statistics, but by
 * convention every n = 0 count below is reported as 0.
 */

#include <functional>
#include <vector>

#include "qrank/series.hpp"

namespace qrank {

struct Part {
    long value = 0;
    bool overlined = false;
};

using Overpartition = std::vector<Part>;

long m2_rank(const Overpartition& p);
long dyson_rank(const Overpartition& p);

/* Visit every overpartition of weight n exactly once.  Parts arrive
 * nonincreasing with the overlined copy first among equals.  The visitor
 * must not retain the reference past the call.  n above cap raises
 * CapExceededError; the cap guards against runaway exponential work. */
void for_each_overpartition(long n, const std::function<void(const Overpartition&)>& visit,
                            long cap = 40);

std::vector<Overpartition> enumerate_overpartitions(long n, long cap = 40);

/* Number of overpartitions of n. */
long count_overpartitions(long n, long cap = 40);

enum class RankKind { m2, dyson };

/* counts[n][s] = number of overpartitions of n whose rank is congruent to s
 * modulo `modulus`.  The n = 0 row is identically zero by convention. */
struct RankTable {
    RankKind kind = RankKind::m2;
    long modulus = 1;
    long max_n = 0;
    std::vector<std::vector<long>> counts;

    /* Count for residue s (any integer, reduced mod modulus) at weight n. */
    long at(long s, long n) const;
    /* Total number of overpartitions of weight n (row sum). */
    long total(long n) const;
};

RankTable count_table(RankKind kind, long modulus, long max_n, long cap = 40);

enum class DiffSource { enumeration, analytic };

/* The rank-difference series sum_{j >= 0} (N(s, l, l*j + d) - N(t, l, l*j + d)) q^j
 * truncated below n, where N is the residue count of the chosen rank kind.
 * `enumeration` tallies ranks of explicitly enumerated overpartitions (cap
 * applies to the largest weight l*(n-1) + d needed); `analytic` extracts the
 * arithmetic progression from the exact generating functions. */
QSeries rank_diff_series(RankKind kind, long l, long s, long t, long d, DiffSource source,
                         long n, long cap = 40);

/* Same, reusing an already-built table (enumeration route). */
QSeries rank_diff_series(const RankTable& table, long s, long t, long d, long n);

} // namespace qrank
