#include "qrank/ranks.hpp"

#include "qrank/errors.hpp"
#include "qrank/lambert.hpp"

namespace qrank {

long m2_rank(const Overpartition& p) {
    if (p.empty()) return 0;
    long largest = 0;
    for (const auto& part : p) largest = std::max(largest, part.value);
    long rank = (largest + 1) / 2 - static_cast<long>(p.size());
    bool overlined_largest = false;
    for (const auto& part : p) {
        if (part.value % 2 != 0 && !part.overlined) ++rank;
        if (part.value == largest && part.overlined) overlined_largest = true;
    }
    if (largest % 2 != 0 && !overlined_largest) --rank;
    return rank;
}

long dyson_rank(const Overpartition& p) {
    if (p.empty()) return 0;
    long largest = 0;
    for (const auto& part : p) largest = std::max(largest, part.value);
    return largest - static_cast<long>(p.size());
}

namespace {

void check_cap(long n, long cap) {
    if (n < 0) throw UnsupportedCaseError("overpartition weight must be nonnegative");
    if (n > cap) throw CapExceededError("enumeration weight " + std::to_string(n) +
                                        " exceeds cap " + std::to_string(cap));
}

/* Place parts of value at most max_v summing to `remaining` on top of cur. */
void enumerate_rec(long remaining, long max_v, Overpartition& cur,
                   const std::function<void(const Overpartition&)>& visit) {
    if (remaining == 0) {
        visit(cur);
        return;
    }
    if (max_v < 1) return;
    enumerate_rec(remaining, max_v - 1, cur, visit);
    if (max_v > remaining) return;
    // Use value max_v with some multiplicity k >= 1; the first copy is
    // either overlined or not, later copies never are.
    for (int over = 1; over >= 0; --over) {
        cur.push_back(Part{max_v, over == 1});
        long pushed = 1;
        for (long spent = max_v; spent <= remaining; spent += max_v) {
            enumerate_rec(remaining - spent, max_v - 1, cur, visit);
            cur.push_back(Part{max_v, false});
            ++pushed;
        }
        for (long i = 0; i < pushed; ++i) cur.pop_back();
    }
}

} // namespace

void for_each_overpartition(long n, const std::function<void(const Overpartition&)>& visit,
                            long cap) {
    check_cap(n, cap);
    Overpartition cur;
    cur.reserve(static_cast<std::size_t>(n) + 1);
    enumerate_rec(n, n, cur, visit);
}

std::vector<Overpartition> enumerate_overpartitions(long n, long cap) {
    std::vector<Overpartition> out;
    for_each_overpartition(n, [&](const Overpartition& p) { out.push_back(p); }, cap);
    return out;
}

long count_overpartitions(long n, long cap) {
    long count = 0;
    for_each_overpartition(n, [&](const Overpartition&) { ++count; }, cap);
    return count;
}

long RankTable::at(long s, long n) const {
    if (n < 0 || n > max_n) throw OutOfRangeError("rank table row " + std::to_string(n) +
                                                  " outside [0, " + std::to_string(max_n) + "]");
    const long r = ((s % modulus) + modulus) % modulus;
    return counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

long RankTable::total(long n) const {
    if (n < 0 || n > max_n) throw OutOfRangeError("rank table row " + std::to_string(n) +
                                                  " outside [0, " + std::to_string(max_n) + "]");
    long sum = 0;
    for (long c : counts[static_cast<std::size_t>(n)]) sum += c;
    return sum;
}

RankTable count_table(RankKind kind, long modulus, long max_n, long cap) {
    if (modulus < 1) throw UnsupportedCaseError("count_table needs modulus >= 1");
    check_cap(max_n, cap);
    RankTable table;
    table.kind = kind;
    table.modulus = modulus;
    table.max_n = max_n;
    table.counts.assign(static_cast<std::size_t>(max_n) + 1,
                        std::vector<long>(static_cast<std::size_t>(modulus), 0));
    for (long n = 1; n <= max_n; ++n) {
        auto& row = table.counts[static_cast<std::size_t>(n)];
        for_each_overpartition(n, [&](const Overpartition& p) {
            const long r = (kind == RankKind::m2) ? m2_rank(p) : dyson_rank(p);
            row[static_cast<std::size_t>(((r % modulus) + modulus) % modulus)] += 1;
        }, cap);
    }
    return table;
}

QSeries rank_diff_series(const RankTable& table, long s, long t, long d, long n) {
    if (n < 1) throw TruncationError("rank_diff_series needs a positive truncation");
    if (d < 0 || d >= table.modulus)
        throw UnsupportedCaseError("progression offset must satisfy 0 <= d < modulus");
    std::vector<Rat> coeffs(static_cast<std::size_t>(n), Rat(0));
    for (long j = 0; j < n; ++j) {
        const long w = table.modulus * j + d;
        coeffs[static_cast<std::size_t>(j)] = Rat(table.at(s, w) - table.at(t, w));
    }
    return QSeries(0, n, std::move(coeffs));
}

QSeries rank_diff_series(RankKind kind, long l, long s, long t, long d, DiffSource source,
                         long n, long cap) {
    if (l < 1) throw UnsupportedCaseError("rank_diff_series needs modulus >= 1");
    if (n < 1) throw TruncationError("rank_diff_series needs a positive truncation");
    if (d < 0 || d >= l)
        throw UnsupportedCaseError("progression offset must satisfy 0 <= d < l");
    if (source == DiffSource::enumeration) {
        const RankTable table = count_table(kind, l, l * (n - 1) + d, cap);
        return rank_diff_series(table, s, t, d, n);
    }
    const long need = l * (n - 1) + d + 1;
    QSeries diff = ensure_trunc(need, [&](long req) {
        return (kind == RankKind::m2)
                   ? gf_m2_residue(s, l, req) - gf_m2_residue(t, l, req)
                   : gf_dyson_residue(s, l, req) - gf_dyson_residue(t, l, req);
    });
    return extract_progression(diff, l, d);
}

} // namespace qrank
