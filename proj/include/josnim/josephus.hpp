#pragma once

// Every-second-number Josephus process on 1..v arranged in a circle. Counting
// starts at 1, so 2 is removed first. e_1..e_{v-1} are the removed numbers in
// order and e_v is the survivor. F_s(v) = e_{v-s}: the s-th number from the
// end of the elimination order, defined for 0 <= s <= v-1.

#include <cstdint>
#include <vector>

namespace josnim {

class EliminationOrder {
public:
    explicit EliminationOrder(std::vector<std::uint64_t> e) : e_(std::move(e)) {}

    std::uint64_t v() const { return e_.size(); }
    // 1-based: at(1) is the first removed number, at(v) the survivor.
    std::uint64_t at(std::uint64_t i) const;
    std::uint64_t survivor() const { return e_.back(); }
    // F_s(v) = e_{v-s}. DomainError if s >= v.
    std::uint64_t from_end(std::uint64_t s) const;

    const std::vector<std::uint64_t>& sequence() const { return e_; }

    bool operator==(const EliminationOrder&) const = default;

private:
    std::vector<std::uint64_t> e_;
};

struct FsQuery {
    std::uint64_t s = 0;
    std::uint64_t v = 1;
};

// O(v) simulation over a successor ring with constant-time unlinking.
// DomainError if v < 1.
EliminationOrder elimination_order(std::uint64_t v);

// O(v^2) scan over alive flags; an independent reference for small v.
EliminationOrder elimination_order_naive(std::uint64_t v);

std::uint64_t f_s_simulated(FsQuery q);

// Closed form: 2(v-s) when v <= 2s, else 2m+1 with v = (2s+1)*2^n + m,
// 0 <= m <= (2s+1)*2^n - 1.
std::uint64_t f_s_closed(FsQuery q);

// Halving recursion F_s(2v) = 2F_s(v)-1, F_s(2v+1) = 2F_s(v)+1, bottoming
// out at s+1 <= v <= 2s+1.
std::uint64_t f_s_recursive(FsQuery q);

// F_0(v).
std::uint64_t survivor(std::uint64_t v);

struct OddBlockDecomposition {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    bool operator==(const OddBlockDecomposition&) const = default;
};

// The unique (n, m) with v = (2s+1)*2^n + m and 0 <= m <= (2s+1)*2^n - 1.
// DomainError if v < 2s+1.
OddBlockDecomposition decompose(std::uint64_t s, std::uint64_t v);

}  // namespace josnim
