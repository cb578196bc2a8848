#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library: plain signed arithmetic, direct enumeration, and
// std::map memoization.

#include <cstdint>
#include <list>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// (pile, count) pairs; pile is 1 or 2.
using Move = std::pair<int, std::int64_t>;

inline std::int64_t floor_half(std::int64_t w) {
    // Largest q with 2q <= w.
    std::int64_t q = w / 2;
    while (2 * q > w) --q;
    while (2 * (q + 1) <= w) ++q;
    return q;
}

// Every (pile, count) with count in [1, pile size] whose removed weight does
// not exceed floor(W / 2).
inline std::vector<Move> moves(std::int64_t x, std::int64_t y) {
    const std::int64_t bound = floor_half(x - 2 * y);
    std::vector<Move> out;
    for (int pile = 1; pile <= 2; ++pile) {
        const std::int64_t size = pile == 1 ? x : y;
        for (std::int64_t c = 0; c <= size; ++c) {
            const std::int64_t removed = pile == 1 ? c : -2 * c;
            if (c >= 1 && removed <= bound) out.emplace_back(pile, c);
        }
    }
    return out;
}

class Grundy {
public:
    int operator()(std::int64_t x, std::int64_t y) {
        const auto key = std::make_pair(x, y);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::set<int> seen;
        for (const auto& [pile, c] : moves(x, y)) seen.insert(pile == 1 ? (*this)(x - c, y) : (*this)(x, y - c));
        int g = 0;
        while (seen.count(g) != 0) ++g;
        memo_[key] = g;
        return g;
    }

private:
    std::map<std::pair<std::int64_t, std::int64_t>, int> memo_;
};

// Josephus elimination by walking a std::list.
inline std::vector<std::uint64_t> josephus(std::uint64_t v) {
    std::list<std::uint64_t> ring;
    for (std::uint64_t i = 1; i <= v; ++i) ring.push_back(i);
    std::vector<std::uint64_t> e;
    auto it = ring.begin();
    while (ring.size() > 1) {
        ++it;  // skip one
        if (it == ring.end()) it = ring.begin();
        e.push_back(*it);
        it = ring.erase(it);
        if (it == ring.end()) it = ring.begin();
    }
    e.push_back(ring.front());
    return e;
}

}  // namespace oracle
