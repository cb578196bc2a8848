#include "josnim/josephus.hpp"

#include <string>

#include "josnim/checked.hpp"
#include "josnim/errors.hpp"

namespace josnim {

namespace {

void require_circle(std::uint64_t v) {
    if (v < 1) throw DomainError("circle size v must be >= 1");
}

void require_query(FsQuery q) {
    require_circle(q.v);
    if (q.s >= q.v)
        throw DomainError("F_s(v) requires s <= v-1, got s=" + std::to_string(q.s) + " v=" + std::to_string(q.v));
}

// v <= 2s without forming 2s.
bool at_most_twice(std::uint64_t v, std::uint64_t s) { return v / 2 < s || (v % 2 == 0 && v / 2 == s); }

}  // namespace

std::uint64_t EliminationOrder::at(std::uint64_t i) const {
    if (i < 1 || i > e_.size()) throw DomainError("elimination index out of range: " + std::to_string(i));
    return e_[i - 1];
}

std::uint64_t EliminationOrder::from_end(std::uint64_t s) const {
    require_query({s, v()});
    return e_[v() - s - 1];
}

EliminationOrder elimination_order(std::uint64_t v) {
    require_circle(v);
    // next[i] is the index of the number following i+1 in the circle.
    std::vector<std::uint64_t> next(v);
    for (std::uint64_t i = 0; i < v; ++i) next[i] = (i + 1) % v;

    std::vector<std::uint64_t> e;
    e.reserve(v);
    std::uint64_t cur = 0;
    for (std::uint64_t left = v; left > 1; --left) {
        const std::uint64_t victim = next[cur];
        e.push_back(victim + 1);
        next[cur] = next[victim];
        cur = next[cur];
    }
    e.push_back(cur + 1);
    return EliminationOrder(std::move(e));
}

EliminationOrder elimination_order_naive(std::uint64_t v) {
    require_circle(v);
    std::vector<bool> alive(v, true);
    std::vector<std::uint64_t> e;
    std::uint64_t pos = 0;
    bool skip = true;
    while (e.size() + 1 < v) {
        if (alive[pos]) {
            if (!skip) {
                alive[pos] = false;
                e.push_back(pos + 1);
            }
            skip = !skip;
        }
        pos = (pos + 1) % v;
    }
    for (std::uint64_t i = 0; i < v; ++i)
        if (alive[i]) e.push_back(i + 1);
    return EliminationOrder(std::move(e));
}

std::uint64_t f_s_simulated(FsQuery q) {
    require_query(q);
    return elimination_order(q.v).from_end(q.s);
}

OddBlockDecomposition decompose(std::uint64_t s, std::uint64_t v) {
    const std::uint64_t odd = checked::add(checked::mul(s, 2), 1);
    if (v < odd) throw DomainError("decomposition requires v >= 2s+1");
    const std::uint64_t n = floor_log2(v / odd);
    const std::uint64_t base = odd << n;
    return {n, v - base};
}

std::uint64_t f_s_closed(FsQuery q) {
    require_query(q);
    if (at_most_twice(q.v, q.s)) return 2 * (q.v - q.s);
    return checked::add(checked::mul(decompose(q.s, q.v).m, 2), 1);
}

std::uint64_t f_s_recursive(FsQuery q) {
    require_query(q);
    if (at_most_twice(q.v, q.s)) return 2 * (q.v - q.s);
    if (q.v - q.s == q.s + 1) return 1;  // v = 2s+1
    const std::uint64_t half = f_s_recursive({q.s, q.v / 2});
    return q.v % 2 == 0 ? 2 * half - 1 : 2 * half + 1;
}

std::uint64_t survivor(std::uint64_t v) {
    require_circle(v);
    return f_s_closed({0, v});
}

}  // namespace josnim
