#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "josnim/errors.hpp"
#include "josnim/game.hpp"

namespace josnim {

using GrundyValue = std::uint64_t;

// Least non-negative integer absent from values. Duplicates and order are irrelevant.
GrundyValue mex(std::span<const GrundyValue> values);

// Dense Grundy table over the box [0, x_max] x [0, y_max], filled bottom-up.
// Every successor of a box position lies in the box, so the fill never leaves it.
class GrundyTable {
public:
    GrundyTable(std::uint64_t x_max, std::uint64_t y_max);

    std::uint64_t x_max() const { return x_max_; }
    std::uint64_t y_max() const { return y_max_; }
    std::uint64_t size() const { return values_.size(); }

    bool contains(Position p) const { return p.x <= x_max_ && p.y <= y_max_; }

    // Throws std::out_of_range outside the box.
    GrundyValue at(Position p) const;
    GrundyValue operator()(Position p) const { return at(p); }

    // Replaces one stored value without recomputing dependents. Used to
    // inject faults when testing the verifiers.
    void overwrite(Position p, GrundyValue value);

private:
    std::size_t index(Position p) const { return p.x * (y_max_ + 1) + p.y; }

    std::uint64_t x_max_;
    std::uint64_t y_max_;
    std::vector<GrundyValue> values_;
};

// Memoized Grundy values for ad-hoc queries, filled lazily by an explicit-stack
// traversal of the move graph.
class GrundyCache {
public:
    GrundyValue value(Position p);
    GrundyValue operator()(Position p) { return value(p); }
    std::size_t memo_size() const { return memo_.size(); }

private:
    struct Hash {
        std::size_t operator()(Position p) const noexcept {
            return std::hash<std::uint64_t>{}(p.x * 0x9E3779B97F4A7C15ULL ^ p.y);
        }
    };
    std::unordered_map<Position, GrundyValue, Hash> memo_;
};

// One-shot queries; each call uses a fresh cache.
GrundyValue grundy(Position p);
bool is_p_position(Position p);

// Legal moves whose result has Grundy value 0, sorted by (pile, count).
template <class Source>
std::vector<MoveAction> winning_moves(Position p, Source&& values) {
    std::vector<MoveAction> out;
    for (const MoveAction& m : legal_moves(p))
        if (values(apply_move(p, m)) == 0) out.push_back(m);
    return out;
}
std::vector<MoveAction> winning_moves(Position p);

// Least winning move, else least legal move. Throws NoMove at terminal positions.
template <class Source>
MoveAction best_move(Position p, Source&& values) {
    const std::vector<MoveAction> all = legal_moves(p);
    if (all.empty()) throw NoMove("no legal move from " + to_string(p));
    for (const MoveAction& m : all)
        if (values(apply_move(p, m)) == 0) return m;
    return all.front();
}
MoveAction best_move(Position p);

}  // namespace josnim
