#include "josnim/grundy.hpp"

#include <stdexcept>
#include <utility>

#include "josnim/checked.hpp"

namespace josnim {

GrundyValue mex(std::span<const GrundyValue> values) {
    // The answer is at most values.size(), so larger entries can be ignored.
    std::vector<bool> seen(values.size() + 1, false);
    for (GrundyValue v : values)
        if (v < seen.size()) seen[v] = true;
    GrundyValue g = 0;
    while (seen[g]) ++g;
    return g;
}

GrundyTable::GrundyTable(std::uint64_t x_max, std::uint64_t y_max)
    : x_max_(x_max), y_max_(y_max) {
    const std::uint64_t cells = checked::mul(checked::add(x_max, 1), checked::add(y_max, 1));
    values_.assign(cells, 0);

    std::vector<GrundyValue> successors;
    for (std::uint64_t x = 0; x <= x_max_; ++x) {
        for (std::uint64_t y = 0; y <= y_max_; ++y) {
            const Position p{x, y};
            successors.clear();
            for_each_successor(p, [&](Position q) { successors.push_back(values_[index(q)]); });
            values_[index(p)] = mex(successors);
        }
    }
}

GrundyValue GrundyTable::at(Position p) const {
    if (!contains(p)) throw std::out_of_range("position " + to_string(p) + " outside Grundy table");
    return values_[index(p)];
}

void GrundyTable::overwrite(Position p, GrundyValue value) {
    if (!contains(p)) throw std::out_of_range("position " + to_string(p) + " outside Grundy table");
    values_[index(p)] = value;
}

GrundyValue GrundyCache::value(Position root) {
    if (auto it = memo_.find(root); it != memo_.end()) return it->second;

    std::vector<Position> stack{root};
    std::vector<GrundyValue> successors;
    while (!stack.empty()) {
        const Position p = stack.back();
        if (memo_.contains(p)) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        successors.clear();
        for_each_successor(p, [&](Position q) {
            if (auto it = memo_.find(q); it != memo_.end()) {
                successors.push_back(it->second);
            } else {
                ready = false;
                stack.push_back(q);
            }
        });
        if (ready) {
            memo_.emplace(p, mex(successors));
            stack.pop_back();
        }
    }
    return memo_.at(root);
}

GrundyValue grundy(Position p) { return GrundyCache{}.value(p); }

bool is_p_position(Position p) { return grundy(p) == 0; }

std::vector<MoveAction> winning_moves(Position p) {
    GrundyCache cache;
    return winning_moves(p, cache);
}

MoveAction best_move(Position p) {
    GrundyCache cache;
    return best_move(p, cache);
}

}  // namespace josnim
