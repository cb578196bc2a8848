#include "josnim/game.hpp"

#include <sstream>

#include "josnim/checked.hpp"
#include "josnim/errors.hpp"

namespace josnim {

std::int64_t total_weight(Position p) {
    const std::int64_t x = checked::to_signed(p.x);
    const std::int64_t y2 = checked::to_signed(checked::mul(p.y, 2));
    return x - y2;
}

std::int64_t removal_bound(Position p) { return floor_div(total_weight(p), 2); }

std::int64_t removed_weight(MoveAction m) {
    if (m.pile == Pile::One) return checked::to_signed(m.count);
    return -checked::to_signed(checked::mul(m.count, 2));
}

std::uint64_t min_pile_two_removal(Position p) {
    // -2u <= b  <=>  u >= ceil(-b / 2)
    const std::int64_t b = removal_bound(p);
    if (b >= 0) return 1;
    const std::int64_t need = -floor_div(b, 2);
    return need < 1 ? 1 : static_cast<std::uint64_t>(need);
}

std::uint64_t max_pile_one_removal(Position p) {
    const std::int64_t b = removal_bound(p);
    if (b <= 0) return 0;
    const auto ub = static_cast<std::uint64_t>(b);
    return ub < p.x ? ub : p.x;
}

std::vector<MoveAction> legal_moves(Position p) {
    std::vector<MoveAction> out;
    const std::uint64_t max_one = max_pile_one_removal(p);
    const std::uint64_t min_two = min_pile_two_removal(p);
    out.reserve(max_one + (p.y >= min_two ? p.y - min_two + 1 : 0));
    for (std::uint64_t t = 1; t <= max_one; ++t) out.push_back({Pile::One, t});
    for (std::uint64_t u = min_two; u <= p.y; ++u) out.push_back({Pile::Two, u});
    return out;
}

std::uint64_t legal_move_count(Position p) {
    const std::uint64_t min_two = min_pile_two_removal(p);
    return max_pile_one_removal(p) + (p.y >= min_two ? p.y - min_two + 1 : 0);
}

std::optional<std::string> illegal_reason(Position p, MoveAction m) {
    const std::uint64_t pile_size = m.pile == Pile::One ? p.x : p.y;
    const char* name = m.pile == Pile::One ? "pile 1" : "pile 2";
    if (m.count == 0) return std::string("a move must remove at least one stone");
    if (pile_size == 0) return std::string(name) + " is empty";
    if (m.count > pile_size)
        return std::string(name) + " holds only " + std::to_string(pile_size) + " stone(s)";
    const std::int64_t bound = removal_bound(p);
    if (m.pile == Pile::One) {
        if (static_cast<std::int64_t>(m.count) > bound) {
            if (bound <= 0)
                return "removal bound is " + std::to_string(bound) + ", pile 1 is frozen";
            return "removal bound violated: weight " + std::to_string(m.count) + " exceeds bound " +
                   std::to_string(bound);
        }
    } else {
        const std::uint64_t min_two = min_pile_two_removal(p);
        if (m.count < min_two)
            return "minimum forced removal not met: must take at least " + std::to_string(min_two) +
                   " stone(s) from pile 2 (bound " + std::to_string(bound) + ")";
    }
    return std::nullopt;
}

bool is_legal(Position p, MoveAction m) { return !illegal_reason(p, m).has_value(); }

Position apply_move(Position p, MoveAction m) {
    if (auto why = illegal_reason(p, m))
        throw IllegalMove("illegal move " + to_string(m) + " at " + to_string(p) + ": " + *why);
    if (m.pile == Pile::One) return {p.x - m.count, p.y};
    return {p.x, p.y - m.count};
}

bool is_terminal(Position p) { return legal_move_count(p) == 0; }

std::string to_string(Position p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string to_string(MoveAction m) {
    return (m.pile == Pile::One ? "p1 " : "p2 ") + std::to_string(m.count);
}

std::optional<MoveAction> parse_move(const std::string& text) {
    std::istringstream in(text);
    std::string pile;
    std::string count;
    std::string rest;
    if (!(in >> pile >> count) || (in >> rest)) return std::nullopt;
    MoveAction m;
    if (pile == "p1" || pile == "P1") {
        m.pile = Pile::One;
    } else if (pile == "p2" || pile == "P2") {
        m.pile = Pile::Two;
    } else {
        return std::nullopt;
    }
    if (count.empty() || count.size() > 19) return std::nullopt;
    for (char c : count)
        if (c < '0' || c > '9') return std::nullopt;
    m.count = std::stoull(count);
    return m;
}

}  // namespace josnim
