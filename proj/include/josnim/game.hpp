#pragma once

// Rules of the two-pile weighted Nim game: pile one holds stones of weight +1,
// pile two holds stones of weight -2. A move takes at least one stone from a
// single pile, and the total weight removed may not exceed floor(W / 2),
// where W is the current total weight. Normal play: whoever cannot move loses.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace josnim {

struct Position {
    std::uint64_t x = 0;  // weight +1 stones
    std::uint64_t y = 0;  // weight -2 stones

    auto operator<=>(const Position&) const = default;
};

enum class Pile : std::uint8_t { One = 1, Two = 2 };

struct MoveAction {
    Pile pile = Pile::One;
    std::uint64_t count = 0;

    // Ordered by (pile, count); PileOne sorts before PileTwo.
    auto operator<=>(const MoveAction&) const = default;
};

// x - 2y. Throws std::overflow_error if it does not fit in int64.
std::int64_t total_weight(Position p);

// floor(W / 2), rounded toward negative infinity.
std::int64_t removal_bound(Position p);

// Signed weight taken off the board by a move: +count or -2*count.
std::int64_t removed_weight(MoveAction m);

// Smallest legal pile-two removal (1 when W >= 0). Only meaningful when y is
// large enough; callers compare against y.
std::uint64_t min_pile_two_removal(Position p);

// Largest legal pile-one removal, 0 if pile one is frozen.
std::uint64_t max_pile_one_removal(Position p);

// All legal moves, sorted by (pile, count).
std::vector<MoveAction> legal_moves(Position p);

// Number of legal moves, without materializing them.
std::uint64_t legal_move_count(Position p);

bool is_legal(Position p, MoveAction m);

// Human-readable reason m is illegal at p, or nullopt if it is legal.
std::optional<std::string> illegal_reason(Position p, MoveAction m);

// Throws IllegalMove (with illegal_reason as message) when m is not legal.
Position apply_move(Position p, MoveAction m);

bool is_terminal(Position p);

// Calls fn(successor) for every legal move, in legal_moves order.
template <class Fn>
void for_each_successor(Position p, Fn&& fn) {
    const std::uint64_t max_one = max_pile_one_removal(p);
    for (std::uint64_t t = 1; t <= max_one; ++t) fn(Position{p.x - t, p.y});
    for (std::uint64_t u = min_pile_two_removal(p); u <= p.y; ++u) fn(Position{p.x, p.y - u});
}

std::string to_string(Position p);
std::string to_string(MoveAction m);  // "p1 3" / "p2 1"

// Parses "p1 <count>" / "p2 <count>" (whitespace tolerant). nullopt on malformed input.
std::optional<MoveAction> parse_move(const std::string& text);

}  // namespace josnim
