#pragma once

// Perfect-play engine and game playouts between move policies.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "josnim/game.hpp"
#include "josnim/grundy.hpp"

namespace josnim {

using Policy = std::function<MoveAction(Position)>;

enum class Side : std::uint8_t { First, Second };

constexpr Side other(Side s) { return s == Side::First ? Side::Second : Side::First; }

struct PlayedMove {
    Side actor;
    MoveAction move;
    Position result;
};

struct GameRecord {
    Position start;
    std::vector<PlayedMove> moves;
    // Side that made the final move. With no moves at all the first side
    // could not move, so the second side wins.
    Side winner = Side::Second;
};

// Plays to completion. Every policy move is validated through apply_move.
GameRecord play_out(Position start, const Policy& first, const Policy& second);

// best_move over a table; positions must stay inside the table's box, which
// holds for any game started inside it.
class PerfectPlayer {
public:
    explicit PerfectPlayer(const GrundyTable& table) : table_(&table) {}
    MoveAction operator()(Position p) const { return best_move(p, *table_); }

private:
    const GrundyTable* table_;
};

// Uniformly random legal move from a seeded mt19937_64.
Policy random_policy(std::uint64_t seed);

// Always plays the lexicographically least legal move.
MoveAction least_legal_move(Position p);

}  // namespace josnim

namespace josnim {

struct SelfPlaySummary {
    std::uint64_t games = 0;
    std::uint64_t engine_wins = 0;
    std::optional<Position> first_loss;  // start position of the first game the engine lost
};

// Plays `games` games from start positions drawn uniformly among N-positions
// with x, y <= bound. The engine moves first; the opponent plays uniformly
// random legal moves. Fully determined by seed.
SelfPlaySummary self_play(std::uint64_t games, std::uint64_t bound, std::uint64_t seed);

}  // namespace josnim
