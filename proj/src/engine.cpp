#include "josnim/engine.hpp"

#include <memory>
#include <random>

#include "josnim/errors.hpp"

namespace josnim {

GameRecord play_out(Position start, const Policy& first, const Policy& second) {
    GameRecord record{start, {}, Side::Second};
    Position p = start;
    Side to_move = Side::First;
    while (!is_terminal(p)) {
        const MoveAction m = to_move == Side::First ? first(p) : second(p);
        p = apply_move(p, m);
        record.moves.push_back({to_move, m, p});
        record.winner = to_move;
        to_move = other(to_move);
    }
    return record;
}

Policy random_policy(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](Position p) {
        const std::vector<MoveAction> moves = legal_moves(p);
        if (moves.empty()) throw NoMove("no legal move from " + to_string(p));
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        return moves[pick(*rng)];
    };
}

MoveAction least_legal_move(Position p) {
    const std::vector<MoveAction> moves = legal_moves(p);
    if (moves.empty()) throw NoMove("no legal move from " + to_string(p));
    return moves.front();
}

}  // namespace josnim

namespace josnim {

SelfPlaySummary self_play(std::uint64_t games, std::uint64_t bound, std::uint64_t seed) {
    if (bound == 0 && games > 0) throw DomainError("self_play: the box [0,0]x[0,0] has no N-position");
    const GrundyTable table(bound, bound);
    const PerfectPlayer engine(table);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coord(0, bound);

    SelfPlaySummary summary;
    for (std::uint64_t g = 0; g < games; ++g) {
        Position start;
        do {
            start = {coord(rng), coord(rng)};
        } while (table.at(start) == 0);
        const GameRecord record = play_out(start, engine, random_policy(rng()));
        ++summary.games;
        if (record.winner == Side::First) {
            ++summary.engine_wins;
        } else if (!summary.first_loss) {
            summary.first_loss = start;
        }
    }
    return summary;
}

}  // namespace josnim
