#include "josnim/session.hpp"

#include <functional>
#include <istream>
#include <memory>
#include <ostream>

#include "josnim/grundy.hpp"

namespace josnim {

namespace {

// Boxes up to this many cells get a dense table; larger starts fall back to
// the lazy cache.
constexpr std::uint64_t dense_table_limit = 4'000'000;

std::function<GrundyValue(Position)> make_oracle(Position start) {
    const long double cells = (static_cast<long double>(start.x) + 1) * (static_cast<long double>(start.y) + 1);
    if (cells <= dense_table_limit) {
        auto table = std::make_shared<const GrundyTable>(start.x, start.y);
        return [table](Position p) { return table->at(p); };
    }
    auto cache = std::make_shared<GrundyCache>();
    return [cache](Position p) { return cache->value(p); };
}

Actor other(Actor a) { return a == Actor::Human ? Actor::Engine : Actor::Human; }

std::string join_moves(const std::vector<MoveAction>& moves) {
    std::string s;
    for (const MoveAction& m : moves) {
        if (!s.empty()) s += ", ";
        s += to_string(m);
    }
    return s;
}

}  // namespace

std::string to_string(Actor a) { return a == Actor::Human ? "human" : "engine"; }

std::string describe(Position p) { return to_string(p) + " W=" + std::to_string(total_weight(p)); }

SessionTranscript play_session(const SessionConfig& config, std::istream& in, std::ostream& out) {
    SessionTranscript t;
    t.initial = config.start;
    t.first_to_move = config.human_first ? Actor::Human : Actor::Engine;

    const auto oracle = make_oracle(config.start);
    Position p = config.start;
    Actor to_move = t.first_to_move;
    out << "start " << describe(p) << ", " << to_string(to_move) << " moves first\n";

    while (true) {
        if (is_terminal(p)) {
            t.winner = other(to_move);
            out << to_string(to_move) << " has no legal move at " << describe(p) << "; " << to_string(*t.winner)
                << " wins\n";
            return t;
        }

        MoveAction move;
        if (to_move == Actor::Engine) {
            move = best_move(p, oracle);
        } else {
            if (config.hints) {
                const GrundyValue g = oracle(p);
                out << "hint: grundy=" << g;
                if (g == 0)
                    out << " (P-position, no winning move)\n";
                else
                    out << " winning: " << join_moves(winning_moves(p, oracle)) << "\n";
            }
            while (true) {
                out << describe(p) << " bound=" << removal_bound(p) << " your move (p1 <n> | p2 <n>)> " << std::flush;
                std::string line;
                if (!std::getline(in, line)) {
                    out << "\ninput closed; session aborted\n";
                    t.aborted = true;
                    return t;
                }
                const auto parsed = parse_move(line);
                if (!parsed) {
                    out << "invalid input: expected 'p1 <count>' or 'p2 <count>'\n";
                    continue;
                }
                if (auto why = illegal_reason(p, *parsed)) {
                    out << "illegal move: " << *why << "\n";
                    continue;
                }
                move = *parsed;
                break;
            }
        }

        p = apply_move(p, move);
        t.moves.push_back({to_move, move, p});
        out << to_string(to_move) << " plays " << to_string(move) << " -> " << describe(p) << "\n";
        to_move = other(to_move);
    }
}

std::optional<std::string> replay_mismatch(const SessionTranscript& t) {
    Position p = t.initial;
    Actor expected_actor = t.first_to_move;
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        const TranscriptEntry& e = t.moves[i];
        const std::string where = "move " + std::to_string(i + 1) + ": ";
        if (e.actor != expected_actor) return where + "out-of-turn actor " + to_string(e.actor);
        if (auto why = illegal_reason(p, e.move)) return where + *why;
        p = apply_move(p, e.move);
        if (p != e.result) return where + "recorded " + to_string(e.result) + " but rules give " + to_string(p);
        expected_actor = other(expected_actor);
    }
    if (t.aborted) return t.winner ? std::optional<std::string>("aborted session names a winner") : std::nullopt;
    if (!is_terminal(p)) return "completed session ends at non-terminal " + to_string(p);
    if (t.winner != other(expected_actor)) return std::string("winner is not the actor of the final move");
    return std::nullopt;
}

nlohmann::json to_json(const SessionTranscript& t) {
    nlohmann::json moves = nlohmann::json::array();
    for (const TranscriptEntry& e : t.moves)
        moves.push_back({{"actor", to_string(e.actor)},
                         {"move", to_string(e.move)},
                         {"result", {e.result.x, e.result.y}}});
    return {
        {"initial", {t.initial.x, t.initial.y}},
        {"first_to_move", to_string(t.first_to_move)},
        {"moves", moves},
        {"winner", t.winner ? nlohmann::json(to_string(*t.winner)) : nlohmann::json(nullptr)},
        {"aborted", t.aborted},
    };
}

}  // namespace josnim
