#include <random>
#include <sstream>

#include "doctest.h"

#include "josnim/grundy.hpp"
#include "josnim/session.hpp"

using namespace josnim;

namespace {

struct Run {
    SessionTranscript transcript;
    std::string output;
};

Run play(SessionConfig config, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out;
    SessionTranscript t = play_session(config, in, out);
    return {std::move(t), out.str()};
}

}  // namespace

TEST_CASE("session from a terminal start ends immediately") {
    const Run r = play({{0, 0}, true, false}, "");
    CHECK(r.transcript.moves.empty());
    CHECK(r.transcript.winner == Actor::Engine);
    CHECK_FALSE(r.transcript.aborted);
    CHECK(r.output.find("human has no legal move") != std::string::npos);
    CHECK_FALSE(replay_mismatch(r.transcript).has_value());

    const Run e = play({{0, 0}, false, false}, "");
    CHECK(e.transcript.winner == Actor::Human);
}

TEST_CASE("engine converts after a human mistake") {
    const Run r = play({{4, 0}, true, false}, "p1 2\n");
    REQUIRE(r.transcript.moves.size() == 2);
    CHECK(r.transcript.moves[0] == TranscriptEntry{Actor::Human, {Pile::One, 2}, {2, 0}});
    CHECK(r.transcript.moves[1] == TranscriptEntry{Actor::Engine, {Pile::One, 1}, {1, 0}});
    CHECK(r.transcript.winner == Actor::Engine);
    CHECK(r.output.find("engine plays p1 1 -> (1,0) W=1") != std::string::npos);
    CHECK_FALSE(replay_mismatch(r.transcript).has_value());
}

TEST_CASE("engine moving first from (2,3) reaches the P-position (2,1)") {
    const Run r = play({{2, 3}, false, false}, "p2 1\n");
    REQUIRE(r.transcript.moves.size() >= 1);
    CHECK(r.transcript.moves[0] == TranscriptEntry{Actor::Engine, {Pile::Two, 2}, {2, 1}});
    CHECK(r.transcript.winner == Actor::Engine);
    CHECK_FALSE(replay_mismatch(r.transcript).has_value());
}

TEST_CASE("illegal and malformed input is rejected and re-prompted") {
    const Run r = play({{0, 5}, true, false}, "hello\np1 1\np2 9\np2 1\np2 3\n");
    CHECK(r.output.find("invalid input") != std::string::npos);
    CHECK(r.output.find("pile 1 is empty") != std::string::npos);
    CHECK(r.output.find("holds only 5") != std::string::npos);
    CHECK(r.output.find("minimum forced removal not met") != std::string::npos);
    REQUIRE_FALSE(r.transcript.moves.empty());
    CHECK(r.transcript.moves[0].move == MoveAction{Pile::Two, 3});
    CHECK_FALSE(replay_mismatch(r.transcript).has_value());
}

TEST_CASE("bound violations are reported") {
    const Run r = play({{9, 0}, true, false}, "p1 5\np1 4\n");
    CHECK(r.output.find("removal bound violated") != std::string::npos);
    CHECK(r.transcript.moves[0].move == MoveAction{Pile::One, 4});
}

TEST_CASE("closed input aborts with a partial transcript") {
    const Run r = play({{10, 3}, true, false}, "p2 1\n");
    CHECK(r.transcript.aborted);
    CHECK_FALSE(r.transcript.winner.has_value());
    CHECK(r.transcript.moves.size() == 2);
    CHECK_FALSE(replay_mismatch(r.transcript).has_value());
    const auto j = to_json(r.transcript);
    CHECK(j["aborted"] == true);
    CHECK(j["winner"].is_null());
    CHECK(j["moves"].size() == 2);
}

TEST_CASE("hints show oracle values") {
    const Run r = play({{2, 3}, true, true}, "p2 2\n");
    CHECK(r.output.find("hint: grundy=3 winning: p2 2") != std::string::npos);
    const Run p = play({{2, 1}, true, true}, "p2 1\n");
    CHECK(p.output.find("hint: grundy=0 (P-position") != std::string::npos);
}

TEST_CASE("tampered transcripts fail replay") {
    Run r = play({{4, 0}, true, false}, "p1 2\n");
    SessionTranscript t = r.transcript;
    t.moves[1].result = {0, 0};
    CHECK(replay_mismatch(t).has_value());

    t = r.transcript;
    t.winner = Actor::Human;
    CHECK(replay_mismatch(t).has_value());

    t = r.transcript;
    t.moves[0].move = {Pile::One, 3};
    CHECK(replay_mismatch(t).has_value());
}

TEST_CASE("random human against the engine: replayable, engine wins from N-positions") {
    const GrundyTable table(24, 24);
    std::mt19937_64 rng(2024);
    for (int game = 0; game < 200; ++game) {
        const Position start{rng() % 25, rng() % 25};
        // Random human; illegal lines are rejected and the next one is tried.
        std::string script;
        for (int i = 0; i < 400; ++i)
            script += std::string(rng() % 2 ? "p1 " : "p2 ") + std::to_string(1 + rng() % 6) + "\n";
        const bool human_first = rng() % 2 == 0;
        const Run r = play({start, human_first, game % 3 == 0}, script);
        if (r.transcript.aborted) continue;
        REQUIRE_FALSE(replay_mismatch(r.transcript).has_value());
        // Engine moving first from an N-position must win.
        if (!human_first && table.at(start) != 0) CHECK(r.transcript.winner == Actor::Engine);
        // Whenever the engine faced an N-position, it wins.
        Position p = start;
        for (const TranscriptEntry& e : r.transcript.moves) {
            if (e.actor == Actor::Engine && table.at(p) != 0) {
                CHECK(r.transcript.winner == Actor::Engine);
                break;
            }
            p = e.result;
        }
    }
}
