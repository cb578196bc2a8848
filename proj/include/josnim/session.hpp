#pragma once

// Interactive human-versus-engine session over line-based streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "josnim/game.hpp"

namespace josnim {

enum class Actor : std::uint8_t { Human, Engine };

std::string to_string(Actor a);

struct TranscriptEntry {
    Actor actor;
    MoveAction move;
    Position result;
    bool operator==(const TranscriptEntry&) const = default;
};

struct SessionTranscript {
    Position initial;
    Actor first_to_move = Actor::Human;
    std::vector<TranscriptEntry> moves;
    // Actor of the final move; when no move was possible at all, the actor
    // who did not have to move. Empty when the session was aborted.
    std::optional<Actor> winner;
    bool aborted = false;
};

struct SessionConfig {
    Position start;
    bool human_first = true;
    bool hints = false;  // print Grundy value and winning moves before each human turn
};

// "(x,y) W=w"
std::string describe(Position p);

// Runs a session to completion or until `in` is exhausted (aborted = true).
// Illegal or malformed input is rejected with a reason and re-prompted.
SessionTranscript play_session(const SessionConfig& config, std::istream& in, std::ostream& out);

// Replays the transcript through the game rules. Returns a description of the
// first inconsistency, or nullopt if every move was legal, every recorded
// position matches, and the winner is the actor of the final move.
std::optional<std::string> replay_mismatch(const SessionTranscript& t);

nlohmann::json to_json(const SessionTranscript& t);

}  // namespace josnim
