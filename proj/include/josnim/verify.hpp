#pragma once

// Exhaustive finite-range checks of the game's closed form, the move lemmas,
// and the Josephus identities. Each check returns a VerificationReport; the
// first counterexample is the minimal one in its key order, so reports do not
// depend on how the sweep was split across threads.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "josnim/grundy.hpp"

namespace josnim {

struct ParamRange {
    std::string name;
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const ParamRange&) const = default;
};

struct Counterexample {
    std::vector<std::uint64_t> key;  // lexicographic order used when merging
    std::vector<std::pair<std::string, std::uint64_t>> inputs;
    std::string expected;
    std::string actual;
    bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
    std::string check_name;
    std::vector<ParamRange> range;
    std::uint64_t cases_checked = 0;
    bool passed = true;
    std::optional<Counterexample> first_counterexample;
    std::chrono::nanoseconds elapsed{0};
    // Extra coverage tallies, e.g. which branch of a case split was exercised.
    std::map<std::string, std::uint64_t> counters;
};

// Equal in everything but elapsed time.
bool same_outcome(const VerificationReport& a, const VerificationReport& b);

struct SweepOptions {
    unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
};

// grundy_closed(p) == brute-force Grundy value, for every p in the box.
VerificationReport verify_grundy_equivalence(std::uint64_t x_max, std::uint64_t y_max, SweepOptions opts = {});
VerificationReport verify_grundy_equivalence(const GrundyTable& oracle, SweepOptions opts = {});

// The enumerations for s <= s_max are pairwise disjoint, each box position lies
// in the enumeration of its class (or none when its value exceeds s_max), and
// classify / class_position are mutually inverse.
VerificationReport verify_partition(std::uint64_t x_max, std::uint64_t y_max, std::uint64_t s_max,
                                    SweepOptions opts = {});

// For every p in the box with value s: no successor has value s, and every
// s' < s is the value of some successor.
VerificationReport verify_move_lemmas(std::uint64_t x_max, std::uint64_t y_max, SweepOptions opts = {});
VerificationReport verify_move_lemmas(const GrundyTable& oracle, SweepOptions opts = {});

// F_s(x+1) == 2y+1 for every family-N position (x, y) with x <= x_max.
VerificationReport verify_correspondence(std::uint64_t x_max, SweepOptions opts = {});

// Simulated, closed-form and recursive F_s(v) agree for 1 <= v <= v_max,
// 0 <= s <= v-1; the halving identities hold for v <= v_max/2.
VerificationReport verify_josephus_forms(std::uint64_t v_max, SweepOptions opts = {});

// Inclusion and bound properties of families A and B for s <= s_max.
// Work grows like 2^s_max.
VerificationReport verify_lemma_inclusions(std::uint64_t s_max, SweepOptions opts = {});

std::string to_text(const VerificationReport& r);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace josnim
