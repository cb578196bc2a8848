#pragma once

// Closed-form description of the positions with Grundy value s. They form
// three families:
//   N(n, m): ((2s+1)*2^n - 1 + m, m)   with n >= 0, 0 <= m <= (2s+1)*2^n - 1
//   A(k, j): (2k, j)                   with 0 <= k <= s-1, 2^(s-k-1)+k <= j <= 2^(s-k)+k-1
//   B(k, j): (2k+1, j)                 same ranges as A
// Family N covers exactly the positions with x >= 2y; A and B cover x < 2y.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "josnim/game.hpp"
#include "josnim/grundy.hpp"

namespace josnim {

struct FamilyN {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    auto operator<=>(const FamilyN&) const = default;
};

struct FamilyA {
    std::uint64_t k = 0;
    std::uint64_t j = 0;
    auto operator<=>(const FamilyA&) const = default;
};

struct FamilyB {
    std::uint64_t k = 0;
    std::uint64_t j = 0;
    auto operator<=>(const FamilyB&) const = default;
};

using Family = std::variant<FamilyN, FamilyA, FamilyB>;

class GrundyClass {
public:
    // Throws DomainError when the family parameters fall outside their ranges for s.
    GrundyClass(GrundyValue s, Family family);

    GrundyValue s() const { return s_; }
    const Family& family() const { return family_; }

    // 'N', 'A' or 'B'.
    char tag() const;
    // (n, m) for N, (k, j) for A and B.
    std::pair<std::uint64_t, std::uint64_t> params() const;

    bool operator==(const GrundyClass&) const = default;

private:
    GrundyValue s_;
    Family family_;
};

struct OddPart {
    std::uint64_t odd = 1;
    std::uint64_t n = 0;
    bool operator==(const OddPart&) const = default;
};

// d = odd * 2^n with odd odd. DomainError if d == 0.
OddPart odd_part(std::uint64_t d);

// The unique class containing p. Pure algebra; never consults the move graph.
GrundyClass classify(Position p);

GrundyValue grundy_closed(Position p);

// Position denoted by c; inverse of classify.
Position class_position(const GrundyClass& c);

// Every class with value s whose position lies in [0,x_max] x [0,y_max],
// generated from the family parameters and sorted by position.
std::vector<GrundyClass> enumerate_class_members(GrundyValue s, std::uint64_t x_max, std::uint64_t y_max);

// Positions of enumerate_class_members, sorted by (x, y).
std::vector<Position> enumerate_class(GrundyValue s, std::uint64_t x_max, std::uint64_t y_max);

std::string to_string(const GrundyClass& c);  // "s=3 A(k=1,j=3)"

}  // namespace josnim
