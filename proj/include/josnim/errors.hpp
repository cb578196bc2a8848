#pragma once

#include <stdexcept>
#include <string>

namespace josnim {

// Argument outside the mathematical domain of an operation (s >= v, d < 1,
// class parameters outside their window, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class IllegalMove : public std::invalid_argument {
public:
    explicit IllegalMove(const std::string& what) : std::invalid_argument(what) {}
};

// Asked for a move from a terminal position.
class NoMove : public std::logic_error {
public:
    explicit NoMove(const std::string& what) : std::logic_error(what) {}
};

}  // namespace josnim
