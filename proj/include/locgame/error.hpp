#pragma once

#include <stdexcept>
#include <string>

namespace locgame {

/// Malformed textual input (edge lists, graph6, coloring files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input exceeds the size an exhaustive routine is willing to handle.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its domain
/// (e.g. a tree strategy on a graph that is not a tree).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A strategy misbehaved during simulation: invalid probe or no termination.
class StrategyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace locgame
