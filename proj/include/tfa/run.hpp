#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfa/automaton.hpp"
#include "tfa/word.hpp"

namespace tfa {

/// Head position plus control state. Coordinates live in the framed grid
/// of the word being run: 0..rows+1 and 0..cols+1.
struct Configuration {
    int state = 0;
    long row = 1;
    long col = 1;

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;
};

/// Successor configurations of c under one delta step. Moves that would
/// leave the one-cell frame are dropped; an undefined delta entry yields
/// the empty set.
std::vector<Configuration> step(const Automaton2D& a, const Word2D& w,
                                const Configuration& c);

enum class Verdict : std::uint8_t { Accept, Reject };

/// Decides acceptance by forward reachability over the configuration
/// graph; terminates on every input, looping four-way machines included.
/// Throws std::invalid_argument if w uses symbols outside a's alphabet.
Verdict membership(const Automaton2D& a, const Word2D& w);

enum class HaltCause : std::uint8_t {
    Accepted,
    UndefinedTransition,
    FrameExit,
    LoopDetected,
};

/// Deterministic run: the configuration sequence from (initial, 1, 1)
/// until acceptance or a halt. `cause` explains the end of the trace;
/// on LoopDetected, `loop_start` indexes the first repeat.
struct TraceResult {
    std::vector<Configuration> trace;
    HaltCause cause = HaltCause::Accepted;
    std::optional<std::size_t> loop_start;

    bool accepted() const { return cause == HaltCause::Accepted; }
};

/// Throws ClassError on nondeterministic input.
TraceResult trace(const Automaton2D& a, const Word2D& w);

std::string format_configuration(const Automaton2D& a, const Configuration& c);

}  // namespace tfa
