#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfa/word.hpp"

namespace tfa {

enum class Direction : std::uint8_t { U, D, L, R };

char direction_char(Direction d);
std::optional<Direction> direction_from_char(char c);

enum class Ways : std::uint8_t { FourWay, ThreeWay, TwoWay };
enum class Mode : std::uint8_t { Deterministic, Nondeterministic };

struct AutomatonClass {
    Ways ways = Ways::FourWay;
    Mode mode = Mode::Nondeterministic;

    bool permits(Direction d) const;
    bool deterministic() const { return mode == Mode::Deterministic; }

    /// e.g. "2NFA-2W"
    std::string tag() const;
    static std::optional<AutomatonClass> from_tag(const std::string& tag);

    bool operator==(const AutomatonClass&) const = default;
};

/// A two-dimensional finite automaton. States are referenced by index into
/// `states`; symbols by index into `alphabet`, with `kBorderSym` standing
/// for the frame marker '#'. `delta` is partial: missing entries mean the
/// machine halts (rejecting) on that read.
struct Automaton2D {
    /// Symbol index reserved for '#'.
    static constexpr int kBorderSym = -1;

    std::vector<std::string> states;   // declaration order
    std::vector<char> alphabet;        // declaration order, '#' excluded
    AutomatonClass cls;
    /// (state, symbol index or kBorderSym) -> successor set.
    std::map<std::pair<int, int>, std::vector<std::pair<int, Direction>>> delta;
    int initial = 0;
    int accept = 0;

    int state_index(const std::string& id) const;
    int symbol_index(char symbol) const;  // kBorderSym for '#', -2 if unknown

    const std::vector<std::pair<int, Direction>>* successors(int state,
                                                             int symbol) const;

    void add_transition(int from, int symbol, int to, Direction dir);

    bool operator==(const Automaton2D&) const = default;
};

/// One invariant violation, human-readable.
struct Violation {
    std::string message;
};

/// Returns every invariant violation; empty iff the automaton is valid.
std::vector<Violation> validate(const Automaton2D& a);

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ClassError : std::runtime_error {
    explicit ClassError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses the line-oriented automaton file format. Throws ParseError with a
/// line number on syntax errors and on any validation failure.
Automaton2D parse_automaton(const std::string& text);

std::string serialize_automaton(const Automaton2D& a);

/// Swaps D<->R (and U<->L for four-way machines); the transposed machine
/// accepts exactly the transposes of the original's words. Three-way input
/// is rejected with ClassError.
Automaton2D transpose(const Automaton2D& a);

Word2D transpose_word(const Word2D& w);

///// The one-state machine with initial = accept: accepts every word over
/// the given alphabet.
Automaton2D accept_everything(const std::vector<char>& alphabet,
                              AutomatonClass cls);

}  // namespace tfa
