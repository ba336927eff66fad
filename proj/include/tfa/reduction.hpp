#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfa/automaton.hpp"
#include "tfa/word.hpp"

namespace tfa {

enum class HeadMove : std::uint8_t { Left, Right };

struct LBARule {
    int state = 0;
    int symbol = 0;
    HeadMove move = HeadMove::Right;

    bool operator==(const LBARule&) const = default;
};

/// Deterministic linear-bounded automaton. Symbols are indices into the
/// tape alphabet `gamma`; `input` lists the subset usable on initial
/// tapes. Delta is partial: a missing entry halts the machine.
struct LBASpec {
    std::vector<std::string> states;
    std::vector<char> gamma;
    std::vector<char> input;
    std::map<std::pair<int, int>, LBARule> delta;
    int initial = 0;
    int accept = 0;

    int state_index(const std::string& id) const;
    int gamma_index(char symbol) const;
    bool is_input_symbol(char symbol) const;
};

/// Structural checks: nonempty state set, input within gamma, initial
/// distinct from accept, no rules out of accept, rule indices in range.
/// Throws std::invalid_argument on the first violation.
void validate_lba(const LBASpec& m);

LBASpec parse_lba(const std::string& text);
std::string serialize_lba(const LBASpec& m);

struct LBAConfig {
    int state = 0;
    int head = 1;  // 1-based tape position
    std::vector<int> tape;

    bool operator==(const LBAConfig&) const = default;
};

/// The unique successor configuration, or nullopt when delta is undefined
/// or the head would leave the tape. Throws std::invalid_argument when
/// called on an accepting configuration.
std::optional<LBAConfig> lba_step(const LBASpec& m, const LBAConfig& c);

/// One component of a pair symbol: a tape symbol, state-marked when the
/// head scans it (state = -1 otherwise).
struct Comp {
    int sym = 0;
    int state = -1;

    auto operator<=>(const Comp&) const = default;
};

struct PairSymbol {
    Comp first, second;

    auto operator<=>(const PairSymbol&) const = default;
};

using PairRow = std::vector<PairSymbol>;

/// The w-1 overlapping pairs of a width-w configuration. Throws
/// std::invalid_argument below width 2.
PairRow double_encode(const LBAConfig& c);

struct MalformedReport {
    std::size_t position = 0;  // 1-based pair index
    std::string reason;
};

struct DecodeResult {
    std::optional<LBAConfig> config;
    std::optional<MalformedReport> report;

    bool ok() const { return config.has_value(); }
};

/// Inverse of double_encode: rejects broken stitching and rows without
/// exactly one state mark, reporting the first offending pair.
DecodeResult decode(const PairRow& row);

/// Character codec for pair symbols. Every pair over Gamma u (Gamma x Q)
/// maps to one printable character (excluding '#'), which requires
/// |Gamma| * (1 + |Q|) <= 9; pair_alphabet throws otherwise.
std::vector<char> pair_alphabet(const LBASpec& m);
char pair_char(const LBASpec& m, const PairSymbol& p);
std::optional<PairSymbol> pair_from_char(const LBASpec& m, char c);

Word2D table_to_word(const LBASpec& m, const std::vector<PairRow>& rows);
/// nullopt when some character is not a pair symbol of m.
std::optional<std::vector<PairRow>> word_to_rows(const LBASpec& m,
                                                 const Word2D& w);

enum class TableStatus : std::uint8_t { Accepted, Rejected, BudgetExhausted };

struct TableResult {
    TableStatus status = TableStatus::Rejected;
    std::optional<Word2D> table;
    std::size_t steps = 0;
};

/// Runs m on the input word (length >= 2, symbols from the input
/// alphabet) and double-encodes the whole run when it accepts within the
/// step budget.
TableResult accepting_table(const LBASpec& m, const std::string& word,
                            std::size_t budget = 10'000);

/// Brute-force oracle: every row decodes, row 1 is the initial
/// configuration of some input word, the last row is accepting, and each
/// consecutive row pair is one lba_step apart.
bool is_valid_table(const LBASpec& m, const Word2D& t);

/// Parses "a b c_q d" style configuration text: space-separated tape
/// symbols, the scanned one subscripted with _state.
LBAConfig parse_lba_config(const LBASpec& m, const std::string& text);
std::string format_lba_config(const LBASpec& m, const LBAConfig& c);

/// The two-way nondeterministic two-dimensional automaton over m's pair
/// alphabet that accepts a word iff it is not a valid computation table
/// of m. Nondeterministic branches look for a malformed row, a bad first
/// row, a non-final last row, or a vertical window outside the local
/// step-consistency relation of m.
Automaton2D build_checker(const LBASpec& m);

}  // namespace tfa
