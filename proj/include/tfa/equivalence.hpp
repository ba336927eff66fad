#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "tfa/automaton.hpp"
#include "tfa/run.hpp"
#include "tfa/word.hpp"

namespace tfa {

/// Dimension bound guaranteeing a small witness in the symmetric
/// difference of two two-way deterministic languages:
///   z = m * n * |Sigma|^2 + 1,  f(z) = z^2 * (z^2 + z - 1).
struct PumpingBound {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t sigma = 0;
    std::uint64_t z = 0;
    std::uint64_t f_z = 0;
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what)
        : std::runtime_error(what) {}
};

/// Exact overflow-checked evaluation of the two formulas. Throws
/// OverflowError instead of wrapping, and std::invalid_argument on
/// alphabet mismatch.
PumpingBound pumping_bound(const Automaton2D& a, const Automaton2D& b);

enum class DifferenceSide : std::uint8_t { Symmetric, AminusB };

struct EquivalenceVerdict {
    enum class Kind : std::uint8_t {
        Equivalent,
        Counterexample,
        EquivalentUpToBound,
        Infeasible,
    };

    Kind kind = Kind::EquivalentUpToBound;
    std::optional<Word2D> witness;
    bool witness_accepted_by_a = false;
    bool witness_accepted_by_b = false;
    std::size_t max_rows = 0;
    std::size_t max_cols = 0;
    /// For Infeasible: the full pumping bound that was not exhausted.
    std::optional<std::uint64_t> required_bound;
};

/// Enumerates every word with rows <= max_rows, cols <= max_cols in a
/// fixed order (area, then rows, then lexicographic cell content by symbol
/// declaration order) and returns the first one in the requested
/// difference. The guard aborts with Infeasible once the number of
/// membership calls would exceed `budget`.
EquivalenceVerdict bounded_difference(const Automaton2D& a,
                                      const Automaton2D& b,
                                      std::size_t max_rows,
                                      std::size_t max_cols,
                                      DifferenceSide side,
                                      std::uint64_t budget = 10'000'000);

/// Exact equivalence for deterministic two-way machines by exhausting the
/// pumping bound f(z). Equivalent is returned only when the full bound was
/// searched; a tripped budget yields Infeasible carrying f(z).
EquivalenceVerdict decide_equivalence(const Automaton2D& a,
                                      const Automaton2D& b,
                                      std::uint64_t budget = 10'000'000);

/// Distinguishability-based state reduction for deterministic two-way
/// machines. The result never has more states, accepts the same words,
/// and is a fixed point of the procedure; it need not be canonical.
Automaton2D minimize(const Automaton2D& a);

/// decide_equivalence against the accept-everything machine over the same
/// alphabet.
EquivalenceVerdict universality(const Automaton2D& a,
                                std::uint64_t budget = 10'000'000);

/// Fixed-order enumeration of all words over `alphabet` within the given
/// bounds; stops early when the callback returns false. Returns false iff
/// the enumeration count would exceed `budget`.
bool enumerate_words(const std::vector<char>& alphabet, std::size_t max_rows,
                     std::size_t max_cols, std::uint64_t budget,
                     const std::function<bool(const Word2D&)>& visit);

}  // namespace tfa
