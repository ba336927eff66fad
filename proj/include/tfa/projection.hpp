#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "tfa/automaton.hpp"
#include "tfa/onedim.hpp"

namespace tfa {

enum class Axis : std::uint8_t { Row, Column };

/// Projection members found within the bounds. For unary machines the
/// member words are runs of the single symbol, so lengths() is the more
/// convenient view. `complete` is cleared when the enumeration budget ran
/// out before all shapes were covered.
struct Spectrum {
    Axis axis = Axis::Row;
    std::size_t max_rows = 0;
    std::size_t max_cols = 0;
    std::set<std::string> members;
    bool complete = true;

    std::set<std::size_t> lengths() const;
};

/// One-way NFA accepting exactly the first rows of words accepted by a
/// two-way machine. The simulated head only moves right or down, so the
/// automaton tracks the head's phase: still on row one (reads are the
/// actual input), strictly below it (cell contents are guessed, rightward
/// moves consume input to keep the column count aligned), or on the
/// bottom frame. Runs that outlive the input are settled by a reachability
/// closure over the right frame, folded into the accepting set.
OneDimNFA row_projection_nfa(const Automaton2D& a);

/// row_projection_nfa(transpose(a)).
OneDimNFA col_projection_nfa(const Automaton2D& a);

/// Two-way one-dimensional NFA (stay moves allowed) whose accepted
/// lengths are the first-row lengths of the unary three-way input.
OneDimTwoWayNFA row_projection_2way_unary3w(const Automaton2D& a);

/// The fixed deterministic unary three-way machine whose column
/// projection is the composite lengths {a^m : m composite}. It zigzags
/// diagonally between the side edges and accepts at the bottom after at
/// least two sweeps, so an m x n word is accepted iff n >= 2 and m = kn
/// for some k >= 2.
Automaton2D build_composite();

/// Brute-force projection members realizable within the bounds.
Spectrum spectrum(const Automaton2D& a, Axis axis, std::size_t max_rows,
                  std::size_t max_cols, std::uint64_t budget = 10'000'000);

}  // namespace tfa
