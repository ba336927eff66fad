#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tfa/automaton.hpp"
#include "tfa/onedim.hpp"
#include "tfa/word.hpp"

namespace tfa {

/// Where the head of a two-way machine sits relative to the word during
/// the abstract reachability closure. Border statuses are absorbing: a
/// two-way head that has entered the right or bottom frame can only slide
/// along it toward the corner.
enum class BorderStatus : std::uint8_t {
    Interior,
    OnRightBorder,
    OnBottomBorder,
    AtCorner,
};

struct EmptinessVerdict {
    enum class Kind : std::uint8_t { Empty, NonEmpty, EmptyUpToBound };

    Kind kind = Kind::Empty;
    std::optional<Word2D> witness;            // NonEmpty, 2-D route
    std::optional<std::size_t> witness_length; // NonEmpty, unary 1-D route
    std::optional<std::size_t> bound;          // EmptyUpToBound

    bool nonempty() const { return kind == Kind::NonEmpty; }
};

/// Polynomial emptiness for two-way machines: reachability closure over
/// (state, BorderStatus) nodes. On NonEmpty the witness word is
/// reconstructed from the abstract path and re-checked by membership().
/// Throws ClassError unless a is TwoWay.
EmptinessVerdict emptiness_2w(const Automaton2D& a);

/// Restricts a unary three-way machine to its first row: downward moves
/// become stay-in-place moves, everything else is kept. The result is
/// nonempty iff the input is. Throws on non-unary or non-ThreeWay input.
OneDimTwoWayNFA to_one_dim(const Automaton2D& a);

/// Bounded emptiness for unary three-way machines via the one-dimensional
/// pipeline (to_one_dim, eliminate_stay, length search). The default bound
/// is min(2^(2n), 100000) with n the input's state count, matching the
/// doubling bound of the stay-free construction.
EmptinessVerdict emptiness_unary_3w(const Automaton2D& a,
                                    std::optional<std::size_t> bound = {});

}  // namespace tfa
