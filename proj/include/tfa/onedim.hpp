#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tfa {

enum class Move1D : std::uint8_t { Left, Right, Stay };

char move_char(Move1D m);

/// One-dimensional two-way nondeterministic automaton over a framed tape:
/// positions 0..l+1 with '#' at both ends. Stay moves are legal only while
/// `allow_stay` is set.
struct OneDimTwoWayNFA {
    static constexpr int kBorderSym = -1;

    std::vector<std::string> states;
    std::vector<char> alphabet;
    std::map<std::pair<int, int>, std::vector<std::pair<int, Move1D>>> delta;
    int initial = 0;
    int accept = 0;
    bool allow_stay = true;

    void add_transition(int from, int symbol, int to, Move1D move);
    const std::vector<std::pair<int, Move1D>>* successors(int state,
                                                          int symbol) const;

    bool operator==(const OneDimTwoWayNFA&) const = default;
};

/// Acceptance on the unary-or-not word of the given length: reachability
/// over (state, position) configurations starting at (initial, 1), or at
/// position 0 for the empty word. For non-unary alphabets use the word
/// overload.
bool onedim_membership(const OneDimTwoWayNFA& b, std::size_t length);
bool onedim_membership(const OneDimTwoWayNFA& b, const std::string& word);

/// Removes stay moves by folding stay-chains into the following real move;
/// entering the accept state mid-chain is preserved by direct accept
/// transitions. Output has at most 2x the input's states (in fact no more
/// than the input's) and the same language; allow_stay is cleared.
OneDimTwoWayNFA eliminate_stay(const OneDimTwoWayNFA& b);

std::string serialize_onedim_twoway(const OneDimTwoWayNFA& b);

/// One-way nondeterministic automaton, possibly with epsilon entries
/// (used transiently by the projection constructions).
struct OneDimNFA {
    std::vector<std::string> states;
    std::vector<char> alphabet;
    std::map<std::pair<int, int>, std::set<int>> delta;  // (state, symbol)
    std::map<int, std::set<int>> epsilon;                // state -> states
    int initial = 0;
    std::set<int> accepts;

    void add_transition(int from, int symbol, int to);
    void add_epsilon(int from, int to);

    bool operator==(const OneDimNFA&) const = default;
};

bool nfa_membership(const OneDimNFA& b, const std::string& word);

/// Standard epsilon-closure folding; the result has no epsilon entries and
/// the same language.
OneDimNFA eliminate_epsilon(const OneDimNFA& b);

/// All words of length at most max_len accepted by b, in length-then-lex
/// order of the declared alphabet.
std::vector<std::string> nfa_language_up_to(const OneDimNFA& b,
                                            std::size_t max_len);

std::string serialize_onedim_nfa(const OneDimNFA& b);

}  // namespace tfa
