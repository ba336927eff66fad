#include "tfa/projection.hpp"

#include <deque>
#include <map>

#include "tfa/emptiness.hpp"
#include "tfa/equivalence.hpp"
#include "tfa/run.hpp"

namespace tfa {

std::set<std::size_t> Spectrum::lengths() const {
    std::set<std::size_t> out;
    for (const auto& m : members) out.insert(m.size());
    return out;
}

namespace {

const std::vector<std::pair<int, Direction>>& outs(const Automaton2D& a,
                                                   int q, int sym) {
    static const std::vector<std::pair<int, Direction>> empty;
    const auto* p = a.successors(q, sym);
    return p ? *p : empty;
}

/// Regions the simulated head can occupy once the input is exhausted:
/// in-word cells of the last column, the right frame column, the bottom
/// frame below the last column, and the bottom-right corner.
enum class Region : std::uint8_t { InWord, RightFrame, Bottom, Corner };

/// Whether a run parked in `region` in state q can still enter the accept
/// state without consuming further input. Cell reads in the last column
/// are unconstrained (the word below row one is guessed), frame reads see
/// '#'; the number of rows is a free choice, so downward closures are
/// unbounded.
bool endgame_accepts(const Automaton2D& a, int q, Region region) {
    std::set<std::pair<int, Region>> seen;
    std::deque<std::pair<int, Region>> queue;
    auto push = [&](int state, Region r) {
        if (seen.insert({state, r}).second) queue.push_back({state, r});
    };
    push(q, region);
    while (!queue.empty()) {
        auto [u, r] = queue.front();
        queue.pop_front();
        if (u == a.accept) return true;
        switch (r) {
            case Region::InWord:
                for (std::size_t g = 0; g < a.alphabet.size(); ++g) {
                    for (const auto& [v, dir] :
                         outs(a, u, static_cast<int>(g))) {
                        if (dir == Direction::D) {
                            push(v, Region::InWord);
                            push(v, Region::Bottom);
                        } else if (dir == Direction::R) {
                            push(v, Region::RightFrame);
                        }
                    }
                }
                break;
            case Region::RightFrame:
                for (const auto& [v, dir] :
                     outs(a, u, Automaton2D::kBorderSym)) {
                    if (dir == Direction::D) {
                        push(v, Region::RightFrame);
                        push(v, Region::Corner);
                    }
                }
                break;
            case Region::Bottom:
                for (const auto& [v, dir] :
                     outs(a, u, Automaton2D::kBorderSym)) {
                    if (dir == Direction::R) push(v, Region::Corner);
                }
                break;
            case Region::Corner:
                break;
        }
    }
    return false;
}

/// States reachable from p by in-word downward moves (any guessed reads),
/// including p itself.
std::set<int> down_closure(const Automaton2D& a, int p) {
    std::set<int> closure{p};
    std::deque<int> queue{p};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (std::size_t g = 0; g < a.alphabet.size(); ++g) {
            for (const auto& [v, dir] : outs(a, u, static_cast<int>(g))) {
                if (dir == Direction::D && closure.insert(v).second) {
                    queue.push_back(v);
                }
            }
        }
    }
    return closure;
}

}  // namespace

OneDimNFA row_projection_nfa(const Automaton2D& a) {
    if (a.cls.ways != Ways::TwoWay) {
        throw ClassError("row projection NFA requires a two-way automaton");
    }
    OneDimNFA b;
    b.alphabet = a.alphabet;
    b.states.push_back("start");
    b.states.push_back("sink");
    b.initial = 0;
    const int kStart = 0, kSink = 1;
    b.accepts.insert(kSink);
    for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
        b.add_transition(kSink, static_cast<int>(s), kSink);
    }
    if (a.initial == a.accept) {
        // Everything is accepted, so the projection is every nonempty word.
        for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
            b.add_transition(kStart, static_cast<int>(s), kSink);
        }
        return b;
    }

    const char* phase_tag[3] = {"row1", "below", "bottom"};
    enum { kRow1 = 0, kBelow = 1, kBottom = 2 };
    for (const auto& name : a.states) {
        for (int phase = 0; phase < 3; ++phase) {
            b.states.push_back(name + "|" + phase_tag[phase]);
        }
    }
    auto id = [&](int q, int phase) { return 2 + q * 3 + phase; };
    auto add = [&](int from, int sym, int q, int phase) {
        b.add_transition(from, sym, q == a.accept ? kSink : id(q, phase));
    };
    // Entering the region below row one: the head may sink by any number
    // of downward steps (guessed reads) before the next rightward move,
    // and may land on the bottom frame at any point.
    auto add_below_entry = [&](int from, int sym, int p, bool direct_bottom) {
        std::set<int> closure = down_closure(a, p);
        for (int u : closure) add(from, sym, u, kBelow);
        std::set<int> dropped;
        if (direct_bottom) dropped.insert(p);
        for (int u : closure) {
            for (std::size_t g = 0; g < a.alphabet.size(); ++g) {
                for (const auto& [v, dir] :
                     outs(a, u, static_cast<int>(g))) {
                    if (dir == Direction::D) dropped.insert(v);
                }
            }
        }
        for (int u : dropped) add(from, sym, u, kBottom);
    };
    auto emit_row1 = [&](int from, int q) {
        for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
            int sym = static_cast<int>(s);
            for (const auto& [p, dir] : outs(a, q, sym)) {
                if (dir == Direction::R) {
                    add(from, sym, p, kRow1);
                } else if (dir == Direction::D) {
                    add_below_entry(from, sym, p, true);
                }
            }
        }
    };
    for (int q = 0; q < static_cast<int>(a.states.size()); ++q) {
        emit_row1(id(q, kRow1), q);
        for (std::size_t g = 0; g < a.alphabet.size(); ++g) {
            for (const auto& [p, dir] : outs(a, q, static_cast<int>(g))) {
                if (dir != Direction::R) continue;
                // The rightward move advances the column, which costs one
                // input symbol; the guessed read makes it legal under any.
                for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
                    add_below_entry(id(q, kBelow), static_cast<int>(s), p,
                                    false);
                }
            }
        }
        for (const auto& [p, dir] : outs(a, q, Automaton2D::kBorderSym)) {
            if (dir != Direction::R) continue;
            for (std::size_t s = 0; s < a.alphabet.size(); ++s) {
                add(id(q, kBottom), static_cast<int>(s), p, kBottom);
            }
        }
        if (endgame_accepts(a, q, Region::RightFrame)) {
            b.accepts.insert(id(q, kRow1));
        }
        if (endgame_accepts(a, q, Region::InWord)) {
            b.accepts.insert(id(q, kBelow));
        }
        if (endgame_accepts(a, q, Region::Bottom)) {
            b.accepts.insert(id(q, kBottom));
        }
    }
    emit_row1(kStart, a.initial);
    return eliminate_epsilon(b);
}

OneDimNFA col_projection_nfa(const Automaton2D& a) {
    return row_projection_nfa(transpose(a));
}

OneDimTwoWayNFA row_projection_2way_unary3w(const Automaton2D& a) {
    return to_one_dim(a);
}

Automaton2D build_composite() {
    Automaton2D c;
    c.cls = {Ways::ThreeWay, Mode::Deterministic};
    c.alphabet = {'a'};
    c.states = {"q_start", "q_ncheck", "q_back", "dr0_d", "dr0_r", "pR0a",
                "pR0b",    "dl_d",     "dl_l",   "pL1",   "pL2",   "dr_d",
                "dr_r",    "pR1",      "pR2",    "q_acc"};
    auto s = [&](const char* name) { return c.state_index(name); };
    c.initial = s("q_start");
    c.accept = s("q_acc");
    const int A = 0, H = Automaton2D::kBorderSym;
    auto t = [&](const char* from, int sym, const char* to, Direction d) {
        c.add_transition(s(from), sym, s(to), d);
    };
    // n >= 2 check on row one.
    t("q_start", A, "q_ncheck", Direction::R);
    t("q_ncheck", A, "q_back", Direction::L);
    t("q_back", A, "dr0_d", Direction::R);
    // First down-right sweep; its edge probe must not accept (that would
    // admit a single sweep, i.e. m = n).
    t("dr0_d", A, "dr0_r", Direction::D);
    t("dr0_d", H, "pR0a", Direction::D);
    t("dr0_r", A, "dr0_d", Direction::R);
    t("pR0a", H, "pR0b", Direction::L);
    t("pR0b", A, "dl_d", Direction::L);
    // Down-left sweeps, leftward move first.
    t("dl_d", A, "dl_l", Direction::D);
    t("dl_d", H, "pL1", Direction::D);
    t("dl_l", A, "dl_d", Direction::L);
    // Left-edge probe: step down along the frame, peek right into column
    // one; '#' there means the bottom row, reached after >= 2 sweeps.
    t("pL1", H, "pL2", Direction::R);
    t("pL2", A, "dr_d", Direction::R);
    t("pL2", H, "q_acc", Direction::R);
    // Later down-right sweeps, rightward move first.
    t("dr_d", A, "dr_r", Direction::D);
    t("dr_d", H, "pR1", Direction::D);
    t("dr_r", A, "dr_d", Direction::R);
    // Right-edge probe, mirror of the left one.
    t("pR1", H, "pR2", Direction::L);
    t("pR2", A, "dl_d", Direction::L);
    t("pR2", H, "q_acc", Direction::R);
    return c;
}

Spectrum spectrum(const Automaton2D& a, Axis axis, std::size_t max_rows,
                  std::size_t max_cols, std::uint64_t budget) {
    if (max_rows == 0 || max_cols == 0) {
        throw std::invalid_argument("bounds must be at least 1");
    }
    Spectrum sp;
    sp.axis = axis;
    sp.max_rows = max_rows;
    sp.max_cols = max_cols;
    sp.complete = enumerate_words(
        a.alphabet, max_rows, max_cols, budget, [&](const Word2D& w) {
            if (membership(a, w) == Verdict::Accept) {
                std::string member;
                if (axis == Axis::Row) {
                    for (std::size_t c = 1; c <= w.cols(); ++c) {
                        member += w.at(1, static_cast<long>(c));
                    }
                } else {
                    for (std::size_t r = 1; r <= w.rows(); ++r) {
                        member += w.at(static_cast<long>(r), 1);
                    }
                }
                sp.members.insert(member);
            }
            return true;
        });
    return sp;
}

}  // namespace tfa
