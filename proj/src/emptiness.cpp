#include "tfa/emptiness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tfa/run.hpp"

namespace tfa {

namespace {

struct AbstractNode {
    int state;
    BorderStatus status;
    auto operator<=>(const AbstractNode&) const = default;
};

struct PathStep {
    AbstractNode from;
    AbstractNode to;
    int symbol;
    Direction dir;
};

/// Replays an abstract path, laying the chosen symbols along the
/// staircase; untouched cells are padded with the first alphabet symbol.
Word2D realize_witness(const Automaton2D& a,
                       const std::vector<PathStep>& path) {
    long row = 1, col = 1;
    std::optional<long> rows, cols;
    std::vector<std::tuple<long, long, char>> reads;
    for (const auto& s : path) {
        if (s.from.status == BorderStatus::Interior) {
            reads.emplace_back(row, col, a.alphabet[s.symbol]);
        }
        if (s.dir == Direction::R) {
            if (s.to.status == BorderStatus::OnRightBorder ||
                (s.from.status == BorderStatus::OnBottomBorder &&
                 s.to.status == BorderStatus::AtCorner)) {
                if (s.to.status == BorderStatus::OnRightBorder) cols = col;
                if (s.to.status == BorderStatus::AtCorner) cols = col;
            }
            ++col;
        } else if (s.dir == Direction::D) {
            if (s.to.status == BorderStatus::OnBottomBorder ||
                (s.from.status == BorderStatus::OnRightBorder &&
                 s.to.status == BorderStatus::AtCorner)) {
                rows = row;
            }
            ++row;
        }
    }
    long final_rows = rows.value_or(row);
    long final_cols = cols.value_or(col);
    Word2D w(static_cast<std::size_t>(std::max(1L, final_rows)),
             static_cast<std::size_t>(std::max(1L, final_cols)),
             a.alphabet[0]);
    for (const auto& [r, c, sym] : reads) {
        w.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), sym);
    }
    return w;
}

}  // namespace

EmptinessVerdict emptiness_2w(const Automaton2D& a) {
    if (a.cls.ways != Ways::TwoWay) {
        throw ClassError("emptiness_2w requires a two-way automaton");
    }
    if (a.alphabet.empty()) {
        return {};  // no words exist at all
    }

    EmptinessVerdict verdict;
    auto found = [&](const std::vector<PathStep>& path) {
        verdict.kind = EmptinessVerdict::Kind::NonEmpty;
        Word2D w = realize_witness(a, path);
        if (membership(a, w) != Verdict::Accept) {
            throw std::logic_error(
                "emptiness_2w produced a witness the simulator rejects");
        }
        verdict.witness = w;
        return verdict;
    };

    AbstractNode start{a.initial, BorderStatus::Interior};
    if (a.initial == a.accept) return found({});

    std::map<AbstractNode, PathStep> parent;  // reached-from edge
    std::deque<AbstractNode> frontier{start};
    std::map<AbstractNode, bool> seen{{start, true}};

    auto reconstruct = [&](AbstractNode node) {
        std::vector<PathStep> path;
        while (!(node == start)) {
            PathStep s = parent.at(node);
            path.push_back(s);
            node = s.from;
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::optional<AbstractNode> hit;
    auto visit = [&](AbstractNode from, AbstractNode to, int symbol,
                     Direction dir) {
        if (seen.contains(to)) return;
        seen[to] = true;
        parent[to] = {from, to, symbol, dir};
        if (to.state == a.accept) {
            hit = to;
            return;
        }
        frontier.push_back(to);
    };

    const int nsym = static_cast<int>(a.alphabet.size());
    while (!frontier.empty() && !hit) {
        AbstractNode node = frontier.front();
        frontier.pop_front();
        switch (node.status) {
            case BorderStatus::Interior:
                // Cells are fresh and dimensions free, so every symbol and
                // either border placement is realizable.
                for (int sym = 0; sym < nsym && !hit; ++sym) {
                    const auto* succs = a.successors(node.state, sym);
                    if (!succs) continue;
                    for (const auto& [to, dir] : *succs) {
                        if (hit) break;
                        if (dir == Direction::R) {
                            visit(node, {to, BorderStatus::Interior}, sym, dir);
                            if (!hit)
                                visit(node, {to, BorderStatus::OnRightBorder},
                                      sym, dir);
                        } else if (dir == Direction::D) {
                            visit(node, {to, BorderStatus::Interior}, sym, dir);
                            if (!hit)
                                visit(node, {to, BorderStatus::OnBottomBorder},
                                      sym, dir);
                        }
                    }
                }
                break;
            case BorderStatus::OnRightBorder: {
                const auto* succs =
                    a.successors(node.state, Automaton2D::kBorderSym);
                if (!succs) break;
                for (const auto& [to, dir] : *succs) {
                    if (hit) break;
                    if (dir != Direction::D) continue;  // R would exit
                    visit(node, {to, BorderStatus::OnRightBorder},
                          Automaton2D::kBorderSym, dir);
                    if (!hit)
                        visit(node, {to, BorderStatus::AtCorner},
                              Automaton2D::kBorderSym, dir);
                }
                break;
            }
            case BorderStatus::OnBottomBorder: {
                const auto* succs =
                    a.successors(node.state, Automaton2D::kBorderSym);
                if (!succs) break;
                for (const auto& [to, dir] : *succs) {
                    if (hit) break;
                    if (dir != Direction::R) continue;  // D would exit
                    visit(node, {to, BorderStatus::OnBottomBorder},
                          Automaton2D::kBorderSym, dir);
                    if (!hit)
                        visit(node, {to, BorderStatus::AtCorner},
                              Automaton2D::kBorderSym, dir);
                }
                break;
            }
            case BorderStatus::AtCorner:
                break;  // both moves would exit the frame
        }
    }
    if (hit) return found(reconstruct(*hit));
    return verdict;  // Empty
}

OneDimTwoWayNFA to_one_dim(const Automaton2D& a) {
    if (a.cls.ways != Ways::ThreeWay) {
        throw ClassError("to_one_dim requires a three-way automaton");
    }
    if (a.alphabet.size() != 1) {
        throw std::invalid_argument("to_one_dim requires a unary alphabet");
    }

    // States are doubled: q^w while the simulated head is level with the
    // word's rows, q^b once it has been guessed to sit on the bottom
    // frame (where every read is '#', whatever the tape holds).
    const int n = static_cast<int>(a.states.size());
    OneDimTwoWayNFA b;
    b.alphabet = a.alphabet;
    b.allow_stay = true;
    for (const auto& q : a.states) b.states.push_back(q + "^w");
    for (const auto& q : a.states) b.states.push_back(q + "^b");
    b.initial = a.initial;
    b.accept = a.accept;  // q_accept^w; the ^b copy is redirected here

    auto in_state = [&](int q) { return q; };
    auto bot_state = [&](int q) { return q == a.accept ? q : q + n; };

    auto move_of = [](Direction d) {
        switch (d) {
            case Direction::L: return Move1D::Left;
            case Direction::R: return Move1D::Right;
            default: return Move1D::Stay;  // D becomes stay-in-place
        }
    };

    const int syms[] = {0, OneDimTwoWayNFA::kBorderSym};
    for (int q = 0; q < n; ++q) {
        if (q == a.accept) continue;
        for (int sym : syms) {
            const auto* succs = a.successors(q, sym);
            if (!succs) continue;
            for (const auto& [to, dir] : *succs) {
                b.add_transition(in_state(q), sym, in_state(to), move_of(dir));
                if (dir == Direction::D) {
                    // The downward move may be the one that lands on the
                    // bottom frame; the guess is nondeterministic.
                    b.add_transition(in_state(q), sym, bot_state(to),
                                     Move1D::Stay);
                }
            }
        }
        // On the bottom frame the simulated machine reads '#' regardless
        // of the symbol under the one-dimensional head; downward moves
        // would exit the frame and are dropped.
        const auto* hash = a.successors(q, Automaton2D::kBorderSym);
        if (hash) {
            for (int sym : syms) {
                for (const auto& [to, dir] : *hash) {
                    if (dir == Direction::D) continue;
                    b.add_transition(bot_state(q), sym, bot_state(to),
                                     move_of(dir));
                }
            }
        }
    }
    return b;
}

EmptinessVerdict emptiness_unary_3w(const Automaton2D& a,
                                    std::optional<std::size_t> bound) {
    OneDimTwoWayNFA flat = eliminate_stay(to_one_dim(a));
    std::size_t b = bound.value_or(std::min<std::size_t>(
        flat.states.size() < 60 ? (std::size_t{1} << flat.states.size())
                                : std::size_t{100000},
        100000));

    EmptinessVerdict verdict;
    if (a.initial == a.accept) {
        verdict.kind = EmptinessVerdict::Kind::NonEmpty;
        verdict.witness_length = 1;
        return verdict;
    }
    // Length 0 has no two-dimensional counterpart (words have at least one
    // column), so the search starts at 1.
    for (std::size_t l = 1; l <= b; ++l) {
        if (onedim_membership(flat, l)) {
            verdict.kind = EmptinessVerdict::Kind::NonEmpty;
            verdict.witness_length = l;
            return verdict;
        }
    }
    verdict.kind = EmptinessVerdict::Kind::EmptyUpToBound;
    verdict.bound = b;
    return verdict;
}

}  // namespace tfa
