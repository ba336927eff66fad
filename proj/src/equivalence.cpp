#include "tfa/equivalence.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace tfa {

namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(x, y, &out)) {
        throw OverflowError("pumping bound overflows 64 bits");
    }
    return out;
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(x, y, &out)) {
        throw OverflowError("pumping bound overflows 64 bits");
    }
    return out;
}

void require_same_alphabet(const Automaton2D& a, const Automaton2D& b) {
    std::set<char> sa(a.alphabet.begin(), a.alphabet.end());
    std::set<char> sb(b.alphabet.begin(), b.alphabet.end());
    if (sa != sb) {
        throw std::invalid_argument("automata use different alphabets");
    }
}

void require_exactness(const Automaton2D& a, const char* op) {
    if (a.cls.mode != Mode::Deterministic || a.cls.ways != Ways::TwoWay) {
        throw ClassError(std::string(op) +
                         " requires deterministic two-way automata");
    }
}

}  // namespace

PumpingBound pumping_bound(const Automaton2D& a, const Automaton2D& b) {
    require_same_alphabet(a, b);
    PumpingBound pb;
    pb.m = a.states.size();
    pb.n = b.states.size();
    pb.sigma = a.alphabet.size();
    pb.z = checked_add(
        checked_mul(checked_mul(pb.m, pb.n), checked_mul(pb.sigma, pb.sigma)),
        1);
    std::uint64_t z2 = checked_mul(pb.z, pb.z);
    pb.f_z = checked_mul(z2, checked_add(z2, pb.z - 1));
    return pb;
}

bool enumerate_words(const std::vector<char>& alphabet, std::size_t max_rows,
                     std::size_t max_cols, std::uint64_t budget,
                     const std::function<bool(const Word2D&)>& visit) {
    if (alphabet.empty() || max_rows == 0 || max_cols == 0) return true;
    std::uint64_t used = 0;
    for (std::size_t area = 1; area <= max_rows * max_cols; ++area) {
        for (std::size_t rows = 1; rows <= max_rows; ++rows) {
            if (area % rows != 0) continue;
            std::size_t cols = area / rows;
            if (cols == 0 || cols > max_cols) continue;
            // Odometer over the cells, row-major, in declaration order.
            std::vector<std::size_t> digits(area, 0);
            for (;;) {
                if (++used > budget) return false;
                Word2D w(rows, cols, alphabet[0]);
                for (std::size_t i = 0; i < area; ++i) {
                    w.set(i / cols + 1, i % cols + 1, alphabet[digits[i]]);
                }
                if (!visit(w)) return true;
                std::size_t pos = area;
                while (pos > 0 && digits[pos - 1] + 1 == alphabet.size()) {
                    digits[--pos] = 0;
                }
                if (pos == 0) break;
                ++digits[pos - 1];
            }
        }
    }
    return true;
}

EquivalenceVerdict bounded_difference(const Automaton2D& a,
                                      const Automaton2D& b,
                                      std::size_t max_rows,
                                      std::size_t max_cols,
                                      DifferenceSide side,
                                      std::uint64_t budget) {
    require_same_alphabet(a, b);
    if (max_rows == 0 || max_cols == 0) {
        throw std::invalid_argument("bounds must be at least 1");
    }
    EquivalenceVerdict v;
    v.max_rows = max_rows;
    v.max_cols = max_cols;
    std::uint64_t calls = 0;
    bool tripped = false;
    bool complete = enumerate_words(
        a.alphabet, max_rows, max_cols, budget,
        [&](const Word2D& w) {
            if (calls + 2 > budget) {
                tripped = true;
                return false;
            }
            bool in_a = membership(a, w) == Verdict::Accept;
            ++calls;
            bool in_b = membership(b, w) == Verdict::Accept;
            ++calls;
            bool differs = (side == DifferenceSide::AminusB) ? (in_a && !in_b)
                                                             : (in_a != in_b);
            if (differs) {
                v.kind = EquivalenceVerdict::Kind::Counterexample;
                v.witness = w;
                v.witness_accepted_by_a = in_a;
                v.witness_accepted_by_b = in_b;
                return false;
            }
            return true;
        });
    if (v.kind == EquivalenceVerdict::Kind::Counterexample) return v;
    if (!complete || tripped) {
        v.kind = EquivalenceVerdict::Kind::Infeasible;
        return v;
    }
    v.kind = EquivalenceVerdict::Kind::EquivalentUpToBound;
    return v;
}

EquivalenceVerdict decide_equivalence(const Automaton2D& a,
                                      const Automaton2D& b,
                                      std::uint64_t budget) {
    require_exactness(a, "exact equivalence");
    require_exactness(b, "exact equivalence");
    PumpingBound pb = pumping_bound(a, b);
    std::size_t bound = static_cast<std::size_t>(
        std::min<std::uint64_t>(pb.f_z, SIZE_MAX));
    EquivalenceVerdict v = bounded_difference(a, b, bound, bound,
                                              DifferenceSide::Symmetric,
                                              budget);
    if (v.kind == EquivalenceVerdict::Kind::EquivalentUpToBound) {
        v.kind = EquivalenceVerdict::Kind::Equivalent;
    }
    if (v.kind == EquivalenceVerdict::Kind::Infeasible) {
        v.required_bound = pb.f_z;
    }
    return v;
}

EquivalenceVerdict universality(const Automaton2D& a, std::uint64_t budget) {
    return decide_equivalence(a, accept_everything(a.alphabet, a.cls), budget);
}

namespace {

/// Symbols a state can face: the alphabet plus the frame.
std::vector<int> faced_symbols(const Automaton2D& a) {
    std::vector<int> syms;
    syms.push_back(Automaton2D::kBorderSym);
    for (std::size_t i = 0; i < a.alphabet.size(); ++i) {
        syms.push_back(static_cast<int>(i));
    }
    return syms;
}

}  // namespace

Automaton2D minimize(const Automaton2D& a) {
    require_exactness(a, "minimize");
    std::size_t n = a.states.size();
    if (a.initial == a.accept) {
        return accept_everything(a.alphabet, a.cls);
    }
    std::vector<int> syms = faced_symbols(a);

    // States that can reach accept in the symbol-oblivious successor graph.
    // Entering a state outside this set commits the run to rejection, so
    // such transitions behave like undefined ones.
    std::vector<char> live(n, 0);
    {
        std::vector<std::vector<int>> rev(n);
        for (const auto& [key, outs] : a.delta) {
            for (const auto& [to, dir] : outs) rev[to].push_back(key.first);
        }
        std::vector<int> stack{a.accept};
        live[a.accept] = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int p : rev[q]) {
                if (!live[p]) {
                    live[p] = 1;
                    stack.push_back(p);
                }
            }
        }
    }

    auto out = [&](int q, int sym) -> std::optional<std::pair<int, Direction>> {
        auto it = a.delta.find({q, sym});
        if (it == a.delta.end() || it->second.empty()) return std::nullopt;
        const auto& t = it->second.front();
        if (!live[t.first]) return std::nullopt;
        return t;
    };

    // Largest bisimulation on the normalized transition table: unmarked
    // states behave identically from every configuration.
    std::vector<std::vector<char>> marked(n, std::vector<char>(n, 0));
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t r = 0; r < n; ++r) {
            if ((static_cast<int>(q) == a.accept) !=
                (static_cast<int>(r) == a.accept)) {
                marked[q][r] = 1;
            }
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q) {
            for (std::size_t r = q + 1; r < n; ++r) {
                if (marked[q][r]) continue;
                for (int sym : syms) {
                    auto oq = out(static_cast<int>(q), sym);
                    auto orr = out(static_cast<int>(r), sym);
                    bool distinct;
                    if (oq.has_value() != orr.has_value()) {
                        distinct = true;
                    } else if (!oq) {
                        distinct = false;
                    } else {
                        distinct = oq->second != orr->second ||
                                   marked[oq->first][orr->first];
                    }
                    if (distinct) {
                        marked[q][r] = marked[r][q] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    std::vector<int> rep(n);
    for (std::size_t q = 0; q < n; ++q) {
        rep[q] = static_cast<int>(q);
        for (std::size_t r = 0; r < q; ++r) {
            if (!marked[q][r]) {
                rep[q] = rep[r];
                break;
            }
        }
    }

    if (!live[a.initial]) {
        // Nothing is accepted; two bare states witness the class.
        Automaton2D empty;
        empty.cls = a.cls;
        empty.alphabet = a.alphabet;
        empty.states = {a.states[a.initial], a.states[a.accept]};
        empty.initial = 0;
        empty.accept = 1;
        return empty;
    }

    // Keep only classes reachable through normalized transitions.
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    order.push_back(rep[a.initial]);
    seen[rep[a.initial]] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int sym : syms) {
            auto t = out(order[i], sym);
            if (t && !seen[rep[t->first]]) {
                seen[rep[t->first]] = 1;
                order.push_back(rep[t->first]);
            }
        }
    }
    if (!seen[rep[a.accept]]) {
        seen[rep[a.accept]] = 1;
        order.push_back(rep[a.accept]);
    }

    Automaton2D m;
    m.cls = a.cls;
    m.alphabet = a.alphabet;
    std::vector<int> renum(n, -1);
    for (int q : order) {
        renum[q] = static_cast<int>(m.states.size());
        m.states.push_back(a.states[q]);
    }
    m.initial = renum[rep[a.initial]];
    m.accept = renum[rep[a.accept]];
    for (int q : order) {
        for (int sym : syms) {
            auto t = out(q, sym);
            if (t) {
                m.delta[{renum[q], sym}].push_back(
                    {renum[rep[t->first]], t->second});
            }
        }
    }
    return m;
}

}  // namespace tfa
