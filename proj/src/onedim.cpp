#include "tfa/onedim.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace tfa {

char move_char(Move1D m) {
    switch (m) {
        case Move1D::Left: return 'L';
        case Move1D::Right: return 'R';
        case Move1D::Stay: return 'S';
    }
    return '?';
}

void OneDimTwoWayNFA::add_transition(int from, int symbol, int to,
                                     Move1D move) {
    delta[{from, symbol}].push_back({to, move});
}

const std::vector<std::pair<int, Move1D>>* OneDimTwoWayNFA::successors(
    int state, int symbol) const {
    auto it = delta.find({state, symbol});
    return it == delta.end() ? nullptr : &it->second;
}

namespace {

int symbol_at(const OneDimTwoWayNFA& b, const std::string& word, long pos) {
    if (pos == 0 || pos == static_cast<long>(word.size()) + 1) {
        return OneDimTwoWayNFA::kBorderSym;
    }
    char c = word[static_cast<std::size_t>(pos) - 1];
    for (std::size_t i = 0; i < b.alphabet.size(); ++i) {
        if (b.alphabet[i] == c) return static_cast<int>(i);
    }
    throw std::invalid_argument("word symbol outside the automaton alphabet");
}

}  // namespace

bool onedim_membership(const OneDimTwoWayNFA& b, const std::string& word) {
    const long last = static_cast<long>(word.size()) + 1;
    if (b.initial == b.accept) return true;
    // Head starts on the first input symbol, or on the right frame cell of
    // the empty word.
    long start = word.empty() ? 0 : 1;
    std::set<std::pair<int, long>> seen{{b.initial, start}};
    std::deque<std::pair<int, long>> frontier{{b.initial, start}};
    while (!frontier.empty()) {
        auto [q, pos] = frontier.front();
        frontier.pop_front();
        const auto* succs = b.successors(q, symbol_at(b, word, pos));
        if (!succs) continue;
        for (const auto& [to, move] : *succs) {
            long next = pos;
            if (move == Move1D::Left) --next;
            if (move == Move1D::Right) ++next;
            if (next < 0 || next > last) continue;
            if (to == b.accept) return true;
            if (seen.insert({to, next}).second) frontier.push_back({to, next});
        }
    }
    return false;
}

bool onedim_membership(const OneDimTwoWayNFA& b, std::size_t length) {
    if (b.alphabet.size() != 1) {
        throw std::invalid_argument("length-based membership is for unary machines");
    }
    return onedim_membership(b, std::string(length, b.alphabet[0]));
}

OneDimTwoWayNFA eliminate_stay(const OneDimTwoWayNFA& b) {
    OneDimTwoWayNFA out;
    out.states = b.states;
    out.alphabet = b.alphabet;
    out.initial = b.initial;
    out.accept = b.accept;
    out.allow_stay = false;
    // Stay moves keep the head on the same cell, so a maximal stay-chain
    // reads one symbol throughout. Fold each chain into the real move that
    // ends it.
    for (int q = 0; q < static_cast<int>(b.states.size()); ++q) {
        for (int sym = OneDimTwoWayNFA::kBorderSym;
             sym < static_cast<int>(b.alphabet.size()); ++sym) {
            // stay-closure of q on sym
            std::set<int> closure{q};
            std::deque<int> work{q};
            while (!work.empty()) {
                int p = work.front();
                work.pop_front();
                const auto* succs = b.successors(p, sym);
                if (!succs) continue;
                for (const auto& [to, move] : *succs) {
                    if (move == Move1D::Stay && closure.insert(to).second) {
                        work.push_back(to);
                    }
                }
            }
            std::set<std::pair<int, Move1D>> added;
            bool accept_in_chain = false;
            for (int p : closure) {
                if (p == b.accept && p != q) accept_in_chain = true;
                const auto* succs = b.successors(p, sym);
                if (!succs) continue;
                for (const auto& [to, move] : *succs) {
                    if (move == Move1D::Stay) {
                        if (to == b.accept) accept_in_chain = true;
                        continue;
                    }
                    if (added.insert({to, move}).second) {
                        out.add_transition(q, sym, to, move);
                    }
                }
            }
            if (accept_in_chain) {
                // Entering the accept state accepts regardless of the final
                // head position; one of L/R stays in the frame at every cell.
                if (added.insert({b.accept, Move1D::Left}).second) {
                    out.add_transition(q, sym, b.accept, Move1D::Left);
                }
                if (added.insert({b.accept, Move1D::Right}).second) {
                    out.add_transition(q, sym, b.accept, Move1D::Right);
                }
            }
        }
    }
    return out;
}

std::string serialize_onedim_twoway(const OneDimTwoWayNFA& b) {
    std::ostringstream out;
    out << "class: 1NFA-2W" << (b.allow_stay ? "-stay" : "") << "\n";
    out << "alphabet:";
    for (char s : b.alphabet) out << ' ' << s;
    out << "\nstates:";
    for (const auto& q : b.states) out << ' ' << q;
    out << "\ninitial: " << b.states[b.initial];
    out << "\naccept: " << b.states[b.accept] << "\n";
    for (const auto& [key, succs] : b.delta) {
        auto [from, sym] = key;
        char symbol = sym == OneDimTwoWayNFA::kBorderSym ? '#' : b.alphabet[sym];
        for (const auto& [to, move] : succs) {
            out << "trans: " << b.states[from] << ' ' << symbol << ' '
                << move_char(move) << ' ' << b.states[to] << "\n";
        }
    }
    return out.str();
}

void OneDimNFA::add_transition(int from, int symbol, int to) {
    delta[{from, symbol}].insert(to);
}

void OneDimNFA::add_epsilon(int from, int to) {
    epsilon[from].insert(to);
}

namespace {

std::set<int> eps_closure(const OneDimNFA& b, const std::set<int>& from) {
    std::set<int> out = from;
    std::deque<int> work(from.begin(), from.end());
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        auto it = b.epsilon.find(q);
        if (it == b.epsilon.end()) continue;
        for (int to : it->second) {
            if (out.insert(to).second) work.push_back(to);
        }
    }
    return out;
}

int nfa_symbol(const OneDimNFA& b, char c) {
    for (std::size_t i = 0; i < b.alphabet.size(); ++i) {
        if (b.alphabet[i] == c) return static_cast<int>(i);
    }
    throw std::invalid_argument("word symbol outside the automaton alphabet");
}

}  // namespace

bool nfa_membership(const OneDimNFA& b, const std::string& word) {
    std::set<int> current = eps_closure(b, {b.initial});
    for (char c : word) {
        int sym = nfa_symbol(b, c);
        std::set<int> next;
        for (int q : current) {
            auto it = b.delta.find({q, sym});
            if (it == b.delta.end()) continue;
            next.insert(it->second.begin(), it->second.end());
        }
        current = eps_closure(b, next);
        if (current.empty()) return false;
    }
    for (int q : current) {
        if (b.accepts.count(q)) return true;
    }
    return false;
}

OneDimNFA eliminate_epsilon(const OneDimNFA& b) {
    OneDimNFA out;
    out.states = b.states;
    out.alphabet = b.alphabet;
    out.initial = b.initial;
    for (int q = 0; q < static_cast<int>(b.states.size()); ++q) {
        std::set<int> closure = eps_closure(b, {q});
        for (int p : closure) {
            if (b.accepts.count(p)) out.accepts.insert(q);
            for (int sym = 0; sym < static_cast<int>(b.alphabet.size()); ++sym) {
                auto it = b.delta.find({p, sym});
                if (it == b.delta.end()) continue;
                for (int to : it->second) out.add_transition(q, sym, to);
            }
        }
    }
    return out;
}

std::vector<std::string> nfa_language_up_to(const OneDimNFA& b,
                                            std::size_t max_len) {
    std::vector<std::string> out;
    std::vector<std::string> layer{""};
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const auto& w : layer) {
            if (nfa_membership(b, w)) out.push_back(w);
        }
        if (len == max_len) break;
        std::vector<std::string> next;
        for (const auto& w : layer) {
            for (char c : b.alphabet) next.push_back(w + c);
        }
        layer = std::move(next);
    }
    return out;
}

std::string serialize_onedim_nfa(const OneDimNFA& b) {
    std::ostringstream out;
    out << "class: 1NFA\nalphabet:";
    for (char s : b.alphabet) out << ' ' << s;
    out << "\nstates:";
    for (const auto& q : b.states) out << ' ' << q;
    out << "\ninitial: " << b.states[b.initial];
    out << "\naccept:";
    for (int q : b.accepts) out << ' ' << b.states[q];
    out << "\n";
    for (const auto& [key, succs] : b.delta) {
        auto [from, sym] = key;
        for (int to : succs) {
            out << "trans: " << b.states[from] << ' ' << b.alphabet[sym] << ' '
                << b.states[to] << "\n";
        }
    }
    for (const auto& [from, tos] : b.epsilon) {
        for (int to : tos) {
            out << "trans: " << b.states[from] << " eps " << b.states[to] << "\n";
        }
    }
    return out.str();
}

}  // namespace tfa
