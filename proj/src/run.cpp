#include "tfa/run.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace tfa {

namespace {

std::pair<long, long> moved(long row, long col, Direction d) {
    switch (d) {
        case Direction::U: return {row - 1, col};
        case Direction::D: return {row + 1, col};
        case Direction::L: return {row, col - 1};
        case Direction::R: return {row, col + 1};
    }
    return {row, col};
}

void check_alphabet(const Automaton2D& a, const Word2D& w) {
    for (std::size_t r = 1; r <= w.rows(); ++r) {
        for (std::size_t c = 1; c <= w.cols(); ++c) {
            char s = w.at(static_cast<long>(r), static_cast<long>(c));
            if (a.symbol_index(s) == -2) {
                throw std::invalid_argument(
                    std::string("word symbol '") + s +
                    "' is not in the automaton's alphabet");
            }
        }
    }
}

}  // namespace

std::vector<Configuration> step(const Automaton2D& a, const Word2D& w,
                                const Configuration& c) {
    std::vector<Configuration> out;
    if (c.state == a.accept) return out;
    char symbol = w.at(c.row, c.col);
    const auto* succs = a.successors(c.state, a.symbol_index(symbol));
    if (!succs) return out;
    for (const auto& [to, dir] : *succs) {
        auto [nr, nc] = moved(c.row, c.col, dir);
        if (!w.in_frame(nr, nc)) continue;  // the frame is structural
        out.push_back({to, nr, nc});
    }
    return out;
}

Verdict membership(const Automaton2D& a, const Word2D& w) {
    check_alphabet(a, w);
    Configuration start{a.initial, 1, 1};
    if (a.initial == a.accept) return Verdict::Accept;
    std::set<Configuration> seen{start};
    std::deque<Configuration> frontier{start};
    while (!frontier.empty()) {
        Configuration c = frontier.front();
        frontier.pop_front();
        for (const auto& next : step(a, w, c)) {
            if (next.state == a.accept) return Verdict::Accept;
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return Verdict::Reject;
}

TraceResult trace(const Automaton2D& a, const Word2D& w) {
    if (!a.cls.deterministic()) {
        throw ClassError("trace requires a deterministic automaton");
    }
    check_alphabet(a, w);
    TraceResult result;
    Configuration c{a.initial, 1, 1};
    std::map<Configuration, std::size_t> seen;
    while (true) {
        auto [it, fresh] = seen.insert({c, result.trace.size()});
        if (!fresh) {
            result.cause = HaltCause::LoopDetected;
            result.loop_start = it->second;
            result.trace.push_back(c);  // the repeated configuration
            return result;
        }
        result.trace.push_back(c);
        if (c.state == a.accept) {
            result.cause = HaltCause::Accepted;
            return result;
        }
        char symbol = w.at(c.row, c.col);
        const auto* succs = a.successors(c.state, a.symbol_index(symbol));
        if (!succs || succs->empty()) {
            result.cause = HaltCause::UndefinedTransition;
            return result;
        }
        const auto& [to, dir] = succs->front();
        auto [nr, nc] = moved(c.row, c.col, dir);
        if (!w.in_frame(nr, nc)) {
            result.cause = HaltCause::FrameExit;
            return result;
        }
        c = {to, nr, nc};
    }
}

std::string format_configuration(const Automaton2D& a, const Configuration& c) {
    return a.states[c.state] + " (" + std::to_string(c.row) + "," +
           std::to_string(c.col) + ")";
}

}  // namespace tfa
