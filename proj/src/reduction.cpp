#include "tfa/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace tfa {

int LBASpec::state_index(const std::string& id) const {
    auto it = std::find(states.begin(), states.end(), id);
    return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

int LBASpec::gamma_index(char symbol) const {
    auto it = std::find(gamma.begin(), gamma.end(), symbol);
    return it == gamma.end() ? -1 : static_cast<int>(it - gamma.begin());
}

bool LBASpec::is_input_symbol(char symbol) const {
    return std::find(input.begin(), input.end(), symbol) != input.end();
}

void validate_lba(const LBASpec& m) {
    auto fail = [](const std::string& msg) {
        throw std::invalid_argument("LBA: " + msg);
    };
    const int n = static_cast<int>(m.states.size());
    const int g = static_cast<int>(m.gamma.size());
    if (n == 0) fail("no states");
    if (g == 0) fail("empty tape alphabet");
    for (char s : m.gamma) {
        if (s == kBorder) fail("'#' may not be a tape symbol");
    }
    for (char s : m.input) {
        if (m.gamma_index(s) < 0) {
            fail(std::string("input symbol ") + s + " not in gamma");
        }
    }
    if (m.initial < 0 || m.initial >= n) fail("initial state out of range");
    if (m.accept < 0 || m.accept >= n) fail("accept state out of range");
    if (m.initial == m.accept) fail("initial state may not be accepting");
    for (const auto& [key, rule] : m.delta) {
        auto [from, sym] = key;
        if (from < 0 || from >= n) fail("rule from unknown state");
        if (sym < 0 || sym >= g) fail("rule on unknown symbol");
        if (from == m.accept) fail("rule out of the accept state");
        if (rule.state < 0 || rule.state >= n) fail("rule to unknown state");
        if (rule.symbol < 0 || rule.symbol >= g) {
            fail("rule writes unknown symbol");
        }
    }
}

std::optional<LBAConfig> lba_step(const LBASpec& m, const LBAConfig& c) {
    if (c.state == m.accept) {
        throw std::invalid_argument("lba_step on an accepting configuration");
    }
    auto it = m.delta.find({c.state, c.tape[c.head - 1]});
    if (it == m.delta.end()) return std::nullopt;
    const LBARule& rule = it->second;
    LBAConfig next = c;
    next.tape[c.head - 1] = rule.symbol;
    next.state = rule.state;
    next.head = c.head + (rule.move == HeadMove::Right ? 1 : -1);
    if (next.head < 1 || next.head > static_cast<int>(next.tape.size())) {
        return std::nullopt;
    }
    return next;
}

PairRow double_encode(const LBAConfig& c) {
    if (c.tape.size() < 2) {
        throw std::invalid_argument("double encoding needs width >= 2");
    }
    auto comp = [&](std::size_t pos) {
        return Comp{c.tape[pos],
                    static_cast<int>(pos) + 1 == c.head ? c.state : -1};
    };
    PairRow row;
    for (std::size_t i = 0; i + 1 < c.tape.size(); ++i) {
        row.push_back({comp(i), comp(i + 1)});
    }
    return row;
}

DecodeResult decode(const PairRow& row) {
    DecodeResult out;
    if (row.empty()) {
        out.report = {1, "empty row"};
        return out;
    }
    std::vector<Comp> comps{row[0].first, row[0].second};
    for (std::size_t i = 1; i < row.size(); ++i) {
        if (row[i].first != row[i - 1].second) {
            out.report = {i + 1, "stitch mismatch"};
            return out;
        }
        comps.push_back(row[i].second);
    }
    LBAConfig c;
    int marks = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        c.tape.push_back(comps[i].sym);
        if (comps[i].state >= 0) {
            if (++marks > 1) {
                out.report = {i, "multiple state marks"};
                return out;
            }
            c.head = static_cast<int>(i) + 1;
            c.state = comps[i].state;
        }
    }
    if (marks == 0) {
        out.report = {1, "no state mark"};
        return out;
    }
    out.config = std::move(c);
    return out;
}

namespace {

/// Printable characters available to the pair codec, '#' excluded.
std::string codec_chars() {
    std::string out;
    for (int c = 33; c <= 126; ++c) {
        if (static_cast<char>(c) != kBorder) out += static_cast<char>(c);
    }
    return out;
}

int comp_count(const LBASpec& m) {
    return static_cast<int>(m.gamma.size()) *
           (1 + static_cast<int>(m.states.size()));
}

int comp_code(const LBASpec& m, const Comp& c) {
    return c.sym * (1 + static_cast<int>(m.states.size())) + c.state + 1;
}

Comp comp_from_code(const LBASpec& m, int code) {
    int span = 1 + static_cast<int>(m.states.size());
    return {code / span, code % span - 1};
}

int pair_code(const LBASpec& m, const PairSymbol& p) {
    return comp_code(m, p.first) * comp_count(m) + comp_code(m, p.second);
}

PairSymbol pair_from_code(const LBASpec& m, int code) {
    int n = comp_count(m);
    return {comp_from_code(m, code / n), comp_from_code(m, code % n)};
}

}  // namespace

std::vector<char> pair_alphabet(const LBASpec& m) {
    std::string chars = codec_chars();
    int n = comp_count(m);
    if (static_cast<std::size_t>(n) * n > chars.size()) {
        throw std::invalid_argument(
            "pair codec needs |Gamma| * (1 + |Q|) <= 9");
    }
    return std::vector<char>(chars.begin(), chars.begin() + n * n);
}

char pair_char(const LBASpec& m, const PairSymbol& p) {
    return codec_chars()[pair_code(m, p)];
}

std::optional<PairSymbol> pair_from_char(const LBASpec& m, char c) {
    std::string chars = codec_chars();
    auto pos = chars.find(c);
    int n = comp_count(m);
    if (pos == std::string::npos || static_cast<int>(pos) >= n * n) {
        return std::nullopt;
    }
    return pair_from_code(m, static_cast<int>(pos));
}

Word2D table_to_word(const LBASpec& m, const std::vector<PairRow>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("a table needs at least one row");
    }
    std::vector<std::string> lines;
    for (const auto& row : rows) {
        std::string line;
        for (const auto& p : row) line += pair_char(m, p);
        lines.push_back(line);
    }
    return Word2D(std::move(lines));
}

std::optional<std::vector<PairRow>> word_to_rows(const LBASpec& m,
                                                 const Word2D& w) {
    std::vector<PairRow> rows;
    for (std::size_t r = 1; r <= w.rows(); ++r) {
        PairRow row;
        for (std::size_t c = 1; c <= w.cols(); ++c) {
            auto p = pair_from_char(
                m, w.at(static_cast<long>(r), static_cast<long>(c)));
            if (!p) return std::nullopt;
            row.push_back(*p);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

TableResult accepting_table(const LBASpec& m, const std::string& word,
                            std::size_t budget) {
    if (word.size() < 2) {
        throw std::invalid_argument("input must have length >= 2");
    }
    LBAConfig c;
    c.state = m.initial;
    c.head = 1;
    for (char s : word) {
        if (!m.is_input_symbol(s)) {
            throw std::invalid_argument(std::string("symbol ") + s +
                                        " not in the input alphabet");
        }
        c.tape.push_back(m.gamma_index(s));
    }
    std::vector<PairRow> rows{double_encode(c)};
    TableResult out;
    for (;;) {
        if (c.state == m.accept) {
            out.status = TableStatus::Accepted;
            out.table = table_to_word(m, rows);
            return out;
        }
        if (out.steps == budget) {
            out.status = TableStatus::BudgetExhausted;
            return out;
        }
        auto next = lba_step(m, c);
        if (!next) {
            out.status = TableStatus::Rejected;
            return out;
        }
        c = *next;
        rows.push_back(double_encode(c));
        ++out.steps;
    }
}

bool is_valid_table(const LBASpec& m, const Word2D& t) {
    auto rows = word_to_rows(m, t);
    if (!rows) return false;
    std::vector<LBAConfig> cfgs;
    for (const auto& row : *rows) {
        DecodeResult d = decode(row);
        if (!d.ok()) return false;
        cfgs.push_back(*d.config);
    }
    const LBAConfig& first = cfgs.front();
    if (first.state != m.initial || first.head != 1) return false;
    for (int sym : first.tape) {
        if (!m.is_input_symbol(m.gamma[sym])) return false;
    }
    if (cfgs.back().state != m.accept) return false;
    for (std::size_t i = 0; i + 1 < cfgs.size(); ++i) {
        if (cfgs[i].state == m.accept) return false;
        auto next = lba_step(m, cfgs[i]);
        if (!next || !(*next == cfgs[i + 1])) return false;
    }
    return true;
}

LBAConfig parse_lba_config(const LBASpec& m, const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    LBAConfig c;
    int marks = 0;
    while (in >> tok) {
        int sym = m.gamma_index(tok[0]);
        if (sym < 0) {
            throw std::invalid_argument("unknown tape symbol in " + tok);
        }
        c.tape.push_back(sym);
        if (tok.size() > 1) {
            if (tok[1] != '_') {
                throw std::invalid_argument("expected _state subscript in " +
                                            tok);
            }
            int q = m.state_index(tok.substr(2));
            if (q < 0) throw std::invalid_argument("unknown state in " + tok);
            c.head = static_cast<int>(c.tape.size());
            c.state = q;
            ++marks;
        }
    }
    if (marks != 1) {
        throw std::invalid_argument(
            "configuration needs exactly one _state subscript");
    }
    return c;
}

std::string format_lba_config(const LBASpec& m, const LBAConfig& c) {
    std::string out;
    for (std::size_t i = 0; i < c.tape.size(); ++i) {
        if (i > 0) out += ' ';
        out += m.gamma[c.tape[i]];
        if (static_cast<int>(i) + 1 == c.head) {
            out += '_';
            out += m.states[c.state];
        }
    }
    return out;
}

LBASpec parse_lba(const std::string& text) {
    LBASpec m;
    bool have_states = false, have_gamma = false, have_input = false;
    bool have_initial = false, have_accept = false;
    std::string initial_id, accept_id;
    struct PendingRule {
        int line;
        std::string from, sym, to, wsym, move;
    };
    std::vector<PendingRule> pending;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("expected '<key>: <value>'");
        std::string key = line.substr(first, colon - first);
        std::vector<std::string> toks;
        {
            std::istringstream vs(line.substr(colon + 1));
            std::string tok;
            while (vs >> tok) toks.push_back(tok);
        }
        if (key == "lba-states") {
            for (const auto& t : toks) {
                if (m.state_index(t) >= 0) fail("duplicate state " + t);
                m.states.push_back(t);
            }
            have_states = true;
        } else if (key == "gamma") {
            for (const auto& t : toks) {
                if (t.size() != 1) fail("tape symbols are single characters");
                if (m.gamma_index(t[0]) >= 0) fail("duplicate symbol " + t);
                m.gamma.push_back(t[0]);
            }
            have_gamma = true;
        } else if (key == "input") {
            for (const auto& t : toks) {
                if (t.size() != 1) fail("input symbols are single characters");
                m.input.push_back(t[0]);
            }
            have_input = true;
        } else if (key == "initial") {
            if (toks.size() != 1) fail("initial takes one id");
            initial_id = toks[0];
            have_initial = true;
        } else if (key == "accept") {
            if (toks.size() != 1) fail("accept takes one id");
            accept_id = toks[0];
            have_accept = true;
        } else if (key == "lbatrans") {
            if (toks.size() != 5) {
                fail("lbatrans takes <q> <s> <q'> <s'> <L|R>");
            }
            pending.push_back(
                {lineno, toks[0], toks[1], toks[2], toks[3], toks[4]});
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    lineno = 0;
    if (!have_states) throw ParseError("missing 'lba-states' line");
    if (!have_gamma) throw ParseError("missing 'gamma' line");
    if (!have_input) throw ParseError("missing 'input' line");
    if (!have_initial) throw ParseError("missing 'initial' line");
    if (!have_accept) throw ParseError("missing 'accept' line");
    m.initial = m.state_index(initial_id);
    if (m.initial < 0) throw ParseError("unknown initial state " + initial_id);
    m.accept = m.state_index(accept_id);
    if (m.accept < 0) throw ParseError("unknown accept state " + accept_id);
    for (const auto& r : pending) {
        lineno = r.line;
        int from = m.state_index(r.from);
        if (from < 0) fail("unknown state " + r.from);
        int to = m.state_index(r.to);
        if (to < 0) fail("unknown state " + r.to);
        if (r.sym.size() != 1 || m.gamma_index(r.sym[0]) < 0) {
            fail("unknown symbol " + r.sym);
        }
        if (r.wsym.size() != 1 || m.gamma_index(r.wsym[0]) < 0) {
            fail("unknown symbol " + r.wsym);
        }
        HeadMove move;
        if (r.move == "L") {
            move = HeadMove::Left;
        } else if (r.move == "R") {
            move = HeadMove::Right;
        } else {
            fail("head move must be L or R");
        }
        auto key = std::make_pair(from, m.gamma_index(r.sym[0]));
        if (m.delta.count(key)) {
            fail("duplicate rule for " + r.from + " " + r.sym);
        }
        m.delta[key] = {to, m.gamma_index(r.wsym[0]), move};
    }
    validate_lba(m);
    return m;
}

std::string serialize_lba(const LBASpec& m) {
    std::ostringstream out;
    out << "lba-states:";
    for (const auto& q : m.states) out << ' ' << q;
    out << "\ngamma:";
    for (char s : m.gamma) out << ' ' << s;
    out << "\ninput:";
    for (char s : m.input) out << ' ' << s;
    out << "\ninitial: " << m.states[m.initial];
    out << "\naccept: " << m.states[m.accept] << "\n";
    for (const auto& [key, rule] : m.delta) {
        out << "lbatrans: " << m.states[key.first] << ' ' << m.gamma[key.second]
            << ' ' << m.states[rule.state] << ' ' << m.gamma[rule.symbol] << ' '
            << (rule.move == HeadMove::Left ? 'L' : 'R') << "\n";
    }
    return out.str();
}

namespace {

/// Whether the vertical window (top over bottom) at an aligned pair
/// position can occur in a genuine computation step, given whether the
/// window is the leftmost and/or rightmost one of its row. The encoding
/// makes the head's neighborhood visible, so one case analysis over the
/// rule table settles each window.
bool window_legal(const LBASpec& m, const PairSymbol& top,
                  const PairSymbol& bottom, bool leftmost, bool rightmost,
                  const std::vector<char>& right_arrival,
                  const std::vector<char>& left_arrival) {
    const Comp &t1 = top.first, &t2 = top.second;
    const Comp &b1 = bottom.first, &b2 = bottom.second;
    if (t1.state >= 0 && t2.state >= 0) return false;  // malformed top
    if (t1.state == m.accept || t2.state == m.accept) {
        return false;  // the run already ended; nothing may follow
    }
    if (t1.state >= 0) {
        auto it = m.delta.find({t1.state, t1.sym});
        if (it == m.delta.end()) return false;  // halted
        const LBARule& rule = it->second;
        if (rule.move == HeadMove::Right) {
            return b1 == Comp{rule.symbol, -1} &&
                   b2 == Comp{t2.sym, rule.state};
        }
        if (leftmost) return false;  // the head would leave the tape
        return b1 == Comp{rule.symbol, -1} && b2 == Comp{t2.sym, -1};
    }
    if (t2.state >= 0) {
        auto it = m.delta.find({t2.state, t2.sym});
        if (it == m.delta.end()) return false;
        const LBARule& rule = it->second;
        if (rule.move == HeadMove::Left) {
            return b1 == Comp{t1.sym, rule.state} &&
                   b2 == Comp{rule.symbol, -1};
        }
        if (rightmost) return false;
        return b1 == Comp{t1.sym, -1} && b2 == Comp{rule.symbol, -1};
    }
    // No head nearby: symbols persist; a mark may only arrive from
    // outside, which needs a matching rule and room on that side.
    if (b1.sym != t1.sym || b2.sym != t2.sym) return false;
    if (b1.state >= 0 && b2.state >= 0) return false;
    if (b1.state >= 0) return !leftmost && right_arrival[b1.state];
    if (b2.state >= 0) return !rightmost && left_arrival[b2.state];
    return true;
}

}  // namespace

Automaton2D build_checker(const LBASpec& m) {
    validate_lba(m);
    Automaton2D a;
    a.cls = {Ways::TwoWay, Mode::Nondeterministic};
    a.alphabet = pair_alphabet(m);
    const int ncomp = comp_count(m);
    const int npair = ncomp * ncomp;

    std::vector<char> right_arrival(m.states.size(), 0);
    std::vector<char> left_arrival(m.states.size(), 0);
    for (const auto& [key, rule] : m.delta) {
        (rule.move == HeadMove::Right ? right_arrival
                                      : left_arrival)[rule.state] = 1;
    }

    auto add_state = [&](const std::string& name) {
        a.states.push_back(name);
        return static_cast<int>(a.states.size()) - 1;
    };
    const int q0 = add_state("q0");
    const int aSel = add_state("a_row");
    const int a2 = add_state("a_unmarked");
    const int a30 = add_state("a_marks0");
    const int a31 = add_state("a_marks1");
    const int bScan = add_state("b_scan");
    const int cSel = add_state("c_row");
    const int cScan = add_state("c_scan");
    const int cChk = add_state("c_below");
    const int dSeek = add_state("d_col1");
    const int dRight = add_state("d_col");
    const int dVerR = add_state("d_need_edge");
    const int dVerNR = add_state("d_need_cell");
    const int qAcc = add_state("acc");
    std::vector<int> a1(ncomp);
    for (int c = 0; c < ncomp; ++c) {
        a1[c] = add_state("a_prev" + std::to_string(c));
    }
    std::vector<int> dChkL(npair), dChkM(npair);
    for (int p = 0; p < npair; ++p) {
        dChkL[p] = add_state("d_winL" + std::to_string(p));
        dChkM[p] = add_state("d_win" + std::to_string(p));
    }
    a.initial = q0;
    a.accept = qAcc;

    // Dedupe through a set; q0 repeats several states' behavior.
    std::set<std::tuple<int, int, int, Direction>> trans;
    auto add = [&](int from, int sym, int to, Direction dir) {
        trans.insert({from, sym, to, dir});
    };

    std::vector<PairSymbol> sym_of(npair);
    for (int p = 0; p < npair; ++p) sym_of[p] = pair_from_code(m, p);

    auto marked_non_accept = [&](const Comp& c) {
        return c.state >= 0 && c.state != m.accept;
    };

    for (int p = 0; p < npair; ++p) {
        const PairSymbol& ps = sym_of[p];
        int ycode = comp_code(m, ps.second);
        bool xm = ps.first.state >= 0, ym = ps.second.state >= 0;

        // Branch (a): pick a row, then scan it for a stitching break, a
        // fully unmarked encoding, or a second state mark.
        add(aSel, p, aSel, Direction::D);
        add(aSel, p, a1[ycode], Direction::R);
        if (!xm && !ym) add(aSel, p, a2, Direction::R);
        int cnt = (xm ? 1 : 0) + (ym ? 1 : 0);
        if (cnt == 2) add(aSel, p, qAcc, Direction::R);
        if (cnt == 1) add(aSel, p, a31, Direction::R);
        if (cnt == 0) add(aSel, p, a30, Direction::R);
        for (int c = 0; c < ncomp; ++c) {
            if (comp_code(m, ps.first) != c) {
                add(a1[c], p, qAcc, Direction::R);
            } else {
                add(a1[c], p, a1[ycode], Direction::R);
            }
        }
        if (!xm && !ym) add(a2, p, a2, Direction::R);
        add(a30, p, ym ? a31 : a30, Direction::R);
        add(a31, p, ym ? qAcc : a31, Direction::R);

        // Branch (b): the first row must encode the initial configuration
        // of an input word, head on the first cell.
        bool x_ok = ps.first.state == m.initial &&
                    m.is_input_symbol(m.gamma[ps.first.sym]);
        bool y_ok = !ym && m.is_input_symbol(m.gamma[ps.second.sym]);
        if (!x_ok || !y_ok) add(q0, p, qAcc, Direction::R);
        add(q0, p, bScan, Direction::R);
        add(bScan, p, y_ok ? bScan : qAcc, Direction::R);

        // Branch (c): find a row holding a non-accepting state mark and
        // certify it is the last one.
        add(cSel, p, cSel, Direction::D);
        add(cSel, p, cScan, Direction::R);
        add(cScan, p, cScan, Direction::R);
        if (marked_non_accept(ps.first) || marked_non_accept(ps.second)) {
            add(cSel, p, cChk, Direction::D);
            add(cScan, p, cChk, Direction::D);
        }

        // Branch (d): pick a window; the left seeker fixes the column-one
        // case, the right seeker covers the rest.
        add(dSeek, p, dSeek, Direction::D);
        add(dSeek, p, dRight, Direction::R);
        add(dSeek, p, dChkL[p], Direction::D);
        add(dRight, p, dRight, Direction::R);
        add(dRight, p, dChkM[p], Direction::D);
        add(dVerNR, p, qAcc, Direction::R);
    }

    add(a2, Automaton2D::kBorderSym, qAcc, Direction::D);
    add(cChk, Automaton2D::kBorderSym, qAcc, Direction::R);
    add(dVerR, Automaton2D::kBorderSym, qAcc, Direction::D);

    // Window verdicts. Rightmost-ness is unknown while checking, so when
    // it matters the run steps right once more: '#' certifies a rightmost
    // window, a pair symbol a non-rightmost one.
    for (int top = 0; top < npair; ++top) {
        for (int bot = 0; bot < npair; ++bot) {
            for (bool left : {true, false}) {
                int from = left ? dChkL[top] : dChkM[top];
                bool ok_edge = window_legal(m, sym_of[top], sym_of[bot], left,
                                            true, right_arrival, left_arrival);
                bool ok_mid = window_legal(m, sym_of[top], sym_of[bot], left,
                                           false, right_arrival, left_arrival);
                if (!ok_edge && !ok_mid) {
                    add(from, bot, qAcc, Direction::R);
                } else if (!ok_edge) {
                    add(from, bot, dVerR, Direction::R);
                } else if (!ok_mid) {
                    add(from, bot, dVerNR, Direction::R);
                }
            }
        }
    }

    // q0 starts at the top-left cell, so it may open any branch.
    for (int src : {aSel, cSel, dSeek}) {
        for (const auto& [from, sym, to, dir] : trans) {
            if (from == src) add(q0, sym, to, dir);
        }
    }
    for (const auto& [from, sym, to, dir] : trans) {
        a.add_transition(from, sym, to, dir);
    }
    return a;
}

}  // namespace tfa
