#include "tfa/automaton.hpp"

#include <algorithm>
#include <sstream>

namespace tfa {

char direction_char(Direction d) {
    switch (d) {
        case Direction::U: return 'U';
        case Direction::D: return 'D';
        case Direction::L: return 'L';
        case Direction::R: return 'R';
    }
    return '?';
}

std::optional<Direction> direction_from_char(char c) {
    switch (c) {
        case 'U': return Direction::U;
        case 'D': return Direction::D;
        case 'L': return Direction::L;
        case 'R': return Direction::R;
        default: return std::nullopt;
    }
}

bool AutomatonClass::permits(Direction d) const {
    switch (ways) {
        case Ways::FourWay: return true;
        case Ways::ThreeWay: return d != Direction::U;
        case Ways::TwoWay: return d == Direction::D || d == Direction::R;
    }
    return false;
}

std::string AutomatonClass::tag() const {
    std::string out = deterministic() ? "2DFA-" : "2NFA-";
    switch (ways) {
        case Ways::FourWay: out += "4W"; break;
        case Ways::ThreeWay: out += "3W"; break;
        case Ways::TwoWay: out += "2W"; break;
    }
    return out;
}

std::optional<AutomatonClass> AutomatonClass::from_tag(const std::string& tag) {
    AutomatonClass cls;
    if (tag.rfind("2DFA-", 0) == 0) {
        cls.mode = Mode::Deterministic;
    } else if (tag.rfind("2NFA-", 0) == 0) {
        cls.mode = Mode::Nondeterministic;
    } else {
        return std::nullopt;
    }
    std::string ways = tag.substr(5);
    if (ways == "4W") {
        cls.ways = Ways::FourWay;
    } else if (ways == "3W") {
        cls.ways = Ways::ThreeWay;
    } else if (ways == "2W") {
        cls.ways = Ways::TwoWay;
    } else {
        return std::nullopt;
    }
    return cls;
}

int Automaton2D::state_index(const std::string& id) const {
    auto it = std::find(states.begin(), states.end(), id);
    return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

int Automaton2D::symbol_index(char symbol) const {
    if (symbol == kBorder) return kBorderSym;
    auto it = std::find(alphabet.begin(), alphabet.end(), symbol);
    return it == alphabet.end() ? -2 : static_cast<int>(it - alphabet.begin());
}

const std::vector<std::pair<int, Direction>>* Automaton2D::successors(
    int state, int symbol) const {
    auto it = delta.find({state, symbol});
    return it == delta.end() ? nullptr : &it->second;
}

void Automaton2D::add_transition(int from, int symbol, int to, Direction dir) {
    delta[{from, symbol}].push_back({to, dir});
}

std::vector<Violation> validate(const Automaton2D& a) {
    std::vector<Violation> out;
    auto bad = [&](std::string msg) { out.push_back({std::move(msg)}); };

    const int n = static_cast<int>(a.states.size());
    if (n == 0) bad("automaton has no states");
    if (a.initial < 0 || a.initial >= n) bad("initial state out of range");
    if (a.accept < 0 || a.accept >= n) bad("accept state out of range");
    for (char s : a.alphabet) {
        if (s == kBorder) bad("'#' may not be an alphabet symbol");
    }
    for (const auto& [key, succs] : a.delta) {
        auto [from, sym] = key;
        std::string where = "delta(" +
            (from >= 0 && from < n ? a.states[from] : std::string("?")) + ", " +
            (sym == Automaton2D::kBorderSym
                 ? std::string(1, kBorder)
                 : (sym >= 0 && sym < static_cast<int>(a.alphabet.size())
                        ? std::string(1, a.alphabet[sym])
                        : std::string("?"))) + ")";
        if (from < 0 || from >= n) {
            bad(where + ": unknown source state");
            continue;
        }
        if (sym != Automaton2D::kBorderSym &&
            (sym < 0 || sym >= static_cast<int>(a.alphabet.size()))) {
            bad(where + ": unknown symbol");
            continue;
        }
        if (from == a.accept) {
            bad(where + ": transition out of accept state " +
                a.states[a.accept]);
        }
        if (a.cls.deterministic() && succs.size() > 1) {
            bad(where + ": nondeterministic choice in deterministic automaton");
        }
        for (const auto& [to, dir] : succs) {
            if (to < 0 || to >= n) {
                bad(where + ": unknown target state");
            }
            if (!a.cls.permits(dir)) {
                bad(where + ": direction " +
                    std::string(1, direction_char(dir)) +
                    " not permitted by class " + a.cls.tag());
            }
        }
    }
    return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Automaton2D parse_automaton(const std::string& text) {
    Automaton2D a;
    bool have_class = false, have_alphabet = false, have_states = false;
    bool have_initial = false, have_accept = false;
    std::string initial_id, accept_id;
    struct PendingTrans {
        int line;
        std::string from, to;
        std::string symbol, dir;
    };
    std::vector<PendingTrans> pending;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        auto colon = trimmed.find(':');
        if (colon == std::string::npos) fail("expected '<key>: <value>'");
        std::string key = trimmed.substr(first, colon - first);
        std::string value = trimmed.substr(colon + 1);
        auto toks = split_ws(value);
        if (key == "class") {
            if (toks.size() != 1) fail("class takes one tag");
            auto cls = AutomatonClass::from_tag(toks[0]);
            if (!cls) fail("unknown class tag " + toks[0]);
            a.cls = *cls;
            have_class = true;
        } else if (key == "alphabet") {
            for (const auto& t : toks) {
                if (t.size() != 1) fail("alphabet symbols are single characters");
                if (t[0] == kBorder) fail("'#' is reserved");
                if (a.symbol_index(t[0]) != -2) fail("duplicate symbol " + t);
                a.alphabet.push_back(t[0]);
            }
            have_alphabet = true;
        } else if (key == "states") {
            for (const auto& t : toks) {
                if (a.state_index(t) != -1) fail("duplicate state " + t);
                a.states.push_back(t);
            }
            have_states = true;
        } else if (key == "initial") {
            if (toks.size() != 1) fail("initial takes one id");
            initial_id = toks[0];
            have_initial = true;
        } else if (key == "accept") {
            if (toks.size() != 1) fail("accept takes one id");
            accept_id = toks[0];
            have_accept = true;
        } else if (key == "trans") {
            if (toks.size() != 4) fail("trans takes <state> <symbol> <dir> <state>");
            if (toks[1].size() != 1) fail("transition symbol must be one character");
            if (toks[2].size() != 1) fail("direction must be one of U/D/L/R");
            pending.push_back({lineno, toks[0], toks[3], toks[1], toks[2]});
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    lineno = 0;
    if (!have_class) throw ParseError("missing 'class' line");
    if (!have_alphabet) throw ParseError("missing 'alphabet' line");
    if (!have_states) throw ParseError("missing 'states' line");
    if (!have_initial) throw ParseError("missing 'initial' line");
    if (!have_accept) throw ParseError("missing 'accept' line");

    a.initial = a.state_index(initial_id);
    if (a.initial < 0) throw ParseError("unknown initial state " + initial_id);
    a.accept = a.state_index(accept_id);
    if (a.accept < 0) throw ParseError("unknown accept state " + accept_id);

    for (const auto& t : pending) {
        lineno = t.line;
        auto fail_t = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(t.line) + ": " + msg);
        };
        int from = a.state_index(t.from);
        if (from < 0) fail_t("unknown state " + t.from);
        int to = a.state_index(t.to);
        if (to < 0) fail_t("unknown state " + t.to);
        int sym = a.symbol_index(t.symbol[0]);
        if (sym == -2) fail_t("unknown symbol " + t.symbol);
        auto dir = direction_from_char(t.dir[0]);
        if (!dir) fail_t("unknown direction " + t.dir);
        a.add_transition(from, sym, to, *dir);
    }

    auto violations = validate(a);
    if (!violations.empty()) {
        throw ParseError("validation failed: " + violations.front().message);
    }
    return a;
}

std::string serialize_automaton(const Automaton2D& a) {
    std::ostringstream out;
    out << "class: " << a.cls.tag() << "\n";
    out << "alphabet:";
    for (char s : a.alphabet) out << ' ' << s;
    out << "\n";
    out << "states:";
    for (const auto& q : a.states) out << ' ' << q;
    out << "\n";
    out << "initial: " << a.states[a.initial] << "\n";
    out << "accept: " << a.states[a.accept] << "\n";
    for (const auto& [key, succs] : a.delta) {
        auto [from, sym] = key;
        char symbol = sym == Automaton2D::kBorderSym ? kBorder : a.alphabet[sym];
        for (const auto& [to, dir] : succs) {
            out << "trans: " << a.states[from] << ' ' << symbol << ' '
                << direction_char(dir) << ' ' << a.states[to] << "\n";
        }
    }
    return out.str();
}

Automaton2D transpose(const Automaton2D& a) {
    if (a.cls.ways == Ways::ThreeWay) {
        throw ClassError("transpose of a three-way automaton is not defined");
    }
    Automaton2D out = a;
    for (auto& [key, succs] : out.delta) {
        for (auto& [to, dir] : succs) {
            switch (dir) {
                case Direction::D: dir = Direction::R; break;
                case Direction::R: dir = Direction::D; break;
                case Direction::U: dir = Direction::L; break;
                case Direction::L: dir = Direction::U; break;
            }
        }
    }
    return out;
}

Word2D transpose_word(const Word2D& w) {
    Word2D out(w.cols(), w.rows(), 'a');
    for (std::size_t r = 1; r <= w.rows(); ++r) {
        for (std::size_t c = 1; c <= w.cols(); ++c) {
            out.set(c, r, w.at(static_cast<long>(r), static_cast<long>(c)));
        }
    }
    return out;
}

Automaton2D accept_everything(const std::vector<char>& alphabet,
                              AutomatonClass cls) {
    Automaton2D a;
    a.states = {"q0"};
    a.alphabet = alphabet;
    a.cls = cls;
    a.initial = 0;
    a.accept = 0;
    return a;
}

}  // namespace tfa
