// Acceptance suite: one verdict line per criterion, exit 0 iff all pass.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tfa/automaton.hpp"
#include "tfa/cli.hpp"
#include "tfa/emptiness.hpp"
#include "tfa/equivalence.hpp"
#include "tfa/onedim.hpp"
#include "tfa/projection.hpp"
#include "tfa/reduction.hpp"
#include "tfa/run.hpp"

using namespace tfa;

namespace {

int failures = 0;
std::string detail;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        if (detail.empty()) detail = what;
    }
}

bool criterion_pumping() {
    auto mk = [](int q, int s) {
        Automaton2D a;
        a.cls = {Ways::TwoWay, Mode::Deterministic};
        a.alphabet = oracle::alphabet_of(s);
        for (int i = 0; i < q; ++i) a.states.push_back("q" + std::to_string(i));
        a.accept = q - 1;
        return a;
    };
    struct Row {
        int m, n, s;
        std::uint64_t z, f;
    };
    for (Row r : std::vector<Row>{{1, 1, 1, 2, 20},
                                  {2, 2, 1, 5, 725},
                                  {2, 3, 2, 25, 405625}}) {
        PumpingBound p = pumping_bound(mk(r.m, r.s), mk(r.n, r.s));
        expect(p.z == r.z && p.f_z == r.f, "pumping value mismatch");
    }
    return failures == 0;
}

bool criterion_emptiness_2w() {
    std::mt19937 rng(20260826);
    for (int i = 0; i < 300; ++i) {
        int nstates = 2 + i % 3;
        // Keep the exhaustive oracle's word space desk sized: the largest
        // machines get the unary alphabet.
        int nsyms = nstates == 4 ? 1 : 1 + (i / 3) % 2;
        Automaton2D a = oracle::random_machine(
            rng, {Ways::TwoWay, Mode::Nondeterministic}, nstates, nsyms, 0.45);
        std::size_t bound = a.states.size() + 1;
        bool brute = oracle::find_accepted(a, bound, bound).has_value();
        EmptinessVerdict v = emptiness_2w(a);
        expect(v.nonempty() == brute, "emptiness verdict disagrees");
        if (v.nonempty()) {
            expect(membership(a, *v.witness) == Verdict::Accept,
                   "witness not re-accepted");
        }
    }
    return failures == 0;
}

bool criterion_unary_3w() {
    std::mt19937 rng(31415);
    for (int i = 0; i < 100; ++i) {
        Automaton2D a = oracle::random_machine(
            rng, {Ways::ThreeWay, Mode::Nondeterministic}, 2 + i % 2, 1, 0.5);
        bool brute = oracle::find_accepted(a, 6, 6).has_value();
        EmptinessVerdict v = emptiness_unary_3w(a);
        if (brute) expect(v.nonempty(), "3w pipeline missed a witness");

        OneDimTwoWayNFA flat = to_one_dim(a);
        OneDimTwoWayNFA nostay = eliminate_stay(flat);
        for (std::size_t l = 0; l <= 20; ++l) {
            expect(onedim_membership(flat, l) == onedim_membership(nostay, l),
                   "stay elimination changed the language");
        }
    }
    return failures == 0;
}

bool criterion_exact_equivalence() {
    std::vector<Automaton2D> corpus;
    for (int i = 0; i < 10; ++i) {
        Automaton2D a;
        a.cls = {Ways::TwoWay, Mode::Deterministic};
        a.alphabet = {'a'};
        a.states = {"u" + std::to_string(i)};
        a.initial = a.accept = 0;
        corpus.push_back(a);
    }
    for (const auto& a : corpus) {
        for (const auto& b : corpus) {
            EquivalenceVerdict v = decide_equivalence(a, b);
            bool brute =
                oracle::accepted_set(a, 5, 5) == oracle::accepted_set(b, 5, 5);
            expect((v.kind == EquivalenceVerdict::Kind::Equivalent) == brute,
                   "exact equivalence disagrees with brute force");
            expect(v.max_rows == 20 && v.max_cols == 20,
                   "full f(z) bound not exhausted");
        }
    }
    return failures == 0;
}

bool criterion_minimize() {
    std::mt19937 rng(271828);
    for (int i = 0; i < 200; ++i) {
        Automaton2D a = oracle::random_machine(
            rng, {Ways::TwoWay, Mode::Deterministic}, 2 + i % 4, 1 + i % 2);
        Automaton2D m = minimize(a);
        expect(m.states.size() <= a.states.size(), "minimize grew the machine");
        expect(minimize(m).states.size() == m.states.size(),
               "minimize not idempotent");
        EquivalenceVerdict v =
            bounded_difference(a, m, 4, 4, DifferenceSide::Symmetric);
        expect(v.kind == EquivalenceVerdict::Kind::EquivalentUpToBound,
               "minimize changed the language");
    }
    return failures == 0;
}

bool criterion_projection() {
    std::mt19937 rng(161803);
    for (int i = 0; i < 100; ++i) {
        Automaton2D a = oracle::random_machine(
            rng, {Ways::TwoWay, Mode::Nondeterministic}, 2 + i % 2, 1 + i % 2,
            0.5);
        std::size_t max_rows = a.states.size() * (4 + 2);
        auto lang = nfa_language_up_to(row_projection_nfa(a), 4);
        std::set<std::string> rows(lang.begin(), lang.end());
        expect(rows == oracle::brute_first_rows(a, 4, max_rows),
               "row projection mismatch");

        Automaton2D t = transpose(a);
        auto clang = nfa_language_up_to(col_projection_nfa(a), 4);
        std::set<std::string> cols(clang.begin(), clang.end());
        expect(cols == oracle::brute_first_rows(t, 4, max_rows),
               "column projection mismatch");
    }
    return failures == 0;
}

bool criterion_composite() {
    Automaton2D c = build_composite();
    for (int m = 1; m <= 30; ++m) {
        bool realizable = false;
        for (int n = 1; n <= 30 && !realizable; ++n) {
            realizable = membership(c, Word2D::unary(m, n)) == Verdict::Accept;
        }
        bool composite = false;
        for (int d = 2; d < m; ++d) {
            if (m % d == 0) composite = true;
        }
        expect(realizable == composite,
               "composite gadget wrong at m=" + std::to_string(m));
    }
    return failures == 0;
}

bool criterion_reduction() {
    const char* sources[] = {
        "lba-states: q0 qa\ngamma: a b\ninput: a\ninitial: q0\naccept: qa\n"
        "lbatrans: q0 a qa b R\n",
        "lba-states: q0 q1 qa\ngamma: a b\ninput: a b\ninitial: q0\n"
        "accept: qa\nlbatrans: q0 a q1 a R\nlbatrans: q0 b q1 b R\n"
        "lbatrans: q1 b qa b L\n",
        "lba-states: q0 qa\ngamma: a b\ninput: a b\ninitial: q0\naccept: qa\n"
        "lbatrans: q0 a q0 a R\nlbatrans: q0 b qa b L\n",
        "lba-states: q0 q1 qa\ngamma: a\ninput: a\ninitial: q0\naccept: qa\n"
        "lbatrans: q0 a q1 a R\nlbatrans: q1 a q0 a R\n",
    };
    std::mt19937 rng(577215);
    for (const char* src : sources) {
        LBASpec m = parse_lba(src);
        Automaton2D chk = build_checker(m);
        auto sigma = pair_alphabet(m);
        std::uniform_int_distribution<std::size_t> pick_sym(0,
                                                            sigma.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_dim(1, 4);

        std::vector<std::string> inputs;
        for (char x : m.input) {
            for (char y : m.input) {
                inputs.push_back(std::string{x, y});
                for (char z : m.input) inputs.push_back(std::string{x, y, z});
            }
        }
        for (const auto& in : inputs) {
            TableResult r = accepting_table(m, in, 50);
            if (r.status != TableStatus::Accepted) continue;
            expect(membership(chk, *r.table) == Verdict::Reject,
                   "checker accepted a valid table");
            std::vector<std::string> ls;
            for (std::size_t rr = 1; rr <= r.table->rows(); ++rr) {
                std::string line;
                for (std::size_t cc = 1; cc <= r.table->cols(); ++cc) {
                    line += r.table->at(static_cast<long>(rr),
                                        static_cast<long>(cc));
                }
                ls.push_back(line);
            }
            for (auto& line : ls) {
                for (auto& ch : line) {
                    char orig = ch;
                    for (char repl : sigma) {
                        if (repl == orig) continue;
                        ch = repl;
                        Word2D bad(ls);
                        expect(membership(chk, bad) == Verdict::Accept,
                               "checker missed a corruption");
                        expect(!is_valid_table(m, bad),
                               "oracle passed a corruption");
                        break;
                    }
                    ch = orig;
                }
            }
        }
        for (int i = 0; i < 2600; ++i) {
            std::size_t rows = pick_dim(rng), cols = pick_dim(rng);
            std::vector<std::string> ls(rows);
            for (auto& line : ls) {
                for (std::size_t c = 0; c < cols; ++c) {
                    line += sigma[pick_sym(rng)];
                }
            }
            Word2D w(ls);
            expect((membership(chk, w) == Verdict::Accept) ==
                       !is_valid_table(m, w),
                   "checker and oracle disagree on a random word");
        }
    }
    return failures == 0;
}

std::pair<int, std::string> invoke_cli(const std::vector<std::string>& args) {
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int code = dispatch(args);
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

bool criterion_determinism() {
    std::mt19937 rng(8675309);
    for (int i = 0; i < 50; ++i) {
        Automaton2D a = oracle::random_machine(
            rng, {Ways::TwoWay, Mode::Nondeterministic}, 2 + i % 3, 1 + i % 2);
        expect(parse_automaton(serialize_automaton(a)) == a,
               "automaton round trip not a fixed point");
    }
    Automaton2D c = build_composite();
    expect(parse_automaton(serialize_automaton(c)) == c,
           "composite round trip failed");
    LBASpec m = parse_lba(
        "lba-states: q0 qa\ngamma: a b\ninput: a\ninitial: q0\naccept: qa\n"
        "lbatrans: q0 a qa b R\n");
    expect(serialize_lba(parse_lba(serialize_lba(m))) == serialize_lba(m),
           "lba round trip failed");
    Automaton2D chk = build_checker(m);
    expect(parse_automaton(serialize_automaton(chk)) == chk,
           "checker round trip failed");

    {
        std::ofstream f("acc_m.2fa");
        f << serialize_automaton(c);
    }
    std::vector<std::vector<std::string>> argvs = {
        {"spectrum", "acc_m.2fa", "--axis", "col", "--max-rows", "10",
         "--max-cols", "10"},
        {"empty", "acc_m.2fa"},
        {"--format", "tsv", "empty", "acc_m.2fa"},
    };
    for (const auto& argv : argvs) {
        auto first = invoke_cli(argv);
        auto second = invoke_cli(argv);
        expect(first == second, "CLI report not byte identical");
    }
    return failures == 0;
}

bool run_criterion(int n, const std::string& label,
                   const std::function<bool()>& body) {
    failures = 0;
    detail.clear();
    bool ok = body();
    if (ok) {
        std::printf("criterion %d: PASS  %s\n", n, label.c_str());
    } else {
        std::printf("criterion %d: FAIL  %s  (%d checks failed; first: %s)\n",
                    n, label.c_str(), failures, detail.c_str());
    }
    return ok;
}

}  // namespace

int main() {
    bool all = true;
    all &= run_criterion(1, "pumping-bound arithmetic", criterion_pumping);
    all &= run_criterion(2, "two-way emptiness oracle agreement",
                         criterion_emptiness_2w);
    all &= run_criterion(3, "unary three-way pipeline", criterion_unary_3w);
    all &= run_criterion(4, "exact equivalence at unary desk scale",
                         criterion_exact_equivalence);
    all &= run_criterion(5, "minimization soundness", criterion_minimize);
    all &= run_criterion(6, "projection fidelity", criterion_projection);
    all &= run_criterion(7, "composite gadget", criterion_composite);
    all &= run_criterion(8, "LBA reduction gadget", criterion_reduction);
    all &= run_criterion(9, "round trips and report determinism",
                         criterion_determinism);
    return all ? 0 : 1;
}
