#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tfa/automaton.hpp"
#include "tfa/reduction.hpp"
#include "tfa/run.hpp"

using namespace tfa;

namespace {

// Accepts every input after one step: (q0,a) -> (qa,b,R).
const char* kAlwaysSrc =
    "lba-states: q0 qa\ngamma: a b\ninput: a\ninitial: q0\naccept: qa\n"
    "lbatrans: q0 a qa b R\n";

// Accepts iff the second input symbol is b.
const char* kSecondBSrc =
    "lba-states: q0 q1 qa\ngamma: a b\ninput: a b\ninitial: q0\naccept: qa\n"
    "lbatrans: q0 a q1 a R\nlbatrans: q0 b q1 b R\nlbatrans: q1 b qa b L\n";

// Walks right to the first b and accepts, unless the b is at position 1.
const char* kSeekBSrc =
    "lba-states: q0 qa\ngamma: a b\ninput: a b\ninitial: q0\naccept: qa\n"
    "lbatrans: q0 a q0 a R\nlbatrans: q0 b qa b L\n";

// Unary machine that walks off the right end: accepts nothing.
const char* kNeverSrc =
    "lba-states: q0 q1 qa\ngamma: a\ninput: a\ninitial: q0\naccept: qa\n"
    "lbatrans: q0 a q1 a R\nlbatrans: q1 a q0 a R\n";

bool lba_accepts(const LBASpec& m, const std::string& word) {
    return accepting_table(m, word).status == TableStatus::Accepted;
}

}  // namespace

TEST_CASE("lba parsing, validation and round trip") {
    LBASpec m = parse_lba(kSecondBSrc);
    CHECK(m.states.size() == 3);
    CHECK(m.delta.size() == 3);
    LBASpec again = parse_lba(serialize_lba(m));
    CHECK(again.states == m.states);
    CHECK(again.gamma == m.gamma);
    CHECK(again.delta == m.delta);

    CHECK_THROWS_AS(parse_lba("lba-states: q\ngamma: a\ninput: a\n"
                              "initial: q\naccept: q\n"),
                    std::invalid_argument);  // initial = accept
    CHECK_THROWS_AS(parse_lba("lba-states: q p\ngamma: a\ninput: b\n"
                              "initial: q\naccept: p\n"),
                    std::invalid_argument);  // input outside gamma
    CHECK_THROWS_AS(
        parse_lba("lba-states: q p\ngamma: a\ninput: a\ninitial: q\n"
                  "accept: p\nlbatrans: p a q a R\n"),
        std::invalid_argument);  // rule out of accept
    CHECK_THROWS_AS(parse_lba("gamma: a\ninput: a\ninitial: q\naccept: p\n"),
                    ParseError);
}

TEST_CASE("lba stepping") {
    LBASpec m = parse_lba(kSecondBSrc);
    LBAConfig c = parse_lba_config(m, "a_q0 b a");
    auto n1 = lba_step(m, c);
    REQUIRE(n1.has_value());
    CHECK(format_lba_config(m, *n1) == "a b_q1 a");
    auto n2 = lba_step(m, *n1);
    REQUIRE(n2.has_value());
    CHECK(n2->state == m.accept);
    CHECK(n2->head == 1);
    CHECK_THROWS_AS(lba_step(m, *n2), std::invalid_argument);

    // Head walking off the tape halts.
    LBAConfig edge = parse_lba_config(m, "a a_q0");
    CHECK(!lba_step(m, edge).has_value());
    // Undefined rule halts.
    LBAConfig stuck = parse_lba_config(m, "a a_q1");
    CHECK(!lba_step(m, stuck).has_value());

    CHECK_THROWS_AS(parse_lba_config(m, "a b c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_lba_config(m, "a_q0 b_q1"), std::invalid_argument);
}

TEST_CASE("double encoding and decoding") {
    LBASpec m;
    m.states = {"q", "r"};
    m.gamma = {'a', 'b', 'c', 'd', 'e', 'f'};
    m.input = {'a'};
    m.initial = 0;
    m.accept = 1;
    LBAConfig c = parse_lba_config(m, "a b c_q d e f");
    PairRow row = double_encode(c);
    REQUIRE(row.size() == 5);
    CHECK(row[0] == PairSymbol{{0, -1}, {1, -1}});
    CHECK(row[1] == PairSymbol{{1, -1}, {2, 0}});
    CHECK(row[2] == PairSymbol{{2, 0}, {3, -1}});
    CHECK(row[3] == PairSymbol{{3, -1}, {4, -1}});
    CHECK(row[4] == PairSymbol{{4, -1}, {5, -1}});

    DecodeResult back = decode(row);
    REQUIRE(back.ok());
    CHECK(*back.config == c);

    CHECK_THROWS_AS(double_encode(parse_lba_config(m, "a_q")),
                    std::invalid_argument);

    // Stitch mismatch (a,b),(c,d) reported at pair 2.
    DecodeResult bad = decode({{{0, -1}, {1, -1}}, {{2, -1}, {3, -1}}});
    REQUIRE(!bad.ok());
    CHECK(bad.report->position == 2);

    DecodeResult unmarked = decode({{{0, -1}, {1, -1}}});
    REQUIRE(!unmarked.ok());
    DecodeResult twice = decode({{{0, 0}, {1, 0}}});
    REQUIRE(!twice.ok());
}

TEST_CASE("pair codec") {
    LBASpec m = parse_lba(kAlwaysSrc);
    auto sigma = pair_alphabet(m);
    CHECK(sigma.size() == 36);  // (2 gamma * (1 + 2 states))^2
    for (char ch : sigma) {
        auto p = pair_from_char(m, ch);
        REQUIRE(p.has_value());
        CHECK(pair_char(m, *p) == ch);
    }
    CHECK(!pair_from_char(m, '~').has_value());

    LBASpec big = m;
    big.gamma = {'a', 'b', 'c', 'd'};
    CHECK_THROWS_AS(pair_alphabet(big), std::invalid_argument);
}

TEST_CASE("accepting tables and the validity oracle") {
    LBASpec m = parse_lba(kSecondBSrc);
    TableResult yes = accepting_table(m, "ab");
    REQUIRE(yes.status == TableStatus::Accepted);
    CHECK(yes.table->rows() == 3);
    CHECK(yes.table->cols() == 1);
    CHECK(is_valid_table(m, *yes.table));

    CHECK(accepting_table(m, "aa").status == TableStatus::Rejected);
    CHECK(lba_accepts(m, "abab"));
    CHECK(!lba_accepts(m, "baaa"));
    CHECK_THROWS_AS(accepting_table(m, "a"), std::invalid_argument);
    CHECK_THROWS_AS(accepting_table(m, "ax"), std::invalid_argument);

    LBASpec never = parse_lba(kNeverSrc);
    CHECK(accepting_table(never, "aaaa").status == TableStatus::Rejected);

    // A machine that ping-pongs forever exhausts the budget.
    LBASpec loop = parse_lba(
        "lba-states: q0 q1 qa\ngamma: a\ninput: a\ninitial: q0\naccept: qa\n"
        "lbatrans: q0 a q1 a R\nlbatrans: q1 a q0 a L\n");
    CHECK(accepting_table(loop, "aa", 50).status ==
          TableStatus::BudgetExhausted);

    // Corruptions of a valid table fail the oracle.
    std::vector<std::string> ls;
    for (std::size_t r = 1; r <= yes.table->rows(); ++r) {
        std::string line;
        for (std::size_t c = 1; c <= yes.table->cols(); ++c) {
            line += yes.table->at(static_cast<long>(r), static_cast<long>(c));
        }
        ls.push_back(line);
    }
    auto sigma = pair_alphabet(m);
    for (auto& line : ls) {
        for (auto& ch : line) {
            char orig = ch;
            ch = orig == sigma[0] ? sigma[1] : sigma[0];
            CHECK(!is_valid_table(m, Word2D(ls)));
            ch = orig;
        }
    }
}

TEST_CASE("checker agrees with the table oracle") {
    std::mt19937 rng(60089);
    for (const char* src : {kAlwaysSrc, kSecondBSrc, kSeekBSrc, kNeverSrc}) {
        LBASpec m = parse_lba(src);
        Automaton2D chk = build_checker(m);
        CHECK(chk.cls.tag() == "2NFA-2W");
        CHECK(validate(chk).empty());
        CHECK(parse_automaton(serialize_automaton(chk)) == chk);
        auto sigma = pair_alphabet(m);
        std::uniform_int_distribution<std::size_t> pick_sym(0, sigma.size() - 1);
        std::uniform_int_distribution<std::size_t> pick_dim(1, 4);

        // Valid tables are rejected; any single-cell corruption accepted.
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
            CHECK(membership(chk, *r.table) == Verdict::Reject);
            for (std::size_t row = 1; row <= r.table->rows(); ++row) {
                for (std::size_t col = 1; col <= r.table->cols(); ++col) {
                    std::vector<std::string> ls;
                    for (std::size_t rr = 1; rr <= r.table->rows(); ++rr) {
                        std::string line;
                        for (std::size_t cc = 1; cc <= r.table->cols(); ++cc) {
                            line += r.table->at(static_cast<long>(rr),
                                                static_cast<long>(cc));
                        }
                        ls.push_back(line);
                    }
                    char orig = ls[row - 1][col - 1];
                    for (char repl : sigma) {
                        if (repl == orig) continue;
                        ls[row - 1][col - 1] = repl;
                        Word2D bad(ls);
                        CHECK(!is_valid_table(m, bad));
                        CHECK(membership(chk, bad) == Verdict::Accept);
                        break;
                    }
                }
            }
        }

        // Random table-shaped words.
        for (int i = 0; i < 400; ++i) {
            std::size_t rows = pick_dim(rng), cols = pick_dim(rng);
            std::vector<std::string> ls(rows);
            for (auto& line : ls) {
                for (std::size_t c = 0; c < cols; ++c) {
                    line += sigma[pick_sym(rng)];
                }
            }
            Word2D w(ls);
            CHECK((membership(chk, w) == Verdict::Accept) ==
                  !is_valid_table(m, w));
        }
    }
}
