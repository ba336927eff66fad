#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tfa/automaton.hpp"
#include "tfa/projection.hpp"
#include "tfa/run.hpp"

using namespace tfa;

TEST_CASE("step applies delta and drops frame exits") {
    Automaton2D a = parse_automaton(
        "class: 2NFA-2W\nalphabet: a\nstates: q0 q1 q2 qf\ninitial: q0\n"
        "accept: qf\ntrans: q0 a R q1\ntrans: q1 # R q2\n"
        "trans: q2 a D q1\ntrans: q2 a R q1\n");
    Word2D w = Word2D::unary(1, 1);

    auto s1 = step(a, w, {0, 1, 1});
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == Configuration{1, 1, 2});

    // q1 on the right frame column has only an R move, which would exit.
    CHECK(step(a, w, {1, 1, 2}).empty());

    // Undefined delta yields no successors.
    CHECK(step(a, w, {0, 2, 1}).empty());

    // Nondeterministic fanout.
    auto s2 = step(a, w, {2, 1, 1});
    CHECK(s2.size() == 2);
}

TEST_CASE("membership basics") {
    Automaton2D all =
        accept_everything({'a'}, {Ways::TwoWay, Mode::Nondeterministic});
    CHECK(membership(all, Word2D::unary(3, 2)) == Verdict::Accept);

    Automaton2D none = parse_automaton(
        "class: 2NFA-2W\nalphabet: a\nstates: q0 qf\ninitial: q0\n"
        "accept: qf\n");
    CHECK(membership(none, Word2D::unary(1, 1)) == Verdict::Reject);
    CHECK_THROWS_AS(membership(none, Word2D({"b"})), std::invalid_argument);
}

TEST_CASE("looping four way machine terminates with reject") {
    Automaton2D a = parse_automaton(
        "class: 2DFA-4W\nalphabet: a\nstates: q0 q1 qf\ninitial: q0\n"
        "accept: qf\ntrans: q0 a R q1\ntrans: q1 a L q0\n");
    CHECK(membership(a, Word2D::unary(1, 2)) == Verdict::Reject);

    TraceResult t = trace(a, Word2D::unary(1, 2));
    CHECK(t.cause == HaltCause::LoopDetected);
    REQUIRE(t.loop_start.has_value());
    CHECK(t.trace[*t.loop_start] == t.trace.back());
}

TEST_CASE("trace halt causes") {
    Automaton2D a = parse_automaton(
        "class: 2DFA-2W\nalphabet: a\nstates: q0 qf\ninitial: q0\n"
        "accept: qf\n");
    CHECK(trace(a, Word2D::unary(1, 1)).cause == HaltCause::UndefinedTransition);

    Automaton2D b = parse_automaton(
        "class: 2DFA-2W\nalphabet: a\nstates: q0 qf\ninitial: q0\n"
        "accept: qf\ntrans: q0 a R q0\ntrans: q0 # D qf\n");
    // An R step from the right frame column would exit the frame.
    Automaton2D c = b;
    c.delta[{0, Automaton2D::kBorderSym}] = {{0, Direction::R}};
    CHECK(trace(c, Word2D::unary(1, 2)).cause == HaltCause::FrameExit);

    TraceResult ok = trace(b, Word2D::unary(1, 2));
    CHECK(ok.accepted());
    CHECK(ok.trace.back().state == b.accept);

    Automaton2D nd = parse_automaton(
        "class: 2NFA-2W\nalphabet: a\nstates: q0 qf\ninitial: q0\n"
        "accept: qf\ntrans: q0 a R qf\ntrans: q0 a D qf\n");
    CHECK_THROWS_AS(trace(nd, Word2D::unary(1, 1)), ClassError);
}

TEST_CASE("composite gadget accepts unary 4x2 with a trace into the corner") {
    Automaton2D c = build_composite();
    TraceResult t = trace(c, Word2D::unary(4, 2));
    REQUIRE(t.accepted());
    CHECK(t.trace.back().state == c.accept);
    // The accepting probe fires on the bottom frame row.
    CHECK(t.trace.back().row == 5);
}

TEST_CASE("two way traces are read once and short") {
    std::mt19937 rng(77);
    for (int i = 0; i < 60; ++i) {
        Automaton2D a = oracle::random_machine(
            rng, {Ways::TwoWay, Mode::Deterministic}, 2 + i % 4, 1 + i % 2);
        for (std::size_t r = 1; r <= 3; ++r) {
            for (std::size_t c = 1; c <= 3; ++c) {
                oracle::visit_shape(a.alphabet, r, c, [&](const Word2D& w) {
                    TraceResult t = trace(a, w);
                    CHECK(t.trace.size() <= r + c + 1);
                    std::set<std::pair<long, long>> cells;
                    for (const auto& cf : t.trace) {
                        CHECK(cells.insert({cf.row, cf.col}).second);
                    }
                    return true;
                });
            }
        }
    }
}

TEST_CASE("membership is monotone under delta enlargement") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < 40; ++i) {
        Automaton2D a = oracle::random_machine(
            rng, {Ways::TwoWay, Mode::Nondeterministic}, 3, 1 + i % 2, 0.4);
        Automaton2D b = a;
        for (int extra = 0; extra < 3; ++extra) {
            int q = pick(rng);
            if (q == b.accept) continue;
            b.add_transition(q, pick(rng) % static_cast<int>(b.alphabet.size()),
                             pick(rng),
                             pick(rng) % 2 ? Direction::D : Direction::R);
        }
        for (std::size_t r = 1; r <= 3; ++r) {
            for (std::size_t c = 1; c <= 3; ++c) {
                oracle::visit_shape(a.alphabet, r, c, [&](const Word2D& w) {
                    if (membership(a, w) == Verdict::Accept) {
                        CHECK(membership(b, w) == Verdict::Accept);
                    }
                    return true;
                });
            }
        }
    }
}

TEST_CASE("deterministic membership agrees with the nondeterministic view") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 40; ++i) {
        Automaton2D a = oracle::random_machine(
            rng, {Ways::TwoWay, Mode::Deterministic}, 2 + i % 3, 1 + i % 2);
        Automaton2D n = a;
        n.cls.mode = Mode::Nondeterministic;
        for (std::size_t r = 1; r <= 3; ++r) {
            for (std::size_t c = 1; c <= 3; ++c) {
                oracle::visit_shape(a.alphabet, r, c, [&](const Word2D& w) {
                    CHECK(membership(a, w) == membership(n, w));
                    CHECK((trace(a, w).accepted()) ==
                          (membership(a, w) == Verdict::Accept));
                    return true;
                });
            }
        }
    }
}
