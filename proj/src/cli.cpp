#include "tfa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tfa/automaton.hpp"
#include "tfa/emptiness.hpp"
#include "tfa/equivalence.hpp"
#include "tfa/projection.hpp"
#include "tfa/reduction.hpp"
#include "tfa/run.hpp"
#include "tfa/word.hpp"

namespace tfa {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

/// Accumulates key/value pairs; text mode prints one "key: value" line
/// each, tsv mode one tab-joined line of the values.
struct Reporter {
    bool tsv = false;
    std::vector<std::pair<std::string, std::string>> rows;

    void kv(const std::string& key, const std::string& value) {
        rows.push_back({key, value});
    }
    void kv(const std::string& key, std::uint64_t value) {
        kv(key, std::to_string(value));
    }
    void flush() {
        if (tsv) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                std::cout << (i ? "\t" : "") << rows[i].second;
            }
            std::cout << "\n";
        } else {
            for (const auto& [k, v] : rows) std::cout << k << ": " << v << "\n";
        }
        rows.clear();
    }
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("TFA_BUDGET")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 10'000'000;
}

int report_difference(Reporter& rep, const EquivalenceVerdict& v,
                      const std::string& yes, const std::string& out_path) {
    switch (v.kind) {
        case EquivalenceVerdict::Kind::Equivalent:
        case EquivalenceVerdict::Kind::EquivalentUpToBound:
            rep.kv("verdict", yes);
            rep.kv("max-rows", v.max_rows);
            rep.kv("max-cols", v.max_cols);
            rep.flush();
            return 0;
        case EquivalenceVerdict::Kind::Counterexample:
            rep.kv("verdict", "COUNTEREXAMPLE");
            rep.kv("rows", v.witness->rows());
            rep.kv("cols", v.witness->cols());
            rep.kv("accepted-by-a", v.witness_accepted_by_a ? "yes" : "no");
            rep.kv("accepted-by-b", v.witness_accepted_by_b ? "yes" : "no");
            if (!out_path.empty()) {
                write_file(out_path, v.witness->serialize());
                rep.kv("written", out_path);
            }
            rep.flush();
            return 1;
        case EquivalenceVerdict::Kind::Infeasible:
            rep.kv("verdict", "INFEASIBLE");
            if (v.required_bound) rep.kv("required-bound", *v.required_bound);
            rep.flush();
            return 2;
    }
    return 3;
}

std::string comp_text(const LBASpec& m, const Comp& c) {
    std::string out(1, m.gamma[c.sym]);
    if (c.state >= 0) out += "_" + m.states[c.state];
    return out;
}

}  // namespace

int dispatch(std::vector<std::string> args) {
    CLI::App app{"tfa: a toolkit for two-dimensional finite automata"};
    app.footer(
        "Exit codes: 0 affirmative (ACCEPT / EMPTY / EQUIVALENT / "
        "INCLUDED-UP-TO / UNIVERSAL / ACCEPTED / done), 1 negative "
        "(REJECT / NONEMPTY / COUNTEREXAMPLE / REJECTED), 2 bounded or "
        "infeasible (EMPTY-UP-TO / INFEASIBLE / BUDGET-EXHAUSTED / "
        "incomplete spectrum), 3 usage or parse error.");
    app.require_subcommand(1);
    app.fallthrough();

    Reporter rep;
    std::string format = "text";
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "tsv"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Random seed (reserved for corpus tools)");

    std::string path_a, path_b, path_word, out_path, axis_str = "row";
    std::string gadget, kind, config_text, input_word;
    std::uint64_t budget = default_budget();
    std::uint64_t table_budget = 10'000;
    std::uint64_t bound = 0;
    std::size_t max_rows = 0, max_cols = 0;
    bool exact = false, want_trace = false;

    auto* c_run = app.add_subcommand("run", "Decide membership of a word");
    c_run->add_option("automaton", path_a)->required();
    c_run->add_option("word", path_word)->required();
    c_run->add_flag("--trace", want_trace,
                    "Print the run of a deterministic machine");

    auto* c_empty = app.add_subcommand(
        "empty", "Decide emptiness (exact for two-way, bounded for unary "
                 "three-way)");
    c_empty->add_option("automaton", path_a)->required();
    auto* bound_opt =
        c_empty->add_option("--bound", bound, "Unary length bound override");
    c_empty->add_option("-o,--output", out_path, "Witness output path");

    auto* c_equal = app.add_subcommand("equal", "Compare two languages");
    c_equal->add_option("a", path_a)->required();
    c_equal->add_option("b", path_b)->required();
    c_equal->add_flag("--exact", exact,
                      "Decide exactly via the pumping bound (deterministic "
                      "two-way only)");
    c_equal->add_option("--max-rows", max_rows);
    c_equal->add_option("--max-cols", max_cols);
    c_equal->add_option("--budget", budget, "Membership call budget");
    c_equal->add_option("-o,--output", out_path, "Counterexample output path");

    auto* c_incl = app.add_subcommand(
        "include", "Check L(a) minus L(b) up to a size bound");
    c_incl->add_option("a", path_a)->required();
    c_incl->add_option("b", path_b)->required();
    c_incl->add_option("--max-rows", max_rows)->required();
    c_incl->add_option("--max-cols", max_cols)->required();
    c_incl->add_option("--budget", budget, "Membership call budget");
    c_incl->add_option("-o,--output", out_path, "Counterexample output path");

    auto* c_univ = app.add_subcommand(
        "universal", "Decide universality (deterministic two-way only)");
    c_univ->add_option("automaton", path_a)->required();
    c_univ->add_option("--budget", budget, "Membership call budget");
    c_univ->add_option("-o,--output", out_path, "Counterexample output path");

    auto* c_min = app.add_subcommand(
        "minimize", "Reduce a deterministic two-way machine");
    c_min->add_option("automaton", path_a)->required();
    c_min->add_option("-o,--output", out_path)->required();

    auto* c_prow = app.add_subcommand(
        "project-row", "First-row projection as a one-dimensional NFA");
    c_prow->add_option("automaton", path_a)->required();
    c_prow->add_option("-o,--output", out_path)->required();

    auto* c_pcol = app.add_subcommand(
        "project-col", "First-column projection as a one-dimensional NFA");
    c_pcol->add_option("automaton", path_a)->required();
    c_pcol->add_option("-o,--output", out_path)->required();

    auto* c_spec = app.add_subcommand(
        "spectrum", "Bounded enumeration of a projection language");
    c_spec->add_option("automaton", path_a)->required();
    c_spec->add_option("--axis", axis_str)
        ->check(CLI::IsMember({"row", "col"}));
    c_spec->add_option("--max-rows", max_rows)->required();
    c_spec->add_option("--max-cols", max_cols)->required();
    c_spec->add_option("--budget", budget, "Membership call budget");

    auto* c_build = app.add_subcommand("build", "Emit a built-in gadget");
    c_build->add_option("gadget", gadget, "Only 'composite' exists")
        ->required();
    c_build->add_option("-o,--output", out_path)->required();

    auto* c_reduce = app.add_subcommand(
        "reduce", "Emit the table checker of a deterministic LBA");
    c_reduce->add_option("kind", kind, "Only 'lba' exists")->required();
    c_reduce->add_option("machine", path_b)->required();
    c_reduce->add_option("-o,--output", out_path)->required();

    auto* c_enc = app.add_subcommand(
        "encode-config", "Double-encode one LBA configuration");
    c_enc->add_option("machine", path_b)->required();
    c_enc->add_option("config", config_text, "e.g. \"a b_q c\"")->required();

    auto* c_table = app.add_subcommand(
        "lba-table", "Run an LBA and emit its computation table");
    c_table->add_option("machine", path_b)->required();
    c_table->add_option("word", input_word)->required();
    c_table->add_option("--budget", table_budget, "Step budget");
    c_table->add_option("-o,--output", out_path, "Table output path");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }
    rep.tsv = format == "tsv";

    try {
        if (app.got_subcommand(c_run)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            Word2D w = Word2D::parse(read_file(path_word));
            if (want_trace) {
                TraceResult t = trace(a, w);
                for (std::size_t i = 0; i < t.trace.size(); ++i) {
                    std::cout << "step " << i << ": "
                              << format_configuration(a, t.trace[i]) << "\n";
                }
                if (t.cause == HaltCause::LoopDetected) {
                    std::cout << "loop back to step " << *t.loop_start << "\n";
                }
            }
            bool acc = membership(a, w) == Verdict::Accept;
            rep.kv("verdict", acc ? "ACCEPT" : "REJECT");
            rep.flush();
            return acc ? 0 : 1;
        }
        if (app.got_subcommand(c_empty)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            EmptinessVerdict v;
            if (a.cls.ways == Ways::ThreeWay) {
                std::optional<std::size_t> b;
                if (bound_opt->count()) b = bound;
                v = emptiness_unary_3w(a, b);
            } else {
                v = emptiness_2w(a);
            }
            switch (v.kind) {
                case EmptinessVerdict::Kind::Empty:
                    rep.kv("verdict", "EMPTY");
                    rep.flush();
                    return 0;
                case EmptinessVerdict::Kind::NonEmpty: {
                    rep.kv("verdict", "NONEMPTY");
                    Word2D w = v.witness ? *v.witness
                                         : Word2D::unary(1, *v.witness_length,
                                                         a.alphabet.at(0));
                    rep.kv("witness-rows", w.rows());
                    rep.kv("witness-cols", w.cols());
                    if (!out_path.empty()) {
                        write_file(out_path, w.serialize());
                        rep.kv("written", out_path);
                    }
                    rep.flush();
                    return 1;
                }
                case EmptinessVerdict::Kind::EmptyUpToBound:
                    rep.kv("verdict", "EMPTY-UP-TO");
                    rep.kv("bound", *v.bound);
                    rep.flush();
                    return 2;
            }
        }
        if (app.got_subcommand(c_equal)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            Automaton2D b = parse_automaton(read_file(path_b));
            if (exact) {
                return report_difference(rep, decide_equivalence(a, b, budget),
                                         "EQUIVALENT", out_path);
            }
            if (max_rows == 0 || max_cols == 0) {
                throw std::invalid_argument(
                    "equal needs --exact or --max-rows/--max-cols");
            }
            return report_difference(
                rep,
                bounded_difference(a, b, max_rows, max_cols,
                                   DifferenceSide::Symmetric, budget),
                "EQUIVALENT-UP-TO", out_path);
        }
        if (app.got_subcommand(c_incl)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            Automaton2D b = parse_automaton(read_file(path_b));
            return report_difference(
                rep,
                bounded_difference(a, b, max_rows, max_cols,
                                   DifferenceSide::AminusB, budget),
                "INCLUDED-UP-TO", out_path);
        }
        if (app.got_subcommand(c_univ)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            return report_difference(rep, universality(a, budget), "UNIVERSAL",
                                     out_path);
        }
        if (app.got_subcommand(c_min)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            Automaton2D m = minimize(a);
            write_file(out_path, serialize_automaton(m));
            rep.kv("states-before", a.states.size());
            rep.kv("states-after", m.states.size());
            rep.kv("written", out_path);
            rep.flush();
            return 0;
        }
        if (app.got_subcommand(c_prow) || app.got_subcommand(c_pcol)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            OneDimNFA n = app.got_subcommand(c_prow) ? row_projection_nfa(a)
                                                     : col_projection_nfa(a);
            write_file(out_path, serialize_onedim_nfa(n));
            rep.kv("states", n.states.size());
            rep.kv("written", out_path);
            rep.flush();
            return 0;
        }
        if (app.got_subcommand(c_spec)) {
            Automaton2D a = parse_automaton(read_file(path_a));
            Spectrum s =
                spectrum(a, axis_str == "row" ? Axis::Row : Axis::Column,
                         max_rows, max_cols, budget);
            std::string members;
            for (const auto& w : s.members) {
                if (!members.empty()) members += ' ';
                members += w;
            }
            rep.kv("axis", axis_str);
            rep.kv("complete", s.complete ? "yes" : "no");
            rep.kv("count", s.members.size());
            rep.kv("members", members);
            rep.flush();
            return s.complete ? 0 : 2;
        }
        if (app.got_subcommand(c_build)) {
            if (gadget != "composite") {
                throw std::invalid_argument("unknown gadget " + gadget);
            }
            Automaton2D c = build_composite();
            write_file(out_path, serialize_automaton(c));
            rep.kv("states", c.states.size());
            rep.kv("written", out_path);
            rep.flush();
            return 0;
        }
        if (app.got_subcommand(c_reduce)) {
            if (kind != "lba") {
                throw std::invalid_argument("unknown reduction " + kind);
            }
            LBASpec m = parse_lba(read_file(path_b));
            Automaton2D c = build_checker(m);
            write_file(out_path, serialize_automaton(c));
            rep.kv("states", c.states.size());
            rep.kv("alphabet-size", c.alphabet.size());
            rep.kv("written", out_path);
            rep.flush();
            return 0;
        }
        if (app.got_subcommand(c_enc)) {
            LBASpec m = parse_lba(read_file(path_b));
            pair_alphabet(m);  // codec size check
            LBAConfig c = parse_lba_config(m, config_text);
            PairRow row = double_encode(c);
            std::string pairs, chars;
            for (const auto& p : row) {
                if (!pairs.empty()) pairs += ",";
                pairs += "(" + comp_text(m, p.first) + "," +
                         comp_text(m, p.second) + ")";
                chars += pair_char(m, p);
            }
            rep.kv("pairs", pairs);
            rep.kv("chars", chars);
            rep.flush();
            return 0;
        }
        if (app.got_subcommand(c_table)) {
            LBASpec m = parse_lba(read_file(path_b));
            TableResult r = accepting_table(m, input_word, table_budget);
            switch (r.status) {
                case TableStatus::Accepted:
                    rep.kv("verdict", "ACCEPTED");
                    rep.kv("steps", r.steps);
                    rep.kv("rows", r.table->rows());
                    rep.kv("cols", r.table->cols());
                    if (!out_path.empty()) {
                        write_file(out_path, r.table->serialize());
                        rep.kv("written", out_path);
                    }
                    rep.flush();
                    return 0;
                case TableStatus::Rejected:
                    rep.kv("verdict", "REJECTED");
                    rep.kv("steps", r.steps);
                    rep.flush();
                    return 1;
                case TableStatus::BudgetExhausted:
                    rep.kv("verdict", "BUDGET-EXHAUSTED");
                    rep.kv("steps", r.steps);
                    rep.flush();
                    return 2;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace tfa
