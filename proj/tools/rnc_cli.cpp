#include "rnc/clausal.hpp"
#include "rnc/gen.hpp"
#include "rnc/hornnc.hpp"
#include "rnc/lp.hpp"
#include "rnc/parser.hpp"
#include "rnc/semantics.hpp"
#include "rnc/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw rnc::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

rnc::Formula load_formula(const std::string& path)
{
    return rnc::parse(read_input(path));
}

// The calculus operates on constant-free formulas; the CLI removes
// constants up front. The result is constant-free or a bare T / F.
rnc::Formula load_simplified(const std::string& path)
{
    rnc::Formula f = load_formula(path);
    return rnc::contains_constant(f) ? rnc::simplify_constants(f) : f;
}

bool is_const_atom(const rnc::Formula& f)
{
    return f.node(f.root()).is_const();
}

std::string format_step(const rnc::TraceStep& s)
{
    std::string lits;
    for (std::size_t i = 0; i < s.lits.size(); ++i) {
        if (i)
            lits += ",";
        lits += rnc::print_literal(s.lits[i]);
    }
    return std::string(rnc::rule_name_str(s.rule)) + "  " + lits + "  @" + s.occ.str();
}

json model_json(const rnc::Interpretation& m)
{
    json j = json::object();
    for (const auto& [name, value] : m.values)
        j[name] = value.str();
    return j;
}

struct Options {
    std::string format = "text";
    bool json_out() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void emit(const Options& opt, const json& j, const std::string& text)
{
    if (opt.json_out())
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

int run(int argc, char** argv)
{
    CLI::App app{"Regular many-valued non-clausal formula toolkit"};
    app.require_subcommand(1);

    int exit_code = 0;

    // parse
    {
        auto opt = std::make_shared<Options>();
        auto file = std::make_shared<std::string>();
        CLI::App* c = app.add_subcommand("parse", "Parse a formula and print its canonical form");
        c->add_option("file", *file, "Formula file ('-' for stdin)")->required();
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            rnc::Formula f = load_formula(*file);
            std::string text = rnc::print(f);
            emit(*opt,
                 json{{"formula", text}, {"literals", rnc::literal_count(f)}},
                 text + "\n");
            exit_code = 0;
        });
    }

    // recognize
    {
        auto opt = std::make_shared<Options>();
        auto file = std::make_shared<std::string>();
        CLI::App* c = app.add_subcommand("recognize", "Horn-NC recognition");
        c->add_option("file", *file, "Formula file ('-' for stdin)")->required();
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            rnc::Formula f = load_simplified(*file);
            bool hnc = true;
            std::string witness;
            if (!is_const_atom(f)) { // T and F are both Horn-NC
                rnc::HncVerdict v = rnc::is_horn_nc_pattern(f);
                hnc = v.is_hnc;
                if (v.witness)
                    witness = v.witness->str();
            }
            json j{{"horn_nc", hnc}};
            std::string text = hnc ? "HORN-NC\n" : "NOT-HORN-NC " + witness + "\n";
            if (!hnc)
                j["witness"] = witness;
            emit(*opt, j, text);
            exit_code = 0;
        });
    }

    // solve
    {
        auto opt = std::make_shared<Options>();
        auto file = std::make_shared<std::string>();
        auto trace = std::make_shared<bool>(false);
        auto extra = std::make_shared<bool>(false);
        CLI::App* c = app.add_subcommand("solve", "Decide Horn-NC satisfiability");
        c->add_option("file", *file, "Formula file ('-' for stdin)")->required();
        c->add_flag("--trace", *trace, "Print one calculus step per line");
        c->add_flag("--extra-rules", *extra, "Enable the extra disjunction rules");
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            rnc::Formula f = load_simplified(*file);
            if (is_const_atom(f)) {
                bool top = f.node(f.root()).cst().is_top();
                emit(*opt, json{{"status", top ? "SAT" : "UNSAT"}, {"model", json::object()}},
                     top ? "SAT\n" : "UNSAT\n");
                exit_code = top ? 0 : 1;
                return;
            }
            rnc::SolveOptions so;
            so.record_trace = *trace;
            so.extra_rules = *extra;
            rnc::SolveResult r = rnc::solve(f, so);
            bool sat = r.status == rnc::SolveResult::Status::Sat;
            json j{{"status", sat ? "SAT" : "UNSAT"}};
            std::string text = sat ? "SAT\n" : "UNSAT\n";
            if (sat) {
                // unit-free propositions sit at 0 in the model; print them too
                rnc::Interpretation full = *r.model;
                rnc::for_each_subformula(f, [&](const rnc::OccRef&, rnc::NodeId id) {
                    const rnc::Node& n = f.node(id);
                    if (n.is_lit())
                        full.values.emplace(n.lit().prop, rnc::TruthValue::zero());
                });
                j["model"] = model_json(full);
                text += full.str();
            }
            if (*trace) {
                json steps = json::array();
                for (const rnc::TraceStep& s : r.trace.steps) {
                    text += format_step(s) + "\n";
                    json lits = json::array();
                    for (const rnc::Literal& l : s.lits)
                        lits.push_back(rnc::print_literal(l));
                    steps.push_back({{"rule", rnc::rule_name_str(s.rule)},
                                     {"lits", lits},
                                     {"path", s.occ.str()}});
                }
                j["trace"] = steps;
            }
            emit(*opt, j, text);
            exit_code = sat ? 0 : 1;
        });
    }

    // clausal
    {
        auto opt = std::make_shared<Options>();
        auto file = std::make_shared<std::string>();
        auto max_clauses = std::make_shared<std::size_t>(100000);
        CLI::App* c = app.add_subcommand("clausal", "Distributive clausal conversion");
        c->add_option("file", *file, "Formula file ('-' for stdin)")->required();
        c->add_option("--max-clauses", *max_clauses, "Clause-count limit")
            ->capture_default_str();
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            rnc::Formula f = load_simplified(*file);
            rnc::ClausalFormula cl;
            if (is_const_atom(f)) {
                if (!f.node(f.root()).cst().is_top())
                    cl.clauses.push_back({}); // F: one empty clause
            } else {
                cl = rnc::to_clausal(f, *max_clauses);
            }
            std::string text = cl.str();
            emit(*opt, json{{"formula", text}, {"clauses", cl.clauses.size()}},
                 text + "\n");
            exit_code = 0;
        });
    }

    // oracle
    {
        auto opt = std::make_shared<Options>();
        auto file = std::make_shared<std::string>();
        auto budget = std::make_shared<std::uint64_t>(1000000);
        CLI::App* c = app.add_subcommand("oracle", "Brute-force satisfiability over the candidate grid");
        c->add_option("file", *file, "Formula file ('-' for stdin)")->required();
        c->add_option("--budget", *budget, "Grid-size budget")->capture_default_str();
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            rnc::Formula f = load_formula(*file);
            rnc::OracleResult r = rnc::oracle_sat(f, *budget);
            bool sat = r.status == rnc::OracleResult::Status::Sat;
            json j{{"status", sat ? "SAT" : "UNSAT"},
                   {"candidates_checked", r.candidates_checked}};
            std::string text = sat ? "SAT\n" : "UNSAT\n";
            if (sat) {
                j["witness"] = model_json(*r.witness);
                text += r.witness->str();
            }
            emit(*opt, j, text);
            exit_code = sat ? 0 : 1;
        });
    }

    // lp query
    {
        auto opt = std::make_shared<Options>();
        auto program = std::make_shared<std::string>();
        auto query = std::make_shared<std::string>();
        CLI::App* lp = app.add_subcommand("lp", "Logic programming over HNC rule programs");
        lp->require_subcommand(1);
        CLI::App* c = lp->add_subcommand("query", "Minimal-model query answering");
        c->add_option("--program", *program, "Program file (.rlp)")->required();
        c->add_option("--query", *query, "Query formula")->required();
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            rnc::ProgramFile pf = rnc::parse_program(read_input(*program));
            rnc::Formula q = rnc::parse(*query);
            bool mixed = false;
            for (const auto& [occ, id] : rnc::subformulas(q)) {
                const rnc::Node& n = q.node(id);
                if (n.is_lit() && !n.lit().positive())
                    mixed = true;
            }
            rnc::Entailment e = rnc::entails(pf.facts, pf.program, q);
            std::string verdict = e == rnc::Entailment::True      ? "TRUE"
                                  : e == rnc::Entailment::False   ? "FALSE"
                                                                  : "UNSAT-PROGRAM";
            std::string text = verdict + "\n";
            json j{{"result", verdict}, {"minimal_model_entailment", mixed}};
            // LEQ literals make this minimal-model entailment, not
            // classical consequence; flag it.
            if (mixed && e != rnc::Entailment::UnsatProgram)
                text += "MINIMAL-MODEL-ENTAILMENT\n";
            emit(*opt, j, text);
            exit_code = e == rnc::Entailment::True    ? 0
                        : e == rnc::Entailment::False ? 1
                                                      : 3;
        });
    }

    // gen
    {
        auto opt = std::make_shared<Options>();
        auto cfg = std::make_shared<rnc::GenConfig>();
        auto mode = std::make_shared<std::string>("hnc");
        CLI::App* c = app.add_subcommand("gen", "Deterministic random formula generator");
        c->add_option("--seed", cfg->seed, "PRNG seed")->capture_default_str();
        c->add_option("--props", cfg->props, "Proposition count")->capture_default_str();
        c->add_option("--depth", cfg->depth, "Nesting depth")->capture_default_str();
        c->add_option("--arity", cfg->arity, "Max children per connective")
            ->capture_default_str();
        c->add_option("--chain", cfg->chain, "Threshold granularity")->capture_default_str();
        c->add_option("--mode", *mode, "hnc | general | conjunctive")
            ->check(CLI::IsMember({"hnc", "general", "conjunctive"}))
            ->capture_default_str();
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            cfg->mode = *mode == "hnc"       ? rnc::GenMode::Hnc
                        : *mode == "general" ? rnc::GenMode::GeneralNc
                                             : rnc::GenMode::ConjunctiveHnc;
            rnc::Formula f = rnc::gen_random(*cfg);
            std::string text = rnc::print(f);
            emit(*opt, json{{"formula", text}, {"literals", rnc::literal_count(f)}},
                 text + "\n");
            exit_code = 0;
        });
    }

    // bench
    {
        auto opt = std::make_shared<Options>();
        auto cfg = std::make_shared<rnc::GenConfig>();
        auto sizes = std::make_shared<std::vector<std::size_t>>();
        CLI::App* c = app.add_subcommand("bench", "Solver scaling benchmark");
        c->add_option("--sizes", *sizes, "Literal counts (ascending)")
            ->delimiter(',')
            ->required();
        c->add_option("--seed", cfg->seed, "PRNG seed")->capture_default_str();
        c->add_option("--chain", cfg->chain, "Threshold granularity")->capture_default_str();
        add_format(c, *opt);
        c->callback([=, &exit_code] {
            rnc::BenchReport r = rnc::bench(*sizes, *cfg);
            std::string text;
            json rows = json::array();
            for (const rnc::BenchRow& row : r.rows) {
                text += "n=" + std::to_string(row.n) +
                        " literals=" + std::to_string(row.literals) +
                        " seconds=" + std::to_string(row.seconds) +
                        " steps=" + std::to_string(row.steps) + "\n";
                rows.push_back({{"n", row.n},
                                {"literals", row.literals},
                                {"seconds", row.seconds},
                                {"steps", row.steps}});
            }
            json j{{"rows", rows}};
            if (r.exponent) {
                text += "exponent=" + std::to_string(*r.exponent) + "\n";
                j["exponent"] = *r.exponent;
            }
            emit(*opt, j, text);
            exit_code = 0;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
