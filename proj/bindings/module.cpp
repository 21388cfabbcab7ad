#include "rnc/clausal.hpp"
#include "rnc/gen.hpp"
#include "rnc/hornnc.hpp"
#include "rnc/lp.hpp"
#include "rnc/parser.hpp"
#include "rnc/semantics.hpp"
#include "rnc/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rnc;

namespace {

Interpretation to_interp(const std::map<std::string, std::string>& values)
{
    Interpretation m;
    for (const auto& [name, text] : values) {
        auto r = TruthValue::parse(text);
        if (r.status != TruthValue::ParseStatus::Ok)
            throw py::value_error("bad truth value for " + name + ": " + text);
        m.values.emplace(name, r.value);
    }
    return m;
}

std::map<std::string, std::string> from_interp(const Interpretation& m)
{
    std::map<std::string, std::string> out;
    for (const auto& [name, value] : m.values)
        out.emplace(name, value.str());
    return out;
}

} // namespace

PYBIND11_MODULE(_rncsat, m)
{
    m.doc() = "Regular many-valued non-clausal formulas: Horn-NC recognition, "
              "unit-resolution satisfiability, clausal conversion, LP queries";

    py::class_<Formula>(m, "Formula")
        .def("__str__", [](const Formula& f) { return print(f); })
        .def("__repr__",
             [](const Formula& f) { return "Formula('" + print(f) + "')"; })
        .def("__eq__",
             [](const Formula& a, const Formula& b) {
                 return structurally_equal(a, b);
             })
        .def_property_readonly("literals",
                               [](const Formula& f) { return literal_count(f); });

    m.def("parse", [](const std::string& text) { return parse(text); },
          py::arg("text"), "Parse a formula from the text grammar");
    m.def("print_formula", [](const Formula& f) { return print(f); });
    m.def("simplify_constants", &simplify_constants);

    m.def("evaluate",
          [](const Formula& f, const std::map<std::string, std::string>& interp) {
              return evaluate(f, to_interp(interp));
          },
          py::arg("formula"), py::arg("interpretation"),
          "Min/max evaluation into {0,1}; unmapped propositions read as 0");

    m.def("is_horn_nc",
          [](const Formula& f) { return is_horn_nc_pattern(f).is_hnc; });
    m.def("is_negative", &is_negative);

    m.def("to_clausal",
          [](const Formula& f, std::size_t max_clauses) {
              return to_clausal(f, max_clauses).str();
          },
          py::arg("formula"), py::arg("max_clauses") = 100000);

    m.def("solve",
          [](const Formula& f, bool extra_rules) {
              SolveOptions opts;
              opts.extra_rules = extra_rules;
              SolveResult r = solve(f, opts);
              py::dict out;
              bool sat = r.status == SolveResult::Status::Sat;
              out["status"] = sat ? "SAT" : "UNSAT";
              if (sat)
                  out["model"] = from_interp(*r.model);
              py::list steps;
              for (const TraceStep& s : r.trace.steps) {
                  py::dict step;
                  step["rule"] = rule_name_str(s.rule);
                  py::list lits;
                  for (const Literal& l : s.lits)
                      lits.append(print_literal(l));
                  step["lits"] = lits;
                  step["path"] = s.occ.str();
                  steps.append(step);
              }
              out["trace"] = steps;
              out["final"] = print(r.final_formula);
              return out;
          },
          py::arg("formula"), py::arg("extra_rules") = false,
          "Decide satisfiability of a constant-free Horn-NC formula");

    m.def("oracle_sat",
          [](const Formula& f, std::uint64_t budget) {
              OracleResult r = oracle_sat(f, budget);
              py::dict out;
              bool sat = r.status == OracleResult::Status::Sat;
              out["status"] = sat ? "SAT" : "UNSAT";
              if (sat)
                  out["witness"] = from_interp(*r.witness);
              out["candidates_checked"] = r.candidates_checked;
              return out;
          },
          py::arg("formula"), py::arg("budget") = 1000000ull);

    m.def("lp_query",
          [](const std::string& program_text, const std::string& query_text) {
              ProgramFile pf = parse_program(program_text);
              Formula q = parse(query_text);
              switch (entails(pf.facts, pf.program, q)) {
              case Entailment::True: return "TRUE";
              case Entailment::False: return "FALSE";
              default: return "UNSAT-PROGRAM";
              }
          },
          py::arg("program"), py::arg("query"),
          "Answer a minimal-model query against an .rlp program text");

    m.def("gen_random",
          [](std::uint64_t seed, unsigned props, unsigned depth, unsigned arity,
             unsigned chain, const std::string& mode) {
              GenConfig cfg;
              cfg.seed = seed;
              cfg.props = props;
              cfg.depth = depth;
              cfg.arity = arity;
              cfg.chain = chain;
              if (mode == "hnc")
                  cfg.mode = GenMode::Hnc;
              else if (mode == "general")
                  cfg.mode = GenMode::GeneralNc;
              else if (mode == "conjunctive")
                  cfg.mode = GenMode::ConjunctiveHnc;
              else
                  throw py::value_error("mode must be hnc, general or conjunctive");
              return gen_random(cfg);
          },
          py::arg("seed") = 42, py::arg("props") = 8, py::arg("depth") = 4,
          py::arg("arity") = 3, py::arg("chain") = 10, py::arg("mode") = "hnc");

    // later registrations are matched first, so the subclass goes second
    py::register_exception<Error>(m, "RncError");
    py::register_exception<ParseError>(m, "FormulaParseError");
}
