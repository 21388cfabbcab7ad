#include "rnc/lp.hpp"

#include "rnc/hornnc.hpp"
#include "rnc/parser.hpp"
#include "rnc/solver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace rnc {

bool Chain::contains(const TruthValue& t) const
{
    TruthValue::Rational scaled = t.value() * k;
    return denominator(scaled) == 1;
}

std::vector<TruthValue> Chain::values() const
{
    std::vector<TruthValue> out;
    out.reserve(k + 1);
    for (unsigned i = 0; i <= k; ++i)
        out.push_back(TruthValue::ratio(i, k));
    return out;
}

namespace {

bool positive_only(const Formula& f)
{
    bool ok = true;
    for (const auto& [occ, id] : subformulas(f)) {
        const Node& n = f.node(id);
        if (n.is_const() || (n.is_lit() && !n.lit().positive()))
            ok = false;
    }
    return ok;
}

} // namespace

HncRule make_rule(Formula body, Formula head)
{
    if (!positive_only(body))
        throw Error("rule body must contain only positive literals");
    if (contains_constant(head))
        throw NotConstantFree("rule head must be constant-free");
    if (!is_horn_nc_pattern(head).is_hnc)
        throw NotHnc("rule head must be Horn-NC");
    return HncRule{std::move(body), std::move(head)};
}

namespace {

NodeId negate_rec(const Formula& f, NodeId id, const Chain& chain, FormulaBuilder& b)
{
    const Node& n = f.node(id);
    if (n.is_lit()) {
        const Literal& l = n.lit();
        if (!l.positive())
            throw Error("negation target must contain only positive literals");
        if (!chain.contains(l.threshold))
            throw ThresholdNotInChain("threshold " + l.threshold.str() +
                                      " is not a multiple of 1/" + std::to_string(chain.k));
        if (l.threshold == TruthValue::zero())
            return b.disj({}); // X>=0 is a tautology; its negation is bottom
        TruthValue::Rational scaled = l.threshold.value() * chain.k;
        auto steps = numerator(scaled); // exact: threshold = steps/k
        std::int64_t i = steps.convert_to<std::int64_t>();
        return b.leq(l.prop, TruthValue::ratio(i - 1, chain.k));
    }
    if (n.is_const())
        throw Error("negation target must be constant-free");
    std::vector<NodeId> kids;
    kids.reserve(n.conn().kids.size());
    for (NodeId k : n.conn().kids)
        kids.push_back(negate_rec(f, k, chain, b));
    return n.is_conj() ? b.disj(std::move(kids)) : b.conj(std::move(kids));
}

} // namespace

Formula negate_positive(const Formula& f, const Chain& chain)
{
    FormulaBuilder b;
    return b.finish(negate_rec(f, f.root(), chain, b));
}

Formula to_formula(const std::vector<Literal>& facts, const Program& p)
{
    FormulaBuilder b;
    std::vector<NodeId> top;
    for (const Literal& l : facts)
        top.push_back(b.lit(l.sign, l.prop, l.threshold));
    for (const HncRule& r : p.rules) {
        Formula nb = negate_positive(r.body, p.chain);
        std::vector<NodeId> kids;
        auto splice_side = [&](const Formula& g) {
            const Node& gr = g.node(g.root());
            if (gr.is_disj())
                for (NodeId k : gr.conn().kids)
                    kids.push_back(b.import(g, k));
            else
                kids.push_back(b.import(g, g.root()));
        };
        splice_side(nb);
        splice_side(r.head);
        top.push_back(b.disj(std::move(kids)));
    }
    return b.finish(b.conj(std::move(top)));
}

std::optional<Interpretation> minimal_model(const std::vector<Literal>& facts,
                                            const Program& p)
{
    SolveOptions opts;
    opts.record_trace = false;
    SolveResult r = solve(to_formula(facts, p), opts);
    if (r.status == SolveResult::Status::Unsat)
        return std::nullopt;
    return std::move(r.model);
}

Entailment entails(const std::vector<Literal>& facts, const Program& p,
                   const Formula& query)
{
    auto m = minimal_model(facts, p);
    if (!m)
        return Entailment::UnsatProgram;
    return evaluate(query, *m) ? Entailment::True : Entailment::False;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

ProgramFile parse_program(std::string_view text)
{
    ProgramFile out;
    bool have_chain = false;
    std::size_t pos = 0, line_start = 0;
    auto fail = [&](const std::string& msg, std::size_t at, std::size_t len) -> void {
        throw ParseError(msg, SourceSpan{at, at + len});
    };
    while (line_start < text.size() || (line_start == 0 && !text.empty())) {
        std::size_t eol = text.find('\n', line_start);
        std::string_view raw = text.substr(
            line_start, eol == std::string_view::npos ? std::string_view::npos
                                                      : eol - line_start);
        pos = line_start;
        line_start = eol == std::string_view::npos ? text.size() : eol + 1;

        std::string_view line = raw;
        auto hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) {
            if (eol == std::string_view::npos)
                break;
            continue;
        }

        if (line.rfind("chain", 0) == 0 &&
            (line.size() == 5 || std::isspace(static_cast<unsigned char>(line[5])))) {
            if (have_chain)
                fail("duplicate chain header", pos, raw.size());
            std::string_view arg = trim(line.substr(5));
            unsigned k = 0;
            for (char c : arg) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    fail("chain granularity must be a positive integer", pos, raw.size());
                k = k * 10 + static_cast<unsigned>(c - '0');
                if (k > 1000000)
                    fail("chain granularity out of range", pos, raw.size());
            }
            if (arg.empty() || k == 0)
                fail("chain granularity must be a positive integer", pos, raw.size());
            out.program.chain.k = k;
            have_chain = true;
        } else if (line.rfind("fact", 0) == 0 && line.size() > 5 &&
                   std::isspace(static_cast<unsigned char>(line[4]))) {
            Formula f = parse(trim(line.substr(4)));
            const Node& n = f.node(f.root());
            if (!n.is_lit() || !n.lit().positive())
                fail("fact must be a single positive literal", pos, raw.size());
            out.facts.push_back(n.lit());
        } else if (line.rfind("rule", 0) == 0 && line.size() > 5 &&
                   std::isspace(static_cast<unsigned char>(line[4]))) {
            std::string_view rest = line.substr(4);
            auto arrow = rest.find("->");
            if (arrow == std::string_view::npos)
                fail("rule line needs 'BODY -> HEAD'", pos, raw.size());
            Formula body = parse(trim(rest.substr(0, arrow)));
            Formula head = parse(trim(rest.substr(arrow + 2)));
            try {
                out.program.rules.push_back(make_rule(std::move(body), std::move(head)));
            } catch (const Error& e) {
                fail(e.what(), pos, raw.size());
            }
        } else {
            fail("unrecognized program line", pos, raw.size());
        }
        if (eol == std::string_view::npos)
            break;
    }
    if (!have_chain)
        throw ParseError("program file needs a 'chain k' header", SourceSpan{0, 0});
    return out;
}

} // namespace rnc
