#include "ureq/cli.hpp"

#include "ureq/decide.hpp"
#include "ureq/error.hpp"
#include "ureq/exact.hpp"
#include "ureq/family.hpp"
#include "ureq/graph_io.hpp"
#include "ureq/harness.hpp"
#include "ureq/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ureq::cli {

namespace {

struct Common {
    std::string format = "auto";
    std::string output = "text";
    std::string input = "-";
};

struct BudgetFlags {
    int max_order = SolveBudget{}.max_order;
    std::uint64_t max_nodes = SolveBudget{}.max_nodes;
    bool force = false;

    SolveBudget budget() const { return SolveBudget{max_order, max_nodes, force}; }
};

void add_common(CLI::App* cmd, Common& c, bool with_input)
{
    cmd->add_option("--format", c.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edges"}));
    cmd->add_option("--output", c.output, "Output style")->check(CLI::IsMember({"text", "json"}));
    if (with_input)
        cmd->add_option("input", c.input, "Graph file, or - for standard input")->required();
}

void add_budget(CLI::App* cmd, BudgetFlags& b)
{
    cmd->add_option("--max-order", b.max_order, "Largest order the exact solvers accept")->check(CLI::PositiveNumber);
    cmd->add_option("--max-nodes", b.max_nodes, "Search node limit for the exact solvers");
    cmd->add_flag("--force", b.force, "Ignore --max-order (64 vertices stay the hard limit)");
}

std::string read_all(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

Graph load_graph(const Common& c, std::istream& in)
{
    const std::string text = read_all(c.input, in);
    if (c.format == "graph6")
        return parse_graph(text, GraphFormat::Graph6);
    if (c.format == "edges")
        return parse_graph(text, GraphFormat::EdgeList);
    return parse_graph(text);
}

std::string edges_text(const Matching& m)
{
    std::string s;
    for (const Edge& e : m) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return s.empty() ? "(empty)" : s;
}

std::string vertices_text(const VertexSet& vs)
{
    std::string s;
    for (Vertex v : vs) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(v);
    }
    return s;
}

std::string refutation_text(const Refutation& r)
{
    if (const auto* f = std::get_if<FailingComponent>(&r))
        return f->algorithm + " component not in B': " + vertices_text(f->component);
    if (const auto* s = std::get_if<SizeMismatch>(&r))
        return "sizes " + std::to_string(s->ur_size) + " (uniquely restricted) vs " + std::to_string(s->induced_size) +
               " (induced)";
    return "local violation: " + to_json(std::get<Lemma0Violation>(r)).dump();
}

void print_report(std::ostream& out, const DecisionReport& r)
{
    auto opt = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("unknown"); };
    out << "equal: " << (r.equal ? "true" : "false") << '\n';
    out << "nu_s: " << opt(r.nu_s) << '\n';
    out << "nu_ur: " << opt(r.nu_ur) << '\n';
    if (r.induced_witness)
        out << "induced_witness: " << edges_text(*r.induced_witness) << '\n';
    if (r.ur_witness)
        out << "ur_witness: " << edges_text(*r.ur_witness) << '\n';
    if (r.refutation)
        out << "refutation: " << refutation_text(*r.refutation) << '\n';
}

FamilyGraph generate_family(const std::string& family, int k, const std::string& ends)
{
    if (family == "lk") {
        if (!ends.empty())
            throw CLI::ValidationError("--ends", "L_k has open ends; --ends applies to b1 only");
        return generate_lk(k);
    }
    if (family == "b2") {
        if (!ends.empty())
            throw CLI::ValidationError("--ends", "--ends applies to b1 only");
        return generate_b2(k);
    }
    EndType left = EndType::Open;
    EndType right = EndType::Open;
    if (!ends.empty()) {
        const auto comma = ends.find(',');
        auto l = end_type_from_string(ends.substr(0, comma));
        auto r = comma == std::string::npos ? l : end_type_from_string(ends.substr(comma + 1));
        if (!l || !r)
            throw CLI::ValidationError("--ends", "expected two of open, edge, cap separated by a comma");
        left = *l;
        right = *r;
    }
    return generate_b1(k, left, right);
}

Requirement requirement_from(const std::string& s)
{
    if (s == "min_degree_2")
        return Requirement::MinDegree2;
    if (s == "two_connected")
        return Requirement::TwoConnected;
    return Requirement::None;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Decide whether a subcubic graph has equal maximum induced and uniquely restricted matching sizes",
                 "ureq"};
    app.require_subcommand(1);

    Common common;
    BudgetFlags budget;

    bool solve_exact = false;
    auto* decide = app.add_subcommand("decide", "Decide nu_s == nu_ur (exit 0 equal, 1 not equal)");
    add_common(decide, common, true);
    add_budget(decide, budget);
    decide->add_flag("--exact", solve_exact, "When not equal, also compute nu_s and a local violation exactly");

    std::string what;
    auto* exact = app.add_subcommand("exact", "Exact nu, nu_s or nu_ur with a witness");
    add_common(exact, common, true);
    add_budget(exact, budget);
    exact->add_option("--what", what, "Quantity")->required()->check(CLI::IsMember({"nu", "nus", "nuur"}));

    std::string family;
    int k = 0;
    std::string ends;
    bool with_spec = false;
    int n = 0;
    std::optional<std::uint64_t> seed;
    std::string require = "none";
    auto* gen = app.add_subcommand("gen", "Generate a family member or a seeded random subcubic graph");
    add_common(gen, common, false);
    gen->add_option("--family", family, "lk, b1, b2, random, or exhaustive (all classes up to --n vertices)")
        ->required()
        ->check(CLI::IsMember({"lk", "b1", "b2", "random", "exhaustive"}));
    gen->add_option("--k", k, "Ladder length");
    gen->add_option("--ends", ends, "B1 ends, e.g. open,cap");
    gen->add_flag("--with-spec", with_spec, "Emit {\"graph6\", \"spec\"} as JSON");
    gen->add_option("--n", n, "Order of a random graph, or the largest order for exhaustive");
    gen->add_option("--seed", seed, "Seed of a random graph");
    gen->add_option("--require", require, "Random graph requirement")
        ->check(CLI::IsMember({"none", "min_degree_2", "two_connected"}));

    std::string set;
    auto* member = app.add_subcommand("member", "Membership in B or B'");
    add_common(member, common, true);
    add_budget(member, budget);
    member->add_option("--set", set, "b or bprime")->required()->check(CLI::IsMember({"b", "bprime"}));

    std::string kind;
    std::string matching_text;
    auto* witness = app.add_subcommand("witness", "Certificate for a given matching");
    add_common(witness, common, true);
    witness->add_option("--kind", kind, "altcycle or lemma0")->required()->check(CLI::IsMember({"altcycle", "lemma0"}));
    witness->add_option("--matching", matching_text, "Edges as u-v,u-v")->required();

    bool oracle = false;
    std::optional<int> oracle_max_n;
    bool theorem1 = false;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify", "Batch-verify graph6 lines, JSON lines out");
    verify->add_option("input", common.input, "graph6 file, or - for standard input")->required();
    add_budget(verify, budget);
    verify->add_flag("--oracle", oracle, "Compare against brute force (n <= --oracle-max-n)");
    verify->add_option("--oracle-max-n", oracle_max_n, "Largest order checked by brute force (implies --oracle)")
        ->check(CLI::Range(1, kExactMaxOrder));
    verify->add_flag("--theorem1", theorem1, "Check equal <=> in B on 2-connected graphs of order >= 21");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const bool json = common.output == "json";
    try {
        if (decide->parsed()) {
            const Graph g = load_graph(common, in);
            if (!is_subcubic(g)) {
                err << "error: graph has maximum degree " << max_degree(g)
                    << "; decide needs a subcubic graph (use `exact` for arbitrary graphs)\n";
                return 2;
            }
            const DecisionReport r = decide_equality(g, DecideOptions{budget.budget(), solve_exact});
            if (json)
                out << to_json(r).dump() << '\n';
            else
                print_report(out, r);
            return r.equal ? 0 : 1;
        }

        if (exact->parsed()) {
            const Graph g = load_graph(common, in);
            SolveResult r;
            if (what == "nu")
                r = max_matching(g);
            else if (what == "nus")
                r = max_induced_matching(g, budget.budget());
            else
                r = max_uniquely_restricted_matching(g, budget.budget());
            if (json)
                out << Json{{"what", what}, {"value", r.size}, {"witness", to_json(r.witness)}}.dump() << '\n';
            else
                out << what << ": " << r.size << "\nwitness: " << edges_text(r.witness) << '\n';
            return 0;
        }

        if (gen->parsed()) {
            if (family == "exhaustive") {
                if (with_spec || json || common.format == "edges")
                    throw CLI::ValidationError("--family", "exhaustive output is plain graph6 lines");
                for (const Graph& g : exhaustive_connected_subcubic(n))
                    out << to_graph6(g) << '\n';
                return 0;
            }
            Graph g;
            std::optional<FamilySpec> spec;
            if (family == "random") {
                if (!seed)
                    throw CLI::ValidationError("--seed", "random graphs need an explicit --seed");
                if (n < 1)
                    throw CLI::ValidationError("--n", "random graphs need --n >= 1");
                if (with_spec)
                    throw CLI::ValidationError("--with-spec", "random graphs have no family spec");
                g = random_subcubic(n, *seed, requirement_from(require));
            } else {
                FamilyGraph fg = generate_family(family, k, ends);
                g = std::move(fg.graph);
                spec = std::move(fg.spec);
            }
            const bool edges = common.format == "edges";
            if (with_spec || json) {
                Json j;
                j[edges ? "edges" : "graph6"] = edges ? to_edge_list(g) : to_graph6(g);
                if (with_spec)
                    j["spec"] = to_json(*spec);
                out << j.dump() << '\n';
            } else {
                out << (edges ? to_edge_list(g) : to_graph6(g) + "\n");
            }
            return 0;
        }

        if (member->parsed()) {
            const Graph g = load_graph(common, in);
            const std::optional<FamilySpec> spec = in_b(g);
            const bool is_member = set == "b" ? spec.has_value() : in_b_prime(g, budget.budget());
            if (json) {
                Json j{{"set", set}, {"member", is_member}};
                j["spec"] = spec ? to_json(*spec) : Json(nullptr);
                out << j.dump() << '\n';
            } else {
                out << (is_member ? "true" : "false") << '\n';
                if (spec)
                    out << "spec: " << to_json(*spec).dump() << '\n';
            }
            return 0;
        }

        if (witness->parsed()) {
            const Graph g = load_graph(common, in);
            const Matching m(parse_edge_spec(matching_text));
            require_matching(g, m);
            if (kind == "altcycle") {
                const auto cycle = find_alternating_cycle(g, m);
                if (json)
                    out << Json{{"kind", kind}, {"witness", cycle ? to_json(*cycle) : Json(nullptr)}}.dump() << '\n';
                else
                    out << (cycle ? "alternating cycle: " + vertices_text(cycle->cycle) : std::string("none")) << '\n';
                return 0;
            }
            if (!is_subcubic(g))
                throw DomainError("lemma0 certificates are defined for subcubic graphs");
            const auto violations = lemma0_violations(g, m);
            if (json) {
                Json list = Json::array();
                for (const auto& v : violations)
                    list.push_back(to_json(v));
                out << Json{{"kind", kind}, {"violations", list}}.dump() << '\n';
            } else if (violations.empty()) {
                out << "none\n";
            } else {
                for (const auto& v : violations)
                    out << to_json(v).dump() << '\n';
            }
            return 0;
        }

        if (verify->parsed()) {
            VerifyOptions options;
            options.run_oracle = oracle || oracle_max_n.has_value();
            if (oracle_max_n)
                options.oracle_max_n = *oracle_max_n;
            options.check_theorem1 = theorem1;
            options.jobs = jobs;
            options.budget = budget.budget();
            std::ifstream file;
            std::istream* source = &in;
            if (common.input != "-") {
                file.open(common.input);
                if (!file)
                    throw std::runtime_error("cannot open '" + common.input + "'");
                source = &file;
            }
            const VerifySummary summary =
                verify_stream(*source, options, [&](const VerifyRecord& r) { out << to_json(r).dump() << '\n'; });
            out << to_json(summary).dump() << '\n';
            return summary.ok() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace ureq::cli
