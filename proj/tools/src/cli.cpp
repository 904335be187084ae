#include "unipoly/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unipoly/canonical.hpp"
#include "unipoly/families.hpp"
#include "unipoly/graph_io.hpp"
#include "unipoly/oracle.hpp"
#include "unipoly/rewrites.hpp"
#include "unipoly/structure.hpp"

namespace unipoly::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view format_name(Format f)
{
    switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Graph6: return "graph6";
    case Format::Dot: return "dot";
    }
    return "?";
}

void require_format(const RunConfig& c, std::initializer_list<Format> allowed)
{
    for (auto f : allowed)
        if (c.format == f)
            return;
    throw UsageError("format " + std::string(format_name(c.format)) + " is not supported by " + c.command);
}

void print_json(std::ostream& out, const nlohmann::json& j)
{
    out << j.dump(2) << '\n';
}

std::string verdict(const FamilyMatch& m)
{
    switch (m.scope) {
    case Scope::Infeasible: return "INFEASIBLE";
    case Scope::OutOfScopeA:
    case Scope::OutOfScopeP: return "OUT-OF-SCOPE";
    case Scope::InScope: return m.matches.empty() ? "NOT-IN-FAMILIES" : "UNIGRAPHIC";
    }
    return "?";
}

std::string describe(const FamilySpec& spec)
{
    std::ostringstream s;
    s << to_string(spec.tag) << "(p=" << spec.p;
    if (spec.tag == FamilyTag::B1 || spec.tag == FamilyTag::C)
        s << ", x=" << spec.x;
    if (spec.tag == FamilyTag::C)
        s << ", a=" << spec.a;
    s << ")";
    return s.str();
}

int cmd_classify(const RunConfig& c, std::ostream& out)
{
    require_format(c, {Format::Text, Format::Json});
    const auto s = DegreeSequence::parse(c.input);
    const auto m = classify(s);
    if (c.format == Format::Json) {
        auto j = family_match_to_json(s, m);
        j["verdict"] = verdict(m);
        print_json(out, j);
        return kExitOk;
    }
    out << "sequence  " << s.to_power_string() << "\n";
    out << "p=" << s.p() << " a=" << s.a() << " scope " << to_string(m.scope) << "\n";
    for (const auto& spec : m.matches)
        out << "match     " << describe(spec) << "\n";
    out << "verdict   " << verdict(m);
    if (m.scope == Scope::InScope && m.matches.empty())
        out << " (not unigraphic)";
    out << "\n";
    return kExitOk;
}

void emit_diagram(const RunConfig& c, const ChordDiagram& cd, std::ostream& out, const nlohmann::json& extra = {})
{
    switch (c.format) {
    case Format::Text: out << cd.to_string() << "\n"; break;
    case Format::Graph6: out << to_graph6(to_polytope(cd)) << "\n"; break;
    case Format::Dot: out << to_dot(cd); break;
    case Format::Json: {
        nlohmann::json j = extra.is_null() ? nlohmann::json::object() : extra;
        j["diagram"] = diagram_to_json(cd);
        j["graph6"] = to_graph6(to_polytope(cd));
        j["sequence"] = degree_sequence(to_polytope(cd)).entries();
        print_json(out, j);
        break;
    }
    }
}

int cmd_construct(const RunConfig& c, std::ostream& out)
{
    const auto tag = parse_family_tag(c.family);
    if (!tag)
        throw UsageError("unknown family '" + c.family + "' (expected B1, B2, B3, C, D or EXC)");
    const auto spec = make_family_spec(*tag, c.p, c.x, c.a);
    if (auto v = spec_violation(spec))
        throw UsageError(*v);
    emit_diagram(c, construct(spec), out, {{"spec", family_spec_to_json(spec)}});
    return kExitOk;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out)
{
    const auto s = DegreeSequence::parse(c.input);
    const auto r = enumerate_realizations(s, {.limit = c.limit, .jobs = c.jobs});
    switch (c.format) {
    case Format::Json: print_json(out, realization_report_to_json(r)); break;
    case Format::Graph6:
        for (const auto& cd : r.representatives)
            out << to_graph6(to_polytope(cd)) << "\n";
        break;
    case Format::Dot:
        for (std::size_t i = 0; i < r.representatives.size(); ++i)
            out << to_dot(r.representatives[i], "F" + std::to_string(i));
        break;
    case Format::Text:
        out << "sequence      " << s.to_power_string() << "\n";
        out << "class_count   " << r.class_count << (r.truncated ? " (truncated)" : "") << "\n";
        out << "nodes         " << r.nodes_explored << "\n";
        for (const auto& cd : r.representatives)
            out << "  " << cd.to_string() << "\n";
        break;
    }
    return kExitOk;
}

int cmd_witness(const RunConfig& c, std::ostream& out)
{
    const auto s = DegreeSequence::parse(c.input);
    const auto w = find_witness(s, c.depth);
    switch (c.format) {
    case Format::Json: print_json(out, w ? witness_to_json(*w) : nlohmann::json(nullptr)); break;
    case Format::Graph6:
        if (w)
            out << to_graph6(to_polytope(w->before)) << "\n" << to_graph6(to_polytope(w->after)) << "\n";
        break;
    case Format::Dot:
        if (w)
            out << to_dot(w->before, "before") << to_dot(w->after, "after");
        break;
    case Format::Text:
        if (!w) {
            out << "no witness\n";
            break;
        }
        out << "rule    " << w->rule << "\n";
        out << "before  " << w->before.to_string() << "\n";
        out << "after   " << w->after.to_string() << "\n";
        break;
    }
    return kExitOk;
}

nlohmann::json check_report(const PolytopeGraph& f)
{
    nlohmann::json j;
    j["vertex_count"] = f.vertex_count();
    j["edge_count"] = f.edge_count();
    j["planar"] = is_planar(f);
    j["three_connected"] = is_k_connected(f, 3);
    try {
        j["radius"] = radius(f);
    } catch (const std::domain_error&) {
        j["radius"] = nullptr;
    }
    j["sequence"] = degree_sequence(f).entries();
    const bool polytope = j["planar"].get<bool>() && j["three_connected"].get<bool>() && j["radius"] == 1;
    j["radius_one_polytope"] = polytope;
    if (polytope) {
        const auto cd = from_polytope(f);
        const auto d = decompose(chord_graph(cd));
        j["diagram"] = diagram_to_json(cd);
        j["decomposition"] = decomposition_to_json(d);
        j["bounds"] = bound_report_to_json(check_block_bound(d, d.z_set.size()));
    }
    return j;
}

int cmd_check(const RunConfig& c, std::ostream& out)
{
    const PolytopeGraph f = c.input.find(':') != std::string::npos ? to_polytope(ChordDiagram::parse(c.input))
                                                                    : from_graph6(c.input);
    if (c.format == Format::Graph6) {
        out << to_graph6(f) << "\n";
        return kExitOk;
    }
    const auto j = check_report(f);
    if (c.format == Format::Dot) {
        if (!j["radius_one_polytope"].get<bool>())
            throw UsageError("dot output needs a radius-1 3-polytope");
        out << to_dot(diagram_from_json(j["diagram"]));
        return kExitOk;
    }
    if (c.format == Format::Json) {
        print_json(out, j);
        return kExitOk;
    }
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "vertices            " << j["vertex_count"] << "\n";
    out << "edges               " << j["edge_count"] << "\n";
    out << "planar              " << flag(j["planar"].get<bool>()) << "\n";
    out << "3-connected         " << flag(j["three_connected"].get<bool>()) << "\n";
    out << "radius              " << (j["radius"].is_null() ? std::string("infinite") : j["radius"].dump()) << "\n";
    out << "sequence            " << DegreeSequence(j["sequence"].get<std::vector<int>>()).to_power_string() << "\n";
    if (j["radius_one_polytope"].get<bool>()) {
        const auto& d = j["decomposition"];
        out << "diagram             " << diagram_from_json(j["diagram"]).to_string() << "\n";
        out << "Z / Y / B sizes     " << d["z_set"].size() << " / " << d["y_set"].size() << " / "
            << d["b_vertices"].size() << "\n";
        out << "blocks              " << d["blocks"].size() << "\n";
        out << "cyclic components   " << d["cyclic_component_count"] << "\n";
        out << "bounds violated     " << flag(j["bounds"]["violated"].get<bool>()) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    require_format(c, {Format::Text, Format::Json});
    const auto r = verify_theorem(c.p_min, c.p_max, c.jobs);
    if (c.format == Format::Json) {
        print_json(out, verification_report_to_json(r));
    } else {
        out << "p range        " << c.p_min << ".." << c.p_max << "\n";
        out << "examined       " << r.examined << "\n";
        out << "agreements     " << r.agreements << "\n";
        out << "disagreements  " << r.disagreements.size() << "\n";
        for (const auto& [family, count] : r.family_counts)
            out << "  " << std::left << std::setw(4) << family << count << "\n";
        for (const auto& s : r.unigraphic)
            out << "unigraphic     " << s.to_power_string() << "\n";
        for (const auto& d : r.disagreements)
            out << "DISAGREE       " << d.sequence.to_power_string() << " classify=" << d.classified_unigraphic
                << " oracle=" << d.oracle_unigraphic << "\n";
    }
    return r.disagreements.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

std::string to_dot(const ChordDiagram& cd, const std::string& name)
{
    const int n = cd.rim();
    std::ostringstream s;
    s << "graph " << name << " {\n";
    s << "  layout=neato;\n  node [shape=circle];\n";
    s << "  " << n << " [shape=box, label=\"apex\", pos=\"0,0!\"];\n";
    const double pi = std::acos(-1.0);
    for (int v = 0; v < n; ++v) {
        const double t = 2 * pi * v / n;
        s << "  " << v << " [pos=\"" << std::fixed << std::setprecision(3) << 3 * std::cos(t) << ","
          << 3 * std::sin(t) << "!\"];\n";
    }
    for (int v = 0; v < n; ++v)
        s << "  " << v << " -- " << (v + 1) % n << ";\n";
    for (int v = 0; v < n; ++v)
        s << "  " << n << " -- " << v << " [style=dashed, color=gray];\n";
    for (const auto& [a, b] : cd.chords())
        s << "  " << a << " -- " << b << " [penwidth=2];\n";
    s << "}\n";
    return s.str();
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.jobs < 1)
            throw UsageError("--jobs must be at least 1");
        std::ofstream file;
        std::ostream* sink = &out;
        if (config.output) {
            file.open(*config.output);
            if (!file)
                throw UsageError("cannot open " + *config.output);
            sink = &file;
        }
        if (config.command == "classify")
            return cmd_classify(config, *sink);
        if (config.command == "construct")
            return cmd_construct(config, *sink);
        if (config.command == "enumerate")
            return cmd_enumerate(config, *sink);
        if (config.command == "witness")
            return cmd_witness(config, *sink);
        if (config.command == "check")
            return cmd_check(config, *sink);
        if (config.command == "verify")
            return cmd_verify(config, *sink);
        throw UsageError("unknown command '" + config.command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Degree sequences of radius-1 3-polytopes"};
    app.require_subcommand(1);
    RunConfig config;

    const std::map<std::string, Format> formats{
        {"text", Format::Text}, {"json", Format::Json}, {"graph6", Format::Graph6}, {"dot", Format::Dot}};
    app.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--output", config.output, "Write the report to this file");
    app.add_option("--limit", config.limit, "Stop enumeration after this many classes");
    app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.fallthrough();

    auto* classify_cmd = app.add_subcommand("classify", "Match a sequence against the unigraphic families");
    classify_cmd->add_option("sequence", config.input)->required();

    auto* construct_cmd = app.add_subcommand("construct", "Build the polytope of a family member");
    construct_cmd->add_option("--family", config.family)->required();
    construct_cmd->add_option("--p", config.p);
    construct_cmd->add_option("--x", config.x);
    construct_cmd->add_option("--a", config.a);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate all realisations up to isomorphism");
    enumerate_cmd->add_option("sequence", config.input)->required();

    auto* witness_cmd = app.add_subcommand("witness", "Find two non-isomorphic realisations");
    witness_cmd->add_option("sequence", config.input)->required();
    witness_cmd->add_option("--depth", config.depth)->check(CLI::NonNegativeNumber);

    auto* check_cmd = app.add_subcommand("check", "Report structural properties of a graph");
    check_cmd->add_option("graph", config.input, "graph6 string or diagram text 'n: a-b,...'")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the classification against the oracle");
    verify_cmd->add_option("--p-min", config.p_min);
    verify_cmd->add_option("--p-max", config.p_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    config.command = app.get_subcommands().front()->get_name();
    return execute(config, out, err);
}

}  // namespace unipoly::cli
