#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abel.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "levels.hpp"

namespace nodal::cli {

using nlohmann::json;

/// Result of one command: echoed inputs, structured outputs, and the lines
/// printed in text mode.
struct Report {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    std::vector<std::string> lines;
    int exit_code = 0;

    [[nodiscard]] json to_json() const {
        return {{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"exit_code", exit_code}};
    }

    static Report from_json(const json &j) {
        Report r;
        r.command = j.at("command").get<std::string>();
        r.inputs = j.at("inputs");
        r.outputs = j.at("outputs");
        r.exit_code = j.at("exit_code").get<int>();
        return r;
    }

    friend bool operator==(const Report &a, const Report &b) {
        return a.to_json() == b.to_json();
    }
};

enum ExitCode : int { exit_true = 0, exit_false = 1, exit_error = 2 };

/// A multidegree outside Lambda_X; carries the Hermite basis for diagnosis.
class DomainError : public Error {
  public:
    DomainError(const std::string &what, json basis)
        : Error(ErrorCode::not_in_lattice, what), basis_(std::move(basis)) {}
    [[nodiscard]] const json &basis() const noexcept { return basis_; }

  private:
    json basis_;
};

namespace detail {

inline std::string read_source(const std::string &path) {
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json basis_json(const Lattice &lattice) {
    json rows = json::array();
    for (const auto &row : lattice.hnf_basis()) {
        json r = json::array();
        for (const auto &v : row)
            r.push_back(to_json(v));
        rows.push_back(r);
    }
    return rows;
}

inline std::string basis_text(const Lattice &lattice) {
    std::ostringstream os;
    for (const auto &row : lattice.hnf_basis()) {
        os << "\n  [";
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? ", " : "") << row[j];
        os << ']';
    }
    return lattice.hnf_basis().empty() ? std::string("\n  (empty: the lattice is zero)") : os.str();
}

inline Multidegree require_twister(const Lattice &lattice, const Multidegree &t) {
    if (!lattice.lambda_membership(t))
        throw DomainError("multidegree " + t.str() + " is not in the twister lattice; Hermite basis:" +
                              basis_text(lattice),
                          basis_json(lattice));
    return t;
}

inline std::string labels_of(const CurveGraph &g, const Subcurve &z) {
    std::string out;
    for (std::size_t i : z.components())
        out += (out.empty() ? "" : ",") + g.labels()[i];
    return out;
}

inline json node_list(const CurveGraph &g, const NodeSet &s) {
    json out = json::array();
    for (EdgeId id : s.ids()) {
        const Edge &e = g.edge(id);
        out.push_back({{"id", id}, {"ends", {g.labels()[e.u], g.labels()[e.v]}}});
    }
    return out;
}

inline std::vector<std::string> node_lines(const CurveGraph &g, const NodeSet &s) {
    std::vector<std::string> out;
    for (EdgeId id : s.ids()) {
        const Edge &e = g.edge(id);
        out.push_back("e" + std::to_string(id) + " " + g.labels()[e.u] + "-" + g.labels()[e.v]);
    }
    if (out.empty())
        out.emplace_back("(none)");
    return out;
}

inline void predicate(Report &r, const std::string &key, bool value) {
    r.outputs[key] = value;
    r.lines.emplace_back(value ? "true" : "false");
    r.exit_code = value ? exit_true : exit_false;
}

inline std::vector<Multidegree> read_representatives(const std::string &path) {
    json doc;
    try {
        doc = json::parse(read_source(path));
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::parse, std::string("malformed representatives file: ") + e.what());
    }
    if (doc.is_object() && doc.contains("representatives"))
        doc = doc.at("representatives");
    if (!doc.is_array())
        throw Error(ErrorCode::parse, "representatives file must be an array of integer arrays");
    std::vector<Multidegree> out;
    for (const auto &row : doc) {
        if (!row.is_array())
            throw Error(ErrorCode::parse, "each representative must be an array of integers");
        std::vector<BigInt> values;
        for (const auto &v : row) {
            if (v.is_number_integer())
                values.emplace_back(v.get<std::int64_t>());
            else if (v.is_string())
                values.push_back(parse_bigint(v.get<std::string>()));
            else
                throw Error(ErrorCode::parse, "representative entries must be integers");
        }
        out.emplace_back(std::move(values));
    }
    return out;
}

} // namespace detail

struct Options {
    std::string graph_path;
    bool json_output = false;
    std::int64_t degree = 1;
    std::string d1, d2, t, divisor, reps;
    std::size_t max_gamma = 4, max_edges = 6, max_loops = 0;
    std::int64_t max_degree = 3;
    unsigned threads = 0;
};

inline Report cmd_info(const Lattice &lattice) {
    const CurveGraph &g = lattice.graph();
    const NodeSet bridges = separating_nodes(g);
    Report r;
    r.outputs = {{"components", g.component_count()},
                 {"nodes", g.edge_count()},
                 {"loops", g.loop_count()},
                 {"separating_nodes", detail::node_list(g, bridges)},
                 {"class_group_order", to_json(lattice.class_group_order())}};
    r.lines = {"components: " + std::to_string(g.component_count()),
               "nodes: " + std::to_string(g.edge_count()),
               "loops: " + std::to_string(g.loop_count()),
               "separating nodes: " + std::to_string(bridges.size())};
    for (auto &line : detail::node_lines(g, bridges))
        if (!bridges.empty())
            r.lines.push_back("  " + line);
    r.lines.push_back("class group order: " + lattice.class_group_order().str());
    return r;
}

inline Report cmd_epsilon(const Lattice &lattice) {
    const Connectivity eps = essential_connectivity(lattice.graph());
    Report r;
    r.outputs["epsilon"] = eps.is_infinite() ? json("infinity") : json(*eps.value());
    r.lines.push_back(eps.str());
    return r;
}

inline Report cmd_natural_abel(const Lattice &lattice, const Options &o) {
    Report r;
    r.inputs["degree"] = o.degree;
    r.outputs["epsilon"] = essential_connectivity(lattice.graph()).str();
    detail::predicate(r, "natural", has_natural_abel_map(lattice.graph(), o.degree));
    return r;
}

inline Report cmd_classes(const Lattice &lattice, const Options &o) {
    Report r;
    r.inputs["degree"] = o.degree;
    const auto classes = lattice.enumerate_classes(o.degree);
    json list = json::array();
    r.lines.push_back(std::to_string(classes.size()) + " classes");
    for (const auto &cls : classes) {
        json entry = {{"representative", to_json(cls.representative)}};
        std::string line = cls.representative.str();
        if (o.degree >= 0) {
            const auto part = class_has_partitional_rep(lattice, cls);
            entry["partitional"] = part ? to_json(*part) : json(nullptr);
            line += part ? "  partitional " + part->str() : "  no partitional representative";
        }
        list.push_back(entry);
        r.lines.push_back(line);
    }
    r.outputs["count"] = classes.size();
    r.outputs["classes"] = list;
    return r;
}

inline Report cmd_equiv(const Lattice &lattice, const Options &o) {
    const std::size_t n = lattice.dimension();
    const Multidegree a(parse_vector(o.d1, n));
    const Multidegree b(parse_vector(o.d2, n));
    Report r;
    r.inputs = {{"d1", to_json(a)}, {"d2", to_json(b)}};
    detail::predicate(r, "equivalent", lattice.equivalent(a, b));
    return r;
}

inline Report cmd_canonical_rep(const Lattice &lattice, const Options &o) {
    const CurveGraph &g = lattice.graph();
    const Multidegree t = detail::require_twister(lattice, Multidegree(parse_vector(o.t, lattice.dimension())));
    const CanonicalRep rep = canonical_rep(lattice, t);
    Report r;
    r.inputs["t"] = to_json(t);
    json levels = json::array();
    for (const Level &level : rep.positive_levels)
        levels.push_back({{"level", to_json(level.value)}, {"components", detail::labels_of(g, level.curve)}});
    r.outputs = {{"divisor", to_json(rep.divisor)},
                 {"length", rep.length()},
                 {"degenerate", rep.degenerate},
                 {"zero_curve", detail::labels_of(g, rep.zero_curve)},
                 {"levels", levels}};
    r.lines.push_back("D(t) = " + rep.divisor.str());
    if (rep.degenerate)
        r.lines.emplace_back("degenerate: t = 0");
    r.lines.push_back("level 0: " + detail::labels_of(g, rep.zero_curve));
    for (const Level &level : rep.positive_levels)
        r.lines.push_back("level " + level.value.str() + ": " + detail::labels_of(g, level.curve));
    return r;
}

inline Report cmd_s_set(const Lattice &lattice, const Options &o) {
    const CurveGraph &g = lattice.graph();
    Report r;
    NodeSet s;
    if (!o.t.empty() && !o.divisor.empty())
        throw Error(ErrorCode::invalid_argument, "pass exactly one of --t and --divisor");
    if (!o.t.empty()) {
        const Multidegree t = detail::require_twister(lattice, Multidegree(parse_vector(o.t, lattice.dimension())));
        r.inputs["t"] = to_json(t);
        s = s_of_multidegree(lattice, t);
    } else if (!o.divisor.empty()) {
        const Divisor d(parse_vector(o.divisor, lattice.dimension()));
        r.inputs["divisor"] = to_json(d);
        s = s_of_divisor(g, d);
    } else {
        throw Error(ErrorCode::invalid_argument, "pass one of --t and --divisor");
    }
    r.outputs["nodes"] = detail::node_list(g, s);
    r.lines = detail::node_lines(g, s);
    return r;
}

inline Report cmd_twister_dim(const Lattice &lattice, const Options &o) {
    const Multidegree t = detail::require_twister(lattice, Multidegree(parse_vector(o.t, lattice.dimension())));
    const std::size_t dim = twister_space_dim(lattice, t);
    Report r;
    r.inputs["t"] = to_json(t);
    r.outputs["dimension"] = dim;
    r.outputs["unique"] = dim == 0;
    r.lines.push_back(std::to_string(dim));
    return r;
}

inline Report cmd_sum_of_tails(const Lattice &lattice, const Options &o) {
    const Divisor d(parse_vector(o.divisor, lattice.dimension()));
    Report r;
    r.inputs["divisor"] = to_json(d);
    detail::predicate(r, "sum_of_tails", is_sum_of_tails(lattice.graph(), d));
    return r;
}

inline json chooser_json(const RepChooser &chooser) {
    json table = json::array();
    for (const auto &[key, value] : chooser.table)
        table.push_back({{"class", to_json(key)}, {"representative", to_json(value)}});
    return table;
}

inline Report cmd_choose_reps(const Lattice &lattice, const Options &o) {
    const RepChooser chooser = choose_representatives(lattice, o.degree);
    Report r;
    r.inputs["degree"] = o.degree;
    r.outputs["chooser"] = chooser_json(chooser);
    for (const auto &[key, value] : chooser.table)
        r.lines.push_back(key.str() + " -> " + value.str());
    return r;
}

inline Report cmd_is_natural(const Lattice &lattice, const Options &o) {
    Report r;
    r.inputs["degree"] = o.degree;
    RepChooser chooser;
    if (o.reps.empty()) {
        chooser = choose_representatives(lattice, o.degree);
    } else {
        r.inputs["reps"] = o.reps;
        chooser = chooser_from_representatives(lattice, o.degree, detail::read_representatives(o.reps));
    }
    r.outputs["chooser"] = chooser_json(chooser);
    detail::predicate(r, "natural", is_natural(lattice, o.degree, chooser));
    return r;
}

inline Report cmd_structure(const Lattice &lattice, const Options &o) {
    const NaturalStructure s = count_natural_structure(lattice, o.degree);
    Report r;
    r.inputs["degree"] = o.degree;
    r.outputs = {{"exists", s.exists},
                 {"partitional_count", s.partitional_count},
                 {"lambda0_trivial", s.lambda0_trivial},
                 {"lambda0_rank", s.lambda0_rank},
                 {"unique", s.unique}};
    r.lines = {std::string("exists: ") + (s.exists ? "true" : "false"),
               "partitional multidegrees: " + std::to_string(s.partitional_count),
               "rank of sum-of-tails lattice: " + std::to_string(s.lambda0_rank),
               std::string("unique: ") + (s.unique ? "true" : "false")};
    return r;
}

inline Report cmd_verify(const Lattice &lattice, const Options &o) {
    const TheoremCheck check = verify_theorem(lattice, o.degree);
    Report r;
    r.inputs["degree"] = o.degree;
    r.outputs = {{"pairs_in_lambda0", check.pairs_in_lambda0},
                 {"criterion", check.criterion},
                 {"chooser_natural", check.chooser_natural}};
    r.lines = {std::string("brute force: ") + (check.pairs_in_lambda0 ? "true" : "false"),
               std::string("epsilon > d: ") + (check.criterion ? "true" : "false"),
               std::string("chooser natural: ") + (check.chooser_natural ? "true" : "false")};
    r.outputs["verified"] = check.ok();
    r.lines.emplace_back(check.ok() ? "verified" : "MISMATCH");
    r.exit_code = check.ok() ? exit_true : exit_false;
    return r;
}

inline Report cmd_harness(const Options &o) {
    const EnumerationBounds bounds{o.max_gamma, o.max_edges, o.max_loops};
    const HarnessReport h = run_harness(bounds, o.max_degree, o.threads);
    Report r;
    r.inputs = {{"max_gamma", o.max_gamma}, {"max_edges", o.max_edges}, {"max_loops", o.max_loops},
                {"max_degree", o.max_degree}};
    json failures = json::array();
    for (const auto &f : h.failures) {
        failures.push_back({{"graph", to_json(to_document(f.graph))},
                            {"degree", f.degree},
                            {"pairs_in_lambda0", f.check.pairs_in_lambda0},
                            {"criterion", f.check.criterion},
                            {"chooser_natural", f.check.chooser_natural},
                            {"error", f.error}});
        r.lines.push_back("FAILED d=" + std::to_string(f.degree) + " " + serialize(to_document(f.graph)) +
                          (f.error.empty() ? "" : " (" + f.error + ")"));
    }
    r.outputs = {{"graphs", h.graphs}, {"instances", h.instances}, {"failures", failures}};
    if (h.failures.empty())
        r.lines.push_back("all " + std::to_string(h.instances) + " instances verified");
    else
        r.lines.push_back(std::to_string(h.failures.size()) + " of " + std::to_string(h.instances) +
                          " instances failed");
    r.exit_code = h.failures.empty() ? exit_true : exit_false;
    return r;
}

/// Parses `args` (program name first), runs the selected command and writes
/// the report. Returns the process exit code.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Natural Abel maps of nodal curves from their dual graphs", "nodal"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_output, "Machine-readable report on stdout");

    auto graph_command = [&](const std::string &name, const std::string &help) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("graph", o.graph_path, "Graph document (JSON), '-' for stdin")->required();
        return sub;
    };
    auto degree_option = [&](CLI::App *sub) { sub->add_option("--degree,-d", o.degree, "Degree d")->required(); };

    graph_command("info", "Components, nodes, separating nodes and class group order");
    graph_command("epsilon", "Essential connectivity");
    degree_option(graph_command("natural-abel", "Whether a natural d-th Abel map exists"));
    degree_option(graph_command("classes", "Multidegree classes of total degree d"));
    CLI::App *equiv = graph_command("equiv", "Equivalence of two multidegrees");
    equiv->add_option("--d1", o.d1, "First multidegree")->required();
    equiv->add_option("--d2", o.d2, "Second multidegree")->required();
    graph_command("canonical-rep", "Canonical level expression of a twister multidegree")
        ->add_option("--t", o.t, "Twister multidegree")
        ->required();
    CLI::App *s_set = graph_command("s-set", "Nodes joining distinct levels");
    s_set->add_option("--t", o.t, "Twister multidegree");
    s_set->add_option("--divisor", o.divisor, "Divisor");
    graph_command("twister-dim", "Dimension of the space of twisters with multidegree t")
        ->add_option("--t", o.t, "Twister multidegree")
        ->required();
    graph_command("sum-of-tails", "Whether a divisor is a sum of tails")
        ->add_option("--divisor", o.divisor, "Divisor")
        ->required();
    degree_option(graph_command("choose-reps", "Representative chooser built from partitional multidegrees"));
    CLI::App *natural = graph_command("is-natural", "Whether the Abel map of a chooser is natural");
    degree_option(natural);
    natural->add_option("--reps", o.reps, "JSON file of representatives");
    degree_option(graph_command("structure", "Existence and uniqueness of natural Abel maps"));
    degree_option(graph_command("verify", "Brute-force check of the naturality criterion"));
    CLI::App *harness = app.add_subcommand("harness", "Verify the criterion on all small connected multigraphs");
    harness->add_option("--max-gamma", o.max_gamma, "Maximum number of components")->required();
    harness->add_option("--max-edges", o.max_edges, "Maximum number of nodes")->required();
    harness->add_option("--max-degree", o.max_degree, "Maximum degree d")->required();
    harness->add_option("--max-loops", o.max_loops, "Maximum number of self-nodes");
    harness->add_option("--threads", o.threads, "Worker threads (0 = hardware)");

    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_true : exit_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Report report;
    try {
        if (command == "harness") {
            report = cmd_harness(o);
        } else {
            const Lattice lattice(parse_graph(detail::read_source(o.graph_path)));
            if (command == "info") report = cmd_info(lattice);
            else if (command == "epsilon") report = cmd_epsilon(lattice);
            else if (command == "natural-abel") report = cmd_natural_abel(lattice, o);
            else if (command == "classes") report = cmd_classes(lattice, o);
            else if (command == "equiv") report = cmd_equiv(lattice, o);
            else if (command == "canonical-rep") report = cmd_canonical_rep(lattice, o);
            else if (command == "s-set") report = cmd_s_set(lattice, o);
            else if (command == "twister-dim") report = cmd_twister_dim(lattice, o);
            else if (command == "sum-of-tails") report = cmd_sum_of_tails(lattice, o);
            else if (command == "choose-reps") report = cmd_choose_reps(lattice, o);
            else if (command == "is-natural") report = cmd_is_natural(lattice, o);
            else if (command == "structure") report = cmd_structure(lattice, o);
            else if (command == "verify") report = cmd_verify(lattice, o);
            report.inputs["graph"] = o.graph_path;
        }
    } catch (const Error &e) {
        if (o.json_output) {
            json error = {{"code", to_string(e.code())}, {"message", e.what()}};
            if (const auto *domain = dynamic_cast<const DomainError *>(&e))
                error["hnf_basis"] = domain->basis();
            out << json{{"command", command}, {"error", error}, {"exit_code", int(exit_error)}}.dump(2) << '\n';
        } else {
            err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        }
        return exit_error;
    }
    report.command = command;
    if (o.json_output) {
        out << report.to_json().dump(2) << '\n';
    } else {
        for (const auto &line : report.lines)
            out << line << '\n';
    }
    return report.exit_code;
}

} // namespace nodal::cli
