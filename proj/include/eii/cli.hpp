#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eii/betti.hpp"
#include "eii/betti_formulas.hpp"
#include "eii/complex_io.hpp"
#include "eii/graph_io.hpp"
#include "eii/hilbert.hpp"
#include "eii/homology.hpp"
#include "eii/parallel.hpp"
#include "eii/verify.hpp"

namespace eii::cli {

enum Exit : int { Ok = 0, VerificationFailed = 1, Usage = 2, TooLargeInput = 3 };

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(path);
    if (!file)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

inline bool is_json_path(const std::string& path)
{
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

/// A graph from a family spec or a file; "-" reads stdin as text.
inline Graph load_graph(const std::string& source, std::istream& in)
{
    if (is_family_spec(source))
        return parse_family_spec(source);
    std::string text = read_source(source, in);
    return is_json_path(source) ? parse_graph_json(text) : parse_graph_text(text);
}

inline SimplicialComplex load_complex(const std::string& source, std::istream& in)
{
    std::string text = read_source(source, in);
    return is_json_path(source) ? parse_complex_json(text) : parse_complex_text(text);
}

struct InputOptions {
    std::string family;
    std::string input;
    std::string complex;
};

inline void add_input_options(CLI::App* cmd, InputOptions& opt)
{
    auto* fam = cmd->add_option("--family", opt.family, "named graph, e.g. cycle:5 or complete_bipartite:2,3");
    auto* inp = cmd->add_option("--input", opt.input, "graph file (text edge list, or .json); - for stdin");
    auto* cpx = cmd->add_option("--complex", opt.complex, "simplicial complex file (facet list, or .json); - for stdin");
    fam->excludes(inp)->excludes(cpx);
    inp->excludes(cpx);
}

struct Loaded {
    std::optional<Graph> graph;
    SimplicialComplex complex;
};

inline Loaded load(const InputOptions& opt, std::istream& in)
{
    Loaded l;
    if (!opt.complex.empty()) {
        l.complex = load_complex(opt.complex, in);
        return l;
    }
    if (opt.family.empty() && opt.input.empty())
        throw CLI::ValidationError("input", "one of --family, --input or --complex is required");
    if (!opt.family.empty() && !is_family_spec(opt.family))
        throw Error(ErrorKind::BadParameter, "'" + opt.family + "' is not a family spec (see `eii families`)");
    l.graph = load_graph(opt.family.empty() ? opt.input : opt.family, in);
    l.complex = independence_complex(*l.graph);
    return l;
}

inline std::string vector_text(const std::vector<std::int64_t>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + std::to_string(v[i]);
    return out + ")";
}

inline int threads_or_default(int threads) { return threads > 0 ? threads : default_threads(); }

} // namespace detail

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin)
{
    CLI::App app{"Edge ideals, independence complexes, Betti numbers and Hilbert series", "eii"};
    app.require_subcommand(1);

    std::string field_text = "gf2";
    bool json = false;
    int threads = 0;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--field", field_text, "gf2, gf3 (any gfP) or rational")->capture_default_str();
        cmd->add_flag("--json", json, "JSON output");
        cmd->add_option("--threads", threads, "worker threads (default: EII_THREADS or all cores)")
            ->check(CLI::PositiveNumber);
    };

    detail::InputOptions input;

    auto* invariants = app.add_subcommand("invariants", "reg, pd, a(G), class A, h-vector and Hilbert series");
    common(invariants);
    detail::add_input_options(invariants, input);

    int dump_boundary = -1;
    auto* betti = app.add_subcommand("betti", "graded Betti table of K[Δ]");
    common(betti);
    detail::add_input_options(betti, input);
    betti->add_option("--dump-boundary", dump_boundary, "print the boundary matrix ∂_K instead of the table");

    auto* hvector = app.add_subcommand("hvector", "f- and h-vectors");
    common(hvector);
    detail::add_input_options(hvector, input);

    int terms = -1;
    auto* series = app.add_subcommand("series", "Hilbert series");
    common(series);
    detail::add_input_options(series, input);
    series->add_option("--terms", terms, "also print the Hilbert function up to this degree")->check(CLI::NonNegativeNumber);

    std::string left, right;
    auto* prod = app.add_subcommand("product", "graph join G*H of two inputs (family specs or files)");
    common(prod);
    prod->add_option("first", left, "first factor")->required();
    prod->add_option("second", right, "second factor")->required();

    std::string suite = "all";
    std::uint64_t seed = 42;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "check the identities against brute force");
    common(verify);
    verify->add_option("--suite", suite, "all, betti, matching, terai, hilbert, transforms, homology, example")
        ->check(CLI::IsMember(suite_names()))
        ->capture_default_str();
    verify->add_option("--seed", seed, "corpus seed")->capture_default_str();
    verify->add_flag("--timing", timing, "add per-check wall time to the report");

    auto* families = app.add_subcommand("families", "list the named graph families");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    try {
        const Field field = parse_field(field_text);
        const int workers = detail::threads_or_default(threads);

        if (families->parsed()) {
            out << "cycle:N                 N >= 3\n"
                   "wheel:N                 N >= 3, hub x(N+1)\n"
                   "star:N                  N >= 1 leaves, centre x(N+1)\n"
                   "complete:N              N >= 1\n"
                   "discrete:N              N >= 1\n"
                   "path:N                  N >= 1\n"
                   "complete_bipartite:M,N  M, N >= 1\n"
                   "complete_multipartite:N1,N2,...\n";
            return Ok;
        }

        if (verify->parsed()) {
            auto reports = run_suite(suite, seed, workers);
            if (json)
                out << to_json(reports, timing).dump(2) << "\n";
            else
                out << to_text(reports, timing);
            return all_passed(reports) ? Ok : VerificationFailed;
        }

        if (prod->parsed()) {
            Graph g = detail::load_graph(left, in);
            Graph h = detail::load_graph(right, in);
            bool clash = std::any_of(g.vertices().begin(), g.vertices().end(), [&](const Label& x) { return h.contains(x); });
            if (clash) {
                err << "warning: the factors share vertex labels; renaming to g_* and h_*\n";
                g = relabel(g, "g_");
                h = relabel(h, "h_");
            }
            Graph joint = product(g, h);
            if (json)
                out << to_json(joint).dump() << "\n";
            else
                out << to_text(joint);
            return Ok;
        }

        auto loaded = detail::load(input, in);
        const auto& c = loaded.complex;

        if (betti->parsed()) {
            if (dump_boundary >= 0) {
                out << boundary_matrix(c, dump_boundary, field).to_text();
                return Ok;
            }
            auto table = betti_table(c, field, workers);
            if (json)
                out << to_json(table).dump() << "\n";
            else
                out << to_text(table);
            return Ok;
        }

        if (hvector->parsed()) {
            auto f = c.f_vector();
            auto h = f_to_h(f);
            if (json) {
                nlohmann::ordered_json j;
                j["f_vector"] = to_json(f);
                j["h_vector"] = to_json(h);
                out << j.dump() << "\n";
            } else {
                out << "f-vector: " << detail::vector_text(f.entries) << "\n";
                out << "h-vector: " << detail::vector_text(h.entries) << "\n";
            }
            return Ok;
        }

        if (series->parsed()) {
            auto s = hilbert_series(c);
            if (json) {
                nlohmann::ordered_json j = to_json(s);
                if (terms >= 0)
                    j["hilbert_function"] = s.expand(terms);
                out << j.dump() << "\n";
            } else {
                out << to_text(s) << "\n";
                if (terms >= 0)
                    out << "hilbert function: " << detail::vector_text(s.expand(terms)) << "\n";
            }
            return Ok;
        }

        if (invariants->parsed()) {
            auto table = betti_table(c, field, workers);
            auto h = h_vector(c);
            auto s = hilbert_series(c);
            std::optional<int> a;
            if (loaded.graph)
                a = induced_matching_number(*loaded.graph);
            const int reg = regularity(table);
            if (json) {
                nlohmann::ordered_json j;
                j["vertices"] = c.vertex_count();
                if (loaded.graph)
                    j["edges"] = loaded.graph->size();
                j["field"] = field.name();
                j["reg"] = reg;
                j["pd"] = proj_dim(table);
                j["linear"] = has_linear_resolution(table);
                if (a) {
                    j["a"] = *a;
                    j["class_A"] = reg == *a;
                }
                j["h_vector"] = to_json(h);
                j["series"] = to_json(s);
                out << j.dump() << "\n";
            } else {
                out << "vertices: " << c.vertex_count() << "\n";
                if (loaded.graph)
                    out << "edges: " << loaded.graph->size() << "\n";
                out << "field: " << field.name() << "\n";
                out << "reg: " << reg << "\n";
                out << "pd: " << proj_dim(table) << "\n";
                out << "linear: " << (has_linear_resolution(table) ? "yes" : "no") << "\n";
                if (a) {
                    out << "a: " << *a << "\n";
                    out << "class A: " << (reg == *a ? "yes" : "no") << "\n";
                }
                out << "h-vector: " << detail::vector_text(h.entries) << "\n";
                out << "series: " << to_text(s) << "\n";
            }
            return Ok;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::TooLarge ? TooLargeInput : Usage;
    }
    return Usage;
}

} // namespace eii::cli
