#include "spgenus/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spgenus/decompose.hpp"
#include "spgenus/engine.hpp"
#include "spgenus/multigraph.hpp"
#include "spgenus/oracle.hpp"

namespace spgenus {

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CommonOptions {
    bool json = false;
    bool timings = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read " + path);
    return buf.str();
}

ordered_json gd_json(const GenusDistribution& gd) {
    return ordered_json(gd.to_decimal_strings());
}

ordered_json input_json(const std::string& text, const Multigraph& g) {
    ordered_json j;
    j["digest"] = input_digest(text);
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    j["degree_histogram"] = g.degree_histogram();
    return j;
}

ordered_json document_head(const std::string& mode) {
    ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["mode"] = mode;
    return doc;
}

void emit_distribution_json(ordered_json& doc, const GenusDistribution& gd) {
    doc["genus_distribution"] = gd_json(gd);
    doc["min_genus"] = gd.min_genus();
    doc["max_genus"] = gd.max_genus();
    doc["total_embeddings"] = gd.total().str();
}

ordered_json partials_json(const UUPartials& p) {
    ordered_json j;
    j["uu_dot"] = gd_json(p.dot);
    j["uu_prime"] = gd_json(p.prime);
    return j;
}

ordered_json closure_json(const ClosurePartials& c) {
    ordered_json j;
    j["ss_dot"] = gd_json(c.ss_dot);
    j["ss_prime"] = gd_json(c.ss_prime);
    j["dd_dprime"] = gd_json(c.dd_dprime);
    return j;
}

ordered_json report_json(const ComputationReport& rep, const Multigraph& g, bool emit_pgd,
                         bool emit_timings) {
    ordered_json doc;
    doc["method"] =
        rep.method == Method::CubicSp ? "cubic-series-parallel" : "blocks-and-bridges";
    if (rep.cubic) {
        doc["terminals"] = {g.labels()[static_cast<size_t>(rep.cubic->terminal_p)],
                            g.labels()[static_cast<size_t>(rep.cubic->terminal_q)]};
    }
    emit_distribution_json(doc, rep.gd);
    if (emit_pgd && rep.cubic) {
        ordered_json p;
        p["strings"] = ordered_json::array();
        for (const UUPartials& s : rep.cubic->strands) p["strings"].push_back(partials_json(s));
        p["join"] = closure_json(rep.cubic->join);
        doc["partials"] = p;
    }
    if (emit_pgd && rep.assembly) {
        ordered_json a;
        a["pieces"] = ordered_json::array();
        for (const PieceSummary& piece : rep.assembly->pieces) {
            ordered_json pj;
            pj["kind"] = piece.kind == PieceSummary::Kind::Block  ? "block"
                         : piece.kind == PieceSummary::Kind::Cycle ? "cycle"
                                                                   : "vertex";
            pj["vertices"] = piece.num_vertices;
            pj["genus_distribution"] = gd_json(piece.gd);
            a["pieces"].push_back(pj);
        }
        a["bridges"] = rep.assembly->num_bridges;
        a["scalar_product"] = rep.assembly->scalar_product.str();
        doc["assembly"] = a;
    }
    if (emit_timings) {
        ordered_json t;
        t["validate_seconds"] = rep.timings.validate_seconds;
        t["decompose_seconds"] = rep.timings.decompose_seconds;
        t["evaluate_seconds"] = rep.timings.evaluate_seconds;
        t["total_seconds"] = rep.timings.total_seconds;
        doc["timings"] = t;
    }
    return doc;
}

void print_distribution_table(std::ostream& out, const GenusDistribution& gd) {
    const BigInt total = gd.total();
    size_t count_width = 5;
    for (const std::string& s : gd.to_decimal_strings())
        count_width = std::max(count_width, s.size());
    out << "genus  " << std::setw(static_cast<int>(count_width)) << std::left << "count"
        << "  cumulative\n";
    BigInt cum = 0;
    for (int i = 0; i < gd.size(); ++i) {
        cum += gd.at(i);
        out << std::setw(5) << std::right << i << "  " << std::setw(static_cast<int>(count_width))
            << std::left << gd.at(i).str() << "  " << cum.str() << "/" << total.str() << "\n";
    }
    out << "total embeddings: " << total.str() << "\n";
}

void print_partials(std::ostream& out, const CubicTrace& t) {
    auto seq = [](const GenusDistribution& gd) {
        std::string s;
        for (int i = 0; i < gd.size(); ++i) {
            if (i > 0) s += ' ';
            s += gd.at(i).str();
        }
        return s.empty() ? std::string("0") : s;
    };
    for (size_t i = 0; i < t.strands.size(); ++i) {
        out << "string " << i + 1 << ": uu_dot [" << seq(t.strands[i].dot) << "]  uu_prime ["
            << seq(t.strands[i].prime) << "]\n";
    }
    out << "join:     ss_dot [" << seq(t.join.ss_dot) << "]  ss_prime [" << seq(t.join.ss_prime)
        << "]  dd_dprime [" << seq(t.join.dd_dprime) << "]\n";
}

void print_timings(std::ostream& out, const PhaseTimings& t) {
    const auto old_precision = out.precision(3);
    out << "timings: validate " << t.validate_seconds << "s, decompose " << t.decompose_seconds
        << "s, evaluate " << t.evaluate_seconds << "s, total " << t.total_seconds << "s\n";
    out.precision(old_precision);
}

std::optional<std::pair<Vertex, Vertex>> resolve_terminals(const Multigraph& g,
                                                           const std::vector<std::string>& labels) {
    if (labels.empty()) return std::nullopt;
    const auto p = g.vertex_by_label(labels[0]);
    const auto q = g.vertex_by_label(labels[1]);
    if (!p) throw ValidationError("unknown vertex label: " + labels[0]);
    if (!q) throw ValidationError("unknown vertex label: " + labels[1]);
    return std::make_pair(*p, *q);
}

int cmd_compute(std::ostream& out, const std::string& path,
                const std::vector<std::string>& terminal_labels, bool emit_pgd,
                const CommonOptions& opt) {
    const std::string text = read_file(path);
    const Multigraph g = parse_graph(text);
    const ComputationReport rep = gd_auto(g, resolve_terminals(g, terminal_labels));

    if (opt.json) {
        ordered_json doc = document_head("compute");
        doc["input"] = input_json(text, g);
        doc.update(report_json(rep, g, emit_pgd, opt.timings));
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
    if (rep.method == Method::CubicSp) {
        out << "method: cubic series-parallel (terminals "
            << g.labels()[static_cast<size_t>(rep.cubic->terminal_p)] << ", "
            << g.labels()[static_cast<size_t>(rep.cubic->terminal_q)] << ")\n";
    } else {
        out << "method: blocks and bridges (" << rep.assembly->pieces.size() << " pieces, "
            << rep.assembly->num_bridges << " bridges)\n";
    }
    if (emit_pgd && rep.cubic) print_partials(out, *rep.cubic);
    print_distribution_table(out, rep.gd);
    if (opt.timings) print_timings(out, rep.timings);
    return kOk;
}

int cmd_oracle(std::ostream& out, const std::string& path, long long limit,
               const CommonOptions& opt) {
    const std::string text = read_file(path);
    const Multigraph g = parse_graph(text);
    const auto t0 = Clock::now();
    const GenusDistribution gd = gd_brute_force(g, BigInt(limit));
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();

    if (opt.json) {
        ordered_json doc = document_head("oracle");
        doc["input"] = input_json(text, g);
        doc["rotation_systems"] = count_rotation_systems(g).str();
        emit_distribution_json(doc, gd);
        if (opt.timings) doc["timings"] = ordered_json{{"total_seconds", elapsed}};
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "graph: " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
    out << "method: exhaustive rotation-system enumeration\n";
    print_distribution_table(out, gd);
    if (opt.timings) out << "timings: total " << elapsed << "s\n";
    return kOk;
}

int cmd_check(std::ostream& out, const std::string& path, long long limit,
              const CommonOptions& opt) {
    const std::string text = read_file(path);
    const Multigraph g = parse_graph(text);
    const ComputationReport rep = gd_auto(g, std::nullopt);
    const auto t0 = Clock::now();
    const GenusDistribution oracle_gd = gd_brute_force(g, BigInt(limit));
    const double oracle_elapsed = std::chrono::duration<double>(Clock::now() - t0).count();

    const bool match = rep.gd == oracle_gd;
    int first_diff = -1;
    if (!match) {
        const int top = std::max(rep.gd.size(), oracle_gd.size());
        for (int i = 0; i < top && first_diff < 0; ++i)
            if (rep.gd.at(i) != oracle_gd.at(i)) first_diff = i;
    }

    if (opt.json) {
        ordered_json doc = document_head("check");
        doc["input"] = input_json(text, g);
        doc.update(report_json(rep, g, false, false));
        ordered_json o;
        o["genus_distribution"] = gd_json(oracle_gd);
        o["verdict"] = match ? "MATCH" : "MISMATCH";
        if (!match) o["first_difference"] = first_diff;
        doc["oracle"] = o;
        if (opt.timings) {
            doc["timings"] =
                ordered_json{{"engine_total_seconds", rep.timings.total_seconds},
                             {"oracle_total_seconds", oracle_elapsed}};
        }
        out << doc.dump(2) << "\n";
        return match ? kOk : kMismatch;
    }
    auto flat = [](const GenusDistribution& gd) {
        std::string s;
        for (int i = 0; i < gd.size(); ++i) {
            if (i > 0) s += ' ';
            s += gd.at(i).str();
        }
        return s;
    };
    out << "engine: " << flat(rep.gd) << "\n";
    out << "oracle: " << flat(oracle_gd) << "\n";
    if (match) {
        out << "MATCH\n";
        return kOk;
    }
    out << "MISMATCH at genus " << first_diff << "\n";
    return kMismatch;
}

int cmd_generate(std::ostream& out, int tau_steps, std::uint64_t seed) {
    out << serialize_graph(random_cubic_sp(tau_steps, seed));
    return kOk;
}

} // namespace

std::string input_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact genus distributions of low-treewidth cubic graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    std::string path;
    std::vector<std::string> terminal_labels;
    bool emit_pgd = false;
    CommonOptions compute_opt, oracle_opt, check_opt;
    long long oracle_limit = kDefaultOracleLimit;
    long long check_limit = kDefaultOracleLimit;
    int tau_steps = 0;
    std::uint64_t seed = 0;

    CLI::App* compute = app.add_subcommand("compute", "genus distribution via the production calculus");
    compute->add_option("file", path, "edge-list document")->required();
    compute->add_option("--terminals", terminal_labels,
                        "use this vertex pair as the string terminals (labels as in the file)")
        ->expected(2);
    compute->add_flag("--pgd", emit_pgd, "also print the partitioned intermediates");
    compute->add_flag("--json", compute_opt.json, "machine-readable output");
    compute->add_flag("--timings", compute_opt.timings, "include wall-clock phase timings");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive rotation-system enumeration");
    oracle->add_option("file", path, "edge-list document")->required();
    oracle->add_option("--limit", oracle_limit, "largest census to enumerate")
        ->capture_default_str();
    oracle->add_flag("--json", oracle_opt.json, "machine-readable output");
    oracle->add_flag("--timings", oracle_opt.timings, "include wall-clock timings");

    CLI::App* check = app.add_subcommand("check", "run both pipelines and compare");
    check->add_option("file", path, "edge-list document")->required();
    check->add_option("--limit", check_limit, "largest census to enumerate")
        ->capture_default_str();
    check->add_flag("--json", check_opt.json, "machine-readable output");
    check->add_flag("--timings", check_opt.timings, "include wall-clock timings");

    CLI::App* generate = app.add_subcommand("generate", "emit a random instance as an edge list");
    generate->add_option("--tau-steps", tau_steps, "number of doubling steps applied to the dipole")
        ->required()
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--seed", seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseFailure;
    }

    try {
        if (compute->parsed()) return cmd_compute(out, path, terminal_labels, emit_pgd, compute_opt);
        if (oracle->parsed()) return cmd_oracle(out, path, oracle_limit, oracle_opt);
        if (check->parsed()) return cmd_check(out, path, check_limit, check_opt);
        if (generate->parsed()) return cmd_generate(out, tau_steps, seed);
        err << "error (usage): no subcommand\n";
        return kParseFailure;
    } catch (const ParseError& e) {
        err << "error (parse): " << e.what() << "\n";
        return kParseFailure;
    } catch (const ValidationError& e) {
        err << "error (validation): " << e.what() << "\n";
        return kValidationFailure;
    } catch (const LimitError& e) {
        err << "error (limit): " << e.what() << "\n";
        return kLimitExceeded;
    } catch (const InternalError& e) {
        err << "error (internal): " << e.what() << "\n";
        return kInternalFailure;
    }
}

} // namespace spgenus
