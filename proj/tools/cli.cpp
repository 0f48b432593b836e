#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "packsep/gen.hpp"
#include "packsep/io.hpp"
#include "packsep/packed.hpp"
#include "packsep/result_io.hpp"
#include "packsep/separator.hpp"
#include "packsep/svg.hpp"

namespace packsep::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write '" + path + "'");
    file << content;
    if (!file) throw IoError("failed writing '" + path + "'");
}

struct InputOptions {
    std::string path;
    std::string format = "plain";
    std::size_t dim = 2;

    void add_to(CLI::App& cmd) {
        cmd.add_option("segments", path, "Segment file")->required();
        cmd.add_option("--format", format, "Input format")->check(CLI::IsMember({"plain", "polyline"}));
        cmd.add_option("--dim", dim, "Point dimension of polyline input")->check(CLI::PositiveNumber);
    }

    SegmentSet load() const {
        ParseOptions opts;
        opts.format = format == "polyline" ? SegmentFormat::Polyline : SegmentFormat::Plain;
        opts.polyline_dim = dim;
        std::istringstream in(read_file(path));
        return parse_segments(in, opts);
    }
};

struct SeparatorOptions {
    // Unset: paper when --c-pack is given, min-of-m otherwise.
    std::string mode;
    int m = 8;
    int c_bal = 50;
    std::optional<double> c_pack;
    int max_rounds = 64;
    std::uint64_t seed = 0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--mode", mode, "Radius sampling mode")->check(CLI::IsMember({"paper", "min-of-m"}));
        cmd.add_option("--m", m, "Radii drawn in min-of-m mode");
        cmd.add_option("--c-bal", c_bal, "Balance constant");
        cmd.add_option("--c-pack", c_pack, "Packedness constant for paper mode");
        cmd.add_option("--max-rounds", max_rounds, "Round cap for paper mode");
        cmd.add_option("--seed", seed, "RNG seed")->required();
    }

    SeparatorConfig config() const {
        SeparatorConfig cfg;
        cfg.c_bal = c_bal;
        cfg.max_rounds = max_rounds;
        cfg.seed = seed;
        if (mode == "paper" || (mode.empty() && c_pack)) {
            if (!c_pack) throw UsageError("--mode paper requires --c-pack");
            cfg.mode = PaperFaithful{*c_pack};
        } else {
            cfg.mode = MinOfM{m};
        }
        cfg.validate();
        return cfg;
    }
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_report(std::ostream& out, const VerificationReport& r, bool guarantee) {
    out << "partition_consistent: " << yes_no(r.partition_consistent) << '\n'
        << "radius_in_range: " << yes_no(r.radius_in_range) << '\n'
        << "inside_count: " << r.inside_count << '\n'
        << "crossing_count: " << r.crossing_count << '\n'
        << "outside_count: " << r.outside_count << '\n'
        << "balance_threshold: " << format_double(r.balance_threshold) << '\n'
        << "inside_balanced: " << yes_no(r.inside_balanced) << '\n'
        << "outside_balanced: " << yes_no(r.outside_balanced) << '\n'
        << "guarantee_applies: " << yes_no(guarantee) << '\n';
}

int cmd_verify(const InputOptions& input, const std::string& result_path, std::optional<int> c_bal_flag,
               std::ostream& out) {
    const SegmentSet set = input.load();
    const std::string text = read_file(result_path);
    const ResultHeader header = read_result_header(text);
    const int c_bal = c_bal_flag.value_or(header.c_bal);
    if (c_bal < 2) throw std::invalid_argument("c_bal must be >= 2");
    if (header.n != set.size()) {
        out << "status: fail (result is for " << header.n << " segments, input has " << set.size() << ")\n";
        return kVerificationFailure;
    }

    bool passed = false;
    try {
        if (header.kind == ResultKind::Separator) {
            const SeparatorResult result = separator_from_json(text);
            const VerificationReport report = verify_separator(set, result, c_bal);
            print_report(out, report, result.guarantee_applies);
            passed = report.passed(result.guarantee_applies);
        } else {
            const auto root = tree_from_json(text);
            const TreeVerification report = verify_tree(set, *root, c_bal);
            out << "nodes_checked: " << report.nodes_checked << '\n'
                << "nodes_failed: " << report.nodes_failed << '\n'
                << "accounting_ok: " << yes_no(report.accounting_ok) << '\n'
                << "structure_ok: " << yes_no(report.structure_ok) << '\n';
            passed = report.passed();
        }
    } catch (const std::out_of_range& e) {
        out << "status: fail (malformed result: " << e.what() << ")\n";
        return kVerificationFailure;
    }
    out << "status: " << (passed ? "pass" : "fail") << '\n';
    return passed ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sphere separators for c-packed segment sets", "packsep"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Write a generated segment file");
    gen->require_subcommand(1);
    std::string gen_out;
    int rows = 10, cols = 10, spokes = 8, depth = 3, steps = 1000;
    double spacing = 2.0, spoke_len = 1.0, scale = 1.0, step_len = 1.0;
    std::uint64_t walk_seed = 0;
    auto* gen_grid_cmd = gen->add_subcommand("grid", "Grid of horizontal unit segments");
    gen_grid_cmd->add_option("--rows", rows)->required();
    gen_grid_cmd->add_option("--cols", cols)->required();
    gen_grid_cmd->add_option("--spacing", spacing);
    auto* gen_star_cmd = gen->add_subcommand("star", "Segments radiating from the origin");
    gen_star_cmd->add_option("--spokes", spokes)->required();
    gen_star_cmd->add_option("--length", spoke_len);
    auto* gen_koch_cmd = gen->add_subcommand("koch", "Koch snowflake polyline");
    gen_koch_cmd->add_option("--depth", depth)->required();
    gen_koch_cmd->add_option("--scale", scale);
    auto* gen_walk_cmd = gen->add_subcommand("walk", "Planar random-walk polyline");
    gen_walk_cmd->add_option("--steps", steps)->required();
    gen_walk_cmd->add_option("--step-len", step_len);
    gen_walk_cmd->add_option("--seed", walk_seed)->required();
    for (auto* sub : {gen_grid_cmd, gen_star_cmd, gen_koch_cmd, gen_walk_cmd})
        sub->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // pack
    auto* pack = app.add_subcommand("pack", "Estimate the packedness constant");
    InputOptions pack_in;
    pack_in.add_to(*pack);
    std::string centers = "both";
    int radii = 128;
    pack->add_option("--centers", centers)->check(CLI::IsMember({"endpoints", "midpoints", "both"}));
    pack->add_option("--radii", radii, "Radii per center (8 per octave)")->check(CLI::PositiveNumber);

    // separate
    auto* separate = app.add_subcommand("separate", "Compute one sphere separator");
    InputOptions sep_in;
    sep_in.add_to(*separate);
    SeparatorOptions sep_opts;
    sep_opts.add_to(*separate);
    std::string sep_out;
    separate->add_option("-o,--output", sep_out, "Result file (default stdout)");

    // tree
    auto* tree = app.add_subcommand("tree", "Build a separator tree");
    InputOptions tree_in;
    tree_in.add_to(*tree);
    SeparatorOptions tree_opts;
    tree_opts.add_to(*tree);
    std::size_t leaf_size = 256;
    std::string tree_out;
    tree->add_option("--leaf-size", leaf_size)->check(CLI::PositiveNumber);
    tree->add_option("-o,--output", tree_out, "Result file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a separator or tree result against its input");
    InputOptions verify_in;
    verify_in.add_to(*verify);
    std::string verify_result;
    std::optional<int> verify_c_bal;
    verify->add_option("result", verify_result, "Result file")->required();
    verify->add_option("--c-bal", verify_c_bal, "Override the balance constant recorded in the result");

    // svg
    auto* svg = app.add_subcommand("svg", "Render a planar input and optional separator result");
    InputOptions svg_in;
    svg_in.add_to(*svg);
    std::string svg_result, svg_out;
    svg->add_option("result", svg_result, "Separator result file");
    svg->add_option("-o,--output", svg_out, "SVG file (default stdout)");

    std::vector<std::string> argv_storage{"packsep"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*gen) {
            std::optional<SegmentSet> set;
            if (*gen_grid_cmd) set = gen_grid(rows, cols, spacing);
            if (*gen_star_cmd) set = gen_star(spokes, spoke_len);
            if (*gen_koch_cmd) set = gen_koch(depth, scale);
            if (*gen_walk_cmd) set = gen_polyline_walk(steps, step_len, walk_seed);
            write_output(gen_out, format_segments(*set), out);
            return kSuccess;
        }
        if (*pack) {
            const SegmentSet set = pack_in.load();
            const CenterStrategy strategy = centers == "endpoints"   ? CenterStrategy::Endpoints
                                            : centers == "midpoints" ? CenterStrategy::Midpoints
                                                                     : CenterStrategy::EndpointsAndMidpoints;
            out << packedness_to_json(estimate_packedness(set, strategy, radii), set.size());
            return kSuccess;
        }
        if (*separate) {
            const SeparatorConfig cfg = sep_opts.config();
            const SegmentSet set = sep_in.load();
            const SeparatorResult result = find_separator(set, cfg);
            write_output(sep_out, separator_to_json(result, cfg, set.size()), out);
            std::ostream& summary = (sep_out.empty() || sep_out == "-") ? err : out;
            summary << "n=" << set.size() << " crossing=" << result.crossing.size()
                    << " inside=" << result.inside.size() << " outside=" << result.outside.size()
                    << " rounds=" << result.rounds_used << " accepted=" << yes_no(result.accepted)
                    << " guarantee=" << yes_no(result.guarantee_applies) << '\n';
            return kSuccess;
        }
        if (*tree) {
            const SeparatorConfig cfg = tree_opts.config();
            const SegmentSet set = tree_in.load();
            const auto root = build_tree(set, cfg, leaf_size);
            write_output(tree_out, tree_to_json(*root, cfg, set.size(), leaf_size), out);
            std::ostream& stats = (tree_out.empty() || tree_out == "-") ? err : out;
            for (const TreeLevelStats& level : tree_level_stats(*root)) {
                stats << "depth=" << level.depth << " nodes=" << level.nodes << " leaves=" << level.leaves
                      << " segments=" << level.segments << " crossing=" << level.crossing << '\n';
            }
            return kSuccess;
        }
        if (*verify) return cmd_verify(verify_in, verify_result, verify_c_bal, out);
        if (*svg) {
            const SegmentSet set = svg_in.load();
            std::optional<SeparatorResult> result;
            if (!svg_result.empty()) {
                result = separator_from_json(read_file(svg_result));
                if (verify_separator(set, *result, 2).partition_consistent == false)
                    throw std::invalid_argument("result does not match the segment file");
            }
            write_output(svg_out, render_svg(set, result ? &*result : nullptr), out);
            return kSuccess;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
    return kUsageError;
}

}  // namespace packsep::cli
