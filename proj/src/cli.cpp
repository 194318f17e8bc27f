#include "permlink/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlink/constructions.hpp"
#include "permlink/diagram.hpp"
#include "permlink/enumeration.hpp"
#include "permlink/render.hpp"
#include "permlink/seifert.hpp"

namespace permlink {

namespace {

using nlohmann::json;

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> items;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

int cmd_stats(const std::string& perm_text, const std::string& emit, std::ostream& out) {
    const Permutation p = Permutation::parse(perm_text);
    json j = to_json(compute_stats(p));
    j["perm"] = p.format();
    if (emit == "seifert") {
        j["seifert"] = to_json(seifert_circles(build_cycle_diagram(p)));
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(int max_n, const std::string& checks_csv, int workers, bool as_json,
               std::ostream& out) {
    const VerifyReport report = verify_all(max_n, split_list(checks_csv), workers);
    if (as_json) {
        out << report.to_json().dump(2) << "\n";
    } else {
        for (const CheckReport& c : report.checks) {
            if (c.counterexample) {
                out << "check " << c.name << ": FAIL at " << c.counterexample->perm << " ("
                    << c.counterexample->message << ")\n";
                out << json({{"counterexample",
                              {{"check", c.counterexample->check},
                               {"perm", c.counterexample->perm},
                               {"message", c.counterexample->message},
                               {"details", c.counterexample->details}}}})
                           .dump(2)
                    << "\n";
            } else {
                out << "check " << c.name << ": pass (" << c.passed << " permutations)\n";
            }
        }
        out << "verified " << report.permutations << " permutations of size 1.." << report.n_max
            << ": " << (report.ok() ? "OK" : "COUNTEREXAMPLE FOUND") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_enumerate(int n_max, const std::string& cls, const std::string& seq_path,
                  std::optional<int> offset, std::ostream& out) {
    const auto c = parse_class(cls);
    if (!c) throw CLI::ValidationError("--class", "unknown class: " + cls);
    out << "n,class,count\n";
    std::map<int, std::int64_t> counts;
    for (int n = 1; n <= n_max; ++n) {
        if (*c == PermClass::x_histogram) {
            for (const auto& [x, freq] : x_histogram(n)) {
                out << n << ",x=" << x << "," << freq << "\n";
            }
        } else {
            counts[n] = count_class(n, *c);
            out << n << "," << cls << "," << counts[n] << "\n";
        }
    }
    if (seq_path.empty()) return 0;
    if (*c == PermClass::x_histogram) {
        throw CLI::ValidationError("--seq", "cross-check needs a scalar class");
    }
    const SequenceFile seq = load_sequence_file(seq_path);
    const CrossCheckReport rep = cross_check(counts, seq, offset);
    out << "# cross-check " << rep.sequence << " offset " << rep.offset
        << (rep.offset_searched ? " (searched)" : " (pinned)") << "\n";
    for (const CrossCheckRow& row : rep.rows) {
        out << "# n=" << row.index << " computed=" << row.computed
            << " expected=" << row.expected << (row.match ? " match" : " MISMATCH") << "\n";
    }
    out << "# " << (rep.all_match ? "all match" : "mismatch found") << "\n";
    return rep.all_match ? 0 : 1;
}

int cmd_reduce(const std::string& perm_text, bool trace, std::ostream& out) {
    const Permutation p = Permutation::parse(perm_text);
    std::vector<json> steps;
    const std::int64_t replayed = replay_x(p, trace ? &steps : nullptr);
    for (const json& j : steps) out << j.dump() << "\n";
    const std::int64_t x = statistic_x(p);
    out << json{{"perm", p.format()},
                {"x", x},
                {"replay_x", replayed},
                {"consistent", replayed == x}}
               .dump()
        << "\n";
    return replayed == x ? 0 : 1;
}

int cmd_render(const std::string& perm_text, const RenderStyle& style, const std::string& path,
               std::ostream& out) {
    const Permutation p = Permutation::parse(perm_text);
    write_output(render_diagram(p, style), path, out);
    return 0;
}

int cmd_grid_export(const std::string& perm_text, const std::string& path, std::ostream& out) {
    const Permutation p = Permutation::parse(perm_text);
    write_output(grid_export(p).to_text(), path, out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"permutation statistics, cycle-diagram links, and exhaustive verification"};
    app.name("permlink");
    app.require_subcommand(1);

    std::string perm_text, emit, checks_csv, cls = "sif", seq_path, out_path, format = "svg";
    int max_n = 6, workers = 0;
    std::optional<int> offset;
    bool as_json = false, trace = false, seifert_overlay = false, crossings_overlay = false;
    bool no_diagonal = false, no_smax = false;
    double cell = 24.0;

    auto* stats = app.add_subcommand("stats", "all statistics of one permutation as JSON");
    stats->add_option("perm", perm_text, "one-line notation, e.g. 4,5,2,6,1,3")->required();
    stats->add_option("--emit", emit, "also emit a derived structure (seifert)")
        ->check(CLI::IsMember({"seifert"}));

    auto* verify = app.add_subcommand("verify", "run registered properties over all S_n");
    verify->add_option("--max-n", max_n, "largest size to enumerate")
        ->required()
        ->check(CLI::Range(1, 10));
    verify->add_option("--checks", checks_csv, "comma-separated check names (default: all)");
    verify->add_option("--workers", workers, "worker threads (0 = hardware)");
    verify->add_flag("--json", as_json, "emit the full JSON report");

    auto* enumerate = app.add_subcommand("enumerate", "per-size class counts as CSV");
    enumerate->add_option("--n", max_n, "largest size")->required()->check(CLI::Range(1, 10));
    enumerate->add_option("--class", cls,
                          "sif|shallow|avoids321|nonsplit|x_histogram|unknotted_cycles")
        ->required();
    enumerate->add_option("--seq", seq_path, "b-file to cross-check against");
    enumerate->add_option("--offset", offset, "alignment: count(n) vs term(n + offset)");

    auto* reduce = app.add_subcommand("reduce", "replay the case reductions down to base cases");
    reduce->add_option("perm", perm_text, "one-line notation")->required();
    reduce->add_flag("--trace", trace, "print one JSON line per reduction step");

    auto* render = app.add_subcommand("render", "draw the cycle diagram");
    render->add_option("perm", perm_text, "one-line notation")->required();
    render->add_option("--format", format, "svg or tikz")->check(CLI::IsMember({"svg", "tikz"}));
    render->add_flag("--seifert", seifert_overlay, "overlay the Seifert circles");
    render->add_flag("--crossings", crossings_overlay, "mark each crossing");
    render->add_flag("--no-diagonal", no_diagonal, "omit the diagonal guide line");
    render->add_flag("--no-smax", no_smax, "do not highlight maximal circles");
    render->add_option("--cell", cell, "cell size in pixels (svg)");
    render->add_option("--out", out_path, "write to a file instead of stdout");

    auto* grid = app.add_subcommand("grid-export", "grid-diagram text form (size, X row, O row)");
    grid->add_option("perm", perm_text, "one-line notation")->required();
    grid->add_option("--out", out_path, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11's machinery.
            std::ostringstream oss;
            const int code = app.exit(e, oss, oss);
            out << oss.str();
            return code;
        }
        err << "error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (stats->parsed()) return cmd_stats(perm_text, emit, out);
        if (verify->parsed()) return cmd_verify(max_n, checks_csv, workers, as_json, out);
        if (enumerate->parsed()) return cmd_enumerate(max_n, cls, seq_path, offset, out);
        if (reduce->parsed()) return cmd_reduce(perm_text, trace, out);
        if (render->parsed()) {
            RenderStyle style;
            style.cell_size = cell;
            style.show_diagonal = !no_diagonal;
            style.show_crossings = crossings_overlay;
            style.show_seifert = seifert_overlay;
            style.show_smax = !no_smax;
            style.format = format == "tikz" ? RenderFormat::tikz : RenderFormat::svg;
            return cmd_render(perm_text, style, out_path, out);
        }
        if (grid->parsed()) return cmd_grid_export(perm_text, out_path, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace permlink
