#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "permlink/cli.hpp"
#include "permlink/diagram.hpp"
#include "permlink/render.hpp"
#include "test_helpers.hpp"

using namespace permlink;
using permtest::for_each_perm;

#ifndef GOLDEN_DIR
#define GOLDEN_DIR "tests/golden"
#endif
#ifndef DATA_DIR
#define DATA_DIR "data"
#endif
#ifndef DOCS_DIR
#define DOCS_DIR "docs"
#endif

namespace {

std::size_t count_substr(const std::string& hay, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "missing file: " << path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void check_golden(const std::string& produced, const std::string& name) {
    const std::string expected = read_file(std::string(GOLDEN_DIR) + "/" + name);
    CHECK_MESSAGE(produced == expected, "output differs from golden file " << name);
}

}  // namespace

TEST_CASE("rendering is deterministic") {
    const Permutation p = Permutation::parse("452613");
    RenderStyle style;
    style.show_seifert = true;
    CHECK(render_diagram(p, style) == render_diagram(p, style));
    style.format = RenderFormat::tikz;
    CHECK(render_diagram(p, style) == render_diagram(p, style));
}

TEST_CASE("break gaps equal the crossing count") {
    for (int n = 1; n <= 6; ++n) {
        for_each_perm(n, [](const Permutation& p) {
            const CycleDiagram d = build_cycle_diagram(p);
            const std::string svg = render_diagram(p, {});
            const std::size_t pieces = count_substr(svg, "<line class=\"h\"");
            REQUIRE(pieces == d.hsegs.size() + d.crossings.size());
        });
    }
    const std::string svg = render_diagram(Permutation::parse("452613"), {});
    CHECK(count_substr(svg, "<line class=\"h\"") == 6 + 3);  // 3 break gaps
}

TEST_CASE("identity renders as dots only") {
    const std::string svg = render_diagram(Permutation::identity(3), {});
    CHECK(count_substr(svg, "class=\"pt\"") == 3);
    CHECK(count_substr(svg, "<line class=\"v\"") == 0);
    CHECK(count_substr(svg, "<line class=\"h\"") == 0);
}

TEST_CASE("seifert overlay draws one closed curve per circle") {
    RenderStyle style;
    style.show_seifert = true;
    const std::string svg = render_diagram(Permutation::parse("68517324"), style);
    CHECK(count_substr(svg, "class=\"seifert") == 3);
    CHECK(count_substr(svg, "smax") == 1);
    const std::string tikz_out = [&] {
        RenderStyle t = style;
        t.format = RenderFormat::tikz;
        return render_diagram(Permutation::parse("68517324"), t);
    }();
    CHECK(count_substr(tikz_out, "cycle;") == 3);
}

TEST_CASE("tikz output carries the comment header and segment draws") {
    RenderStyle style;
    style.format = RenderFormat::tikz;
    const std::string t = render_diagram(Permutation::parse("321"), style);
    CHECK(t.find("% permutation: 3,2,1") == 0);
    CHECK(count_substr(t, "\\begin{tikzpicture}") == 1);
    CHECK(count_substr(t, "\\end{tikzpicture}") == 1);
    CHECK(count_substr(t, "\\fill") == 1);  // one fixed point
}

TEST_CASE("stats output validates against the documented schema") {
    std::string out;
    REQUIRE(run({"stats", "4,5,2,6,1,3"}, &out) == 0);
    const nlohmann::json stats = nlohmann::json::parse(out);
    const nlohmann::json schema =
        nlohmann::json::parse(read_file(std::string(DOCS_DIR) + "/stats-schema.json"));

    for (const auto& key : schema["required"]) {
        CHECK_MESSAGE(stats.contains(key.get<std::string>()), "missing " << key);
    }
    for (const auto& [key, value] : stats.items()) {
        REQUIRE_MESSAGE(schema["properties"].contains(key), "undocumented key " << key);
        const std::string type = schema["properties"][key]["type"];
        if (type == "integer") CHECK(value.is_number_integer());
        if (type == "string") CHECK(value.is_string());
        if (type == "boolean") CHECK(value.is_boolean());
        if (type == "object") CHECK(value.is_object());
    }
}

TEST_CASE("stats can emit the seifert decomposition") {
    std::string out;
    REQUIRE(run({"stats", "452613", "--emit", "seifert"}, &out) == 0);
    const nlohmann::json j = nlohmann::json::parse(out);
    REQUIRE(j.contains("seifert"));
    CHECK(j["seifert"]["chi"] == -1);
    CHECK(j["seifert"]["circles"].size() == 2);
}

TEST_CASE("golden: stats") {
    std::string out;
    REQUIRE(run({"stats", "4,5,2,6,1,3"}, &out) == 0);
    check_golden(out, "stats_452613.json");
}

TEST_CASE("golden: grid-export") {
    std::string out;
    REQUIRE(run({"grid-export", "321"}, &out) == 0);
    CHECK(out == "4\n4 3 2 1\n1 2 3 4\n");
    check_golden(out, "grid_321.txt");
}

TEST_CASE("golden: render svg and tikz") {
    std::string svg;
    REQUIRE(run({"render", "321"}, &svg) == 0);
    check_golden(svg, "render_321.svg");

    std::string tikz_out;
    REQUIRE(run({"render", "452613", "--format", "tikz", "--seifert"}, &tikz_out) == 0);
    check_golden(tikz_out, "render_452613_seifert.tikz");
}

TEST_CASE("golden: reduce") {
    std::string out;
    REQUIRE(run({"reduce", "452613", "--trace"}, &out) == 0);
    check_golden(out, "reduce_452613.txt");
}

TEST_CASE("golden: verify summary") {
    std::string out;
    REQUIRE(run({"verify", "--max-n", "3", "--workers", "1"}, &out) == 0);
    check_golden(out, "verify_n3.txt");
}

TEST_CASE("golden: enumerate") {
    std::string out;
    REQUIRE(run({"enumerate", "--n", "4", "--class", "sif"}, &out) == 0);
    check_golden(out, "enumerate_sif_n4.csv");
}

TEST_CASE("enumerate cross-checks against a bundled sequence") {
    std::string out;
    const std::string bfile = std::string(DATA_DIR) + "/A075834.bfile";
    REQUIRE(run({"enumerate", "--n", "5", "--class", "sif", "--seq", bfile, "--offset", "0"},
                &out) == 0);
    CHECK(out.find("# all match") != std::string::npos);

    // An off-by-one alignment must be reported and fail.
    REQUIRE(run({"enumerate", "--n", "5", "--class", "sif", "--seq", bfile, "--offset", "1"},
                &out) == 1);
    CHECK(out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("render --out writes the file") {
    const std::string path = "/tmp/permlink_render_out.svg";
    std::string out;
    REQUIRE(run({"render", "321", "--out", path}, &out) == 0);
    CHECK(out.empty());
    CHECK(read_file(path).find("<svg") != std::string::npos);
}

TEST_CASE("exit codes") {
    std::string out, err;
    CHECK(run({"bogus"}, &out, &err) == 2);
    CHECK(run({"stats", "1,1"}, &out, &err) == 2);
    CHECK_FALSE(err.empty());
    CHECK(run({"stats", "not_a_perm"}, &out, &err) == 2);
    CHECK(run({"verify", "--max-n", "2"}, &out, &err) == 0);
    CHECK(run({"--help"}, &out, &err) == 0);
    CHECK(run({}, &out, &err) == 2);
}

TEST_CASE("stats of the identity pair") {
    std::string out;
    REQUIRE(run({"stats", "1,2"}, &out) == 0);
    const nlohmann::json j = nlohmann::json::parse(out);
    CHECK(j["x"] == -2);
    CHECK(j["chi"] == 2);
    CHECK(j["shallow"] == true);
}
