#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "dsem_cli/cli.hpp"

using namespace dsem;
using namespace dsem::cli;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "dsem");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("dsem_test_" + name)).string();
}

int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Json, MapRoundTrip) {
    Generated g = generate({"[3^6:3^2.6^2]", 9, 1, 6});
    json a = map_to_json(g.map, g.layout.labels);
    std::vector<std::string> labels;
    SurfaceMap back = map_from_json(json::parse(a.dump()), &labels);
    EXPECT_EQ(back.faces(), g.map.faces());
    EXPECT_EQ(labels, g.layout.labels);
    EXPECT_EQ(map_to_json(back, labels), a);
}

TEST(Json, LayoutAndCycleRoundTrip) {
    ReprParams p{"[3^4.6:3^2.6^2]", 6, 2, 3};
    Generated g = generate(p);
    json l = layout_to_json(g.layout);
    EXPECT_EQ(layout_to_json(layout_from_json(json::parse(l.dump()))), l);
    Cycle c = construct_hamiltonian(p, g.map, g.layout);
    json cj = cycle_to_json(c);
    EXPECT_EQ(cycle_to_json(cycle_from_json(json::parse(cj.dump()))), cj);
    EXPECT_EQ(cj["vertices"].size(), 12u);
    EXPECT_EQ(cj["winding"].size(), 2u);
}

TEST(Json, CatalogDump) {
    json c = catalog_json();
    ASSERT_EQ(c.size(), 20u);
    EXPECT_EQ(c[0]["face_sequences"].size(), 2u);
}

TEST(Svg, EdgeCountWithoutCycle) {
    Generated g = generate({"[3^2.4.3.4:3.4.6.4]", 4, 2, 0});
    std::string doc = render_svg(g.map, g.layout);
    std::set<std::pair<std::pair<long, long>, std::pair<long, long>>> segs;
    for (const auto& face : g.layout.strip) {
        for (std::size_t t = 0; t < face.size(); ++t) {
            const Point& p = face[t].at;
            const Point& q = face[(t + 1) % face.size()].at;
            auto a = std::make_pair(std::lround(p.x * 100), std::lround(p.y * 100));
            auto b = std::make_pair(std::lround(q.x * 100), std::lround(q.y * 100));
            segs.insert({std::min(a, b), std::max(a, b)});
        }
    }
    EXPECT_EQ(count(doc, "<line class=\"edge\""), static_cast<int>(segs.size()));
    EXPECT_EQ(count(doc, "<line class=\"cycle\""), 0);
    EXPECT_EQ(count(doc, "class=\"seam\""), 2);
}

TEST(Svg, CycleHasOneThickSegmentPerVertex) {
    ReprParams p{"[3^6:3^2.4.12]", 15, 2, 10};
    Generated g = generate(p);
    Cycle c = construct_hamiltonian(p, g.map, g.layout);
    std::string doc = render_svg(g.map, g.layout, &c);
    EXPECT_EQ(count(doc, "<line class=\"cycle\""), g.map.vertex_count());
}

TEST(Svg, Deterministic) {
    ReprParams p{"[3.4^2.6:3.4.6.4]", 5, 2, 0};
    Generated a = generate(p);
    Generated b = generate(p);
    Cycle ca = construct_hamiltonian(p, a.map, a.layout);
    Cycle cb = construct_hamiltonian(p, b.map, b.layout);
    EXPECT_EQ(render_svg(a.map, a.layout, &ca), render_svg(b.map, b.layout, &cb));
}

TEST(Svg, MismatchedInputs) {
    Generated a = generate({"[3^6:3^3.4^2]_1", 3, 3, 0});
    Generated b = generate({"[3^6:3^3.4^2]_1", 4, 3, 0});
    EXPECT_THROW(render_svg(a.map, b.layout), MismatchedInputs);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"catalog"}).code, kOk);
    Outcome rej = invoke({"gen", "--type", "[3^2.6^2:3.6.3.6]", "--i", "8", "--j", "1", "--k", "5"});
    EXPECT_EQ(rej.code, kRejected);
    EXPECT_NE(rej.err.find("TooSmall"), std::string::npos);
    EXPECT_EQ(invoke({"ham", "--type", "[3.4.3.12:3.12^2]", "--i", "24", "--j", "1", "--k", "9"}).code, kVerifyFailed);
    EXPECT_EQ(invoke({"check", "--type", "[3^6:3^4.6]_2", "--i", "6", "--j", "4", "--k", "1"}).code, kVerifyFailed);
    EXPECT_EQ(invoke({"check", "--type", "[3^6:3^4.6]_2", "--i", "6", "--j", "4", "--k", "3"}).code, kOk);
}

TEST(Cli, GenHamSvgPipeline) {
    const std::string m = tmp("map.json"), l = tmp("layout.json"), c = tmp("cycle.json"), s = tmp("out.svg");
    std::vector<std::string> params = {"--type", "[3^6:3^3.4^2]_1", "--i", "3", "--j", "3", "--k", "0"};
    auto with = [&](std::vector<std::string> head, std::vector<std::string> tail) {
        head.insert(head.end(), params.begin(), params.end());
        head.insert(head.end(), tail.begin(), tail.end());
        return head;
    };
    ASSERT_EQ(invoke(with({"gen"}, {"--out", m, "--layout", l})).code, kOk);
    Outcome h = invoke(with({"ham"}, {"--oracle", "--out", c, "--json"}));
    ASSERT_EQ(h.code, kOk);
    json hj = json::parse(h.out);
    EXPECT_EQ(hj["length"], 9);
    EXPECT_EQ(hj["oracle"]["status"], "Found");
    json cyc = json::parse(slurp(c));
    EXPECT_EQ(cyc["vertices"].size(), 9u);
    ASSERT_EQ(invoke({"svg", "--map", m, "--layout", l, "--cycle", c, "--out", s}).code, kOk);
    EXPECT_EQ(count(slurp(s), "<line class=\"cycle\""), 9);
    Outcome k = invoke({"kappa", "--in", m, "--json"});
    ASSERT_EQ(k.code, kOk);
    EXPECT_EQ(json::parse(k.out)["kappa"], 5);
    Outcome chk = invoke({"check", "--type", "[3^6:3^3.4^2]_1", "--in", m, "--json"});
    EXPECT_EQ(chk.code, kOk);
    EXPECT_EQ(json::parse(chk.out)["classes"].size(), 2u);
}

TEST(Cli, JsonOnEverySubcommand) {
    EXPECT_TRUE(json::parse(invoke({"catalog", "--json"}).out).is_array());
    Outcome g = invoke({"gen", "--type", "[3^6:3^3.4^2]_1", "--i", "3", "--j", "3", "--k", "0", "--json"});
    EXPECT_EQ(json::parse(g.out)["n"], 9);
    Outcome s = invoke({"sweep", "--types", "[3^3.4^2:3.4.6.4]", "--max-vertices", "12", "--json"});
    EXPECT_EQ(json::parse(s.out)["summary"]["instances"], 1);
}

TEST(Sweep, EmptyBelowAllFloors) {
    SweepOptions opt;
    opt.max_vertices = 8;
    SweepReport r = run_sweep(opt);
    EXPECT_TRUE(r.rows.empty());
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(invoke({"sweep", "--max-vertices", "8"}).code, kOk);
}

TEST(Sweep, ExceptionalTypeRows) {
    SweepOptions opt;
    opt.types = {"[3.4.3.12:3.12^2]"};
    opt.max_vertices = 48;
    SweepReport r = run_sweep(opt);
    int generated = 0;
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.n, vertex_count(find_type(row.type), row.i, row.j));
        if (!row.generated) {
            // j = 1 with k near i/2 glues two 12-gons along two edges
            EXPECT_EQ(row.j, 1);
            EXPECT_NE(row.error.find("BadIncidence"), std::string::npos);
            continue;
        }
        ++generated;
        EXPECT_EQ(row.kappa, 3);
        EXPECT_TRUE(row.ham_verified);
    }
    EXPECT_GT(generated, 0);
}

TEST(Sweep, RowOrderIsDeterministic) {
    SweepOptions opt;
    opt.types = {"[3^6:3^3.4^2]_1", "[3^4.6:3^2.6^2]"};
    opt.max_vertices = 16;
    opt.oracle_cutoff = 0;
    EXPECT_EQ(to_json(run_sweep(opt)).dump(), to_json(run_sweep(opt)).dump());
}
