#include <gtest/gtest.h>

#include <set>

#include "dsem/catalog.hpp"
#include "dsem/generators.hpp"
#include "support.hpp"

using namespace dsem;

TEST(Catalog, TwentyDistinctTypes) {
    std::set<std::string> names;
    for (const auto& t : catalog()) names.insert(t.name);
    EXPECT_EQ(catalog().size(), 20u);
    EXPECT_EQ(names.size(), 20u);
}

TEST(Catalog, MinDegreeIsSmallerFaceSequenceDegree) {
    for (const auto& t : catalog()) {
        EXPECT_EQ(t.min_degree, std::min(t.fseq_a.degree(), t.fseq_b.degree())) << t.name;
    }
}

TEST(Catalog, BothFaceSequencesAreFlat) {
    for (const auto& t : catalog()) {
        EXPECT_EQ(curvature(t.fseq_a).numerator(), 0) << t.name;
        EXPECT_EQ(curvature(t.fseq_b).numerator(), 0) << t.name;
    }
}

TEST(Catalog, ExceptionalTypesHaveDegreeThree) {
    for (const auto& t : catalog()) {
        bool exceptional = t.name == "[3.4.3.12:3.12^2]" || t.name == "[3.4.6.4:4.6.12]";
        EXPECT_EQ(t.min_degree == 3, exceptional) << t.name;
    }
}

TEST(Catalog, CountFormulasAsWritten) {
    EXPECT_EQ(find_type("[3.4.3.12:3.12^2]").count_formula(), "8ij/6");
    EXPECT_EQ(find_type("[3^6:3^2.4.12]").count_formula(), "7ij/5");
    EXPECT_EQ(find_type("[3^2.6^2:3.6.3.6]").count_formula(), "3ij/2");
    EXPECT_THROW(find_type("[5^4]"), std::out_of_range);
}

TEST(VerifyDsem, HexIslandsClassSizes) {
    const DsemType& t = find_type("[3^6:3^2.6^2]");
    Generated g = generate({t.name, 9, 1, 6});
    DsemReport r = verify_dsem(g.map, t);
    ASSERT_TRUE(r.pass);
    // every hexagon corner is a 3^2.6^2 vertex lying on two hexagons
    int hexagons = 0;
    for (const Face& f : g.map.faces()) hexagons += f.size() == 6;
    std::map<std::string, int> sizes;
    for (const auto& c : r.classes) sizes[c.fseq.str()] = c.size;
    EXPECT_EQ(sizes["3^2.6^2"], 3 * hexagons);
    EXPECT_EQ(sizes["3^6"], g.map.vertex_count() - 3 * hexagons);
    // a row of 9 holds 3 vertices 3^6 and 6 vertices 3^2.6^2, plus 4i/3 = 12 above it
    EXPECT_EQ(sizes["3^6"], 3);
    EXPECT_EQ(sizes["3^2.6^2"], 18);
}

TEST(VerifyDsem, QuadGridIsNoDsem) {
    SurfaceMap m = build_from_faces(fixtures::torus_grid(4, 4));
    for (const auto& t : catalog()) {
        DsemReport r = verify_dsem(m, t);
        EXPECT_FALSE(r.pass) << t.name;
        EXPECT_EQ(r.classes.size(), 1u);
    }
}

TEST(VerifyDsem, ElongatedRhombiMinimal) {
    const DsemType& t = find_type("[3^3.4^2:3.4.6.4]");
    Generated g = generate({t.name, 4, 3, 3});
    DsemReport r = verify_dsem(g.map, t);
    EXPECT_TRUE(r.pass);
    int total = 0;
    for (const auto& c : r.classes) total += c.size;
    EXPECT_EQ(total, 12);
}

TEST(VerifyDsem, WrongTypeFails) {
    Generated g = generate({"[3^6:3^3.4^2]_1", 3, 3, 0});
    EXPECT_FALSE(verify_dsem(g.map, find_type("[3^3.4^2:4^4]_1")).pass);
    EXPECT_FALSE(verify_dsem(g.map, find_type("[3^6:3^2.4.3.4]")).classes_match);
}

TEST(VerifyDsem, ClassSizesSumToVertexCount) {
    for (const auto& t : catalog()) {
        auto ps = enumerate_admissible(t, 60);
        ASSERT_FALSE(ps.empty()) << t.name;
        for (const auto& p : ps) {
            Generated g;
            try {
                g = generate(p);
            } catch (const MapException&) {
                continue;
            }
            DsemReport r = verify_dsem(g.map, t);
            int total = 0;
            for (const auto& c : r.classes) total += c.size;
            EXPECT_EQ(total, vertex_count(t, p.i, p.j)) << t.name;
            break;
        }
    }
}
