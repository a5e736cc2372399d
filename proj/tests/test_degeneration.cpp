#include "origami/degeneration.hpp"

#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

using namespace origami::degen;
using origami::perm::Perm;
using origami::surf::catalog_get;
using origami::surf::make_origami;
using origami::surf::Origami;

namespace {

Origami rand_origami(std::mt19937& rng, int d) {
    auto rand_perm = [&]() {
        std::vector<int> img(d);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        return Perm(img);
    };
    for (;;) {
        Perm h = rand_perm(), v = rand_perm();
        if (origami::perm::transitive_pair(h, v)) return make_origami("r", h, v);
    }
}

DualGraph graph(std::vector<int> genera, std::vector<std::pair<int, int>> edges) {
    return DualGraph{std::move(genera), std::move(edges)};
}

} // namespace

TEST_CASE("cylinder decompositions of the catalog") {
    const Origami& s = catalog_get("S");

    auto h = cylinders(s, Direction::horizontal);
    REQUIRE(h.size() == 2);
    CHECK(h[0].width == 3);
    CHECK(h[0].height == 1);
    CHECK(h[0].rows == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(h[1].width == 3);
    CHECK(h[1].height == 1);
    CHECK(h[1].rows == std::vector<std::vector<int>>{{3, 4, 5}});

    auto v = cylinders(s, Direction::vertical);
    REQUIRE(v.size() == 3);
    CHECK(v[0].width == 1);
    CHECK(v[0].height == 1);
    CHECK(v[0].rows == std::vector<std::vector<int>>{{0}});
    CHECK(v[1].width == 2);
    CHECK(v[1].height == 2);
    CHECK(v[1].rows == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK(v[2].width == 1);
    CHECK(v[2].height == 1);
    CHECK(v[2].rows == std::vector<std::vector<int>>{{5}});

    auto t = cylinders(catalog_get("torus"), Direction::horizontal);
    REQUIRE(t.size() == 1);
    CHECK(t[0].width == 1);
    CHECK(t[0].height == 1);

    auto l = cylinders(catalog_get("L3"), Direction::vertical);
    REQUIRE(l.size() == 2);
    CHECK(l[0].width == 2);
    CHECK(l[0].height == 1);
    CHECK(l[0].rows == std::vector<std::vector<int>>{{0, 2}});
    CHECK(l[1].width == 1);
    CHECK(l[1].rows == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("cylinders tile the surface") {
    std::mt19937 rng(31);
    for (int it = 0; it < 100; ++it) {
        Origami o = rand_origami(rng, 2 + it % 6);
        for (Direction d : {Direction::horizontal, Direction::vertical}) {
            auto cyl = cylinders(o, d);
            int area = 0;
            std::vector<int> seen;
            for (const auto& c : cyl) {
                CHECK(c.height == (int)c.rows.size());
                for (const auto& row : c.rows) {
                    CHECK((int)row.size() == c.width);
                    seen.insert(seen.end(), row.begin(), row.end());
                }
                area += c.width * c.height;
            }
            CHECK(area == origami::surf::degree(o));
            std::sort(seen.begin(), seen.end());
            std::vector<int> all(origami::surf::degree(o));
            std::iota(all.begin(), all.end(), 0);
            CHECK(seen == all);
        }
    }
}

TEST_CASE("stable curves of the catalog") {
    const Origami& s = catalog_get("S");

    int chi = 0;
    DualGraph gh = stable_curve(s, Direction::horizontal, &chi);
    CHECK(gh.genus == std::vector<int>{0});
    CHECK(gh.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}});
    CHECK(chi == -2); // 2 - 2 genus(S)
    CHECK(arithmetic_genus(gh) == 2);

    DualGraph gv = stable_curve(s, Direction::vertical, &chi);
    CHECK(gv.genus == std::vector<int>{0, 0});
    CHECK(gv.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 1}});
    CHECK(chi == -2);
    CHECK(arithmetic_genus(gv) == 2);

    CHECK(!graphs_isomorphic(gh, gv));

    DualGraph tt = stable_curve(catalog_get("torus"), Direction::horizontal, &chi);
    CHECK(tt.genus == std::vector<int>{0});
    CHECK(tt.edges == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(chi == 0);
    CHECK(arithmetic_genus(tt) == 1);

    for (Direction d : {Direction::horizontal, Direction::vertical}) {
        DualGraph gl = stable_curve(catalog_get("L3"), d);
        CHECK(gl.genus == std::vector<int>{0});
        CHECK(gl.edges.size() == 2);
        CHECK(arithmetic_genus(gl) == 2);
    }
}

TEST_CASE("pinching preserves Euler characteristic and arithmetic genus") {
    std::mt19937 rng(32);
    for (int it = 0; it < 60; ++it) {
        Origami o = rand_origami(rng, 2 + it % 6);
        int g = origami::surf::genus(o);
        for (Direction d : {Direction::horizontal, Direction::vertical}) {
            int chi = 0;
            DualGraph dg = stable_curve(o, d, &chi);
            CHECK(chi == 2 - 2 * g);
            CHECK(arithmetic_genus(dg) == g);
            CHECK(dg.edges.size() == cylinders(o, d).size());
            for (int gi : dg.genus) CHECK(gi >= 0);
            for (auto [a, b] : dg.edges) {
                CHECK(0 <= a);
                CHECK(a < (int)dg.genus.size());
                CHECK(0 <= b);
                CHECK(b < (int)dg.genus.size());
            }
        }
    }
}

TEST_CASE("arithmetic genus is components plus loops") {
    CHECK(arithmetic_genus(graph({1, 2}, {{0, 1}})) == 3);
    CHECK(arithmetic_genus(graph({0}, {{0, 0}, {0, 0}})) == 2);
    CHECK_THROWS_AS(arithmetic_genus(graph({0, 0}, {})), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_genus(graph({}, {})), std::invalid_argument);
}

TEST_CASE("dual graph isomorphism") {
    DualGraph loops = graph({0}, {{0, 0}, {0, 0}});
    DualGraph banana = graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(graphs_isomorphic(loops, loops));
    CHECK(!graphs_isomorphic(loops, banana));

    // relabeling the vertices is invisible
    DualGraph a = graph({0, 1, 0}, {{0, 1}, {1, 2}, {2, 2}});
    DualGraph b = graph({0, 0, 1}, {{1, 2}, {2, 0}, {0, 0}});
    CHECK(graphs_isomorphic(a, b));

    // genus labels matter
    CHECK(!graphs_isomorphic(graph({1}, {{0, 0}}), graph({0}, {{0, 0}})));
    // multiplicities matter
    CHECK(!graphs_isomorphic(graph({0, 0}, {{0, 1}, {0, 1}}), graph({0, 0}, {{0, 1}})));
}

TEST_CASE("boundary points at the cusps") {
    const Origami& s = catalog_get("S");
    auto vg = origami::veech::veech_group(s);
    auto bps = cusp_stable_curves(s, vg);
    REQUIRE(bps.size() == 2);
    CHECK(bps[0].cusp_rep == "");
    CHECK(graphs_isomorphic(bps[0].graph, graph({0}, {{0, 0}, {0, 0}})));
    CHECK(bps[1].cusp_rep == "s");
    CHECK(graphs_isomorphic(bps[1].graph, graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}})));
    CHECK(arithmetic_genus(bps[0].graph) == 2);
    CHECK(arithmetic_genus(bps[1].graph) == 2);
    CHECK(cusp_boundary_points(s).size() == 2);

    auto tor = cusp_boundary_points(catalog_get("torus"));
    REQUIRE(tor.size() == 1);
    CHECK(graphs_isomorphic(tor[0], graph({0}, {{0, 0}})));

    // the two L3 cusps give non-isomorphic stable curves of arithmetic genus 2
    const Origami& l = catalog_get("L3");
    auto lg = origami::veech::veech_group(l);
    auto lb = cusp_stable_curves(l, lg);
    REQUIRE(lb.size() == 2);
    CHECK(graphs_isomorphic(lb[0].graph, graph({0}, {{0, 0}, {0, 0}})));
    CHECK(graphs_isomorphic(lb[1].graph, graph({1}, {{0, 0}})));
    CHECK(arithmetic_genus(lb[1].graph) == 2);
    CHECK(cusp_boundary_points(l).size() == 2);
}

TEST_CASE("dot rendering") {
    std::string dot = dual_graph_dot(graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}), "cusp1");
    CHECK(dot == "graph cusp1 {\n  n0 [label=\"g=0\"];\n  n1 [label=\"g=0\"];\n"
                 "  n0 -- n1;\n  n0 -- n1;\n  n0 -- n1;\n}\n");
}
