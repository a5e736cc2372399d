#pragma once

#include "origami/origami.hpp"
#include "origami/veech.hpp"

#include <string>
#include <utility>
#include <vector>

namespace origami::degen {

using surf::Origami;

enum class Direction { horizontal, vertical };

// A cylinder in the chosen direction: `rows` lists the square cycles bottom
// to top (width = row length, height = row count). Squares are 0-based here
// like everywhere in memory; only formatted output is 1-based.
struct Cylinder {
    int width = 0, height = 0;
    std::vector<std::vector<int>> rows;
};

std::vector<Cylinder> cylinders(const Origami& o, Direction dir);

// Stable curve dual graph: one vertex per irreducible component with its
// genus, one edge per pinched cylinder (node), loops allowed.
struct DualGraph {
    std::vector<int> genus;
    std::vector<std::pair<int, int>> edges;
};

// Pinch every core curve of the cylinder decomposition. The optional out
// parameter receives the total Euler characteristic of the cut-open pieces,
// which must equal 2 - 2 genus(o).
DualGraph stable_curve(const Origami& o, Direction dir, int* chi_total = nullptr);

int arithmetic_genus(const DualGraph& g); // sum of genera + first Betti number

// Labeled-multigraph isomorphism by backtracking; both graphs need <= 12 vertices.
bool graphs_isomorphic(const DualGraph& g1, const DualGraph& g2);

struct BoundaryPoint {
    veech::Word cusp_rep;
    DualGraph graph;
};

// One stable curve per cusp: apply the cusp's coset word, pinch horizontally.
std::vector<BoundaryPoint> cusp_stable_curves(const Origami& o, const veech::VeechGroup& vg);

// The distinct boundary points among the cusp stable curves (dedup by isomorphism).
std::vector<DualGraph> cusp_boundary_points(const Origami& o);

std::string dual_graph_dot(const DualGraph& g, const std::string& name);

} // namespace origami::degen
