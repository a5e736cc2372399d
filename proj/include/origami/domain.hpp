#pragma once

#include "origami/quad.hpp"
#include "origami/veech.hpp"

#include <array>
#include <string>
#include <vector>

namespace origami::veech {

// Point of the closed upper half plane with coordinates in Q(sqrt(-3)),
// plus the cusp at infinity. Finite values are x + y*sqrt(-3), y >= 0.
struct HPoint {
    bool infinite = false;
    alg::QuadElt z;
    friend bool operator==(const HPoint& p, const HPoint& q) {
        return p.infinite == q.infinite && (p.infinite || p.z == q.z);
    }
};

HPoint mobius(const Mat2Z& m, const HPoint& z);
std::string hpoint_str(const HPoint& p);

// One face per projective coset class: the translate rep(F) of the standard
// pseudo-triangle F with corners rho = -1/2 + (1/2)sqrt(-3), rho + 1, infinity.
struct DomainFace {
    Word rep;
    std::array<HPoint, 3> corner; // images of rho, rho+1, infinity
    int right_face = 0;           // right side glues to this face's left side
    int left_face = 0;
    int arc_face = 0;             // bottom-arc partner
    bool arc_folded = false;      // s-fixed class: arc glued to itself (midpoint vertex)
    bool sides_self_glued = false; // t-fixed class: left and right sides identified
};

struct FundamentalDomain {
    std::vector<DomainFace> faces;
    int vertex_count = 0; // corner classes of the glued complex, plus fold midpoints
    int edge_count = 0;
    int face_count = 0;
    int cusp_vertex_count = 0; // vertex classes containing an infinity corner
    int genus = 0;             // of the closed quotient surface
};

FundamentalDomain fundamental_domain(const VeechGroup& r);

// Standalone SVG document; exact coordinates are converted to floating point
// for display only.
std::string domain_svg(const FundamentalDomain& dom);

} // namespace origami::veech
