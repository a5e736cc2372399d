#pragma once

#include "origami/poly.hpp"
#include "origami/quad.hpp"

#include <string>
#include <vector>

namespace origami::moduli {

using alg::PolyMV;
using alg::QuadElt;
using alg::Rational;

// (lambda, mu) |-> (s1 * lambda^m[0][0] * mu^m[0][1], s2 * lambda^m[1][0] * mu^m[1][1]).
// The exponent matrix has determinant +-1, so the map is invertible on (C*)^2.
struct GammaElt {
    int s1 = 1, s2 = 1;
    int m[2][2] = {{1, 0}, {0, 1}};
    std::string word; // label over the generators a..e; empty for the identity

    bool is_identity() const;
};

// equality of the underlying maps; word labels are ignored
bool same_map(const GammaElt& g, const GammaElt& f);

GammaElt gamma_generator(char c);                       // one of a, b, c, d, e
GammaElt compose(const GammaElt& g, const GammaElt& f); // g after f
GammaElt gamma_inverse(const GammaElt& g);

// word evaluation: the rightmost letter acts first, so "dbd" means d after b after d
GammaElt gamma_element(const std::string& word);

// all 48 elements in breadth-first word order; the defining relations, the
// normality of {id, d, e, de}, and the quotient order 12 are verified on first
// use and any failure throws std::logic_error
const std::vector<GammaElt>& gamma_group();

bool subgroup_abelian(const std::vector<GammaElt>& elts);

std::string gamma_str(const GammaElt& g); // e.g. "(1/l, m/l)"

struct ParamPoint {
    QuadElt lambda, mu;
    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
    friend bool operator<(const ParamPoint& p, const ParamPoint& q) {
        if (p.lambda != q.lambda) return p.lambda < q.lambda;
        return p.mu < q.mu;
    }
};

// lambda, mu outside {0, 1, -1} and off the diagonals lambda = +-mu
bool in_parameter_space(const ParamPoint& p);

// component equation, canonical under normalize_locus; tagged when it is one of
// the eight family members
struct LocusEq {
    PolyMV<Rational> poly;
    char family = 0; // 'V', 'W', or 0 when untagged
    int e1 = 0, e2 = 0;

    friend bool operator==(const LocusEq& x, const LocusEq& y) { return x.poly == y.poly; }
    friend bool operator!=(const LocusEq& x, const LocusEq& y) { return !(x == y); }
    friend bool operator<(const LocusEq& x, const LocusEq& y) { return x.poly < y.poly; }
};

LocusEq locus_V(int e1, int e2); // canonical form of e2*mu*(e1*lambda + 1) - e1*lambda
LocusEq locus_W(int e1, int e2); // canonical form of 1 + e1*lambda - e2*mu
LocusEq make_locus(const PolyMV<Rational>& p);

ParamPoint act_on_point(const GammaElt& g, const ParamPoint& p);
// substitutes the inverse map and renormalizes, so points transport covariantly:
// p on eq implies g.p on g.eq
LocusEq act_on_locus(const GammaElt& g, const LocusEq& eq);

std::vector<LocusEq> orbit_of_locus(const LocusEq& eq);
std::vector<GammaElt> stabilizer_of_locus(const LocusEq& eq);

// exact intersection of two distinct family components: eliminate mu, solve the
// degree <= 2 eliminant in lambda, back-substitute, keep the points inside P
std::vector<ParamPoint> intersect_loci(const LocusEq& a, const LocusEq& b);

std::vector<ParamPoint> orbit_of_point(const ParamPoint& p);
std::vector<GammaElt> stabilizer_of_point(const ParamPoint& p);
bool same_orbit(const ParamPoint& p, const ParamPoint& q);

// points of V fixed by a nontrivial element of its stabilizer, located along
// the parametrization lambda |-> (lambda, lambda/(lambda+1)); sorted ascending
std::vector<ParamPoint> fixed_points_on_V();

struct DerivationRecord {
    bool expansion_ok = false;  // quartic expansion identity in Q[lambda, mu]
    bool factors_match = false; // difference-of-squares factors = the four V forms
    bool transport_ok = false;  // d, e, ed move every V form as tabulated, back to V
    bool passed = false;
    std::string residual; // nonzero expansion residual, printable; empty when ok
};
DerivationRecord verify_curve_equation_derivation();

std::string param_point_str(const ParamPoint& p);
std::string locus_str(const LocusEq& eq);  // polynomial with variables l, m
std::string locus_name(const LocusEq& eq); // "V(1,-1)" etc, "" when untagged

} // namespace origami::moduli
