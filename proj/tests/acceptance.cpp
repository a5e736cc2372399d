// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Everything here is exact; the whole run takes well under ten seconds.

#include "origami/degeneration.hpp"
#include "origami/domain.hpp"
#include "origami/elliptic.hpp"
#include "origami/moduli.hpp"
#include "origami/origami.hpp"
#include "origami/scalar_io.hpp"
#include "origami/veech.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <vector>

namespace {

int failures = 0;

void report(int n, const char* what, bool ok) {
    std::printf("%2d %-58s %s\n", n, what, ok ? "pass" : "FAIL");
    if (!ok) ++failures;
}

using origami::perm::Perm;
using origami::surf::Origami;
namespace surf = origami::surf;
namespace veech = origami::veech;
namespace degen = origami::degen;
namespace ec = origami::ec;
namespace moduli = origami::moduli;
namespace alg = origami::alg;

Perm rand_perm(std::mt19937& rng, int d) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

Origami rand_origami(std::mt19937& rng, int d) {
    for (;;) {
        Perm h = rand_perm(rng, d), v = rand_perm(rng, d);
        if (origami::perm::transitive_pair(h, v)) return surf::make_origami("r", h, v);
    }
}

bool genus_stratum_vertices() {
    const Origami& s = surf::catalog_get("S");
    return surf::genus(s) == 2 && surf::stratum(s) == std::vector<int>{1, 1} &&
           surf::vertices(s).size() == 4;
}

bool automorphisms() {
    const Origami& s = surf::catalog_get("S");
    auto tr = surf::translations(s);
    return tr.size() == 2 && tr[0].is_identity() &&
           tr[1] == Perm::from_cycles("(1 6)(2 4)(3 5)") && surf::automorphism_order(s) == 4;
}

bool veech_membership() {
    const Origami& s = surf::catalog_get("S");
    veech::VeechGroup g = veech::veech_group(s);
    bool ok = g.sl_index == 4 && g.contains_minus_one;
    for (const char* w : {"ss", "tsTT", "stS", "ttt", "ttsT"}) ok = ok && veech::is_member(w, s);
    for (const auto& w : g.generators) ok = ok && veech::is_member(w, s);
    return ok;
}

bool cusps() {
    veech::VeechGroup g = veech::veech_group(surf::catalog_get("S"));
    if (g.cusps.size() != 2) return false;
    std::vector<int> widths = {g.cusps[0].width, g.cusps[1].width};
    std::sort(widths.begin(), widths.end());
    return widths == std::vector<int>{1, 3} && widths[0] + widths[1] == 4;
}

bool quotient_genus_two_ways() {
    veech::VeechGroup g = veech::veech_group(surf::catalog_get("S"));
    if (g.quotient_genus != 0) return false; // elliptic point and cusp count formula
    veech::FundamentalDomain dom = veech::fundamental_domain(g);
    return dom.face_count == 4 && dom.edge_count == 6 && dom.vertex_count == 4 &&
           dom.genus == 0; // Euler count on the glued triangles
}

bool cylinder_decomposition() {
    const Origami& s = surf::catalog_get("S");
    auto h = degen::cylinders(s, degen::Direction::horizontal);
    auto v = degen::cylinders(s, degen::Direction::vertical);
    auto wh = [](const degen::Cylinder& c) { return std::pair(c.width, c.height); };
    return h.size() == 2 && wh(h[0]) == std::pair(3, 1) && wh(h[1]) == std::pair(3, 1) &&
           v.size() == 3 && wh(v[0]) == std::pair(1, 1) && wh(v[1]) == std::pair(2, 2) &&
           wh(v[2]) == std::pair(1, 1);
}

bool stable_curves() {
    const Origami& s = surf::catalog_get("S");
    auto bps = degen::cusp_stable_curves(s, veech::veech_group(s));
    if (bps.size() != 2) return false;
    degen::DualGraph loops{{0}, {{0, 0}, {0, 0}}};
    degen::DualGraph banana{{0, 0}, {{0, 1}, {0, 1}, {0, 1}}};
    return degen::graphs_isomorphic(bps[0].graph, loops) &&
           degen::graphs_isomorphic(bps[1].graph, banana) &&
           !degen::graphs_isomorphic(bps[0].graph, bps[1].graph) &&
           degen::arithmetic_genus(bps[0].graph) == 2 &&
           degen::arithmetic_genus(bps[1].graph) == 2;
}

bool torsion_family() {
    ec::FamilyRecord rec = ec::verify_v4_family_relation();
    bool ok = rec.passed && rec.x_vanishes && rec.y_matches && rec.three_torsion &&
              rec.opposite_pair;
    alg::FuncQI l = alg::FuncQI::x();
    ec::FamilyRecord bad = ec::verify_family_relation(l / (l + alg::FuncQI(2)));
    return ok && !bad.x_vanishes && !bad.passed;
}

bool polynomial_identities() {
    moduli::DerivationRecord rec = moduli::verify_curve_equation_derivation();
    return rec.expansion_ok && rec.factors_match && rec.residual.empty();
}

bool parameter_group() {
    const auto& g = moduli::gamma_group(); // relations checked on construction
    if (g.size() != 48) return false;

    // {1, d, e, de} is a normal subgroup of order 4
    std::vector<moduli::GammaElt> v4 = {moduli::gamma_element(""), moduli::gamma_element("d"),
                                        moduli::gamma_element("e"), moduli::gamma_element("de")};
    for (const auto& x : g)
        for (const auto& n : v4) {
            moduli::GammaElt c = moduli::compose(moduli::compose(x, n), moduli::gamma_inverse(x));
            bool inside = false;
            for (const auto& m : v4) inside = inside || moduli::same_map(c, m);
            if (!inside) return false;
        }

    auto stab = moduli::stabilizer_of_locus(moduli::locus_V(1, 1));
    bool has_c = false, has_dbd = false;
    for (const auto& s : stab) {
        has_c = has_c || moduli::same_map(s, moduli::gamma_generator('c'));
        has_dbd = has_dbd || moduli::same_map(s, moduli::gamma_element("dbd"));
    }
    if (stab.size() != 6 || moduli::subgroup_abelian(stab) || !has_c || !has_dbd) return false;

    // the orbit of V is the full eight component table, and each generator
    // moves each component exactly as tabulated
    auto orbit = moduli::orbit_of_locus(moduli::locus_V(1, 1));
    if (orbit.size() != 8) return false;
    auto comp = [](char f, int e1, int e2) {
        return f == 'V' ? moduli::locus_V(e1, e2) : moduli::locus_W(e1, e2);
    };
    for (char f : {'V', 'W'})
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                if (std::count(orbit.begin(), orbit.end(), comp(f, e1, e2)) != 1) return false;
                moduli::LocusEq x = comp(f, e1, e2);
                char o = f == 'V' ? 'W' : 'V';
                if (moduli::act_on_locus(moduli::gamma_generator('a'), x) != comp(o, e1, e2) ||
                    moduli::act_on_locus(moduli::gamma_generator('b'), x) != comp(f, -e2, -e1) ||
                    moduli::act_on_locus(moduli::gamma_generator('c'), x) != comp(f, e1, e1 * e2) ||
                    moduli::act_on_locus(moduli::gamma_generator('d'), x) != comp(f, -e1, e2) ||
                    moduli::act_on_locus(moduli::gamma_generator('e'), x) != comp(f, -e1, -e2))
                    return false;
            }
    return true;
}

bool special_points() {
    auto q = moduli::intersect_loci(moduli::locus_V(1, 1), moduli::locus_W(1, 1));
    auto r = moduli::intersect_loci(moduli::locus_V(1, 1), moduli::locus_W(-1, 1));
    auto r34 = moduli::intersect_loci(moduli::locus_V(1, 1), moduli::locus_W(-1, -1));
    auto r56 = moduli::intersect_loci(moduli::locus_V(1, 1), moduli::locus_W(1, -1));
    if (q.size() != 2 || r.size() != 2 || r34.size() != 2 || r56.size() != 2) return false;

    auto str = [](const moduli::ParamPoint& p) { return moduli::param_point_str(p); };
    if (str(q[0]) != "(-1/2+1/2*sqrt(-3), 1/2+1/2*sqrt(-3))" ||
        str(q[1]) != "(-1/2-1/2*sqrt(-3), 1/2-1/2*sqrt(-3))" ||
        str(r[0]) != "(-1/2+1/2*sqrt(5), 3/2-1/2*sqrt(5))" ||
        str(r[1]) != "(-1/2-1/2*sqrt(5), 3/2+1/2*sqrt(5))" ||
        str(r34[0]) != "(1/2+1/2*sqrt(5), -1/2+1/2*sqrt(5))" ||
        str(r34[1]) != "(1/2-1/2*sqrt(5), -1/2-1/2*sqrt(5))" ||
        str(r56[0]) != "(-3/2+1/2*sqrt(5), 1/2-1/2*sqrt(5))" ||
        str(r56[1]) != "(-3/2-1/2*sqrt(5), 1/2+1/2*sqrt(5))")
        return false;

    int e[][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!moduli::intersect_loci(moduli::locus_V(e[i][0], e[i][1]),
                                        moduli::locus_V(e[j][0], e[j][1]))
                     .empty())
                return false;

    if (moduli::orbit_of_point(q[0]).size() != 8 ||
        moduli::stabilizer_of_point(q[0]).size() != 6 ||
        moduli::orbit_of_point(r[0]).size() != 24 ||
        moduli::stabilizer_of_point(r[0]).size() != 2)
        return false;

    moduli::ParamPoint other{alg::parse_quad("-2+sqrt(3)"), alg::parse_quad("-2-sqrt(3)")};
    return !moduli::same_orbit(q[0], other);
}

bool property_suites() {
    std::mt19937 rng(2026);

    // quadratic field axioms
    auto rand_rat = [&]() {
        std::uniform_int_distribution<int> n(-12, 12), d(1, 9);
        return alg::Rational(n(rng), d(rng));
    };
    for (long long D : {-1LL, 5LL})
        for (int it = 0; it < 100; ++it) {
            alg::QuadElt x(rand_rat(), rand_rat(), D), y(rand_rat(), rand_rat(), D),
                z(rand_rat(), rand_rat(), D);
            if ((x + y) + z != x + (y + z) || x * (y + z) != x * y + x * z ||
                x * y != y * x)
                return false;
            if (!x.is_zero() && x * x.inv() != alg::QuadElt(1)) return false;
        }

    // parameter group action axioms and orbit-stabilizer products
    const auto& g = moduli::gamma_group();
    std::uniform_int_distribution<size_t> pick(0, g.size() - 1);
    moduli::LocusEq v = moduli::locus_V(1, 1);
    for (int it = 0; it < 100; ++it) {
        const auto& x = g[pick(rng)];
        const auto& y = g[pick(rng)];
        if (moduli::act_on_locus(moduli::compose(x, y), v) !=
            moduli::act_on_locus(x, moduli::act_on_locus(y, v)))
            return false;
        moduli::ParamPoint p{alg::QuadElt(rand_rat()), alg::QuadElt(rand_rat())};
        if (!moduli::in_parameter_space(p)) continue;
        if (moduli::act_on_point(moduli::compose(x, y), p) !=
            moduli::act_on_point(x, moduli::act_on_point(y, p)))
            return false;
    }
    for (const auto& comp : moduli::orbit_of_locus(v))
        if (moduli::orbit_of_locus(comp).size() * moduli::stabilizer_of_locus(comp).size() != 48)
            return false;

    // canonical relabeling invariance
    for (int it = 0; it < 100; ++it) {
        int d = 2 + it % 6;
        Origami o = rand_origami(rng, d);
        Perm pi = rand_perm(rng, d);
        auto conj = [&](const Perm& p) {
            return origami::perm::compose(origami::perm::compose(pi, p), pi.inverse());
        };
        Origami moved = surf::make_origami("m", conj(o.h), conj(o.v));
        if (surf::canonical_code(o) != surf::canonical_code(moved)) return false;
    }

    // pinching keeps the Euler characteristic for every catalog surface
    for (const auto& o : surf::catalog())
        for (auto dir : {degen::Direction::horizontal, degen::Direction::vertical}) {
            int chi = 0;
            degen::DualGraph dg = degen::stable_curve(o, dir, &chi);
            if (chi != 2 - 2 * surf::genus(o)) return false;
            if (degen::arithmetic_genus(dg) != surf::genus(o)) return false;
        }
    return true;
}

bool torus_baseline() {
    const Origami& t = surf::catalog_get("torus");
    veech::VeechGroup g = veech::veech_group(t);
    auto bp = degen::cusp_boundary_points(t);
    degen::DualGraph loop{{0}, {{0, 0}}};
    return surf::genus(t) == 1 && g.sl_index == 1 && g.cusps.size() == 1 && bp.size() == 1 &&
           degen::graphs_isomorphic(bp[0], loop);
}

} // namespace

int main() {
    report(1, "six-square surface: genus 2, stratum (1,1), 4 vertices", genus_stratum_vertices());
    report(2, "translation group and automorphism count", automorphisms());
    report(3, "stabilizer index 4, -I inside, word membership", veech_membership());
    report(4, "two cusps of widths {3,1}", cusps());
    report(5, "quotient genus 0 by formula and by Euler counts", quotient_genus_two_ways());
    report(6, "cylinder decompositions in both directions", cylinder_decomposition());
    report(7, "distinct stable curves at the two cusps", stable_curves());
    report(8, "three-torsion family identities and negative control", torsion_family());
    report(9, "quartic expansion and factorization identities", polynomial_identities());
    report(10, "order 48 parameter group, stabilizer and orbit of V", parameter_group());
    report(11, "intersection points, orbit sizes, distinct orbits", special_points());
    report(12, "randomized property suites", property_suites());
    report(13, "one-square torus baseline", torus_baseline());

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 13 criteria pass\n");
    return 0;
}
