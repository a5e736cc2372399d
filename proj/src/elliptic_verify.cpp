#include "origami/elliptic.hpp"

namespace origami::ec {

using alg::FuncQI;
using alg::QI;
using alg::Rational;

FamilyRecord verify_family_relation(const FuncQI& mu) {
    FamilyRecord rec;
    rec.mu = mu;
    FuncQI lambda = FuncQI::x();
    FuncQI i(QI(Rational(0), Rational(1), -1));

    Curve<FuncQI> c = curve_from_lambda_mu(lambda, mu);
    Point<FuncQI> p1 = Point<FuncQI>::affine(FuncQI(0), i * lambda * mu);
    Point<FuncQI> p2 = Point<FuncQI>::affine(FuncQI(0), -(i * lambda * mu));

    Point<FuncQI> dbl = ec_double(p1, c);
    rec.x2 = dbl.inf ? FuncQI(0) : dbl.x;
    rec.y2 = dbl.inf ? FuncQI(0) : dbl.y;
    rec.x_vanishes = !dbl.inf && rec.x2 == FuncQI(0);
    rec.y2_residual = rec.y2 + i * lambda * mu;
    rec.y_matches = !dbl.inf && rec.y2_residual == FuncQI(0);
    rec.three_torsion = multiply(3, p1, c).inf;
    rec.opposite_pair = add(p1, p2, c).inf;
    rec.passed = rec.x_vanishes && rec.y_matches && rec.three_torsion && rec.opposite_pair;
    return rec;
}

FamilyRecord verify_v4_family_relation() {
    FuncQI lambda = FuncQI::x();
    return verify_family_relation(lambda / (lambda + FuncQI(1)));
}

} // namespace origami::ec
