#pragma once

#include "origami/ratfunc.hpp"

#include <optional>

namespace origami::ec {

// Long Weierstrass form y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
// over any exact field K of the algebra layer.
template <class K>
struct Curve {
    K a1, a3, a2, a4, a6;
};

template <class K>
struct Point {
    bool inf = true;
    K x{}, y{};
    static Point infinity() { return {}; }
    static Point affine(K px, K py) { return {false, std::move(px), std::move(py)}; }
    friend bool operator==(const Point& p, const Point& q) {
        if (p.inf || q.inf) return p.inf == q.inf;
        return p.x == q.x && p.y == q.y;
    }
};

// y^2 = (x - 1)(x - lambda^2)(x - mu^2) expanded into a-invariants
template <class K>
Curve<K> curve_from_lambda_mu(const K& l, const K& m) {
    K one(1);
    K l2 = l * l, m2 = m * m;
    return {K(0), K(0), -(one + l2 + m2), l2 + m2 + l2 * m2, -(l2 * m2)};
}

// two branch points collide: lambda^2, mu^2 or 1 coincide
template <class K>
bool curve_degenerate(const K& l, const K& m) {
    K one(1);
    K l2 = l * l, m2 = m * m;
    return l2 == one || m2 == one || l2 == m2;
}

template <class K>
bool on_curve(const Point<K>& p, const Curve<K>& c) {
    if (p.inf) return true;
    K lhs = p.y * p.y + c.a1 * p.x * p.y + c.a3 * p.y;
    K rhs = p.x * p.x * p.x + c.a2 * p.x * p.x + c.a4 * p.x + c.a6;
    return lhs == rhs;
}

template <class K>
Point<K> neg(const Point<K>& p, const Curve<K>& c) {
    if (p.inf) return p;
    return Point<K>::affine(p.x, -p.y - c.a1 * p.x - c.a3);
}

template <class K>
Point<K> ec_double(const Point<K>& p, const Curve<K>& c) {
    if (p.inf) return p;
    K den = K(2) * p.y + c.a1 * p.x + c.a3;
    if (den == K(0)) return Point<K>::infinity(); // 2-torsion, vertical tangent
    K alpha = (K(3) * p.x * p.x + K(2) * c.a2 * p.x + c.a4 - c.a1 * p.y) / den;
    K beta = (-(p.x * p.x * p.x) + c.a4 * p.x + K(2) * c.a6 - c.a3 * p.y) / den;
    K x3 = alpha * alpha + c.a1 * alpha - c.a2 - K(2) * p.x;
    K y3 = -(alpha + c.a1) * x3 - beta - c.a3;
    return Point<K>::affine(std::move(x3), std::move(y3));
}

template <class K>
Point<K> add(const Point<K>& p, const Point<K>& q, const Curve<K>& c) {
    if (p.inf) return q;
    if (q.inf) return p;
    if (p == neg(q, c)) return Point<K>::infinity();
    if (p == q) return ec_double(p, c);
    if (p.x == q.x) return Point<K>::infinity(); // distinct points on a vertical line
    K s = (q.y - p.y) / (q.x - p.x);
    K x3 = s * s + c.a1 * s - c.a2 - p.x - q.x;
    K y3 = -(s + c.a1) * x3 - (p.y - s * p.x) - c.a3;
    return Point<K>::affine(std::move(x3), std::move(y3));
}

template <class K>
Point<K> multiply(long long n, const Point<K>& p, const Curve<K>& c) {
    if (n < 0) return multiply(-n, neg(p, c), c);
    Point<K> acc = Point<K>::infinity(), base = p;
    while (n > 0) {
        if (n & 1) acc = add(acc, base, c);
        base = ec_double(base, c);
        n >>= 1;
    }
    return acc;
}

// least 1 <= n <= bound with [n]P = infinity
template <class K>
std::optional<int> torsion_order(const Point<K>& p, const Curve<K>& c, int bound) {
    if (bound < 1) throw std::invalid_argument("torsion bound must be at least 1");
    Point<K> q = p;
    for (int n = 1; n <= bound; ++n) {
        if (q.inf) return n;
        q = add(q, p, c);
    }
    return std::nullopt;
}

// Symbolic verification over Q(i)(lambda) that the points (0, +-i lambda mu)
// are 3-torsion with [2]P1 = P2 for the given family mu = mu(lambda).
struct FamilyRecord {
    alg::FuncQI mu;
    alg::FuncQI x2, y2;         // coordinates of [2]P1
    alg::FuncQI y2_residual;    // y([2]P1) + i lambda mu, zero on success
    bool x_vanishes = false;    // x([2]P1) = 0
    bool y_matches = false;     // y([2]P1) = -i lambda mu
    bool three_torsion = false; // [3]P1 = infinity
    bool opposite_pair = false; // P1 + P2 = infinity
    bool passed = false;
};

FamilyRecord verify_family_relation(const alg::FuncQI& mu);
FamilyRecord verify_v4_family_relation(); // mu = lambda/(lambda + 1)

} // namespace origami::ec
