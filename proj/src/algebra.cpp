#include "origami/poly.hpp"
#include "origami/quad.hpp"
#include "origami/ratfunc.hpp"
#include "origami/scalar_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace origami::alg {

bool squarefree(long long D) {
    long long m = D < 0 ? -D : D;
    if (m == 0) return false;
    for (long long f = 2; f * f <= m; ++f)
        while (m % f == 0) {
            m /= f;
            if (m % f == 0) return false;
            break;
        }
    return true;
}

std::pair<Int, Int> squarefree_split(const Int& m) {
    if (m == 0) return {Int(0), Int(0)};
    Int s = 1, f = m < 0 ? Int(-1) : Int(1);
    Int rest = abs(m);
    for (Int p = 2; p * p <= rest; ++p) {
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        for (int i = 0; i + 1 < k; i += 2) s *= p;
        if (k % 2 == 1) f *= p;
    }
    f *= rest;
    return {s, f};
}

QuadElt::QuadElt(const Rational& a, const Rational& b, long long D) : a_(a), b_(b), D_(D) {
    if (b_ == 0) {
        D_ = 0;
        return;
    }
    if (D_ == 0 || D_ == 1 || !squarefree(D_))
        throw std::invalid_argument("discriminant must be squarefree and not 0 or 1");
}

long long QuadElt::merge_disc(const QuadElt& x, const QuadElt& y) {
    if (x.D_ == 0) return y.D_;
    if (y.D_ == 0 || x.D_ == y.D_) return x.D_;
    throw std::invalid_argument("incompatible quadratic field discriminants");
}

QuadElt QuadElt::conj() const { return b_ == 0 ? *this : QuadElt(a_, -b_, D_); }

Rational QuadElt::norm() const { return a_ * a_ - Rational(D_) * b_ * b_; }

QuadElt QuadElt::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational n = norm();
    QuadElt c = conj();
    if (c.b_ == 0) return QuadElt(c.a_ / n);
    return QuadElt(c.a_ / n, c.b_ / n, D_);
}

QuadElt operator-(const QuadElt& x) {
    if (x.b_ == 0) return QuadElt(-x.a_);
    return QuadElt(-x.a_, -x.b_, x.D_);
}

QuadElt operator+(const QuadElt& x, const QuadElt& y) {
    long long D = QuadElt::merge_disc(x, y);
    Rational a = x.a_ + y.a_, b = x.b_ + y.b_;
    if (b == 0) return QuadElt(a);
    return QuadElt(a, b, D);
}

QuadElt operator-(const QuadElt& x, const QuadElt& y) { return x + (-y); }

QuadElt operator*(const QuadElt& x, const QuadElt& y) {
    long long D = QuadElt::merge_disc(x, y);
    Rational a = x.a_ * y.a_ + Rational(D) * x.b_ * y.b_;
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    if (b == 0) return QuadElt(a);
    return QuadElt(a, b, D);
}

QuadElt operator/(const QuadElt& x, const QuadElt& y) { return x * y.inv(); }

QuadElt quad_pow(const QuadElt& x, long long k) {
    QuadElt base = k < 0 ? x.inv() : x;
    unsigned long long n = k < 0 ? (unsigned long long)(-k) : (unsigned long long)k;
    QuadElt acc(1);
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

PolyMV<Rational> normalize_locus(const PolyMV<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    int n = p.arity();
    // monomials are units on the torus, so the canonical representative has
    // minimal exponent exactly zero in every variable
    std::vector<int> shift(n, 0);
    for (int i = 0; i < n; ++i) shift[i] = -p.min_exponent_in(i);
    PolyMV<Rational> q(n);
    Int g = 0, l = 1;
    for (auto& [e, c] : p.terms()) {
        std::vector<int> e2 = e;
        for (int i = 0; i < n; ++i) e2[i] += shift[i];
        q.add_term(e2, c);
        g = gcd(g, num(c));
        l = lcm(l, den(c));
    }
    Rational content(abs(g), l);
    // sign from the lexicographically greatest monomial
    const auto& top = *q.terms().rbegin();
    Rational scale = (top.second < 0 ? -Rational(1) : Rational(1)) / content;
    PolyMV<Rational> r(n);
    for (auto& [e, c] : q.terms()) r.add_term(e, c * scale);
    return r;
}

std::vector<QuadElt> solve_quadratic(const PolyMV<Rational>& p) {
    if (p.arity() != 1) throw std::invalid_argument("solve_quadratic needs a univariate polynomial");
    int deg = p.degree_in(0);
    if (p.min_exponent_in(0) < 0) throw std::invalid_argument("Laurent input to solve_quadratic");
    auto coeff = [&](int k) -> Rational {
        auto c = p.coeff_of(0, k);
        if (c.is_zero()) return Rational(0);
        return c.terms().begin()->second;
    };
    if (deg == 1) return {QuadElt(-coeff(0) / coeff(1))};
    if (deg != 2) throw std::invalid_argument("solve_quadratic needs degree 1 or 2");
    Rational a = coeff(2), b = coeff(1), c = coeff(0);
    Rational disc = b * b - 4 * a * c;
    if (disc == 0) return {QuadElt(-b / (2 * a))};
    // disc = (s/t)^2 * D with D squarefree: disc = N/M, N*M = s0^2 * D, sqrt = s0/M * sqrt(D)
    Int N = num(disc), M = den(disc);
    auto [s0, D] = squarefree_split(N * M);
    Rational root_coeff = Rational(s0, M);
    Rational ra = -b / (2 * a), rb = root_coeff / (2 * a);
    if (D == 1) return {QuadElt(ra + rb), QuadElt(ra - rb)};
    long long Dl = (long long)D;
    return {QuadElt(ra, rb, Dl), QuadElt(ra, -rb, Dl)};
}

namespace {

template <class K>
std::string poly_str_impl(const PolyMV<K>& p, const std::vector<std::string>& vars,
                          std::string (*coeff_str)(const K&), bool (*is_neg)(const K&),
                          K (*negate)(const K&), bool (*is_one)(const K&)) {
    if (p.is_zero()) return "0";
    std::string out;
    // descending monomial order
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = is_neg(c);
        K mag = neg ? negate(c) : c;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string term;
        if (mono.empty()) term = coeff_str(mag);
        else if (is_one(mag)) term = mono;
        else term = coeff_str(mag) + "*" + mono;
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

} // namespace

std::string poly_str(const PolyMV<Rational>& p, const std::vector<std::string>& vars) {
    return poly_str_impl<Rational>(
        p, vars, +[](const Rational& c) { return rational_str(c); },
        +[](const Rational& c) { return c < 0; }, +[](const Rational& c) { return Rational(-c); },
        +[](const Rational& c) { return c == 1; });
}

std::string poly_str(const PolyMV<QuadElt>& p, const std::vector<std::string>& vars) {
    return poly_str_impl<QuadElt>(
        p, vars,
        +[](const QuadElt& c) {
            std::string s = quad_str(c);
            return c.is_rational() ? s : "(" + s + ")";
        },
        +[](const QuadElt& c) { return c.is_rational() && c.a() < 0; },
        +[](const QuadElt& c) { return -c; }, +[](const QuadElt& c) { return c == QuadElt(1); });
}

std::string poly_str(const PolyQI& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        QuadElt c = p.coeff(i);
        if (c.is_zero()) continue;
        bool neg = c.is_rational() && c.a() < 0;
        QuadElt mag = neg ? -c : c;
        std::string cs = quad_str(mag);
        if (!mag.is_rational()) cs = "(" + cs + ")";
        std::string term;
        if (i == 0) term = cs;
        else {
            std::string xs = i == 1 ? var : var + "^" + std::to_string(i);
            term = (mag == QuadElt(1)) ? xs : cs + "*" + xs;
        }
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::string ratfunc_str(const FuncQI& f, const std::string& var) {
    std::string n = poly_str(f.num(), var);
    if (f.den() == PolyQI(1)) return n;
    std::string d = poly_str(f.den(), var);
    return "(" + n + ") / (" + d + ")";
}

} // namespace origami::alg
