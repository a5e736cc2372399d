#pragma once

#include "origami/quad.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace origami::alg {

// Sparse multivariate polynomial over K with fixed arity. Exponents are ints
// and may go negative in Laurent intermediates; normalize_locus clears them.
// The exponent order (lexicographic on the vector, first variable strongest)
// is the monomial order used everywhere.
template <class K>
class PolyMV {
public:
    using Expo = std::vector<int>;

    explicit PolyMV(int arity = 1) : arity_(arity) {}

    static PolyMV zero(int arity) { return PolyMV(arity); }
    static PolyMV constant(int arity, const K& c) {
        PolyMV p(arity);
        p.add_term(Expo(arity, 0), c);
        return p;
    }
    // the monomial x_i
    static PolyMV var(int arity, int i) {
        PolyMV p(arity);
        Expo e(arity, 0);
        e[i] = 1;
        p.add_term(e, K(1));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, K>& terms() const { return terms_; }

    void add_term(const Expo& e, const K& c) {
        if ((int)e.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(c == K(0))) terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    friend PolyMV operator-(const PolyMV& p) {
        PolyMV r(p.arity_);
        for (auto& [e, c] : p.terms_) r.terms_.emplace(e, K(0) - c);
        return r;
    }
    friend PolyMV operator+(const PolyMV& p, const PolyMV& q) {
        p.check_arity(q);
        PolyMV r = p;
        for (auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }
    friend PolyMV operator-(const PolyMV& p, const PolyMV& q) { return p + (-q); }
    friend PolyMV operator*(const PolyMV& p, const PolyMV& q) {
        p.check_arity(q);
        PolyMV r(p.arity_);
        for (auto& [e1, c1] : p.terms_)
            for (auto& [e2, c2] : q.terms_) {
                Expo e(p.arity_);
                for (int i = 0; i < p.arity_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    friend PolyMV operator*(const K& c, const PolyMV& p) {
        return PolyMV::constant(p.arity_, c) * p;
    }
    friend bool operator==(const PolyMV& p, const PolyMV& q) {
        return p.arity_ == q.arity_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const PolyMV& p, const PolyMV& q) { return !(p == q); }
    // deterministic order for dedup
    friend bool operator<(const PolyMV& p, const PolyMV& q) { return p.terms_ < q.terms_; }

    // exact substitution; T must support T(K), +, *, and inv() for negative exponents
    template <class T>
    T eval(const std::vector<T>& point) const {
        if ((int)point.size() != arity_) throw std::invalid_argument("eval arity mismatch");
        T acc(0);
        for (auto& [e, c] : terms_) {
            T t(c);
            for (int i = 0; i < arity_; ++i) {
                int k = e[i];
                T base = point[i];
                if (k < 0) {
                    if constexpr (requires(T z) { z.inv(); }) {
                        base = base.inv();
                        k = -k;
                    } else {
                        throw std::domain_error("negative exponent needs an invertible scalar type");
                    }
                }
                for (int j = 0; j < k; ++j) t = t * base;
            }
            acc = acc + t;
        }
        return acc;
    }

    int degree_in(int var) const {
        int d = 0;
        bool first = true;
        for (auto& [e, c] : terms_) {
            (void)c;
            if (first || e[var] > d) d = e[var];
            first = false;
        }
        return terms_.empty() ? -1 : d;
    }
    int min_exponent_in(int var) const {
        bool first = true;
        int d = 0;
        for (auto& [e, c] : terms_) {
            (void)c;
            if (first || e[var] < d) d = e[var];
            first = false;
        }
        return d;
    }
    // coefficient of var^k, as a polynomial of the same arity with that slot zeroed
    PolyMV coeff_of(int var, int k) const {
        PolyMV r(arity_);
        for (auto& [e, c] : terms_)
            if (e[var] == k) {
                Expo e2 = e;
                e2[var] = 0;
                r.add_term(e2, c);
            }
        return r;
    }

private:
    int arity_;
    std::map<Expo, K> terms_;
    void check_arity(const PolyMV& q) const {
        if (arity_ != q.arity_) throw std::invalid_argument("polynomial arity mismatch");
    }
};

// Canonical locus representative on the torus (monomials are units there):
// shifts so the minimal exponent in every variable is exactly 0, divides by
// rational content, and fixes the sign so the lexicographically greatest
// monomial has positive coefficient.
// Throws std::invalid_argument on the zero polynomial.
PolyMV<Rational> normalize_locus(const PolyMV<Rational>& p);

// Exact roots of a univariate rational polynomial of degree 1 or 2.
// Degree-2 roots are returned over Q(sqrt(D)) with D the squarefree part of
// the discriminant, the +sqrt(D) root first; a double root is returned once.
// Throws std::invalid_argument for degree 0 or > 2.
std::vector<QuadElt> solve_quadratic(const PolyMV<Rational>& p);

// Printing with variable names; terms in descending monomial order.
std::string poly_str(const PolyMV<Rational>& p, const std::vector<std::string>& vars);
std::string poly_str(const PolyMV<QuadElt>& p, const std::vector<std::string>& vars);

} // namespace origami::alg
