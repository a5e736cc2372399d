#pragma once

#include "origami/quad.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace origami::alg {

// Dense univariate polynomial over a field K (coefficient of x^i at index i).
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(long long c) { c_.assign(1, K(c)); trim(); }
    Poly(const K& c) { c_.assign(1, c); trim(); }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const K& coeff(int i) const {
        static const K kzero = K(0);
        return (i >= 0 && i < (int)c_.size()) ? c_[i] : kzero;
    }
    const K& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero");
        return c_.back();
    }

    friend Poly operator-(const Poly& p) {
        std::vector<K> r;
        r.reserve(p.c_.size());
        for (auto& c : p.c_) r.push_back(K(0) - c);
        return Poly(std::move(r));
    }
    friend Poly operator+(const Poly& p, const Poly& q) {
        std::vector<K> r(std::max(p.c_.size(), q.c_.size()), K(0));
        for (size_t i = 0; i < p.c_.size(); ++i) r[i] = r[i] + p.c_[i];
        for (size_t i = 0; i < q.c_.size(); ++i) r[i] = r[i] + q.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q) {
        if (p.is_zero() || q.is_zero()) return Poly();
        std::vector<K> r(p.c_.size() + q.c_.size() - 1, K(0));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    // division with remainder; divisor must be nonzero
    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        quo = Poly();
        rem = a;
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int k = rem.degree() - b.degree();
            K f = rem.lead() / b.lead();
            std::vector<K> mono(k + 1, K(0));
            mono[k] = f;
            Poly m(std::move(mono));
            quo = quo + m;
            rem = rem - m * b;
        }
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K l = lead();
        std::vector<K> r;
        r.reserve(c_.size());
        for (auto& c : c_) r.push_back(c / l);
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// Reduced quotient of univariate polynomials: gcd(num, den) = 1 and den monic.
template <class K>
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long long c) : num_(c), den_(1) {}
    RatFunc(const K& c) : num_(c), den_(1) {}
    RatFunc(const Poly<K>& p) : num_(p), den_(1) {}
    RatFunc(const Poly<K>& n, const Poly<K>& d) : num_(n), den_(d) { normalize(); }
    static RatFunc x() { return RatFunc(Poly<K>::x()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    friend RatFunc operator-(const RatFunc& f) { return RatFunc(-f.num_, f.den_); }
    friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
        if (g.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
    }
    friend bool operator==(const RatFunc& f, const RatFunc& g) {
        return f.num_ == g.num_ && f.den_ == g.den_; // canonical form
    }
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

private:
    Poly<K> num_, den_;
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>(1);
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K l = den_.lead();
        if (!(l == K(1))) {
            std::vector<K> ncoef, dcoef;
            for (int i = 0; i <= num_.degree(); ++i) ncoef.push_back(num_.coeff(i) / l);
            for (int i = 0; i <= den_.degree(); ++i) dcoef.push_back(den_.coeff(i) / l);
            num_ = Poly<K>(std::move(ncoef));
            den_ = Poly<K>(std::move(dcoef));
        }
    }
};

// The coefficient field used for symbolic verification: Q(i)(lambda).
using QI = QuadElt;          // values with disc -1 (or rational)
using PolyQI = Poly<QI>;
using FuncQI = RatFunc<QI>;

std::string poly_str(const PolyQI& p, const std::string& var);
std::string ratfunc_str(const FuncQI& f, const std::string& var);

} // namespace origami::alg
