#pragma once

#include "origami/rational.hpp"

#include <stdexcept>
#include <tuple>

namespace origami::alg {

// Element a + b*sqrt(D) of a real or imaginary quadratic field.
// D must be squarefree and different from 0 and 1 whenever b != 0; rational
// elements (b == 0) normalize D to 0 so they compare equal across fields.
// Arithmetic combines elements only when the discriminants agree or one
// operand is rational.
class QuadElt {
public:
    QuadElt() : a_(0), b_(0), D_(0) {}
    QuadElt(const Rational& r) : a_(r), b_(0), D_(0) {}
    QuadElt(long long n) : a_(n), b_(0), D_(0) {}
    QuadElt(const Rational& a, const Rational& b, long long D);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long long disc() const { return D_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElt conj() const;
    Rational norm() const; // a^2 - D b^2, zero only for the zero element
    QuadElt inv() const;   // throws std::domain_error on zero

    friend QuadElt operator-(const QuadElt& x);
    friend QuadElt operator+(const QuadElt& x, const QuadElt& y);
    friend QuadElt operator-(const QuadElt& x, const QuadElt& y);
    friend QuadElt operator*(const QuadElt& x, const QuadElt& y);
    friend QuadElt operator/(const QuadElt& x, const QuadElt& y);

    friend bool operator==(const QuadElt& x, const QuadElt& y) {
        return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadElt& x, const QuadElt& y) { return !(x == y); }
    // arbitrary total order, used for deterministic dedup only
    friend bool operator<(const QuadElt& x, const QuadElt& y) {
        return std::tie(x.D_, x.a_, x.b_) < std::tie(y.D_, y.a_, y.b_);
    }

private:
    Rational a_, b_;
    long long D_;
    static long long merge_disc(const QuadElt& x, const QuadElt& y);
};

// n^k for possibly negative k (k < 0 uses inv()).
QuadElt quad_pow(const QuadElt& x, long long k);

// true iff |D| is squarefree (1 counts as squarefree)
bool squarefree(long long D);

// m = s^2 * f with f squarefree; returns (s, f); m may be negative, sign goes to f.
std::pair<Int, Int> squarefree_split(const Int& m);

} // namespace origami::alg
