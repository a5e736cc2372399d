#include "origami/scalar_io.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace origami::alg {

namespace {

std::string strip(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) r.push_back(c);
    return r;
}

// parses a rational starting at pos; advances pos
Rational read_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == digits) throw std::invalid_argument("expected number in '" + s + "' at " + std::to_string(start));
    Int n(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == dstart) throw std::invalid_argument("expected denominator in '" + s + "'");
        Int d(s.substr(dstart, pos - dstart));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Rational(n, d);
    }
    return Rational(n);
}

// term := [rational '*'] 'sqrt(' int ')' | rational ; returns (value-as-pair)
struct Term {
    Rational coeff;
    long long D = 0; // 0: plain rational term
};

Term read_term(const std::string& s, size_t& pos) {
    Term t;
    t.coeff = 1;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    bool have_coeff = false;
    if (pos < s.size() && (std::isdigit((unsigned char)s[pos]))) {
        t.coeff = read_rational(s, pos);
        have_coeff = true;
        if (pos < s.size() && s[pos] == '*') ++pos;
        else if (pos < s.size() && s.compare(pos, 5, "sqrt(") == 0)
            throw std::invalid_argument("missing '*' before sqrt in '" + s + "'");
    }
    if (s.compare(pos, 5, "sqrt(") == 0) {
        pos += 5;
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start || pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("malformed sqrt() in '" + s + "'");
        t.D = std::stoll(s.substr(start, pos - start));
        ++pos; // ')'
    } else if (!have_coeff) {
        throw std::invalid_argument("expected term in '" + s + "' at " + std::to_string(pos));
    }
    if (neg) t.coeff = -t.coeff;
    return t;
}

} // namespace

Rational parse_rational(const std::string& s) {
    std::string t = strip(s);
    size_t pos = 0;
    Rational r = read_rational(t, pos);
    if (pos != t.size()) throw std::invalid_argument("trailing characters in rational '" + s + "'");
    return r;
}

std::string rational_str(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

QuadElt parse_quad(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw std::invalid_argument("empty scalar");
    size_t pos = 0;
    Rational a = 0, b = 0;
    long long D = 0;
    while (pos < t.size()) {
        Term term = read_term(t, pos);
        if (term.D == 0) {
            a += term.coeff;
        } else {
            if (D != 0 && D != term.D)
                throw std::invalid_argument("mixed discriminants in '" + s + "'");
            D = term.D;
            b += term.coeff;
        }
    }
    if (b == 0) return QuadElt(a);
    return QuadElt(a, b, D);
}

std::string quad_str(const QuadElt& x) {
    if (x.is_rational()) return rational_str(x.a());
    std::string root = "sqrt(" + std::to_string(x.disc()) + ")";
    std::string bs;
    Rational babs = x.b() < 0 ? Rational(-x.b()) : x.b();
    if (babs == 1) bs = root;
    else bs = rational_str(babs) + "*" + root;
    if (x.a() == 0) return (x.b() < 0 ? "-" : "") + bs;
    return rational_str(x.a()) + (x.b() < 0 ? "-" : "+") + bs;
}

} // namespace origami::alg
