#include "origami/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace origami::perm {

Perm::Perm(int d) {
    if (d < 1) throw std::invalid_argument("permutation degree must be positive");
    img_.resize(d);
    for (int i = 0; i < d; ++i) img_[i] = i;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    int d = (int)img_.size();
    if (d == 0) throw std::invalid_argument("empty permutation");
    std::vector<char> seen(d, 0);
    for (int x : img_) {
        if (x < 0 || x >= d || seen[x]) throw std::invalid_argument("image list is not a bijection");
        seen[x] = 1;
    }
}

Perm Perm::from_cycles(const std::string& s, int d) {
    std::vector<std::vector<int>> cyc;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && (std::isspace((unsigned char)s[i]) || s[i] == ',')) ++i;
    };
    skip();
    while (i < s.size()) {
        if (s[i] != '(') throw std::invalid_argument("expected '(' at position " + std::to_string(i));
        ++i;
        std::vector<int> cur;
        skip();
        while (i < s.size() && s[i] != ')') {
            if (!std::isdigit((unsigned char)s[i]))
                throw std::invalid_argument("expected symbol at position " + std::to_string(i));
            int v = 0;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
            if (v < 1) throw std::invalid_argument("symbols are 1-based");
            cur.push_back(v - 1);
            skip();
        }
        if (i >= s.size()) throw std::invalid_argument("unbalanced '('");
        ++i; // ')'
        if (!cur.empty()) cyc.push_back(std::move(cur));
        skip();
    }
    int need = d;
    if (need < 0) {
        need = 1;
        for (const auto& c : cyc)
            for (int x : c) need = std::max(need, x + 1);
    }
    std::vector<int> img(need);
    for (int j = 0; j < need; ++j) img[j] = j;
    std::vector<char> used(need, 0);
    for (const auto& c : cyc) {
        for (size_t j = 0; j < c.size(); ++j) {
            int x = c[j];
            if (x >= need) throw std::invalid_argument("symbol exceeds degree");
            if (used[x]) throw std::invalid_argument("symbol repeated across cycles");
            used[x] = 1;
            img[x] = c[(j + 1) % c.size()];
        }
    }
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < (int)img_.size(); ++i) inv[img_[i]] = i;
    return Perm(std::move(inv));
}

bool Perm::is_identity() const {
    for (int i = 0; i < (int)img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
    int d = (int)img_.size();
    std::vector<char> seen(d, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        int x = i;
        while (!seen[x]) {
            seen[x] = 1;
            c.push_back(x);
            x = img_[x];
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Perm::cycle_str() const {
    std::string out;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        out += '(';
        for (size_t j = 0; j < c.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(c[j] + 1);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("degree mismatch in composition");
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i) img[i] = p(q(i));
    return Perm(std::move(img));
}

Perm commutator(const Perm& h, const Perm& v) {
    return compose(compose(h, v), compose(h.inverse(), v.inverse()));
}

bool transitive_pair(const Perm& h, const Perm& v) {
    if (h.size() != v.size()) return false;
    int d = h.size();
    std::vector<char> seen(d, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    const Perm hi = h.inverse(), vi = v.inverse();
    const Perm* edges[4] = {&h, &hi, &v, &vi};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const Perm* e : edges) {
            int y = (*e)(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++cnt;
                stack.push_back(y);
            }
        }
    }
    return cnt == d;
}

namespace {

// Conjugation pi . pi^-1 sends (h, v) to (th, tv). By transitivity pi is
// determined by pi(0): propagate pi(g(x)) = tg(pi(x)) over g in {h, v} from
// square 0 and check consistency, then verify the two defining equations.
std::vector<Perm> conjugators(const Perm& h, const Perm& v, const Perm& th, const Perm& tv) {
    if (!transitive_pair(h, v)) throw std::invalid_argument("pair must generate a transitive group");
    int d = h.size();
    std::vector<Perm> out;
    for (int start = 0; start < d; ++start) {
        std::vector<int> img(d, -1);
        img[0] = start;
        std::vector<int> stack{0};
        bool ok = true;
        while (ok && !stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            const std::pair<int, int> steps[2] = {{h(x), th(img[x])}, {v(x), tv(img[x])}};
            for (auto [y, ty] : steps) {
                if (img[y] == -1) {
                    img[y] = ty;
                    stack.push_back(y);
                } else if (img[y] != ty) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<char> hit(d, 0);
        for (int x : img) {
            if (x < 0 || hit[x]) {
                ok = false;
                break;
            }
            hit[x] = 1;
        }
        if (!ok) continue;
        Perm pi(std::move(img));
        if (compose(pi, h) == compose(th, pi) && compose(pi, v) == compose(tv, pi)) out.push_back(std::move(pi));
    }
    return out;
}

} // namespace

std::vector<Perm> centralizer_pair(const Perm& h, const Perm& v) {
    return conjugators(h, v, h, v);
}

std::vector<Perm> anti_centralizer_pair(const Perm& h, const Perm& v) {
    return conjugators(h, v, h.inverse(), v.inverse());
}

} // namespace origami::perm
