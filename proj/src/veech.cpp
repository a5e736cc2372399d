#include "origami/veech.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace origami::veech {

namespace {

char invert_letter(char c) {
    switch (c) {
        case 't': return 'T';
        case 'T': return 't';
        case 's': return 'S';
        case 'S': return 's';
    }
    throw std::invalid_argument(std::string("bad word letter `") + c + "`");
}

} // namespace

Word reduce_word(const Word& w) {
    Word r;
    for (char c : w) {
        invert_letter(c); // validates
        if (!r.empty() && r.back() == invert_letter(c)) r.pop_back();
        else r.push_back(c);
    }
    return r;
}

Word word_inverse(const Word& w) {
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(invert_letter(*it));
    return r;
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long long k = (long long)(j - i);
        if (std::isupper((unsigned char)w[i])) k = -k;
        if (!out.empty()) out += '*';
        out += (char)std::tolower((unsigned char)w[i]);
        if (k != 1) out += "^" + std::to_string(k);
        i = j;
    }
    return out;
}

Word parse_word(const std::string& s) {
    std::string in;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) in.push_back(c);
    if (in == "1" || in.empty()) return Word{};
    Word w;
    if (in.find('*') == std::string::npos && in.find('^') == std::string::npos) {
        for (char c : in) {
            invert_letter(c);
            w.push_back(c);
        }
        return reduce_word(w);
    }
    size_t i = 0;
    while (i < in.size()) {
        char base = in[i];
        if (base != 't' && base != 's') throw std::invalid_argument("expected letter t or s in word");
        ++i;
        long long k = 1;
        if (i < in.size() && in[i] == '^') {
            ++i;
            bool neg = false;
            if (i < in.size() && (in[i] == '-' || in[i] == '+')) neg = (in[i++] == '-');
            if (i >= in.size() || !std::isdigit((unsigned char)in[i]))
                throw std::invalid_argument("expected exponent digits in word");
            k = 0;
            while (i < in.size() && std::isdigit((unsigned char)in[i])) k = k * 10 + (in[i++] - '0');
            if (neg) k = -k;
        }
        char letter = k < 0 ? (char)std::toupper((unsigned char)base) : base;
        for (long long n = 0; n < (k < 0 ? -k : k); ++n) w.push_back(letter);
        if (i < in.size()) {
            if (in[i] != '*') throw std::invalid_argument("expected `*` between word tokens");
            ++i;
            if (i == in.size()) throw std::invalid_argument("trailing `*` in word");
        }
    }
    return reduce_word(w);
}

Mat2Z mat_mul(const Mat2Z& x, const Mat2Z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2Z word_matrix(const Word& w) {
    Mat2Z m;
    for (char c : w) {
        Mat2Z g;
        switch (c) {
            case 't': g = {1, 1, 0, 1}; break;
            case 'T': g = {1, -1, 0, 1}; break;
            case 's': g = {0, -1, 1, 0}; break;
            case 'S': g = {0, 1, -1, 0}; break;
            default: throw std::invalid_argument("bad word letter");
        }
        m = mat_mul(m, g);
    }
    return m;
}

std::string mat_str(const Mat2Z& m) {
    return "(" + std::to_string(m.a) + " " + std::to_string(m.b) + "; " + std::to_string(m.c) + " " +
           std::to_string(m.d) + ")";
}

Origami act(char letter, const Origami& o) {
    using perm::compose;
    switch (letter) {
        case 't': return {o.name, o.h, compose(o.v, o.h.inverse())};
        case 'T': return {o.name, o.h, compose(o.v, o.h)};
        case 's': return {o.name, o.v.inverse(), o.h};
        case 'S': return {o.name, o.v, o.h.inverse()};
    }
    throw std::invalid_argument("bad word letter");
}

Origami act_word(const Word& w, const Origami& o) {
    Origami r = o;
    for (char c : w) r = act(c, r);
    return r;
}

bool is_member(const Word& w, const Origami& o) {
    return surf::canonical_code(act_word(w, o)) == surf::canonical_code(o);
}

CosetGraph coset_graph(const Origami& o) {
    if (!perm::transitive_pair(o.h, o.v)) throw std::invalid_argument("origami must be connected");
    static const char L[4] = {'t', 's', 'T', 'S'};
    CosetGraph g;
    std::map<std::vector<int>, int> id_of;
    std::vector<Origami> node_ori;
    id_of[surf::canonical_code(o)] = 0;
    node_ori.push_back(o);
    g.nodes.push_back(surf::canonical_code(o));
    g.reps.push_back(Word{});
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int k = 0; k < 4; ++k) {
            Origami nx = act(L[k], node_ori[u]);
            std::vector<int> code = surf::canonical_code(nx);
            auto it = id_of.find(code);
            if (it == id_of.end()) {
                int w = (int)node_ori.size();
                g.nodes.push_back(code);
                id_of.emplace(std::move(code), w);
                node_ori.push_back(std::move(nx));
                g.reps.push_back(reduce_word(g.reps[u] + L[k]));
                queue.push_back(w);
            }
        }
    }
    int n = (int)node_ori.size();
    g.neighbors.resize(n);
    for (int u = 0; u < n; ++u)
        for (int k = 0; k < 4; ++k) g.neighbors[u][k] = id_of.at(surf::canonical_code(act(L[k], node_ori[u])));
    return g;
}

VeechGroup veech_group(const Origami& o) {
    static const char L[4] = {'t', 's', 'T', 'S'};
    VeechGroup R;
    R.graph = coset_graph(o);
    const CosetGraph& g = R.graph;
    int n = (int)g.nodes.size();
    R.sl_index = n;

    std::map<std::vector<int>, int> id_of;
    for (int u = 0; u < n; ++u) id_of[g.nodes[u]] = u;
    // -I = s^2 sends (h, v) to (h^-1, v^-1); node codes encode the pair directly
    int d = surf::degree(o);
    auto minus_node = [&](int u) {
        perm::Perm h(std::vector<int>(g.nodes[u].begin(), g.nodes[u].begin() + d));
        perm::Perm v(std::vector<int>(g.nodes[u].begin() + d, g.nodes[u].end()));
        Origami m{o.name, h.inverse(), v.inverse()};
        return id_of.at(surf::canonical_code(m));
    };
    R.contains_minus_one = minus_node(0) == 0;

    // Schreier generators: a spanning-tree edge reached via a positive letter l
    // from parent p consumes positive edge (p, l); via an inverse letter it
    // consumes (child, inverse-of-l). Remaining positive edges yield one
    // stabilizer generator each: rep(u) l rep(u.l)^-1.
    std::set<std::pair<int, int>> used;
    {
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int k = 0; k < 4; ++k) {
                int w = g.neighbors[u][k];
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                    used.insert(k < 2 ? std::pair{u, k} : std::pair{w, k - 2});
                }
            }
        }
    }
    for (int u = 0; u < n; ++u)
        for (int k = 0; k < 2; ++k) {
            if (used.count({u, k})) continue;
            int w = g.neighbors[u][k];
            Word gen = reduce_word(g.reps[u] + L[k] + word_inverse(g.reps[w]));
            R.generator_matrices.push_back(word_matrix(gen));
            R.generators.push_back(std::move(gen));
        }

    // projective classes: node paired with its image under -I = s^2
    R.psl_class.assign(n, -1);
    int np = 0;
    for (int u = 0; u < n; ++u) {
        if (R.psl_class[u] >= 0) continue;
        int w = minus_node(u);
        R.psl_class[u] = np;
        R.psl_class[w] = np;
        R.class_node.push_back(u);
        ++np;
    }
    R.psl_index = np;

    auto class_step = [&](int pc, int k) { return R.psl_class[g.neighbors[R.class_node[pc]][k]]; };

    std::vector<int> cusp_of(np, -1);
    for (int u = 0; u < n; ++u) {
        int pc = R.psl_class[u];
        if (cusp_of[pc] >= 0) continue;
        Cusp cu;
        cu.rep = g.reps[u];
        int c = pc;
        do {
            cusp_of[c] = (int)R.cusps.size();
            cu.classes.push_back(c);
            ++cu.width;
            c = class_step(c, 0);
        } while (c != pc);
        R.cusps.push_back(std::move(cu));
    }

    for (int pc = 0; pc < np; ++pc) {
        if (class_step(pc, 1) == pc) ++R.e2;
        if (R.psl_class[g.neighbors[g.neighbors[R.class_node[pc]][1]][0]] == pc) ++R.e3;
    }

    int c = (int)R.cusps.size();
    int twelve = 12 + np - 3 * R.e2 - 4 * R.e3 - 6 * c;
    if (twelve < 0 || twelve % 12 != 0) throw std::logic_error("quotient genus formula inconsistency");
    R.quotient_genus = twelve / 12;
    return R;
}

} // namespace origami::veech
