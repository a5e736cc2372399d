#include "origami/origami.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace origami::surf {

Origami make_origami(std::string name, Perm h, Perm v) {
    if (h.size() != v.size()) throw std::invalid_argument("h and v must have the same degree");
    if (!perm::transitive_pair(h, v)) throw std::invalid_argument("surface is disconnected: <h,v> not transitive");
    return Origami{std::move(name), std::move(h), std::move(v)};
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Origami parse_origami(const std::string& text) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t semi = text.find(';', pos);
        if (semi == std::string::npos) semi = text.size();
        parts.push_back(trim(text.substr(pos, semi - pos)));
        pos = semi + 1;
    }
    while (!parts.empty() && parts.back().empty()) parts.pop_back();
    if (parts.size() != 3) throw std::invalid_argument("expected `name; h=(...); v=(...)`");
    std::string hs, vs;
    for (int i = 1; i <= 2; ++i) {
        size_t eq = parts[i].find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected `h=` or `v=` assignment");
        std::string key = trim(parts[i].substr(0, eq));
        std::string val = trim(parts[i].substr(eq + 1));
        if (key == "h") hs = val;
        else if (key == "v") vs = val;
        else throw std::invalid_argument("unknown key `" + key + "`");
    }
    if (hs.empty() || vs.empty()) throw std::invalid_argument("both h and v are required");
    // parse once without a degree bound to learn the largest symbol used
    Perm h0 = Perm::from_cycles(hs);
    Perm v0 = Perm::from_cycles(vs);
    int d = std::max(h0.size(), v0.size());
    return make_origami(parts[0], Perm::from_cycles(hs, d), Perm::from_cycles(vs, d));
}

std::string origami_text(const Origami& o) {
    return o.name + "; h=" + o.h.cycle_str() + "; v=" + o.v.cycle_str();
}

int degree(const Origami& o) { return o.h.size(); }

std::vector<std::vector<int>> vertices(const Origami& o) {
    return perm::commutator(o.h, o.v).cycles();
}

std::vector<int> stratum(const Origami& o) {
    std::vector<int> out;
    for (const auto& c : vertices(o))
        if (c.size() > 1) out.push_back((int)c.size() - 1);
    std::sort(out.rbegin(), out.rend());
    return out;
}

int genus(const Origami& o) {
    // chi = V - E + F = #vertices - 2d + d
    int chi = (int)vertices(o).size() - degree(o);
    return (2 - chi) / 2;
}

std::vector<Perm> translations(const Origami& o) { return perm::centralizer_pair(o.h, o.v); }

std::vector<Perm> anti_translations(const Origami& o) { return perm::anti_centralizer_pair(o.h, o.v); }

int automorphism_order(const Origami& o) {
    return (int)(translations(o).size() + anti_translations(o).size());
}

namespace {

std::vector<int> code_from(const Origami& o, int start) {
    int d = degree(o);
    const Perm hi = o.h.inverse(), vi = o.v.inverse();
    const Perm* edges[4] = {&o.h, &hi, &o.v, &vi};
    std::vector<int> label(d, -1);
    std::deque<int> queue{start};
    label[start] = 0;
    int next = 1;
    std::vector<int> order{start};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (const Perm* e : edges) {
            int y = (*e)(x);
            if (label[y] == -1) {
                label[y] = next++;
                order.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::vector<int> code;
    code.reserve(2 * d);
    for (int x : order) code.push_back(label[o.h(x)]);
    for (int x : order) code.push_back(label[o.v(x)]);
    return code;
}

} // namespace

std::vector<int> canonical_code(const Origami& o) {
    int d = degree(o);
    std::vector<int> best = code_from(o, 0);
    for (int s = 1; s < d; ++s) best = std::min(best, code_from(o, s));
    return best;
}

Origami canonical_form(const Origami& o) {
    std::vector<int> code = canonical_code(o);
    int d = degree(o);
    return Origami{o.name, Perm(std::vector<int>(code.begin(), code.begin() + d)),
                   Perm(std::vector<int>(code.begin() + d, code.end()))};
}

bool same_up_to_relabel(const Origami& a, const Origami& b) {
    if (degree(a) != degree(b)) return false;
    return canonical_code(a) == canonical_code(b);
}

const std::vector<Origami>& catalog() {
    static const std::vector<Origami> all = [] {
        std::vector<Origami> c;
        c.push_back(make_origami("S", Perm::from_cycles("(1 2 3)(4 5 6)", 6), Perm::from_cycles("(2 4)(3 5)", 6)));
        c.push_back(make_origami("torus", Perm(1), Perm(1)));
        c.push_back(make_origami("L3", Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(1 3)", 3)));
        return c;
    }();
    return all;
}

const Origami& catalog_get(const std::string& name) {
    for (const Origami& o : catalog())
        if (o.name == name) return o;
    throw std::invalid_argument("no catalog surface named `" + name + "`");
}

} // namespace origami::surf
