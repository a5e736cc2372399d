#include "origami/degeneration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace origami::degen {

using perm::Perm;

namespace {

// horizontal decomposition of the pair (h, v); vertical callers swap the roles
std::vector<Cylinder> cylinders_of_pair(const Perm& h, const Perm& v) {
    int d = h.size();
    Perm comm = perm::commutator(h, v);
    std::vector<int> commlen(d);
    for (const auto& c : comm.cycles())
        for (int x : c) commlen[x] = (int)c.size();

    auto rows = h.cycles();
    int nr = (int)rows.size();
    std::vector<int> row_of(d);
    for (int r = 0; r < nr; ++r)
        for (int x : rows[r]) row_of[x] = r;

    // row r joins the row above it when v carries it bijectively onto that
    // row preserving the cyclic order and the shared boundary has no cone point
    std::vector<int> up(nr, -1), down(nr, -1);
    for (int r = 0; r < nr; ++r) {
        int rr = row_of[v(rows[r][0])];
        if (rows[rr].size() != rows[r].size()) continue;
        bool ok = true;
        for (int x : rows[r]) {
            if (row_of[v(x)] != rr || v(h(x)) != h(v(x)) || commlen[v(x)] != 1 || commlen[h(v(x))] != 1) {
                ok = false;
                break;
            }
        }
        if (ok) up[r] = rr;
    }
    for (int r = 0; r < nr; ++r)
        if (up[r] >= 0) down[up[r]] = r;

    // deterministic output: start from the row holding the smallest square,
    // walk to the bottom of its stack (closed chains start where found)
    std::vector<int> order(nr);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rows[a][0] < rows[b][0]; });
    std::vector<char> used(nr, 0);
    std::vector<Cylinder> out;
    for (int r0 : order) {
        if (used[r0]) continue;
        int b = r0;
        while (down[b] >= 0 && down[b] != r0) b = down[b];
        if (down[b] == r0) b = r0;
        Cylinder cy;
        int r = b;
        while (true) {
            used[r] = 1;
            cy.rows.push_back(rows[r]);
            if (up[r] < 0 || used[up[r]]) break;
            r = up[r];
        }
        cy.width = (int)cy.rows[0].size();
        cy.height = (int)cy.rows.size();
        out.push_back(std::move(cy));
    }
    return out;
}

} // namespace

std::vector<Cylinder> cylinders(const Origami& o, Direction dir) {
    return dir == Direction::horizontal ? cylinders_of_pair(o.h, o.v) : cylinders_of_pair(o.v, o.h);
}

DualGraph stable_curve(const Origami& o, Direction dir, int* chi_total) {
    const Perm& h = dir == Direction::horizontal ? o.h : o.v;
    const Perm& v = dir == Direction::horizontal ? o.v : o.h;
    int d = h.size();

    // quarter cells 4 i + k, k: 0 = bottom-left, 1 = bottom-right, 2 = top-left,
    // 3 = top-right; 8 glued edge slots per square, indexed 8 i + j
    auto cell = [](int sq, int k) { return 4 * sq + k; };
    struct QEdge {
        int a, b;
        int dir; // 0: east side of a meets west side of b; 1: north meets south
    };
    std::vector<QEdge> edges;
    edges.reserve(8 * d);
    for (int i = 0; i < d; ++i) {
        edges.push_back({cell(i, 0), cell(i, 1), 0});
        edges.push_back({cell(i, 2), cell(i, 3), 0});
        edges.push_back({cell(i, 0), cell(i, 2), 1});
        edges.push_back({cell(i, 1), cell(i, 3), 1});
        edges.push_back({cell(i, 1), cell(h(i), 0), 0});
        edges.push_back({cell(i, 3), cell(h(i), 2), 0});
        edges.push_back({cell(i, 2), cell(v(i), 0), 1});
        edges.push_back({cell(i, 3), cell(v(i), 1), 1});
    }

    auto cyls = cylinders_of_pair(h, v);
    std::set<int> cut;
    std::vector<std::vector<int>> loside(cyls.size()), hiside(cyls.size());
    for (size_t ci = 0; ci < cyls.size(); ++ci) {
        const Cylinder& cy = cyls[ci];
        if (cy.height % 2 == 1) {
            // cut along the midline of the middle row
            for (int x : cy.rows[cy.height / 2]) {
                cut.insert(8 * x + 2);
                cut.insert(8 * x + 3);
                loside[ci].push_back(cell(x, 0));
                hiside[ci].push_back(cell(x, 2));
            }
        } else {
            // cut along the gluing line above row height/2 - 1
            for (int x : cy.rows[cy.height / 2 - 1]) {
                cut.insert(8 * x + 6);
                cut.insert(8 * x + 7);
                loside[ci].push_back(cell(x, 2));
                hiside[ci].push_back(cell(v(x), 0));
            }
        }
    }

    int nc = 4 * d;
    std::vector<int> uf(nc);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int k = 0; k < (int)edges.size(); ++k)
        if (!cut.count(k)) uf[find(edges[k].a)] = find(edges[k].b);
    std::map<int, int> comp_id;
    std::vector<int> comp(nc);
    for (int x = 0; x < nc; ++x) {
        int root = find(x);
        auto [it, fresh] = comp_id.try_emplace(root, (int)comp_id.size());
        (void)fresh;
        comp[x] = it->second;
    }
    int ncomp = (int)comp_id.size();

    // cell corners 0 = SW, 1 = SE, 2 = NW, 3 = NE, identified across uncut edges
    std::vector<int> cuf(4 * nc);
    std::iota(cuf.begin(), cuf.end(), 0);
    auto cfind = [&](int x) {
        while (cuf[x] != x) x = cuf[x] = cuf[cuf[x]];
        return x;
    };
    auto cuni = [&](int a, int b) { cuf[cfind(a)] = cfind(b); };
    auto corner = [](int c, int k) { return 4 * c + k; };
    for (int k = 0; k < (int)edges.size(); ++k) {
        if (cut.count(k)) continue;
        const QEdge& e = edges[k];
        if (e.dir == 0) {
            cuni(corner(e.a, 1), corner(e.b, 0));
            cuni(corner(e.a, 3), corner(e.b, 2));
        } else {
            cuni(corner(e.a, 2), corner(e.b, 0));
            cuni(corner(e.a, 3), corner(e.b, 1));
        }
    }

    std::vector<int> faces(ncomp, 0), glued(ncomp, 0), boundary_sides(ncomp, 0), circles(ncomp, 0);
    for (int x = 0; x < nc; ++x) faces[comp[x]]++;
    for (int k = 0; k < (int)edges.size(); ++k) {
        if (cut.count(k)) {
            boundary_sides[comp[edges[k].a]]++;
            boundary_sides[comp[edges[k].b]]++;
        } else glued[comp[edges[k].a]]++;
    }

    DualGraph g;
    g.genus.assign(ncomp, 0);
    for (size_t ci = 0; ci < cyls.size(); ++ci) {
        int lo = comp[loside[ci][0]], hi = comp[hiside[ci][0]];
        circles[lo]++;
        circles[hi]++;
        g.edges.emplace_back(std::min(lo, hi), std::max(lo, hi));
    }

    std::vector<std::set<int>> vclasses(ncomp);
    for (int x = 0; x < nc; ++x)
        for (int k = 0; k < 4; ++k) vclasses[comp[x]].insert(cfind(corner(x, k)));

    int chi_sum = 0;
    for (int c = 0; c < ncomp; ++c) {
        int chi = (int)vclasses[c].size() - (glued[c] + boundary_sides[c]) + faces[c];
        chi_sum += chi;
        int twice = 2 - chi - circles[c];
        if (twice < 0 || twice % 2 != 0) throw std::logic_error("component genus inconsistency");
        g.genus[c] = twice / 2;
    }
    if (chi_total) *chi_total = chi_sum;
    return g;
}

namespace {

int graph_components(const DualGraph& g) {
    int n = (int)g.genus.size();
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& e : g.edges) uf[find(e.first)] = find(e.second);
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(find(i));
    return (int)roots.size();
}

} // namespace

int arithmetic_genus(const DualGraph& g) {
    if (g.genus.empty() || graph_components(g) != 1)
        throw std::invalid_argument("arithmetic genus needs a connected dual graph");
    int s = std::accumulate(g.genus.begin(), g.genus.end(), 0);
    return s + (int)g.edges.size() - (int)g.genus.size() + 1;
}

namespace {

struct VertexKey {
    int genus, degree, loops;
    friend bool operator==(const VertexKey&, const VertexKey&) = default;
    friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

std::vector<VertexKey> vertex_keys(const DualGraph& g) {
    std::vector<VertexKey> keys(g.genus.size());
    for (size_t i = 0; i < g.genus.size(); ++i) keys[i] = {g.genus[i], 0, 0};
    for (const auto& e : g.edges) {
        if (e.first == e.second) {
            keys[e.first].degree += 2;
            keys[e.first].loops += 1;
        } else {
            keys[e.first].degree += 1;
            keys[e.second].degree += 1;
        }
    }
    return keys;
}

std::vector<std::pair<int, int>> sorted_edges(const DualGraph& g, const std::vector<int>& relabel) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        int a = relabel[e.first], b = relabel[e.second];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool extend(const DualGraph& g1, const DualGraph& g2, const std::vector<VertexKey>& k1,
            const std::vector<VertexKey>& k2, std::vector<int>& map1, std::vector<char>& used2, size_t i) {
    size_t n = g1.genus.size();
    if (i == n) {
        std::vector<int> ident(n);
        std::iota(ident.begin(), ident.end(), 0);
        return sorted_edges(g1, map1) == sorted_edges(g2, ident);
    }
    for (size_t j = 0; j < n; ++j) {
        if (used2[j] || !(k1[i] == k2[j])) continue;
        map1[i] = (int)j;
        used2[j] = 1;
        if (extend(g1, g2, k1, k2, map1, used2, i + 1)) return true;
        used2[j] = 0;
    }
    return false;
}

} // namespace

bool graphs_isomorphic(const DualGraph& g1, const DualGraph& g2) {
    if (g1.genus.size() > 12 || g2.genus.size() > 12)
        throw std::invalid_argument("isomorphism search limited to 12 vertices");
    if (g1.genus.size() != g2.genus.size() || g1.edges.size() != g2.edges.size()) return false;
    auto k1 = vertex_keys(g1), k2 = vertex_keys(g2);
    auto s1 = k1, s2 = k2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
    std::vector<int> map1(g1.genus.size());
    std::vector<char> used2(g1.genus.size(), 0);
    return extend(g1, g2, k1, k2, map1, used2, 0);
}

std::vector<BoundaryPoint> cusp_stable_curves(const Origami& o, const veech::VeechGroup& vg) {
    std::vector<BoundaryPoint> out;
    for (const veech::Cusp& c : vg.cusps) {
        Origami moved = veech::act_word(c.rep, o);
        out.push_back({c.rep, stable_curve(moved, Direction::horizontal)});
    }
    return out;
}

std::vector<DualGraph> cusp_boundary_points(const Origami& o) {
    veech::VeechGroup vg = veech::veech_group(o);
    std::vector<DualGraph> out;
    for (const BoundaryPoint& bp : cusp_stable_curves(o, vg)) {
        bool fresh = true;
        for (const DualGraph& seen : out)
            if (graphs_isomorphic(seen, bp.graph)) {
                fresh = false;
                break;
            }
        if (fresh) out.push_back(bp.graph);
    }
    return out;
}

std::string dual_graph_dot(const DualGraph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (size_t i = 0; i < g.genus.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"g=" + std::to_string(g.genus[i]) + "\"];\n";
    for (const auto& e : g.edges)
        out += "  n" + std::to_string(e.first) + " -- n" + std::to_string(e.second) + ";\n";
    out += "}\n";
    return out;
}

} // namespace origami::degen
