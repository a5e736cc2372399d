#include "origami/domain.hpp"

#include "origami/scalar_io.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <stdexcept>

namespace origami::veech {

using alg::QuadElt;
using alg::Rational;

HPoint mobius(const Mat2Z& m, const HPoint& z) {
    if (z.infinite) {
        if (m.c == 0) return {true, QuadElt{}};
        return {false, QuadElt(Rational(m.a) / m.c)};
    }
    QuadElt den = QuadElt(m.c) * z.z + QuadElt(m.d);
    if (den.is_zero()) return {true, QuadElt{}};
    return {false, (QuadElt(m.a) * z.z + QuadElt(m.b)) / den};
}

std::string hpoint_str(const HPoint& p) {
    return p.infinite ? "inf" : alg::quad_str(p.z);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

FundamentalDomain fundamental_domain(const VeechGroup& r) {
    int np = r.psl_index;
    FundamentalDomain dom;
    dom.face_count = np;

    auto class_step = [&](int pc, int k) {
        return r.psl_class[r.graph.neighbors[r.class_node[pc]][k]];
    };

    const HPoint rho{false, QuadElt(Rational(-1, 2), Rational(1, 2), -3)};
    const HPoint rho1{false, QuadElt(Rational(1, 2), Rational(1, 2), -3)};
    const HPoint inf{true, QuadElt{}};

    int folds = 0;
    for (int pc = 0; pc < np; ++pc) {
        DomainFace f;
        f.rep = r.graph.reps[r.class_node[pc]];
        Mat2Z m = word_matrix(f.rep);
        f.corner = {mobius(m, rho), mobius(m, rho1), mobius(m, inf)};
        f.right_face = class_step(pc, 0);
        f.left_face = class_step(pc, 2);
        f.arc_face = class_step(pc, 1);
        f.arc_folded = f.arc_face == pc;
        f.sides_self_glued = f.right_face == pc;
        if (f.arc_folded) ++folds;
        dom.faces.push_back(std::move(f));
    }

    // each face has two vertical sides glued in t-pairs (one edge per face)
    // and a bottom arc: folded arcs count one edge, the rest pair up under s
    dom.edge_count = np + folds + (np - folds) / 2;

    // corner k of face pc at index 3 pc + k: 0 = rho-image, 1 = rho+1-image, 2 = inf-image
    UnionFind uf(3 * np);
    for (int pc = 0; pc < np; ++pc) {
        int q = dom.faces[pc].right_face;
        uf.unite(3 * pc + 1, 3 * q + 0);
        uf.unite(3 * pc + 2, 3 * q + 2);
        int a = dom.faces[pc].arc_face;
        if (a == pc) uf.unite(3 * pc + 0, 3 * pc + 1);
        else {
            uf.unite(3 * pc + 0, 3 * a + 1);
            uf.unite(3 * pc + 1, 3 * a + 0);
        }
    }
    std::set<int> corner_classes, cusp_classes;
    for (int x = 0; x < 3 * np; ++x) corner_classes.insert(uf.find(x));
    for (int pc = 0; pc < np; ++pc) cusp_classes.insert(uf.find(3 * pc + 2));
    dom.vertex_count = (int)corner_classes.size() + folds; // folds add an arc midpoint
    dom.cusp_vertex_count = (int)cusp_classes.size();

    int chi = dom.vertex_count - dom.edge_count + dom.face_count;
    if ((2 - chi) % 2 != 0) throw std::logic_error("domain Euler characteristic inconsistency");
    dom.genus = (2 - chi) / 2;
    return dom;
}

namespace {

double rat_d(const Rational& r) { return r.convert_to<double>(); }

struct XY {
    double x, y;
};

XY draw_point(const HPoint& p) {
    // x + y*sqrt(-3) sits at height y*sqrt(3)
    return {rat_d(p.z.a()), rat_d(p.z.b()) * std::sqrt(3.0)};
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// sampled geodesic between two finite points (vertical segment or circle arc)
void append_geodesic(std::vector<XY>& out, const HPoint& pa, const HPoint& pb) {
    XY a = draw_point(pa), b = draw_point(pb);
    if (pa.z.a() == pb.z.a()) {
        out.push_back(b);
        return;
    }
    // exact circle center on the real axis: |z - c|^2 equal at both endpoints
    Rational na = pa.z.a() * pa.z.a() + 3 * pa.z.b() * pa.z.b();
    Rational nb = pb.z.a() * pb.z.a() + 3 * pb.z.b() * pb.z.b();
    Rational c = (na - nb) / (2 * (pa.z.a() - pb.z.a()));
    double cx = rat_d(c);
    double radius = std::hypot(a.x - cx, a.y);
    double ta = std::atan2(a.y, a.x - cx);
    double tb = std::atan2(b.y, b.x - cx);
    const int steps = 32;
    for (int i = 1; i <= steps; ++i) {
        double t = ta + (tb - ta) * i / steps;
        out.push_back({cx + radius * std::cos(t), radius * std::sin(t)});
    }
}

} // namespace

std::string domain_svg(const FundamentalDomain& dom) {
    double xmin = -0.5, xmax = 0.5, yfin = 1.0;
    for (const DomainFace& f : dom.faces)
        for (const HPoint& p : f.corner) {
            if (p.infinite) continue;
            XY q = draw_point(p);
            xmin = std::min(xmin, q.x);
            xmax = std::max(xmax, q.x);
            yfin = std::max(yfin, q.y);
        }
    double ytop = std::max(1.6, 1.3 * yfin);
    xmin -= 0.3;
    xmax += 0.3;
    const double scale = 220.0, margin = 24.0;
    double w = (xmax - xmin) * scale + 2 * margin;
    double h = ytop * scale + 2 * margin;
    auto px = [&](double x) { return margin + (x - xmin) * scale; };
    auto py = [&](double y) { return h - margin - y * scale; };

    static const char* fills[6] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc", "#fc9272", "#fdd0a2"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<line x1=\"" + fmt(px(xmin)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(px(xmax)) +
           "\" y2=\"" + fmt(py(0)) + "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";

    for (size_t i = 0; i < dom.faces.size(); ++i) {
        const DomainFace& f = dom.faces[i];
        std::vector<XY> pts;
        for (int k = 0; k < 3; ++k) {
            const HPoint& pa = f.corner[k];
            const HPoint& pb = f.corner[(k + 1) % 3];
            if (pa.infinite) {
                XY b = draw_point(pb);
                pts.push_back({b.x, ytop});
                pts.push_back(b);
            } else if (pb.infinite) {
                XY a = draw_point(pa);
                if (pts.empty()) pts.push_back(a);
                pts.push_back({a.x, ytop});
            } else {
                if (pts.empty()) pts.push_back(draw_point(pa));
                append_geodesic(pts, pa, pb);
            }
        }
        std::string path = "M";
        for (size_t k = 0; k < pts.size(); ++k) {
            path += (k ? " L" : " ") + fmt(px(pts[k].x)) + " " + fmt(py(pts[k].y));
        }
        path += " Z";
        svg += "<path d=\"" + path + "\" fill=\"" + fills[i % 6] +
               "\" fill-opacity=\"0.45\" stroke=\"#333333\" stroke-width=\"1.2\"/>\n";
    }

    // labels and finite corner markers on top of the filled faces
    for (size_t i = 0; i < dom.faces.size(); ++i) {
        const DomainFace& f = dom.faces[i];
        double lx = 0, ly = 0;
        int n = 0;
        double finx = 0;
        int nfin = 0;
        for (const HPoint& p : f.corner)
            if (!p.infinite) {
                finx += draw_point(p).x;
                ++nfin;
            }
        finx = nfin ? finx / nfin : 0.0;
        for (const HPoint& p : f.corner) {
            XY q = p.infinite ? XY{finx, 0.85 * ytop} : draw_point(p);
            lx += q.x;
            ly += q.y;
            ++n;
        }
        svg += "<text x=\"" + fmt(px(lx / n)) + "\" y=\"" + fmt(py(ly / n)) +
               "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\">" +
               word_str(f.rep) + "</text>\n";
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const DomainFace& f : dom.faces)
        for (const HPoint& p : f.corner) {
            if (p.infinite) continue;
            XY q = draw_point(p);
            if (!seen.insert({fmt(q.x), fmt(q.y)}).second) continue;
            svg += "<circle cx=\"" + fmt(px(q.x)) + "\" cy=\"" + fmt(py(q.y)) +
                   "\" r=\"3\" fill=\"#222222\"/>\n";
        }
    svg += "</svg>\n";
    return svg;
}

} // namespace origami::veech
