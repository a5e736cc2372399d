#pragma once

#include "origami/origami.hpp"

#include <array>
#include <string>
#include <vector>

namespace origami::veech {

using surf::Origami;

// A word in the modular-group generators, one char per letter: 't', 's',
// with 'T' = t^-1 and 'S' = s^-1. Words denote products read left to right
// and act on origamis on the right (letters applied in reading order).
using Word = std::string;

Word reduce_word(const Word& w);
Word word_inverse(const Word& w);
std::string word_str(const Word& w); // "t*s*t^-2"; the empty word prints "1"
Word parse_word(const std::string& s);

struct Mat2Z {
    long long a = 1, b = 0, c = 0, d = 1;
    friend bool operator==(const Mat2Z&, const Mat2Z&) = default;
};
Mat2Z mat_mul(const Mat2Z& x, const Mat2Z& y);
Mat2Z word_matrix(const Word& w); // t = (1 1; 0 1), s = (0 -1; 1 0)
std::string mat_str(const Mat2Z& m);

// t: (h, v) -> (h, v h^-1); s: (h, v) -> (v^-1, h); 'T', 'S' the inverses.
// This convention gives the catalog surface S index 4, with s^2, t s t^-2,
// s t s^-1, t^3 and t^2 s t^-1 all stabilizing it.
Origami act(char letter, const Origami& o);
Origami act_word(const Word& w, const Origami& o);

// Orbit of the canonical form under the letter actions; breadth-first with
// generator order (t, s, t^-1, s^-1), so node numbering and spanning-tree
// words are deterministic. Node 0 is the input's canonical form.
struct CosetGraph {
    std::vector<std::vector<int>> nodes;       // canonical codes in BFS order
    std::vector<std::array<int, 4>> neighbors; // images under t, s, t^-1, s^-1
    std::vector<Word> reps;                    // spanning-tree coset words
};
CosetGraph coset_graph(const Origami& o);

struct Cusp {
    int width = 0;
    std::vector<int> classes; // the t-orbit of projective classes, in order
    Word rep;                 // coset word of the first class on the orbit
};

struct VeechGroup {
    int sl_index = 0;  // orbit size = index of the stabilizer in SL2(Z)
    int psl_index = 0; // sl_index, halved when -I is not in the stabilizer
    bool contains_minus_one = false;
    CosetGraph graph;
    std::vector<Word> generators; // Schreier generators, all pass is_member
    std::vector<Mat2Z> generator_matrices;
    std::vector<int> psl_class;  // node -> projective class
    std::vector<int> class_node; // class -> first node in BFS order
    std::vector<Cusp> cusps;     // t-orbits on projective classes
    int e2 = 0, e3 = 0;          // elliptic fixed classes of order 2, 3
    int quotient_genus = 0;      // 1 + psl_index/12 - e2/4 - e3/3 - #cusps/2
};

VeechGroup veech_group(const Origami& o);

// True iff the word's matrix stabilizes o's canonical form.
bool is_member(const Word& w, const Origami& o);

} // namespace origami::veech
