#pragma once

#include "origami/perm.hpp"

#include <string>
#include <vector>

namespace origami::surf {

using perm::Perm;

// Square-tiled surface: square i has h(i) to its right and v(i) above.
// The pair must generate a transitive group (connected surface).
struct Origami {
    std::string name;
    Perm h, v;
};

Origami make_origami(std::string name, Perm h, Perm v);

// `name; h=(1 2 3)(4 5 6); v=(2 4)(3 5)`
Origami parse_origami(const std::string& text);
std::string origami_text(const Origami& o);

int degree(const Origami& o);

// Vertices of the surface = cycles of the commutator h v h^-1 v^-1;
// a cycle of length k is a cone point of angle 2 pi k.
std::vector<std::vector<int>> vertices(const Origami& o);

// Cone orders minus one, zeros dropped, descending. Empty for the torus.
std::vector<int> stratum(const Origami& o);

int genus(const Origami& o);

std::vector<Perm> translations(const Origami& o);     // commute with h and v
std::vector<Perm> anti_translations(const Origami& o); // conjugate both to inverses
int automorphism_order(const Origami& o);

// Complete relabeling invariant: breadth-first relabeling along
// (h, h^-1, v, v^-1) from every start square, the code listing the relabeled
// h then v images; lexicographic minimum over starts.
std::vector<int> canonical_code(const Origami& o);
Origami canonical_form(const Origami& o);
bool same_up_to_relabel(const Origami& a, const Origami& b);

const std::vector<Origami>& catalog();
const Origami& catalog_get(const std::string& name);

} // namespace origami::surf
