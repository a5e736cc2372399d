#pragma once

#include <string>
#include <vector>

namespace origami::perm {

// Bijection of {0,..,d-1}; external I/O (cycle notation) is 1-based.
class Perm {
public:
    Perm() = default;
    explicit Perm(int d); // identity
    explicit Perm(std::vector<int> images); // 0-based images, validated

    // "(1 2 3)(4 5 6)"; whitespace/comma tolerant, fixed points may be omitted;
    // degree inferred from the largest symbol when d < 0. "()" is the identity.
    static Perm from_cycles(const std::string& s, int d = -1);

    int size() const { return (int)img_.size(); }
    int operator()(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    bool is_identity() const;

    // cycles sorted by smallest element; fixed points included
    std::vector<std::vector<int>> cycles() const;
    std::string cycle_str() const; // 1-based, fixed points omitted, identity -> "()"

    friend bool operator==(const Perm& p, const Perm& q) { return p.img_ == q.img_; }
    friend bool operator!=(const Perm& p, const Perm& q) { return !(p == q); }
    friend bool operator<(const Perm& p, const Perm& q) { return p.img_ < q.img_; }

private:
    std::vector<int> img_;
};

// apply q first, then p
Perm compose(const Perm& p, const Perm& q);

// h v h^-1 v^-1; its cycles are the vertex fibers of an origami
Perm commutator(const Perm& h, const Perm& v);

bool transitive_pair(const Perm& h, const Perm& v);

// All pi commuting with both h and v. Requires <h,v> transitive; each
// candidate is fixed by pi(0), propagated along h/v edges and then verified.
std::vector<Perm> centralizer_pair(const Perm& h, const Perm& v);

// All pi with pi h pi^-1 = h^-1 and pi v pi^-1 = v^-1 (same propagation with
// inverted targets). Union with the centralizer gives the automorphism group.
std::vector<Perm> anti_centralizer_pair(const Perm& h, const Perm& v);

} // namespace origami::perm
