#ifndef STCURVE_PERM_HPP
#define STCURVE_PERM_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stcurve {

/// Permutation of {0, ..., n-1} stored as its image list: images()[i] = p(i).
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);                       // identity on n points
    explicit Perm(std::vector<int> images);     // validates bijection

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    Perm inverse() const;
    Perm power(int k) const;                    // k >= 0

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<int> img_;
};

/// result(i) = p(q(i)); sizes must agree.
Perm compose(const Perm& p, const Perm& q);

std::vector<std::vector<int>> cycles(const Perm& p);

/// Multiset of cycle lengths, ascending.
std::vector<int> cycle_type(const Perm& p);

/// Commutator v h v^-1 h^-1: orbits are the vertices of the square grid of
/// the origami (h, v); an orbit of length k sits under a cone angle 2*pi*k.
Perm corner_permutation(const Perm& h, const Perm& v);

/// True iff the group generated by h, v acts transitively on the labels.
bool transitive(const Perm& h, const Perm& v);

/// Lexicographically minimal simultaneous relabeling of (h, v) over BFS
/// relabelings started from each label, generators applied in order (h, v).
/// Two pairs are simultaneously conjugate iff their canonical pairs compare
/// equal. Throws std::invalid_argument on a disconnected pair.
std::pair<Perm, Perm> canonical_pair(const Perm& h, const Perm& v);

/// "[1,0,2]"
std::string to_string(const Perm& p);
Perm perm_from_string(const std::string& s);

}  // namespace stcurve

#endif
