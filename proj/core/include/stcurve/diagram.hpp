#ifndef STCURVE_DIAGRAM_HPP
#define STCURVE_DIAGRAM_HPP

#include <string>
#include <utility>
#include <vector>

namespace stcurve {

/// Labeling of the n saddle connections on the two boundaries of a cylinder.
/// `bottom` lists labels along the bottom left to right; `top` lists labels
/// along the top RIGHT TO LEFT (the reversed storage is the printed
/// convention; top_left_to_right() is the single place that undoes it).
/// Canonically enumerated diagrams have bottom = (0, ..., n-1), but any pair
/// of mutually inverse-consistent label sequences is accepted, so published
/// forms with permuted labels parse and behave identically.
struct OneCylinderDiagram {
    std::vector<int> bottom;
    std::vector<int> top;

    int n() const { return static_cast<int>(bottom.size()); }
    bool valid() const;

    friend bool operator==(const OneCylinderDiagram&,
                           const OneCylinderDiagram&) = default;
    friend auto operator<=>(const OneCylinderDiagram&,
                            const OneCylinderDiagram&) = default;
};

/// Top boundary labels read left to right.
std::vector<int> top_left_to_right(const OneCylinderDiagram& d);

/// Zeros of the self-glued one-cylinder surface. Zero ids index zero_orders;
/// each saddle connection's bottom endpoints name the zero on its left and
/// right. zero_at_corner[j] is the zero sitting at the left endpoint of the
/// connection at bottom position j.
struct ZeroIncidence {
    std::vector<int> zero_orders;
    std::vector<std::pair<int, int>> incidence;  // by bottom position
    std::vector<int> zero_at_corner;             // by bottom position
};

ZeroIncidence zero_data(const OneCylinderDiagram& d);

/// All diagrams whose zero orders equal kappa, bottom fixed to the identity
/// sequence, deduplicated under simultaneous rotation (canonical form:
/// lexicographically minimal stored top). Diagrams with a saddle connection
/// from a simple zero to itself are dropped when kappa contains a 1.
std::vector<OneCylinderDiagram> enumerate_diagrams(const std::vector<int>& kappa);

/// Entry i = XOR of the two endpoint bits of the connection at bottom
/// position i; bits maps zero id -> {0,1}. Throws if bits is too short.
std::vector<int> parity_pattern(const OneCylinderDiagram& d,
                                const std::vector<int>& bits);

/// Simultaneous rotation by r: the connection at bottom position r becomes
/// the new position-0 connection; labels are renumbered so the bottom stays
/// the identity sequence.
OneCylinderDiagram rotate_diagram(const OneCylinderDiagram& d, int r);

/// "[[0,1,2],[0,1,2]]"
std::string to_string(const OneCylinderDiagram& d);
OneCylinderDiagram diagram_from_string(const std::string& s);

}  // namespace stcurve

#endif
