#ifndef STCURVE_ORIGAMI_HPP
#define STCURVE_ORIGAMI_HPP

#include <set>
#include <string>
#include <vector>

#include "stcurve/diagram.hpp"
#include "stcurve/perm.hpp"
#include "stcurve/rational.hpp"

namespace stcurve {

/// Square-tiled surface: square i has square h(i) to its right and v(i)
/// above it.
struct Origami {
    Perm h;
    Perm v;

    int n_squares() const { return h.size(); }
    friend bool operator==(const Origami&, const Origami&) = default;
    friend auto operator<=>(const Origami&, const Origami&) = default;
};

/// Two-cylinder surface coordinates: ((P1, c1), t_start, (P2, c2)).
/// Side 1 describes the tau circle (bottom of C1 / top of C2), side 2 the
/// sigma circle (top of C1 / bottom of C2). Lengths pair with the diagram's
/// bottom order: the connection at bottom position i of c1 has length p1[i].
struct SurfaceCoordinates {
    std::vector<int> p1;
    OneCylinderDiagram c1;
    int t_start = 0;
    std::vector<int> p2;
    OneCylinderDiagram c2;
    int d_opt = 0;
};

struct MalformedCoordinates : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds the 4*d_opt-square origami: C1 = squares [0, 2d), C2 = [2d, 4d).
/// h is a long cycle on each row. The bottom of C1 carries the tau
/// connections at prefix-sum offsets; the top of C1 carries the sigma
/// connections in c2's top order with sigma0's left endpoint at offset 0;
/// the bottom of C2 carries sigma at prefix sums; the top of C2 carries tau
/// in c1's top order with tau0's left endpoint at offset 2*p2[0] + t_start.
Origami assemble(const SurfaceCoordinates& coords);

struct Stratum {
    std::vector<int> zero_orders;  // descending, zeros of positive order
    int marked_points = 0;         // order-0 grid vertices
    int genus = 0;
};

Stratum stratum_of(const Origami& o);

struct Cylinder {
    int width = 0;
    int height = 0;
    friend bool operator==(const Cylinder&, const Cylinder&) = default;
    friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

/// Maximal horizontal cylinders; sorted by (width, height).
std::vector<Cylinder> horizontal_cylinders(const Origami& o);

/// Horizontal shear: preserves h, twists each cylinder once.
Origami shear_action(const Origami& o);
/// Quarter rotation: horizontal cylinders of the image are the vertical
/// cylinders of the input.
Origami rotate_action(const Origami& o);

/// Closure of the canonical form under the two generator actions; members
/// are canonical pairs, sorted.
std::vector<Origami> sl2z_orbit(const Origami& o);

/// (1/12) * sum m(m+2)/(m+1) over kappa, exact.
Rational stratum_term(const std::vector<int>& kappa);

/// Exact sum of the top g Lyapunov exponents of an arithmetic Teichmueller
/// curve: stratum term plus the orbit average of the cylinder moduli sums.
Rational lyapunov_sum(const Origami& o);

/// {"n": 8, "h": [...], "v": [...]}
std::string to_json(const Origami& o);
Origami origami_from_json(const std::string& text);

/// Paper tuple form: (((1, 1, 1, 1), [[0,1,2,3],[0,1,2,3]]), 0, ((...), ...))
std::string to_string(const SurfaceCoordinates& c);
SurfaceCoordinates coordinates_from_string(const std::string& s);

}  // namespace stcurve

#endif
