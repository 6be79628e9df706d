#ifndef STCURVE_SEARCH_HPP
#define STCURVE_SEARCH_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "stcurve/cases.hpp"
#include "stcurve/composition.hpp"
#include "stcurve/diagram.hpp"
#include "stcurve/origami.hpp"

namespace stcurve {

/// A composition whose parities match the rotated diagram's parity pattern.
struct AlignedCandidate {
    std::vector<int> composition;
    OneCylinderDiagram diagram;  // rotated so parities align entrywise
    int source_rotation = 0;     // rotation applied to the canonical diagram
    int bit_choice = 0;          // index into the boundary's bit assignments
};

/// Rotations r such that the parity pattern of the diagram rotated by r
/// equals composition mod 2 entrywise.
std::vector<int> align_rotations(const std::vector<int>& composition,
                                 const OneCylinderDiagram& diagram,
                                 const std::vector<int>& bits);

std::vector<AlignedCandidate> align(const std::vector<int>& composition,
                                    const OneCylinderDiagram& diagram,
                                    const std::vector<int>& bits);

/// Window Lemma test. For every connection i with bottom prefix position P_i,
/// top position Q_i (tau0 anchored at 2*window + anchor) and length l_i, both
/// residues c in {(P_i+Q_i)/2, (P_i+Q_i)/2 + d} mod 2d must satisfy
/// window <= c and c + l_i <= 2d; otherwise a straight closed trajectory
/// crosses the distinguished opposite connection and returns, which the
/// Window Lemma forbids on a candidate surface. Throws std::logic_error when
/// P_i + Q_i turns out odd (convention bug upstream).
bool window_filter(const std::vector<int>& composition,
                   const OneCylinderDiagram& aligned_diagram, int window,
                   int anchor, int d_opt);

/// Anchors (even, within the Corollary bound) passing window_filter.
std::vector<int> passing_anchors(const std::vector<int>& composition,
                                 const OneCylinderDiagram& aligned_diagram,
                                 int window, int d_opt);

/// Skip-set for the appendix monotonicity lemma: once a (composition,
/// diagram) fails at every admissible anchor for some window, it fails for
/// every larger window and is never retested.
class WindowPruneSet {
public:
    bool skip(const std::vector<int>& composition,
              const OneCylinderDiagram& diagram) const;
    void mark_failed(const std::vector<int>& composition,
                     const OneCylinderDiagram& diagram);

private:
    std::set<std::pair<std::vector<int>, OneCylinderDiagram>> failed_;
};

/// Step 5: the two anchors over-determine the surface; accept exactly when
/// 2*d_opt = 2*s0 + 2*t0 + s_start + t_start.
std::optional<SurfaceCoordinates> combine(const AlignedCandidate& side1,
                                          int t_start,
                                          const AlignedCandidate& side2,
                                          int s_start, int d_opt);

/// Step 6: v must be a pair of 2*d_opt-cycles. The fast path follows the
/// cycle through square 0 first and bails out early.
bool vertical_check(const Origami& o, int d_opt);

/// Step 7: h^k v must be a pair of 2*d_opt-cycles for 1 <= k <= d_opt.
bool slope_test(const Origami& o, int d_opt);

struct CertifiedSurface {
    Origami canonical;
    std::vector<int> stratum;
    long orbit_size = 0;
    Rational sum;
    bool certified = false;  // sum == 1 exactly
};

/// Deduplicates by canonical pair and attaches the exact Lyapunov sum;
/// sorted by canonical form.
std::vector<CertifiedSurface> reduce_and_certify(const std::vector<Origami>& survivors);

}  // namespace stcurve

#endif
