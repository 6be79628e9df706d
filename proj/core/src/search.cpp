#include "stcurve/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace stcurve {

std::vector<int> align_rotations(const std::vector<int>& composition,
                                 const OneCylinderDiagram& diagram,
                                 const std::vector<int>& bits) {
    const int n = diagram.n();
    if (static_cast<int>(composition.size()) != n)
        throw std::invalid_argument("align: composition length != diagram size");
    const std::vector<int> pat = parity_pattern(diagram, bits);
    std::vector<int> out;
    for (int r = 0; r < n; ++r) {
        bool ok = true;
        for (int k = 0; k < n; ++k) {
            if ((composition[static_cast<size_t>(k)] & 1) != pat[static_cast<size_t>((r + k) % n)]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(r);
    }
    return out;
}

std::vector<AlignedCandidate> align(const std::vector<int>& composition,
                                    const OneCylinderDiagram& diagram,
                                    const std::vector<int>& bits) {
    std::vector<AlignedCandidate> out;
    for (int r : align_rotations(composition, diagram, bits))
        out.push_back({composition, rotate_diagram(diagram, r), r, 0});
    return out;
}

bool window_filter(const std::vector<int>& composition,
                   const OneCylinderDiagram& aligned_diagram, int window,
                   int anchor, int d_opt) {
    const int n = aligned_diagram.n();
    const int w = 2 * d_opt;
    const std::vector<int>& bottom = aligned_diagram.bottom;
    std::vector<int> posb(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) posb[static_cast<size_t>(bottom[static_cast<size_t>(i)])] = i;
    // Bottom prefix positions.
    std::vector<int> P(static_cast<size_t>(n));
    {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            P[static_cast<size_t>(i)] = s;
            s += composition[static_cast<size_t>(i)];
        }
    }
    // Top positions, cyclically from tau0 anchored at 2*window + anchor.
    std::vector<int> Q(static_cast<size_t>(n));
    {
        std::vector<int> u = top_left_to_right(aligned_diagram);
        auto it = std::find(u.begin(), u.end(), bottom[0]);
        std::rotate(u.begin(), it, u.end());
        int p = (2 * window + anchor) % w;
        for (int lab : u) {
            const int i = posb[static_cast<size_t>(lab)];
            Q[static_cast<size_t>(i)] = p % w;
            p += composition[static_cast<size_t>(i)];
        }
    }
    for (int i = 0; i < n; ++i) {
        const int s2 = P[static_cast<size_t>(i)] + Q[static_cast<size_t>(i)];
        if (s2 % 2 != 0)
            throw std::logic_error("window_filter: odd P+Q (convention bug upstream)");
        const int len = composition[static_cast<size_t>(i)];
        int c = (s2 / 2) % w;
        for (int residue : {c, (c + d_opt) % w}) {
            if (!(window <= residue && residue + len <= w)) return false;
        }
    }
    return true;
}

std::vector<int> passing_anchors(const std::vector<int>& composition,
                                 const OneCylinderDiagram& aligned_diagram,
                                 int window, int d_opt) {
    std::vector<int> out;
    const int bound = 2 * d_opt - 2 * composition[0] - 2 * window;
    for (int a = 0; a <= bound; a += 2)
        if (window_filter(composition, aligned_diagram, window, a, d_opt)) out.push_back(a);
    return out;
}

bool WindowPruneSet::skip(const std::vector<int>& composition,
                          const OneCylinderDiagram& diagram) const {
    return failed_.contains({composition, diagram});
}

void WindowPruneSet::mark_failed(const std::vector<int>& composition,
                                 const OneCylinderDiagram& diagram) {
    failed_.insert({composition, diagram});
}

std::optional<SurfaceCoordinates> combine(const AlignedCandidate& side1,
                                          int t_start,
                                          const AlignedCandidate& side2,
                                          int s_start, int d_opt) {
    const int t0 = side1.composition[0];
    const int s0 = side2.composition[0];
    if (2 * d_opt != 2 * s0 + 2 * t0 + s_start + t_start) return std::nullopt;
    SurfaceCoordinates c;
    c.p1 = side1.composition;
    c.c1 = side1.diagram;
    c.t_start = t_start;
    c.p2 = side2.composition;
    c.c2 = side2.diagram;
    c.d_opt = d_opt;
    return c;
}

bool vertical_check(const Origami& o, int d_opt) {
    const int target = 2 * d_opt;
    // Fast path: the cycle through square 0 must close after exactly 2*d_opt
    // steps.
    int j = o.v(0);
    int len = 1;
    while (j != 0) {
        j = o.v(j);
        if (++len > target) return false;
    }
    if (len != target) return false;
    const auto t = cycle_type(o.v);
    return t == std::vector<int>{target, target};
}

bool slope_test(const Origami& o, int d_opt) {
    const std::vector<int> want{2 * d_opt, 2 * d_opt};
    Perm hk = o.h;
    for (int k = 1; k <= d_opt; ++k) {
        if (cycle_type(compose(hk, o.v)) != want) return false;
        if (k < d_opt) hk = compose(o.h, hk);
    }
    return true;
}

std::vector<CertifiedSurface> reduce_and_certify(const std::vector<Origami>& survivors) {
    std::map<Origami, CertifiedSurface> by_class;
    for (const Origami& o : survivors) {
        auto [h, v] = canonical_pair(o.h, o.v);
        Origami canon{h, v};
        if (by_class.contains(canon)) continue;
        CertifiedSurface c;
        c.canonical = canon;
        const Stratum st = stratum_of(canon);
        c.stratum = st.zero_orders;
        const auto orbit = sl2z_orbit(canon);
        c.orbit_size = static_cast<long>(orbit.size());
        c.sum = lyapunov_sum(canon);
        // a completely degenerate spectrum needs genus >= 3; tori and
        // genus-two covers reach sum 1 vacuously and never certify
        c.certified = (c.sum == Rational(1)) && st.genus >= 3;
        by_class.emplace(std::move(canon), std::move(c));
    }
    std::vector<CertifiedSurface> out;
    for (auto& [k, v] : by_class) out.push_back(std::move(v));
    return out;
}

}  // namespace stcurve
