#include "stcurve/origami.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stcurve {

namespace {

std::vector<int> positions_of(const std::vector<int>& seq) {
    std::vector<int> pos(seq.size());
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        pos[static_cast<size_t>(seq[static_cast<size_t>(i)])] = i;
    return pos;
}

}  // namespace

Origami assemble(const SurfaceCoordinates& coords) {
    const int d = coords.d_opt;
    if (d < 1) throw MalformedCoordinates("assemble: d_opt must be positive");
    const int w = 2 * d;
    if (!coords.c1.valid() || !coords.c2.valid())
        throw MalformedCoordinates("assemble: invalid diagram");
    const int n1 = coords.c1.n();
    const int n2 = coords.c2.n();
    if (static_cast<int>(coords.p1.size()) != n1 ||
        static_cast<int>(coords.p2.size()) != n2)
        throw MalformedCoordinates("assemble: partition/diagram length mismatch");
    auto sum_of = [](const std::vector<int>& v) {
        return std::accumulate(v.begin(), v.end(), 0);
    };
    if (sum_of(coords.p1) != w || sum_of(coords.p2) != w)
        throw MalformedCoordinates("assemble: partitions must sum to 2*d_opt");
    for (int x : coords.p1)
        if (x < 1) throw MalformedCoordinates("assemble: nonpositive length");
    for (int x : coords.p2)
        if (x < 1) throw MalformedCoordinates("assemble: nonpositive length");
    if (coords.t_start < 0) throw MalformedCoordinates("assemble: negative t_start");

    const std::vector<int> posb1 = positions_of(coords.c1.bottom);
    const std::vector<int> posb2 = positions_of(coords.c2.bottom);

    // Bottom prefix offsets by bottom position.
    auto prefixes = [](const std::vector<int>& p) {
        std::vector<int> pre(p.size());
        int s = 0;
        for (size_t i = 0; i < p.size(); ++i) {
            pre[i] = s;
            s += p[i];
        }
        return pre;
    };
    const std::vector<int> bp1 = prefixes(coords.p1);
    const std::vector<int> bp2 = prefixes(coords.p2);

    // Cover a top circle: (label, offset-within-connection) per unit column.
    auto cover_top = [&](const OneCylinderDiagram& diag, const std::vector<int>& posb,
                         const std::vector<int>& lengths, int anchor_label,
                         int anchor_pos) {
        std::vector<std::pair<int, int>> cov(static_cast<size_t>(w), {-1, -1});
        std::vector<int> u = top_left_to_right(diag);
        auto it = std::find(u.begin(), u.end(), anchor_label);
        std::rotate(u.begin(), it, u.end());
        int p = ((anchor_pos % w) + w) % w;
        for (int lab : u) {
            const int len = lengths[static_cast<size_t>(posb[static_cast<size_t>(lab)])];
            for (int off = 0; off < len; ++off) {
                int x = (p + off) % w;
                if (cov[static_cast<size_t>(x)].first >= 0)
                    throw MalformedCoordinates("assemble: saddle connection overlap");
                cov[static_cast<size_t>(x)] = {lab, off};
            }
            p = (p + len) % w;
        }
        for (auto& [lab, off] : cov)
            if (lab < 0) throw MalformedCoordinates("assemble: saddle connection gap");
        return cov;
    };

    // Top of C1: sigma connections in c2's top order, sigma0 anchored at 0.
    const auto top_c1 = cover_top(coords.c2, posb2, coords.p2, coords.c2.bottom[0], 0);
    // Top of C2: tau connections in c1's top order, tau0 at 2*s0 + t_start.
    const auto top_c2 = cover_top(coords.c1, posb1, coords.p1, coords.c1.bottom[0],
                                  2 * coords.p2[0] + coords.t_start);

    std::vector<int> h(static_cast<size_t>(4 * d)), v(static_cast<size_t>(4 * d));
    for (int i = 0; i < w; ++i) {
        h[static_cast<size_t>(i)] = (i + 1) % w;
        h[static_cast<size_t>(w + i)] = w + (i + 1) % w;
    }
    for (int x = 0; x < w; ++x) {
        const auto [lab1, off1] = top_c1[static_cast<size_t>(x)];
        v[static_cast<size_t>(x)] =
            w + (bp2[static_cast<size_t>(posb2[static_cast<size_t>(lab1)])] + off1) % w;
        const auto [lab2, off2] = top_c2[static_cast<size_t>(x)];
        v[static_cast<size_t>(w + x)] =
            (bp1[static_cast<size_t>(posb1[static_cast<size_t>(lab2)])] + off2) % w;
    }
    Origami o{Perm(std::move(h)), Perm(std::move(v))};
    if (!transitive(o.h, o.v))
        throw MalformedCoordinates("assemble: disconnected surface");
    return o;
}

Stratum stratum_of(const Origami& o) {
    if (!transitive(o.h, o.v))
        throw std::invalid_argument("stratum_of: disconnected surface");
    const Perm c = corner_permutation(o.h, o.v);
    Stratum s;
    for (const auto& orbit : cycles(c)) {
        if (orbit.size() > 1)
            s.zero_orders.push_back(static_cast<int>(orbit.size()) - 1);
        else
            ++s.marked_points;
    }
    std::sort(s.zero_orders.begin(), s.zero_orders.end(), std::greater<>());
    const int total = std::accumulate(s.zero_orders.begin(), s.zero_orders.end(), 0);
    s.genus = 1 + total / 2;
    return s;
}

std::vector<Cylinder> horizontal_cylinders(const Origami& o) {
    const auto rows = cycles(o.h);
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> row_of(static_cast<size_t>(o.n_squares()));
    for (int ri = 0; ri < nrows; ++ri)
        for (int j : rows[static_cast<size_t>(ri)]) row_of[static_cast<size_t>(j)] = ri;
    const Perm c = corner_permutation(o.h, o.v);
    // The grid circle below a row is singular iff some vertex on it has cone
    // angle above 2*pi.
    std::vector<char> singular_below(static_cast<size_t>(nrows), 0);
    for (int ri = 0; ri < nrows; ++ri)
        for (int j : rows[static_cast<size_t>(ri)])
            if (c(j) != j) {
                singular_below[static_cast<size_t>(ri)] = 1;
                break;
            }
    // Row above, defined when the circle between is regular (the gluing is
    // then a rotation onto a single row).
    std::vector<int> above(static_cast<size_t>(nrows), -1);
    for (int ri = 0; ri < nrows; ++ri) {
        std::set<int> next;
        for (int j : rows[static_cast<size_t>(ri)]) next.insert(row_of[static_cast<size_t>(o.v(j))]);
        if (next.size() == 1 && !singular_below[static_cast<size_t>(*next.begin())])
            above[static_cast<size_t>(ri)] = *next.begin();
    }
    std::vector<Cylinder> out;
    std::vector<char> used(static_cast<size_t>(nrows), 0);
    auto chain_from = [&](int start) {
        int width = static_cast<int>(rows[static_cast<size_t>(start)].size());
        int height = 0;
        int r = start;
        while (r >= 0 && !used[static_cast<size_t>(r)]) {
            used[static_cast<size_t>(r)] = 1;
            ++height;
            r = above[static_cast<size_t>(r)];
        }
        out.push_back({width, height});
    };
    for (int ri = 0; ri < nrows; ++ri)
        if (!used[static_cast<size_t>(ri)] && singular_below[static_cast<size_t>(ri)]) chain_from(ri);
    for (int ri = 0; ri < nrows; ++ri)  // torus-like components: no singular circle
        if (!used[static_cast<size_t>(ri)]) chain_from(ri);
    std::sort(out.begin(), out.end());
    return out;
}

Origami shear_action(const Origami& o) {
    return {o.h, compose(o.h.inverse(), o.v)};
}

Origami rotate_action(const Origami& o) {
    return {o.v.inverse(), o.h};
}

std::vector<Origami> sl2z_orbit(const Origami& o) {
    auto [h0, v0] = canonical_pair(o.h, o.v);
    std::set<Origami> seen{{h0, v0}};
    std::vector<Origami> frontier{{h0, v0}};
    while (!frontier.empty()) {
        std::vector<Origami> next;
        for (const Origami& cur : frontier) {
            for (const Origami& img : {shear_action(cur), rotate_action(cur)}) {
                auto [hh, vv] = canonical_pair(img.h, img.v);
                Origami canon{hh, vv};
                if (seen.insert(canon).second) next.push_back(std::move(canon));
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

Rational stratum_term(const std::vector<int>& kappa) {
    Rational t(0);
    for (int m : kappa) t += Rational(static_cast<long long>(m) * (m + 2), m + 1);
    return t * Rational(1, 12);
}

Rational lyapunov_sum(const Origami& o) {
    const Stratum s = stratum_of(o);
    const auto orbit = sl2z_orbit(o);
    Rational moduli(0);
    for (const Origami& m : orbit)
        for (const Cylinder& c : horizontal_cylinders(m))
            moduli += Rational(c.height, c.width);
    return stratum_term(s.zero_orders) +
           moduli / Rational(static_cast<long long>(orbit.size()));
}

std::string to_json(const Origami& o) {
    nlohmann::json j;
    j["n"] = o.n_squares();
    j["h"] = o.h.images();
    j["v"] = o.v.images();
    return j.dump();
}

Origami origami_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Perm h(j.at("h").get<std::vector<int>>());
    Perm v(j.at("v").get<std::vector<int>>());
    if (j.contains("n") && j.at("n").get<int>() != h.size())
        throw std::invalid_argument("origami_from_json: n mismatch");
    if (h.size() != v.size())
        throw std::invalid_argument("origami_from_json: size mismatch");
    return {std::move(h), std::move(v)};
}

namespace {

std::string tuple_of(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::string bracket_of(const OneCylinderDiagram& d) {
    auto seq = [](const std::vector<int>& v) {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ", ";
            os << v[i];
        }
        os << ']';
        return os.str();
    };
    return "[" + seq(d.bottom) + ", " + seq(d.top) + "]";
}

}  // namespace

std::string to_string(const SurfaceCoordinates& c) {
    std::ostringstream os;
    os << "((" << tuple_of(c.p1) << ", " << bracket_of(c.c1) << "), " << c.t_start
       << ", (" << tuple_of(c.p2) << ", " << bracket_of(c.c2) << "))";
    return os.str();
}

SurfaceCoordinates coordinates_from_string(const std::string& s) {
    // Shape: ((P1, [[b],[t]]), t_start, (P2, [[b],[t]])). Integers are read
    // in order; bracket depth decides which list they land in.
    std::vector<std::vector<int>> lists;   // p1, c1b, c1t, p2, c2b, c2t
    std::vector<int> singles;              // t_start
    std::vector<int>* cur = nullptr;
    std::vector<std::vector<int>> stack_lists;
    int val = 0;
    bool in_num = false;
    int paren = 0, brack = 0;
    std::vector<int> pending;
    auto flush = [&](bool into_list) {
        if (!in_num) return;
        if (into_list) pending.push_back(val);
        else singles.push_back(val);
        val = 0;
        in_num = false;
    };
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') {
            val = val * 10 + (ch - '0');
            in_num = true;
            continue;
        }
        const bool inside = paren >= 3 || brack > 0;
        if (ch == '(') { flush(inside); ++paren; pending.clear(); continue; }
        if (ch == ')') {
            flush(inside);
            if (paren >= 3 && !pending.empty()) { lists.push_back(pending); pending.clear(); }
            --paren;
            continue;
        }
        if (ch == '[') { flush(inside); ++brack; if (brack == 2) pending.clear(); continue; }
        if (ch == ']') {
            flush(brack > 0);
            if (brack == 2) { lists.push_back(pending); pending.clear(); }
            --brack;
            continue;
        }
        if (ch == ',' || ch == ' ') { flush(inside); continue; }
    }
    (void)cur;
    (void)stack_lists;
    if (lists.size() != 6 || singles.size() != 1)
        throw std::invalid_argument("coordinates_from_string: malformed tuple");
    SurfaceCoordinates c;
    c.p1 = lists[0];
    c.c1 = OneCylinderDiagram{lists[1], lists[2]};
    c.t_start = singles[0];
    c.p2 = lists[3];
    c.c2 = OneCylinderDiagram{lists[4], lists[5]};
    int total = std::accumulate(c.p1.begin(), c.p1.end(), 0);
    if (total % 2 != 0)
        throw std::invalid_argument("coordinates_from_string: odd circumference");
    c.d_opt = total / 2;
    if (!c.c1.valid() || !c.c2.valid())
        throw std::invalid_argument("coordinates_from_string: invalid diagram");
    return c;
}

}  // namespace stcurve
