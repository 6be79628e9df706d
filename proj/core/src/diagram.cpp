#include "stcurve/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stcurve {

namespace {

bool is_label_sequence(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x : seq) {
        if (x < 0 || x >= n || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = 1;
    }
    return n >= 1;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
};

std::vector<int> positions_of(const std::vector<int>& seq) {
    std::vector<int> pos(seq.size());
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        pos[static_cast<size_t>(seq[static_cast<size_t>(i)])] = i;
    return pos;
}

std::vector<int> rotate_to_zero(std::vector<int> seq) {
    auto it = std::find(seq.begin(), seq.end(), 0);
    std::rotate(seq.begin(), it, seq.end());
    return seq;
}

}  // namespace

bool OneCylinderDiagram::valid() const {
    return bottom.size() == top.size() && is_label_sequence(bottom) &&
           is_label_sequence(top);
}

std::vector<int> top_left_to_right(const OneCylinderDiagram& d) {
    return {d.top.rbegin(), d.top.rend()};
}

ZeroIncidence zero_data(const OneCylinderDiagram& d) {
    if (!d.valid()) throw std::invalid_argument("zero_data: invalid diagram");
    const int n = d.n();
    const std::vector<int> posb = positions_of(d.bottom);
    const std::vector<int> u = top_left_to_right(d);
    // Corner points p_j on the bottom circle, j = left endpoint of the
    // connection at bottom position j. Adjacent connections a -> b on the top
    // glue a's right endpoint to b's left endpoint.
    UnionFind uf(n);
    for (int k = 0; k < n; ++k) {
        int a = u[static_cast<size_t>(k)];
        int b = u[static_cast<size_t>((k + 1) % n)];
        uf.unite((posb[static_cast<size_t>(a)] + 1) % n, posb[static_cast<size_t>(b)]);
    }
    std::vector<int> root_id(static_cast<size_t>(n), -1);
    std::vector<int> orders;
    std::vector<int> zero_at(static_cast<size_t>(n));
    std::vector<int> root_of(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) root_of[static_cast<size_t>(j)] = uf.find(j);
    for (int j = 0; j < n; ++j) {
        int r = root_of[static_cast<size_t>(j)];
        if (root_id[static_cast<size_t>(r)] < 0) {
            root_id[static_cast<size_t>(r)] = static_cast<int>(orders.size());
            orders.push_back(0);
        }
        zero_at[static_cast<size_t>(j)] = root_id[static_cast<size_t>(r)];
        ++orders[static_cast<size_t>(root_id[static_cast<size_t>(r)])];
    }
    for (int& o : orders) --o;  // class of size m+1 corners is a zero of order m
    ZeroIncidence z;
    z.zero_orders = orders;
    z.zero_at_corner = zero_at;
    z.incidence.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        z.incidence[static_cast<size_t>(j)] = {zero_at[static_cast<size_t>(j)],
                                               zero_at[static_cast<size_t>((j + 1) % n)]};
    return z;
}

OneCylinderDiagram rotate_diagram(const OneCylinderDiagram& d, int r) {
    const int n = d.n();
    r = ((r % n) + n) % n;
    const std::vector<int> posb = positions_of(d.bottom);
    // New label of connection x = its bottom position shifted by -r.
    std::vector<int> relabel(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        relabel[static_cast<size_t>(x)] = (posb[static_cast<size_t>(x)] - r + n) % n;
    std::vector<int> u = top_left_to_right(d);
    for (int& x : u) x = relabel[static_cast<size_t>(x)];
    u = rotate_to_zero(u);
    OneCylinderDiagram out;
    out.bottom.resize(static_cast<size_t>(n));
    std::iota(out.bottom.begin(), out.bottom.end(), 0);
    out.top = rotate_to_zero({u.rbegin(), u.rend()});
    return out;
}

std::vector<int> parity_pattern(const OneCylinderDiagram& d,
                                const std::vector<int>& bits) {
    ZeroIncidence z = zero_data(d);
    if (bits.size() < z.zero_orders.size())
        throw std::invalid_argument("parity_pattern: missing bit assignment");
    const int n = d.n();
    std::vector<int> pat(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto [l, r] = z.incidence[static_cast<size_t>(i)];
        pat[static_cast<size_t>(i)] = bits[static_cast<size_t>(l)] ^ bits[static_cast<size_t>(r)];
    }
    return pat;
}

namespace {

/// Canonical representative of a bottom-identity diagram under simultaneous
/// rotation: the lexicographically minimal stored top sequence.
std::vector<int> canonical_stored_top(const std::vector<int>& u) {
    const int n = static_cast<int>(u.size());
    std::vector<int> best;
    for (int r = 0; r < n; ++r) {
        std::vector<int> uu(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k)
            uu[static_cast<size_t>(k)] = (u[static_cast<size_t>(k)] - r + n) % n;
        uu = rotate_to_zero(uu);
        std::vector<int> stored = rotate_to_zero({uu.rbegin(), uu.rend()});
        if (best.empty() || stored < best) best = stored;
    }
    return best;
}

}  // namespace

std::vector<OneCylinderDiagram> enumerate_diagrams(const std::vector<int>& kappa) {
    if (kappa.empty()) throw std::invalid_argument("enumerate_diagrams: empty kappa");
    std::vector<int> want = kappa;
    std::sort(want.begin(), want.end(), std::greater<>());
    int n = 0;
    for (int m : want) {
        if (m < 0) throw std::invalid_argument("enumerate_diagrams: negative order");
        n += m + 1;
    }
    const bool exclude_simple_self =
        std::find(want.begin(), want.end(), 1) != want.end();

    std::vector<OneCylinderDiagram> out;
    std::set<std::vector<int>> seen;
    // Top layouts as left-to-right cyclic orders, start pinned at label 0.
    // With the bottom fixed to the identity sequence, adjacency a -> b on the
    // top glues corner a+1 to corner b; the allocation-free union-find below
    // is all the 10!-sized strata need.
    std::vector<int> u(static_cast<size_t>(n));
    u[0] = 0;
    std::vector<int> rest(static_cast<size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<int> parent(static_cast<size_t>(n));
    std::vector<int> size_of(static_cast<size_t>(n));
    std::vector<int> orders;
    orders.reserve(static_cast<size_t>(n));
    auto find_root = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    do {
        std::copy(rest.begin(), rest.end(), u.begin() + 1);
        std::iota(parent.begin(), parent.end(), 0);
        for (int k = 0; k < n; ++k) {
            int a = find_root((u[static_cast<size_t>(k)] + 1) % n);
            int b = find_root(u[static_cast<size_t>((k + 1) % n)]);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
        std::fill(size_of.begin(), size_of.end(), 0);
        for (int j = 0; j < n; ++j) ++size_of[static_cast<size_t>(find_root(j))];
        orders.clear();
        for (int j = 0; j < n; ++j)
            if (size_of[static_cast<size_t>(j)] > 0)
                orders.push_back(size_of[static_cast<size_t>(j)] - 1);
        std::sort(orders.begin(), orders.end(), std::greater<>());
        if (orders != want) continue;
        if (exclude_simple_self) {
            bool bad = false;
            for (int j = 0; j < n && !bad; ++j) {
                int l = find_root(j);
                if (l == find_root((j + 1) % n) && size_of[static_cast<size_t>(l)] == 2)
                    bad = true;
            }
            if (bad) continue;
        }
        std::vector<int> canon = canonical_stored_top(u);
        if (seen.insert(canon).second) {
            OneCylinderDiagram rep;
            rep.bottom.resize(static_cast<size_t>(n));
            std::iota(rep.bottom.begin(), rep.bottom.end(), 0);
            rep.top = std::move(canon);
            out.push_back(std::move(rep));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const OneCylinderDiagram& d) {
    auto seq = [](const std::vector<int>& v) {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
        os << ']';
        return os.str();
    };
    return "[" + seq(d.bottom) + "," + seq(d.top) + "]";
}

OneCylinderDiagram diagram_from_string(const std::string& s) {
    // Accepts "[[0,1,2],[0,1,2]]" with arbitrary spacing.
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    int val = 0;
    bool in_num = false;
    int depth = 0;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') {
            val = val * 10 + (ch - '0');
            in_num = true;
            continue;
        }
        if (in_num) {
            cur.push_back(val);
            val = 0;
            in_num = false;
        }
        if (ch == '[') ++depth;
        if (ch == ']') {
            --depth;
            if (depth == 1) {
                lists.push_back(cur);
                cur.clear();
            }
        }
    }
    if (lists.size() != 2)
        throw std::invalid_argument("diagram_from_string: expected two lists");
    OneCylinderDiagram d{lists[0], lists[1]};
    if (!d.valid()) throw std::invalid_argument("diagram_from_string: invalid diagram");
    return d;
}

}  // namespace stcurve
