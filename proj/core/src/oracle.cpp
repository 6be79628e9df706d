#include "stcurve/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "stcurve/pipeline.hpp"

namespace stcurve {

namespace {

/// Cheap slope check on raw image arrays: cycle type of h^k v must be
/// {2d, 2d} for k = 0..d (k = 0 is the vertical condition).
bool slopes_ok(const std::vector<int>& hk_of, const std::vector<int>& v, int d) {
    const int n = static_cast<int>(v.size());
    const int target = 2 * d;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int ncyc = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
            j = hk_of[static_cast<size_t>(v[static_cast<size_t>(j)])];
        }
        if (len != target) return false;
        ++ncyc;
    }
    return ncyc == 2;
}

bool transitive_raw(const std::vector<int>& h, const std::vector<int>& v) {
    const int n = static_cast<int>(h.size());
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : {h[static_cast<size_t>(i)], v[static_cast<size_t>(i)]}) {
            if (!seen[static_cast<size_t>(j)]) {
                seen[static_cast<size_t>(j)] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == n;
}

}  // namespace

std::vector<CertifiedSurface> oracle_enumerate(int n_squares,
                                               const std::vector<int>& stratum) {
    // kappa {0}: marked-torus covers (degree-1 optimal cover); verifies that
    // nothing of genus below three ever certifies
    const bool torus = stratum == std::vector<int>{0};
    const int d = torus ? 1 : d_opt_of(stratum);
    if (n_squares != 4 * d)
        throw std::invalid_argument("oracle: n_squares must be 4*d_opt for the stratum");
    const int n = n_squares;
    const int w = 2 * d;
    std::vector<int> want = torus ? std::vector<int>{} : stratum;
    std::sort(want.begin(), want.end(), std::greater<>());
    const std::vector<Cylinder> two_rows{{w, 1}, {w, 1}};

    // h fixed to the standard two-row form; every pair with h of cycle type
    // {2d, 2d} is simultaneously conjugate to one of these, and the canonical
    // reduction at the end removes the leftover relabeling redundancy.
    std::vector<int> h(static_cast<size_t>(n));
    for (int i = 0; i < w; ++i) {
        h[static_cast<size_t>(i)] = (i + 1) % w;
        h[static_cast<size_t>(w + i)] = w + (i + 1) % w;
    }
    // Powers h^k as image arrays, k = 0..d.
    std::vector<std::vector<int>> hpow(static_cast<size_t>(d + 1));
    hpow[0].resize(static_cast<size_t>(n));
    std::iota(hpow[0].begin(), hpow[0].end(), 0);
    for (int k = 1; k <= d; ++k) {
        hpow[static_cast<size_t>(k)].resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            hpow[static_cast<size_t>(k)][static_cast<size_t>(i)] =
                h[static_cast<size_t>(hpow[static_cast<size_t>(k - 1)][static_cast<size_t>(i)])];
    }

    std::vector<Origami> survivors;
    std::vector<int> v(static_cast<size_t>(n));

    // Enumerate v of cycle type {2d, 2d}: split the labels into the cycle
    // through 0 and its complement, then sweep the cyclic arrangements.
    std::vector<int> members(static_cast<size_t>(n - 1));
    std::iota(members.begin(), members.end(), 1);
    std::vector<char> pick(static_cast<size_t>(n - 1), 0);
    std::fill(pick.begin(), pick.begin() + (w - 1), 1);
    std::sort(pick.begin(), pick.end(), std::greater<char>());
    // iterate subsets of size w-1 from members via permutations of the mask
    std::vector<int> setA, setB;
    do {
        setA.clear();
        setB.clear();
        for (int i = 0; i < n - 1; ++i)
            (pick[static_cast<size_t>(i)] ? setA : setB).push_back(members[static_cast<size_t>(i)]);
        // cycle A: 0 -> a_0 -> a_1 -> ... -> 0 over permutations of setA
        std::sort(setA.begin(), setA.end());
        do {
            // cycle B: b_min -> ... (fix the smallest first to mod out rotation)
            std::vector<int> restB(setB.begin() + 1, setB.end());
            std::sort(restB.begin(), restB.end());
            do {
                int prev = 0;
                for (int x : setA) {
                    v[static_cast<size_t>(prev)] = x;
                    prev = x;
                }
                v[static_cast<size_t>(prev)] = 0;
                prev = setB[0];
                for (int x : restB) {
                    v[static_cast<size_t>(prev)] = x;
                    prev = x;
                }
                v[static_cast<size_t>(prev)] = setB[0];

                bool ok = true;
                for (int k = 1; k <= d && ok; ++k)
                    ok = slopes_ok(hpow[static_cast<size_t>(k)], v, d);
                if (!ok) continue;
                if (!transitive_raw(h, v)) continue;
                Origami o{Perm(h), Perm(v)};
                Stratum s = stratum_of(o);
                if (s.zero_orders != want) continue;
                if (horizontal_cylinders(o) != two_rows) continue;
                survivors.push_back(std::move(o));
            } while (std::next_permutation(restB.begin(), restB.end()));
        } while (std::next_permutation(setA.begin(), setA.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));

    auto reduced = reduce_and_certify(survivors);
    std::vector<CertifiedSurface> out;
    for (auto& c : reduced)
        if (c.certified) out.push_back(std::move(c));
    return out;
}

std::vector<std::string> oracle_records(int n_squares,
                                        const std::vector<int>& stratum) {
    std::vector<std::string> lines;
    for (const auto& c : oracle_enumerate(n_squares, stratum))
        lines.push_back(certified_record(c));
    return lines;
}

}  // namespace stcurve
