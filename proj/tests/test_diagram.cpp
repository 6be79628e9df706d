#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "stcurve/diagram.hpp"

using namespace stcurve;

namespace {

std::vector<int> sorted_orders(const OneCylinderDiagram& d) {
    auto z = zero_data(d);
    std::sort(z.zero_orders.begin(), z.zero_orders.end(), std::greater<>());
    return z.zero_orders;
}

// Test-side oracle: every top sequence, filtered on zero orders and the
// simple-zero self-connection rule, then reduced by trying all simultaneous
// rotations directly (no canonicalization shortcut).
std::set<OneCylinderDiagram> brute_force_diagrams(const std::vector<int>& kappa) {
    std::vector<int> want = kappa;
    std::sort(want.begin(), want.end(), std::greater<>());
    int n = std::accumulate(want.begin(), want.end(), 0) + static_cast<int>(want.size());
    const bool excl = std::find(want.begin(), want.end(), 1) != want.end();
    std::vector<int> rest(static_cast<size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::set<OneCylinderDiagram> reps;
    do {
        std::vector<int> stored{0};
        stored.insert(stored.end(), rest.begin(), rest.end());
        OneCylinderDiagram d;
        d.bottom.resize(static_cast<size_t>(n));
        std::iota(d.bottom.begin(), d.bottom.end(), 0);
        d.top = stored;
        if (sorted_orders(d) != want) continue;
        if (excl) {
            auto z = zero_data(d);
            bool bad = false;
            for (auto [l, r] : z.incidence)
                if (l == r && z.zero_orders[static_cast<size_t>(l)] == 1) bad = true;
            if (bad) continue;
        }
        // reduce by rotations, smallest stored top wins
        OneCylinderDiagram best = d;
        for (int r = 1; r < n; ++r) {
            OneCylinderDiagram rd = rotate_diagram(d, r);
            if (rd.top < best.top) best = rd;
        }
        reps.insert(best);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return reps;
}

}  // namespace

TEST_CASE("zero orders of the anchor diagrams") {
    CHECK(sorted_orders({{0, 1, 2}, {0, 1, 2}}) == std::vector<int>{2});
    CHECK(sorted_orders({{0}, {0}}) == std::vector<int>{0});
    // published coordinates keep their own labels; the bottom sequence is not
    // the identity and the orders still come out right
    OneCylinderDiagram orni{{0, 5, 3, 1, 2, 4}, {0, 5, 3, 1, 2, 4}};
    CHECK(sorted_orders(orni) == std::vector<int>{2, 2});
    CHECK(sorted_orders({{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}) ==
          std::vector<int>{2, 2});
}

TEST_CASE("zero_data incidence is consistent") {
    OneCylinderDiagram d{{0, 1, 2, 3}, {0, 1, 2, 3}};  // the H(1,1) diagram
    auto z = zero_data(d);
    std::vector<int> orders = z.zero_orders;
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<int>{1, 1});
    // every connection joins the two distinct simple zeros
    for (auto [l, r] : z.incidence) CHECK(l != r);
    // n = sum of orders + number of zeros
    CHECK(d.n() == std::accumulate(z.zero_orders.begin(), z.zero_orders.end(), 0) +
                       static_cast<int>(z.zero_orders.size()));
}

TEST_CASE("enumerate_diagrams anchors") {
    auto h2 = enumerate_diagrams({2});
    REQUIRE(h2.size() == 1);
    CHECK(to_string(h2[0]) == "[[0,1,2],[0,1,2]]");

    auto h11 = enumerate_diagrams({1, 1});
    REQUIRE(h11.size() == 1);
    CHECK(h11[0].n() == 4);

    auto h22 = enumerate_diagrams({2, 2});
    CHECK(h22.size() == 4);

    auto big = enumerate_diagrams({2, 1, 1, 1, 1});
    CHECK(big.size() == 495);
    for (const auto& d : big) CHECK(d.n() == 11);

    CHECK(enumerate_diagrams({0}).size() == 1);  // the marked torus
}

TEST_CASE("enumeration matches the brute-force oracle") {
    for (const std::vector<int>& kappa :
         {std::vector<int>{2}, {1, 1}, {2, 2}, {1, 1, 1, 1}}) {
        auto fast = enumerate_diagrams(kappa);
        auto slow = brute_force_diagrams(kappa);
        CHECK(fast.size() == slow.size());
        for (const auto& d : fast) CHECK(slow.contains(d));
    }
}

TEST_CASE("enumerated diagrams are rotation-distinct") {
    for (const std::vector<int>& kappa : {std::vector<int>{2, 2}, {1, 1, 1, 1}}) {
        auto ds = enumerate_diagrams(kappa);
        for (size_t i = 0; i < ds.size(); ++i) {
            for (size_t j = i + 1; j < ds.size(); ++j) {
                for (int r = 0; r < ds[i].n(); ++r)
                    CHECK(rotate_diagram(ds[i], r) != ds[j]);
            }
        }
    }
}

TEST_CASE("parity patterns") {
    OneCylinderDiagram h11{{0, 1, 2, 3}, {0, 1, 2, 3}};
    auto z = zero_data(h11);
    REQUIRE(z.zero_orders.size() == 2);
    SUBCASE("all bits zero gives the zero pattern") {
        auto pat = parity_pattern(h11, {0, 0});
        CHECK(pat == std::vector<int>{0, 0, 0, 0});
    }
    SUBCASE("marking one simple zero lights all four connections") {
        auto pat = parity_pattern(h11, {1, 0});
        CHECK(std::accumulate(pat.begin(), pat.end(), 0) == 4);
    }
    SUBCASE("published Ornithorynque diagram is all odd") {
        OneCylinderDiagram orni{{0, 5, 3, 1, 2, 4}, {0, 5, 3, 1, 2, 4}};
        auto pat = parity_pattern(orni, {1, 0});
        CHECK(pat == std::vector<int>{1, 1, 1, 1, 1, 1});
    }
    SUBCASE("missing bits throw") {
        CHECK_THROWS_AS(parity_pattern(h11, {1}), std::invalid_argument);
    }
}

TEST_CASE("parity patterns have even weight") {
    for (const std::vector<int>& kappa :
         {std::vector<int>{2}, {1, 1}, {2, 2}, {2, 1, 1}, {3, 1}}) {
        for (const auto& d : enumerate_diagrams(kappa)) {
            auto z = zero_data(d);
            const int nz = static_cast<int>(z.zero_orders.size());
            for (int mask = 0; mask < (1 << nz); ++mask) {
                std::vector<int> bits(static_cast<size_t>(nz));
                for (int i = 0; i < nz; ++i) bits[static_cast<size_t>(i)] = (mask >> i) & 1;
                auto pat = parity_pattern(d, bits);
                CHECK(std::accumulate(pat.begin(), pat.end(), 0) % 2 == 0);
            }
        }
    }
}

TEST_CASE("rotation keeps the surface") {
    OneCylinderDiagram d{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}};
    for (int r = 0; r < 6; ++r) {
        OneCylinderDiagram rd = rotate_diagram(d, r);
        CHECK(sorted_orders(rd) == sorted_orders(d));
        CHECK(rd.bottom == std::vector<int>{0, 1, 2, 3, 4, 5});
    }
    // rotating by n is the identity
    CHECK(rotate_diagram(d, 6) == rotate_diagram(d, 0));
}

TEST_CASE("serialization round trip") {
    OneCylinderDiagram d{{0, 5, 3, 1, 2, 4}, {0, 5, 3, 1, 2, 4}};
    CHECK(diagram_from_string(to_string(d)) == d);
    CHECK(diagram_from_string("[[0, 1, 2], [0, 1, 2]]") ==
          OneCylinderDiagram{{0, 1, 2}, {0, 1, 2}});
    CHECK_THROWS(diagram_from_string("[[0,1],[0]]"));
}
