#include "stcurve/cases.hpp"

#include <algorithm>
#include <sstream>

namespace stcurve {

const std::map<std::vector<int>, int>& stratum_table() {
    static const std::map<std::vector<int>, int> table = {
        {{1, 1, 1, 1}, 2},
        {{1, 1, 1, 1, 1, 1}, 4},
        {{2, 2, 2}, 3},
        {{2, 1, 1, 1, 1, 1, 1}, 36},
        {{2, 2, 1, 1, 1, 1}, 18},
        {{2, 2, 2, 1, 1}, 12},
        {{2, 2, 2, 2}, 9},
        {{3, 1, 1, 1, 1, 1}, 16},
        {{3, 3, 1, 1}, 8},
        {{4, 1, 1, 1, 1}, 10},
    };
    return table;
}

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

}  // namespace

int d_opt_of(const std::vector<int>& stratum) {
    auto it = stratum_table().find(sorted_desc(stratum));
    if (it == stratum_table().end())
        throw std::invalid_argument("stratum " + stratum_name(stratum) +
                                    " cannot carry an ST-curve");
    return it->second;
}

std::vector<BranchingCase> enumerate_cases(const std::vector<int>& stratum) {
    const std::vector<int> st = sorted_desc(stratum);
    const int d = d_opt_of(st);
    auto mk = [&](std::vector<int> k1, BitMode m1, std::vector<int> k2, BitMode m2) {
        return BranchingCase{st, d, {sorted_desc(std::move(k1)), m1},
                             {sorted_desc(std::move(k2)), m2}};
    };
    std::vector<BranchingCase> out;
    const auto even = BitMode::kEvenMarkedSimple;
    if (st == std::vector<int>{1, 1, 1, 1}) {
        out.push_back(mk({1, 1}, even, {1, 1}, even));
    } else if (st == std::vector<int>{1, 1, 1, 1, 1, 1}) {
        // both extra simple zeros over the origin
        out.push_back(mk({1, 1, 1, 1}, even, {1, 1}, even));
    } else if (st == std::vector<int>{2, 1, 1, 1, 1, 1, 1}) {
        // all three extra zeros over one point / simple pair and double split
        out.push_back(mk({2, 1, 1, 1, 1}, even, {1, 1}, even));
        out.push_back(mk({1, 1, 1, 1}, even, {2, 1, 1}, even));
    } else if (st == std::vector<int>{2, 2, 1, 1, 1, 1}) {
        out.push_back(mk({2, 2, 1, 1}, even, {1, 1}, even));
        out.push_back(mk({2, 1, 1}, even, {2, 1, 1}, even));
    } else if (st == std::vector<int>{2, 2, 2, 1, 1}) {
        // every 2-torsion point needs an odd-order zero; only two exist
    } else if (st == std::vector<int>{3, 1, 1, 1, 1, 1}) {
        out.push_back(mk({1, 1, 1, 1}, even, {3, 1}, even));
        out.push_back(mk({3, 1, 1, 1}, even, {1, 1}, even));
    } else if (st == std::vector<int>{3, 3, 1, 1}) {
        out.push_back(mk({3, 1}, even, {3, 1}, even));
    } else if (st == std::vector<int>{4, 1, 1, 1, 1}) {
        out.push_back(mk({4, 1, 1}, even, {1, 1}, even));
    } else if (st == std::vector<int>{2, 2, 2}) {
        out.push_back(mk({2, 2}, BitMode::kOddPair, {2}, BitMode::kOddSinglePoint));
    } else if (st == std::vector<int>{2, 2, 2, 2}) {
        out.push_back(mk({2, 2}, BitMode::kOddPair, {2, 2}, BitMode::kOddPair));
        out.push_back(mk({2, 2, 2}, BitMode::kOddIsolated, {2}, BitMode::kOddSinglePoint));
    }
    return out;
}

std::vector<std::vector<int>> bit_assignments(BitMode mode,
                                              const std::vector<int>& zero_orders) {
    const int nz = static_cast<int>(zero_orders.size());
    std::vector<std::vector<int>> out;
    switch (mode) {
        case BitMode::kEvenMarkedSimple:
            for (int z = 0; z < nz; ++z) {
                if (zero_orders[static_cast<size_t>(z)] != 1) continue;
                std::vector<int> bits(static_cast<size_t>(nz), 0);
                bits[static_cast<size_t>(z)] = 1;
                out.push_back(std::move(bits));
            }
            break;
        case BitMode::kOddSinglePoint:
            out.emplace_back(static_cast<size_t>(nz), 0);
            break;
        case BitMode::kOddPair: {
            // complementing all bits preserves every XOR, so one marking is
            // enough
            std::vector<int> bits(static_cast<size_t>(nz), 0);
            bits[0] = 1;
            out.push_back(std::move(bits));
            break;
        }
        case BitMode::kOddIsolated:
            for (int z = 0; z < nz; ++z) {
                std::vector<int> bits(static_cast<size_t>(nz), 0);
                bits[static_cast<size_t>(z)] = 1;
                out.push_back(std::move(bits));
            }
            break;
    }
    return out;
}

std::string stratum_name(const std::vector<int>& kappa) {
    std::ostringstream os;
    os << "H(";
    const auto s = sorted_desc(kappa);
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << ")";
    return os.str();
}

std::string stratum_tag(const std::vector<int>& kappa) {
    std::ostringstream os;
    os << "H";
    for (int m : sorted_desc(kappa)) os << "_" << m;
    return os.str();
}

std::vector<int> stratum_from_string(const std::string& s) {
    std::vector<int> out;
    int val = 0;
    bool in_num = false;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') {
            val = val * 10 + (ch - '0');
            in_num = true;
        } else {
            if (in_num) out.push_back(val);
            val = 0;
            in_num = false;
        }
    }
    if (in_num) out.push_back(val);
    if (out.empty()) throw std::invalid_argument("empty stratum");
    return sorted_desc(out);
}

}  // namespace stcurve
