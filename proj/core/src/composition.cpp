#include "stcurve/composition.hpp"

#include <stdexcept>

namespace stcurve {

bool feasible_with_max(int total, int parts, int odd_count, int mx) {
    if (parts <= 0 || mx < 1 || odd_count < 0 || odd_count > parts) return false;
    const int rem = total - mx;
    const int p = parts - 1;
    const int o = odd_count - (mx & 1);
    if (o < 0 || o > p) return false;
    if (p == 0) return rem == 0;
    if (rem < p) return false;
    const int max_odd = (mx & 1) ? mx : mx - 1;
    const int max_even = (mx & 1) ? mx - 1 : mx;
    if (o > 0 && max_odd < 1) return false;
    if (p - o > 0 && max_even < 2) return false;
    const int min_sum = o + 2 * (p - o);
    const long long max_sum =
        static_cast<long long>(o) * max_odd + static_cast<long long>(p - o) * max_even;
    if (rem < min_sum || rem > max_sum) return false;
    return (rem - o) % 2 == 0;
}

std::optional<std::pair<int, int>> first_element_range(int total, int parts,
                                                       int odd_count,
                                                       int partner_first_min) {
    if (parts <= 0 || total < parts) return std::nullopt;
    int lo = -1;
    for (int m = (total + parts - 1) / parts; m <= total - parts + 1; ++m) {
        if (feasible_with_max(total, parts, odd_count, m)) {
            lo = m;
            break;
        }
    }
    if (lo < 0) return std::nullopt;
    int hi = (total - 2 * partner_first_min) / 2;
    std::optional<int> parity;
    if (odd_count == parts) parity = 1;
    else if (odd_count == 0) parity = 0;
    if (parity) {
        if ((hi & 1) != *parity) --hi;
        if ((lo & 1) != *parity) {
            int m = lo + 1;
            while (m <= hi && !feasible_with_max(total, parts, odd_count, m)) m += 2;
            lo = m;
        }
    }
    if (lo > hi) return std::nullopt;
    return std::pair{lo, hi};
}

namespace {

struct Generator {
    const CompositionSpec& spec;
    const std::function<void(const std::vector<int>&)>& sink;
    std::vector<int> cur;

    void emit_from(int first) {
        cur.assign(1, first);
        descend(1, spec.total - first, spec.odd_count - (first & 1));
    }

    void descend(int pos, int rem, int odd_left) {
        const int first = cur[0];
        const int left = spec.parts - pos;
        if (left == 0) {
            if (rem == 0 && odd_left == 0) sink(cur);
            return;
        }
        const int max_odd = (first & 1) ? first : first - 1;
        const int max_even = (first & 1) ? first - 1 : first;
        int cap = rem - (left - 1);
        if (cap > first) cap = first;
        for (int val = 1; val <= cap; ++val) {
            const int o2 = odd_left - (val & 1);
            if (o2 < 0) continue;
            const int rem2 = rem - val;
            const int lm = left - 1;
            if (lm < o2) continue;
            if (lm == 0) {
                if (rem2 == 0 && o2 == 0) {
                    cur.push_back(val);
                    sink(cur);
                    cur.pop_back();
                }
                continue;
            }
            if (o2 > 0 && max_odd < 1) continue;
            if (lm - o2 > 0 && max_even < 2) continue;
            const int min_sum = o2 + 2 * (lm - o2);
            const long long max_sum = static_cast<long long>(o2) * max_odd +
                                      static_cast<long long>(lm - o2) * max_even;
            if (rem2 < min_sum || rem2 > max_sum) continue;
            if ((rem2 - o2) % 2 != 0) continue;
            cur.push_back(val);
            descend(pos + 1, rem2, o2);
            cur.pop_back();
        }
    }
};

}  // namespace

void generate(const CompositionSpec& spec,
              const std::function<void(const std::vector<int>&)>& sink) {
    if (spec.parts <= 0 || spec.total < spec.parts) return;
    if (spec.odd_count < 0 || spec.odd_count > spec.parts) return;
    Generator g{spec, sink, {}};
    for (int first = spec.first_min; first <= spec.first_max; ++first) {
        if (spec.first_parity && (first & 1) != *spec.first_parity) continue;
        if (!feasible_with_max(spec.total, spec.parts, spec.odd_count, first)) continue;
        g.emit_from(first);
    }
}

std::vector<std::vector<int>> generate_all(const CompositionSpec& spec) {
    std::vector<std::vector<int>> out;
    generate(spec, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

}  // namespace stcurve
