#ifndef STCURVE_COMPOSITION_HPP
#define STCURVE_COMPOSITION_HPP

#include <functional>
#include <optional>
#include <vector>

namespace stcurve {

/// Constraints for ordered compositions of `total` into `parts` positive
/// entries: exactly odd_count odd entries, first entry within
/// [first_min, first_max] (optionally of fixed parity) and maximal.
struct CompositionSpec {
    int total = 0;
    int parts = 0;
    int odd_count = 0;
    int first_min = 1;
    int first_max = 0;
    std::optional<int> first_parity;  // 0 even, 1 odd
};

/// Does a composition of total into `parts` entries in [1, mx] with exactly
/// odd_count odd entries and first entry mx (a maximum) exist?
bool feasible_with_max(int total, int parts, int odd_count, int mx);

/// Range of admissible first elements: min is the smallest feasible maximum,
/// max is floor((total - 2*partner_first_min)/2), adjusted down to the
/// required parity when odd_count forces one (all odd or all even). Returns
/// nullopt when empty.
std::optional<std::pair<int, int>> first_element_range(int total, int parts,
                                                       int odd_count,
                                                       int partner_first_min);

/// Emits every composition matching spec in lexicographic order.
void generate(const CompositionSpec& spec,
              const std::function<void(const std::vector<int>&)>& sink);

/// Convenience: collect the stream.
std::vector<std::vector<int>> generate_all(const CompositionSpec& spec);

}  // namespace stcurve

#endif
