#ifndef STCURVE_CASES_HPP
#define STCURVE_CASES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stcurve {

/// Strata that can carry an ST-curve, with the degree of the optimal torus
/// cover. Keys are zero-order multisets in descending order.
const std::map<std::vector<int>, int>& stratum_table();

/// Throws std::invalid_argument for strata outside the table.
int d_opt_of(const std::vector<int>& stratum);

/// How 2-torsion x-coordinate bits attach to the zeros of one boundary.
enum class BitMode {
    kEvenMarkedSimple,  // even d_opt: the lone zero over x=1 is simple; every
                        // choice of simple zero is a candidate
    kOddSinglePoint,    // all zeros over one point: all bits 0
    kOddPair,           // two zeros over distinct x: bits (1,0); complement
                        // gives the same parity pattern
    kOddIsolated,       // three zeros, one alone over its point: all three
                        // choices of the isolated zero
};

struct BoundarySpec {
    std::vector<int> kappa;  // descending
    BitMode mode;
};

/// One admissible assignment of a stratum's zeros to the 2-torsion points,
/// split along the two horizontal lines of the 2x2 torus.
struct BranchingCase {
    std::vector<int> stratum;
    int d_opt = 0;
    BoundarySpec boundary1;  // tau circle
    BoundarySpec boundary2;  // sigma circle
};

/// The resolved case list per stratum; empty exactly for H(2,2,2,1,1).
std::vector<BranchingCase> enumerate_cases(const std::vector<int>& stratum);

/// Bit vectors (indexed by zero id) admissible for a concrete diagram whose
/// zeros have the given orders.
std::vector<std::vector<int>> bit_assignments(BitMode mode,
                                              const std::vector<int>& zero_orders);

/// "H(2,1,1)" and the file tag "H_2_1_1".
std::string stratum_name(const std::vector<int>& kappa);
std::string stratum_tag(const std::vector<int>& kappa);
std::vector<int> stratum_from_string(const std::string& s);

}  // namespace stcurve

#endif
