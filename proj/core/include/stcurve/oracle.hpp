#ifndef STCURVE_ORACLE_HPP
#define STCURVE_ORACLE_HPP

#include <string>
#include <vector>

#include "stcurve/search.hpp"

namespace stcurve {

/// Exhaustive check of the pipeline at desk scale: enumerates every origami
/// on n_squares squares with h two long rows, v mapping rows alternately,
/// filters by the geometric predicates computed directly on (h, v) (two
/// unit-height horizontal cylinders, vertical and slope conditions, stratum),
/// and reduces by canonical pair. Same record format as the pipeline's
/// certified_list, so outputs can be diffed byte for byte.
/// n_squares must be 4*d for the stratum's d_opt.
std::vector<CertifiedSurface> oracle_enumerate(int n_squares,
                                               const std::vector<int>& stratum);

std::vector<std::string> oracle_records(int n_squares,
                                        const std::vector<int>& stratum);

}  // namespace stcurve

#endif
