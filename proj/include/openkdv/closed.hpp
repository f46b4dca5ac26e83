// The closed potential: generating series of psi-class intersection
// numbers over moduli of stable curves, computed degree by degree from
// the Virasoro constraints L_n exp(F) = 0.
#pragma once

#include <vector>

#include "openkdv/graded_series.hpp"

namespace openkdv {

// Unique t-series with zero constant term satisfying the Virasoro
// constraints through weighted degree N. The coefficient of
// u^{2g-2} prod t_{k_i} is <tau_{k_1}...tau_{k_n}>_g / prod_j m_j!
// (m_j = exponent multiplicities).
GradedSeries compute_fc(int N);

// Correlator <tau_{k_1}...tau_{k_n}>_g read off the series. Returns 0
// when the dimension constraint sum k_i = 3g-3+n fails; throws when the
// requested degree exceeds the truncation.
Rational closed_correlator(const GradedSeries& fc, int g,
                           const std::vector<int>& insertions);

// (sum_i (1-i) t_i d/dt_i + (3/2) u d/du) applied to fc; identically zero
// for the genuine potential because nonzero correlators sit on the
// dimension shell.
GradedSeries homogeneity_residual_closed(const GradedSeries& fc);

// Every stored term has u-exponent 2g-2 and t-exponents {k_i} with
// sum k_i = 3g-3+n and 2g-2+n > 0; false indicates a corrupted series.
bool dimension_constraint_holds(const GradedSeries& fc);

}  // namespace openkdv
