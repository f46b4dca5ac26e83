// The three Virasoro families: the closed operators L_n, the open
// operators with boundary variable s, and the extended-open operators
// acting on all boundary descendants s_0, s_1, ...
#pragma once

#include "openkdv/graded_series.hpp"

namespace openkdv {

enum class VirasoroFamily { Closed, Open, ExtendedOpen };

// Exact application of the n-th operator (n >= -1) of the family to f.
// The result order is reduced by the operator's largest degree drop,
// 2n+3, coming from the dilaton shift.
GradedSeries apply_virasoro(VirasoroFamily fam, int n, const GradedSeries& f);

// Residual of the constraint on the exponentiated potential: the operator
// applied to exp(Fc) (closed family) or exp(F_open + Fc) (open families).
GradedSeries virasoro_residual(VirasoroFamily fam, int n,
                               const GradedSeries& F_open,
                               const GradedSeries& Fc);

// Difference of the extended-open and open applications to
// exp(F_ext + Fc), restricted to s_{>=1} = 0; zero whenever the
// wave-function equations hold for F_ext.
GradedSeries reduction_check(const GradedSeries& F_ext, const GradedSeries& Fc,
                             int n);

// Largest degree through which a residual of the n-th operator on an
// order-`ord` input is certified.
inline int virasoro_window(int n, int ord) { return ord - (2 * n + 3); }

}  // namespace openkdv
