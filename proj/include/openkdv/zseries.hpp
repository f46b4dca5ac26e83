// Laurent series in the spectral variable z with GradedSeries
// coefficients: the home of exp(xi), dressing symbols and wave functions.
//
// A ZSeries stores coefficients on an explicit exponent window [lo, hi];
// absent exponents inside the window are zero. Exactness in the graded
// directions rides on the per-coefficient GradedSeries orders; exactness
// in z is a per-operation contract documented at each call site (the
// degree grading of exp(xi) is what makes the mixed products below
// well-defined).
#pragma once

#include <map>

#include "openkdv/graded_series.hpp"

namespace openkdv {

class ZSeries {
 public:
  ZSeries() : lo_(0), hi_(0) {}
  ZSeries(int lo, int hi) : lo_(lo), hi_(hi) {}

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const std::map<int, GradedSeries>& coeffs() const { return c_; }
  GradedSeries coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? GradedSeries() : it->second;
  }
  void set_coeff(int k, GradedSeries g);
  bool empty() const { return c_.empty(); }

  ZSeries clipped(int lo, int hi) const;

  bool operator==(const ZSeries&) const = default;

 private:
  int lo_, hi_;
  std::map<int, GradedSeries> c_;
};

ZSeries zs_add(const ZSeries& a, const ZSeries& b);
ZSeries zs_sub(const ZSeries& a, const ZSeries& b);
ZSeries zs_neg(const ZSeries& a);
// Convolution, keeping exponents in [lo, hi] and truncating every
// coefficient at degree_cap.
ZSeries zs_mul(const ZSeries& a, const ZSeries& b, int lo, int hi,
               int degree_cap = kPolyOrder);
ZSeries zs_scale(const ZSeries& a, const ULaurent& c);
// Multiplication by z^dz.
ZSeries zs_shift(const ZSeries& a, int dz);
// exp of a series supported on [lo, -1] (resp. [1, hi]); the z-grading
// bounds the number of factors.
ZSeries zs_exp_nonpos(const ZSeries& g, int lo, int degree_cap = kPolyOrder);
ZSeries zs_exp_pos(const ZSeries& g, int hi, int degree_cap = kPolyOrder);
// Coefficient-wise partial derivative.
ZSeries zs_partial(const ZSeries& a, VarIndex v);

// Is every coefficient of z^j weighted-homogeneous of degree exactly j?
bool zs_graded(const ZSeries& a);

// Coefficient of z^0 in left*right for left supported on exponents <= 0
// and right supported on exponents >= 0 with z^j coefficient homogeneous
// of degree j. The grading makes the sum finite and keeps the result
// exact to the full truncation order.
GradedSeries zs_coef0_product(const ZSeries& left, const ZSeries& right);

}  // namespace openkdv
