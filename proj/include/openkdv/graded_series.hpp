// Truncated multivariate power series in the graded variables t_*, s_*
// with ULaurent coefficients.
//
// A GradedSeries of order N represents its value modulo terms of weighted
// degree > N: coefficients of degree <= N are exact, nothing is stored
// above N. Every operation computes the exact order of its output, so
// "equality up to truncation" is a precise relation. Orders can go
// negative (no certified content at all) and kPolyOrder marks exactly
// known polynomials.
#pragma once

#include <map>
#include <string>

#include "openkdv/monomial.hpp"
#include "openkdv/ulaurent.hpp"

namespace openkdv {

inline constexpr int kPolyOrder = 1 << 20;

class GradedSeries {
 public:
  // Zero, exactly (an empty polynomial).
  GradedSeries() : order_(kPolyOrder) {}
  explicit GradedSeries(int order) : order_(order) {}

  static GradedSeries constant(const ULaurent& c, int order = kPolyOrder);
  static GradedSeries constant(const Rational& c, int order = kPolyOrder) {
    return constant(ULaurent(c), order);
  }
  static GradedSeries one() { return constant(ULaurent(1L)); }
  static GradedSeries variable(VarIndex v, int order = kPolyOrder);
  static GradedSeries term(const Monomial& m, const ULaurent& c,
                           int order = kPolyOrder);

  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  size_t num_terms() const { return c_.size(); }
  const std::map<Monomial, ULaurent>& terms() const { return c_; }
  ULaurent coeff(const Monomial& m) const;
  ULaurent constant_term() const { return coeff(Monomial()); }

  // Lowest possible weighted degree of any true content (stored or hidden
  // behind the truncation).
  int min_degree() const;
  int max_stored_degree() const;
  // Largest weight of a stored variable of the given kind (0 if none).
  int max_var_weight(VarKind k) const;
  bool is_homogeneous(int d) const;

  void add_term(const Monomial& m, const ULaurent& c);

  // Drops terms above new_order and lowers the claimed order.
  GradedSeries truncated(int new_order) const;
  // Keeps only monomials for which keep(weight) holds for every factor
  // (sets the other variables to zero). The order is unchanged.
  template <class Pred>
  GradedSeries restricted(Pred keep) const {
    GradedSeries r(order_);
    for (const auto& [m, c] : c_) {
      bool ok = true;
      for (int w : m.factors())
        if (!keep(w)) {
          ok = false;
          break;
        }
      if (ok) r.c_.emplace(m, c);
    }
    return r;
  }
  GradedSeries homogeneous_part(int d) const;

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) {
    return a += b;
  }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) {
    return a -= b;
  }
  GradedSeries operator-() const;
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(GradedSeries a, const Rational& c);
  friend GradedSeries operator*(const Rational& c, GradedSeries a) {
    return std::move(a) * c;
  }
  friend GradedSeries operator*(GradedSeries a, const ULaurent& c);
  friend GradedSeries operator*(const ULaurent& c, GradedSeries a) {
    return std::move(a) * c;
  }

  // Formal partial derivative; the output order drops by the weight of v,
  // since the derivative of an exactly-truncated series is exact only to
  // the reduced order.
  GradedSeries partial(VarIndex v) const;
  GradedSeries partial_weight(int w) const;
  // u d/du applied to every coefficient.
  GradedSeries u_scaled() const;

  // Exact equality of both the term maps and the claimed orders.
  bool operator==(const GradedSeries&) const = default;

  std::string str() const;  // diagnostics only

 private:
  int order_;
  std::map<Monomial, ULaurent> c_;  // no zero coefficients, degree <= order_
  friend GradedSeries mul_serial(const GradedSeries&, const GradedSeries&);
  friend GradedSeries mul_parallel(const GradedSeries&, const GradedSeries&);
};

// Product kernels. mul_serial is the reference implementation;
// mul_parallel is the OpenMP kernel. Both produce identical results
// (exact arithmetic into a canonically ordered map); operator* dispatches
// on the amount of work.
GradedSeries mul_serial(const GradedSeries& a, const GradedSeries& b);
GradedSeries mul_parallel(const GradedSeries& a, const GradedSeries& b);
int product_order(const GradedSeries& a, const GradedSeries& b);

// exp(f) = sum f^k / k!; requires zero constant term.
GradedSeries series_exp(const GradedSeries& f);
// log(f) for f with constant term exactly 1.
GradedSeries series_log(const GradedSeries& f);

// True when a and b agree on every coefficient of weighted degree
// <= min(orders, through); with through < 0 nothing is certified and the
// comparison fails.
bool agree_to_order(const GradedSeries& a, const GradedSeries& b,
                    int through);
// Certified-zero check: no stored terms of degree <= through, and
// through <= order.
bool is_zero_to_order(const GradedSeries& a, int through);

}  // namespace openkdv
