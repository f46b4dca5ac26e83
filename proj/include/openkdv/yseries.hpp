// Laurent series in y (= z^{-1}) with ULaurent coefficients: the Airy
// family A, B, D and the Laurent polynomials Q_n, R_n live here.
//
// ord is the exactness bound: coefficients of y^k for k <= ord are exact,
// nothing is stored above ord. Negative exponents are allowed and always
// finitely many.
#pragma once

#include <map>
#include <string>

#include "openkdv/graded_series.hpp"  // for kPolyOrder
#include "openkdv/ulaurent.hpp"

namespace openkdv {

class YSeries {
 public:
  YSeries() : ord_(kPolyOrder) {}
  explicit YSeries(int ord) : ord_(ord) {}

  static YSeries constant(const ULaurent& c, int ord = kPolyOrder);
  static YSeries one() { return constant(ULaurent(1L)); }
  static YSeries ypow(int k, const ULaurent& c = ULaurent(1L),
                      int ord = kPolyOrder);

  int ord() const { return ord_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<int, ULaurent>& terms() const { return c_; }
  ULaurent coeff(int k) const;
  int min_exp() const;  // lowest possible exponent of true content
  void add_term(int k, const ULaurent& c);
  YSeries truncated(int ord) const;

  YSeries& operator+=(const YSeries& o);
  YSeries& operator-=(const YSeries& o);
  friend YSeries operator+(YSeries a, const YSeries& b) { return a += b; }
  friend YSeries operator-(YSeries a, const YSeries& b) { return a -= b; }
  YSeries operator-() const;
  friend YSeries operator*(const YSeries& a, const YSeries& b);
  friend YSeries operator*(YSeries a, const ULaurent& c);
  friend YSeries operator*(const ULaurent& c, YSeries a) {
    return std::move(a) * c;
  }
  friend YSeries operator*(YSeries a, const Rational& c) {
    return std::move(a) * ULaurent(c);
  }

  // y -> -y (sign per exponent).
  YSeries negated_y() const;
  // multiplication by y^k
  YSeries shifted(int k) const;
  YSeries deriv_y() const;

  // All exponents even?
  bool even_in_y() const;
  // All exponents <= 0?
  bool only_nonpositive_y() const;

  bool operator==(const YSeries&) const = default;
  std::string str() const;

 private:
  int ord_;
  std::map<int, ULaurent> c_;
};

// Do a and b agree on all coefficients of y^k, k <= through?
bool yagree_to_order(const YSeries& a, const YSeries& b, int through);

}  // namespace openkdv
