// Laurent polynomials in the genus-bookkeeping variable u, over Rational.
#pragma once

#include <map>
#include <string>

#include "openkdv/rational.hpp"

namespace openkdv {

// Finite sum of c_e * u^e with integer (possibly negative) exponents.
// Never stores a zero coefficient.
class ULaurent {
 public:
  ULaurent() = default;
  ULaurent(const Rational& c) { set(0, c); }
  ULaurent(long c) { set(0, Rational(c)); }

  static ULaurent upow(int e, const Rational& c = Rational(1)) {
    ULaurent r;
    r.set(e, c);
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Rational>& terms() const { return c_; }
  Rational coeff(int uexp) const {
    auto it = c_.find(uexp);
    return it == c_.end() ? Rational(0) : it->second;
  }

  ULaurent& operator+=(const ULaurent& o);
  ULaurent& operator-=(const ULaurent& o);
  ULaurent& operator*=(const Rational& c);
  friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
  friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
  friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
  friend ULaurent operator*(ULaurent a, const Rational& c) { return a *= c; }
  friend ULaurent operator*(const Rational& c, ULaurent a) { return a *= c; }
  ULaurent operator-() const;

  // Multiplication by u^du.
  ULaurent shifted(int du) const;
  // The Euler operator u d/du: multiplies each u^e term by e.
  ULaurent u_scaled() const;

  bool operator==(const ULaurent&) const = default;

  void add_term(int uexp, const Rational& c);
  std::string str() const;  // diagnostics only

 private:
  std::map<int, Rational> c_;
  void set(int e, const Rational& c) {
    if (c != 0) c_[e] = c;
  }
};

}  // namespace openkdv
