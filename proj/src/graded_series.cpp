#include "openkdv/graded_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace openkdv {

GradedSeries GradedSeries::constant(const ULaurent& c, int order) {
  GradedSeries r(order);
  r.add_term(Monomial(), c);
  return r;
}

GradedSeries GradedSeries::variable(VarIndex v, int order) {
  GradedSeries r(order);
  r.add_term(Monomial::var(v), ULaurent(1L));
  return r;
}

GradedSeries GradedSeries::term(const Monomial& m, const ULaurent& c,
                                int order) {
  GradedSeries r(order);
  r.add_term(m, c);
  return r;
}

ULaurent GradedSeries::coeff(const Monomial& m) const {
  auto it = c_.find(m);
  return it == c_.end() ? ULaurent() : it->second;
}

int GradedSeries::min_degree() const {
  if (!c_.empty()) return c_.begin()->first.degree();
  // empty: any hidden content lives above the order (degrees are >= 0)
  return std::max(order_ + 1, 0);
}

int GradedSeries::max_stored_degree() const {
  return c_.empty() ? -1 : c_.rbegin()->first.degree();
}

int GradedSeries::max_var_weight(VarKind k) const {
  int parity = (k == VarKind::T) ? 1 : 0;
  int best = 0;
  for (const auto& [m, c] : c_)
    for (int w : m.factors())
      if (w % 2 == parity && w > best) best = w;
  return best;
}

bool GradedSeries::is_homogeneous(int d) const {
  for (const auto& [m, c] : c_)
    if (m.degree() != d) return false;
  return true;
}

void GradedSeries::add_term(const Monomial& m, const ULaurent& c) {
  if (c.is_zero() || m.degree() > order_) return;
  auto [it, inserted] = c_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

GradedSeries GradedSeries::truncated(int new_order) const {
  GradedSeries r(std::min(order_, new_order));
  for (const auto& [m, c] : c_) {
    if (m.degree() > r.order_) break;  // map is degree-graded
    r.c_.emplace(m, c);
  }
  return r;
}

GradedSeries GradedSeries::homogeneous_part(int d) const {
  GradedSeries r(order_);
  for (const auto& [m, c] : c_)
    if (m.degree() == d) r.c_.emplace(m, c);
  return r;
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [m, c] : o.c_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [m, c] : o.c_) add_term(m, -c);
  return *this;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r(order_);
  for (const auto& [m, c] : c_) r.c_.emplace(m, -c);
  return r;
}

GradedSeries operator*(GradedSeries a, const Rational& c) {
  if (c == 0) return GradedSeries(a.order_);
  for (auto& [m, v] : a.c_) v *= c;
  return a;
}

GradedSeries operator*(GradedSeries a, const ULaurent& c) {
  GradedSeries r(a.order_);
  for (const auto& [m, v] : a.c_) r.add_term(m, v * c);
  return r;
}

GradedSeries GradedSeries::partial(VarIndex v) const {
  return partial_weight(v.weight());
}

GradedSeries GradedSeries::partial_weight(int w) const {
  GradedSeries r(order_ == kPolyOrder ? kPolyOrder : order_ - w);
  for (const auto& [m, c] : c_) {
    int e = m.exponent(w);
    if (e == 0) continue;
    r.add_term(*m.divided_by_var(w), c * Rational(e));
  }
  return r;
}

GradedSeries GradedSeries::u_scaled() const {
  GradedSeries r(order_);
  for (const auto& [m, c] : c_) r.add_term(m, c.u_scaled());
  return r;
}

std::string GradedSeries::str() const {
  std::ostringstream os;
  if (c_.empty()) os << "0";
  bool first = true;
  for (const auto& [m, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!m.is_one()) os << "*" << m.str();
  }
  if (order_ < kPolyOrder) os << " + O(deg " << order_ + 1 << ")";
  return os.str();
}

GradedSeries series_exp(const GradedSeries& f) {
  if (!f.constant_term().is_zero())
    throw std::invalid_argument("exp requires zero constant term");
  if (f.order() >= kPolyOrder) {
    if (f.is_zero()) return GradedSeries::one();
    throw std::invalid_argument("exp requires a finite truncation order");
  }
  GradedSeries r = GradedSeries::constant(ULaurent(1L), f.order());
  GradedSeries term = GradedSeries::constant(ULaurent(1L), f.order());
  int mindeg = f.min_degree();
  for (int k = 1; static_cast<long>(k) * mindeg <= f.order(); ++k) {
    term = term * f * Rational(1, k);
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

GradedSeries series_log(const GradedSeries& f) {
  if (f.constant_term() != ULaurent(1L))
    throw std::invalid_argument("log requires constant term 1");
  if (f.order() >= kPolyOrder) {
    if (f == GradedSeries::one()) return GradedSeries();
    throw std::invalid_argument("log requires a finite truncation order");
  }
  GradedSeries g = f - GradedSeries::one();
  GradedSeries r(f.order());
  GradedSeries power = GradedSeries::constant(ULaurent(1L), f.order());
  int mindeg = g.min_degree();
  for (int k = 1; static_cast<long>(k) * mindeg <= f.order(); ++k) {
    power = power * g;
    if (power.is_zero()) break;
    r += power * Rational(k % 2 == 1 ? 1 : -1, k);
  }
  return r;
}

bool agree_to_order(const GradedSeries& a, const GradedSeries& b,
                    int through) {
  if (through < 0 || a.order() < through || b.order() < through) return false;
  return (a - b).truncated(through).is_zero();
}

bool is_zero_to_order(const GradedSeries& a, int through) {
  if (through < 0 || a.order() < through) return false;
  return a.truncated(through).is_zero();
}

}  // namespace openkdv
