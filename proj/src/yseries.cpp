#include "openkdv/yseries.hpp"

#include <algorithm>
#include <sstream>

namespace openkdv {

YSeries YSeries::constant(const ULaurent& c, int ord) {
  return ypow(0, c, ord);
}

YSeries YSeries::ypow(int k, const ULaurent& c, int ord) {
  YSeries r(ord);
  r.add_term(k, c);
  return r;
}

ULaurent YSeries::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? ULaurent() : it->second;
}

int YSeries::min_exp() const {
  if (!c_.empty()) return c_.begin()->first;
  return ord_ >= kPolyOrder ? kPolyOrder : ord_ + 1;
}

void YSeries::add_term(int k, const ULaurent& c) {
  if (c.is_zero() || k > ord_) return;
  auto [it, inserted] = c_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

YSeries YSeries::truncated(int ord) const {
  YSeries r(std::min(ord_, ord));
  for (const auto& [k, c] : c_)
    if (k <= r.ord_) r.c_.emplace(k, c);
  return r;
}

YSeries& YSeries::operator+=(const YSeries& o) {
  if (o.ord_ < ord_) *this = truncated(o.ord_);
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

YSeries& YSeries::operator-=(const YSeries& o) {
  if (o.ord_ < ord_) *this = truncated(o.ord_);
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

YSeries YSeries::operator-() const {
  YSeries r(ord_);
  for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
  return r;
}

YSeries operator*(const YSeries& a, const YSeries& b) {
  int ord;
  if (a.ord_ >= kPolyOrder && b.ord_ >= kPolyOrder) {
    ord = kPolyOrder;
  } else {
    long fa = (a.ord_ >= kPolyOrder ? (1L << 40) : a.ord_ + 1L) + b.min_exp();
    long fb = (b.ord_ >= kPolyOrder ? (1L << 40) : b.ord_ + 1L) + a.min_exp();
    ord = static_cast<int>(std::min({fa, fb, static_cast<long>(kPolyOrder)})) - 1;
  }
  YSeries r(ord);
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_) {
      if (ka + kb > ord) continue;
      r.add_term(ka + kb, ca * cb);
    }
  return r;
}

YSeries operator*(YSeries a, const ULaurent& c) {
  YSeries r(a.ord_);
  for (const auto& [k, v] : a.c_) r.add_term(k, v * c);
  return r;
}

YSeries YSeries::negated_y() const {
  YSeries r(ord_);
  for (const auto& [k, c] : c_)
    r.c_.emplace(k, (k % 2 == 0) ? c : -c);
  return r;
}

YSeries YSeries::shifted(int k) const {
  YSeries r(ord_ >= kPolyOrder ? kPolyOrder : ord_ + k);
  for (const auto& [e, c] : c_) r.c_.emplace(e + k, c);
  return r;
}

YSeries YSeries::deriv_y() const {
  YSeries r(ord_ >= kPolyOrder ? kPolyOrder : ord_ - 1);
  for (const auto& [e, c] : c_)
    if (e != 0) r.add_term(e - 1, c * Rational(e));
  return r;
}

bool YSeries::even_in_y() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const auto& t) { return t.first % 2 == 0; });
}

bool YSeries::only_nonpositive_y() const {
  return c_.empty() || c_.rbegin()->first <= 0;
}

std::string YSeries::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k != 0) os << "*y^" << k;
  }
  return os.str();
}

bool yagree_to_order(const YSeries& a, const YSeries& b, int through) {
  if (through < 0 || a.ord() < through || b.ord() < through) return false;
  YSeries d = a - b;
  for (const auto& [k, c] : d.terms())
    if (k <= through && !c.is_zero()) return false;
  return true;
}

}  // namespace openkdv
