#include "openkdv/zseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace openkdv {

void ZSeries::set_coeff(int k, GradedSeries g) {
  lo_ = std::min(lo_, k);
  hi_ = std::max(hi_, k);
  if (g.is_zero() && g.order() >= kPolyOrder) {
    c_.erase(k);
    return;
  }
  c_[k] = std::move(g);
}

ZSeries ZSeries::clipped(int lo, int hi) const {
  ZSeries r(lo, hi);
  for (const auto& [k, g] : c_)
    if (k >= lo && k <= hi) r.c_.emplace(k, g);
  return r;
}

ZSeries zs_add(const ZSeries& a, const ZSeries& b) {
  ZSeries r(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
  for (const auto& [k, g] : a.coeffs()) r.set_coeff(k, g);
  for (const auto& [k, g] : b.coeffs()) r.set_coeff(k, r.coeff(k) + g);
  return r;
}

ZSeries zs_sub(const ZSeries& a, const ZSeries& b) {
  return zs_add(a, zs_neg(b));
}

ZSeries zs_neg(const ZSeries& a) {
  ZSeries r(a.lo(), a.hi());
  for (const auto& [k, g] : a.coeffs()) r.set_coeff(k, -g);
  return r;
}

ZSeries zs_mul(const ZSeries& a, const ZSeries& b, int lo, int hi,
               int degree_cap) {
  ZSeries r(lo, hi);
  std::map<int, GradedSeries> acc;
  for (const auto& [ka, ga] : a.coeffs())
    for (const auto& [kb, gb] : b.coeffs()) {
      int k = ka + kb;
      if (k < lo || k > hi) continue;
      GradedSeries p = ga * gb;
      if (degree_cap < kPolyOrder) p = p.truncated(degree_cap);
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, std::move(p));
      else
        it->second += p;
    }
  for (auto& [k, g] : acc) r.set_coeff(k, std::move(g));
  return r;
}

ZSeries zs_scale(const ZSeries& a, const ULaurent& c) {
  ZSeries r(a.lo(), a.hi());
  for (const auto& [k, g] : a.coeffs()) r.set_coeff(k, g * c);
  return r;
}

ZSeries zs_shift(const ZSeries& a, int dz) {
  ZSeries r(a.lo() + dz, a.hi() + dz);
  for (const auto& [k, g] : a.coeffs()) r.set_coeff(k + dz, g);
  return r;
}

namespace {

ZSeries zs_exp_impl(const ZSeries& g, int lo, int hi, int degree_cap) {
  for (const auto& [k, c] : g.coeffs())
    if (k == 0 && !c.is_zero())
      throw std::invalid_argument("zseries exp requires zero z^0 part");
  ZSeries r(lo, hi);
  r.set_coeff(0, GradedSeries::one());
  ZSeries term = r;
  // every factor moves at least one step in z, so the window bounds k
  int max_k = std::max(-lo, hi);
  for (int k = 1; k <= max_k; ++k) {
    term = zs_mul(term, g, lo, hi, degree_cap);
    if (term.empty()) break;
    ZSeries scaled = zs_scale(term, ULaurent(Rational(1, k)));
    r = zs_add(r, scaled);
    term = scaled;
  }
  return r;
}

}  // namespace

ZSeries zs_exp_nonpos(const ZSeries& g, int lo, int degree_cap) {
  if (g.hi() > 0 && !g.clipped(1, g.hi()).empty())
    throw std::invalid_argument("zs_exp_nonpos: positive exponents present");
  return zs_exp_impl(g, lo, 0, degree_cap);
}

ZSeries zs_exp_pos(const ZSeries& g, int hi, int degree_cap) {
  if (g.lo() < 0 && !g.clipped(g.lo(), -1).empty())
    throw std::invalid_argument("zs_exp_pos: negative exponents present");
  return zs_exp_impl(g, 0, hi, degree_cap);
}

ZSeries zs_partial(const ZSeries& a, VarIndex v) {
  ZSeries r(a.lo(), a.hi());
  for (const auto& [k, g] : a.coeffs()) r.set_coeff(k, g.partial(v));
  return r;
}

bool zs_graded(const ZSeries& a) {
  for (const auto& [k, g] : a.coeffs())
    if (!g.is_homogeneous(k)) return false;
  return true;
}

GradedSeries zs_coef0_product(const ZSeries& left, const ZSeries& right) {
  if (!left.clipped(1, std::max(left.hi(), 1)).empty() ||
      !right.clipped(std::min(right.lo(), -1), -1).empty() ||
      !zs_graded(right))
    throw std::invalid_argument("ill-formed z-pairing");
  GradedSeries r;
  for (const auto& [j, gr] : right.coeffs()) {
    if (-j < left.lo()) continue;
    r += left.coeff(-j) * gr;
  }
  return r;
}

}  // namespace openkdv
