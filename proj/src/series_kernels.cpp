// Product kernels for GradedSeries.
//
// The truncated product is the dominant cost of the whole library, so it
// exists twice: a serial reference and an OpenMP kernel that splits the
// left factor across threads and merges per-thread partial maps. Exact
// rational arithmetic into canonically ordered maps makes the two
// bit-identical regardless of scheduling; the unit tests and the bench
// tool compare them.
#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "openkdv/graded_series.hpp"

namespace openkdv {

namespace {

// Exactness of a truncated product: unknown content of a (degree > Na)
// times the lowest true content of b contaminates everything from
// Na+1+min_deg(b) upward, and symmetrically.
int64_t clamp_order(int64_t v) {
  return std::min<int64_t>(v, kPolyOrder);
}

using TermVec = std::vector<std::pair<const Monomial*, const ULaurent*>>;

TermVec flatten(const GradedSeries& s) {
  TermVec v;
  v.reserve(s.num_terms());
  for (const auto& [m, c] : s.terms()) v.emplace_back(&m, &c);
  return v;
}

}  // namespace

int product_order(const GradedSeries& a, const GradedSeries& b) {
  if (a.order() >= kPolyOrder && b.order() >= kPolyOrder) return kPolyOrder;
  auto unknown_floor = [](const GradedSeries& s) {
    if (s.order() >= kPolyOrder) return int64_t{1} << 40;  // no unknown content
    return std::max<int64_t>(static_cast<int64_t>(s.order()) + 1, 0);
  };
  int64_t floor_a = unknown_floor(a) + b.min_degree();
  int64_t floor_b = unknown_floor(b) + a.min_degree();
  return static_cast<int>(clamp_order(std::min(floor_a, floor_b) - 1));
}

GradedSeries mul_serial(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries r(product_order(a, b));
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.c_) {
    int da = ma.degree();
    if (da + b.min_degree() > r.order_) break;
    for (const auto& [mb, cb] : b.c_) {
      if (da + mb.degree() > r.order_) break;  // maps are degree-graded
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

GradedSeries mul_parallel(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries r(product_order(a, b));
  if (a.is_zero() || b.is_zero()) return r;
#ifdef _OPENMP
  const TermVec av = flatten(a);
  const int order = r.order_;
  std::map<Monomial, ULaurent> acc;
#pragma omp parallel
  {
    std::map<Monomial, ULaurent> local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(av.size()); ++i) {
      const Monomial& ma = *av[i].first;
      const ULaurent& ca = *av[i].second;
      int da = ma.degree();
      for (const auto& [mb, cb] : b.terms()) {
        if (da + mb.degree() > order) break;
        ULaurent prod = ca * cb;
        if (prod.is_zero()) continue;
        auto [it, inserted] = local.emplace(ma.times(mb), std::move(prod));
        if (!inserted) it->second += ca * cb;
      }
    }
#pragma omp critical(openkdv_mul_merge)
    {
      for (auto& [m, c] : local) {
        auto [it, inserted] = acc.emplace(m, std::move(c));
        if (!inserted) it->second += c;
      }
    }
  }
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.c_.emplace(m, std::move(c));
  return r;
#else
  return mul_serial(a, b);
#endif
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
#ifdef _OPENMP
  // Pair loops this small lose more to thread startup than they gain.
  constexpr size_t kParallelWork = 4096;
  if (a.num_terms() * b.num_terms() >= kParallelWork &&
      omp_get_max_threads() > 1)
    return mul_parallel(a, b);
#endif
  return mul_serial(a, b);
}

}  // namespace openkdv
