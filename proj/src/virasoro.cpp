#include "openkdv/virasoro.hpp"

#include <stdexcept>

#include "openkdv/rational.hpp"

namespace openkdv {

namespace {

Rational first_order_coeff(int i, int n) {
  Rational r(double_factorial(2 * i + 2 * n + 1),
             mpz_class(pow2(n + 1) * double_factorial(2 * i - 1)));
  r.canonicalize();
  return r;
}

GradedSeries closed_part(int n, const GradedSeries& f) {
  GradedSeries res;
  int ord = f.order();
  // (t_i - delta_{i,1}) d/dt_{i+n}; terms with an empty derivative are
  // zero above the certified order and may be skipped, except the dilaton
  // slot i = 1 which sets that order.
  int imax = (f.max_var_weight(VarKind::T) - 1) / 2 - n;
  if (ord < kPolyOrder) imax = std::min(imax, (ord - 1) / 2 - n);
  imax = std::max(imax, 1);
  for (int i = 0; i <= imax; ++i) {
    if (i + n < 0) continue;
    GradedSeries df = f.partial(VarIndex::t(i + n));
    GradedSeries term = GradedSeries::variable(VarIndex::t(i)) * df;
    if (i == 1) term -= df;
    res += term * first_order_coeff(i, n);
  }
  for (int i = 0; i <= n - 1; ++i) {
    Rational c(mpz_class(double_factorial(2 * i + 1) *
                         double_factorial(2 * (n - 1 - i) + 1)),
               mpz_class(pow2(n + 1) * 2));
    c.canonicalize();
    GradedSeries d2 =
        f.partial(VarIndex::t(i)).partial(VarIndex::t(n - 1 - i));
    res += (d2 * c) * ULaurent::upow(2);
  }
  if (n == -1)
    res += f * GradedSeries::term(Monomial::var_weight(1, 2),
                                  ULaurent::upow(-2, Rational(1, 2)));
  if (n == 0) res += f * Rational(1, 16);
  return res;
}

GradedSeries s0_derivs(const GradedSeries& f, int k) {
  GradedSeries d = f;
  for (int j = 0; j < k; ++j) d = d.partial(VarIndex::s(0));
  return d;
}

}  // namespace

GradedSeries apply_virasoro(VirasoroFamily fam, int n, const GradedSeries& f) {
  if (n < -1) throw std::invalid_argument("Virasoro index must be >= -1");
  GradedSeries res = closed_part(n, f);
  if (fam == VirasoroFamily::Closed) return res;

  if (fam == VirasoroFamily::Open) {
    GradedSeries s0 = GradedSeries::variable(VarIndex::s(0));
    res += (s0 * s0_derivs(f, n + 1)) * ULaurent::upow(n);
    if (n >= 0)
      res += s0_derivs(f, n) * ULaurent::upow(n, Rational(3 * n + 3, 4));
    return res;
  }

  // extended-open
  int ord = f.order();
  int imax = (f.max_var_weight(VarKind::S) - 2) / 2 - n;
  if (ord < kPolyOrder) imax = std::min(imax, (ord - 2) / 2 - n);
  imax = std::max(imax, 0);
  for (int i = 0; i <= imax; ++i) {
    if (n + i < 0) continue;
    Rational c(factorial(i + n + 1), factorial(i));
    c.canonicalize();
    res += GradedSeries::variable(VarIndex::s(i)) *
           f.partial(VarIndex::s(n + i)) * c;
  }
  if (n >= 1) {
    Rational c(mpz_class(3 * factorial(n + 1)), mpz_class(4));
    c.canonicalize();
    res += f.partial(VarIndex::s(n - 1)) * ULaurent::upow(1, c);
  }
  if (n == -1)
    res += f * GradedSeries::term(Monomial::var_weight(2),
                                  ULaurent::upow(-1));
  if (n == 0) res += f * Rational(3, 4);
  return res;
}

GradedSeries virasoro_residual(VirasoroFamily fam, int n,
                               const GradedSeries& F_open,
                               const GradedSeries& Fc) {
  GradedSeries G = (fam == VirasoroFamily::Closed) ? Fc : F_open + Fc;
  return apply_virasoro(fam, n, series_exp(G));
}

GradedSeries reduction_check(const GradedSeries& F_ext, const GradedSeries& Fc,
                             int n) {
  GradedSeries E = series_exp(F_ext + Fc);
  GradedSeries diff = apply_virasoro(VirasoroFamily::ExtendedOpen, n, E) -
                      apply_virasoro(VirasoroFamily::Open, n, E);
  return diff.restricted([](int w) { return w % 2 == 1 || w == 2; });
}

}  // namespace openkdv
