// Degree-by-degree solution of the closed Virasoro constraints.
//
// Reading the coefficient of a monomial M' in L_n exp(F) = 0 expresses
// the coefficient of M = M' * t_{n+1} (entering through the dilaton shift
// t_1 - 1) in terms of coefficients of strictly lower weighted degree, so
// the constraints are triangular when monomials are processed by
// increasing degree. The pivot for M is its highest t-index.
#include "openkdv/closed.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace openkdv {

namespace {

// first-order Virasoro coefficient (2i+2n+1)!! / (2^{n+1} (2i-1)!!)
Rational vir_coeff(int i, int n) {
  Rational r(double_factorial(2 * i + 2 * n + 1),
             mpz_class(pow2(n + 1) * double_factorial(2 * i - 1)));
  r.canonicalize();
  return r;
}

// second-order coefficient (2i+1)!! (2n-2i-1)!! / 2^{n+1}
Rational vir_coeff2(int i, int n) {
  Rational r(mpz_class(double_factorial(2 * i + 1) *
                       double_factorial(2 * n - 2 * i - 1)),
             pow2(n + 1));
  r.canonicalize();
  return r;
}

struct Table {
  std::map<Monomial, ULaurent> coeff;

  ULaurent at(const Monomial& m) const {
    auto it = coeff.find(m);
    return it == coeff.end() ? ULaurent() : it->second;
  }

  // coefficient of m in dF/dt_k
  ULaurent d1(const Monomial& m, int k) const {
    Monomial mk = m.times_var(2 * k + 1);
    return at(mk) * Rational(mk.exponent(2 * k + 1));
  }

  // coefficient of m in d2F/dt_a dt_b
  ULaurent d2(const Monomial& m, int a, int b) const {
    int wa = 2 * a + 1, wb = 2 * b + 1;
    Monomial mab = m.times_var(wa).times_var(wb);
    Rational mult(mab.exponent(wa));
    if (wa == wb)
      mult *= Rational(mab.exponent(wa) - 1);
    else
      mult *= Rational(mab.exponent(wb));
    return at(mab) * mult;
  }
};

// All terms of the coefficient of M' in L_n exp(F), except the unknown
// slot -vir_coeff(1,n) * F_{n+1}[M'] coming from the dilaton shift.
ULaurent known_sum(const Table& F, const Monomial& mp, int n) {
  ULaurent total;
  // sum_i c_i(n) t_i dF/dt_{i+n} at M' (the t_i part requires t_i | M')
  for (const auto& [w, e] : mp.exponents()) {
    if (w % 2 == 0) continue;  // t-variables only ever occur here
    int i = (w - 1) / 2;
    if (i + n < 0) continue;
    total += F.d1(*mp.divided_by_var(w), i + n) * vir_coeff(i, n);
  }
  // second-order part, n >= 1
  for (int i = 0; i <= n - 1; ++i) {
    int j = n - 1 - i;
    ULaurent quad = F.d2(mp, i, j);
    for_each_divisor(mp, [&](const Monomial& a, const Monomial& b) {
      quad += F.d1(a, i) * F.d1(b, j);
    });
    total += quad.shifted(2) * (vir_coeff2(i, n) * Rational(1, 2));
  }
  // inhomogeneous terms
  if (n == -1 && mp == Monomial::var_weight(1, 2))
    total += ULaurent::upow(-2, Rational(1, 2));
  if (n == 0 && mp.is_one()) total += ULaurent(Rational(1, 16));
  return total;
}

}  // namespace

GradedSeries compute_fc(int N) {
  if (N < 1) throw std::invalid_argument("compute_fc requires N >= 1");
  Table F;
  for (const Monomial& m : enumerate_monomials(t_weights_upto(N), N)) {
    if (m.is_one()) continue;
    int w = m.max_weight();
    int j = (w - 1) / 2;  // pivot t-index
    int n = j - 1;
    ULaurent s = known_sum(F, *m.divided_by_var(w), n);
    if (s.is_zero()) continue;
    // known_sum - vir_coeff(1,n) * e_j * coeff(M) = 0
    Rational scale = Rational(1) / (vir_coeff(1, n) * Rational(m.exponent(w)));
    F.coeff[m] = s * scale;
  }
  GradedSeries r(N);
  for (const auto& [m, c] : F.coeff) r.add_term(m, c);
  if (!dimension_constraint_holds(r))
    throw std::runtime_error("closed solver produced an off-shell monomial");
  return r;
}

Rational closed_correlator(const GradedSeries& fc, int g,
                           const std::vector<int>& insertions) {
  int n = static_cast<int>(insertions.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return 0;
  long dim = 0;
  Monomial m;
  for (int k : insertions) {
    dim += k;
    m = m.times_var(2 * k + 1);
  }
  if (dim != 3L * g - 3 + n) return 0;  // off-shell, regardless of truncation
  if (m.degree() > fc.order())
    throw std::invalid_argument("insufficient truncation order");
  Rational v = fc.coeff(m).coeff(2 * g - 2);
  for (const auto& [w, e] : m.exponents()) v *= Rational(factorial(e));
  return v;
}

GradedSeries homogeneity_residual_closed(const GradedSeries& fc) {
  GradedSeries r = fc.u_scaled() * Rational(3, 2);
  for (int w = 1; w <= fc.order(); w += 2) {
    int i = (w - 1) / 2;
    GradedSeries term =
        GradedSeries::variable(VarIndex::t(i)) * fc.partial_weight(w);
    r += term * Rational(1 - i);
  }
  return r;
}

bool dimension_constraint_holds(const GradedSeries& fc) {
  for (const auto& [m, c] : fc.terms()) {
    long n = m.num_factors();
    long dim = 0;
    for (int w : m.factors()) {
      if (w % 2 == 0) return false;  // no s-variables in the closed sector
      dim += (w - 1) / 2;
    }
    for (const auto& [uexp, v] : c.terms()) {
      if (uexp % 2 != 0) return false;
      long g = (uexp + 2) / 2;
      if (g < 0 || 2 * g - 2 + n <= 0) return false;
      if (dim != 3 * g - 3 + n) return false;
    }
  }
  return true;
}

}  // namespace openkdv
