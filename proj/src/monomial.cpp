#include "openkdv/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace openkdv {

Monomial Monomial::var(VarIndex v, int exponent) {
  return var_weight(v.weight(), exponent);
}

Monomial Monomial::var_weight(int w, int exponent) {
  Monomial m;
  m.w_.assign(exponent, w);
  return m;
}

int Monomial::degree() const {
  return std::accumulate(w_.begin(), w_.end(), 0);
}

int Monomial::exponent(int weight) const {
  return static_cast<int>(std::count(w_.begin(), w_.end(), weight));
}

std::vector<std::pair<int, int>> Monomial::exponents() const {
  std::vector<std::pair<int, int>> out;
  for (auto it = w_.rbegin(); it != w_.rend(); ++it) {
    if (!out.empty() && out.back().first == *it)
      ++out.back().second;
    else
      out.emplace_back(*it, 1);
  }
  return out;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.w_.resize(w_.size() + o.w_.size());
  std::merge(w_.begin(), w_.end(), o.w_.begin(), o.w_.end(), r.w_.begin(),
             std::greater<int>());
  return r;
}

Monomial Monomial::times_var(int weight, int exponent) const {
  return times(var_weight(weight, exponent));
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  r.w_.reserve(w_.size());
  auto it = w_.begin();
  for (int ow : o.w_) {
    // both descending; advance until we find ow
    while (it != w_.end() && *it > ow) r.w_.push_back(*it++);
    if (it == w_.end() || *it != ow) return std::nullopt;
    ++it;
  }
  r.w_.insert(r.w_.end(), it, w_.end());
  return r;
}

std::optional<Monomial> Monomial::divided_by_var(int weight,
                                                 int exponent) const {
  return divided_by(var_weight(weight, exponent));
}

bool Monomial::contains_kind(VarKind k) const {
  int parity = (k == VarKind::T) ? 1 : 0;
  return std::any_of(w_.begin(), w_.end(),
                     [&](int w) { return w % 2 == parity; });
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(w_.begin(), w_.end(),
                                                o.w_.begin(), o.w_.end());
}

std::string Monomial::str() const {
  if (w_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, e] : exponents()) {
    if (!first) os << "*";
    first = false;
    VarIndex v = VarIndex::from_weight(w);
    os << (v.kind == VarKind::T ? "t" : "s") << v.index;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

void divisor_rec(const std::vector<std::pair<int, int>>& ve, size_t i,
                 Monomial& a, Monomial& b,
                 const std::function<void(const Monomial&, const Monomial&)>& fn) {
  if (i == ve.size()) {
    fn(a, b);
    return;
  }
  auto [w, e] = ve[i];
  for (int k = 0; k <= e; ++k) {
    Monomial a2 = a.times_var(w, k);
    Monomial b2 = b.times_var(w, e - k);
    divisor_rec(ve, i + 1, a2, b2, fn);
  }
}

void enum_rec(const std::vector<int>& weights, size_t i, int remaining,
              Monomial cur, std::vector<Monomial>& out) {
  if (i == weights.size()) {
    out.push_back(cur);
    return;
  }
  int w = weights[i];
  for (int e = 0; e * w <= remaining; ++e)
    enum_rec(weights, i + 1, remaining - e * w, cur.times_var(w, e), out);
}

}  // namespace

void for_each_divisor(
    const Monomial& m,
    const std::function<void(const Monomial&, const Monomial&)>& fn) {
  Monomial a, b;
  divisor_rec(m.exponents(), 0, a, b, fn);
}

std::vector<Monomial> enumerate_monomials(const std::vector<int>& weights,
                                          int max_degree) {
  std::vector<Monomial> out;
  enum_rec(weights, 0, max_degree, Monomial(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> t_weights_upto(int max_degree) {
  std::vector<int> w;
  for (int x = 1; x <= max_degree; x += 2) w.push_back(x);
  return w;
}

std::vector<int> all_weights_upto(int max_degree) {
  std::vector<int> w;
  for (int x = 1; x <= max_degree; ++x) w.push_back(x);
  return w;
}

}  // namespace openkdv
