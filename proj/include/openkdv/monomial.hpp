// Variables and monomials of the graded polynomial ring in
// t_0, t_1, ... and s_0, s_1, ...
//
// The grading assigns t_i weight 2i+1 and s_i weight 2i+2, so the weight
// alone identifies the variable: odd weights are t's, even weights are s's.
// A monomial is stored as the multiset of the weights of its variables.
#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace openkdv {

enum class VarKind { T, S };

struct VarIndex {
  VarKind kind;
  int index;  // >= 0

  int weight() const {
    return kind == VarKind::T ? 2 * index + 1 : 2 * index + 2;
  }
  static VarIndex from_weight(int w) {
    return w % 2 == 1 ? VarIndex{VarKind::T, (w - 1) / 2}
                      : VarIndex{VarKind::S, w / 2 - 1};
  }
  static VarIndex t(int i) { return {VarKind::T, i}; }
  static VarIndex s(int i) { return {VarKind::S, i}; }
  bool operator==(const VarIndex&) const = default;
};

class Monomial {
 public:
  Monomial() = default;  // the constant monomial 1

  static Monomial var(VarIndex v, int exponent = 1);
  static Monomial var_weight(int w, int exponent = 1);

  bool is_one() const { return w_.empty(); }
  int degree() const;  // weighted total degree
  int num_factors() const { return static_cast<int>(w_.size()); }

  // Variable weights in descending order, one entry per unit exponent.
  const std::vector<int>& factors() const { return w_; }
  int exponent(int weight) const;
  int exponent(VarIndex v) const { return exponent(v.weight()); }
  int max_weight() const { return w_.empty() ? 0 : w_.front(); }
  // (weight, exponent) pairs, ascending weight.
  std::vector<std::pair<int, int>> exponents() const;

  Monomial times(const Monomial& o) const;
  Monomial times_var(int weight, int exponent = 1) const;
  std::optional<Monomial> divided_by(const Monomial& o) const;
  std::optional<Monomial> divided_by_var(int weight, int exponent = 1) const;

  bool contains_kind(VarKind k) const;

  // Canonical order: graded, then lexicographic on the descending weight
  // list. Used for all deterministic iteration and serialization.
  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;

  std::string str() const;  // diagnostics only

 private:
  std::vector<int> w_;  // descending
};

// Calls fn(a, b) for every ordered factorization a*b = m (including 1*m
// and m*1).
void for_each_divisor(
    const Monomial& m,
    const std::function<void(const Monomial&, const Monomial&)>& fn);

// All monomials of weighted degree <= max_degree drawn from the given
// variable weights, in canonical order.
std::vector<Monomial> enumerate_monomials(const std::vector<int>& weights,
                                          int max_degree);
// Weights 1, 3, 5, ... (t-variables only) up to max_degree.
std::vector<int> t_weights_upto(int max_degree);
// All weights 1, 2, 3, ... up to max_degree.
std::vector<int> all_weights_upto(int max_degree);

}  // namespace openkdv
