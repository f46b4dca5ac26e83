#include "openkdv/ulaurent.hpp"

#include <sstream>

namespace openkdv {

void ULaurent::add_term(int uexp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.emplace(uexp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

ULaurent& ULaurent::operator+=(const ULaurent& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

ULaurent& ULaurent::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, v] : c_) v *= c;
  return *this;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
  ULaurent r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
  return r;
}

ULaurent ULaurent::operator-() const {
  ULaurent r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

ULaurent ULaurent::shifted(int du) const {
  ULaurent r;
  for (const auto& [e, c] : c_) r.c_[e + du] = c;
  return r;
}

ULaurent ULaurent::u_scaled() const {
  ULaurent r;
  for (const auto& [e, c] : c_)
    if (e != 0) r.c_[e] = c * e;
  return r;
}

std::string ULaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    if (e != 0) os << "*u^" << e;
  }
  return os.str();
}

}  // namespace openkdv
