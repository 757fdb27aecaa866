#include "threepage/laurent.hpp"

namespace threepage {

Laurent Laurent::monomial(int exp, int64_t coeff) {
  Laurent p;
  if (coeff != 0) p.coeffs_[exp] = coeff;
  return p;
}

void Laurent::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0) it = coeffs_.erase(it);
    else ++it;
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.coeffs_) coeffs_[e] += c;
  trim();
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      r.coeffs_[e1 + e2] += c1 * c2;
    }
  }
  r.trim();
  return r;
}

Laurent Laurent::delta_pow(int k) {
  Laurent d = monomial(2, -1) + monomial(-2, -1);
  Laurent r = one();
  for (int i = 0; i < k; ++i) r = r * d;
  return r;
}

Laurent Laurent::times_neg_a3(int e) const {
  Laurent f = e >= 0 ? monomial(3, -1) : monomial(-3, -1);
  Laurent r = *this;
  for (int i = 0; i < std::abs(e); ++i) r = r * f;
  return r;
}

std::string Laurent::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    if (!s.empty()) s += c >= 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    int64_t ac = c < 0 ? -c : c;
    if (ac != 1 || e == 0) s += std::to_string(ac);
    if (e != 0) {
      s += "A";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace threepage
