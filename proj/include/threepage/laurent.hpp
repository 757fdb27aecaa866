#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace threepage {

// Laurent polynomial in one variable A with exact integer coefficients.
// Coefficients stay far below 2^63 at the configured crossing cap (each of
// the <= 2^24 bracket states contributes +-1 to a single monomial).
class Laurent {
 public:
  Laurent() = default;
  static Laurent one() { return monomial(0, 1); }
  static Laurent monomial(int exp, int64_t coeff);

  Laurent operator+(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);

  // (-A^2 - A^-2)^k
  static Laurent delta_pow(int k);
  // multiply by (-A^3)^e, e may be negative
  Laurent times_neg_a3(int e) const;

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, int64_t>& coeffs() const { return coeffs_; }
  std::string str() const;

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.coeffs_ < b.coeffs_; }

 private:
  void trim();
  std::map<int, int64_t> coeffs_;  // exponent -> coefficient
};

}  // namespace threepage
