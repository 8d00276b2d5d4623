#pragma once

#include <cstdint>
#include <vector>

namespace permchar
{

// GF(p^k) = GF(p)[x] / (f), elements encoded as base-p digit strings
// c_0 + c_1 p + ... (c_i the coefficient of x^i).
class FiniteField
{
public:
  // `modulus` holds the coefficients of a monic f of degree k, low to high.
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  // The field of order q with the fixed defining polynomial used for PSL(2, q).
  static FiniteField of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t inv(std::uint32_t a) const;
  // x^i, the F_p-basis element.
  std::uint32_t basis(std::uint32_t i) const;

  // No zero divisors, i.e. the modulus is irreducible.
  bool is_field() const;

private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t encode(const std::vector<std::uint32_t> &d) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
};

} // namespace permchar
