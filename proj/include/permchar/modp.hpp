#pragma once

#include <cstdint>
#include <vector>

// Dense linear algebra over a prime field GF(p), p < 2^31.
namespace permchar::modp
{

class Field
{
public:
  explicit Field(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
  {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a ? p_ - a : 0; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(std::int64_t a) const;

  // Smallest generator of the multiplicative group.
  std::uint32_t primitive_root() const;

private:
  std::uint32_t p_;
};

using Vec = std::vector<std::uint32_t>;
using Mat = std::vector<Vec>; // row-major

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row and drops zero rows.
std::vector<std::size_t> rref(const Field &f, Mat &m);

// Basis of {c : A c = 0} (A is r x n), as vectors of length n.
Mat null_space(const Field &f, Mat a);

// Coefficients c_0..c_n of det(x I - A), monic (c_n = 1).
Vec charpoly(const Field &f, Mat a);

// Distinct roots in GF(p), ascending, found by evaluation at every field
// element. Intended for the small primes used here.
Vec roots(const Field &f, const Vec &poly);

// Smallest prime p = 1 mod e with p*p > bound, or 0 if none below 2^31.
std::uint32_t prime_one_mod(std::uint64_t e, std::uint64_t bound);

} // namespace permchar::modp
