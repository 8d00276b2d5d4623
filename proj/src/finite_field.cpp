#include "permchar/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "permchar/primes.hpp"

namespace permchar
{

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
  : p_(p), modulus_(std::move(modulus))
{
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic must be prime");
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  k_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  q_ = 1;
  for (std::uint32_t i = 0; i < k_; ++i)
    q_ *= p_;
  if (q_ > 4096)
    throw std::invalid_argument("field too large");

  mul_.assign(std::size_t{q_} * q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const auto da = digits(a);
    for (std::uint32_t b = a; b < q_; ++b) {
      const auto db = digits(b);
      std::vector<std::uint32_t> prod(2 * k_, 0);
      for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (std::uint32_t d = 2 * k_ - 1; d >= k_; --d) {
        const std::uint32_t c = prod[d];
        if (c == 0)
          continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < k_; ++i)
          prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
      }
      prod.resize(k_);
      const std::uint32_t v = encode(prod);
      mul_[a * q_ + b] = v;
      mul_[b * q_ + a] = v;
    }
  }
  inv_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1)
        inv_[a] = b;
}

FiniteField FiniteField::of_order(std::uint32_t q)
{
  switch (q) {
  case 4: return FiniteField(2, {1, 1, 1});
  case 8: return FiniteField(2, {1, 1, 0, 1});
  case 9: return FiniteField(3, {1, 0, 1});
  case 16: return FiniteField(2, {1, 1, 0, 0, 1});
  case 25: return FiniteField(5, {2, 0, 1});
  case 27: return FiniteField(3, {1, 2, 0, 1});
  default: break;
  }
  if (is_prime(q))
    return FiniteField(q, {0, 1});
  throw std::invalid_argument("no field of order " + std::to_string(q) + " is configured");
}

std::vector<std::uint32_t> FiniteField::digits(std::uint32_t a) const
{
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t FiniteField::encode(const std::vector<std::uint32_t> &d) const
{
  std::uint32_t a = 0;
  for (std::uint32_t i = k_; i-- > 0;)
    a = a * p_ + d[i];
  return a;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const
{
  auto da = digits(a), db = digits(b);
  for (std::uint32_t i = 0; i < k_; ++i)
    da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

std::uint32_t FiniteField::neg(std::uint32_t a) const
{
  auto d = digits(a);
  for (auto &x : d)
    x = (p_ - x) % p_;
  return encode(d);
}

std::uint32_t FiniteField::inv(std::uint32_t a) const
{
  if (a == 0 || inv_[a] == 0)
    throw std::domain_error("element has no inverse");
  return inv_[a];
}

std::uint32_t FiniteField::basis(std::uint32_t i) const
{
  std::uint32_t a = 1;
  for (std::uint32_t j = 0; j < i; ++j)
    a *= p_;
  return a;
}

bool FiniteField::is_field() const
{
  for (std::uint32_t a = 1; a < q_; ++a)
    if (inv_[a] == 0)
      return false;
  return true;
}

} // namespace permchar
