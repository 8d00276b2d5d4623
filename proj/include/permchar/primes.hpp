#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace permchar
{

bool is_prime(std::uint64_t n);

// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// A set pi of primes. The complement pi' is implicit.
class PrimeSet
{
public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  // "2,3,5"; rejects non-primes and empty input.
  static PrimeSet parse(const std::string &text);

  const std::vector<std::uint64_t> &primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  bool contains(std::uint64_t p) const;

  // Largest divisor of n whose prime factors all lie in pi.
  std::uint64_t part_of(std::uint64_t n) const;
  std::uint64_t complement_part_of(std::uint64_t n) const { return n / part_of(n); }

  bool is_pi_number(std::uint64_t n) const { return part_of(n) == n; }
  bool is_pi_prime_number(std::uint64_t n) const { return part_of(n) == 1; }

  std::string to_string() const;

  friend bool operator==(const PrimeSet &, const PrimeSet &) = default;

private:
  std::vector<std::uint64_t> primes_;
};

} // namespace permchar
