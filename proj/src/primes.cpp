#include "permchar/primes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permchar
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
  : PrimeSet(std::vector<std::uint64_t>(primes))
{}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes))
{
  for (auto p : primes_) {
    if (!is_prime(p))
      throw std::invalid_argument(std::to_string(p) + " is not a prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::parse(const std::string &text)
{
  std::vector<std::uint64_t> primes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("invalid prime list \"" + text + "\"");
    primes.push_back(std::stoull(item));
  }
  if (primes.empty())
    throw std::invalid_argument("empty prime list");
  return PrimeSet(std::move(primes));
}

bool PrimeSet::contains(std::uint64_t p) const
{
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t PrimeSet::part_of(std::uint64_t n) const
{
  std::uint64_t part = 1;
  for (auto p : primes_) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

std::string PrimeSet::to_string() const
{
  std::string out;
  for (auto p : primes_) {
    if (!out.empty())
      out += ',';
    out += std::to_string(p);
  }
  return out;
}

} // namespace permchar
