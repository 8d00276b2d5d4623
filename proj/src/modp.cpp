#include "permchar/modp.hpp"

#include <stdexcept>

#include "permchar/primes.hpp"

namespace permchar::modp
{

Field::Field(std::uint32_t p) : p_(p)
{
  if (p < 2 || p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const
{
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const
{
  if (a % p_ == 0)
    throw std::domain_error("inverse of zero in GF(p)");
  return pow(a, p_ - 2);
}

std::uint32_t Field::reduce(std::int64_t a) const
{
  auto p = static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(((a % p) + p) % p);
}

std::uint32_t Field::primitive_root() const
{
  if (p_ == 2)
    return 1;
  const auto factors = prime_divisors(p_ - 1);
  for (std::uint32_t g = 2; g < p_; ++g) {
    bool ok = true;
    for (auto q : factors) {
      if (pow(g, (p_ - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  throw std::logic_error("no primitive root");
}

std::vector<std::size_t> rref(const Field &f, Mat &m)
{
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0)
      ++pivot;
    if (pivot == m.size())
      continue;
    std::swap(m[row], m[pivot]);
    const std::uint32_t scale = f.inv(m[row][col]);
    for (auto &x : m[row])
      x = f.mul(x, scale);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      const std::uint32_t factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Mat null_space(const Field &f, Mat a)
{
  if (a.empty())
    return {};
  const std::size_t n = a.front().size();
  const auto pivots = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec charpoly(const Field &f, Mat a)
{
  const std::size_t n = a.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && a[pivot][m - 1] == 0)
      ++pivot;
    if (pivot == n)
      continue;
    if (pivot != m) {
      std::swap(a[pivot], a[m]);
      for (auto &row : a)
        std::swap(row[pivot], row[m]);
    }
    const std::uint32_t inv = f.inv(a[m][m - 1]);
    for (std::size_t i = m + 1; i < n; ++i) {
      if (a[i][m - 1] == 0)
        continue;
      const std::uint32_t u = f.mul(a[i][m - 1], inv);
      for (std::size_t j = 0; j < n; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(u, a[m][j]));
      for (std::size_t j = 0; j < n; ++j)
        a[j][m] = f.add(a[j][m], f.mul(u, a[j][i]));
    }
  }

  // p[k] = characteristic polynomial of the leading k x k block.
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    // (x - h_kk) p[k-1]
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p[k - 1][d]);
      next[d] = f.sub(next[d], f.mul(a[k - 1][k - 1], p[k - 1][d]));
    }
    std::uint32_t sub_product = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      sub_product = f.mul(sub_product, a[i + 1][i]);
      const std::uint32_t coeff = f.mul(a[i][k - 1], sub_product);
      if (coeff == 0)
        continue;
      for (std::size_t d = 0; d < p[i].size(); ++d)
        next[d] = f.sub(next[d], f.mul(coeff, p[i][d]));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

Vec roots(const Field &f, const Vec &poly)
{
  Vec out;
  for (std::uint32_t x = 0; x < f.p(); ++x) {
    std::uint32_t value = 0;
    for (std::size_t d = poly.size(); d-- > 0;)
      value = f.add(f.mul(value, x), poly[d]);
    if (value == 0)
      out.push_back(x);
  }
  return out;
}

std::uint32_t prime_one_mod(std::uint64_t e, std::uint64_t bound)
{
  for (std::uint64_t p = e + 1; p < (1ull << 31); p += e) {
    if (p * p > bound && is_prime(p))
      return static_cast<std::uint32_t>(p);
  }
  return 0;
}

} // namespace permchar::modp
