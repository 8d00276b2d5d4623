#include "permchar/permutation.hpp"

#include <numeric>

#include "permchar/error.hpp"

namespace permchar
{

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw std::invalid_argument("image sequence is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
      ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle word \"" + std::string(text) + "\"");
    ++pos;

    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9')
        throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                         "' in cycle word");
      std::uint64_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > degree)
          break;
        ++pos;
      }
      if (value >= degree)
        throw ParseError("point " + std::to_string(value) + " out of range for degree " +
                         std::to_string(degree));
      if (used[value])
        throw ParseError("repeated point " + std::to_string(value) + " in cycle word");
      used[value] = true;
      cycle.push_back(static_cast<Point>(value));
    }

    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }

  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < images_.size(); ++x)
    inv[images_[x]] = x;
  Permutation res;
  res.images_ = std::move(inv);
  return res;
}

Permutation Permutation::pow(std::int64_t e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation res(degree());
  while (n) {
    if (n & 1u)
      res = res * base;
    base = base * base;
    n >>= 1u;
  }
  return res;
}

std::uint64_t Permutation::order() const
{
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x])
      continue;
    std::uint64_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Point Permutation::first_moved() const
{
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != x)
      return x;
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycles() const
{
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out += '(';
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x)
        out += ' ';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &a, const Permutation &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Permutation res;
  res.images_.resize(a.degree());
  for (Point x = 0; x < a.degree(); ++x)
    res.images_[x] = b.images_[a.images_[x]];
  return res;
}

Permutation conjugate(const Permutation &x, const Permutation &g)
{
  return g.inverse() * x * g;
}

} // namespace permchar
