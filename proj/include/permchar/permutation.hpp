#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permchar
{

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}. Products act on the right:
// x^(a*b) = (x^a)^b, i.e. (a * b)[x] == b[a[x]].
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  // Parses cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  std::uint64_t order() const;

  // Smallest moved point, or degree() for the identity.
  Point first_moved() const;

  std::string to_cycles() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a, const Permutation &b)
  {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

// Conjugate g^-1 * x * g.
Permutation conjugate(const Permutation &x, const Permutation &g);

} // namespace permchar
