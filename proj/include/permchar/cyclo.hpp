#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace permchar
{

using Rational = mpq_class;

// An exact element of a cyclotomic field Q(z_n), z_n = exp(2 pi i / n).
//
// Elements are stored as rational combinations of the Zumbroich basis of
// Q(z_n) with n the conductor, i.e. the smallest n for which the value
// lies in Q(z_n). The representation is unique, so equality is syntactic.
// Rationals have conductor 1; conductors are never 2 mod 4.
class Cyclo
{
public:
  struct Term
  {
    std::uint32_t exponent;
    Rational coeff;
    friend bool operator==(const Term &, const Term &) = default;
  };

  Cyclo() = default;
  Cyclo(long value);
  Cyclo(const Rational &value);

  // z_n^k
  static Cyclo root_of_unity(std::uint32_t n, std::int64_t k);
  // sum_k coeffs[k] * z_n^k, for arbitrary exponents k < n.
  static Cyclo from_powers(std::uint32_t n, const std::map<std::uint32_t, Rational> &coeffs);

  // Inverse of to_string(). Throws ParseError.
  static Cyclo parse(std::string_view text);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Term> &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  std::optional<Rational> as_rational() const;
  bool is_integer() const;
  bool is_nonneg_integer() const;

  Cyclo conj() const { return galois(-1); }
  // z_n -> z_n^a for a coprime to the conductor.
  Cyclo galois(std::int64_t a) const;

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator-(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator*(const Cyclo &a, const Cyclo &b);
  friend Cyclo operator/(const Cyclo &a, const Rational &r);
  Cyclo &operator+=(const Cyclo &b) { return *this = *this + b; }
  Cyclo &operator-=(const Cyclo &b) { return *this = *this - b; }
  Cyclo &operator*=(const Cyclo &b) { return *this = *this * b; }

  friend bool operator==(const Cyclo &a, const Cyclo &b)
  {
    return a.conductor_ == b.conductor_ && a.terms_ == b.terms_;
  }
  // Deterministic total order (conductor, then terms); not numeric.
  friend bool operator<(const Cyclo &a, const Cyclo &b);

  // "a0 + a1*z(n)^1 + ..." with exact rational coefficients.
  std::string to_string() const;
  std::complex<double> to_complex() const;

private:
  static Cyclo canonical(std::uint32_t n, std::map<std::uint32_t, Rational> coeffs);

  std::uint32_t conductor_ = 1;
  std::vector<Term> terms_;
};

std::ostream &operator<<(std::ostream &os, const Cyclo &c);

} // namespace permchar
