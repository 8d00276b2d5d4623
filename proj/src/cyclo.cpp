#include "permchar/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "permchar/error.hpp"

namespace permchar
{

namespace
{

using Coeffs = std::map<std::uint32_t, Rational>;

struct PrimePower
{
  std::uint64_t p;
  unsigned nu;
  std::uint64_t q;
};

std::vector<PrimePower> factor(std::uint64_t n)
{
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.nu;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (n > 1)
    out.push_back({n, 1, n});
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
  if (m == 1)
    return 0;
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (r != 1)
    throw std::invalid_argument("not invertible");
  if (t < 0)
    t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

void add_to(Coeffs &c, std::uint32_t k, const Rational &v)
{
  auto [it, inserted] = c.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0)
      c.erase(it);
  }
}

void sub_from(Coeffs &c, std::uint32_t k, const Rational &v)
{
  auto [it, inserted] = c.emplace(k, -v);
  if (!inserted) {
    it->second -= v;
    if (it->second == 0)
      c.erase(it);
  }
}

// Q(z_n) = Q(z_{n/2}) for n = 2 mod 4.
void halve_conductor(std::uint32_t &n, Coeffs &c)
{
  const std::uint32_t half = n / 2;
  Coeffs even;
  for (auto &[k, v] : c) {
    if (k % 2)
      sub_from(even, (k + half) % n, v); // z^k = -z^(k + n/2)
    else
      add_to(even, k, v);
  }
  Coeffs out;
  for (auto &[k, v] : even)
    add_to(out, k / 2, v);
  n = half;
  c = std::move(out);
}

// Rewrite every exponent outside the Zumbroich basis of Q(z_n).
void reduce_to_basis(std::uint32_t n, Coeffs &c)
{
  for (const auto &pp : factor(n)) {
    const std::uint64_t rest = n / pp.q;
    const std::uint64_t u = inverse_mod(rest % pp.q, pp.q);
    const std::uint64_t top = pp.q / pp.p;
    const std::uint64_t forbidden = pp.p == 2 ? 1 : 0;
    const std::uint64_t step = n / pp.p;
    Coeffs out;
    for (auto &[k, v] : c) {
      std::uint64_t digit = ((k * u) % pp.q) / top;
      if (digit != forbidden) {
        add_to(out, k, v);
        continue;
      }
      for (std::uint64_t j = 1; j < pp.p; ++j)
        sub_from(out, static_cast<std::uint32_t>((k + j * step) % n), v);
    }
    c = std::move(out);
  }
}

// Try to express the element in Q(z_{n/p}) for some prime p.
bool shrink_conductor(std::uint32_t &n, Coeffs &c)
{
  for (const auto &pp : factor(n)) {
    if (pp.nu >= 2) {
      bool all_divisible = true;
      for (auto &[k, v] : c) {
        if (k % pp.p) {
          all_divisible = false;
          break;
        }
      }
      if (!all_divisible)
        continue;
      Coeffs out;
      for (auto &[k, v] : c)
        out.emplace(static_cast<std::uint32_t>(k / pp.p), v);
      n = static_cast<std::uint32_t>(n / pp.p);
      c = std::move(out);
      return true;
    }

    // p exactly divides n (p odd here): z_n^k = z_p^a z_m^b, and the element
    // lies in Q(z_m) iff for each b all coefficients over a = 1..p-1 agree.
    const std::uint64_t p = pp.p;
    const std::uint64_t m = n / p;
    const std::uint64_t inv_m = inverse_mod(m % p, p);
    const std::uint64_t inv_p = inverse_mod(p % m, m);
    std::map<std::uint64_t, std::vector<Rational>> groups;
    for (auto &[k, v] : c) {
      std::uint64_t a = (k * inv_m) % p;
      std::uint64_t b = m == 1 ? 0 : (k * inv_p) % m;
      auto &g = groups[b];
      if (g.empty())
        g.assign(p - 1, Rational(0));
      g[a - 1] = v;
    }
    bool ok = true;
    for (auto &[b, g] : groups) {
      for (std::size_t i = 1; i < g.size(); ++i) {
        if (g[i] != g[0]) {
          ok = false;
          break;
        }
      }
      if (!ok)
        break;
    }
    if (!ok)
      continue;
    Coeffs out;
    for (auto &[b, g] : groups)
      add_to(out, static_cast<std::uint32_t>(b), -g[0]);
    n = static_cast<std::uint32_t>(m);
    c = std::move(out);
    return true;
  }
  return false;
}

} // namespace

Cyclo::Cyclo(long value) : Cyclo(Rational(value)) {}

Cyclo::Cyclo(const Rational &value)
{
  if (value != 0) {
    terms_.push_back({0, value});
    terms_.back().coeff.canonicalize();
  }
}

Cyclo Cyclo::canonical(std::uint32_t n, Coeffs coeffs)
{
  if (n == 0)
    throw std::invalid_argument("conductor must be positive");
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    it->second.canonicalize();
    if (it->second == 0)
      it = coeffs.erase(it);
    else
      ++it;
  }
  if (n % 4 == 2)
    halve_conductor(n, coeffs);
  reduce_to_basis(n, coeffs);
  while (n > 1 && !coeffs.empty() && shrink_conductor(n, coeffs)) {
    if (n % 4 == 2)
      halve_conductor(n, coeffs);
  }
  Cyclo out;
  if (coeffs.empty())
    return out;
  out.conductor_ = n;
  for (auto &[k, v] : coeffs)
    out.terms_.push_back({k, v});
  return out;
}

Cyclo Cyclo::root_of_unity(std::uint32_t n, std::int64_t k)
{
  auto nn = static_cast<std::int64_t>(n);
  std::int64_t e = ((k % nn) + nn) % nn;
  Coeffs c;
  c.emplace(static_cast<std::uint32_t>(e), Rational(1));
  return canonical(n, std::move(c));
}

Cyclo Cyclo::from_powers(std::uint32_t n, const std::map<std::uint32_t, Rational> &coeffs)
{
  Coeffs c;
  for (auto &[k, v] : coeffs)
    add_to(c, k % n, v);
  return canonical(n, std::move(c));
}

std::optional<Rational> Cyclo::as_rational() const
{
  if (!is_rational())
    return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

bool Cyclo::is_integer() const
{
  auto r = as_rational();
  return r && r->get_den() == 1;
}

bool Cyclo::is_nonneg_integer() const
{
  auto r = as_rational();
  return r && r->get_den() == 1 && *r >= 0;
}

Cyclo Cyclo::galois(std::int64_t a) const
{
  if (conductor_ == 1)
    return *this;
  auto n = static_cast<std::int64_t>(conductor_);
  std::int64_t am = ((a % n) + n) % n;
  if (std::gcd(am, n) != 1)
    throw std::invalid_argument("Galois exponent not coprime to the conductor");
  Coeffs c;
  for (const auto &t : terms_)
    add_to(c, static_cast<std::uint32_t>((t.exponent * am) % n), t.coeff);
  return canonical(conductor_, std::move(c));
}

Cyclo Cyclo::operator-() const
{
  Cyclo out = *this;
  for (auto &t : out.terms_)
    t.coeff = -t.coeff;
  return out;
}

Cyclo operator+(const Cyclo &a, const Cyclo &b)
{
  if (b.is_zero())
    return a;
  if (a.is_zero())
    return b;
  std::uint32_t n = std::lcm(a.conductor_, b.conductor_);
  Coeffs c;
  for (const auto &t : a.terms_)
    add_to(c, t.exponent * (n / a.conductor_), t.coeff);
  for (const auto &t : b.terms_)
    add_to(c, t.exponent * (n / b.conductor_), t.coeff);
  return Cyclo::canonical(n, std::move(c));
}

Cyclo operator-(const Cyclo &a, const Cyclo &b) { return a + (-b); }

Cyclo operator*(const Cyclo &a, const Cyclo &b)
{
  if (a.is_zero() || b.is_zero())
    return Cyclo();
  if (a.is_rational() || b.is_rational()) {
    const Cyclo &other = a.is_rational() ? b : a;
    Rational r = a.is_rational() ? a.terms_.front().coeff : b.terms_.front().coeff;
    Cyclo out = other;
    for (auto &t : out.terms_)
      t.coeff *= r;
    return out;
  }
  std::uint32_t n = std::lcm(a.conductor_, b.conductor_);
  std::uint64_t sa = n / a.conductor_, sb = n / b.conductor_;
  Coeffs c;
  for (const auto &ta : a.terms_) {
    for (const auto &tb : b.terms_) {
      auto e = static_cast<std::uint32_t>((ta.exponent * sa + tb.exponent * sb) % n);
      add_to(c, e, ta.coeff * tb.coeff);
    }
  }
  return Cyclo::canonical(n, std::move(c));
}

Cyclo operator/(const Cyclo &a, const Rational &r)
{
  if (r == 0)
    throw std::domain_error("division by zero");
  Cyclo out = a;
  for (auto &t : out.terms_)
    t.coeff /= r;
  return out;
}

bool operator<(const Cyclo &a, const Cyclo &b)
{
  if (a.conductor_ != b.conductor_)
    return a.conductor_ < b.conductor_;
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto &ta = a.terms_[i];
    const auto &tb = b.terms_[i];
    if (ta.exponent != tb.exponent)
      return ta.exponent < tb.exponent;
    if (ta.coeff != tb.coeff)
      return ta.coeff < tb.coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Cyclo::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &t : terms_) {
    std::string body;
    Rational mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (t.exponent == 0) {
      body = mag.get_str();
    } else {
      std::string root = "z(" + std::to_string(conductor_) + ")^" + std::to_string(t.exponent);
      body = mag == 1 ? root : mag.get_str() + "*" + root;
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::complex<double> Cyclo::to_complex() const
{
  std::complex<double> sum = 0;
  for (const auto &t : terms_) {
    double angle = 2.0 * std::numbers::pi * t.exponent / conductor_;
    sum += t.coeff.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

Cyclo Cyclo::parse(std::string_view text)
{
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string &why) -> void {
    throw ParseError("cannot parse cyclotomic \"" + std::string(text) + "\": " + why);
  };
  auto read_uint = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos)
      fail("expected a number at position " + std::to_string(start));
    return std::string(text.substr(start, pos - start));
  };

  Cyclo sum;
  bool first = true;
  skip();
  if (pos == text.size())
    fail("empty input");
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    Rational coeff(1);
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_uint();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den = read_uint();
        if (mpz_class(den) == 0)
          fail("zero denominator");
        coeff = Rational(mpz_class(num), mpz_class(den));
        coeff.canonicalize();
      } else {
        coeff = Rational(mpz_class(num));
      }
      have_coeff = true;
      skip();
    }

    Cyclo term(coeff);
    bool star = false;
    if (have_coeff && pos < text.size() && text[pos] == '*') {
      ++pos;
      skip();
      star = true;
    }
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      if (pos >= text.size() || text[pos] != '(')
        fail("expected '(' after z");
      ++pos;
      auto n = std::stoul(read_uint());
      if (pos >= text.size() || text[pos] != ')')
        fail("expected ')'");
      ++pos;
      std::uint64_t k = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        k = std::stoull(read_uint());
      }
      if (n == 0)
        fail("conductor 0");
      term = Cyclo(coeff) * root_of_unity(static_cast<std::uint32_t>(n), static_cast<std::int64_t>(k % n));
      skip();
    } else if (star || !have_coeff) {
      fail("expected a root of unity z(n)^k");
    }
    sum += negative ? -term : term;
  }
  return sum;
}

std::ostream &operator<<(std::ostream &os, const Cyclo &c) { return os << c.to_string(); }

} // namespace permchar
