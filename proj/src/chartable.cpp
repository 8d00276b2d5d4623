#include "permchar/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "permchar/kernels.hpp"
#include "permchar/modp.hpp"
#include "permchar/structure.hpp"
#include "permchar/subgroups.hpp"

namespace permchar
{

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclo> values)
  : group_(std::move(group)), values_(std::move(values))
{
  if (values_.size() != group_->num_classes())
    throw std::invalid_argument("class function length does not match the class count");
}

ClassFunction ClassFunction::trivial(GroupPtr group)
{
  std::vector<Cyclo> ones(group->num_classes(), Cyclo(1));
  return {std::move(group), std::move(ones)};
}

ClassFunction ClassFunction::conj() const
{
  ClassFunction out = *this;
  for (auto &v : out.values_)
    v = v.conj();
  return out;
}

namespace
{

void require_same_group(const ClassFunction &a, const ClassFunction &b)
{
  if (a.group() != b.group())
    throw std::invalid_argument("class functions live on different groups");
}

template <class Op>
ClassFunction pointwise(const ClassFunction &a, const ClassFunction &b, Op op)
{
  require_same_group(a, b);
  std::vector<Cyclo> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c)
    v[c] = op(a[c], b[c]);
  return {a.group(), std::move(v)};
}

} // namespace

ClassFunction operator+(const ClassFunction &a, const ClassFunction &b)
{
  return pointwise(a, b, [](const Cyclo &x, const Cyclo &y) { return x + y; });
}

ClassFunction operator-(const ClassFunction &a, const ClassFunction &b)
{
  return pointwise(a, b, [](const Cyclo &x, const Cyclo &y) { return x - y; });
}

ClassFunction operator*(const ClassFunction &a, const ClassFunction &b)
{
  return pointwise(a, b, [](const Cyclo &x, const Cyclo &y) { return x * y; });
}

ClassFunction operator*(const Rational &r, const ClassFunction &a)
{
  std::vector<Cyclo> v = a.values();
  for (auto &x : v)
    x = Cyclo(r) * x;
  return {a.group(), std::move(v)};
}

bool operator==(const ClassFunction &a, const ClassFunction &b)
{
  return a.group() == b.group() && a.values() == b.values();
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<std::vector<Cyclo>> rows,
                               std::uint32_t prime)
  : group_(group.get()), owner_(std::move(group)), rows_(std::move(rows)), prime_(prime)
{}

GroupPtr CharacterTable::group() const { return owner_ ? owner_ : group_->self(); }

CharacterTable CharacterTable::unowned() const
{
  CharacterTable t = *this;
  t.owner_.reset();
  return t;
}

std::vector<ClassFunction> CharacterTable::rows() const
{
  std::vector<ClassFunction> out;
  out.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    out.push_back(row(r));
  return out;
}

std::uint64_t CharacterTable::degree(std::size_t row) const
{
  return rows_[row].front().as_rational()->get_num().get_ui();
}

std::vector<std::uint64_t> CharacterTable::degrees() const
{
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    out.push_back(degree(r));
  return out;
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction &chi) const
{
  if (chi.group().get() != group_)
    return std::nullopt;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] == chi.values())
      return r;
  }
  return std::nullopt;
}

std::vector<Cyclo> CharacterTable::decompose(const ClassFunction &f) const
{
  std::vector<Cyclo> out;
  out.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    out.push_back(inner_product(f, row(r)));
  return out;
}

namespace
{

using modp::Field;
using modp::Mat;
using modp::Vec;

constexpr std::uint32_t kSplitSeed = 20240511;

// Splits the T-invariant subspace spanned by the rows of `basis` (in reduced
// echelon form) into eigenspaces of T.
std::vector<Mat> split(const Field &f, const Mat &basis, const std::vector<std::size_t> &pivots,
                       const Mat &t)
{
  const std::size_t d = basis.size();
  const std::size_t k = t.size();
  Mat a(d, Vec(d, 0));
  for (std::size_t s = 0; s < d; ++s) {
    Vec image(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < k; ++l)
        acc += std::uint64_t{t[i][l]} * basis[s][l] % f.p();
      image[i] = static_cast<std::uint32_t>(acc % f.p());
    }
    for (std::size_t r = 0; r < d; ++r)
      a[r][s] = image[pivots[r]];
  }

  std::vector<Mat> pieces;
  std::size_t total = 0;
  for (auto lambda : modp::roots(f, modp::charpoly(f, a))) {
    Mat shifted = a;
    for (std::size_t r = 0; r < d; ++r)
      shifted[r][r] = f.sub(shifted[r][r], lambda);
    Mat coords = modp::null_space(f, shifted);
    Mat piece;
    for (const auto &c : coords) {
      Vec v(k, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (c[s] == 0)
          continue;
        for (std::size_t l = 0; l < k; ++l)
          v[l] = f.add(v[l], f.mul(c[s], basis[s][l]));
      }
      piece.push_back(std::move(v));
    }
    total += piece.size();
    pieces.push_back(std::move(piece));
  }
  if (total != d)
    throw std::logic_error("class matrix is not diagonalizable over GF(p)");
  return pieces;
}

} // namespace

CharacterTable compute_character_table(const GroupPtr &g)
{
  const Group &group = *g;
  const std::size_t k = group.num_classes();
  const std::uint64_t n = group.order();
  const std::uint64_t e = group.exponent();

  const std::uint32_t p = modp::prime_one_mod(e, 4 * n);
  if (p == 0)
    throw std::runtime_error("no prime p = 1 mod " + std::to_string(e) + " with p > 2*sqrt(" +
                             std::to_string(n) + ") below 2^31");
  const Field f(p);

  const auto constants = kernels::structure_constants(group);
  auto class_matrix = [&](std::size_t j) {
    Mat m(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        m[i][l] = static_cast<std::uint32_t>(constants[(j * k + i) * k + l] % p);
    return m;
  };

  struct Space
  {
    Mat basis;
    std::vector<std::size_t> pivots;
  };
  Mat identity(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    identity[i][i] = 1;
  std::vector<Space> spaces;
  {
    auto pivots = modp::rref(f, identity);
    spaces.push_back({identity, pivots});
  }

  auto refine = [&](const Mat &t) {
    std::vector<Space> next;
    for (auto &s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto &piece : split(f, s.basis, s.pivots, t)) {
        auto pivots = modp::rref(f, piece);
        next.push_back({std::move(piece), std::move(pivots)});
      }
    }
    spaces = std::move(next);
  };

  if (k > 1) {
    std::mt19937 rng(kSplitSeed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    Mat combined(k, Vec(k, 0));
    for (std::size_t j = 1; j < k; ++j) {
      const auto m = class_matrix(j);
      const std::uint32_t c = coeff(rng);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l)
          combined[i][l] = f.add(combined[i][l], f.mul(c, m[i][l]));
    }
    refine(combined);
    for (std::size_t j = 1; j < k && spaces.size() < k; ++j)
      refine(class_matrix(j));
  }
  if (spaces.size() != k)
    throw std::logic_error("eigenspace splitting did not separate all characters");

  const std::uint32_t root = f.primitive_root();
  const auto max_degree = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)) + 1);

  std::vector<std::vector<Cyclo>> rows;
  for (const auto &s : spaces) {
    Vec w = s.basis.front();
    if (w[0] == 0)
      throw std::logic_error("central character vanishes at the identity");
    const std::uint32_t scale = f.inv(w[0]);
    for (auto &x : w)
      x = f.mul(x, scale);

    std::uint32_t norm = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto size = static_cast<std::uint32_t>(group.classes()[i].size % p);
      norm = f.add(norm, f.mul(f.mul(w[i], w[group.inverse_class(i)]), f.inv(size)));
    }
    const std::uint32_t target = f.mul(static_cast<std::uint32_t>(n % p), f.inv(norm));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= max_degree; ++d) {
      if (d * d > n)
        break;
      if (d * d % p == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0)
      throw std::logic_error("no admissible character degree");

    Vec chi(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto size = static_cast<std::uint32_t>(group.classes()[i].size % p);
      chi[i] = f.mul(f.mul(w[i], static_cast<std::uint32_t>(degree)), f.inv(size));
    }

    std::vector<Cyclo> row(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t o = group.classes()[i].element_order;
      const std::uint32_t zeta = f.pow(root, (p - 1) / o);
      const std::uint32_t inv_o = f.inv(o % p);
      std::vector<std::uint32_t> powers(o);
      for (std::uint32_t s2 = 0; s2 < o; ++s2)
        powers[s2] = chi[group.power_class(i, s2)];
      std::map<std::uint32_t, Rational> mult;
      for (std::uint32_t t = 0; t < o; ++t) {
        std::uint32_t acc = 0;
        const std::uint32_t step = f.inv(f.pow(zeta, t));
        std::uint32_t z = 1;
        for (std::uint32_t s2 = 0; s2 < o; ++s2) {
          acc = f.add(acc, f.mul(powers[s2], z));
          z = f.mul(z, step);
        }
        const std::uint32_t m = f.mul(acc, inv_o);
        if (m > degree)
          throw std::logic_error("eigenvalue multiplicity out of range while lifting");
        if (m)
          mult.emplace(t, Rational(m));
      }
      row[i] = Cyclo::from_powers(o, mult);
    }
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const std::vector<Cyclo> &a, const std::vector<Cyclo> &b) {
    auto trivial = [](const std::vector<Cyclo> &r) {
      return std::all_of(r.begin(), r.end(), [](const Cyclo &c) { return c == Cyclo(1); });
    };
    if (trivial(a) != trivial(b))
      return trivial(a);
    if (a.front() != b.front())
      return *a.front().as_rational() < *b.front().as_rational();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });

  std::uint64_t sum = 0;
  for (const auto &r : rows) {
    auto d = r.front().as_rational()->get_num().get_ui();
    sum += d * d;
  }
  if (sum != n)
    throw std::logic_error("sum of squared degrees differs from the group order");
  return CharacterTable(g, std::move(rows), p);
}

const CharacterTable &Group::character_table() const
{
  return *table_.get(
    [&] { return std::make_shared<const CharacterTable>(compute_character_table(self()).unowned()); });
}

const CharacterTable &character_table(const GroupPtr &g) { return g->character_table(); }

Cyclo inner_product(const ClassFunction &a, const ClassFunction &b)
{
  require_same_group(a, b);
  const Group &group = *a.group();
  Cyclo sum;
  for (std::size_t c = 0; c < a.size(); ++c)
    sum += Cyclo(Rational(static_cast<unsigned long>(group.classes()[c].size))) * a[c] * b[c].conj();
  return sum / Rational(static_cast<unsigned long>(group.order()));
}

ClassFunction restrict_to(const ClassFunction &chi, const Subgroup &h)
{
  if (chi.group() != h.ambient())
    throw std::invalid_argument("restriction to a subgroup of a different group");
  const auto &fusion = h.fusion();
  std::vector<Cyclo> v(fusion.size());
  for (std::size_t c = 0; c < fusion.size(); ++c)
    v[c] = chi[fusion[c]];
  return {h.as_group(), std::move(v)};
}

ClassFunction induce(const ClassFunction &lambda, const Subgroup &h)
{
  const GroupPtr local = h.as_group();
  if (lambda.group() != local)
    throw std::invalid_argument("induction of a class function from another group");
  const Group &ambient = *h.ambient();
  const auto &fusion = h.fusion();
  std::vector<Cyclo> sums(ambient.num_classes());
  for (std::size_t c = 0; c < fusion.size(); ++c)
    sums[fusion[c]] += Cyclo(Rational(static_cast<unsigned long>(local->classes()[c].size))) * lambda[c];
  // |C_G(g)| / |H| * sum over fused H-classes of |c| lambda(c)
  for (std::size_t c = 0; c < sums.size(); ++c) {
    if (sums[c].is_zero())
      continue;
    Rational factor(static_cast<unsigned long>(ambient.classes()[c].centralizer_order),
                    static_cast<unsigned long>(h.order()));
    factor.canonicalize();
    sums[c] = Cyclo(factor) * sums[c];
  }
  return {h.ambient(), std::move(sums)};
}

std::vector<ClassFunction> linear_characters(const Subgroup &h)
{
  const GroupPtr local = h.as_group();
  const Group &group = *local;
  const Subgroup derived = derived_subgroup(Subgroup::whole(local));
  const CosetAction quotient = coset_action(derived);
  const std::size_t size = quotient.representatives.size();
  auto mul = [&](std::size_t a, std::size_t b) -> std::size_t {
    return quotient.coset_of[group.elements().mul(quotient.representatives[a],
                                                  quotient.representatives[b])];
  };
  const std::size_t one = quotient.coset_of[group.elements().identity()];

  // Cyclic decomposition A = <a_1> x ... x <a_r>, n_1 >= n_2 >= ...
  std::vector<std::size_t> gens;
  std::vector<std::uint32_t> orders;
  std::vector<std::vector<std::uint32_t>> coord(size);
  std::vector<bool> in_span(size, false);
  in_span[one] = true;
  std::vector<std::size_t> span{one};
  while (span.size() < size) {
    std::size_t best = size;
    std::uint32_t best_order = 0;
    for (std::size_t c = 0; c < size; ++c) {
      if (in_span[c])
        continue;
      std::uint32_t m = 1;
      std::size_t x = c;
      while (!in_span[x]) {
        x = mul(x, c);
        ++m;
      }
      if (m > best_order) {
        best_order = m;
        best = c;
      }
    }
    // best^m lies in the span; strip that part so the new factor splits off.
    std::size_t power = best;
    for (std::uint32_t i = 1; i < best_order; ++i)
      power = mul(power, best);
    std::size_t corrected = best;
    const auto &t = coord[power];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::uint32_t ti = i < t.size() ? t[i] : 0;
      if (ti % best_order)
        throw std::logic_error("abelian decomposition failed");
      std::uint32_t back = (orders[i] - ti / best_order) % orders[i];
      for (std::uint32_t r = 0; r < back; ++r)
        corrected = mul(corrected, gens[i]);
    }

    std::vector<std::size_t> grown;
    grown.reserve(span.size() * best_order);
    for (auto b : span) {
      std::size_t x = b;
      for (std::uint32_t ex = 0; ex < best_order; ++ex) {
        if (ex > 0) {
          if (in_span[x])
            throw std::logic_error("abelian decomposition is not direct");
          in_span[x] = true;
          coord[x] = coord[b];
          coord[x].resize(gens.size(), 0);
          coord[x].push_back(ex);
        }
        grown.push_back(x);
        x = mul(x, corrected);
      }
    }
    for (auto b : span)
      coord[b].resize(gens.size() + 1, 0);
    span = std::move(grown);
    gens.push_back(corrected);
    orders.push_back(best_order);
  }

  const std::uint32_t exponent = orders.empty() ? 1 : orders.front();
  std::vector<std::size_t> class_coset(group.num_classes());
  for (std::size_t c = 0; c < group.num_classes(); ++c)
    class_coset[c] = quotient.coset_of[group.classes()[c].representative];

  std::vector<ClassFunction> out;
  std::vector<std::uint32_t> k(orders.size(), 0);
  while (true) {
    std::vector<Cyclo> values(group.num_classes());
    for (std::size_t c = 0; c < values.size(); ++c) {
      std::uint64_t ex = 0;
      const auto &co = coord[class_coset[c]];
      for (std::size_t i = 0; i < k.size(); ++i)
        ex += std::uint64_t{k[i]} * co[i] * (exponent / orders[i]);
      values[c] = Cyclo::root_of_unity(exponent, static_cast<std::int64_t>(ex % exponent));
    }
    out.emplace_back(local, std::move(values));
    std::size_t i = k.size();
    while (i-- > 0) {
      if (++k[i] < orders[i])
        break;
      k[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1))
      break;
  }
  return out;
}

bool is_character(const ClassFunction &f)
{
  for (const auto &m : character_table(f.group()).decompose(f)) {
    if (!m.is_nonneg_integer())
      return false;
  }
  return true;
}

Subgroup kernel(const ClassFunction &chi)
{
  if (!is_character(chi))
    throw std::invalid_argument("kernel of a class function that is not a character");
  const Group &group = *chi.group();
  std::vector<Elem> elems;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    if (chi[c] == chi.degree()) {
      const auto &m = group.class_members(c);
      elems.insert(elems.end(), m.begin(), m.end());
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup::from_elements(chi.group(), std::move(elems));
}

bool is_monolithic(const ClassFunction &chi)
{
  const Subgroup k = kernel(chi);
  if (k.is_whole())
    return true;
  std::vector<Subgroup> above;
  for (const auto &n : normal_subgroups(chi.group())) {
    if (n.order() > k.order() && n.contains(k))
      above.push_back(n);
  }
  std::size_t minimal = 0;
  for (const auto &n : above) {
    bool is_min = true;
    for (const auto &m : above) {
      if (m.order() < n.order() && n.contains(m)) {
        is_min = false;
        break;
      }
    }
    if (is_min)
      ++minimal;
  }
  return minimal == 1;
}

} // namespace permchar
