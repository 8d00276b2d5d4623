#pragma once

#include <cstdint>
#include <vector>

#include "permchar/cyclo.hpp"
#include "permchar/group.hpp"
#include "permchar/subgroup.hpp"

namespace permchar
{

// A function on the conjugacy classes of a group, in canonical class order.
class ClassFunction
{
public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclo> values);

  static ClassFunction trivial(GroupPtr group);

  const GroupPtr &group() const { return group_; }
  const std::vector<Cyclo> &values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Cyclo &operator[](std::size_t c) const { return values_[c]; }
  const Cyclo &degree() const { return values_.front(); }
  // Value at a group element.
  const Cyclo &at(Elem g) const { return values_[group_->class_of(g)]; }

  ClassFunction conj() const;
  friend ClassFunction operator+(const ClassFunction &a, const ClassFunction &b);
  friend ClassFunction operator-(const ClassFunction &a, const ClassFunction &b);
  friend ClassFunction operator*(const ClassFunction &a, const ClassFunction &b);
  friend ClassFunction operator*(const Rational &r, const ClassFunction &a);
  friend bool operator==(const ClassFunction &a, const ClassFunction &b);

private:
  GroupPtr group_;
  std::vector<Cyclo> values_;
};

class CharacterTable
{
public:
  CharacterTable(GroupPtr group, std::vector<std::vector<Cyclo>> rows, std::uint32_t prime);

  GroupPtr group() const;
  // Copy that does not keep the group alive, for the table cached inside it.
  CharacterTable unowned() const;
  std::size_t size() const { return rows_.size(); }
  const std::vector<Cyclo> &values(std::size_t row) const { return rows_[row]; }
  ClassFunction row(std::size_t r) const { return {group(), rows_[r]}; }
  std::vector<ClassFunction> rows() const;
  std::uint64_t degree(std::size_t row) const;
  std::vector<std::uint64_t> degrees() const;
  // The prime used for the modular stage.
  std::uint32_t prime() const { return prime_; }

  // Row index of an irreducible character, if it is one.
  std::optional<std::size_t> find(const ClassFunction &chi) const;
  // Inner products with every row.
  std::vector<Cyclo> decompose(const ClassFunction &f) const;

private:
  const Group *group_;
  GroupPtr owner_;
  std::vector<std::vector<Cyclo>> rows_;
  std::uint32_t prime_;
};

// Dixon-Schneider. Throws std::runtime_error when no admissible prime exists.
CharacterTable compute_character_table(const GroupPtr &g);
const CharacterTable &character_table(const GroupPtr &g);

// (1/|G|) sum_g a(g) conj(b(g))
Cyclo inner_product(const ClassFunction &a, const ClassFunction &b);

// Restriction to h (as a function on h.as_group()).
ClassFunction restrict_to(const ClassFunction &chi, const Subgroup &h);
// Induction of a class function of h.as_group() to the ambient group.
ClassFunction induce(const ClassFunction &lambda, const Subgroup &h);

// All linear characters of h, as class functions on h.as_group(); the
// trivial character comes first.
std::vector<ClassFunction> linear_characters(const Subgroup &h);

// True when every inner product with the table rows is a nonnegative integer.
bool is_character(const ClassFunction &f);

// Union of the classes where chi(g) = chi(1). Throws std::invalid_argument
// when chi is not a character.
Subgroup kernel(const ClassFunction &chi);
// G / ker chi has a unique minimal normal subgroup. The principal
// character (G / ker = 1) counts as monolithic.
bool is_monolithic(const ClassFunction &chi);

} // namespace permchar
