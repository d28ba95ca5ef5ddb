// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "galmod/rational.hpp"

namespace galmod {

using Tuple = std::vector<std::uint32_t>;

// Z/n_1 x ... x Z/n_k with n_1 | n_2 | ... | n_k, each n_i >= 2.
// Elements and characters are both exponent tuples, addressed by the
// mixed-radix index sum a_i * (n_1 ... n_{i-1}).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::uint32_t> invariant_factors);
  static AbelianGroup cyclic(std::uint32_t n);

  const std::vector<std::uint32_t>& invariants() const { return inv_; }
  std::size_t order() const { return order_; }
  std::uint32_t exponent() const { return exponent_; }
  std::size_t rank() const { return inv_.size(); }

  std::size_t index(const Tuple& t) const;
  Tuple tuple(std::size_t index) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t times(std::int64_t k, std::size_t a) const;
  std::uint32_t element_order(std::size_t a) const;

  // Characters share the element indexing: chi_a(g) = exp(2 pi i sum a_i g_i / n_i).
  // phase() returns that exponent in units of 1/exponent().
  std::uint64_t phase(std::size_t chi, std::size_t g) const;
  std::size_t char_mul(std::size_t a, std::size_t b) const { return add(a, b); }
  std::size_t char_inv(std::size_t a) const { return neg(a); }
  std::size_t char_pow(std::size_t a, std::int64_t k) const { return times(k, a); }
  std::uint32_t char_order(std::size_t a) const { return element_order(a); }

  // chi^E with E = 1 mod the prime-to-p part of the exponent and 0 mod its
  // p part.
  std::size_t p_prime_part(std::size_t chi, std::uint32_t p) const;
  bool is_p_prime(std::size_t chi, std::uint32_t p) const;
  std::vector<std::size_t> p_prime_characters(std::uint32_t p) const;
  std::size_t sylow_order(std::uint32_t p) const;

  std::string label(std::size_t index) const;  // "(a1,a2)" or "()"

  bool operator==(const AbelianGroup& o) const { return inv_ == o.inv_; }
  bool operator!=(const AbelianGroup& o) const { return !(*this == o); }

 private:
  std::vector<std::uint32_t> inv_;
  std::size_t order_ = 1;
  std::uint32_t exponent_ = 1;
};

class Subgroup;

// An abstract copy H' of a subgroup H with invariant factors, plus the
// embedding H' -> G.
struct SubgroupStructure {
  AbelianGroup group;
  std::vector<std::size_t> basis_images;   // image of each standard generator
  std::vector<std::size_t> local_to_ambient;
  std::vector<std::int64_t> ambient_to_local;  // -1 off H

  // Character of H' obtained by restricting a character of the ambient group.
  std::size_t restrict_character(const AbelianGroup& ambient, std::size_t chi) const;
};

class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup generated(const AbelianGroup& g, std::vector<std::size_t> generators);
  static Subgroup from_tuples(const AbelianGroup& g, const std::vector<Tuple>& generators);
  static Subgroup trivial(const AbelianGroup& g);
  static Subgroup whole(const AbelianGroup& g);
  // The unique subgroup of order d of a cyclic group.
  static Subgroup cyclic_of_order(const AbelianGroup& g, std::uint32_t d);

  const AbelianGroup& ambient() const { return g_; }
  const std::vector<std::size_t>& generators() const { return gens_; }
  const std::vector<std::size_t>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool contains(std::size_t a) const { return member_[a] != 0; }
  bool is_subset_of(const Subgroup& o) const;
  bool operator==(const Subgroup& o) const { return g_ == o.g_ && member_ == o.member_; }

  Subgroup intersect(const Subgroup& o) const;
  Subgroup join(const Subgroup& o) const;

  bool character_trivial_on(std::size_t chi) const;
  bool characters_agree_on(std::size_t a, std::size_t b) const;
  // Order of the restriction of chi to this subgroup.
  std::uint32_t restricted_order(std::size_t chi) const;

  const SubgroupStructure& structure() const;
  // K inside this subgroup, re-expressed as a subgroup of structure().group.
  Subgroup localize(const Subgroup& K) const;

 private:
  AbelianGroup g_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> elems_;
  std::vector<char> member_;
  mutable std::shared_ptr<const SubgroupStructure> structure_;
};

// All subgroups, each once, in order of increasing size (enumeration by
// closure of generated subgroups; intended for small groups).
std::vector<Subgroup> all_subgroups(const AbelianGroup& g);

enum class Level { CharZero, ModularModules, ModularProjectives };
const char* to_string(Level level);

class K0Element {
 public:
  K0Element() = default;
  // p is ignored (stored as 0) at CharZero.
  K0Element(AbelianGroup group, Level level, std::uint32_t p = 0);

  static K0Element basis(const AbelianGroup& g, Level level, std::size_t label,
                         std::uint32_t p = 0);
  // Regular representation / sum of all basis projectives.
  static K0Element regular(const AbelianGroup& g, Level level, std::uint32_t p = 0);

  const AbelianGroup& group() const { return group_; }
  Level level() const { return level_; }
  std::uint32_t prime() const { return p_; }
  const std::map<std::size_t, Rational>& coeffs() const { return coeffs_; }

  Rational coefficient(std::size_t label) const;
  void add_to(std::size_t label, const Rational& v);
  bool is_integral() const;
  bool is_zero() const { return coeffs_.empty(); }

  // All legal labels for this level, in increasing order.
  std::vector<std::size_t> labels() const;

  K0Element& operator+=(const K0Element& o);
  K0Element operator+(const K0Element& o) const;
  K0Element operator-(const K0Element& o) const;
  K0Element operator*(const Rational& s) const;
  bool operator==(const K0Element& o) const;
  bool operator!=(const K0Element& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_compatible(const K0Element& o) const;

  AbelianGroup group_;
  Level level_ = Level::CharZero;
  std::uint32_t p_ = 0;
  std::map<std::size_t, Rational> coeffs_;
};

K0Element decomposition_map(const K0Element& x, std::uint32_t p);
K0Element cartan_map(const K0Element& x);
K0Element e_map(const K0Element& x);
Rational pairing(const K0Element& x, const K0Element& y);
// <P, M> between projectives and modules: dual bases.
Rational pairing_modular(const K0Element& projectives, const K0Element& modules);
K0Element restrict(const K0Element& x, const Subgroup& H);
// theta must live on H.structure().group.
K0Element induce(const K0Element& theta, const Subgroup& H);

}  // namespace galmod
