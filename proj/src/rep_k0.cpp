// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/rep_k0.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

// ---- AbelianGroup ---------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> invariant_factors)
    : inv_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    if (inv_[i] < 2) fail(ErrorKind::InvalidInput, "invariant factors must be >= 2");
    if (i + 1 < inv_.size() && inv_[i + 1] % inv_[i] != 0)
      fail(ErrorKind::InvalidInput, "invariant factors must form a divisibility chain");
    order_ *= inv_[i];
  }
  exponent_ = inv_.empty() ? 1 : inv_.back();
}

AbelianGroup AbelianGroup::cyclic(std::uint32_t n) {
  if (n == 1) return AbelianGroup{};
  return AbelianGroup({n});
}

std::size_t AbelianGroup::index(const Tuple& t) const {
  if (t.size() != inv_.size()) fail(ErrorKind::InvalidInput, "tuple length does not match group rank");
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    idx += (t[i] % inv_[i]) * stride;
    stride *= inv_[i];
  }
  return idx;
}

Tuple AbelianGroup::tuple(std::size_t index) const {
  Tuple t(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) {
    t[i] = static_cast<std::uint32_t>(index % inv_[i]);
    index /= inv_[i];
  }
  return t;
}

std::size_t AbelianGroup::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, stride = 1;
  for (auto n : inv_) {
    out += ((a % n + b % n) % n) * stride;
    a /= n;
    b /= n;
    stride *= n;
  }
  return out;
}

std::size_t AbelianGroup::neg(std::size_t a) const {
  std::size_t out = 0, stride = 1;
  for (auto n : inv_) {
    out += ((n - a % n) % n) * stride;
    a /= n;
    stride *= n;
  }
  return out;
}

std::size_t AbelianGroup::times(std::int64_t k, std::size_t a) const {
  std::size_t out = 0, stride = 1;
  for (auto n : inv_) {
    std::uint64_t kk = nt::mod(k, n);
    out += static_cast<std::size_t>((kk * (a % n)) % n) * stride;
    a /= n;
    stride *= n;
  }
  return out;
}

std::uint32_t AbelianGroup::element_order(std::size_t a) const {
  std::uint64_t ord = 1;
  for (auto n : inv_) {
    std::uint64_t ai = a % n;
    a /= n;
    ord = std::lcm(ord, n / std::gcd<std::uint64_t>(n, ai));
  }
  return static_cast<std::uint32_t>(ord);
}

std::uint64_t AbelianGroup::phase(std::size_t chi, std::size_t g) const {
  std::uint64_t acc = 0;
  for (auto n : inv_) {
    acc = (acc + (chi % n) * (g % n) % n * (exponent_ / n)) % exponent_;
    chi /= n;
    g /= n;
  }
  return acc;
}

std::size_t AbelianGroup::p_prime_part(std::size_t chi, std::uint32_t p) const {
  const std::uint64_t np = nt::p_part(exponent_, p);
  const std::uint64_t nq = exponent_ / np;
  std::uint64_t E = nt::crt(1 % nq, nq, 0, np);
  return times(static_cast<std::int64_t>(E), chi);
}

bool AbelianGroup::is_p_prime(std::size_t chi, std::uint32_t p) const {
  return char_order(chi) % p != 0;
}

std::vector<std::size_t> AbelianGroup::p_prime_characters(std::uint32_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < order_; ++a)
    if (is_p_prime(a, p)) out.push_back(a);
  return out;
}

std::size_t AbelianGroup::sylow_order(std::uint32_t p) const { return nt::p_part(order_, p); }

std::string AbelianGroup::label(std::size_t index) const {
  std::string s = "(";
  auto t = tuple(index);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// ---- Subgroup -------------------------------------------------------------

namespace {

void close_under(const AbelianGroup& g, std::size_t gen, std::vector<std::size_t>& elems,
                 std::vector<char>& member) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::size_t y = g.add(elems[i], gen);
    if (!member[y]) {
      member[y] = 1;
      elems.push_back(y);
    }
  }
}

std::vector<std::size_t> minimal_generators(const AbelianGroup& g,
                                            const std::vector<std::size_t>& sorted_elems) {
  std::vector<std::size_t> gens, elems{0};
  std::vector<char> member(g.order(), 0);
  member[0] = 1;
  for (auto x : sorted_elems) {
    if (member[x]) continue;
    gens.push_back(x);
    close_under(g, x, elems, member);
  }
  return gens;
}

}  // namespace

Subgroup Subgroup::generated(const AbelianGroup& g, std::vector<std::size_t> generators) {
  Subgroup h;
  h.g_ = g;
  h.member_.assign(g.order(), 0);
  h.member_[0] = 1;
  h.elems_ = {0};
  for (auto x : generators) {
    if (x >= g.order()) fail(ErrorKind::InvalidInput, "subgroup generator outside the group");
    close_under(g, x, h.elems_, h.member_);
  }
  std::sort(h.elems_.begin(), h.elems_.end());
  h.gens_ = minimal_generators(g, h.elems_);
  return h;
}

Subgroup Subgroup::from_tuples(const AbelianGroup& g, const std::vector<Tuple>& generators) {
  std::vector<std::size_t> idx;
  for (const auto& t : generators) idx.push_back(g.index(t));
  return generated(g, idx);
}

Subgroup Subgroup::trivial(const AbelianGroup& g) { return generated(g, {}); }

Subgroup Subgroup::whole(const AbelianGroup& g) {
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return generated(g, all);
}

Subgroup Subgroup::cyclic_of_order(const AbelianGroup& g, std::uint32_t d) {
  if (g.rank() > 1) fail(ErrorKind::InvalidInput, "group is not cyclic");
  if (d == 0 || g.order() % d != 0) fail(ErrorKind::InvalidInput, "order does not divide |G|");
  if (g.rank() == 0) return trivial(g);
  return generated(g, {g.order() / d % g.order()});
}

bool Subgroup::is_subset_of(const Subgroup& o) const {
  if (g_ != o.g_) return false;
  for (auto x : elems_)
    if (!o.contains(x)) return false;
  return true;
}

Subgroup Subgroup::intersect(const Subgroup& o) const {
  if (g_ != o.g_) fail(ErrorKind::GroupMismatch, "subgroups of different groups");
  std::vector<std::size_t> common;
  for (auto x : elems_)
    if (o.contains(x)) common.push_back(x);
  return generated(g_, common);
}

Subgroup Subgroup::join(const Subgroup& o) const {
  if (g_ != o.g_) fail(ErrorKind::GroupMismatch, "subgroups of different groups");
  std::vector<std::size_t> gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return generated(g_, gens);
}

bool Subgroup::character_trivial_on(std::size_t chi) const {
  for (auto x : gens_)
    if (g_.phase(chi, x) != 0) return false;
  return true;
}

bool Subgroup::characters_agree_on(std::size_t a, std::size_t b) const {
  return character_trivial_on(g_.char_mul(a, g_.char_inv(b)));
}

std::uint32_t Subgroup::restricted_order(std::size_t chi) const {
  std::uint64_t ord = 1;
  const std::uint64_t N = g_.exponent();
  for (auto x : gens_) ord = std::lcm(ord, N / std::gcd(N, g_.phase(chi, x)));
  return static_cast<std::uint32_t>(ord);
}

std::size_t SubgroupStructure::restrict_character(const AbelianGroup& ambient,
                                                  std::size_t chi) const {
  Tuple b(group.rank());
  const std::uint64_t N = ambient.exponent();
  for (std::size_t i = 0; i < group.rank(); ++i) {
    std::uint64_t ph = ambient.phase(chi, basis_images[i]);
    b[i] = static_cast<std::uint32_t>(ph * group.invariants()[i] / N % group.invariants()[i]);
  }
  return group.index(b);
}

const SubgroupStructure& Subgroup::structure() const {
  if (structure_) return *structure_;
  auto s = std::make_shared<SubgroupStructure>();
  struct Cyc {
    std::size_t gen;
    std::uint32_t order;
  };
  std::vector<std::vector<Cyc>> per_prime;
  for (auto l : nt::prime_factors(order())) {
    std::vector<std::size_t> A;
    for (auto h : elems_)
      if (nt::is_power_of(g_.element_order(h), l)) A.push_back(h);
    std::vector<std::size_t> B{0};
    std::vector<char> inB(g_.order(), 0);
    inB[0] = 1;
    std::vector<Cyc> basis;
    while (B.size() < A.size()) {
      // Quotient order of each a modulo B; pick the largest that lifts to an
      // element of the same order.
      std::uint32_t best_t = 0;
      std::vector<std::pair<std::uint32_t, std::size_t>> cand;
      for (auto a : A) {
        std::uint32_t t = 1;
        while (!inB[g_.times(t, a)]) t *= static_cast<std::uint32_t>(l);
        cand.emplace_back(t, a);
        best_t = std::max(best_t, t);
      }
      bool found = false;
      for (auto [t, a] : cand) {
        if (t != best_t) continue;
        for (auto b : B) {
          std::size_t x = g_.add(a, g_.neg(b));
          if (g_.times(t, x) == 0) {
            basis.push_back({x, t});
            close_under(g_, x, B, inB);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) fail(ErrorKind::Domain, "subgroup decomposition failed");
    }
    std::sort(basis.begin(), basis.end(),
              [](const Cyc& a, const Cyc& b) { return a.order > b.order; });
    per_prime.push_back(std::move(basis));
  }
  std::size_t k = 0;
  for (const auto& b : per_prime) k = std::max(k, b.size());
  std::vector<std::uint32_t> inv(k, 1);
  std::vector<std::size_t> imgs(k, 0);
  for (const auto& b : per_prime)
    for (std::size_t i = 0; i < b.size(); ++i) {
      inv[i] *= b[i].order;
      imgs[i] = g_.add(imgs[i], b[i].gen);
    }
  std::reverse(inv.begin(), inv.end());
  std::reverse(imgs.begin(), imgs.end());
  s->group = AbelianGroup(inv);
  s->basis_images = imgs;
  s->local_to_ambient.resize(s->group.order());
  s->ambient_to_local.assign(g_.order(), -1);
  for (std::size_t j = 0; j < s->group.order(); ++j) {
    Tuple t = s->group.tuple(j);
    std::size_t img = 0;
    for (std::size_t i = 0; i < t.size(); ++i) img = g_.add(img, g_.times(t[i], imgs[i]));
    if (s->ambient_to_local[img] != -1 || !contains(img))
      fail(ErrorKind::Domain, "subgroup decomposition is not an isomorphism");
    s->local_to_ambient[j] = img;
    s->ambient_to_local[img] = static_cast<std::int64_t>(j);
  }
  structure_ = s;
  return *structure_;
}

Subgroup Subgroup::localize(const Subgroup& K) const {
  if (!K.is_subset_of(*this)) fail(ErrorKind::GroupMismatch, "subgroup is not contained in H");
  const auto& s = structure();
  std::vector<std::size_t> gens;
  for (auto x : K.generators()) gens.push_back(static_cast<std::size_t>(s.ambient_to_local[x]));
  return generated(s.group, gens);
}

std::vector<Subgroup> all_subgroups(const AbelianGroup& g) {
  std::vector<Subgroup> out{Subgroup::trivial(g)};
  std::set<std::vector<std::size_t>> seen{out[0].elements()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (out[i].contains(x)) continue;
      auto gens = out[i].generators();
      gens.push_back(x);
      Subgroup s = Subgroup::generated(g, gens);
      if (seen.insert(s.elements()).second) out.push_back(std::move(s));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

// ---- K0 -------------------------------------------------------------------

const char* to_string(Level level) {
  switch (level) {
    case Level::CharZero: return "char-zero";
    case Level::ModularModules: return "modular-modules";
    case Level::ModularProjectives: return "modular-projectives";
  }
  return "?";
}

K0Element::K0Element(AbelianGroup group, Level level, std::uint32_t p)
    : group_(std::move(group)), level_(level), p_(level == Level::CharZero ? 0 : p) {
  if (level != Level::CharZero && !nt::is_prime(p))
    fail(ErrorKind::InvalidInput, "modular K0 levels need a prime");
}

K0Element K0Element::basis(const AbelianGroup& g, Level level, std::size_t label,
                           std::uint32_t p) {
  K0Element x(g, level, p);
  x.add_to(label, 1);
  return x;
}

K0Element K0Element::regular(const AbelianGroup& g, Level level, std::uint32_t p) {
  K0Element x(g, level, p);
  for (auto l : x.labels()) x.add_to(l, 1);
  return x;
}

std::vector<std::size_t> K0Element::labels() const {
  if (level_ != Level::CharZero) return group_.p_prime_characters(p_);
  std::vector<std::size_t> out(group_.order());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Rational K0Element::coefficient(std::size_t label) const {
  auto it = coeffs_.find(label);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void K0Element::add_to(std::size_t label, const Rational& v) {
  if (label >= group_.order()) fail(ErrorKind::InvalidInput, "basis label outside the group");
  if (level_ != Level::CharZero && !group_.is_p_prime(label, p_))
    fail(ErrorKind::Level, "modular basis labels must be prime-to-p characters");
  if (v == 0) return;
  auto [it, fresh] = coeffs_.emplace(label, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool K0Element::is_integral() const {
  for (const auto& [l, v] : coeffs_)
    if (!galmod::is_integer(v)) return false;
  return true;
}

void K0Element::check_compatible(const K0Element& o) const {
  if (group_ != o.group_) fail(ErrorKind::GroupMismatch, "K0 elements over different groups");
  if (level_ != o.level_ || p_ != o.p_) fail(ErrorKind::Level, "K0 elements at different levels");
}

K0Element& K0Element::operator+=(const K0Element& o) {
  check_compatible(o);
  for (const auto& [l, v] : o.coeffs_) add_to(l, v);
  return *this;
}

K0Element K0Element::operator+(const K0Element& o) const {
  K0Element out = *this;
  out += o;
  return out;
}

K0Element K0Element::operator-(const K0Element& o) const { return *this + o * Rational(-1); }

K0Element K0Element::operator*(const Rational& s) const {
  K0Element out(group_, level_, p_);
  for (const auto& [l, v] : coeffs_) out.add_to(l, v * s);
  return out;
}

bool K0Element::operator==(const K0Element& o) const {
  return group_ == o.group_ && level_ == o.level_ && p_ == o.p_ && coeffs_ == o.coeffs_;
}

std::string K0Element::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [l, v] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += v.get_str() + "*" + group_.label(l);
  }
  return s;
}

namespace {
void require_level(const K0Element& x, Level level, const char* op) {
  if (x.level() != level)
    fail(ErrorKind::Level, std::string(op) + ": expected level " + to_string(level) + ", got " +
                               to_string(x.level()));
}
}  // namespace

K0Element decomposition_map(const K0Element& x, std::uint32_t p) {
  require_level(x, Level::CharZero, "decomposition_map");
  K0Element out(x.group(), Level::ModularModules, p);
  for (const auto& [chi, v] : x.coeffs()) out.add_to(x.group().p_prime_part(chi, p), v);
  return out;
}

K0Element cartan_map(const K0Element& x) {
  require_level(x, Level::ModularProjectives, "cartan_map");
  K0Element out(x.group(), Level::ModularModules, x.prime());
  const Rational s(static_cast<long>(x.group().sylow_order(x.prime())));
  for (const auto& [l, v] : x.coeffs()) out.add_to(l, v * s);
  return out;
}

K0Element e_map(const K0Element& x) {
  require_level(x, Level::ModularProjectives, "e_map");
  const auto& g = x.group();
  K0Element out(g, Level::CharZero);
  for (std::size_t chi = 0; chi < g.order(); ++chi) {
    Rational v = x.coefficient(g.p_prime_part(chi, x.prime()));
    if (v != 0) out.add_to(chi, v);
  }
  return out;
}

Rational pairing(const K0Element& x, const K0Element& y) {
  if (x.group() != y.group()) fail(ErrorKind::GroupMismatch, "pairing over different groups");
  require_level(x, Level::CharZero, "pairing");
  require_level(y, Level::CharZero, "pairing");
  Rational acc = 0;
  for (const auto& [l, v] : x.coeffs()) acc += v * y.coefficient(l);
  return acc;
}

Rational pairing_modular(const K0Element& projectives, const K0Element& modules) {
  if (projectives.group() != modules.group())
    fail(ErrorKind::GroupMismatch, "pairing over different groups");
  require_level(projectives, Level::ModularProjectives, "pairing_modular");
  require_level(modules, Level::ModularModules, "pairing_modular");
  if (projectives.prime() != modules.prime()) fail(ErrorKind::Level, "different primes");
  Rational acc = 0;
  for (const auto& [l, v] : projectives.coeffs()) acc += v * modules.coefficient(l);
  return acc;
}

K0Element restrict(const K0Element& x, const Subgroup& H) {
  if (x.group() != H.ambient()) fail(ErrorKind::GroupMismatch, "H is not a subgroup of this group");
  const auto& s = H.structure();
  K0Element out(s.group, x.level(), x.prime());
  Rational scale = 1;
  if (x.level() == Level::ModularProjectives) {
    scale = make_rational(static_cast<std::int64_t>(x.group().sylow_order(x.prime())),
                          static_cast<std::int64_t>(s.group.sylow_order(x.prime())));
  }
  for (const auto& [chi, v] : x.coeffs())
    out.add_to(s.restrict_character(x.group(), chi), v * scale);
  return out;
}

K0Element induce(const K0Element& theta, const Subgroup& H) {
  const auto& s = H.structure();
  if (theta.group() != s.group) fail(ErrorKind::GroupMismatch, "theta does not live on H");
  if (theta.level() == Level::ModularModules)
    fail(ErrorKind::Level, "induce supports char-zero and projective levels");
  const auto& g = H.ambient();
  K0Element out(g, theta.level(), theta.prime());
  for (std::size_t chi = 0; chi < g.order(); ++chi) {
    if (theta.level() == Level::ModularProjectives && !g.is_p_prime(chi, theta.prime())) continue;
    Rational v = theta.coefficient(s.restrict_character(g, chi));
    if (v != 0) out.add_to(chi, v);
  }
  return out;
}

}  // namespace galmod
