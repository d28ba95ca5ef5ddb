// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/cover_io.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  fail(ErrorKind::Parse, (path.empty() ? std::string("/") : path) + ": " + msg);
}

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) parse_fail(path, "unknown field '" + it.key() + "'");
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) parse_fail(path, "missing field '" + key + "'");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint32_t as_uint(const json& j, const std::string& path, std::uint32_t min = 0) {
  const std::int64_t v = as_int(j, path);
  if (v < static_cast<std::int64_t>(min) || v > INT32_MAX)
    parse_fail(path, "expected an integer >= " + std::to_string(min));
  return static_cast<std::uint32_t>(v);
}

std::size_t element_from_json(const AbelianGroup& g, const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != g.rank())
    parse_fail(path, "expected a tuple of length " + std::to_string(g.rank()));
  Tuple t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::uint32_t v = as_uint(j[i], path + "/" + std::to_string(i));
    if (v >= g.invariants()[i]) parse_fail(path + "/" + std::to_string(i), "entry out of range");
    t.push_back(v);
  }
  return g.index(t);
}

Subgroup subgroup_from_json(const AbelianGroup& g, const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected a list of generator tuples");
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < j.size(); ++i)
    gens.push_back(element_from_json(g, j[i], path + "/" + std::to_string(i)));
  return Subgroup::generated(g, gens);
}

json tuple_json(const AbelianGroup& g, std::size_t x) { return json(g.tuple(x)); }

json subgroup_json(const Subgroup& H) {
  json out = json::array();
  for (auto x : H.generators()) out.push_back(tuple_json(H.ambient(), x));
  return out;
}

P1Place place_from_json(std::uint32_t p, const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") parse_fail(path, "expected \"inf\" or a coefficient array");
    return P1Place{true, {}};
  }
  if (!j.is_array() || j.size() < 2) parse_fail(path, "expected a coefficient array of degree >= 1");
  fp::Poly f;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::uint32_t c = as_uint(j[i], path + "/" + std::to_string(i));
    if (c >= p) parse_fail(path + "/" + std::to_string(i), "coefficient not reduced mod p");
    f.push_back(c);
  }
  return P1Place{false, f};
}

RationalFunctionDivisor divisor_from_json(std::uint32_t p, const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected a list of [place, multiplicity] pairs");
  RationalFunctionDivisor d;
  d.p = p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != 2) parse_fail(at, "expected [place, multiplicity]");
    d.terms.emplace_back(place_from_json(p, j[i][0], at + "/0"), as_int(j[i][1], at + "/1"));
  }
  return d;
}

std::uint32_t prime_from_json(const json& j, const std::string& path) {
  const std::uint32_t p = as_uint(j, path, 2);
  if (!nt::is_prime(p)) fail(ErrorKind::InvalidInput, path + ": p is not prime");
  return p;
}

CoverOrigin origin_from_string(const std::string& s, const std::string& path) {
  for (auto o : {CoverOrigin::Synthetic, CoverOrigin::Kummer, CoverOrigin::ArtinSchreier,
                 CoverOrigin::Subcover})
    if (s == to_string(o)) return o;
  parse_fail(path, "unknown origin '" + s + "'");
}

}  // namespace

json cover_to_json(const CoverDatum& c) {
  const auto& g = c.group;
  json out;
  out["group"] = g.invariants();
  out["p"] = c.p;
  out["r"] = c.r;
  out["base_exponent"] = c.base_exponent;
  out["g_base"] = c.g_base;
  out["weakly_ramified"] = c.weakly_ramified;
  out["name"] = c.name;
  out["origin"] = to_string(c.origin);
  json places = json::array();
  for (const auto& pl : c.places) {
    json jp;
    jp["label"] = pl.label;
    jp["degree"] = pl.degree;
    jp["e_t"] = pl.e_t;
    jp["e_w"] = pl.e_w;
    jp["inertia"] = subgroup_json(pl.inertia);
    jp["decomposition"] = subgroup_json(pl.decomposition);
    jp["wild"] = subgroup_json(pl.wild);
    jp["cotangent"] = tuple_json(g, pl.cotangent);
    json cds = json::array();
    for (const auto& [chi, cd] : pl.conductors)
      cds.push_back(json{{"character", g.tuple(chi)}, {"conductor", cd}});
    jp["conductors"] = cds;
    places.push_back(jp);
  }
  out["places"] = places;
  return out;
}

CoverDatum cover_from_json(const json& j) {
  if (!j.is_object()) parse_fail("", "expected an object");
  if (j.contains("kummer")) {
    check_keys(j, "", {"kummer", "name"});
    const auto& k = j["kummer"];
    check_keys(k, "/kummer", {"p", "n", "f"});
    const std::uint32_t p = prime_from_json(require(k, "p", "/kummer"), "/kummer/p");
    const std::uint32_t n = as_uint(require(k, "n", "/kummer"), "/kummer/n", 2);
    auto c = kummer_cover(p, n, divisor_from_json(p, require(k, "f", "/kummer"), "/kummer/f"));
    if (j.contains("name")) c.name = j["name"].get<std::string>();
    return c;
  }
  if (j.contains("artin_schreier")) {
    check_keys(j, "", {"artin_schreier", "name"});
    const auto& a = j["artin_schreier"];
    check_keys(a, "/artin_schreier", {"p", "f"});
    const std::uint32_t p = prime_from_json(require(a, "p", "/artin_schreier"), "/artin_schreier/p");
    auto c = artin_schreier_cover(
        p, divisor_from_json(p, require(a, "f", "/artin_schreier"), "/artin_schreier/f"));
    if (j.contains("name")) c.name = j["name"].get<std::string>();
    return c;
  }
  check_keys(j, "", {"group", "p", "r", "base_exponent", "g_base", "weakly_ramified", "name",
                     "origin", "places"});
  const json& jg = require(j, "group", "");
  if (!jg.is_array()) parse_fail("/group", "expected a list of invariant factors");
  std::vector<std::uint32_t> inv;
  for (std::size_t i = 0; i < jg.size(); ++i)
    inv.push_back(as_uint(jg[i], "/group/" + std::to_string(i), 2));
  CoverDatum c;
  c.group = AbelianGroup(inv);
  const auto& g = c.group;
  c.p = prime_from_json(require(j, "p", ""), "/p");
  if (j.contains("r")) c.r = as_uint(j["r"], "/r", 1);
  if (j.contains("base_exponent")) c.base_exponent = as_uint(j["base_exponent"], "/base_exponent", 1);
  if (j.contains("g_base")) c.g_base = as_int(j["g_base"], "/g_base");
  if (j.contains("weakly_ramified")) {
    if (!j["weakly_ramified"].is_boolean()) parse_fail("/weakly_ramified", "expected a boolean");
    c.weakly_ramified = j["weakly_ramified"].get<bool>();
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_fail("/name", "expected a string");
    c.name = j["name"].get<std::string>();
  }
  if (j.contains("origin")) {
    if (!j["origin"].is_string()) parse_fail("/origin", "expected a string");
    c.origin = origin_from_string(j["origin"].get<std::string>(), "/origin");
  }
  const json& jp = require(j, "places", "");
  if (!jp.is_array()) parse_fail("/places", "expected an array");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string at = "/places/" + std::to_string(i);
    const json& e = jp[i];
    check_keys(e, at, {"label", "degree", "e_t", "e_w", "inertia", "decomposition", "wild",
                       "cotangent", "conductors"});
    PlaceDatum pl;
    pl.label = "q" + std::to_string(i);
    if (e.contains("label")) {
      if (!e["label"].is_string()) parse_fail(at + "/label", "expected a string");
      pl.label = e["label"].get<std::string>();
    }
    pl.degree = as_uint(require(e, "degree", at), at + "/degree", 1);
    pl.e_t = as_uint(require(e, "e_t", at), at + "/e_t", 1);
    pl.e_w = as_uint(require(e, "e_w", at), at + "/e_w", 1);
    pl.inertia = subgroup_from_json(g, require(e, "inertia", at), at + "/inertia");
    pl.decomposition = e.contains("decomposition")
                           ? subgroup_from_json(g, e["decomposition"], at + "/decomposition")
                           : pl.inertia;
    pl.wild = e.contains("wild") ? subgroup_from_json(g, e["wild"], at + "/wild")
                                 : Subgroup::trivial(g);
    pl.cotangent = e.contains("cotangent")
                       ? element_from_json(g, e["cotangent"], at + "/cotangent")
                       : 0;
    if (e.contains("conductors")) {
      const json& cds = e["conductors"];
      if (!cds.is_array()) parse_fail(at + "/conductors", "expected an array");
      for (std::size_t k = 0; k < cds.size(); ++k) {
        const std::string ck = at + "/conductors/" + std::to_string(k);
        check_keys(cds[k], ck, {"character", "conductor"});
        const std::size_t chi = element_from_json(g, require(cds[k], "character", ck), ck + "/character");
        pl.conductors[chi] = as_uint(require(cds[k], "conductor", ck), ck + "/conductor");
      }
    }
    c.places.push_back(std::move(pl));
  }
  validate_cover(c);
  return c;
}

CoverDatum parse_cover_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed JSON at byte ") + std::to_string(e.byte) +
                               ": " + e.what());
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
  try {
    return cover_from_json(j);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

// ---------------------------------------------------------------------------
// Rational function expressions.

namespace {

struct RF {
  fp::Poly num, den;
};

class ExprParser {
 public:
  ExprParser(std::uint32_t p, const std::string& s) : p_(p), s_(s) {}

  RF parse() {
    RF v = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::Parse, "rational function \"" + s_ + "\" at offset " + std::to_string(pos_) +
                               ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RF normalize(RF v) const {
    fp::trim(v.num);
    fp::trim(v.den);
    if (v.den.empty()) error("division by zero");
    if (v.num.empty()) return RF{{}, {1}};
    fp::Poly g = fp::gcd(v.num, v.den, p_);
    v.num = fp::divmod(v.num, g, p_).first;
    v.den = fp::divmod(v.den, g, p_).first;
    const std::uint32_t inv = static_cast<std::uint32_t>(nt::inv_mod(v.den.back(), p_));
    v.num = fp::scale(v.num, inv, p_);
    v.den = fp::scale(v.den, inv, p_);
    return v;
  }
  RF add(const RF& a, const RF& b, bool minus) const {
    fp::Poly l = fp::mul(a.num, b.den, p_), r = fp::mul(b.num, a.den, p_);
    return normalize({minus ? fp::sub(l, r, p_) : fp::add(l, r, p_), fp::mul(a.den, b.den, p_)});
  }
  RF mul(const RF& a, const RF& b) const {
    return normalize({fp::mul(a.num, b.num, p_), fp::mul(a.den, b.den, p_)});
  }
  RF div(const RF& a, const RF& b) const {
    if (b.num.empty()) error("division by zero");
    return normalize({fp::mul(a.num, b.den, p_), fp::mul(a.den, b.num, p_)});
  }

  RF expr() {
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    RF v = term();
    if (negate) v = add(RF{{}, {1}}, v, true);
    while (true) {
      if (peek('+')) {
        ++pos_;
        v = add(v, term(), false);
      } else if (peek('-')) {
        ++pos_;
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }
  RF term() {
    RF v = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v = mul(v, power());
      } else if (peek('/')) {
        ++pos_;
        v = div(v, power());
      } else if (starts_factor()) {
        v = mul(v, power());
      } else {
        return v;
      }
    }
  }
  RF power() {
    RF base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const std::uint64_t e = integer();
    if (e > 4096) error("exponent too large");
    RF out{{1}, {1}};
    for (std::uint64_t i = 0; i < e; ++i) out = mul(out, base);
    return out;
  }
  std::uint64_t integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      error("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) error("integer literal too large");
      ++pos_;
    }
    return v;
  }
  RF primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return RF{{0, 1}, {1}};
    }
    if (c == '(') {
      ++pos_;
      RF v = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      fp::Poly k{static_cast<std::uint32_t>(integer() % p_)};
      fp::trim(k);
      return RF{k, {1}};
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::uint32_t p_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::uint32_t p, const std::string& text) {
  if (!nt::is_prime(p)) fail(ErrorKind::InvalidInput, "p is not prime");
  RF v = ExprParser(p, text).parse();
  return RationalFunction{v.num, v.den};
}

RationalFunctionDivisor kummer_divisor(std::uint32_t p, const RationalFunction& f) {
  if (f.num.empty()) fail(ErrorKind::InvalidInput, "f must be nonzero");
  if (f.num.back() != 1)
    fail(ErrorKind::InvalidInput, "the leading coefficient of f must be 1");
  RationalFunctionDivisor d;
  d.p = p;
  for (const auto& [q, m] : fp::factor(f.num, p))
    d.terms.emplace_back(P1Place{false, q}, static_cast<std::int64_t>(m));
  for (const auto& [q, m] : fp::factor(f.den, p))
    d.terms.emplace_back(P1Place{false, q}, -static_cast<std::int64_t>(m));
  d.normalize();
  d.complete_at_infinity();
  return d;
}

RationalFunctionDivisor pole_divisor(std::uint32_t p, const RationalFunction& f) {
  RationalFunctionDivisor d;
  d.p = p;
  for (const auto& [q, m] : fp::factor(f.den, p))
    d.terms.emplace_back(P1Place{false, q}, -static_cast<std::int64_t>(m));
  const int at_inf = fp::degree(f.num) - fp::degree(f.den);
  if (!f.num.empty() && at_inf > 0) d.terms.emplace_back(P1Place{true, {}}, -at_inf);
  return d;
}

// ---------------------------------------------------------------------------
// Builtins and corpus.

namespace {

std::map<std::string, std::string> parse_params(const std::string& body, const std::string& spec,
                                                const std::set<std::string>& allowed) {
  std::map<std::string, std::string> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::Parse, "builtin \"" + spec + "\": expected key=value, got \"" + item + "\"");
    const std::string key = item.substr(0, eq);
    if (!allowed.count(key))
      fail(ErrorKind::Parse, "builtin \"" + spec + "\": unknown parameter '" + key + "'");
    if (out.count(key)) fail(ErrorKind::Parse, "builtin \"" + spec + "\": repeated '" + key + "'");
    out[key] = item.substr(eq + 1);
  }
  return out;
}

std::int64_t param_int(const std::map<std::string, std::string>& m, const std::string& key,
                       const std::string& spec, std::optional<std::int64_t> fallback = std::nullopt) {
  auto it = m.find(key);
  if (it == m.end()) {
    if (fallback) return *fallback;
    fail(ErrorKind::Parse, "builtin \"" + spec + "\": missing '" + key + "'");
  }
  try {
    std::size_t used = 0;
    const long long v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "builtin \"" + spec + "\": '" + key + "' is not an integer");
  }
}

std::uint32_t param_prime(const std::map<std::string, std::string>& m, const std::string& spec) {
  const std::int64_t p = param_int(m, "p", spec);
  if (p < 2 || p > INT32_MAX || !nt::is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::InvalidInput, "builtin \"" + spec + "\": p is not prime");
  return static_cast<std::uint32_t>(p);
}

std::string param_str(const std::map<std::string, std::string>& m, const std::string& key,
                      const std::string& spec) {
  auto it = m.find(key);
  if (it == m.end()) fail(ErrorKind::Parse, "builtin \"" + spec + "\": missing '" + key + "'");
  return it->second;
}

}  // namespace

CoverDatum builtin_cover(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  CoverDatum c;
  if (kind == "kummer") {
    auto m = parse_params(body, spec, {"p", "n", "f"});
    const std::uint32_t p = param_prime(m, spec);
    const std::int64_t n = param_int(m, "n", spec);
    if (n < 2 || n > 4096) fail(ErrorKind::InvalidInput, "builtin \"" + spec + "\": bad n");
    c = kummer_cover(p, static_cast<std::uint32_t>(n),
                     kummer_divisor(p, parse_rational_function(p, param_str(m, "f", spec))));
  } else if (kind == "as") {
    auto m = parse_params(body, spec, {"p", "f"});
    const std::uint32_t p = param_prime(m, spec);
    c = artin_schreier_cover(p, pole_divisor(p, parse_rational_function(p, param_str(m, "f", spec))));
  } else if (kind == "trivial") {
    auto m = parse_params(body, spec, {"p", "r", "g"});
    const std::uint32_t p = param_prime(m, spec);
    const std::int64_t r = param_int(m, "r", spec, 1), g = param_int(m, "g", spec, 0);
    if (r < 1 || r > 64 || g < 0 || g > 1000000)
      fail(ErrorKind::InvalidInput, "builtin \"" + spec + "\": bad r or g");
    c = synthetic_cover(AbelianGroup::cyclic(1), p, static_cast<std::uint32_t>(r), g, {});
  } else if (kind == "synthetic") {
    auto m = parse_params(body, spec, {"seed", "order", "p"});
    std::mt19937_64 rng(static_cast<std::uint64_t>(param_int(m, "seed", spec)));
    RandomCoverOptions opt;
    const std::int64_t order = param_int(m, "order", spec, 24);
    if (order < 1 || order > 64) fail(ErrorKind::InvalidInput, "builtin \"" + spec + "\": bad order");
    opt.max_order = static_cast<std::size_t>(order);
    if (m.count("p")) opt.primes = {param_prime(m, spec)};
    c = random_weakly_ramified_cover(rng, opt);
  } else {
    fail(ErrorKind::Parse, "unknown builtin kind '" + kind + "'");
  }
  c.name = spec;
  return c;
}

namespace {

fp::Poly smallest_irreducible(std::uint32_t p, int deg) {
  fp::Poly f(static_cast<std::size_t>(deg) + 1, 0);
  f.back() = 1;
  while (true) {
    if (fp::is_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(deg) && ++f[i] == p) f[i++] = 0;
  }
}

std::string paren(const fp::Poly& f) { return "(" + fp::render(f) + ")"; }

std::vector<std::string> kummer_functions(std::uint32_t p) {
  const std::string L1 = "x";
  const std::string L2 = paren({p - 1, 1});  // x - 1
  const std::string L3 = paren({p - 2, 1});  // x - 2
  const std::string Q2 = paren(smallest_irreducible(p, 2));
  const std::string Q3 = paren(smallest_irreducible(p, 3));
  return {L1,
          L1 + L2,
          L1 + L2 + "^2",
          L1 + "^2" + L2 + "^3",
          L1 + L2 + L3,
          Q2,
          L1 + Q2,
          Q3,
          L1 + "/" + L2,
          L1 + "^3" + Q2,
          L1 + L2 + Q2 + "^2",
          Q2 + L2 + "^5",
          L1 + "^2" + Q3,
          Q2 + "/" + L1 + "^2"};
}

std::vector<std::string> artin_schreier_functions(std::uint32_t p) {
  const std::string L2 = paren({1, 1});  // x + 1
  const std::string Q2 = paren(smallest_irreducible(p, 2));
  const std::string Q3 = paren(smallest_irreducible(p, 3));
  return {"1/x",
          "x",
          "1/x+x",
          "1/x+1/" + L2,
          "1/" + Q2,
          "1/x+1/" + Q2,
          "1/" + Q3,
          "x+1/" + L2,
          "1/x+1/" + L2 + "+x",
          "1/" + Q2 + "+x",
          "1/" + Q3 + "+1/x",
          "x/" + Q2};
}

}  // namespace

std::vector<CorpusEntry> kummer_corpus() {
  std::vector<CorpusEntry> out;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t n = 2; n <= 6; ++n) {
      if ((p - 1) % n != 0) continue;
      std::size_t taken = 0;
      for (const auto& f : kummer_functions(p)) {
        if (taken == 10) break;
        const std::string spec =
            "kummer:p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",f=" + f;
        try {
          out.push_back({spec, builtin_cover(spec)});
          ++taken;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::ReducibleCover) throw;
        }
      }
      if (taken < 10) fail(ErrorKind::Validation, "Kummer corpus too small for p=" + std::to_string(p));
    }
  }
  return out;
}

std::vector<CorpusEntry> artin_schreier_corpus() {
  std::vector<CorpusEntry> out;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (const auto& f : artin_schreier_functions(p)) {
      const std::string spec = "as:p=" + std::to_string(p) + ",f=" + f;
      out.push_back({spec, builtin_cover(spec)});
    }
  return out;
}

std::vector<CorpusEntry> kummer_chain_corpus() {
  std::vector<CorpusEntry> out;
  for (auto& e : kummer_corpus())
    if (e.cover.group.order() == 4 || e.cover.group.order() == 6) out.push_back(std::move(e));
  return out;
}

}  // namespace galmod
