// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "galmod/cover_io.hpp"
#include "galmod/cyclotomic.hpp"
#include "galmod/error.hpp"
#include "galmod/euler_char.hpp"
#include "galmod/finite_field.hpp"
#include "galmod/verify.hpp"

namespace galmod::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidInput:
      return kExitParse;
    case ErrorKind::OracleMismatch:
      return kExitCheckFailed;
    default:
      return kExitUnsupported;
  }
}

namespace {

std::string q(const Rational& x) { return x.get_str(); }

EpsilonOptions eps_options(const RunConfig& c) {
  EpsilonOptions o;
  o.oracle = c.oracle;
  o.convention = c.convention;
  o.precision = c.precision;
  o.exec = c.serial ? Exec::Serial : Exec::Parallel;
  return o;
}

CoverDatum load_cover(const RunConfig& c) {
  if (c.input.has_value() == c.builtin.has_value())
    fail(ErrorKind::InvalidInput, "give exactly one of --input and --builtin");
  if (c.builtin) return builtin_cover(*c.builtin);
  std::ifstream in(*c.input);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + *c.input);
  std::stringstream ss;
  ss << in.rdbuf();
  CoverDatum cover = parse_cover_json(ss.str());
  if (cover.name.empty()) cover.name = *c.input;
  return cover;
}

json report_json(const VerificationReport& rep) {
  json j;
  j["cover"] = rep.cover;
  j["oracle"] = rep.oracle;
  j["convention"] = rep.convention;
  j["ok"] = rep.ok();
  json flags = json::object();
  auto flag = [&](const char* name, const std::optional<bool>& f) {
    if (f) flags[name] = *f;
  };
  flag("strong_ok", rep.strong_ok);
  flag("weak_ok", rep.weak_ok);
  flag("integral_ok", rep.integral_ok);
  flag("invariance_ok", rep.invariance_ok);
  flag("restriction_ok", rep.restriction_ok);
  j["flags"] = flags;
  json secs = json::array();
  for (const auto& s : rep.sections) {
    json js;
    js["name"] = s.name;
    js["lhs"] = s.lhs_name;
    js["rhs"] = s.rhs_name;
    js["evaluated"] = s.evaluated;
    js["ok"] = s.ok();
    if (!s.note.empty()) js["note"] = s.note;
    json rows = json::array();
    for (const auto& r : s.rows) {
      json jr;
      jr["label"] = r.label;
      jr["lhs"] = q(r.lhs);
      jr["rhs"] = q(r.rhs);
      jr["pass"] = r.pass;
      json terms = json::array();
      for (const auto& t : r.terms) terms.push_back(json{{"name", t.name}, {"value", q(t.value)}});
      if (!terms.empty()) jr["terms"] = terms;
      rows.push_back(jr);
    }
    js["rows"] = rows;
    secs.push_back(js);
  }
  j["sections"] = secs;
  return j;
}

bool summarize_section(const ReportSection& s) {
  return s.name == "invariance" || s.name.find(".mackey") != std::string::npos;
}

void report_table(const VerificationReport& rep, std::ostream& out) {
  out << "cover:      " << rep.cover << "\n";
  out << "oracle:     " << rep.oracle << "\n";
  out << "convention: " << rep.convention << " (coefficient of chi in E is -v_p(eps("
      << (rep.convention == "standard" ? "chi" : "chi^-1") << ")))\n";
  for (const auto& s : rep.sections) {
    out << "\n[" << s.name << "] ";
    if (!s.evaluated) {
      out << "not evaluated: " << s.note << "\n";
      continue;
    }
    out << (s.ok() ? "PASS" : "FAIL") << "  (" << s.lhs_name << " vs " << s.rhs_name << ")\n";
    std::size_t hidden = 0;
    for (const auto& r : s.rows) {
      if (summarize_section(s) && r.pass) {
        ++hidden;
        continue;
      }
      out << "  " << std::left << std::setw(14) << r.label << " " << std::right << std::setw(8)
          << q(r.lhs) << " " << std::setw(8) << q(r.rhs) << "  " << (r.pass ? "ok" : "MISMATCH");
      for (const auto& t : r.terms) out << "  " << t.name << "=" << q(t.value);
      out << "\n";
    }
    if (hidden) out << "  " << hidden << " rows agree\n";
  }
  auto flag = [&](const char* name, const std::optional<bool>& f) {
    if (f) out << name << "=" << (*f ? "true" : "false") << " ";
  };
  out << "\n";
  flag("strong_ok", rep.strong_ok);
  flag("weak_ok", rep.weak_ok);
  flag("integral_ok", rep.integral_ok);
  flag("invariance_ok", rep.invariance_ok);
  flag("restriction_ok", rep.restriction_ok);
  out << "\nresult: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
}

int emit_report(const RunConfig& c, const CoverDatum& cover, const VerificationReport& rep,
                std::ostream& out) {
  if (c.format == Format::Json) {
    json j = report_json(rep);
    j["cover_datum"] = cover_to_json(cover);
    out << j.dump(2) << "\n";
  } else {
    report_table(rep, out);
  }
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

int run_gauss(const RunConfig& c, std::ostream& out) {
  if (c.p == 0) fail(ErrorKind::InvalidInput, "gauss needs --p");
  auto ctx = field_context(c.p, c.r);
  const std::uint64_t n = ctx->q() - 1;
  const std::uint64_t ch = c.character % n;
  const Exec exec = c.serial ? Exec::Serial : Exec::Parallel;
  const CyclotomicInt tau = gauss_sum(*ctx, ch, exec);
  std::optional<Rational> stick, padic;
  if (c.oracle != GaussOracle::Padic)
    stick = gauss_valuation(c.p, c.r, ch, GaussOracle::Stickelberger, c.precision);
  if (c.oracle != GaussOracle::Stickelberger)
    padic = gauss_valuation(c.p, c.r, ch, GaussOracle::Padic, c.precision);
  const bool agree = !(stick && padic) || *stick == *padic;
  bool identity = true;
  if (ch != 0) identity = gauss_product_identity(*ctx, ch, exec);
  else identity = tau == CyclotomicInt::constant(tau.order(), -1);
  const double abs2 = complex_abs2(tau);
  const bool ok = agree && identity;
  if (c.format == Format::Json) {
    json j;
    j["p"] = c.p;
    j["r"] = c.r;
    j["q"] = ctx->q();
    j["character"] = ch;
    j["modulus"] = fp::render(ctx->modulus());
    j["cyclotomic_order"] = tau.order();
    j["tau"] = tau.to_string();
    json v = json::object();
    if (stick) v["stickelberger"] = q(*stick);
    if (padic) v["padic"] = q(*padic);
    j["valuation"] = v;
    j["oracles_agree"] = agree;
    j["product_identity"] = identity;
    std::ostringstream a;
    a << std::setprecision(12) << abs2;
    j["abs2_float"] = a.str();
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "field:        F_" << ctx->q() << " = F_" << c.p << "[x]/(" << fp::render(ctx->modulus())
        << ")\n";
    out << "character:    " << ch << " of " << n << "\n";
    out << "tau:          " << tau.to_string() << "  in Z[zeta_" << tau.order() << "]\n";
    if (stick) out << "v_p stickelberger: " << q(*stick) << "\n";
    if (padic) out << "v_p padic:         " << q(*padic) << "\n";
    out << "product identity tau * sigma_{-1}(tau) = chi(-1) q: " << (identity ? "holds" : "FAILS")
        << (ch == 0 ? " (trivial character: tau = -1)" : "") << "\n";
    out << "|tau|^2 (float, non-gating): " << std::setprecision(12) << abs2 << "\n";
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_epsilon(const RunConfig& c, std::ostream& out) {
  const CoverDatum cover = load_cover(c);
  const auto opt = eps_options(c);
  const auto& g = cover.group;
  std::vector<EpsilonLedger> ledgers;
  for (std::size_t chi = 0; chi < g.order(); ++chi) ledgers.push_back(epsilon_ledger(cover, chi, opt));
  const K0Element E = E_element(cover, opt);
  if (c.format == Format::Json) {
    json j;
    j["cover"] = cover_summary(cover);
    j["oracle"] = to_string(c.oracle);
    j["convention"] = to_string(c.convention);
    json rows = json::array();
    for (const auto& led : ledgers) {
      json jr;
      jr["character"] = g.label(led.character);
      jr["base"] = q(led.base_term);
      jr["valuation"] = q(led.global_valuation);
      jr["E"] = q(E.coefficient(led.character));
      json locs = json::array();
      for (const auto& loc : led.locals) {
        json jl{{"place", cover.places[loc.place].label},
                {"kind", to_string(loc.kind)},
                {"valuation", q(loc.valuation)}};
        if (loc.gauss_index) jl["gauss_index"] = *loc.gauss_index;
        if (loc.tame_index) jl["tame_index"] = *loc.tame_index;
        locs.push_back(jl);
      }
      jr["locals"] = locs;
      rows.push_back(jr);
    }
    j["characters"] = rows;
    j["E_integral"] = E.is_integral();
    j["cover_datum"] = cover_to_json(cover);
    out << j.dump(2) << "\n";
  } else {
    out << "cover:      " << cover_summary(cover) << "\n";
    out << "oracle:     " << to_string(c.oracle) << "\nconvention: " << to_string(c.convention)
        << "\n\n";
    for (const auto& led : ledgers) {
      out << std::left << std::setw(12) << g.label(led.character) << std::right
          << " v_p(eps)=" << std::setw(6) << q(led.global_valuation)
          << "  E=" << std::setw(6) << q(E.coefficient(led.character))
          << "  base=" << q(led.base_term);
      for (const auto& loc : led.locals) {
        out << "  " << cover.places[loc.place].label << ":" << to_string(loc.kind) << "="
            << q(loc.valuation);
        if (loc.gauss_index) out << "[c=" << *loc.gauss_index << "]";
      }
      out << "\n";
    }
    out << "\nE integral: " << (E.is_integral() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_euler(const RunConfig& c, std::ostream& out) {
  const CoverDatum cover = load_cover(c);
  const auto& g = cover.group;
  const DivisorSpec Dw = DivisorSpec::wild_canonical(cover);
  const K0Element psi = psi_structure(cover, Dw);
  const K0Element lifted = e_map(psi);
  const K0Element chiO = euler_char_structure_sheaf(cover);
  bool ok = true;
  Rational total = 0;
  json rows = json::array();
  std::ostringstream table;
  for (std::size_t chi = 0; chi < g.order(); ++chi) {
    const Rational closed = multiplicity_closed(cover, Dw, chi);
    const Rational direct = multiplicity_direct(cover, Dw, chi);
    const Rational pair = lifted.coefficient(chi);
    const bool agree = closed == direct && closed == pair;
    ok = ok && agree;
    total += closed;
    rows.push_back(json{{"character", g.label(chi)}, {"closed", q(closed)}, {"direct", q(direct)},
                        {"pairing", q(pair)}, {"agree", agree}});
    table << "  " << std::left << std::setw(12) << g.label(chi) << std::right << " closed="
          << std::setw(6) << q(closed) << " direct=" << std::setw(6) << q(direct)
          << " pairing=" << std::setw(6) << q(pair) << (agree ? "" : "  MISMATCH") << "\n";
  }
  const std::int64_t gX = cover_genus(cover);
  const Rational rr = Rational(static_cast<long>(divisor_degree(cover, Dw) +
                                                 static_cast<std::int64_t>(cover.r) * (1 - gX)));
  const bool rr_ok = rr == total;
  ok = ok && rr_ok;
  auto k0_json = [&](const K0Element& x) {
    json j = json::object();
    for (auto l : x.labels()) j[g.label(l)] = q(x.coefficient(l));
    return j;
  };
  if (c.format == Format::Json) {
    json j;
    j["cover"] = cover_summary(cover);
    j["divisor"] = "D^w";
    j["multiplicities"] = rows;
    j["psi"] = k0_json(psi);
    j["chi_O"] = k0_json(chiO);
    j["genus_X"] = gX;
    j["riemann_roch"] = json{{"sum", q(total)}, {"expected", q(rr)}, {"ok", rr_ok}};
    j["ok"] = ok;
    j["cover_datum"] = cover_to_json(cover);
    out << j.dump(2) << "\n";
  } else {
    out << "cover:   " << cover_summary(cover) << "\ndivisor: D^w (-1 at wild places)\n\n";
    out << table.str();
    out << "\npsi(G,X,D^w) =";
    for (auto l : psi.labels()) out << " " << g.label(l) << ":" << q(psi.coefficient(l));
    out << "\nchi(G,X,O)   =";
    for (auto l : chiO.labels()) out << " " << g.label(l) << ":" << q(chiO.coefficient(l));
    out << "\ngenus of X: " << gX << "\nRiemann-Roch: sum " << q(total) << " expected " << q(rr)
        << (rr_ok ? " ok" : " MISMATCH") << "\nresult: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_corpus(const RunConfig& c, std::ostream& out) {
  std::vector<CorpusEntry> entries;
  const std::string& which = c.corpus;
  if (which == "kummer" || which == "all")
    for (auto& e : kummer_corpus()) entries.push_back(std::move(e));
  if (which == "as" || which == "all")
    for (auto& e : artin_schreier_corpus()) entries.push_back(std::move(e));
  if (which == "chains")
    for (auto& e : kummer_chain_corpus()) entries.push_back(std::move(e));
  if (which == "synthetic" || which == "all")
    for (std::size_t i = 0; i < c.count; ++i) {
      const std::string spec = "synthetic:seed=" + std::to_string(c.seed + i);
      entries.push_back({spec, builtin_cover(spec)});
    }
  if (entries.empty()) fail(ErrorKind::InvalidInput, "unknown corpus '" + which + "'");
  const auto opt = eps_options(c);
  std::size_t failed = 0;
  json rows = json::array();
  for (const auto& e : entries) {
    const auto rep = verify_all(e.cover, opt);
    std::vector<std::string> bad;
    for (const auto& s : rep.sections)
      if (!s.ok()) bad.push_back(s.name);
    if (!rep.ok()) ++failed;
    if (c.format == Format::Json) {
      rows.push_back(json{{"name", e.name}, {"ok", rep.ok()}, {"failed_sections", bad}});
    } else {
      out << (rep.ok() ? "PASS " : "FAIL ") << e.name;
      for (const auto& b : bad) out << " " << b;
      out << "\n";
    }
  }
  if (c.format == Format::Json) {
    out << json{{"corpus", which}, {"covers", rows}, {"failed", failed}, {"total", entries.size()}}.dump(2)
        << "\n";
  } else {
    out << entries.size() - failed << "/" << entries.size() << " covers pass\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::Gauss: return run_gauss(c, out);
      case Command::Epsilon: return run_epsilon(c, out);
      case Command::Euler: return run_euler(c, out);
      case Command::Corpus: return run_corpus(c, out);
      case Command::VerifyStrong: {
        const auto cover = load_cover(c);
        return emit_report(c, cover, check_strong(cover, eps_options(c)), out);
      }
      case Command::VerifyWeak: {
        const auto cover = load_cover(c);
        return emit_report(c, cover, check_weak(cover, eps_options(c)), out);
      }
      case Command::VerifyAll: {
        const auto cover = load_cover(c);
        return emit_report(c, cover, verify_all(cover, eps_options(c)), out);
      }
    }
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  }
  return kExitOk;
}

int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"galmod: epsilon-constant valuations, Gauss sums and equivariant Euler "
               "characteristics of abelian covers of curves over finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, GaussOracle> oracles{{"stickelberger", GaussOracle::Stickelberger},
                                                   {"padic", GaussOracle::Padic},
                                                   {"both", GaussOracle::Both}};
  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};
  const std::map<std::string, Convention> conventions{{"standard", Convention::Standard},
                                                      {"inverted", Convention::Inverted}};

  auto common = [&](CLI::App* sub, bool cover) {
    sub->add_option("--oracle", cfg.oracle, "Gauss valuation oracle (default padic)")
        ->transform(CLI::CheckedTransformer(oracles));
    sub->add_option("--format", cfg.format, "Output format (default table)")
        ->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--precision", cfg.precision, "lambda-adic precision for the p-adic oracle");
    sub->add_flag("--serial", cfg.serial, "Use the serial reference kernels");
    if (cover) {
      sub->add_option("--input", cfg.input, "JSON cover description");
      sub->add_option("--builtin", cfg.builtin,
                      "Builtin cover, e.g. kummer:p=5,n=2,f=x(x-1) or as:p=3,f=1/x+1/(x-1)");
      sub->add_option("--convention", cfg.convention, "Sign convention (default standard)")
          ->transform(CLI::CheckedTransformer(conventions));
    }
  };

  auto* gauss = app.add_subcommand("gauss", "Gauss sum of a character of F_{p^r}");
  common(gauss, false);
  gauss->add_option("--p", cfg.p, "Characteristic")->required();
  gauss->add_option("--r", cfg.r, "Degree of the field (default 1)");
  gauss->add_option("--char", cfg.character, "Character index c in [0, q-2]")->required();
  gauss->callback([&] { cfg.command = Command::Gauss; });

  auto* eps = app.add_subcommand("epsilon", "Per-character epsilon valuations and E(G,X)");
  common(eps, true);
  eps->callback([&] { cfg.command = Command::Epsilon; });

  auto* euler = app.add_subcommand("euler", "psi(G,X,D^w), multiplicities and chi(G,X,O)");
  common(euler, true);
  euler->callback([&] { cfg.command = Command::Euler; });

  auto* vs = app.add_subcommand("verify-strong", "Check the strong formula per character");
  common(vs, true);
  vs->callback([&] { cfg.command = Command::VerifyStrong; });

  auto* vw = app.add_subcommand("verify-weak", "Check d(E) = chi(G,X,O)");
  common(vw, true);
  vw->callback([&] { cfg.command = Command::VerifyWeak; });

  auto* va = app.add_subcommand("verify-all", "Strong, weak, invariance and restriction checks");
  common(va, true);
  va->callback([&] { cfg.command = Command::VerifyAll; });

  auto* corpus = app.add_subcommand("corpus", "Run verify-all over a builtin corpus");
  common(corpus, false);
  corpus->add_option("--set", cfg.corpus, "kummer, as, chains, synthetic or all (default all)")
      ->check(CLI::IsMember({"kummer", "as", "chains", "synthetic", "all"}));
  corpus->add_option("--seed", cfg.seed, "First seed of the synthetic corpus (default 1)");
  corpus->add_option("--count", cfg.count, "Number of synthetic covers (default 20)");
  corpus->add_option("--convention", cfg.convention, "Sign convention (default standard)")
      ->transform(CLI::CheckedTransformer(conventions));
  corpus->callback([&] { cfg.command = Command::Corpus; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error[parse]: " << e.what() << "\n";
    return kExitParse;
  }
  return run(cfg, out, err);
}

}  // namespace galmod::cli
