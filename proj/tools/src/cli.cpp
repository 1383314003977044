#include "galcong/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "galcong/bounds.hpp"
#include "galcong/engine.hpp"
#include "galcong/errors.hpp"
#include "galcong/io.hpp"
#include "galcong/modforms.hpp"
#include "galcong/tame.hpp"
#include "galcong/weil.hpp"

namespace galcong::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& name, const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("--" + name + ": not an integer: '" + s + "'");
  return v;
}

Rational parse_rational(const std::string& s) {
  Rational v;
  if (s.empty() || v.set_str(s, 10) != 0) throw UsageError("not a rational number: '" + s + "'");
  v.canonicalize();
  return v;
}

RatPoly parse_poly(const std::string& s) {
  std::vector<Rational> c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  if (c.empty()) throw UsageError("--poly: empty coefficient list");
  return RatPoly(std::move(c));
}

struct Style {
  bool color;
  std::string paint(const std::string& s, const char* code) const {
    return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
  }
  std::string good(const std::string& s) const { return paint(s, "32"); }
  std::string warn(const std::string& s) const { return paint(s, "33"); }
  std::string bad(const std::string& s) const { return paint(s, "31"); }
};

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(11) << key << value << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string kind;
  std::optional<unsigned long> n, b, e, edeg, f, w, kdeg, kvdeg;
  std::string q, ell;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  BoundParams p;
  p.n = a.n;
  p.b = a.b;
  p.e = a.e;
  p.E_deg = a.edeg;
  p.f = a.f;
  p.w = a.w;
  p.K_deg = a.kdeg;
  p.Kv_deg = a.kvdeg;
  if (!a.q.empty()) p.q = parse_integer("q", a.q);
  const BoundExpr B = make_bound(parse_bound_kind(a.kind), p);
  const Threshold t = threshold_value(B);

  row(out, "bound", to_string(B.kind));
  row(out, "value", describe(B));
  if (B.linear) row(out, "linear", B.linear->get_str());
  Integer r;
  if (B.root == 1)
    row(out, "power", B.radicand.get_str());
  else if (mpz_root(r.get_mpz_t(), B.radicand.get_mpz_t(), B.root) != 0)
    row(out, "power", r.get_str());
  else
    row(out, "power", "(" + B.radicand.get_str() + ")^(1/" + std::to_string(B.root) + ")");
  row(out, "threshold", t.value.get_str());
  row(out, "exact", yes_no(t.exact));
  if (!a.ell.empty()) {
    const Integer ell = parse_integer("ell", a.ell);
    row(out, "ell", ell.get_str());
    row(out, "exceeds", yes_no(exceeds(ell, B)));
  }
  return kOk;
}

// ---------------------------------------------------------------- weil

int cmd_weil_check(const std::string& poly, const std::string& q, unsigned long w, std::ostream& out,
                   const Style& st) {
  const RatPoly P = parse_poly(poly);
  const Integer qq = parse_integer("q", q);
  const bool ok = is_weil_poly(P, qq, w);
  row(out, "poly", to_string(P));
  row(out, "q", qq.get_str());
  row(out, "weight", std::to_string(w));
  row(out, "weil", ok ? st.good("yes") : st.bad("no"));
  return ok ? kOk : kContradiction;
}

int cmd_weil_weights(const std::string& poly, const std::string& q, std::ostream& out, const Style& st) {
  const RatPoly P = parse_poly(poly);
  const Integer qq = parse_integer("q", q);
  const auto res = weil_weights(P, qq);
  row(out, "poly", to_string(P));
  row(out, "q", qq.get_str());
  if (const auto* w = std::get_if<WeilWeightMultiset>(&res)) {
    row(out, "type", st.good("W"));
    row(out, "weights", to_string(*w));
    row(out, "sum", w->sum().get_str());
    return kOk;
  }
  const auto& nw = std::get<NotTypeW>(res);
  row(out, "type", st.bad("not W"));
  row(out, "factor", to_string(nw.factor));
  row(out, "reason", nw.reason);
  return kContradiction;
}

// ---------------------------------------------------------------- tame

int cmd_tame_digits(const std::string& ell, unsigned long h, const std::string& d, unsigned long e,
                    std::ostream& out) {
  if (h == 0) throw UsageError("--h must be positive");
  if (e == 0) throw UsageError("--e must be positive");
  const TameCharacter chi(parse_integer("ell", ell), h, parse_integer("d", d));
  const auto ds = digits(chi);
  for (std::size_t i = 0; i < ds.size(); ++i) out << (i ? "," : "") << ds[i].get_str();
  out << " → TI " << to_string(ti_multiset(chi, e)) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- engine

struct EngineArgs {
  std::string which, left, right, ell;
  std::size_t lambda_index = 0;
  bool json = false;
  bool attest_u = false;
  bool attest_index = false;
  std::uint64_t seed = 0;
};

int verdict_exit(VerdictKind k) {
  switch (k) {
    case VerdictKind::Concluded:
      return kOk;
    case VerdictKind::Inapplicable:
      return kInapplicable;
    case VerdictKind::Contradiction:
      return kContradiction;
  }
  return kUsage;
}

std::string lambda_label(const PrimeIdeal& l) {
  std::ostringstream os;
  os << "ell=" << l.ell.get_str() << " index=" << l.index << " f=" << l.f << " e=" << l.e
     << " factor=" << to_string(l.local_factor, "x");
  return os.str();
}

int cmd_engine_run(const EngineArgs& a, std::ostream& out, const Style& st) {
  const Theorem which = parse_theorem(a.which);
  const RepDescriptor V = parse_descriptor(read_file(a.left));
  const RepDescriptor V2 = parse_descriptor(read_file(a.right));
  const Integer ell = parse_integer("ell", a.ell);
  const auto primes = primes_above(V.field, ell, a.attest_index, a.seed);
  if (a.lambda_index >= primes.size())
    throw UsageError("--lambda-index " + std::to_string(a.lambda_index) + " out of range: " +
                     std::to_string(primes.size()) + " prime(s) above " + ell.get_str());
  const PrimeIdeal& lambda = primes[a.lambda_index];
  const Certificate cert = run_theorem(V, V2, lambda, which, a.attest_u);
  const VerificationReport rep = verify_certificate(cert, V, V2, lambda, which, a.attest_u);

  if (a.json) {
    json doc;
    doc["theorem"] = cert.theorem;
    doc["lambda"] = {{"ell", lambda.ell.get_str()},
                     {"index", lambda.index},
                     {"f", lambda.f},
                     {"e", lambda.e},
                     {"factor", to_csv(lambda.local_factor)}};
    json steps = json::array();
    for (const auto& s : cert.steps) {
      json w = json::object();
      for (const auto& [k, v] : s.witness) w[k] = v;
      steps.push_back({{"step", s.number}, {"rule", s.rule}, {"claim", s.claim}, {"verified", s.verified},
                       {"witness", w}});
    }
    doc["steps"] = steps;
    doc["verdict"] = {{"kind", to_string(cert.verdict.kind)},
                      {"step", cert.verdict.step},
                      {"statement", cert.verdict.statement}};
    doc["reverified"] = rep.ok;
    doc["mismatches"] = rep.mismatches;
    out << doc.dump(2) << "\n";
  } else {
    row(out, "theorem", cert.theorem);
    row(out, "lambda", lambda_label(lambda));
    for (const auto& s : cert.steps) {
      out << "step " << s.number << "  " << (s.verified ? st.good("[ok]  ") : st.bad("[fail]")) << " " << s.rule
          << ": " << s.claim << "\n";
      for (const auto& [k, v] : s.witness) out << "         " << k << " = " << v << "\n";
    }
    const std::string kind = to_string(cert.verdict.kind);
    const std::string painted = cert.verdict.kind == VerdictKind::Concluded      ? st.good(kind)
                                : cert.verdict.kind == VerdictKind::Inapplicable ? st.warn(kind)
                                                                                 : st.bad(kind);
    std::string verdict = painted;
    if (cert.verdict.step) verdict += " at step " + std::to_string(cert.verdict.step);
    row(out, "verdict", verdict);
    row(out, "statement", cert.verdict.statement);
    row(out, "reverified", yes_no(rep.ok));
    for (const auto& m : rep.mismatches) out << "  mismatch: " << m << "\n";
  }
  return rep.ok ? verdict_exit(cert.verdict.kind) : kContradiction;
}

// ---------------------------------------------------------------- mf

std::string field_label(const NumberField& E) {
  return E.degree() == 1 ? std::string("Q") : "Q[x]/(" + to_string(E.gen_poly(), "x") + ")";
}

int cmd_mf_eigenforms(unsigned long k, std::size_t prec, bool emit, std::size_t orbit, std::ostream& out) {
  const auto forms = eigenforms(k, prec);
  if (emit) {
    if (orbit >= forms.size())
      throw UsageError("--orbit " + std::to_string(orbit) + " out of range: " + std::to_string(forms.size()) +
                       " orbit(s)");
    out << serialize_eigenform(forms[orbit]);
    return kOk;
  }
  row(out, "weight", std::to_string(k));
  row(out, "level", "1");
  row(out, "dimension", std::to_string(cusp_dimension(static_cast<long>(k))));
  row(out, "orbits", std::to_string(forms.size()));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& f = forms[i];
    out << "form " << i << "  field " << field_label(f.hecke_field) << "  separating_prime " << f.separating_prime
        << "\n";
    for (const auto& [p, a] : f.ap) out << "  a_" << p << " = " << a.to_string("a") << "\n";
  }
  return kOk;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void witness_header(std::ostream& out) {
  out << pad("form", 6) << pad("ell", 12) << pad("lambda", 8) << pad("f", 4) << pad("i", 5) << pad("j", 5)
      << pad("checked", 9) << pad("sturm", 7) << "p_max\n";
}

void witness_row(std::ostream& out, const std::string& form, const CongruenceWitness& w) {
  out << pad(form, 6) << pad(w.ell().get_str(), 12) << pad(std::to_string(w.lam.index), 8)
      << pad(std::to_string(w.lam.f), 4) << pad(std::to_string(w.i), 5) << pad(std::to_string(w.j), 5)
      << pad(std::to_string(w.checked_primes.size()), 9) << pad(std::to_string(w.sturm), 7) << w.p_max << "\n";
}

int audit_rank(AuditStatus s) {
  switch (s) {
    case AuditStatus::Consistent:
      return kOk;
    case AuditStatus::Inapplicable:
      return kInapplicable;
    case AuditStatus::Contradiction:
      return kContradiction;
  }
  return kUsage;
}

int print_audit(std::ostream& out, const std::string& form, const CongruenceWitness& w, const Eigenform& f,
                const Integer& q, const Style& st) {
  const AuditReport r = audit_eisenstein_witness(w, f, q);
  const std::string status = to_string(r.status);
  const std::string painted = r.status == AuditStatus::Consistent     ? st.good(status)
                              : r.status == AuditStatus::Inapplicable ? st.warn(status)
                                                                      : st.bad(status);
  out << "form " << form << "  ell " << w.ell().get_str() << "  lambda " << w.lam.index << "  (i,j) = (" << w.i
      << "," << w.j << ")  " << painted << "\n";
  for (const auto& g : r.gates)
    out << "  " << (g.pass ? st.good("[pass]") : st.bad("[fail]")) << " " << g.name << ": " << g.detail << "\n";
  out << "  reason: " << r.reason << "\n";
  return audit_rank(r.status);
}

std::vector<Eigenform> level_one_forms(unsigned long k, unsigned long p_max) {
  return eigenforms(k, std::max<std::size_t>(p_max, 2));
}

int cmd_mf_detect(unsigned long k, std::optional<unsigned long> pmax, const std::string& ell, std::ostream& out) {
  const unsigned long p_max = pmax ? *pmax : default_p_max(k, Integer(1));
  const ScanMode mode = ell.empty() ? ScanMode::EisensteinScan : ScanMode::FixedEll;
  const Integer fixed = ell.empty() ? Integer(0) : parse_integer("ell", ell);
  const auto forms = level_one_forms(k, p_max);
  row(out, "weight", std::to_string(k));
  row(out, "mode", mode == ScanMode::EisensteinScan ? "eisenstein-scan" : "fixed-ell " + fixed.get_str());
  row(out, "p_max", std::to_string(p_max));
  witness_header(out);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (const auto& w : detect_congruences(forms[i], mode, p_max, fixed)) witness_row(out, std::to_string(i), w);
  return kOk;
}

int cmd_mf_audit(unsigned long k, const std::string& q, std::optional<unsigned long> pmax, std::ostream& out,
                 const Style& st) {
  const Integer qq = parse_integer("q", q);
  const unsigned long p_max = pmax ? *pmax : default_p_max(k, Integer(1));
  const auto forms = level_one_forms(k, p_max);
  row(out, "weight", std::to_string(k));
  row(out, "q", qq.get_str());
  row(out, "p_max", std::to_string(p_max));
  int code = kOk;
  std::size_t n = 0;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (const auto& w : detect_congruences(forms[i], ScanMode::EisensteinScan, p_max)) {
      code = std::max(code, print_audit(out, std::to_string(i), w, forms[i], qq, st));
      ++n;
    }
  row(out, "witnesses", std::to_string(n));
  return code;
}

Integer smallest_good_prime(const Integer& N) {
  Integer q = 2;
  while (N % q == 0) mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
  return q;
}

int cmd_mf_ingest(const std::vector<std::string>& files, const std::string& q, std::optional<unsigned long> pmax,
                  const std::string& ell, std::ostream& out, const Style& st) {
  const ScanMode mode = ell.empty() ? ScanMode::EisensteinScan : ScanMode::FixedEll;
  const Integer fixed = ell.empty() ? Integer(0) : parse_integer("ell", ell);
  int code = kOk;
  for (const auto& path : files) {
    const Eigenform f = parse_eigenform(read_file(path));
    const Integer qq = q.empty() ? smallest_good_prime(f.N) : parse_integer("q", q);
    const unsigned long p_max = pmax ? *pmax : static_cast<unsigned long>(f.prec);
    row(out, "file", path);
    row(out, "weight", std::to_string(f.k));
    row(out, "level", f.N.get_str());
    row(out, "field", field_label(f.hecke_field));
    row(out, "primes", std::to_string(f.ap.size()) + " (up to " + std::to_string(f.prec) + ")");
    row(out, "q", qq.get_str());
    row(out, "mode", mode == ScanMode::EisensteinScan ? "eisenstein-scan" : "fixed-ell " + fixed.get_str());
    const auto ws = detect_congruences(f, mode, p_max, fixed);
    witness_header(out);
    for (const auto& w : ws) witness_row(out, "0", w);
    for (const auto& w : ws) code = std::max(code, print_audit(out, "0", w, f, qq, st));
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  const Style st{color};
  CLI::App app{"Congruences of Galois representations and Eisenstein congruences of eigenforms", "galcong"};
  app.require_subcommand(1);
  // single-letter options such as --h and --e rule out the short -h alias
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_help_all_flag("--help-all", "Expand all help");

  int code = kOk;

  auto* bounds = app.add_subcommand("bounds", "Explicit bound constants")->require_subcommand(1);
  BoundsArgs ba;
  auto* beval = bounds->add_subcommand("eval", "Evaluate a bound and compare with ell");
  beval->add_option("--kind", ba.kind, "c | cprime | ctilde | c1 | c1tilde")->required();
  beval->add_option("--n", ba.n, "dimension");
  beval->add_option("--b", ba.b, "Hodge-Tate bound");
  beval->add_option("--e", ba.e, "ramification bound");
  beval->add_option("--q", ba.q, "Frobenius prime power");
  beval->add_option("--edeg", ba.edeg, "[E:Q]");
  beval->add_option("--f", ba.f, "residue degree of lambda");
  beval->add_option("--w", ba.w, "weight (c1, c1tilde)");
  beval->add_option("--kdeg", ba.kdeg, "[K:Q] (cprime)");
  beval->add_option("--kvdeg", ba.kvdeg, "[K_v:Q_q] (cprime)");
  beval->add_option("--ell", ba.ell, "prime to compare");
  beval->callback([&] { code = cmd_bounds(ba, out); });

  auto* weil = app.add_subcommand("weil", "Weil integers and weights")->require_subcommand(1);
  std::string poly, wq;
  unsigned long ww = 0;
  auto* wcheck = weil->add_subcommand("check", "Test whether every root is a q-Weil number of weight w");
  wcheck->add_option("--poly", poly, "monic coefficients, lowest degree first, comma-separated")->required();
  wcheck->add_option("--q", wq, "q")->required();
  wcheck->add_option("--w", ww, "weight")->required();
  wcheck->callback([&] { code = cmd_weil_check(poly, wq, ww, out, st); });
  auto* wweights = weil->add_subcommand("weights", "Weil weight multiset of a Frobenius polynomial");
  wweights->add_option("--poly", poly, "monic coefficients, lowest degree first, comma-separated")->required();
  wweights->add_option("--q", wq, "q")->required();
  wweights->callback([&] { code = cmd_weil_weights(poly, wq, out, st); });

  auto* tame = app.add_subcommand("tame", "Tame inertia weights")->require_subcommand(1);
  std::string tell, td;
  unsigned long th = 1, te = 1;
  auto* tdigits = tame->add_subcommand("digits", "Base-ell digits and TI multiset of theta_h^d");
  tdigits->add_option("--ell", tell, "prime")->required();
  tdigits->add_option("--h", th, "level")->required();
  tdigits->add_option("--d", td, "exponent")->required();
  tdigits->add_option("--e", te, "ramification index")->capture_default_str();
  tdigits->callback([&] { code = cmd_tame_digits(tell, th, td, te, out); });

  auto* engine = app.add_subcommand("engine", "Run a congruence theorem on two descriptors")->require_subcommand(1);
  EngineArgs ea;
  auto* erun = engine->add_subcommand("run", "Produce a certificate");
  erun->add_option("--which", ea.which, "t11 | t12 | t14")->required();
  erun->add_option("--left", ea.left, "descriptor file")->required();
  erun->add_option("--right", ea.right, "descriptor file")->required();
  erun->add_option("--ell", ea.ell, "residue characteristic")->required();
  erun->add_option("--lambda-index", ea.lambda_index, "prime above ell, in factor order")->capture_default_str();
  erun->add_flag("--json", ea.json, "machine-readable output");
  erun->add_flag("--attest-u", ea.attest_u, "attest the congruence of the local representations at u");
  erun->add_flag("--attest-index", ea.attest_index, "attest that ell does not divide the index of Z[alpha]");
  erun->add_option("--seed", ea.seed, "seed for factorization splitting")->capture_default_str();
  erun->callback([&] { code = cmd_engine_run(ea, out, st); });

  auto* mf = app.add_subcommand("mf", "Level-one eigenforms and Eisenstein congruences")->require_subcommand(1);
  unsigned long mk = 0;
  std::size_t prec = 30, orbit = 0;
  bool emit = false;
  std::optional<unsigned long> pmax;
  std::string mell, mq;
  std::vector<std::string> files;
  auto* meig = mf->add_subcommand("eigenforms", "Normalized eigenforms of weight k, one per Galois orbit");
  meig->add_option("--k", mk, "weight")->required();
  meig->add_option("--prec", prec, "largest coefficient index")->capture_default_str();
  meig->add_flag("--emit", emit, "print one orbit in the eigenform file format");
  meig->add_option("--orbit", orbit, "orbit printed by --emit")->capture_default_str();
  meig->callback([&] { code = cmd_mf_eigenforms(mk, prec, emit, orbit, out); });
  auto* mdet = mf->add_subcommand("detect", "Find a_p = p^i + p^j mod lambda witnesses");
  mdet->add_option("--k", mk, "weight")->required();
  mdet->add_option("--pmax", pmax, "largest prime checked");
  mdet->add_option("--ell", mell, "restrict to one ell and scan all (i, j)");
  mdet->callback([&] { code = cmd_mf_detect(mk, pmax, mell, out); });
  auto* maud = mf->add_subcommand("audit", "Audit detected witnesses against the large-ell criterion");
  maud->add_option("--k", mk, "weight")->required();
  maud->add_option("--q", mq, "auxiliary prime")->required();
  maud->add_option("--pmax", pmax, "largest prime checked");
  maud->callback([&] { code = cmd_mf_audit(mk, mq, pmax, out, st); });
  auto* ming = mf->add_subcommand("ingest", "Detect and audit eigenforms read from files");
  ming->add_option("files", files, "eigenform files")->required()->check(CLI::ExistingFile);
  ming->add_option("--q", mq, "auxiliary prime (default: smallest prime not dividing N)");
  ming->add_option("--pmax", pmax, "largest prime checked (default: last prime in the file)");
  ming->add_option("--ell", mell, "restrict to one ell and scan all (i, j)");
  ming->callback([&] { code = cmd_mf_ingest(files, mq, pmax, mell, out, st); });

  std::vector<std::string> argv_store{"galcong"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace galcong::cli
