#include "galcong/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "galcong/errors.hpp"

namespace galcong {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

struct Entry {
  std::string value;
  std::size_t line;
};

class Fail {
 public:
  explicit Fail(std::size_t line) : line_(line) {}
  [[noreturn]] void operator()(const std::string& reason) const { throw ParseError(line_, reason); }

 private:
  std::size_t line_;
};

Integer parse_integer(const std::string& s, const Fail& fail) {
  const std::string t = trim(s);
  if (t.empty()) fail("empty integer");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) fail("malformed integer '" + t + "'");
  for (std::size_t j = i; j < t.size(); ++j)
    if (t[j] < '0' || t[j] > '9') fail("malformed integer '" + t + "'");
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

unsigned long parse_count(const std::string& s, const Fail& fail, unsigned long min = 0) {
  const Integer v = parse_integer(s, fail);
  if (v < 0 || !v.fits_ulong_p()) fail("expected a non-negative integer, got '" + trim(s) + "'");
  if (v < min) fail("value " + v.get_str() + " below the minimum " + std::to_string(min));
  return v.get_ui();
}

Rational parse_rational(const std::string& s, const Fail& fail) {
  const std::string t = trim(s);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t, fail));
  const Integer num = parse_integer(t.substr(0, slash), fail);
  const Integer den = parse_integer(t.substr(slash + 1), fail);
  if (den == 0) fail("zero denominator in '" + t + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

std::vector<Rational> parse_coords(const std::string& s, const NumberField& E, const Fail& fail) {
  std::vector<Rational> c;
  for (const auto& part : split(s, ',')) c.push_back(parse_rational(part, fail));
  if (c.empty()) fail("empty coordinate vector");
  if (c.size() > E.degree())
    fail("coordinate vector of length " + std::to_string(c.size()) + " exceeds the field degree " +
         std::to_string(E.degree()));
  return c;
}

std::string coords_str(const FieldElement& a) {
  std::string s;
  for (std::size_t i = 0; i < a.coords().size(); ++i) s += (i ? "," : "") + rat_str(a.coords()[i]);
  return s;
}

NumberField parse_field(const Entry& e) {
  const Fail fail(e.line);
  std::vector<Integer> c;
  for (const auto& part : split(e.value, ',')) c.push_back(parse_integer(part, fail));
  try {
    return NumberField(IntPoly(c));
  } catch (const Error& err) {
    fail(std::string("invalid field polynomial: ") + err.what());
  }
}

std::string field_str(const NumberField& E) {
  std::string s;
  const auto& c = E.gen_poly().coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
  return s;
}

// Collects "key = value" lines; stops at the first line for which `stop` holds.
std::map<std::string, Entry> read_keys(const std::vector<std::string>& lines, const std::vector<std::string>& allowed,
                                       std::size_t& pos, bool (*stop)(const std::string&)) {
  std::map<std::string, Entry> out;
  for (; pos < lines.size(); ++pos) {
    const std::string t = trim(lines[pos]);
    if (t.empty() || t[0] == '#') continue;
    if (stop && stop(t)) break;
    const Fail fail(pos + 1);
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail("unknown key '" + key + "'");
    if (out.count(key)) fail("duplicate key '" + key + "'");
    out.emplace(key, Entry{trim(t.substr(eq + 1)), pos + 1});
  }
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur)) lines.push_back(cur);
  return lines;
}

const Entry& require(const std::map<std::string, Entry>& m, const std::string& key, std::size_t eof_line) {
  const auto it = m.find(key);
  if (it == m.end()) throw ParseError(eof_line, "missing key '" + key + "'");
  return it->second;
}

const std::vector<std::string> kDescriptorKeys = {"field.genpoly", "n",      "b",    "e_cap", "v.q",
                                                  "v.charpoly",    "u.ell",  "u.e",  "u.ht",  "u.tame",
                                                  "flags.semistable_v", "flags.semistable_u"};

}  // namespace

RepDescriptor parse_descriptor(const std::string& text) {
  const auto lines = lines_of(text);
  std::size_t pos = 0;
  const auto m = read_keys(lines, kDescriptorKeys, pos, nullptr);
  const std::size_t eof = lines.size() + 1;
  auto get = [&](const std::string& k) -> const Entry& { return require(m, k, eof); };

  const NumberField E = parse_field(get("field.genpoly"));
  const unsigned long n = parse_count(get("n").value, Fail(get("n").line), 1);
  const unsigned long b = parse_count(get("b").value, Fail(get("b").line));
  const unsigned long e_cap = parse_count(get("e_cap").value, Fail(get("e_cap").line), 1);

  const Entry& eq = get("v.q");
  const Integer q = parse_integer(eq.value, Fail(eq.line));
  if (q < 2 || !prime_power(q)) Fail(eq.line)("v.q must be a prime power");

  const Entry& ec = get("v.charpoly");
  std::vector<FieldElement> coeffs;
  for (const auto& part : split(ec.value, ';')) coeffs.emplace_back(E, parse_coords(part, E, Fail(ec.line)));
  if (coeffs.size() != n + 1)
    Fail(ec.line)("characteristic polynomial has degree " + std::to_string(coeffs.size() - 1) + ", expected n = " +
                  std::to_string(n));
  std::optional<CharPolyOverE> P;
  try {
    P.emplace(E, coeffs, q);
  } catch (const Error& err) {
    Fail(ec.line)(err.what());
  }

  LocalDescriptorU u;
  const Entry& el = get("u.ell");
  u.ell = parse_integer(el.value, Fail(el.line));
  if (!is_prime(u.ell)) Fail(el.line)("u.ell must be prime");
  u.e_u = parse_count(get("u.e").value, Fail(get("u.e").line), 1);
  u.e_cap = e_cap;
  const Entry& eh = get("u.ht");
  for (const auto& part : split(eh.value, ',')) u.ht.push_back(parse_count(part, Fail(eh.line)));
  const Entry& et = get("u.tame");
  for (const auto& part : split(et.value, ';')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) Fail(et.line)("tame character '" + part + "' is not of the form h:d");
    const unsigned long h = parse_count(part.substr(0, colon), Fail(et.line), 1);
    const Integer d = parse_integer(part.substr(colon + 1), Fail(et.line));
    if (d < 0) Fail(et.line)("negative exponent in '" + part + "'");
    try {
      u.tame_chars.emplace_back(u.ell, h, d);
    } catch (const Error& err) {
      Fail(et.line)(err.what());
    }
  }
  const Entry& fu = get("flags.semistable_u");
  try {
    u.semistable_flag = parse_semistable_flag(fu.value);
  } catch (const Error& err) {
    Fail(fu.line)(err.what());
  }
  const Entry& fv = get("flags.semistable_v");
  bool sv;
  if (fv.value == "true")
    sv = true;
  else if (fv.value == "false")
    sv = false;
  else
    Fail(fv.line)("flags.semistable_v must be true or false");
  return RepDescriptor{n, E, b, LocalDescriptorV{std::move(*P), sv}, std::move(u)};
}

std::string serialize_descriptor(const RepDescriptor& d) {
  std::ostringstream os;
  os << "field.genpoly = " << field_str(d.field) << "\n";
  os << "n = " << d.n << "\n";
  os << "b = " << d.b << "\n";
  os << "e_cap = " << d.at_u.e_cap << "\n";
  os << "v.q = " << d.at_v.charpoly.q.get_str() << "\n";
  os << "v.charpoly = ";
  for (std::size_t i = 0; i < d.at_v.charpoly.coeffs.size(); ++i)
    os << (i ? ";" : "") << coords_str(d.at_v.charpoly.coeffs[i]);
  os << "\n";
  os << "u.ell = " << d.at_u.ell.get_str() << "\n";
  os << "u.e = " << d.at_u.e_u << "\n";
  os << "u.ht = ";
  for (std::size_t i = 0; i < d.at_u.ht.size(); ++i) os << (i ? "," : "") << d.at_u.ht[i];
  os << "\n";
  os << "u.tame = ";
  for (std::size_t i = 0; i < d.at_u.tame_chars.size(); ++i)
    os << (i ? ";" : "") << d.at_u.tame_chars[i].level() << ":" << d.at_u.tame_chars[i].exponent().get_str();
  os << "\n";
  os << "flags.semistable_v = " << (d.at_v.semistable_at_v ? "true" : "false") << "\n";
  os << "flags.semistable_u = " << to_string(d.at_u.semistable_flag) << "\n";
  return os.str();
}

namespace {

bool starts_with_digit(const std::string& t) { return t[0] >= '0' && t[0] <= '9'; }

const std::vector<std::string> kEigenformKeys = {"k", "N", "eps", "field.genpoly", "denom"};

}  // namespace

Eigenform parse_eigenform(const std::string& text) {
  const auto lines = lines_of(text);
  std::size_t pos = 0;
  const auto m = read_keys(lines, kEigenformKeys, pos, starts_with_digit);
  const std::size_t eof = lines.size() + 1;
  auto get = [&](const std::string& k) -> const Entry& { return require(m, k, pos + 1 > eof ? eof : pos + 1); };

  const unsigned long k = parse_count(get("k").value, Fail(get("k").line), 1);
  const Entry& eN = get("N");
  const Integer N = parse_integer(eN.value, Fail(eN.line));
  if (N < 1) Fail(eN.line)("level must be positive");
  const NumberField E = parse_field(get("field.genpoly"));
  const Entry& ed = get("denom");
  const Integer denom = parse_integer(ed.value, Fail(ed.line));
  if (denom < 1) Fail(ed.line)("denominator must be positive");

  Eigenform f{k, N, {}, E, {}, {}, 0, 0};
  const Entry& ee = get("eps");
  for (const auto& part : split(ee.value, ';')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) Fail(ee.line)("character entry '" + part + "' is not of the form g:coords");
    const Integer g = parse_integer(part.substr(0, colon), Fail(ee.line));
    if (gcd(g, N) != 1) Fail(ee.line)("generator " + g.get_str() + " is not a unit mod N");
    f.eps.push_back({g, FieldElement(E, parse_coords(part.substr(colon + 1), E, Fail(ee.line)))});
  }

  unsigned long last = 0;
  for (; pos < lines.size(); ++pos) {
    const std::string t = trim(lines[pos]);
    if (t.empty() || t[0] == '#') continue;
    const Fail fail(pos + 1);
    const auto sp = t.find_first_of(" \t");
    if (sp == std::string::npos) fail("expected 'p coordinates'");
    const unsigned long p = parse_count(t.substr(0, sp), fail);
    if (!is_prime(Integer(p))) fail(std::to_string(p) + " is not prime");
    if (p <= last) fail("primes must be strictly increasing");
    last = p;
    std::vector<Rational> c = parse_coords(t.substr(sp + 1), E, fail);
    for (auto& x : c) {
      if (x.get_den() != 1) fail("coordinates are integers over the common denominator");
      x /= Rational(denom);
    }
    f.ap.emplace(p, FieldElement(E, c));
  }
  if (f.ap.empty()) throw ParseError(eof, "no coefficient lines");
  f.prec = last;
  return f;
}

std::string serialize_eigenform(const Eigenform& f) {
  Integer denom = 1;
  for (const auto& [p, a] : f.ap) denom = lcm(denom, a.denominator());
  std::ostringstream os;
  os << "k = " << f.k << "\n";
  os << "N = " << f.N.get_str() << "\n";
  os << "eps = ";
  for (std::size_t i = 0; i < f.eps.size(); ++i)
    os << (i ? ";" : "") << f.eps[i].generator.get_str() << ":" << coords_str(f.eps[i].value);
  os << "\n";
  os << "field.genpoly = " << field_str(f.hecke_field) << "\n";
  os << "denom = " << denom.get_str() << "\n";
  for (const auto& [p, a] : f.ap) {
    os << p << " ";
    for (std::size_t i = 0; i < a.coords().size(); ++i) os << (i ? "," : "") << Rational(a.coords()[i] * denom).get_str();
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace galcong
