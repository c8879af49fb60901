#include "zdsolve/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "zdsolve/error.hpp"
#include "zdsolve/interval.hpp"
#include "zdsolve/modarith.hpp"

namespace zds::io {

bool operator==(const InputSystem& a, const InputSystem& b) {
  if (a.vars != b.vars || a.characteristic != b.characteristic || a.polys.size() != b.polys.size()) return false;
  for (size_t i = 0; i < a.polys.size(); ++i) {
    const auto& x = a.polys[i].terms;
    const auto& y = b.polys[i].terms;
    if (x.size() != y.size()) return false;
    for (size_t j = 0; j < x.size(); ++j)
      if (!(x[j].exp == y[j].exp) || x[j].coeff != y[j].coeff) return false;
  }
  return true;
}

namespace {

using QPoly = std::map<std::vector<Exponent>, mpq_class>;

[[noreturn]] void fail(size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

void add_into(QPoly& a, const QPoly& b, int sign) {
  for (const auto& [e, c] : b) {
    auto& x = a[e];
    if (sign > 0)
      x += c;
    else
      x -= c;
    if (x == 0) a.erase(e);
  }
}

QPoly mul(const QPoly& a, const QPoly& b, size_t line) {
  QPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<Exponent> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) {
        uint32_t s = uint32_t{ea[i]} + eb[i];
        if (s > 0xFFFF) fail(line, "exponent too large");
        e[i] = static_cast<Exponent>(s);
      }
      auto& x = r[e];
      x += ca * cb;
      if (x == 0) r.erase(e);
    }
  return r;
}

class Parser {
public:
  Parser(const std::string& text, size_t line, const std::vector<std::string>& vars)
      : s_(text), line_(line), vars_(vars) {}

  // Parses generators until the end of the text.
  std::vector<QPoly> generators() {
    std::vector<QPoly> out;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) {
        if (out.empty()) fail(line_, "empty generator list");
        fail(line_, "empty generator");
      }
      if (s_[pos_] == ',') fail(line_, "empty generator");
      out.push_back(expr());
      skip();
      if (pos_ >= s_.size()) break;
      if (s_[pos_] != ',') fail(line_, std::string("unexpected '") + s_[pos_] + "'");
      ++pos_;
    }
    return out;
  }

private:
  void skip() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
        // comment lines inside the generator block
        size_t q = pos_;
        while (q < s_.size() && (s_[q] == ' ' || s_[q] == '\t' || s_[q] == '\r')) ++q;
        if (q < s_.size() && s_[q] == '#') {
          while (q < s_.size() && s_[q] != '\n') ++q;
          pos_ = q;
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  QPoly constant(const mpq_class& c) {
    QPoly r;
    if (c != 0) r[std::vector<Exponent>(vars_.size(), 0)] = c;
    return r;
  }

  QPoly expr() {
    QPoly acc;
    int sign = 1;
    if (peek('+') || peek('-')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    add_into(acc, term(), sign);
    while (peek('+') || peek('-')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
      add_into(acc, term(), sign);
    }
    return acc;
  }

  QPoly term() {
    QPoly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, factor(), line_);
      } else if (peek('/')) {
        ++pos_;
        skip();
        mpz_class d = integer("divisor");
        if (d == 0) fail(line_, "division by zero");
        for (auto& [e, c] : acc) c /= d;
      } else {
        return acc;
      }
    }
  }

  QPoly factor() {
    QPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail(line_, "malformed exponent");
      mpz_class e = integer("exponent");
      if (e > 0xFFFF) fail(line_, "malformed exponent");
      QPoly r = constant(1);
      for (unsigned long k = e.get_ui(); k > 0; --k) r = mul(r, base, line_);
      return r;
    }
    return base;
  }

  mpz_class integer(const char* what) {
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail(line_, std::string("expected ") + what);
    return mpz_class(s_.substr(b, pos_ - b));
  }

  QPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail(line_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly r = expr();
      if (!peek(')')) fail(line_, "missing ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(mpq_class(integer("integer")));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(b, pos_ - b);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail(line_, "unknown identifier '" + name + "'");
      std::vector<Exponent> e(vars_.size(), 0);
      e[static_cast<size_t>(it - vars_.begin())] = 1;
      return QPoly{{e, 1}};
    }
    fail(line_, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
  size_t line_;
  const std::vector<std::string>& vars_;
};

std::string strip(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

ZPolynomial to_integer(const QPoly& f, size_t nvars) {
  mpz_class l = 1;
  for (const auto& [e, c] : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPolynomial z;
  for (const auto& [e, c] : f) {
    ExponentVector ev(nvars);
    ev.e = e;
    mpq_class s = c * l;
    z.terms.push_back({ev, s.get_num()});
  }
  canonicalize(z);
  return z;
}

}  // namespace

InputSystem parse_ms(const std::string& text) {
  // Header lines, skipping comments and blank lines.
  std::vector<std::pair<size_t, std::string>> header;
  size_t pos = 0, line = 1;
  while (header.size() < 2 && pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string l = strip(text.substr(pos, nl - pos));
    if (!l.empty() && l[0] != '#') header.push_back({line, l});
    pos = nl + 1;
    ++line;
  }
  if (header.size() < 2) fail(line, "missing header");

  InputSystem sys;
  std::stringstream vs(header[0].second);
  std::string name;
  while (std::getline(vs, name, ',')) {
    name = strip(name);
    if (!is_identifier(name)) fail(header[0].first, "bad variable name '" + name + "'");
    if (std::find(sys.vars.begin(), sys.vars.end(), name) != sys.vars.end())
      fail(header[0].first, "duplicate variable '" + name + "'");
    sys.vars.push_back(name);
  }
  if (sys.vars.empty()) fail(header[0].first, "no variables");

  const std::string& cs = header[1].second;
  if (cs.empty() || !std::all_of(cs.begin(), cs.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(header[1].first, "malformed characteristic");
  mpz_class ch(cs);
  if (ch != 0) {
    if (ch >= (mpz_class(1) << 31)) fail(header[1].first, "characteristic too large");
    if (!is_prime_u64(ch.get_ui())) fail(header[1].first, "characteristic not prime");
  }
  sys.characteristic = static_cast<uint32_t>(ch.get_ui());

  std::string rest = pos < text.size() ? text.substr(pos) : std::string();
  // A comment on the first line of the block is handled here, later ones by the parser.
  size_t first = 0;
  while (first < rest.size()) {
    size_t nl = rest.find('\n', first);
    std::string l = strip(rest.substr(first, nl == std::string::npos ? std::string::npos : nl - first));
    if (!l.empty() && l[0] == '#') {
      if (nl == std::string::npos) {
        first = rest.size();
        break;
      }
      first = nl + 1;
      ++line;
      continue;
    }
    break;
  }
  std::string block = rest.substr(first);
  Parser P(block, line, sys.vars);
  for (const auto& q : P.generators()) sys.polys.push_back(to_integer(q, sys.vars.size()));
  return sys;
}

std::string format_polynomial(const ZPolynomial& f, const std::vector<std::string>& vars) {
  if (f.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms) {
    mpz_class c = t.coeff;
    const bool constant = t.exp.degree() == 0;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    bool need_star = false;
    if (c != 1 || constant) {
      out += c.get_str();
      need_star = true;
    }
    for (size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp.e[i] == 0) continue;
      if (need_star) out += "*";
      out += vars[i];
      if (t.exp.e[i] > 1) out += "^" + std::to_string(t.exp.e[i]);
      need_star = true;
    }
    first = false;
  }
  return out;
}

std::string print_ms(const InputSystem& sys) {
  std::string out;
  for (size_t i = 0; i < sys.vars.size(); ++i) out += (i ? "," : "") + sys.vars[i];
  out += "\n" + std::to_string(sys.characteristic) + "\n";
  for (size_t i = 0; i < sys.polys.size(); ++i) {
    out += format_polynomial(sys.polys[i], sys.vars);
    out += i + 1 < sys.polys.size() ? ",\n" : "\n";
  }
  return out;
}

usolve::IntegerPolynomial clear_denominators(const std::vector<mpq_class>& f) {
  mpz_class l = 1;
  for (const auto& c : f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  usolve::IntegerPolynomial r;
  for (const auto& c : f) {
    mpq_class s = c * l;
    r.push_back(s.get_num());
  }
  return usolve::primitive_part(r);
}

namespace {

size_t max_bits(const usolve::IntegerPolynomial& f) {
  size_t b = 1;
  for (const auto& c : f)
    if (c != 0) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

ia::Interval horner(const usolve::IntegerPolynomial& f, const ia::Interval& x, mpfr_prec_t prec) {
  ia::Interval acc(prec);
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + ia::Interval::point(mpq_class(f[i]), prec);
  return acc;
}

usolve::DyadicInterval as_dyadic(const ia::Interval& I) {
  usolve::DyadicInterval D;
  mpz_class a, b;
  unsigned long ka, kb;
  ia::to_dyadic(I.lo(), a, ka);
  ia::to_dyadic(I.hi(), b, kb);
  unsigned long k = std::max(ka, kb);
  D.a = a << (k - ka);
  D.b = b << (k - kb);
  D.k = k;
  return D;
}

}  // namespace

std::vector<RootBox> real_root_boxes(const multimod::LiftedParametrization& L, long precision) {
  std::vector<RootBox> out;
  if (L.w.size() <= 1) return out;
  usolve::IntegerPolynomial W = clear_denominators(L.w);
  usolve::IntegerPolynomial Wd;
  for (size_t i = 1; i < W.size(); ++i) Wd.push_back(W[i] * static_cast<unsigned long>(i));
  // x_i = -lambda V_i(theta) / (mu_i W'(theta)), V_i = mu_i vt_i and W = lambda w.
  mpq_class lambda = mpq_class(W.back()) / L.w.back();
  std::vector<usolve::IntegerPolynomial> V;
  std::vector<mpq_class> scale;
  for (const auto& vt : L.vt) {
    mpz_class mu = 1;
    for (const auto& c : vt) mpz_lcm(mu.get_mpz_t(), mu.get_mpz_t(), c.get_den_mpz_t());
    usolve::IntegerPolynomial Vi;
    for (const auto& c : vt) {
      mpq_class s = c * mu;
      Vi.push_back(s.get_num());
    }
    usolve::trim(Vi);
    V.push_back(Vi);
    scale.push_back(-lambda / mpq_class(mu));
  }
  size_t bits = max_bits(W);
  for (const auto& Vi : V) bits = std::max(bits, max_bits(Vi));
  const long K = usolve::root_bound(W);
  const size_t n = L.n;

  auto iso = usolve::isolate_real_roots(W);
  struct Item {
    usolve::DyadicInterval I;
    bool exact;
  };
  std::vector<Item> items;
  for (const auto& I : iso.intervals) items.push_back({I, false});
  for (const auto& r : iso.exact_roots) items.push_back({{r.num, r.num, r.exp}, true});
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return usolve::compare({x.I.a, x.I.k}, {y.I.a, y.I.k}) < 0;
  });

  for (const auto& item : items) {
    long target = precision + 8;
    for (;;) {
      usolve::DyadicInterval T = item.exact ? item.I : usolve::refine_interval(W, item.I, -target);
      const mpfr_prec_t prec =
          static_cast<mpfr_prec_t>(bits + W.size() * static_cast<size_t>(K + 2) + 2 * static_cast<size_t>(target) + 128);
      ia::Interval theta = ia::Interval::dyadic(T.a, T.b, T.k, prec);
      ia::Interval d = horner(Wd, theta, prec);
      if (d.contains_zero()) {
        target *= 2;
        continue;
      }
      std::vector<ia::Interval> xs;
      for (size_t i = 0; i + 1 < n; ++i)
        xs.push_back(ia::Interval::point(scale[i], prec) * horner(V[i], theta, prec) / d);
      ia::Interval last = theta;
      for (size_t i = 0; i < L.linear_form.size(); ++i)
        last = last - ia::Interval::point(mpq_class(L.linear_form[i]), prec) * xs[i];
      xs.push_back(last);
      bool ok = std::all_of(xs.begin(), xs.end(), [&](const ia::Interval& x) { return x.width_at_most(-precision); });
      if (!ok && !item.exact) {
        target *= 2;
        continue;
      }
      RootBox box;
      box.param = T;
      for (const auto& x : xs) box.coords.push_back(as_dyadic(x));
      out.push_back(std::move(box));
      break;
    }
  }
  return out;
}

namespace {

std::string dyadic(const mpz_class& a, unsigned long k) { return a.get_str() + "/2^" + std::to_string(k); }

template <class T>
std::string list(const std::vector<T>& v) {
  if (v.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    if constexpr (std::is_same_v<T, mpq_class>)
      s += v[i].get_str();
    else
      s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string write_solution(const SolutionReport& r) {
  std::ostringstream o;
  o << "#msolve-like v1\n";
  o << "[status]\n";
  o << (r.status == Status::Finite ? "finite" : r.status == Status::Infinite ? "infinite" : "error") << "\n";
  if (r.status != Status::Finite) {
    if (!r.message.empty()) o << "message " << r.message << "\n";
    return o.str();
  }
  const size_t n = r.vars.size();
  const std::vector<long>& lf = r.lifted.linear_form;
  o << "[parametrization]\n";
  if (r.modular) o << "mod " << r.modular_result.prime << "\n";
  o << "n " << n << "\n";
  if (!lf.empty()) {
    o << "linear-form " << r.vars[n - 1];
    for (size_t i = 0; i < lf.size(); ++i)
      if (lf[i]) o << " + " << lf[i] << "*" << r.vars[i];
    o << "\n";
  }
  if (r.modular) {
    const auto& R = r.modular_result;
    o << "deg-w " << up::degree(R.w) << "\n";
    o << "form plain\n";
    o << "w: " << list(R.w) << "\n";
    o << "g: " << list(R.g) << "\n";
    for (size_t i = 0; i + 1 < n; ++i) o << "v[" << r.vars[i] << "]: " << list(R.v[i]) << "\n";
    o << "verified " << (R.verified ? "yes" : "no") << "\n";
  } else {
    const auto& L = r.lifted;
    o << "deg-w " << static_cast<long>(L.w.size()) - 1 << "\n";
    o << "form kronecker\n";
    o << "w: " << list(L.w) << "\n";
    o << "g: " << list(L.g) << "\n";
    for (size_t i = 0; i + 1 < n; ++i) o << "v[" << r.vars[i] << "]: " << list(L.vt[i]) << "\n";
    o << "certified " << (L.certified ? "probabilistic" : "no") << "\n";
    o << "primes " << L.primes_used << "\n";
  }
  if (r.real_roots_requested) {
    o << "[real-roots]\n";
    o << "count " << r.roots.size() << "\n";
    for (size_t j = 0; j < r.roots.size(); ++j) {
      const auto& b = r.roots[j];
      o << "root " << j + 1 << "\n";
      o << "param " << dyadic(b.param.a, b.param.k) << " " << dyadic(b.param.b, b.param.k) << "\n";
      for (size_t i = 0; i < b.coords.size(); ++i)
        o << r.vars[i] << " " << dyadic(b.coords[i].a, b.coords[i].k) << " " << dyadic(b.coords[i].b, b.coords[i].k)
          << "\n";
    }
  }
  return o.str();
}

}  // namespace zds::io
