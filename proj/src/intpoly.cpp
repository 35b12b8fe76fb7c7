#include "exceptio/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "exceptio/error.hpp"

namespace exceptio {

namespace {

void trim(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class pow_z(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

void require_nonzero(const IntPolynomial& f, const char* what) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, std::string(what) + ": zero polynomial");
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear_root(const mpz_class& a) { return IntPolynomial({-a, 1}); }

mpz_class IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPolynomial::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial make_poly(std::span<const mpz_class> coeffs) {
  if (coeffs.empty()) fail(Errc::EmptyCoefficients, "make_poly: empty coefficient list");
  return IntPolynomial(std::vector<mpz_class>(coeffs.begin(), coeffs.end()));
}

IntPolynomial make_poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return make_poly(std::span<const mpz_class>(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a) {
  std::vector<mpz_class> c = a.coeffs();
  for (auto& x : c) x = -x;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& k, const IntPolynomial& a) {
  std::vector<mpz_class> c = a.coeffs();
  for (auto& x : c) x *= k;
  return IntPolynomial(std::move(c));
}

IntPolynomial derivative(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<mpz_class> c(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) c[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(c));
}

mpz_class content(const IntPolynomial& f) {
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) g = gcd(g, c);
  return g;
}

IntPolynomial divide_exact(const IntPolynomial& f, const mpz_class& c) {
  std::vector<mpz_class> out = f.coeffs();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  mpz_class g = content(f);
  if (f.leading() < 0) g = -g;
  return divide_exact(f, g);
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  require_nonzero(b, "pseudo_remainder");
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  std::vector<mpz_class> r = a.coeffs();
  int e = a.degree() - db + 1;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const mpz_class lr = r.back();
    for (auto& x : r) x *= lb;
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= lr * b.coeffs()[static_cast<std::size_t>(i)];
    trim(r);
    --e;
  }
  IntPolynomial rem(std::move(r));
  if (e > 0) rem = pow_z(lb, static_cast<unsigned long>(e)) * rem;
  return rem;
}

mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g) {
  require_nonzero(f, "resultant");
  require_nonzero(g, "resultant");
  IntPolynomial a = f;
  IntPolynomial b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    std::swap(a, b);
  }
  // Res(a, c) = c^deg(a)
  if (b.degree() == 0) return pow_z(b.leading(), static_cast<unsigned long>(a.degree()));

  const mpz_class ca = content(a);
  const mpz_class cb = content(b);
  a = divide_exact(a, ca);
  b = divide_exact(b, cb);
  const mpz_class t = pow_z(ca, static_cast<unsigned long>(b.degree())) *
                      pow_z(cb, static_cast<unsigned long>(a.degree()));

  mpz_class lead = 1;
  mpz_class h = 1;
  for (;;) {
    const auto delta = static_cast<unsigned long>(a.degree() - b.degree());
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_exact(r, lead * pow_z(h, delta));
    lead = a.leading();
    if (delta > 0) {
      mpz_class next = pow_z(lead, delta);
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), pow_z(h, delta - 1).get_mpz_t());
      h = std::move(next);
    }
    if (b.degree() == 0) {
      const auto da = static_cast<unsigned long>(a.degree());
      mpz_class last = pow_z(b.leading(), da);
      mpz_divexact(last.get_mpz_t(), last.get_mpz_t(), pow_z(h, da - 1).get_mpz_t());
      return sign * t * last;
    }
  }
}

IntPolynomial gcd_over_Q(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  IntPolynomial a = primitive_part(f);
  IntPolynomial b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPolynomial::constant(1);
  mpz_class lead = 1;
  mpz_class h = 1;
  for (;;) {
    const auto delta = static_cast<unsigned long>(a.degree() - b.degree());
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return IntPolynomial::constant(1);
    a = std::move(b);
    b = divide_exact(r, lead * pow_z(h, delta));
    lead = a.leading();
    if (delta > 0) {
      mpz_class next = pow_z(lead, delta);
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), pow_z(h, delta - 1).get_mpz_t());
      h = std::move(next);
    }
  }
}

mpz_class discriminant(const IntPolynomial& f) {
  require_nonzero(f, "discriminant");
  if (f.degree() < 1) fail(Errc::DegreeZero, "discriminant: constant polynomial");
  if (!f.is_monic()) fail(Errc::NonMonic, "discriminant: polynomial is not monic");
  const long n = f.degree();
  const mpz_class r = resultant(f, derivative(f));
  return ((n * (n - 1) / 2) % 2 == 0) ? r : mpz_class(-r);
}

bool is_square_free_over_Q(const IntPolynomial& f) {
  require_nonzero(f, "is_square_free_over_Q");
  if (f.degree() < 1) return true;
  return gcd_over_Q(f, derivative(f)).degree() == 0;
}

std::optional<mpz_class> has_integer_root(const IntPolynomial& f) {
  require_nonzero(f, "has_integer_root");
  const mpz_class& a0 = f.coeffs().front();
  if (a0 == 0) return mpz_class(0);
  // An integer root divides the constant term, whatever the leading coefficient.
  for (const auto& d : divisors(a0)) {
    if (f(d) == 0) return d;
    const mpz_class neg = -d;
    if (f(neg) == 0) return neg;
  }
  return std::nullopt;
}

std::string to_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const mpz_class& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const mpz_class mag = abs(c);
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

namespace {

constexpr int kMaxParsedDegree = 4096;

class TermParser {
 public:
  explicit TermParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  IntPolynomial parse() {
    if (s_.empty()) fail(Errc::ParseError, "empty polynomial text");
    for (char ch : s_) {
      if (ch == '.' || ch == '/') fail(Errc::NonIntegerCoefficient, "non-integer coefficient in '" + s_ + "'");
    }
    std::vector<mpz_class> coeffs;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = s_[pos_++] == '-';
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      std::string digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
      bool has_var = false;
      if (peek() == '*') {
        if (digits.empty()) error("'*' without a coefficient");
        ++pos_;
        if (peek() != 'x' && peek() != 'X') error("expected x after '*'");
      }
      long exponent = 0;
      if (peek() == 'x' || peek() == 'X') {
        ++pos_;
        has_var = true;
        exponent = 1;
        if (peek() == '^') {
          ++pos_;
          std::string exp;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) exp += s_[pos_++];
          if (exp.empty() || exp.size() > 6) error("bad exponent");
          exponent = std::stol(exp);
          if (exponent > kMaxParsedDegree) error("exponent too large");
        }
      }
      if (digits.empty() && !has_var) error("expected a term");
      mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
      if (negative) c = -c;
      if (coeffs.size() <= static_cast<std::size_t>(exponent)) coeffs.resize(static_cast<std::size_t>(exponent) + 1, 0);
      coeffs[static_cast<std::size_t>(exponent)] += c;
    }
    return IntPolynomial(std::move(coeffs));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, "cannot parse '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_poly(std::string_view text) {
  if (text.find(';') != std::string_view::npos) fail(Errc::ParseError, "unexpected ';' in single polynomial");
  return TermParser(text).parse();
}

std::string FactoredPolynomial::key() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "; ";
    out += to_string(f);
  }
  return out;
}

FactoredPolynomial product_of(std::vector<IntPolynomial> factors) {
  if (factors.empty()) fail(Errc::EmptySet, "product_of: no factors");
  IntPolynomial product = IntPolynomial::constant(1);
  for (const auto& f : factors) {
    if (f.is_zero()) fail(Errc::ZeroFactor, "product_of: zero factor");
    if (f.degree() < 1) fail(Errc::DegreeZero, "product_of: constant factor " + to_string(f));
    if (!f.is_monic()) fail(Errc::NonMonic, "product_of: factor " + to_string(f) + " is not monic");
    product = product * f;
  }
  FactoredPolynomial out;
  out.factors_ = std::move(factors);
  out.product_ = std::move(product);
  return out;
}

FactoredPolynomial parse_factored(std::string_view text) {
  std::vector<IntPolynomial> factors;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    const std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    factors.push_back(TermParser(piece).parse());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return product_of(std::move(factors));
}

std::optional<mpz_class> has_integer_root(const FactoredPolynomial& f) {
  for (const auto& factor : f.factors()) {
    if (auto r = has_integer_root(factor)) return r;
  }
  return std::nullopt;
}

mpz_class ramified_prime_bound(const FactoredPolynomial& f) {
  const auto& fs = f.factors();
  mpz_class delta = 1;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!is_square_free_over_Q(fs[i])) fail(Errc::NotSquareFree, "factor " + to_string(fs[i]) + " is not square-free");
    delta *= abs(discriminant(fs[i]));
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const mpz_class r = resultant(fs[i], fs[j]);
      if (r == 0) {
        fail(Errc::ZeroResultant, "factors " + to_string(fs[i]) + " and " + to_string(fs[j]) + " share a root");
      }
      delta *= abs(r);
    }
  }
  return delta;
}

}  // namespace exceptio
