#include "rmeasure/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace rmeasure {

namespace {

const BigInt& zero_bigint() {
  static const BigInt z = 0;
  return z;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::from_coeffs(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_bigint();
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  IntPolynomial out = *this;
  if (g != 1) out.divide_exact(g);
  return out;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reciprocal() const {
  std::vector<BigInt> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(r));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

IntPolynomial& IntPolynomial::divide_exact(const BigInt& s) {
  for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool canonical_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const auto& x = a.coeffs_[static_cast<std::size_t>(k)];
    const auto& y = b.coeffs_[static_cast<std::size_t>(k)];
    if (x != y) return x < y;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Text form

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    IntPolynomial result;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [coef, power] = parse_term();
      if (sign < 0) coef = -coef;
      result += IntPolynomial::monomial(coef, power);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  std::pair<BigInt, std::size_t> parse_term() {
    BigInt coef = 1;
    std::size_t power = 0;
    int factors = 0;
    bool need_factor = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (factors > 0 && !need_factor) throw ParseError("unexpected number", pos_);
        coef *= read_integer();
        ++factors;
        need_factor = false;
      } else if (c == 'x') {
        ++pos_;
        skip_ws();
        std::size_t e = 1;
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            throw ParseError("exponent must be a nonnegative integer literal", pos_);
          }
          std::size_t epos = pos_;
          BigInt ev = read_integer();
          if (ev > 1000000) throw ParseError("exponent too large", epos);
          e = ev.get_ui();
        }
        power += e;
        ++factors;
        need_factor = false;
      } else if (c == '*') {
        if (factors == 0 || need_factor) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        need_factor = true;
      } else {
        break;
      }
    }
    if (factors == 0 || need_factor) throw ParseError("expected a term", pos_);
    return {coef, power};
  }

  BigInt read_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// Evaluation

Real eval_real(const IntPolynomial& p, const Real& x) {
  Real acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    mpfr_mul(acc.backend().data(), acc.backend().data(), x.backend().data(), MPFR_RNDN);
    mpfr_add_z(acc.backend().data(), acc.backend().data(), it->get_mpz_t(), MPFR_RNDN);
  }
  return acc;
}

Complex eval_complex(const IntPolynomial& p, const Complex& z) {
  Complex acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= z;
    mpfr_add_z(acc.re.backend().data(), acc.re.backend().data(), it->get_mpz_t(), MPFR_RNDN);
  }
  return acc;
}

double eval_double(const IntPolynomial& p, double x) {
  double acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

// ---------------------------------------------------------------------------
// Division, gcd, resultant

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt& lb = b.leading();
  int db = b.degree();
  int e = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    BigInt lead = r[static_cast<std::size_t>(k)];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k - db + j)].get_mpz_t(), lead.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r.pop_back();
    --e;
  }
  // Remaining factor so the multiplier is exactly lb^(da - db + 1).
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  IntPolynomial out(std::move(r));
  if (e > 0) out *= scale;
  return out;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_quotient by zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt& lb = b.leading();
  int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    BigInt& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(k - db + j)].get_mpz_t(), t.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    q[static_cast<std::size_t>(k - db)] = std::move(t);
  }
  for (int k = 0; k < db; ++k) {
    if (r[static_cast<std::size_t>(k)] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part();
}

namespace {

BigInt pow_ui(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

BigInt resultant(const IntPolynomial& a_in, const IntPolynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  BigInt ca = a_in.content();
  BigInt cb = b_in.content();
  IntPolynomial a = a_in;
  IntPolynomial b = b_in;
  a.divide_exact(ca);
  b.divide_exact(cb);
  BigInt t = pow_ui(ca, static_cast<unsigned long>(b.degree())) * pow_ui(cb, static_cast<unsigned long>(a.degree()));
  BigInt g = 1;
  BigInt h = 1;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -1;
  }
  while (b.degree() > 0) {
    int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    a = std::move(b);
    BigInt div = g * pow_ui(h, static_cast<unsigned long>(delta));
    r.divide_exact(div);
    b = std::move(r);
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt num = pow_ui(g, static_cast<unsigned long>(delta));
      BigInt den = pow_ui(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  // deg b == 0
  int da = a.degree();
  BigInt num = pow_ui(b.leading(), static_cast<unsigned long>(da));
  BigInt last;
  if (da == 0) {
    last = h * num;
  } else {
    BigInt den = pow_ui(h, static_cast<unsigned long>(da - 1));
    mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * last;
}

BigInt discriminant(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  BigInt r = resultant(p, p.derivative());
  BigInt d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  long n = p.degree();
  if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() < 1) return out;
  IntPolynomial f = p.primitive_part();
  IntPolynomial fp = f.derivative();
  IntPolynomial g = gcd(f, fp);
  IntPolynomial c = *exact_quotient(f, g);
  IntPolynomial d = *exact_quotient(fp, g) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    IntPolynomial h = gcd(c, d);
    c = *exact_quotient(c, h);
    d = *exact_quotient(d, h) - c.derivative();
    if (h.degree() > 0) out.emplace_back(std::move(h), i);
  }
  return out;
}

IntPolynomial Factorization::expand() const {
  IntPolynomial out = IntPolynomial::constant(unit);
  for (const auto& [f, m] : factors) {
    for (int i = 0; i < m; ++i) out *= f;
  }
  return out;
}

}  // namespace rmeasure
