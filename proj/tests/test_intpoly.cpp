#include <doctest.h>

#include <random>
#include <set>

#include "rmeasure/intpoly.hpp"

using namespace rmeasure;

TEST_SUITE_BEGIN("intpoly");

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

// Sylvester matrix determinant by fraction-free Gaussian elimination.
BigInt sylvester_resultant(const IntPolynomial& a, const IntPolynomial& b) {
  int m = a.degree(), n = b.degree();
  int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<BigInt>> S(static_cast<std::size_t>(N), std::vector<BigInt>(static_cast<std::size_t>(N)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[i][i + j] = a.coeff(static_cast<std::size_t>(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[n + i][i + j] = b.coeff(static_cast<std::size_t>(n - j));
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (S[k][k] == 0) {
      int r = k + 1;
      while (r < N && S[r][k] == 0) ++r;
      if (r == N) return 0;
      std::swap(S[k], S[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i)
      for (int j = k + 1; j < N; ++j) S[i][j] = (S[i][j] * S[k][k] - S[i][k] * S[k][j]) / prev;
    prev = S[k][k];
  }
  return sign * S[N - 1][N - 1];
}

IntPolynomial random_poly(std::mt19937_64& rng, int deg, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<BigInt> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = d(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("parse and print round trip") {
  CHECK(to_string(P("x^2 - 3x + 1")) == "x^2 - 3x + 1");
  CHECK(to_string(P("-x^3+5*x^2 -6x+1")) == "-x^3 + 5x^2 - 6x + 1");
  CHECK(to_string(P("0")) == "0");
  CHECK(to_string(P("x - x")) == "0");
  CHECK(P("2x*x + 3") == IntPolynomial::from_coeffs({3, 0, 2}));
  CHECK(P("x^3 + x^3") == IntPolynomial::from_coeffs({0, 0, 0, 2}));
  CHECK(P("123456789012345678901234567890").leading() == BigInt("123456789012345678901234567890"));
  for (const char* s : {"x^13 - 23x^12 + 230x^11 - 1315x^10 + 1", "7", "-x", "x^40 + 2"}) {
    CHECK(to_string(P(to_string(P(s)).c_str())) == to_string(P(s)));
  }
}

TEST_CASE("parse errors carry a position") {
  auto pos_of = [](const char* s) -> std::size_t {
    try {
      parse_polynomial(s);
    } catch (const ParseError& e) {
      return e.position;
    }
    return 9999;
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("x^-2") == 2);
  CHECK(pos_of("x^2 + (x+1)") == 6);
  CHECK(pos_of("x^2 3") == 4);
  CHECK(pos_of("x + ") == 4);
  CHECK(pos_of("y") == 0);
  CHECK(pos_of("x^1.5") != 9999);
}

TEST_CASE("degree, content, derivative") {
  auto p = P("6x^3 - 4x + 2");
  CHECK(p.degree() == 3);
  CHECK(p.content() == 2);
  CHECK(p.primitive_part() == P("3x^3 - 2x + 1"));
  CHECK((-p).primitive_part() == P("3x^3 - 2x + 1"));
  CHECK(p.derivative() == P("18x^2 - 4"));
  CHECK(IntPolynomial().degree() == -1);
  CHECK(P("x^3 - 5x^2 + 6x - 1").reciprocal() == P("-x^3 + 6x^2 - 5x + 1"));
}

TEST_CASE("evaluation agrees across backends") {
  auto p = P("x^4 - 7x^3 + 13x^2 - 7x + 1");
  CHECK(eval_double(p, 2.0) == doctest::Approx(-1.0));
  PrecisionGuard g(128);
  CHECK(eval_real(p, Real(2)) == -1);
  Complex z{Real(0), Real(1)};
  Complex v = eval_complex(p, z);
  // i^4 - 7 i^3 + 13 i^2 - 7 i + 1 = 1 + 7i - 13 - 7i + 1
  CHECK(v.re == -11);
  CHECK(v.im == 0);
}

TEST_CASE("pseudo remainder identity") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 50; ++it) {
    auto a = random_poly(rng, 2 + it % 7, 9);
    auto b = random_poly(rng, 1 + it % 4, 9);
    auto r = pseudo_remainder(a, b);
    CHECK(r.degree() < b.degree());
    BigInt scale;
    int e = std::max(a.degree() - b.degree() + 1, 0);
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(e));
    auto q = exact_quotient(a * scale - r, b);
    CHECK(q.has_value());
  }
}

TEST_CASE("exact quotient") {
  auto a = P("x^2 - 3x + 1");
  auto b = P("2x^3 + x - 5");
  CHECK(*exact_quotient(a * b, b) == a);
  CHECK(!exact_quotient(a * b + IntPolynomial::constant(1), b).has_value());
  CHECK(!exact_quotient(P("x^2 + 1"), P("2x + 1")).has_value());
}

TEST_CASE("gcd is primitive and divides both") {
  auto g = P("x^2 - 3x + 1");
  auto a = g * P("3x + 2") * IntPolynomial::constant(6);
  auto b = g * P("x^3 - x - 1") * IntPolynomial::constant(-4);
  CHECK(gcd(a, b) == g);
  CHECK(gcd(P("x^2 + 1"), P("x - 1")) == P("1"));
  CHECK(gcd(IntPolynomial(), IntPolynomial()).is_zero());
}

TEST_CASE("resultant matches the Sylvester determinant") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 120; ++it) {
    auto a = random_poly(rng, it % 8, 20);
    auto b = random_poly(rng, (it / 8) % 7, 20);
    if (it % 5 == 0) {
      auto c = random_poly(rng, 1 + it % 3, 5);
      a = a * c;
      b = b * c;
    }
    if (it % 7 == 0) a *= BigInt(6);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(resultant(a, b) == sylvester_resultant(a, b));
  }
  CHECK(resultant(P("x^2 - 3x + 1"), P("x - 1")) == -1);
  CHECK_THROWS_AS(resultant(IntPolynomial(), P("x")), std::invalid_argument);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P("x^2 - 3x + 1")) == 5);
  CHECK(discriminant(P("x^3 - 5x^2 + 6x - 1")) == 49);
  CHECK(discriminant(P("3x^2 + 2x + 1")) == -8);
  CHECK(discriminant(P("x")) == 1);
}

TEST_CASE("square-free decomposition") {
  auto a = P("x^2 - 3x + 1"), b = P("x - 1"), c = P("2x^3 + x + 1");
  auto p = a * b * b * c * c * c * IntPolynomial::constant(5);
  auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 3);
  CHECK(sf[0].first == a);
  CHECK(sf[0].second == 1);
  CHECK(sf[1].first == b);
  CHECK(sf[2].first == c);
  CHECK(sf[2].second == 3);
}

TEST_CASE("factorization reconstructs the input") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    IntPolynomial p = IntPolynomial::constant(1);
    int parts = 1 + it % 4;
    for (int k = 0; k < parts; ++k) p *= random_poly(rng, 1 + (it + k) % 5, 6);
    if (p.degree() < 1) continue;
    auto f = factor(p);
    CAPTURE(to_string(p));
    CHECK(f.expand() == p);
    for (auto& [g, m] : f.factors) {
      CHECK(g.degree() >= 1);
      CHECK(g.content() == 1);
      CHECK(g.leading() > 0);
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("known irreducibles and splittings") {
  // Swinnerton-Dyer: irreducible over Z, but splits into factors of degree <= 2 mod every prime.
  CHECK(is_irreducible(P("x^4 - 10x^2 + 1")));
  CHECK(is_irreducible(P("x^8 - 40x^6 + 352x^4 - 960x^2 + 576")));
  CHECK(is_irreducible(P("x^6 - 11x^5 + 43x^4 - 73x^3 + 53x^2 - 15x + 1")));
  {
    auto big = P("x^13 - 23x^12 + 230x^11 - 1315x^10 + 4789x^9 - 11739x^8 + 19842x^7 - 23249x^6 + 18639x^5 - 10056x^4 + 3490x^3 - 712x^2 + 73x - 2");
    CHECK(factor(big).expand() == big);
  }
  CHECK(!is_irreducible(P("x^4 + 4")));  // (x^2+2x+2)(x^2-2x+2)

  auto f = factor(P("x^12 - 1"));
  std::set<std::string> got;
  for (auto& [g, m] : f.factors) got.insert(to_string(g));
  std::set<std::string> want{"x - 1", "x + 1", "x^2 + 1", "x^2 + x + 1", "x^2 - x + 1", "x^4 - x^2 + 1"};
  CHECK(got == want);

  auto h = factor(P("-12x^5 + 12x^3"));
  CHECK(h.unit == -12);
  CHECK(h.expand() == P("-12x^5 + 12x^3"));
  REQUIRE(h.factors.size() == 3);
  bool has_x3 = false;
  for (auto& [g, m] : h.factors) has_x3 = has_x3 || (g == P("x") && m == 3);
  CHECK(has_x3);

  // Product of the two Swinnerton-Dyer factors recombines correctly.
  auto sd = P("x^4 - 10x^2 + 1") * P("x^4 - 10x^2 + 1").reciprocal() * P("x^2 - 3x + 1");
  auto fs = factor(sd);
  CHECK(fs.expand() == sd);
}

TEST_SUITE_END();
