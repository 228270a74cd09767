#include "rmeasure/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace rmeasure {

namespace {

BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// nearest integer to a/b for b > 0, ties upward
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Exact Gram-Schmidt data, 1-based as in the integral LLL recurrences:
// d[i] = det Gram(b_1..b_i), lam[i][j] = d[j] * mu_ij.
struct GSData {
  std::vector<BigInt> d;
  std::vector<std::vector<BigInt>> lam;
};

GSData gram_schmidt(const LatticeBasis& b) {
  const std::size_t n = b.rank();
  GSData g;
  g.d.assign(n + 1, 0);
  g.lam.assign(n + 1, std::vector<BigInt>(n + 1, 0));
  g.d[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j <= k; ++j) {
      BigInt u = dot(b.rows[k - 1], b.rows[j - 1]);
      for (std::size_t i = 1; i < j; ++i) u = (g.d[i] * u - g.lam[k][i] * g.lam[j][i]) / g.d[i - 1];
      if (j < k) {
        g.lam[k][j] = u;
      } else {
        if (u == 0) throw RankDeficient("lattice basis is rank deficient");
        g.d[k] = u;
      }
    }
  }
  return g;
}

void check_delta(double delta) {
  if (!(delta > 0.25 && delta < 1.0)) throw std::invalid_argument("LLL delta must lie in (1/4, 1)");
}

}  // namespace

BigInt squared_norm(const std::vector<BigInt>& v) { return dot(v, v); }

BigInt gram_determinant(const LatticeBasis& b) {
  if (b.rank() == 0) return 1;
  try {
    return gram_schmidt(b).d[b.rank()];
  } catch (const RankDeficient&) {
    return 0;
  }
}

LatticeBasis lll_reduce(LatticeBasis basis, double delta) {
  check_delta(delta);
  const mpq_class dq(delta);
  const BigInt P = dq.get_num(), Qd = dq.get_den();
  const std::size_t n = basis.rank();
  if (n == 0) return basis;
  for (const auto& r : basis.rows)
    if (r.size() != basis.ambient()) throw std::invalid_argument("ragged lattice basis");

  auto& b = basis.rows;
  std::vector<BigInt> d(n + 1, 0);
  std::vector<std::vector<BigInt>> lam(n + 1, std::vector<BigInt>(n + 1, 0));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw RankDeficient("lattice basis is rank deficient");
  if (n == 1) return basis;

  auto red = [&](std::size_t k, std::size_t l) {
    BigInt two = 2 * lam[k][l];
    if (abs(two) <= d[l]) return;
    BigInt q = round_div(lam[k][l], d[l]);
    for (std::size_t c = 0; c < b[k - 1].size(); ++c) b[k - 1][c] -= q * b[l - 1][c];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t kmax = 1;
  auto swap_k = [&](std::size_t k) {
    std::swap(b[k - 1], b[k - 2]);
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    BigInt l = lam[k][k - 1];
    BigInt B = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      BigInt t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = B;
  };

  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        BigInt u = dot(b[k - 1], b[j - 1]);
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u == 0) throw RankDeficient("lattice basis is rank deficient");
          d[k] = u;
        }
      }
    }
    red(k, k - 1);
    // Lovasz: Qd d_k d_{k-2} >= P d_{k-1}^2 - Qd lam^2
    if (Qd * d[k] * d[k - 2] < P * d[k - 1] * d[k - 1] - Qd * lam[k][k - 1] * lam[k][k - 1]) {
      swap_k(k);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
  return basis;
}

ReductionCheck check_reduced(const LatticeBasis& b, double delta) {
  check_delta(delta);
  const mpq_class dq(delta);
  ReductionCheck out;
  const std::size_t n = b.rank();
  if (n == 0) return out;
  GSData g = gram_schmidt(b);
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t j = 1; j < k; ++j)
      if (2 * abs(g.lam[k][j]) > g.d[j]) out.size_reduced = false;
    mpq_class lhs = mpq_class(g.d[k] * g.d[k - 2]);
    mpq_class rhs = dq * mpq_class(g.d[k - 1] * g.d[k - 1]) - mpq_class(g.lam[k][k - 1] * g.lam[k][k - 1]);
    if (lhs < rhs) out.lovasz = false;
  }
  return out;
}

LatticeBasis build_forms(const FormSpec& spec, const WeightKind& weight) {
  if (spec.k < 1) throw std::invalid_argument("candidate degree k must be at least 1");
  if (!(spec.t > 0)) throw std::invalid_argument("corrective coefficient t must be positive");
  if (spec.scale < 6) throw std::invalid_argument("scale exponent must be at least 6");
  if (spec.balance < 1) throw std::invalid_argument("balance must be positive");
  if (spec.Q.is_zero()) throw std::invalid_argument("Q must be nonzero");
  const std::size_t K = static_cast<std::size_t>(spec.k) + 1;
  if (spec.points.empty()) throw std::invalid_argument("no control points");

  std::optional<double> theta = spec.theta;
  if (!theta && weight.is_sector()) theta = weight.theta();
  if (theta && !(*theta >= 0 && *theta < 90)) throw std::invalid_argument("theta must lie in [0, 90)");
  const bool complex_case = theta && *theta > 0;

  PrecisionGuard guard(256);
  const Real ten_p = boost::multiprecision::pow(Real(10), spec.scale);
  const Real rk_t = Real(spec.r + spec.k) / Real(spec.t);
  Complex rot(Real(1));
  if (complex_case) rot = Complex::polar(Real(1), degrees_to_radians(Real(*theta)));

  // columns[c][l]
  std::vector<std::vector<BigInt>> columns;
  for (double xd : spec.points.points()) {
    Real x(xd);
    Real w = xd > 1.0 ? x : Real(0);
    Real E = exp(-w * rk_t) * ten_p;
    if (complex_case) {
      Complex z = rot * Complex(x);
      Complex v = eval_complex(spec.Q, z) * Complex(E);
      std::vector<BigInt> re(K), im(K);
      for (std::size_t l = 0; l < K; ++l) {
        re[l] = round_to_bigint(v.re);
        im[l] = round_to_bigint(v.im);
        v *= z;
      }
      columns.push_back(std::move(re));
      columns.push_back(std::move(im));
    } else {
      Real v = eval_real(spec.Q, x) * E;
      std::vector<BigInt> col(K);
      for (std::size_t l = 0; l < K; ++l) {
        col[l] = round_to_bigint(v);
        v *= x;
      }
      columns.push_back(std::move(col));
    }
  }
  columns.erase(std::remove_if(columns.begin(), columns.end(),
                               [](const std::vector<BigInt>& c) {
                                 return std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v == 0; });
                               }),
                columns.end());
  if (columns.empty())
    throw std::runtime_error("every form rounds to zero; increase the scale exponent p");

  LatticeBasis B;
  B.rows.assign(K, std::vector<BigInt>(K + columns.size(), 0));
  for (std::size_t l = 0; l < K; ++l) {
    B.rows[l][l] = spec.balance;
    for (std::size_t c = 0; c < columns.size(); ++c) B.rows[l][K + c] = columns[c][l];
  }
  return B;
}

IntPolynomial decode(const std::vector<BigInt>& v, const FormSpec& spec) {
  const std::size_t K = static_cast<std::size_t>(spec.k) + 1;
  std::vector<BigInt> a(K);
  for (std::size_t l = 0; l < K; ++l) a[l] = v.at(l) / spec.balance;
  return IntPolynomial(std::move(a));
}

IntPolynomial find_candidate(const FormSpec& spec, const WeightKind& weight) {
  LatticeBasis red = lll_reduce(build_forms(spec, weight));
  std::size_t best = 0;
  BigInt best_norm = squared_norm(red.rows[0]);
  for (std::size_t i = 1; i < red.rank(); ++i) {
    BigInt n = squared_norm(red.rows[i]);
    if (n < best_norm) {
      best_norm = n;
      best = i;
    }
  }
  IntPolynomial R = decode(red.rows[best], spec);
  if (R.is_zero()) throw std::runtime_error("candidate decodes to zero; adjust the scale exponent p");
  return R;
}

}  // namespace rmeasure
