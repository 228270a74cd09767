#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rmeasure/auxfun.hpp"
#include "rmeasure/intpoly.hpp"
#include "rmeasure/real.hpp"
#include "rmeasure/siplp.hpp"

namespace rmeasure {

/// Row-major integer basis; each row is a basis vector.
struct LatticeBasis {
  std::vector<std::vector<BigInt>> rows;

  std::size_t rank() const { return rows.size(); }
  std::size_t ambient() const { return rows.empty() ? 0 : rows.front().size(); }
};

struct RankDeficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Integral LLL (exact Gram-Schmidt through the d_i / lambda_ij recurrences).
/// delta is taken as the exact binary rational of the double. Throws
/// RankDeficient if the rows are dependent.
LatticeBasis lll_reduce(LatticeBasis basis, double delta = 0.99);

/// Exact Gram determinant det(B B^T); equals det(B)^2 for square B.
BigInt gram_determinant(const LatticeBasis& b);

struct ReductionCheck {
  bool size_reduced = true;
  bool lovasz = true;
  bool ok() const { return size_reduced && lovasz; }
};
/// Post-hoc check with exact rationals.
ReductionCheck check_reduced(const LatticeBasis& b, double delta = 0.99);

BigInt squared_norm(const std::vector<BigInt>& v);

struct FormSpec {
  IntPolynomial Q = IntPolynomial::constant(1);
  double t = 1;
  int r = 0;
  int k = 1;
  ControlSet points;
  std::optional<double> theta;  // overrides the weight's angle when set
  int scale = 12;
  long balance = 1;
};

/// Lattice with rows l = 0..k: [balance * e_l | forms at each point].
/// Real case: round(10^p Q(x) x^l exp(-w(x)(r+k)/t)); sector case: Re and Im of
/// the same expression at z = x e^{i theta}. Point columns that round to zero
/// on every row are dropped; throws std::runtime_error if none survive.
LatticeBasis build_forms(const FormSpec& spec, const WeightKind& weight);

/// sum_l v[l]/balance z^l from the identity block.
IntPolynomial decode(const std::vector<BigInt>& v, const FormSpec& spec);

/// build_forms + lll_reduce, decoding the shortest reduced row.
IntPolynomial find_candidate(const FormSpec& spec, const WeightKind& weight);

}  // namespace rmeasure
