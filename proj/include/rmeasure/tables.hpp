#pragma once

#include <string>
#include <vector>

#include "rmeasure/auxfun.hpp"
#include "rmeasure/intpoly.hpp"

namespace rmeasure {

/// One row of the sector table: c(theta) = c on [theta_lo, theta_hi], attained by p.
struct SectorRow {
  int index = 0;
  double c_value = 0;
  double theta_lo = 0;
  double theta_hi = 0;
  IntPolynomial p;
};

const std::vector<SectorRow>& table1();

/// The 45-term positive-real auxiliary function.
const AuxFunction& theorem2_function();
/// Same, with 240x^11 in term 37 instead of 230x^11.
AuxFunction theorem2_function_variant();
/// The six polynomials excluded by the 45-term bound.
std::vector<IntPolynomial> theorem2_exceptions();
/// Their quoted r values (4 decimals), same order.
std::vector<double> theorem2_exception_values();
/// Quoted lower bound for r outside the exceptions.
inline constexpr double kHalfLineBound = 1.6165;

/// Sector function f_i, i = 1..9, weighted on the ray at theta_hi of row i.
const AuxFunction& sector_function(int i);

/// Raw file contents as shipped under tables/.
std::string table1_tsv();
std::string theorem2_aux();
std::string sector_aux(int i);

/// Writes table1.tsv, theorem2.aux and f1.aux..f9.aux into dir (created if needed).
void dump_tables(const std::string& dir);

}  // namespace rmeasure
