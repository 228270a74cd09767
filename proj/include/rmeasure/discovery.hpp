#pragma once

#include <string>
#include <vector>

#include "rmeasure/auxfun.hpp"
#include "rmeasure/lattice.hpp"
#include "rmeasure/siplp.hpp"

namespace rmeasure {

struct DiscoveryRecord {
  int step = 0;
  int k = 0;
  double m_lower = 0;
  std::vector<IntPolynomial> added;
  std::vector<IntPolynomial> removed;
  bool accepted = true;
};

struct DiscoveryState {
  AuxFunction aux;
  ControlSet points;
  int k = 10;
  double m_lower = 0;
  std::vector<DiscoveryRecord> history;

  /// One line per record: `step  k  m_lower  +(added)  -(removed)`.
  std::string audit() const;
};

struct DiscoveryOptions {
  SIPOptions sip;
  int scale = 12;
  long balance = 1;
  double prune_tol = 1e-9;
};

/// {x, x-1} on the positive half-line, {x} on a sector ray, with optimized
/// coefficients. History starts with a step-0 record.
DiscoveryState seed_state(const WeightKind& weight, const DiscoveryOptions& opt = {});

/// LLL candidate at degree state.k, factor, re-optimize, prune, enrich points.
/// The new aux is accepted only if m_lower does not decrease.
DiscoveryState recursive_step(DiscoveryState state, const DiscoveryOptions& opt = {});

DiscoveryState run(const WeightKind& weight, int steps, const std::vector<int>& k_schedule = {5, 10, 15},
                   const DiscoveryOptions& opt = {});

}  // namespace rmeasure
