#include "rmeasure/discovery.hpp"

#include <algorithm>
#include <sstream>

namespace rmeasure {

namespace {

bool contains(const std::vector<IntPolynomial>& v, const IntPolynomial& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

std::string join(const std::vector<IntPolynomial>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += to_string(ps[i]);
  }
  return s;
}

IntPolynomial product(const AuxFunction& f) {
  IntPolynomial Q = IntPolynomial::constant(1);
  for (const auto& t : f.terms) Q = Q * t.q;
  return Q;
}

}  // namespace

std::string DiscoveryState::audit() const {
  std::ostringstream os;
  os.precision(10);
  os << "step\tk\tm_lower\tadded\tremoved\n";
  for (const auto& h : history)
    os << h.step << '\t' << h.k << '\t' << h.m_lower << "\t+(" << join(h.added) << ")\t-(" << join(h.removed) << ")"
       << (h.accepted ? "" : "\trejected") << '\n';
  return os.str();
}

DiscoveryState seed_state(const WeightKind& weight, const DiscoveryOptions& opt) {
  std::vector<IntPolynomial> polys{IntPolynomial::x()};
  if (!weight.is_sector()) polys.push_back(parse_polynomial("x - 1"));
  SIPResult sip = semi_infinite_optimize(polys, weight, {}, opt.sip);
  DiscoveryState s;
  s.aux = sip.best;
  s.points = sip.points;
  s.m_lower = global_min(s.aux, opt.sip.min).m;
  s.history.push_back({0, 0, s.m_lower, polys, {}, true});
  return s;
}

DiscoveryState recursive_step(DiscoveryState state, const DiscoveryOptions& opt) {
  const int step = state.history.empty() ? 1 : state.history.back().step + 1;
  const std::vector<IntPolynomial> old_polys = state.aux.polynomials();

  FormSpec spec;
  spec.Q = product(state.aux);
  spec.t = state.aux.t();
  spec.r = 0;
  for (const auto& q : old_polys) spec.r += q.degree();
  spec.k = state.k;
  spec.points = state.points;
  spec.scale = opt.scale;
  spec.balance = opt.balance;
  IntPolynomial R = find_candidate(spec, state.aux.weight);

  std::vector<IntPolynomial> fresh;
  for (const auto& [q, mult] : factor(R).factors) {
    (void)mult;
    if (q.degree() < 1 || contains(old_polys, q) || contains(fresh, q)) continue;
    fresh.push_back(q);
  }

  DiscoveryRecord rec{step, state.k, state.m_lower, {}, {}, true};
  if (fresh.empty()) {
    state.history.push_back(rec);
    return state;
  }

  std::vector<IntPolynomial> polys = old_polys;
  polys.insert(polys.end(), fresh.begin(), fresh.end());
  SIPOptions so = opt.sip;
  so.c_init = state.aux.coefficients();
  so.c_init.resize(polys.size(), 0.0);
  SIPResult sip = semi_infinite_optimize(polys, state.aux.weight, state.points, so);

  AuxFunction next;
  next.weight = state.aux.weight;
  for (const auto& t : sip.best.terms) {
    if (t.c > opt.prune_tol) {
      next.terms.push_back(t);
      if (!contains(old_polys, t.q)) rec.added.push_back(t.q);
    }
  }
  for (const auto& q : old_polys)
    if (std::none_of(next.terms.begin(), next.terms.end(), [&](const AuxTerm& t) { return t.q == q; }))
      rec.removed.push_back(q);

  MinResult gm = next.terms.empty() ? MinResult{} : global_min(next, opt.sip.min);
  for (const auto& lm : gm.minima) state.points.add(lm.x);

  if (!next.terms.empty() && gm.m >= state.m_lower) {
    state.aux = next;
    state.m_lower = gm.m;
    rec.m_lower = gm.m;
  } else {
    rec.accepted = false;
    rec.added.clear();
    rec.removed.clear();
  }
  state.history.push_back(rec);
  return state;
}

DiscoveryState run(const WeightKind& weight, int steps, const std::vector<int>& k_schedule, const DiscoveryOptions& opt) {
  if (steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (k_schedule.empty()) throw std::invalid_argument("empty k schedule");
  DiscoveryState s = seed_state(weight, opt);
  for (int i = 0; i < steps; ++i) {
    s.k = k_schedule[static_cast<std::size_t>(i) % k_schedule.size()];
    s = recursive_step(std::move(s), opt);
  }
  return s;
}

}  // namespace rmeasure
