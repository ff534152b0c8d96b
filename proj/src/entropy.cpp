#include "stratos/entropy.hpp"

#include <cmath>

#include "stratos/errors.hpp"

namespace stratos {

Distribution::Distribution(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("distribution over an empty support");
  double total = 0;
  for (double w : weights_) {
    if (!(w >= 0) || !std::isfinite(w)) throw DomainError("distribution weights must be finite and nonnegative");
    total += w;
  }
  if (std::fabs(total - 1.0) > kProbabilityTolerance)
    throw DomainError("distribution sums to " + std::to_string(total) + ", not 1");
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw DomainError("distribution over an empty support");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double entropy(const Distribution& p) {
  // A uniform support gives log2 n exactly.
  bool uniform = true;
  for (double w : p.weights()) uniform = uniform && w == p[0];
  if (uniform) return std::log2(static_cast<double>(p.size()));
  double h = 0;
  for (double w : p.weights())
    if (w > 0) h -= w * std::log2(w);
  return h;
}

namespace {

double sized_entropy(std::size_t n, const std::optional<Distribution>& p, const char* what) {
  if (!p) return entropy(Distribution::uniform(n));
  if (p->size() != n)
    throw DomainError(std::string("distribution has ") + std::to_string(p->size()) + " weights for " +
                      std::to_string(n) + " " + what);
  return entropy(*p);
}

}  // namespace

double state_entropy(const InfoSet& info, const std::optional<Distribution>& p) {
  return sized_entropy(info.size(), p, "vertices");
}

double control_entropy(const PlanState& s, const std::optional<Distribution>& p) {
  return sized_entropy(s.size(), p, "strategies");
}

double conditional_control_entropy(const std::vector<std::vector<double>>& joint) {
  std::vector<double> flat;
  std::size_t cols = joint.empty() ? 0 : joint.front().size();
  for (const auto& row : joint) {
    if (row.size() != cols) throw DomainError("joint distribution rows differ in length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  Distribution check(flat);  // validates
  double h = 0;
  for (const auto& row : joint) {
    double marginal = 0;
    for (double w : row) marginal += w;
    if (marginal <= 0) continue;
    double hr = 0;
    for (double w : row)
      if (w > 0) hr -= (w / marginal) * std::log2(w / marginal);
    h += marginal * hr;
  }
  return h;
}

double strategic_entropy(const StrategySpace& space, StrategyIndex pi, const Prior& prior) {
  HistorySet pot = space.potential(pi);
  double total = prior.mass(pot);
  if (total <= 0) throw UndefinedConditional("strategy potential has zero prior mass");
  double h = 0;
  for (HistoryId k : pot) {
    double w = prior.at(k) / total;
    if (w > 0) h -= w * std::log2(w);
  }
  return h;
}

}  // namespace stratos
