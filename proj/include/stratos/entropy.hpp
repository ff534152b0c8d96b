#pragma once

// Shannon entropies in bits (log base 2, 0 log 0 = 0).

#include <cstddef>
#include <optional>
#include <vector>

#include "stratos/information.hpp"
#include "stratos/strategy.hpp"
#include "stratos/tables.hpp"

namespace stratos {

// Weights over an ordered support. Throws DomainError unless nonnegative
// and summing to 1 within kProbabilityTolerance.
class Distribution {
 public:
  explicit Distribution(std::vector<double> weights);
  static Distribution uniform(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

double entropy(const Distribution& p);

// Weights follow the order of info.members(); uniform when absent.
double state_entropy(const InfoSet& info, const std::optional<Distribution>& p = std::nullopt);
// Weights follow the order of s.members(); uniform when absent.
double control_entropy(const PlanState& s, const std::optional<Distribution>& p = std::nullopt);
// joint[i][j] = p(pi_i, theta_j). Rows with zero marginal are skipped.
double conditional_control_entropy(const std::vector<std::vector<double>>& joint);
// Prior renormalized over pi*.
double strategic_entropy(const StrategySpace& space, StrategyIndex pi, const Prior& prior);

}  // namespace stratos
