#pragma once

// Probability prior over histories and per-agent history utilities.

#include <map>
#include <string>
#include <vector>

#include "stratos/history_set.hpp"

namespace stratos {

inline constexpr double kProbabilityTolerance = 1e-9;

class Prior {
 public:
  Prior() = default;
  // Throws DomainError for negative weights or a total off 1 by more than
  // the tolerance.
  explicit Prior(std::vector<double> weights);
  static Prior uniform(std::size_t histories);

  double at(HistoryId h) const { return weights_.at(h); }
  double mass(const HistorySet& s) const;
  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// U_A(H), defaulting to 0.
class UtilityTable {
 public:
  void set(const std::string& agent, HistoryId h, double u) { table_[agent][h] = u; }
  void set_default(const std::string& agent, double u) { defaults_[agent] = u; }
  double at(const std::string& agent, HistoryId h) const;
  // Per-history utilities for one agent over `histories` ids.
  std::map<HistoryId, double> slice(const std::string& agent, std::size_t histories) const;

 private:
  std::map<std::string, std::map<HistoryId, double>> table_;
  std::map<std::string, double> defaults_;
};

}  // namespace stratos
