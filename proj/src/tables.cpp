#include "stratos/tables.hpp"

#include <cmath>

#include "stratos/errors.hpp"

namespace stratos {

Prior::Prior(std::vector<double> weights) : weights_(std::move(weights)) {
  double total = 0;
  for (double w : weights_) {
    if (!(w >= 0) || !std::isfinite(w)) throw DomainError("prior weights must be finite and nonnegative");
    total += w;
  }
  if (std::fabs(total - 1.0) > kProbabilityTolerance)
    throw DomainError("prior weights sum to " + std::to_string(total) + ", not 1");
}

Prior Prior::uniform(std::size_t histories) {
  if (histories == 0) throw DomainError("uniform prior over no histories");
  return Prior(std::vector<double>(histories, 1.0 / static_cast<double>(histories)));
}

double Prior::mass(const HistorySet& s) const {
  double m = 0;
  for (HistoryId h : s) m += weights_.at(h);
  return m;
}

double UtilityTable::at(const std::string& agent, HistoryId h) const {
  auto a = table_.find(agent);
  if (a != table_.end()) {
    auto it = a->second.find(h);
    if (it != a->second.end()) return it->second;
  }
  auto d = defaults_.find(agent);
  return d == defaults_.end() ? 0.0 : d->second;
}

std::map<HistoryId, double> UtilityTable::slice(const std::string& agent, std::size_t histories) const {
  std::map<HistoryId, double> out;
  for (HistoryId h = 0; h < histories; ++h) out[h] = at(agent, h);
  return out;
}

}  // namespace stratos
