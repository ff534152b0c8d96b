#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratos/formula.hpp"
#include "stratos/information.hpp"
#include "stratos/world.hpp"

namespace stratos {

using EnsembleMap = std::map<std::string, std::shared_ptr<const InfoEnsemble>>;

struct Point {
  HistoryId history = 0;
  Time time = 0;
};

// Truth values of one formula at every (history, time).
class TruthTable {
 public:
  TruthTable(std::size_t histories, std::size_t times) : times_(times), bits_(histories * times, 0) {}
  bool at(HistoryId h, Time t) const { return bits_[h * times_ + static_cast<std::size_t>(t)] != 0; }
  void set(HistoryId h, Time t, bool v) { bits_[h * times_ + static_cast<std::size_t>(t)] = v; }
  std::size_t histories() const { return times_ ? bits_.size() / times_ : 0; }
  std::size_t times() const { return times_; }

 private:
  std::size_t times_;
  std::vector<char> bits_;
};

struct ValidityResult {
  bool valid = true;
  std::optional<Point> counterexample;  // first failing point, history-major
};

// Evaluates formulas over the whole (history, time) grid, bottom-up, with
// per-subformula memoization. Not thread-safe; use one per thread.
class Evaluator {
 public:
  Evaluator(std::shared_ptr<const Universe> universe, EnsembleMap ensembles);

  const Universe& universe() const { return *universe_; }
  const EnsembleMap& ensembles() const { return ensembles_; }

  // Throws RangeError for out-of-axis times and ResolutionError for unknown
  // propositions or agents without an ensemble.
  const TruthTable& table(const FormulaPtr& f);
  bool eval(const FormulaPtr& f, HistoryId h, Time t);
  ValidityResult valid(const FormulaPtr& f);

 private:
  TruthTable compute(const Formula& f);
  TruthTable necessity(const Formula& f, bool universal);
  void check_time(Time t) const;

  std::shared_ptr<const Universe> universe_;
  EnsembleMap ensembles_;
  std::map<std::string, TruthTable> cache_;
};

}  // namespace stratos
