#pragma once

// Information sets, per-agent information ensembles, their classification
// (straight/thin, nondiminishing, perfect) and the time-indexed
// information relation they generate.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stratos/history_set.hpp"
#include "stratos/world.hpp"

namespace stratos {

// Nonempty, thin set of vertices: no history passes through two members.
class InfoSet {
 public:
  InfoSet(const Universe& u, std::vector<VertexId> members);

  const std::vector<VertexId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(VertexId v) const;

  friend bool operator==(const InfoSet&, const InfoSet&) = default;

 private:
  std::vector<VertexId> members_;  // sorted, unique
};

HistorySet i_star(const Universe& u, const InfoSet& info);
bool is_straight(const Universe& u, const InfoSet& info);
bool is_thin(const Universe& u, const InfoSet& info);

// A complete partition of the universe's vertices for one agent.
class InfoEnsemble {
 public:
  // Throws PartitionViolation when a vertex is covered twice or not at all.
  InfoEnsemble(std::shared_ptr<const Universe> universe, std::string agent,
               std::vector<InfoSet> cells, std::vector<std::string> names = {});

  // Every vertex in its own cell.
  static InfoEnsemble perfect(std::shared_ptr<const Universe> universe, std::string agent);

  const std::string& agent() const { return agent_; }
  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const { return universe_; }

  std::size_t cell_count() const { return cells_.size(); }
  const InfoSet& cell(std::size_t c) const { return cells_.at(c); }
  const std::string& cell_name(std::size_t c) const { return names_.at(c); }
  std::optional<std::size_t> find_cell(const std::string& name) const;
  std::size_t cell_index(VertexId v) const;
  const InfoSet& cell_of(VertexId v) const { return cells_[cell_index(v)]; }
  const InfoSet& cell_of(const Vertex& v) const { return cell_of(universe_->vertex_of(v)); }
  // I* of a cell, precomputed.
  const HistorySet& star(std::size_t c) const { return stars_.at(c); }
  // Possible histories for `h` at `t`: I(H^t)*.
  const HistorySet& possible(HistoryId h, Time t) const {
    return stars_[cell_index(universe_->vertex_of(h, t))];
  }

  // Splits cell `c` into the members listed in `keep` and the rest. The
  // kept part retains the original name; the rest gets a "~" suffix.
  InfoEnsemble split(std::size_t c, const std::vector<VertexId>& keep) const;

 private:
  std::shared_ptr<const Universe> universe_;
  std::string agent_;
  std::vector<InfoSet> cells_;
  std::vector<std::string> names_;
  std::vector<HistorySet> stars_;
  std::vector<std::size_t> cell_of_vertex_;
};

struct InfoRelationSlice {
  Time time = 0;
  std::vector<std::pair<HistoryId, HistoryId>> pairs;  // sorted

  bool related(HistoryId h, HistoryId k) const;
};

bool has_ndi(const InfoEnsemble& xi);
bool has_perfect_info(const InfoEnsemble& xi);
InfoRelationSlice info_relation(const InfoEnsemble& xi, Time t);
bool relation_backwards_consistent(const InfoEnsemble& xi);
bool relation_backwards_identical(const InfoEnsemble& xi);

// A witness for a failed nondiminishing-information check.
struct NdiViolation {
  HistoryId history;
  Time earlier;
  Time later;
  HistoryId extra;  // in I(H^later)* but not in I(H^earlier)*
};
std::optional<NdiViolation> find_ndi_violation(const InfoEnsemble& xi);

}  // namespace stratos
