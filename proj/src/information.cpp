#include "stratos/information.hpp"

#include <algorithm>

#include "stratos/errors.hpp"

namespace stratos {

InfoSet::InfoSet(const Universe& u, std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw IllFormedEnsemble("information set must be nonempty");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (i != j && u.vertex_precedes(members_[i], members_[j]))
        throw IllFormedEnsemble("information set is not thin: " + u.vertex_name(members_[i]) +
                                " and " + u.vertex_name(members_[j]) + " lie on one history");
    }
  }
}

bool InfoSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

HistorySet i_star(const Universe& u, const InfoSet& info) {
  HistorySet out;
  for (VertexId v : info.members()) out = out.unite(u.extensions(v));
  return out;
}

bool is_straight(const Universe& u, const InfoSet& info) {
  Time first = u.cut(info.members().front());
  return std::all_of(info.members().begin(), info.members().end(),
                     [&](VertexId v) { return u.cut(v) == first; });
}

bool is_thin(const Universe& u, const InfoSet& info) {
  for (VertexId a : info.members())
    for (VertexId b : info.members())
      if (a != b && u.vertex_precedes(a, b)) return false;
  return true;
}

InfoEnsemble::InfoEnsemble(std::shared_ptr<const Universe> universe, std::string agent,
                           std::vector<InfoSet> cells, std::vector<std::string> names)
    : universe_(std::move(universe)), agent_(std::move(agent)), cells_(std::move(cells)),
      names_(std::move(names)) {
  const Universe& u = *universe_;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  cell_of_vertex_.assign(u.vertex_count(), kUnassigned);
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (VertexId v : cells_[c].members()) {
      if (v >= u.vertex_count()) throw ModelReferenceError("cell references unknown vertex");
      if (cell_of_vertex_[v] != kUnassigned)
        throw PartitionViolation("agent " + agent_ + ": vertex " + u.vertex_name(v) +
                                 " belongs to more than one cell");
      cell_of_vertex_[v] = c;
    }
  }
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    if (cell_of_vertex_[v] == kUnassigned)
      throw PartitionViolation("agent " + agent_ + ": vertex " + u.vertex_name(v) +
                               " is in no cell");
  }
  names_.resize(cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (names_[c].empty()) names_[c] = "c" + std::to_string(c);
    stars_.push_back(i_star(u, cells_[c]));
  }
}

InfoEnsemble InfoEnsemble::perfect(std::shared_ptr<const Universe> universe, std::string agent) {
  std::vector<InfoSet> cells;
  std::vector<std::string> names;
  for (VertexId v = 0; v < universe->vertex_count(); ++v) {
    cells.emplace_back(*universe, std::vector<VertexId>{v});
    names.push_back(universe->vertex_name(v));
  }
  return InfoEnsemble(std::move(universe), std::move(agent), std::move(cells), std::move(names));
}

std::optional<std::size_t> InfoEnsemble::find_cell(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t InfoEnsemble::cell_index(VertexId v) const {
  if (v >= cell_of_vertex_.size())
    throw PartitionViolation("vertex " + std::to_string(v) + " is in no cell");
  return cell_of_vertex_[v];
}

InfoEnsemble InfoEnsemble::split(std::size_t c, const std::vector<VertexId>& keep) const {
  const InfoSet& old = cell(c);
  std::vector<VertexId> kept, rest;
  for (VertexId v : old.members()) {
    (std::find(keep.begin(), keep.end(), v) != keep.end() ? kept : rest).push_back(v);
  }
  if (kept.empty() || rest.empty()) return *this;
  std::vector<InfoSet> cells = cells_;
  std::vector<std::string> names = names_;
  cells[c] = InfoSet(*universe_, kept);
  cells.emplace_back(*universe_, rest);
  names.push_back(names_[c] + "~");
  return InfoEnsemble(universe_, agent_, std::move(cells), std::move(names));
}

bool InfoRelationSlice::related(HistoryId h, HistoryId k) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(h, k));
}

std::optional<NdiViolation> find_ndi_violation(const InfoEnsemble& xi) {
  const Universe& u = xi.universe();
  for (HistoryId h = 0; h < u.history_count(); ++h) {
    for (Time t = 0; t < u.t_max(); ++t) {
      const HistorySet& before = xi.possible(h, t);
      const HistorySet& after = xi.possible(h, t + 1);
      if (!after.is_subset_of(before)) {
        for (HistoryId k : after) {
          if (!before.contains(k)) return NdiViolation{h, t, t + 1, k};
        }
      }
    }
  }
  return std::nullopt;
}

// Subset inclusion is transitive, so adjacent time pairs suffice.
bool has_ndi(const InfoEnsemble& xi) { return !find_ndi_violation(xi).has_value(); }

bool has_perfect_info(const InfoEnsemble& xi) {
  for (std::size_t c = 0; c < xi.cell_count(); ++c)
    if (xi.cell(c).size() != 1) return false;
  return true;
}

InfoRelationSlice info_relation(const InfoEnsemble& xi, Time t) {
  const Universe& u = xi.universe();
  InfoRelationSlice slice;
  slice.time = t;
  for (HistoryId h = 0; h < u.history_count(); ++h)
    for (HistoryId k : xi.possible(h, t)) slice.pairs.emplace_back(h, k);
  return slice;
}

bool relation_backwards_consistent(const InfoEnsemble& xi) {
  const Universe& u = xi.universe();
  std::vector<InfoRelationSlice> slices;
  for (Time t = 0; t <= u.t_max(); ++t) slices.push_back(info_relation(xi, t));
  for (Time t = 0; t <= u.t_max(); ++t) {
    for (Time later = t; later <= u.t_max(); ++later) {
      for (const auto& [h, k] : slices[later].pairs) {
        if (!slices[t].related(h, k)) return false;
      }
    }
  }
  return true;
}

bool relation_backwards_identical(const InfoEnsemble& xi) {
  const Universe& u = xi.universe();
  for (Time t = 0; t <= u.t_max(); ++t) {
    InfoRelationSlice slice = info_relation(xi, t);
    for (HistoryId h = 0; h < u.history_count(); ++h) {
      for (HistoryId k = 0; k < u.history_count(); ++k) {
        if (slice.related(h, k) != backwards_identical(u, h, k, t)) return false;
      }
    }
  }
  return true;
}

}  // namespace stratos
