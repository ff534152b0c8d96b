#include "stratos/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>


#include "stratos/errors.hpp"
#include "stratos/formula.hpp"

namespace stratos {
namespace {

using json = nlohmann::json;

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at_key(const std::string& ptr, const std::string& key) { return ptr + "/" + escape(key); }
std::string at_index(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& require(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr, "missing required field '" + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, "expected a string");
  return j.get<std::string>();
}

double as_number(const json& j, const std::string& ptr) {
  if (!j.is_number()) throw SchemaError(ptr, "expected a number");
  return j.get<double>();
}

const json& as_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  return j;
}

const json& as_object(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  return j;
}

void only_keys(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed) {
  as_object(j, ptr);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw SchemaError(at_key(ptr, it.key()), "unknown field '" + it.key() + "'");
  }
}

// Rethrows library errors raised while handling a value as schema errors
// at that value's pointer.
template <typename Fn>
auto at_pointer(const std::string& ptr, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const ModelReferenceError& e) {
    throw SchemaError(ptr, e.what());
  } catch (const SyntaxError& e) {
    throw SchemaError(ptr, e.what());
  } catch (const ResolutionError& e) {
    throw SchemaError(ptr, e.what());
  } catch (const RangeError& e) {
    throw SchemaError(ptr, e.what());
  }
}

// Cell reference: a cell name or any vertex path inside the cell.
std::size_t cell_ref(const Universe& u, const InfoEnsemble& ens, const std::string& ref, const std::string& ptr) {
  if (auto c = ens.find_cell(ref)) return *c;
  return at_pointer(ptr, [&] { return ens.cell_index(u.vertex_by_name(ref)); });
}

std::set<std::size_t> allowed_alternatives(const StrategySpace& space, std::size_t acting, const json& j,
                                           const std::string& ptr) {
  const auto& alts = space.alternatives_at(acting);
  std::set<std::size_t> out;
  auto add = [&](const json& sel, const std::string& sptr) {
    std::size_t before = out.size();
    if (sel.is_string()) {
      auto action = sel.get<std::string>();
      if (alts.front().selection.size() != 1)
        throw SchemaError(sptr, "the agent has several choice points here; give an object {choice: action}");
      for (std::size_t a = 0; a < alts.size(); ++a)
        if (alts[a].selection.begin()->second == action) out.insert(a);
      if (out.size() == before) throw SchemaError(sptr, "no alternative '" + action + "' here");
      return;
    }
    as_object(sel, sptr);
    for (auto it = sel.begin(); it != sel.end(); ++it) {
      as_string(it.value(), at_key(sptr, it.key()));
      if (!alts.front().selection.count(it.key()))
        throw SchemaError(at_key(sptr, it.key()), "no choice point '" + it.key() + "' here");
    }
    for (std::size_t a = 0; a < alts.size(); ++a) {
      bool ok = true;
      for (auto it = sel.begin(); it != sel.end(); ++it)
        ok = ok && alts[a].selection.at(it.key()) == it.value().get<std::string>();
      if (ok) out.insert(a);
    }
    if (out.size() == before) throw SchemaError(sptr, "no alternative matches this selection");
  };
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) add(j[i], at_index(ptr, i));
  } else {
    add(j, ptr);
  }
  return out;
}

}  // namespace

PlanState plan_from_json(const Model& model, const std::string& agent, const nlohmann::json& j,
                         const std::string& ptr) {
  const StrategySpace& space = model.space(agent);
  auto run = [&] {
    if (j.is_string()) {
      if (j.get<std::string>() != "all") throw SchemaError(ptr, "expected \"all\" or a list of partial strategies");
      return PlanState::full(space);
    }
    std::vector<StrategyIndex> members;
    auto one = [&](const json& partial, const std::string& pptr) {
      as_object(partial, pptr);
      PartialStrategy ps;
      for (auto it = partial.begin(); it != partial.end(); ++it) {
        auto kptr = at_key(pptr, it.key());
        std::size_t cell = cell_ref(*model.universe, space.ensemble(), it.key(), kptr);
        auto acting = space.acting_index(cell);
        if (!acting) throw SchemaError(kptr, agent + " has no choice at cell '" + it.key() + "'");
        auto allowed = allowed_alternatives(space, *acting, it.value(), kptr);
        auto [slot, fresh] = ps.try_emplace(*acting, allowed);
        if (!fresh) {
          std::set<std::size_t> both;
          for (auto a : allowed)
            if (slot->second.count(a)) both.insert(a);
          slot->second = both;
        }
      }
      auto matched = space.matching(ps);
      members.insert(members.end(), matched.begin(), matched.end());
    };
    if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) one(j[i], at_index(ptr, i));
    } else {
      one(j, ptr);
    }
    if (members.empty()) throw SchemaError(ptr, "plan state of " + agent + " is empty");
    return PlanState(agent, std::move(members));
  };
  try {
    return run();
  } catch (const EnumerationLimit& e) {
    throw EnumerationLimit(std::string(e.what()) + " (at " + ptr + ")");
  }
}

namespace {

class Loader {
 public:
  Loader(const json& root, std::size_t cap) : root_(root) { model_.strategy_cap = cap; }

  Model run() {
    only_keys(root_, "", {"schema_version", "name", "description", "times", "t_max", "propositions", "agents",
                          "states", "initial", "trees", "ensembles", "repertoires", "plan_states",
                          "nested_plan_states", "prior", "utilities", "pragmatics_profiles", "scenarios"});
    auto version = as_string(require(root_, "schema_version", ""), "/schema_version");
    if (version != kSchemaVersion)
      throw SchemaError("/schema_version", "unsupported schema version '" + version + "' (expected \"1\")");
    if (root_.contains("name")) model_.name = as_string(root_["name"], "/name");
    load_world();
    load_ensembles();
    model_.build_spaces();
    load_repertoires();
    load_plan_states();
    load_nested();
    load_prior();
    load_utilities();
    load_profiles();
    load_scenarios();
    return std::move(model_);
  }

 private:
  const Universe& u() const { return *model_.universe; }

  void load_world() {
    Time t_max = 0;
    if (root_.contains("times")) {
      only_keys(root_["times"], "/times", {"max"});
      const json& max = require(root_["times"], "max", "/times");
      if (!max.is_number_integer()) throw SchemaError("/times/max", "expected an integer");
      t_max = max.get<Time>();
      if (t_max < 0) throw SchemaError("/times/max", "must be >= 0");
    } else if (root_.contains("t_max")) {
      if (!root_["t_max"].is_number_integer()) throw SchemaError("/t_max", "expected an integer");
      t_max = root_["t_max"].get<Time>();
      if (t_max < 0) throw SchemaError("/t_max", "must be >= 0");
    } else {
      throw SchemaError("", "missing required field 'times'");
    }

    std::vector<std::string> props;
    if (root_.contains("propositions")) {
      const json& arr = as_array(root_["propositions"], "/propositions");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto p = as_string(arr[i], at_index("/propositions", i));
        if (std::find(props.begin(), props.end(), p) != props.end())
          throw SchemaError(at_index("/propositions", i), "duplicate proposition '" + p + "'");
        props.push_back(p);
      }
    }

    const json& agents = as_array(require(root_, "agents", ""), "/agents");
    for (std::size_t i = 0; i < agents.size(); ++i) {
      auto a = as_string(agents[i], at_index("/agents", i));
      if (a == kWorldAgent) throw SchemaError(at_index("/agents", i), "'world' is reserved for nature");
      if (a.empty()) throw SchemaError(at_index("/agents", i), "empty agent name");
      if (std::find(agents_.begin(), agents_.end(), a) != agents_.end())
        throw SchemaError(at_index("/agents", i), "duplicate agent '" + a + "'");
      agents_.push_back(a);
    }

    const json& states = as_array(require(root_, "states", ""), "/states");
    if (states.empty()) throw SchemaError("/states", "at least one state is required");
    std::vector<WorldState> ws;
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto ptr = at_index("/states", i);
      only_keys(states[i], ptr, {"id", "labels"});
      WorldState s;
      s.id = as_string(require(states[i], "id", ptr), ptr + "/id");
      if (s.id.empty() || s.id.find('/') != std::string::npos)
        throw SchemaError(ptr + "/id", "state ids must be nonempty and contain no '/'");
      if (state_index_.count(s.id)) throw SchemaError(ptr + "/id", "duplicate state id '" + s.id + "'");
      if (states[i].contains("labels")) {
        const json& labels = as_array(states[i]["labels"], ptr + "/labels");
        for (std::size_t k = 0; k < labels.size(); ++k) {
          auto l = as_string(labels[k], at_index(ptr + "/labels", k));
          if (std::find(props.begin(), props.end(), l) == props.end())
            throw SchemaError(at_index(ptr + "/labels", k), "label '" + l + "' is not a declared proposition");
          s.labels.insert(l);
        }
      }
      state_index_[s.id] = i;
      ws.push_back(std::move(s));
    }

    std::vector<StateId> initial;
    const json& init = require(root_, "initial", "");
    if (init.is_string()) {
      initial.push_back(state_ref(init, "/initial"));
    } else {
      as_array(init, "/initial");
      for (std::size_t i = 0; i < init.size(); ++i) initial.push_back(state_ref(init[i], at_index("/initial", i)));
    }
    if (initial.empty()) throw SchemaError("/initial", "at least one initial state is required");

    auto dyn = std::make_shared<Dynamics>(ws.size());
    if (root_.contains("trees")) {
      const json& trees = as_array(root_["trees"], "/trees");
      std::set<StateId> seen;
      for (std::size_t i = 0; i < trees.size(); ++i) {
        auto ptr = at_index("/trees", i);
        only_keys(trees[i], ptr, {"state", "root"});
        StateId s = state_ref(require(trees[i], "state", ptr), ptr + "/state");
        if (!seen.insert(s).second) throw SchemaError(ptr + "/state", "second tree for one state");
        const json& root = require(trees[i], "root", ptr);
        if (root.is_string()) {
          dyn->attach(MicroTimeTree(s, {}, state_ref(root, ptr + "/root")));
        } else {
          std::vector<MicroNode> nodes;
          add_node(root, ptr + "/root", nodes);
          at_pointer(ptr, [&] {
            try {
              dyn->attach(MicroTimeTree(s, std::move(nodes)));
            } catch (const ModelError& e) {
              throw SchemaError(ptr, e.what());
            }
          });
        }
      }
    }
    model_.dynamics = dyn;
    model_.universe = std::make_shared<const Universe>(
        build_universe(std::move(ws), std::move(props), agents_, initial, t_max, *dyn));
  }

  StateId state_ref(const json& j, const std::string& ptr) {
    auto id = as_string(j, ptr);
    auto it = state_index_.find(id);
    if (it == state_index_.end()) throw SchemaError(ptr, "unknown state '" + id + "'");
    return it->second;
  }

  std::size_t add_node(const json& j, const std::string& ptr, std::vector<MicroNode>& nodes) {
    only_keys(j, ptr, {"owner", "choice", "moves"});
    std::size_t index = nodes.size();
    nodes.emplace_back();
    MicroNode node;
    node.owner = as_string(require(j, "owner", ptr), ptr + "/owner");
    if (node.owner != kWorldAgent && std::find(agents_.begin(), agents_.end(), node.owner) == agents_.end())
      throw SchemaError(ptr + "/owner", "unknown agent '" + node.owner + "'");
    node.choice_point = as_string(require(j, "choice", ptr), ptr + "/choice");
    const json& moves = as_object(require(j, "moves", ptr), ptr + "/moves");
    if (moves.empty()) throw SchemaError(ptr + "/moves", "a choice point needs at least one move");
    for (auto it = moves.begin(); it != moves.end(); ++it) {
      auto mptr = at_key(ptr + "/moves", it.key());
      MicroMove mv;
      mv.action = it.key();
      if (it.value().is_string()) {
        mv.leaf = state_ref(it.value(), mptr);
      } else {
        mv.child = add_node(it.value(), mptr, nodes);
      }
      node.moves.push_back(std::move(mv));
    }
    nodes[index] = std::move(node);
    return index;
  }

  VertexId vertex_ref(const json& j, const std::string& ptr) {
    if (j.is_string()) return at_pointer(ptr, [&] { return u().vertex_by_name(j.get<std::string>()); });
    only_keys(j, ptr, {"history", "cut"});
    HistoryId h = at_pointer(ptr + "/history", [&] {
      return resolve_history(u(), as_string(require(j, "history", ptr), ptr + "/history"));
    });
    const json& cut = require(j, "cut", ptr);
    if (!cut.is_number_integer()) throw SchemaError(ptr + "/cut", "expected an integer");
    return at_pointer(ptr + "/cut", [&] { return u().vertex_of(h, cut.get<Time>()); });
  }

  void load_ensembles() {
    const json& ens = as_object(require(root_, "ensembles", ""), "/ensembles");
    for (auto it = ens.begin(); it != ens.end(); ++it)
      if (std::find(agents_.begin(), agents_.end(), it.key()) == agents_.end())
        throw SchemaError(at_key("/ensembles", it.key()), "unknown agent '" + it.key() + "'");
    for (const auto& agent : agents_) {
      auto ptr = at_key("/ensembles", agent);
      if (!ens.contains(agent)) throw SchemaError("/ensembles", "missing ensemble for agent '" + agent + "'");
      const json& e = ens[agent];
      if (e.is_string()) {
        if (e.get<std::string>() != "perfect") throw SchemaError(ptr, "expected \"perfect\" or an object");
        model_.ensembles[agent] =
            std::make_shared<const InfoEnsemble>(InfoEnsemble::perfect(model_.universe, agent));
        continue;
      }
      only_keys(e, ptr, {"cells", "rest"});
      if (e.contains("rest") && e["rest"] != "units") throw SchemaError(ptr + "/rest", "only \"units\" is supported");
      std::vector<InfoSet> cells;
      std::vector<std::string> names;
      std::vector<char> covered(u().vertex_count(), 0);
      std::set<std::string> used_names;
      if (e.contains("cells")) {
        const json& arr = as_array(e["cells"], ptr + "/cells");
        for (std::size_t i = 0; i < arr.size(); ++i) {
          auto cptr = at_index(ptr + "/cells", i);
          only_keys(arr[i], cptr, {"name", "members"});
          std::string name = arr[i].contains("name") ? as_string(arr[i]["name"], cptr + "/name") : "c" + std::to_string(i);
          if (!used_names.insert(name).second) throw SchemaError(cptr + "/name", "duplicate cell name '" + name + "'");
          const json& mem = as_array(require(arr[i], "members", cptr), cptr + "/members");
          if (mem.empty()) throw SchemaError(cptr + "/members", "an information set must be nonempty");
          std::vector<VertexId> vs;
          for (std::size_t k = 0; k < mem.size(); ++k) {
            auto mptr = at_index(cptr + "/members", k);
            VertexId v = vertex_ref(mem[k], mptr);
            if (covered[v])
              throw PartitionViolation("vertex " + u().vertex_name(v) + " appears in two cells of " + agent +
                                       " (at " + mptr + ")");
            covered[v] = 1;
            vs.push_back(v);
          }
          try {
            cells.emplace_back(u(), vs);
          } catch (const IllFormedEnsemble& ex) {
            throw IllFormedEnsemble(std::string(ex.what()) + " (at " + cptr + ")");
          }
          names.push_back(name);
        }
      }
      for (VertexId v = 0; v < u().vertex_count(); ++v)
        if (!covered[v]) {
          cells.emplace_back(u(), std::vector<VertexId>{v});
          names.push_back(u().vertex_name(v));
        }
      model_.ensembles[agent] = std::make_shared<const InfoEnsemble>(model_.universe, agent, cells, names);
    }
  }

  PlanState plan_spec(const std::string& agent, const json& j, const std::string& ptr) {
    return plan_from_json(model_, agent, j, ptr);
  }

  void check_agent_key(const std::string& agent, const std::string& ptr) {
    if (std::find(agents_.begin(), agents_.end(), agent) == agents_.end())
      throw SchemaError(ptr, "unknown agent '" + agent + "'");
  }

  void load_repertoires() {
    if (!root_.contains("repertoires")) return;
    const json& reps = as_object(root_["repertoires"], "/repertoires");
    for (auto it = reps.begin(); it != reps.end(); ++it) {
      auto ptr = at_key("/repertoires", it.key());
      check_agent_key(it.key(), ptr);
      model_.repertoires.emplace(it.key(), plan_spec(it.key(), it.value(), ptr));
    }
  }

  PlanStateTable table_spec(const std::string& holder, const std::string& subject, const json& j,
                            const std::string& ptr) {
    only_keys(j, ptr, {"default", "at"});
    std::optional<PlanState> fallback;
    if (j.contains("default")) fallback = plan_spec(subject, j["default"], ptr + "/default");
    PlanStateTable table(fallback);
    if (j.contains("at")) {
      const json& at = as_object(j["at"], ptr + "/at");
      const InfoEnsemble& holder_ens = model_.ensemble(holder);
      for (auto it = at.begin(); it != at.end(); ++it) {
        auto kptr = at_key(ptr + "/at", it.key());
        PlanState s = plan_spec(subject, it.value(), kptr);
        if (auto c = holder_ens.find_cell(it.key())) {
          for (VertexId v : holder_ens.cell(*c).members()) table.set(v, s);
        } else {
          table.set(at_pointer(kptr, [&] { return u().vertex_by_name(it.key()); }), s);
        }
      }
    }
    return table;
  }

  void load_plan_states() {
    if (!root_.contains("plan_states")) return;
    const json& ps = as_object(root_["plan_states"], "/plan_states");
    for (auto it = ps.begin(); it != ps.end(); ++it) {
      auto ptr = at_key("/plan_states", it.key());
      check_agent_key(it.key(), ptr);
      model_.plan_states.emplace(it.key(), table_spec(it.key(), it.key(), it.value(), ptr));
    }
  }

  void load_nested() {
    if (!root_.contains("nested_plan_states")) return;
    const json& ns = as_object(root_["nested_plan_states"], "/nested_plan_states");
    for (auto h = ns.begin(); h != ns.end(); ++h) {
      auto hptr = at_key("/nested_plan_states", h.key());
      check_agent_key(h.key(), hptr);
      as_object(h.value(), hptr);
      for (auto s = h.value().begin(); s != h.value().end(); ++s) {
        auto sptr = at_key(hptr, s.key());
        check_agent_key(s.key(), sptr);
        model_.nested_plan_states[h.key()].emplace(s.key(), table_spec(h.key(), s.key(), s.value(), sptr));
      }
    }
  }

  // History ids for a key: a full history name, or a vertex prefix meaning
  // every history through it.
  std::vector<HistoryId> histories_ref(const std::string& key, const std::string& ptr) {
    try {
      return {u().history_id(key)};
    } catch (const ModelReferenceError&) {
    }
    VertexId v = at_pointer(ptr, [&] { return u().vertex_by_name(key); });
    const auto& ext = u().extensions(v);
    return {ext.begin(), ext.end()};
  }

  void load_prior() {
    std::size_t n = u().history_count();
    if (!root_.contains("prior")) {
      model_.prior = Prior::uniform(n);
      return;
    }
    const json& p = root_["prior"];
    if (p.is_string()) {
      if (p.get<std::string>() != "uniform") throw SchemaError("/prior", "expected \"uniform\" or an object");
      model_.prior = Prior::uniform(n);
      return;
    }
    only_keys(p, "/prior", {"weights"});
    const json& w = as_object(require(p, "weights", "/prior"), "/prior/weights");
    std::vector<double> weights(n, 0.0);
    for (auto it = w.begin(); it != w.end(); ++it) {
      auto ptr = at_key("/prior/weights", it.key());
      HistoryId h = at_pointer(ptr, [&] { return u().history_id(it.key()); });
      weights[h] = as_number(it.value(), ptr);
    }
    try {
      model_.prior = Prior(std::move(weights));
    } catch (const DomainError& e) {
      throw SchemaError("/prior/weights", e.what());
    }
  }

  void load_utilities() {
    if (!root_.contains("utilities")) return;
    const json& us = as_object(root_["utilities"], "/utilities");
    for (auto a = us.begin(); a != us.end(); ++a) {
      auto aptr = at_key("/utilities", a.key());
      check_agent_key(a.key(), aptr);
      as_object(a.value(), aptr);
      if (a.value().contains("*")) model_.utilities.set_default(a.key(), as_number(a.value()["*"], at_key(aptr, "*")));
      for (auto it = a.value().begin(); it != a.value().end(); ++it) {
        if (it.key() == "*") continue;
        auto ptr = at_key(aptr, it.key());
        double v = as_number(it.value(), ptr);
        for (HistoryId h : histories_ref(it.key(), ptr)) model_.utilities.set(a.key(), h, v);
      }
    }
  }

  std::map<HistoryId, double> delta_spec(const json& j, const std::string& ptr) {
    as_object(j, ptr);
    std::map<HistoryId, double> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
      auto kptr = at_key(ptr, it.key());
      double v = as_number(it.value(), kptr);
      for (HistoryId h : histories_ref(it.key(), kptr)) out[h] += v;
    }
    return out;
  }

  FormulaPtr formula_spec(const json& j, const std::string& ptr) {
    auto text = as_string(j, ptr);
    return at_pointer(ptr, [&] {
      auto f = parse_formula(text);
      std::set<std::string> agents(agents_.begin(), agents_.end());
      resolve(*f, u(), agents);
      return f;
    });
  }

  Force force_spec(const json& j, const std::string& ptr) {
    auto name = as_string(j, ptr);
    try {
      return parse_force(name);
    } catch (const UsageError& e) {
      throw SchemaError(ptr, e.what());
    }
  }

  void load_profiles() {
    if (!root_.contains("pragmatics_profiles")) return;
    const json& ps = as_object(root_["pragmatics_profiles"], "/pragmatics_profiles");
    for (auto a = ps.begin(); a != ps.end(); ++a) {
      auto aptr = at_key("/pragmatics_profiles", a.key());
      check_agent_key(a.key(), aptr);
      as_object(a.value(), aptr);
      PragmaticsProfile profile;
      for (auto it = a.value().begin(); it != a.value().end(); ++it) {
        auto ptr = at_key(aptr, it.key());
        only_keys(it.value(), ptr, {"force", "content", "delta"});
        ProfileEntry e;
        e.force = force_spec(require(it.value(), "force", ptr), ptr + "/force");
        fill_content(it.value(), ptr, e.force, e.content, e.delta);
        profile.emplace(it.key(), std::move(e));
      }
      model_.profiles.emplace(a.key(), std::move(profile));
    }
  }

  void fill_content(const json& j, const std::string& ptr, Force force, FormulaPtr& content,
                    std::map<HistoryId, double>& delta) {
    if (force == Force::kEvaluative) {
      if (j.contains("content")) throw SchemaError(ptr + "/content", "evaluative messages carry a delta, not a formula");
      delta = delta_spec(require(j, "delta", ptr), ptr + "/delta");
    } else {
      if (j.contains("delta")) throw SchemaError(ptr + "/delta", "only evaluative messages carry a delta");
      content = formula_spec(require(j, "content", ptr), ptr + "/content");
    }
  }

  void load_scenarios() {
    if (!root_.contains("scenarios")) return;
    const json& arr = as_array(root_["scenarios"], "/scenarios");
    std::set<std::string> names;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto ptr = at_index("/scenarios", i);
      only_keys(arr[i], ptr, {"name", "at", "messages"});
      Scenario s;
      s.name = as_string(require(arr[i], "name", ptr), ptr + "/name");
      if (!names.insert(s.name).second) throw SchemaError(ptr + "/name", "duplicate scenario '" + s.name + "'");
      s.at = vertex_ref(require(arr[i], "at", ptr), ptr + "/at");
      const json& msgs = as_array(require(arr[i], "messages", ptr), ptr + "/messages");
      for (std::size_t k = 0; k < msgs.size(); ++k) {
        auto mptr = at_index(ptr + "/messages", k);
        only_keys(msgs[k], mptr, {"speaker", "addressee", "token", "force", "content", "delta"});
        Message m;
        m.speaker = as_string(require(msgs[k], "speaker", mptr), mptr + "/speaker");
        m.addressee = as_string(require(msgs[k], "addressee", mptr), mptr + "/addressee");
        check_agent_key(m.speaker, mptr + "/speaker");
        check_agent_key(m.addressee, mptr + "/addressee");
        if (msgs[k].contains("token")) m.token = as_string(msgs[k]["token"], mptr + "/token");
        m.force = force_spec(require(msgs[k], "force", mptr), mptr + "/force");
        fill_content(msgs[k], mptr, m.force, m.content, m.delta);
        s.messages.push_back(std::move(m));
      }
      model_.scenarios.push_back(std::move(s));
    }
  }

  const json& root_;
  Model model_;
  std::vector<std::string> agents_;
  std::map<std::string, StateId> state_index_;
};

}  // namespace

HistoryId resolve_history(const Universe& u, const std::string& ref) {
  if (!ref.empty() && std::all_of(ref.begin(), ref.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    HistoryId h = std::stoul(ref);
    if (h >= u.history_count()) throw ModelReferenceError("unknown history id " + ref);
    return h;
  }
  return u.history_id(ref);
}

VertexId resolve_vertex(const Universe& u, const std::string& ref) { return u.vertex_by_name(ref); }

Model load_model_text(std::string_view text, std::size_t strategy_cap) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return Loader(root, strategy_cap).run();
}

Model load_model(const std::filesystem::path& path, std::size_t strategy_cap) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_model_text(buf.str(), strategy_cap);
}

}  // namespace stratos
