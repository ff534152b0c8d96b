#include "stratos/pragmatics.hpp"

#include <algorithm>

#include "stratos/errors.hpp"
#include "stratos/intention.hpp"

namespace stratos {

std::string to_string(Component c) {
  switch (c) {
    case Component::kInfo: return "info";
    case Component::kPlan: return "plan";
    case Component::kValues: return "values";
  }
  return "?";
}

RepresentationalState initial_state(const Model& m, const std::string& agent, VertexId v) {
  auto ens = m.ensembles.find(agent);
  if (ens == m.ensembles.end()) throw ResolutionError("no information ensemble for agent '" + agent + "'");
  const InfoSet& cell = ens->second->cell_of(v);
  std::optional<PlanState> plan;
  if (m.plan_states.count(agent))
    plan = plan_state_at_info(m, agent, agent, cell);
  else
    plan = PlanState::full(m.space(agent));
  return RepresentationalState{agent, cell, *plan, m.utilities.slice(agent, m.universe->history_count()),
                               ens->second};
}

ChangeReport force_of(const Message& msg) {
  ChangeReport r;
  r.force = msg.force;
  switch (msg.force) {
    case Force::kAssertive: r.primary = Component::kInfo; break;
    case Force::kDirective:
      r.primary = Component::kPlan;
      r.secondary = Component::kInfo;
      break;
    case Force::kEvaluative: r.primary = Component::kValues; break;
  }
  return r;
}

ApplyResult prag_apply(const Model& m, const RepresentationalState& r, const Message& msg) {
  check_message(msg);
  const Universe& u = *m.universe;
  ApplyResult out{r, force_of(msg)};
  RepresentationalState& next = out.state;

  if (msg.force == Force::kAssertive) {
    Evaluator ev(m.universe, m.ensembles);
    const TruthTable& table = ev.table(msg.content);
    std::vector<VertexId> keep;
    for (VertexId v : r.info.members()) {
      Time cut = u.cut(v);
      for (HistoryId k : u.extensions(v))
        if (table.at(k, cut)) {
          keep.push_back(v);
          break;
        }
    }
    if (keep.empty())
      throw RejectedMessage(0, "assertion '" + to_string(msg.content) + "' leaves " + r.agent + " no possibility");
    if (keep.size() != r.info.size()) {
      next.info = InfoSet(u, keep);
      next.ensemble = std::make_shared<const InfoEnsemble>(
          r.ensemble->split(r.ensemble->cell_index(r.info.members().front()), keep));
      out.report.changed.insert(Component::kInfo);
    }
  } else if (msg.force == Force::kDirective) {
    const StrategySpace& space = m.space(r.agent);
    Evaluator ev(m.universe, m.ensembles);
    const TruthTable& table = ev.table(msg.content);
    std::vector<StrategyIndex> keep;
    for (StrategyIndex pi : r.plan.members()) {
      bool ok = true;
      for (VertexId v : r.info.members()) {
        Time cut = u.cut(v);
        for (HistoryId k : space.potential_from(pi, {v}))
          if (!table.at(k, cut)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) keep.push_back(pi);
    }
    if (keep.empty())
      throw RejectedDirective(r.agent + " has no strategy conforming to '" + to_string(msg.content) + "'");
    if (keep.size() != r.plan.size()) {
      next.plan = PlanState(r.agent, keep);
      out.report.changed.insert(Component::kPlan);
    }
  } else {
    for (const auto& [h, d] : msg.delta) {
      if (h >= u.history_count()) throw ModelReferenceError("unknown history id " + std::to_string(h));
      if (d != 0) {
        next.values[h] += d;
        out.report.changed.insert(Component::kValues);
      }
    }
  }
  return out;
}

RepresentationalState apply_sequence(const Model& m, const RepresentationalState& r,
                                     const std::vector<Message>& msgs) {
  RepresentationalState cur = r;
  for (std::size_t i = msgs.size(); i-- > 0;) {
    try {
      cur = prag_apply(m, cur, msgs[i]).state;
    } catch (const RejectedMessage& e) {
      throw RejectedMessage(i, e.what());
    }
  }
  return cur;
}

bool prag_divergence(const Model& m, const PragmaticsProfile& a, const PragmaticsProfile& b,
                     const RepresentationalState& r, const Message& msg) {
  auto outcome = [&](const PragmaticsProfile& p) -> std::optional<RepresentationalState> {
    try {
      return prag_apply(m, r, interpret(p, msg)).state;
    } catch (const RejectedMessage&) {
      return std::nullopt;
    } catch (const RejectedDirective&) {
      return std::nullopt;
    }
  };
  return outcome(a) != outcome(b);
}

SimulationResult simulate(const Model& m, const Scenario& s, bool lenient) {
  SimulationResult out;
  std::map<std::string, RepresentationalState> states;
  auto state_of = [&](const std::string& agent) -> RepresentationalState& {
    auto it = states.find(agent);
    if (it == states.end()) {
      it = states.emplace(agent, initial_state(m, agent, s.at)).first;
      out.initial.emplace(agent, it->second);
    }
    return it->second;
  };
  static const PragmaticsProfile kLiteral;
  for (std::size_t i = 0; i < s.messages.size(); ++i) {
    const Message& raw = s.messages[i];
    auto profile = m.profiles.find(raw.addressee);
    Message msg = interpret(profile == m.profiles.end() ? kLiteral : profile->second, raw);
    RepresentationalState& r = state_of(raw.addressee);
    SimulationStep step;
    step.index = i;
    step.message = msg;
    try {
      auto res = prag_apply(m, r, msg);
      r = std::move(res.state);
      step.report = res.report;
    } catch (const Error& e) {
      bool rejection = dynamic_cast<const RejectedMessage*>(&e) || dynamic_cast<const RejectedDirective*>(&e);
      if (!rejection) throw;
      if (!lenient) {
        if (dynamic_cast<const RejectedMessage*>(&e)) throw RejectedMessage(i, e.what());
        throw RejectedDirective("message " + std::to_string(i) + ": " + e.what());
      }
      step.rejected = e.what();
      out.warnings.push_back("message " + std::to_string(i) + " rejected and ignored: " + e.what());
    }
    step.info_size = r.info.size();
    step.plan_size = r.plan.size();
    for (VertexId v : r.info.members()) step.info.push_back(m.universe->vertex_name(v));
    out.steps.push_back(std::move(step));
  }
  out.final = states;
  return out;
}

}  // namespace stratos
