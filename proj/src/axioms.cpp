#include "stratos/axioms.hpp"

#include <functional>

#include "stratos/errors.hpp"

namespace stratos {
namespace {

constexpr const char* kFutureFree = "a contains no F operator";

FormulaPtr timed(const FormulaPtr& a, Time t) {
  if (a->op == Op::kAtom && !a->time) return fml::atom(a->name, t);
  return fml::at(a, t);
}

using InstanceFn = std::function<void(const std::function<bool(const FormulaPtr&)>&)>;

// Runs instances until the first counterexample.
SchemaVerdict run_schema(Evaluator& ev, std::string schema, const std::string& agent,
                         std::string restriction, const InstanceFn& generate) {
  SchemaVerdict v;
  v.schema = std::move(schema);
  v.agent = agent;
  v.restriction = std::move(restriction);
  generate([&](const FormulaPtr& instance) {
    ++v.instances;
    ValidityResult r = ev.valid(instance);
    if (!r.valid) {
      v.passed = false;
      v.counterexample = to_string(*instance);
      v.witness = r.counterexample;
      return false;
    }
    return true;
  });
  return v;
}

void require_agent(const Evaluator& ev, const std::string& agent) {
  if (!ev.ensembles().count(agent)) throw ResolutionError("no information ensemble for agent '" + agent + "'");
}

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& v : verdicts)
    if (!v.passed) return false;
  return true;
}

std::vector<FormulaPtr> schema_pool(const Universe& u, bool allow_future, const AxiomOptions& opts) {
  std::vector<FormulaPtr> level0, level1, level2;
  for (const auto& p : u.propositions()) level0.push_back(fml::atom(p));
  auto unary = [&](const std::vector<FormulaPtr>& from, std::vector<FormulaPtr>& into) {
    for (const auto& a : from) {
      into.push_back(fml::negate(a));
      into.push_back(fml::past(a));
      if (allow_future) into.push_back(fml::future(a));
    }
  };
  if (opts.max_depth >= 1) {
    unary(level0, level1);
    for (std::size_t i = 0; i < level0.size(); ++i) {
      for (std::size_t j = i + 1; j < level0.size(); ++j) {
        level1.push_back(fml::conj(level0[i], level0[j]));
        level1.push_back(fml::disj(level0[i], level0[j]));
      }
    }
  }
  if (opts.max_depth >= 2) unary(level1, level2);
  std::vector<FormulaPtr> pool = level0;
  pool.insert(pool.end(), level1.begin(), level1.end());
  pool.insert(pool.end(), level2.begin(), level2.end());
  if (opts.max_pool && pool.size() > opts.max_pool) pool.resize(opts.max_pool);
  return pool;
}

AxiomReport check_ndi_axioms(Evaluator& ev, const std::string& agent, const AxiomOptions& opts) {
  require_agent(ev, agent);
  const Universe& u = ev.universe();
  AxiomReport report;
  auto any_pool = schema_pool(u, true, opts);
  auto past_pool = schema_pool(u, false, opts);

  report.verdicts.push_back(run_schema(ev, "ndi-indexed", agent, "", [&](const auto& check) {
    for (const auto& a : any_pool)
      for (Time t = 0; t <= u.t_max(); ++t)
        for (Time t2 = t; t2 <= u.t_max(); ++t2)
          for (Time t3 = 0; t3 <= u.t_max(); ++t3) {
            auto body = timed(a, t3);
            if (!check(fml::implies(fml::box(agent, body, t), fml::box(agent, body, t2)))) return;
          }
  }));

  report.verdicts.push_back(run_schema(ev, "ndi-tensed", agent, kFutureFree, [&](const auto& check) {
    for (const auto& a : past_pool)
      if (!check(fml::implies(fml::past(fml::box(agent, a)), fml::box(agent, fml::past(a))))) return;
  }));
  return report;
}

AxiomReport check_pi_axioms(Evaluator& ev, const std::string& agent, const AxiomOptions& opts) {
  require_agent(ev, agent);
  const Universe& u = ev.universe();
  AxiomReport report;
  auto past_pool = schema_pool(u, false, opts);

  report.verdicts.push_back(run_schema(ev, "pi-indexed", agent, kFutureFree, [&](const auto& check) {
    for (const auto& a : past_pool)
      for (Time t = 0; t <= u.t_max(); ++t)
        for (Time t2 = t; t2 <= u.t_max(); ++t2) {
          auto body = timed(a, t);
          if (!check(fml::implies(body, fml::box(agent, body, t2)))) return;
        }
  }));

  report.verdicts.push_back(run_schema(ev, "pi-tensed", agent, kFutureFree, [&](const auto& check) {
    for (const auto& a : past_pool)
      if (!check(fml::implies(a, fml::box(agent, a)))) return;
  }));
  return report;
}

}  // namespace stratos
