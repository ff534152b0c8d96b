#include "stratos/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stratos/ability.hpp"
#include "stratos/axioms.hpp"
#include "stratos/entropy.hpp"
#include "stratos/errors.hpp"
#include "stratos/intention.hpp"
#include "stratos/model_io.hpp"
#include "stratos/pragmatics.hpp"

namespace stratos::cli {
namespace {

using ojson = nlohmann::ordered_json;

const char* const kUsage =
    "usage: stratos <verb> --model FILE [options]\n"
    "verbs: validate eval valid axioms can plans entropy simulate what-if\n"
    "run 'stratos <verb> --help' for the options of one verb\n";

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Options shared by every verb.
struct Common {
  std::string model;
  std::string format = "json";
  bool strict = false;
  std::string history;
  std::optional<int> time;
  std::string vertex;
};

struct Query {
  std::string verb;
  Common common;
  std::string formula;
  std::string agent;
  std::string group;
  std::string others;
  std::string subject;
  std::string form = "o";
  std::string mode = "bool";
  std::string space;
  std::string kind;
  std::string scenario;
  std::string plan;
  std::string weights;
  std::string joint;
  std::optional<std::size_t> strategy;
  std::optional<double> p;
  std::optional<double> u;
  bool lenient = false;
};

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<double> parse_numbers(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& tok : split_list(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("bad number '") + tok + "' in " + what);
    }
  }
  return out;
}

void add_common(CLI::App& app, Common& c) {
  app.add_option("--model", c.model, "model file (JSON)")->required();
  app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", c.strict, "exit 1 when a boolean answer is false");
}

void add_point(CLI::App& app, Common& c) {
  app.add_option("--history", c.history, "history name or id (default: the first)");
  app.add_option("--time", c.time, "evaluation time (default 0)");
  app.add_option("--vertex", c.vertex, "vertex prefix path; sets history and time");
}

void configure(CLI::App& app, Query& q) {
  add_common(app, q.common);
  const std::string& v = q.verb;
  if (v == "eval" || v == "valid" || v == "can" || v == "plans")
    app.add_option("formula", q.formula, "formula")->required();
  if (v == "eval" || v == "can" || v == "plans" || v == "what-if" || v == "entropy") add_point(app, q.common);
  if (v == "axioms") app.add_option("--agent", q.agent, "agent (default: all)");
  if (v == "can") {
    app.add_option("--agent", q.agent, "agent");
    app.add_option("--group", q.group, "comma-separated agents");
    app.add_option("--others", q.others, "second group for --form cocoop");
    app.add_option("--form", q.form, "o, s, co, coop or cocoop")
        ->check(CLI::IsMember({"o", "s", "co", "coop", "cocoop"}));
    app.add_option("--mode", q.mode, "bool, pess, opt, prob or xu")
        ->check(CLI::IsMember({"bool", "pess", "opt", "prob", "xu"}));
    app.add_option("--space", q.space, "objective or subjective (default by form)")
        ->check(CLI::IsMember({"objective", "subjective"}));
  }
  if (v == "plans") {
    app.add_option("--kind", q.kind, "plain, co, group, will, prob or util")
        ->check(CLI::IsMember({"plain", "co", "group", "will", "prob", "util"}));
    app.add_option("--agent", q.agent, "agent (holder for --kind will)");
    app.add_option("--group", q.group, "comma-separated agents for --kind group");
    app.add_option("--subject", q.subject, "subject for --kind will");
    app.add_option("--p", q.p, "probability for --kind prob");
    app.add_option("--u", q.u, "utility threshold for --kind util");
  }
  if (v == "entropy") {
    app.add_option("--kind", q.kind, "state, control, conditional or strategic")
        ->required()
        ->check(CLI::IsMember({"state", "control", "conditional", "strategic"}));
    app.add_option("--agent", q.agent, "agent")->required();
    app.add_option("--other", q.subject, "second agent for --kind conditional");
    app.add_option("--weights", q.weights, "comma-separated weights (default uniform)");
    app.add_option("--joint", q.joint, "joint matrix for --kind conditional, rows separated by ';'");
    app.add_option("--strategy", q.strategy, "strategy index for --kind strategic");
  }
  if (v == "simulate") {
    app.add_option("--scenario", q.scenario, "scenario name (default: the first)");
    app.add_flag("--lenient", q.lenient, "ignore rejected messages with a warning");
  }
  if (v == "what-if") {
    app.add_option("--agent", q.agent, "agent")->required();
    app.add_option("--plan", q.plan, "candidate plan, as in the model file's plan states")->required();
  }
}

struct Point {
  HistoryId h = 0;
  Time t = 0;
};

Point resolve_point(const Universe& u, const Common& c) {
  if (!c.vertex.empty()) {
    if (!c.history.empty() || c.time) throw UsageError("--vertex excludes --history and --time");
    VertexId v = u.vertex_by_name(c.vertex);
    return {u.vertex(v).history, u.cut(v)};
  }
  Point p;
  if (!c.history.empty()) p.h = resolve_history(u, c.history);
  if (c.time) {
    if (!u.time_axis().contains(*c.time))
      throw RangeError("time " + std::to_string(*c.time) + " is outside 0.." + std::to_string(u.t_max()));
    p.t = *c.time;
  }
  return p;
}

ojson point_json(const Universe& u, Point p) {
  return ojson{{"history", u.history(p.h).name}, {"time", p.t}, {"vertex", u.vertex_name(u.vertex_of(p.h, p.t))}};
}

ojson histories_json(const Universe& u, const HistorySet& s) {
  ojson arr = ojson::array();
  for (HistoryId h : s) arr.push_back(u.history(h).name);
  return arr;
}

FormulaPtr formula(const Model& m, const std::string& text) {
  auto f = parse_formula(text);
  std::set<std::string> agents(m.universe->agents().begin(), m.universe->agents().end());
  resolve(*f, *m.universe, agents);
  return f;
}

std::vector<std::string> agents_of(const Model& m, const Query& q) {
  std::vector<std::string> out = q.group.empty() ? std::vector<std::string>{} : split_list(q.group);
  if (!q.agent.empty()) out.insert(out.begin(), q.agent);
  if (out.empty()) throw UsageError("give --agent or --group");
  for (const auto& a : out)
    if (!m.universe->has_agent(a)) throw ResolutionError("unknown agent '" + a + "'");
  return out;
}

std::string single_agent(const Model& m, const Query& q) {
  auto as = agents_of(m, q);
  if (as.size() != 1) throw UsageError("this query takes exactly one agent");
  return as.front();
}

struct Answer {
  ojson body;
  std::optional<bool> verdict;  // for --strict
};

Answer do_validate(const Model& m) {
  const Universe& u = *m.universe;
  ojson agents = ojson::object();
  for (const auto& a : u.agents()) {
    const InfoEnsemble& e = m.ensemble(a);
    std::size_t straight = 0;
    ojson slanted = ojson::array();
    for (std::size_t c = 0; c < e.cell_count(); ++c) {
      if (is_straight(u, e.cell(c))) ++straight;
      else slanted.push_back(e.cell_name(c));
    }
    const StrategySpace& s = m.space(a);
    ojson strategies = s.enumerable() ? ojson(s.count()) : ojson("over cap");
    agents[a] = ojson{{"cells", e.cell_count()},
                      {"straight_cells", straight},
                      {"slanted_cells", slanted},
                      {"thin", true},
                      {"perfect_info", has_perfect_info(e)},
                      {"ndi", has_ndi(e)},
                      {"relation_backwards_consistent", relation_backwards_consistent(e)},
                      {"relation_backwards_identical", relation_backwards_identical(e)},
                      {"acting_cells", s.acting_cells().size()},
                      {"strategies", strategies}};
  }
  ojson body{{"model", m.name},
             {"schema_version", kSchemaVersion},
             {"valid", true},
             {"t_max", u.t_max()},
             {"states", u.states().size()},
             {"histories", u.history_count()},
             {"vertices", u.vertex_count()},
             {"agents", agents},
             {"warnings", m.warnings}};
  return {body, true};
}

Answer do_eval(const Model& m, const Query& q) {
  Point p = resolve_point(*m.universe, q.common);
  auto f = formula(m, q.formula);
  Evaluator ev = m.evaluator();
  bool v = ev.eval(f, p.h, p.t);
  return {ojson{{"formula", to_string(f)}, {"at", point_json(*m.universe, p)}, {"verdict", v}}, v};
}

Answer do_valid(const Model& m, const Query& q) {
  auto f = formula(m, q.formula);
  Evaluator ev = m.evaluator();
  auto r = ev.valid(f);
  ojson ce = nullptr;
  if (r.counterexample) ce = point_json(*m.universe, {r.counterexample->history, r.counterexample->time});
  return {ojson{{"formula", to_string(f)}, {"verdict", r.valid}, {"counterexample", ce}}, r.valid};
}

ojson report_json(const Universe& u, const AxiomReport& r) {
  ojson arr = ojson::array();
  for (const auto& v : r.verdicts) {
    ojson witness = nullptr;
    if (v.witness) witness = point_json(u, {v.witness->history, v.witness->time});
    arr.push_back(ojson{{"schema", v.schema},
                        {"instances", v.instances},
                        {"passed", v.passed},
                        {"restriction", v.restriction.empty() ? ojson(nullptr) : ojson(v.restriction)},
                        {"counterexample", v.counterexample ? ojson(*v.counterexample) : ojson(nullptr)},
                        {"witness", witness}});
  }
  return arr;
}

Answer do_axioms(const Model& m, const Query& q) {
  std::vector<std::string> agents = q.agent.empty() ? m.universe->agents() : std::vector<std::string>{q.agent};
  Evaluator ev = m.evaluator();
  ojson out = ojson::object();
  bool all = true;
  for (const auto& a : agents) {
    auto ndi = check_ndi_axioms(ev, a);
    auto pi = check_pi_axioms(ev, a);
    all = all && ndi.all_passed() && pi.all_passed();
    const InfoEnsemble& e = m.ensemble(a);
    ojson schemas = report_json(*m.universe, ndi);
    for (auto& s : report_json(*m.universe, pi)) schemas.push_back(s);
    out[a] = ojson{{"ndi", has_ndi(e)}, {"perfect_info", has_perfect_info(e)}, {"schemas", schemas}};
  }
  return {ojson{{"agents", out}, {"all_passed", all}}, all};
}

SpaceKind space_kind(const Query& q, SpaceKind fallback) {
  if (q.space.empty()) return fallback;
  return q.space == "objective" ? SpaceKind::kObjective : SpaceKind::kSubjective;
}

Answer do_can(const Model& m, const Query& q) {
  const Universe& u = *m.universe;
  Point p = resolve_point(u, q.common);
  auto f = formula(m, q.formula);
  Evaluator ev = m.evaluator();
  auto agents = agents_of(m, q);
  ojson body{{"form", q.form}, {"mode", q.mode}, {"agents", agents}, {"formula", to_string(f)},
             {"at", point_json(u, p)}};
  if (q.mode != "bool") {
    if (q.form != "o" && q.form != "s") throw UsageError("--mode " + q.mode + " takes --form o or s");
    std::string a = single_agent(m, q);
    SpaceKind kind = space_kind(q, q.form == "s" ? SpaceKind::kSubjective : SpaceKind::kObjective);
    if (q.mode == "pess" || q.mode == "opt") {
      auto r = u_can(m, ev, a, f, p.h, p.t, q.mode == "pess" ? UtilityMode::kPessimistic : UtilityMode::kOptimistic,
                     kind);
      body["value"] = r.value ? ojson(*r.value) : ojson(nullptr);
      body["witness"] = r.witness;
    } else if (q.mode == "prob") {
      auto r = p_can(m, ev, a, f, p.h, p.t, kind);
      body["value"] = r.probability;
      body["witness"] = r.witness;
      body["zero_mass_skipped"] = r.skipped;
    } else {
      auto r = xu_can(m, ev, a, f, p.h, p.t, kind);
      body["probability"] = r.probability ? ojson(*r.probability) : ojson(nullptr);
      body["value"] = r.expected_utility ? ojson(*r.expected_utility) : ojson(nullptr);
      body["witness"] = r.witness;
    }
    return {body, std::nullopt};
  }
  AbilityResult r;
  if (q.form == "o" || q.form == "s") {
    SpaceKind kind = space_kind(q, q.form == "o" ? SpaceKind::kObjective : SpaceKind::kSubjective);
    r = can(m, ev, single_agent(m, q), f, p.h, p.t, kind);
  } else if (q.form == "co") {
    r = co_can(m, ev, single_agent(m, q), f, p.h, p.t, space_kind(q, SpaceKind::kSubjective));
  } else if (q.form == "coop") {
    r = coop_can(m, ev, agents, f, p.h, p.t, space_kind(q, SpaceKind::kSubjective));
  } else {
    if (q.others.empty()) throw UsageError("--form cocoop needs --others");
    r = co_coop_can(m, ev, agents, f, p.h, p.t, split_list(q.others), space_kind(q, SpaceKind::kSubjective));
  }
  body["verdict"] = r.verdict;
  body["witness"] = r.witness;
  body["searched"] = r.searched;
  body["warnings"] = r.warnings;
  return {body, r.verdict};
}

Answer do_plans(const Model& m, const Query& q) {
  const Universe& u = *m.universe;
  Point p = resolve_point(u, q.common);
  auto f = formula(m, q.formula);
  Evaluator ev = m.evaluator();
  std::string kind = q.kind.empty() ? "plain" : q.kind;
  ojson body{{"kind", kind}, {"formula", to_string(f)}, {"at", point_json(u, p)}};
  PlanVerdict v;
  if (kind == "group") {
    auto g = agents_of(m, q);
    body["agents"] = g;
    v = group_plans(m, ev, g, f, p.h, p.t);
  } else {
    std::string a = single_agent(m, q);
    body["agent"] = a;
    if (kind == "plain") {
      v = plans(m, ev, a, f, p.h, p.t);
    } else if (kind == "co") {
      v = co_plans(m, ev, a, f, p.h, p.t);
    } else if (kind == "will") {
      if (q.subject.empty()) throw UsageError("--kind will needs --subject");
      body["subject"] = q.subject;
      v = will(m, ev, a, q.subject, f, p.h, p.t);
    } else if (kind == "prob") {
      double prob = plan_probability(m, ev, a, f, p.h, p.t);
      body["probability"] = prob;
      if (q.p) {
        bool ok = std::fabs(prob - *q.p) <= kProbabilityTolerance;
        body["p"] = *q.p;
        body["verdict"] = ok;
        return {body, ok};
      }
      return {body, std::nullopt};
    } else {
      if (!q.u) throw UsageError("--kind util needs --u");
      body["u"] = *q.u;
      v = plans_u(m, ev, a, f, *q.u, p.h, p.t);
    }
  }
  body["verdict"] = v.verdict;
  body["potential"] = histories_json(u, v.potential);
  body["counterexample"] = v.counterexample ? ojson(u.history(*v.counterexample).name) : ojson(nullptr);
  return {body, v.verdict};
}

std::optional<Distribution> weights_of(const Query& q) {
  if (q.weights.empty()) return std::nullopt;
  return Distribution(parse_numbers(q.weights, "--weights"));
}

Answer do_entropy(const Model& m, const Query& q) {
  const Universe& u = *m.universe;
  Point p = resolve_point(u, q.common);
  const std::string& a = q.agent;
  VertexId v = u.vertex_of(p.h, p.t);
  const InfoSet& cell = m.ensemble(a).cell_of(v);
  ojson body{{"kind", q.kind}, {"agent", a}, {"at", point_json(u, p)}, {"unit", "bits"}};
  if (q.kind == "state") {
    body["support"] = cell.size();
    body["value"] = state_entropy(cell, weights_of(q));
  } else if (q.kind == "control") {
    PlanState s = m.plan_states.count(a) ? plan_state_at_info(m, a, a, cell) : PlanState::full(m.space(a));
    body["support"] = s.size();
    body["value"] = control_entropy(s, weights_of(q));
  } else if (q.kind == "conditional") {
    std::vector<std::vector<double>> joint;
    if (!q.joint.empty()) {
      for (const auto& row : split_list(q.joint, ';')) joint.push_back(parse_numbers(row, "--joint"));
    } else {
      if (q.subject.empty()) throw UsageError("--kind conditional needs --joint or --other");
      auto plan_of = [&](const std::string& who) {
        const InfoSet& c = m.ensemble(who).cell_of(v);
        return m.plan_states.count(who) ? plan_state_at_info(m, who, who, c) : PlanState::full(m.space(who));
      };
      std::size_t na = plan_of(a).size(), nb = plan_of(q.subject).size();
      joint.assign(na, std::vector<double>(nb, 1.0 / static_cast<double>(na * nb)));
    }
    std::vector<double> col(joint.empty() ? 0 : joint.front().size(), 0.0);
    for (const auto& row : joint)
      for (std::size_t j = 0; j < row.size() && j < col.size(); ++j) col[j] += row[j];
    body["value"] = conditional_control_entropy(joint);
    double hb = 0;
    for (double w : col)
      if (w > 0) hb -= w * std::log2(w);
    body["unconditional"] = hb;
  } else {
    if (!q.strategy) throw UsageError("--kind strategic needs --strategy");
    body["strategy"] = m.space(a).describe(*q.strategy);
    body["support"] = m.space(a).potential(*q.strategy).size();
    body["value"] = strategic_entropy(m.space(a), *q.strategy, m.prior);
  }
  return {body, std::nullopt};
}

ojson state_json(const Model& m, const RepresentationalState& r) {
  ojson info = ojson::array();
  for (VertexId v : r.info.members()) info.push_back(m.universe->vertex_name(v));
  ojson plan = ojson::array();
  for (StrategyIndex i : r.plan.members()) plan.push_back(m.space(r.agent).describe(i));
  ojson values = ojson::object();
  for (const auto& [h, x] : r.values)
    if (x != 0) values[m.universe->history(h).name] = x;
  return ojson{{"info", info}, {"plan_size", r.plan.size()}, {"plan", plan}, {"values", values}};
}

Answer do_simulate(const Model& m, const Query& q) {
  if (m.scenarios.empty()) throw UsageError("the model declares no scenarios");
  const Scenario* s = &m.scenarios.front();
  if (!q.scenario.empty()) {
    auto it = std::find_if(m.scenarios.begin(), m.scenarios.end(), [&](const auto& x) { return x.name == q.scenario; });
    if (it == m.scenarios.end()) throw UsageError("no scenario '" + q.scenario + "'");
    s = &*it;
  }
  auto r = simulate(m, *s, q.lenient);
  ojson initial = ojson::object();
  for (const auto& [a, st] : r.initial) initial[a] = state_json(m, st);
  ojson steps = ojson::array();
  for (const auto& st : r.steps) {
    ojson changed = ojson::array();
    ojson focus = nullptr, secondary = nullptr;
    if (st.report) {
      for (auto c : st.report->changed) changed.push_back(to_string(c));
      focus = to_string(st.report->primary);
      if (st.report->secondary) secondary = to_string(*st.report->secondary);
    }
    steps.push_back(ojson{{"index", st.index},
                          {"speaker", st.message.speaker},
                          {"addressee", st.message.addressee},
                          {"token", st.message.token ? ojson(*st.message.token) : ojson(nullptr)},
                          {"force", to_string(st.message.force)},
                          {"content", st.message.content ? ojson(to_string(st.message.content)) : ojson(nullptr)},
                          {"focus", focus},
                          {"secondary_focus", secondary},
                          {"changed", changed},
                          {"rejected", st.rejected ? ojson(*st.rejected) : ojson(nullptr)},
                          {"info_size", st.info_size},
                          {"plan_size", st.plan_size},
                          {"info", st.info}});
  }
  ojson fin = ojson::object();
  for (const auto& [a, st] : r.final) fin[a] = state_json(m, st);
  return {ojson{{"scenario", s->name},
                {"at", m.universe->vertex_name(s->at)},
                {"initial", initial},
                {"steps", steps},
                {"final", fin},
                {"warnings", r.warnings}},
          std::nullopt};
}

Answer do_what_if(const Model& m, const Query& q) {
  const Universe& u = *m.universe;
  Point p = resolve_point(u, q.common);
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(q.plan);
  } catch (const nlohmann::json::parse_error&) {
    spec = q.plan;  // bare "all"
  }
  PlanState cand = plan_from_json(m, q.agent, spec, "/plan");
  auto pot = what_if(m, q.agent, cand, p.h, p.t);
  return {ojson{{"agent", q.agent},
                {"at", point_json(u, p)},
                {"candidate_size", cand.size()},
                {"potential", histories_json(u, pot)}},
          std::nullopt};
}

std::string scalar_text(const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const ojson& body, std::ostream& out) {
  std::size_t width = 0;
  for (auto it = body.begin(); it != body.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = body.begin(); it != body.end(); ++it)
    out << it.key() << std::string(width - it.key().size() + 2, ' ') << scalar_text(it.value()) << "\n";
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"validate", "eval",    "valid",    "axioms", "can",
                                          "plans",    "entropy", "simulate", "what-if"};
  return v;
}

std::string suggest(const std::string& word, const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_d = std::max<std::size_t>(3, word.size() / 2) + 1;
  for (const auto& c : candidates) {
    std::size_t d = edit_distance(word, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    (args.empty() ? err : out) << kUsage;
    return args.empty() ? 2 : 0;
  }
  Query q;
  q.verb = args[0];
  if (std::find(verbs().begin(), verbs().end(), q.verb) == verbs().end()) {
    err << "error[usage]: unknown verb '" << q.verb << "'";
    auto s = suggest(q.verb, verbs());
    if (!s.empty()) err << "; did you mean '" << s << "'?";
    err << "\n" << kUsage;
    return 2;
  }

  CLI::App app("stratos " + q.verb, "stratos " + q.verb);
  configure(app, q);
  app.allow_extras();
  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return 2;
  }
  if (!app.remaining().empty()) {
    std::string bad = app.remaining().front();
    err << "error[usage]: unexpected argument '" << bad << "'";
    std::vector<std::string> names;
    for (const CLI::Option* o : app.get_options())
      for (const auto& n : o->get_lnames()) names.push_back("--" + n);
    auto s = suggest(bad, names);
    if (!s.empty() && bad.rfind("--", 0) == 0) err << "; did you mean '" << s << "'?";
    err << "\n";
    return 2;
  }

  Answer answer;
  try {
    Model m = load_model(q.common.model);
    if (q.verb == "validate") answer = do_validate(m);
    else if (q.verb == "eval") answer = do_eval(m, q);
    else if (q.verb == "valid") answer = do_valid(m, q);
    else if (q.verb == "axioms") answer = do_axioms(m, q);
    else if (q.verb == "can") answer = do_can(m, q);
    else if (q.verb == "plans") answer = do_plans(m, q);
    else if (q.verb == "entropy") answer = do_entropy(m, q);
    else if (q.verb == "simulate") answer = do_simulate(m, q);
    else answer = do_what_if(m, q);
  } catch (const Error& e) {
    err << "error[" << e.kind() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return 2;
  }

  if (q.common.format == "text") print_text(answer.body, out);
  else out << answer.body.dump(2) << "\n";
  if (q.common.strict && answer.verdict && !*answer.verdict) return 1;
  return 0;
}

}  // namespace stratos::cli
