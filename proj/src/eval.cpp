#include "stratos/eval.hpp"

#include "stratos/errors.hpp"

namespace stratos {

Evaluator::Evaluator(std::shared_ptr<const Universe> universe, EnsembleMap ensembles)
    : universe_(std::move(universe)), ensembles_(std::move(ensembles)) {}

void Evaluator::check_time(Time t) const {
  if (!universe_->time_axis().contains(t))
    throw RangeError("time " + std::to_string(t) + " is outside 0.." +
                     std::to_string(universe_->t_max()));
}

const TruthTable& Evaluator::table(const FormulaPtr& f) {
  std::string key = to_string(*f);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  TruthTable t = compute(*f);
  return cache_.emplace(std::move(key), std::move(t)).first->second;
}

bool Evaluator::eval(const FormulaPtr& f, HistoryId h, Time t) {
  universe_->history(h);
  check_time(t);
  return table(f).at(h, t);
}

ValidityResult Evaluator::valid(const FormulaPtr& f) {
  const TruthTable& tt = table(f);
  const Universe& u = *universe_;
  for (HistoryId h = 0; h < u.history_count(); ++h)
    for (Time t = 0; t <= u.t_max(); ++t)
      if (!tt.at(h, t)) return ValidityResult{false, Point{h, t}};
  return ValidityResult{};
}

TruthTable Evaluator::necessity(const Formula& f, bool universal) {
  auto ens = ensembles_.find(f.name);
  if (ens == ensembles_.end()) throw ResolutionError("no information ensemble for agent '" + f.name + "'");
  const InfoEnsemble& xi = *ens->second;
  const Universe& u = *universe_;
  const TruthTable& body = table(f.left);
  TruthTable out(u.history_count(), u.time_axis().size());
  Time lo = 0, hi = u.t_max();
  if (f.time) {
    check_time(*f.time);
    lo = hi = *f.time;
  }
  // The relation slice at t only depends on the vertex H^t.
  for (VertexId v = 0; v < u.vertex_count(); ++v) {
    Time t = u.cut(v);
    if (t < lo || t > hi) continue;
    bool value = universal;
    for (HistoryId k : xi.star(xi.cell_index(v))) {
      if (body.at(k, t) != universal) {
        value = !universal;
        break;
      }
    }
    for (HistoryId h : u.extensions(v)) {
      if (f.time) {
        for (Time s = 0; s <= u.t_max(); ++s) out.set(h, s, value);
      } else {
        out.set(h, t, value);
      }
    }
  }
  return out;
}

TruthTable Evaluator::compute(const Formula& f) {
  const Universe& u = *universe_;
  const std::size_t nh = u.history_count();
  const Time tmax = u.t_max();
  TruthTable out(nh, u.time_axis().size());
  switch (f.op) {
    case Op::kTrue:
    case Op::kFalse:
      for (HistoryId h = 0; h < nh; ++h)
        for (Time t = 0; t <= tmax; ++t) out.set(h, t, f.op == Op::kTrue);
      return out;
    case Op::kAtom: {
      if (!u.has_proposition(f.name)) throw ResolutionError("unknown proposition '" + f.name + "'");
      if (f.time) check_time(*f.time);
      for (HistoryId h = 0; h < nh; ++h)
        for (Time t = 0; t <= tmax; ++t) out.set(h, t, u.world_state_at(h, f.time.value_or(t)).has(f.name));
      return out;
    }
    case Op::kNot: {
      const TruthTable& a = table(f.left);
      for (HistoryId h = 0; h < nh; ++h)
        for (Time t = 0; t <= tmax; ++t) out.set(h, t, !a.at(h, t));
      return out;
    }
    case Op::kAnd:
    case Op::kOr:
    case Op::kImplies: {
      const TruthTable& a = table(f.left);
      const TruthTable& b = table(f.right);
      for (HistoryId h = 0; h < nh; ++h) {
        for (Time t = 0; t <= tmax; ++t) {
          bool x = a.at(h, t), y = b.at(h, t);
          out.set(h, t, f.op == Op::kAnd ? (x && y) : f.op == Op::kOr ? (x || y) : (!x || y));
        }
      }
      return out;
    }
    case Op::kPast: {
      const TruthTable& a = table(f.left);
      for (HistoryId h = 0; h < nh; ++h) {
        bool seen = false;
        for (Time t = 0; t <= tmax; ++t) {
          out.set(h, t, seen);
          seen = seen || a.at(h, t);
        }
      }
      return out;
    }
    case Op::kFuture: {
      const TruthTable& a = table(f.left);
      for (HistoryId h = 0; h < nh; ++h) {
        bool seen = false;
        for (Time t = tmax; t >= 0; --t) {
          out.set(h, t, seen);
          seen = seen || a.at(h, t);
        }
      }
      return out;
    }
    case Op::kAt: {
      check_time(*f.time);
      const TruthTable& a = table(f.left);
      for (HistoryId h = 0; h < nh; ++h)
        for (Time t = 0; t <= tmax; ++t) out.set(h, t, a.at(h, *f.time));
      return out;
    }
    case Op::kBox:
      return necessity(f, true);
    case Op::kDiamond:
      return necessity(f, false);
  }
  return out;
}

}  // namespace stratos
