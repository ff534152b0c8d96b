#include "stratos/message.hpp"

#include "stratos/errors.hpp"

namespace stratos {

std::string to_string(Force f) {
  switch (f) {
    case Force::kAssertive: return "assertive";
    case Force::kDirective: return "directive";
    case Force::kEvaluative: return "evaluative";
  }
  return "?";
}

Force parse_force(const std::string& name) {
  if (name == "assertive") return Force::kAssertive;
  if (name == "directive") return Force::kDirective;
  if (name == "evaluative") return Force::kEvaluative;
  throw UsageError("unknown force '" + name + "' (expected assertive, directive or evaluative)");
}

Message interpret(const PragmaticsProfile& profile, const Message& m) {
  if (!m.token) return m;
  auto it = profile.find(*m.token);
  if (it == profile.end()) return m;
  Message out = m;
  out.force = it->second.force;
  out.content = it->second.content;
  out.delta = it->second.delta;
  return out;
}

void check_message(const Message& m) {
  if (m.force == Force::kEvaluative) {
    if (m.content) throw DomainError("evaluative message carries a formula");
  } else if (!m.content) {
    throw DomainError(to_string(m.force) + " message has no formula content");
  }
}

}  // namespace stratos
