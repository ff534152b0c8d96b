#pragma once

// Speech-act messages and per-agent pragmatics profiles.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratos/formula.hpp"
#include "stratos/history_set.hpp"
#include "stratos/world.hpp"

namespace stratos {

enum class Force { kAssertive, kDirective, kEvaluative };

std::string to_string(Force f);
// Throws UsageError for an unknown name.
Force parse_force(const std::string& name);

struct Message {
  Force force = Force::kAssertive;
  FormulaPtr content;                   // assertive and directive
  std::map<HistoryId, double> delta;    // evaluative
  std::string speaker;
  std::string addressee;
  std::optional<std::string> token;     // surface form, looked up in profiles
};

struct ProfileEntry {
  Force force = Force::kAssertive;
  FormulaPtr content;
  std::map<HistoryId, double> delta;
};

// Token -> local interpretation.
using PragmaticsProfile = std::map<std::string, ProfileEntry>;

// The message as understood under `profile`: a known token replaces force
// and content; anything else is taken literally.
Message interpret(const PragmaticsProfile& profile, const Message& m);

// Throws DomainError when the content does not match the force.
void check_message(const Message& m);

struct Scenario {
  std::string name;
  VertexId at = 0;
  std::vector<Message> messages;  // chronological
};

}  // namespace stratos
