#pragma once

// Temporal-modal query language.
//
//   formula := implies
//   implies := or [ "->" implies ]
//   or      := and { "|" and }
//   and     := unary { "&" unary }
//   unary   := ("!" | "~") unary | "P" unary | "F" unary
//            | "[]" "(" agent [ "," time ] ")" unary
//            | "<>" "(" agent [ "," time ] ")" unary
//            | primary
//   primary := "true" | "false" | atom [ "@" time ] | "(" formula ")" [ "@" time ]
//   atom    := identifier | '"' any text without quotes '"'
//
// "P" and "F" are the strict past and future operators; "[](A)" is the
// tensed information necessity of agent A, "[](A,t)" its time-indexed form.
// "p@t" reads the atom at a fixed time, "(phi)@t" evaluates phi at t.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "stratos/world.hpp"

namespace stratos {

enum class Op { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies, kPast, kFuture, kBox, kDiamond, kAt };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Op op = Op::kTrue;
  std::string name;          // atom name, or agent for kBox / kDiamond
  std::optional<Time> time;  // timed atom, indexed modality, or kAt time
  FormulaPtr left;           // sole operand of unary nodes
  FormulaPtr right;
};

namespace fml {
FormulaPtr truth(bool value);
FormulaPtr atom(std::string name, std::optional<Time> time = std::nullopt);
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr past(FormulaPtr f);
FormulaPtr future(FormulaPtr f);
FormulaPtr box(std::string agent, FormulaPtr f, std::optional<Time> index = std::nullopt);
FormulaPtr diamond(std::string agent, FormulaPtr f, std::optional<Time> index = std::nullopt);
FormulaPtr at(FormulaPtr f, Time t);
}  // namespace fml

// Throws SyntaxError with a 1-based column.
FormulaPtr parse_formula(std::string_view text);
std::string to_string(const Formula& f);
inline std::string to_string(const FormulaPtr& f) { return to_string(*f); }
bool structurally_equal(const Formula& a, const Formula& b);

// Checks every atom, agent and time against the universe. `agents` are the
// agents with an information ensemble. Throws ResolutionError.
void resolve(const Formula& f, const Universe& u, const std::set<std::string>& agents);

bool contains_future(const Formula& f);

}  // namespace stratos
