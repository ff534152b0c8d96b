#pragma once

// Instance checking for the information-condition axiom schemata:
//
//   ndi-indexed  [](A,t) a@t'' -> [](A,t') a@t''     for t <= t'
//   ndi-tensed   P [](A) a -> [](A) P a               a future-free
//   pi-indexed   a@t -> [](A,t') a@t                   for t <= t', a future-free
//   pi-tensed    a -> [](A) a                          a future-free
//
// Instances range over a bounded, deterministically ordered pool of
// formulas `a` built from the model's propositions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stratos/eval.hpp"

namespace stratos {

struct AxiomOptions {
  std::size_t max_depth = 2;
  // Upper bound on the pool of formulas `a`; 0 means unbounded.
  std::size_t max_pool = 0;
};

struct SchemaVerdict {
  std::string schema;
  std::string agent;
  std::size_t instances = 0;
  bool passed = true;
  std::string restriction;  // restriction placed on `a`, empty if none
  std::optional<std::string> counterexample;
  std::optional<Point> witness;
};

struct AxiomReport {
  std::vector<SchemaVerdict> verdicts;
  bool all_passed() const;
};

// Pool of `a` formulas: atoms, then depth-1 (!a, P a, F a, a & b, a | b),
// then unary operators over depth-1 formulas. Future operators are left out
// when `allow_future` is false.
std::vector<FormulaPtr> schema_pool(const Universe& u, bool allow_future, const AxiomOptions& opts = {});

AxiomReport check_ndi_axioms(Evaluator& ev, const std::string& agent, const AxiomOptions& opts = {});
AxiomReport check_pi_axioms(Evaluator& ev, const std::string& agent, const AxiomOptions& opts = {});

}  // namespace stratos
