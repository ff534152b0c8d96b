#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stratos {

// Base of every error raised by the library. `kind()` is a stable short tag
// used in machine-readable CLI output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define STRATOS_DEFINE_ERROR(Name, tag)                                   \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what) : Error(tag, what) {}          \
  };

STRATOS_DEFINE_ERROR(ModelReferenceError, "model-reference")
STRATOS_DEFINE_ERROR(ModelError, "model")
STRATOS_DEFINE_ERROR(PartitionViolation, "partition-violation")
STRATOS_DEFINE_ERROR(IllFormedEnsemble, "ill-formed-ensemble")
STRATOS_DEFINE_ERROR(IncompleteChoice, "incomplete-choice")
STRATOS_DEFINE_ERROR(IncompleteStrategy, "incomplete-strategy")
STRATOS_DEFINE_ERROR(EnumerationLimit, "enumeration-limit")
STRATOS_DEFINE_ERROR(MissingIntention, "missing-intention")
STRATOS_DEFINE_ERROR(ConsistencyError, "consistency")
STRATOS_DEFINE_ERROR(UndefinedConditional, "undefined-conditional")
STRATOS_DEFINE_ERROR(DomainError, "domain")
STRATOS_DEFINE_ERROR(ResolutionError, "resolution")
STRATOS_DEFINE_ERROR(RangeError, "range")
STRATOS_DEFINE_ERROR(RejectedDirective, "rejected-directive")
STRATOS_DEFINE_ERROR(UsageError, "usage")

#undef STRATOS_DEFINE_ERROR

class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error("schema", (pointer.empty() ? std::string("/") : pointer) + ": " + what),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t column, const std::string& what)
      : Error("syntax", "syntax error at column " + std::to_string(column) + ": " + what),
        column_(column) {}
  // 1-based.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// An assertion that no possibility in the addressee's information survives.
class RejectedMessage : public Error {
 public:
  RejectedMessage(std::size_t index, const std::string& what)
      : Error("rejected-message", what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace stratos
