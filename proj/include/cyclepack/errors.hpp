#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace cyclepack {

/// Measured quantities attached to a failure, keyed by name. Ordered so that
/// reports serialize deterministically.
using Ledger = std::map<std::string, std::int64_t>;

/// Misuse of the graph API: out-of-range ids, overlapping sets, loops.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A lemma operation was called on a configuration that does not satisfy the
/// lemma's hypotheses. Inside the solver this means a counting bound was
/// misapplied, so it is never swallowed.
class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(std::string lemma, std::string detail, std::int64_t measured = 0,
                    std::int64_t threshold = 0)
      : std::runtime_error(lemma + ": hypothesis failed: " + detail),
        lemma_(std::move(lemma)),
        measured_(measured),
        threshold_(threshold) {}

  const std::string& lemma() const { return lemma_; }
  std::int64_t measured() const { return measured_; }
  std::int64_t threshold() const { return threshold_; }

 private:
  std::string lemma_;
  std::int64_t measured_;
  std::int64_t threshold_;
};

/// A lemma's hypotheses held but exhaustive search found no witness. This
/// would be a counterexample to the lemma; the verification suites count it.
class WitnessNotFound : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Failure of a solver stage. `kind` is a stable machine-readable tag
/// ("not-found", "no-qualifying-cycle", "no-absorption-target",
/// "hypothesis-failure", "invalid-input").
class SolverError : public std::runtime_error {
 public:
  SolverError(std::string stage, std::string kind, const std::string& message,
              Ledger ledger = {})
      : std::runtime_error(stage + ": " + kind + ": " + message),
        stage_(std::move(stage)),
        kind_(std::move(kind)),
        ledger_(std::move(ledger)) {}

  const std::string& stage() const { return stage_; }
  const std::string& kind() const { return kind_; }
  const Ledger& ledger() const { return ledger_; }

 private:
  std::string stage_;
  std::string kind_;
  Ledger ledger_;
};

/// Edge-list syntax or validation error; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cyclepack
