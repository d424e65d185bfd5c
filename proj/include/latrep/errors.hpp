#pragma once

#include <stdexcept>
#include <string>

namespace latrep {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// poset construction
struct CycleDetected : Error {
  explicit CycleDetected(const std::string& w) : Error(w) {}
};

// lattice validation; carries a witness pair
struct NotALattice : Error {
  int x, y;
  bool missing_join;  // false = missing meet
  NotALattice(int x_, int y_, bool join_, const std::string& w)
      : Error(w), x(x_), y(y_), missing_join(join_) {}
};

struct NotACoverChain : Error {
  explicit NotACoverChain(const std::string& w) : Error(w) {}
};

// congruence machinery
struct HomeMismatch : Error {
  explicit HomeMismatch(const std::string& w) : Error(w) {}
};
struct BlocksNotIntervals : Error {
  explicit BlocksNotIntervals(const std::string& w) : Error(w) {}
};
struct NotASublattice : Error {
  explicit NotASublattice(const std::string& w) : Error(w) {}
};

// order surgery preconditions
struct EmptySubset : Error {
  explicit EmptySubset(const std::string& w) : Error(w) {}
};
struct NotConvex : Error {
  explicit NotConvex(const std::string& w) : Error(w) {}
};
struct NotIsotone : Error {
  explicit NotIsotone(const std::string& w) : Error(w) {}
};
struct NotConstantOnA : Error {
  explicit NotConstantOnA(const std::string& w) : Error(w) {}
};
struct NotDownsets : Error {
  explicit NotDownsets(const std::string& w) : Error(w) {}
};
struct ContainmentViolated : Error {
  explicit ContainmentViolated(const std::string& w) : Error(w) {}
};
struct NotMaximalInIntersection : Error {
  explicit NotMaximalInIntersection(const std::string& w) : Error(w) {}
};

// one-point extensions
struct ShapeViolation : Error {
  explicit ShapeViolation(const std::string& w) : Error(w) {}
};
struct AdmissibleInput : Error {
  explicit AdmissibleInput(const std::string& w) : Error(w) {}
};
struct NotAMultidiamondTab : Error {
  explicit NotAMultidiamondTab(const std::string& w) : Error(w) {}
};

// certified constructions
struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& w) : Error(w) {}
};
struct FrameContractViolated : Error {
  std::string statement;
  FrameContractViolated(std::string stmt, const std::string& w)
      : Error(w), statement(std::move(stmt)) {}
};
struct NineStatementViolation : Error {
  std::string statement;
  NineStatementViolation(std::string stmt, const std::string& w)
      : Error(w), statement(std::move(stmt)) {}
};
struct CertificateFailed : Error {
  explicit CertificateFailed(const std::string& w) : Error(w) {}
};

struct MalformedInput : Error {
  explicit MalformedInput(const std::string& w) : Error(w) {}
};

// internal invariant failure (a bug or a broken construction, never user input)
#define LATREP_CHECK(cond, msg)                                      \
  do {                                                               \
    if (!(cond)) throw ::latrep::Error(std::string("check failed: ") + (msg)); \
  } while (0)

}  // namespace latrep
