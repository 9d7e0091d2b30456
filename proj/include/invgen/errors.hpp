#ifndef INVGEN_ERRORS_HPP
#define INVGEN_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace invgen {

/// Error taxonomy shared by all modules. Codes are stable identifiers used in
/// the CLI's machine-readable error output.
enum class Errc {
  // permutation groups
  CapExceeded,
  NotASubgroup,
  NotTransitive,
  DomainTooSmall,
  SearchBudgetExceeded,
  SupplyNotComplete,
  InternalSearchFailure,
  // words
  VariableOutOfRange,
  WordBudgetExceeded,
  // matrix groups
  NotUnimodular,
  ZeroElement,
  NoRealRoot,
  TrialsExhausted,
  TrivialTarget,
  NotInvertible,
  // tree automorphisms
  DepthExhausted,
  NotInStabilizer,
  NotInBallStabilizer,
  WrongClass,
  InvalidPartition,
  SupplyIncomplete,
  // generic
  InvalidArgument,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, std::string message, std::int64_t detail)
      : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

  Errc code() const { return code_; }
  /// Optional numeric payload (explored leaf count, trial count, ...).
  std::int64_t detail() const { return detail_; }

 private:
  Errc code_;
  std::int64_t detail_ = 0;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::CapExceeded: return "cap_exceeded";
    case Errc::NotASubgroup: return "not_a_subgroup";
    case Errc::NotTransitive: return "not_transitive";
    case Errc::DomainTooSmall: return "domain_too_small";
    case Errc::SearchBudgetExceeded: return "search_budget_exceeded";
    case Errc::SupplyNotComplete: return "supply_not_complete";
    case Errc::InternalSearchFailure: return "internal_search_failure";
    case Errc::VariableOutOfRange: return "variable_out_of_range";
    case Errc::WordBudgetExceeded: return "word_budget_exceeded";
    case Errc::NotUnimodular: return "not_unimodular";
    case Errc::ZeroElement: return "zero_element";
    case Errc::NoRealRoot: return "no_real_root";
    case Errc::TrialsExhausted: return "trials_exhausted";
    case Errc::TrivialTarget: return "trivial_target";
    case Errc::NotInvertible: return "not_invertible";
    case Errc::DepthExhausted: return "depth_exhausted";
    case Errc::NotInStabilizer: return "not_in_stabilizer";
    case Errc::NotInBallStabilizer: return "not_in_ball_stabilizer";
    case Errc::WrongClass: return "wrong_class";
    case Errc::InvalidPartition: return "invalid_partition";
    case Errc::SupplyIncomplete: return "supply_incomplete";
    case Errc::InvalidArgument: return "invalid_argument";
    case Errc::ParseError: return "parse_error";
  }
  return "unknown";
}

}  // namespace invgen

#endif  // INVGEN_ERRORS_HPP
