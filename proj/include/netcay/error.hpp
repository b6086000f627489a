#pragma once

#include <stdexcept>
#include <string>

namespace netcay {

enum class errc {
  not_a_group,
  order_cap_exceeded,
  aut_too_large,
  not_normal,
  not_inverse_closed,
  contains_identity,
  empty_set,
  not_generating,
  not_transitive,
  non_constant_intersection,
  precondition_failed,
  not_invariant,
  not_in_lattice,
  connection_meets_kernel,
  product_too_large,
  graph_too_large,
  not_connected,
  not_normal_edge_transitive,
  inconsistency_detected,
  structure_violation,
  mismatch_with_brute_force,
  classification_gap,
  bad_parameters,
  cap_exceeded,
  unknown_case,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_group: return "NotAGroup";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::aut_too_large: return "AutTooLarge";
    case errc::not_normal: return "NotNormal";
    case errc::not_inverse_closed: return "NotInverseClosed";
    case errc::contains_identity: return "ContainsIdentity";
    case errc::empty_set: return "Empty";
    case errc::not_generating: return "NotGenerating";
    case errc::not_transitive: return "NotTransitive";
    case errc::non_constant_intersection: return "NonConstantIntersection";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::not_invariant: return "NotInvariant";
    case errc::not_in_lattice: return "NotInLattice";
    case errc::connection_meets_kernel: return "ConnectionMeetsKernel";
    case errc::product_too_large: return "ProductTooLarge";
    case errc::graph_too_large: return "GraphTooLarge";
    case errc::not_connected: return "NotConnected";
    case errc::not_normal_edge_transitive: return "NotNormalEdgeTransitive";
    case errc::inconsistency_detected: return "InconsistencyDetected";
    case errc::structure_violation: return "StructureViolation";
    case errc::mismatch_with_brute_force: return "MismatchWithBruteForce";
    case errc::classification_gap: return "ClassificationGap";
    case errc::bad_parameters: return "BadParameters";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::unknown_case: return "UnknownCase";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

// All library failures are reported through this type; code() distinguishes
// refusals (bad input) from inconsistency signals (internal bug).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace netcay
