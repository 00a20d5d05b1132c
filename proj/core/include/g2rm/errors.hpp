#ifndef G2RM_ERRORS_HPP
#define G2RM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g2rm {

// All library errors carry a stable machine-readable key (used by the CLI
// to map failures onto exit codes) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string key, const std::string& msg)
      : std::runtime_error(key + ": " + msg), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// Input-shaped errors (exit code 1 in the CLI).
class InputError : public Error {
 public:
  using Error::Error;
};

// Computation-shaped errors (exit code 2 in the CLI).
class ComputeError : public Error {
 public:
  using Error::Error;
};

inline InputError err_zero_inverse() {
  return InputError("ZeroInverse", "inverse of zero element");
}
inline InputError err_not_coprime() {
  return InputError("NotCoprime", "CRT moduli are not pairwise coprime");
}
inline InputError err_bad_field(const std::string& m) { return InputError("BadField", m); }
inline InputError err_bad_degree(const std::string& m) { return InputError("BadDegree", m); }
inline InputError err_singular_curve(const std::string& m) {
  return InputError("SingularCurve", m);
}
inline InputError err_tau_not_rational(const std::string& m) {
  return InputError("TauNotRational", m);
}
inline InputError err_singular_parameter(const std::string& m) {
  return InputError("SingularParameter", m);
}
inline InputError err_denominator_vanishes(const std::string& m) {
  return InputError("DenominatorVanishes", m);
}
inline InputError err_unsupported_discriminant(const std::string& m) {
  return InputError("UnsupportedDiscriminant", m);
}
inline InputError err_too_large(const std::string& m) { return InputError("TooLarge", m); }
inline InputError err_mixed_context() {
  return InputError("MixedFieldContext", "elements from different field contexts");
}

inline ComputeError err_insufficient_points(const std::string& m) {
  return ComputeError("InsufficientPoints", m);
}
inline ComputeError err_degenerate_leading(const std::string& m) {
  return ComputeError("DegenerateLeading", m);
}
inline ComputeError err_non_generic_input(const std::string& m) {
  return ComputeError("NonGenericInput", m);
}
inline ComputeError err_non_generic_shape(const std::string& m) {
  return ComputeError("NonGenericShape", m);
}
inline ComputeError err_not_split(const std::string& m) { return ComputeError("NotSplit", m); }
inline ComputeError err_ramified_prime(const std::string& m) {
  return ComputeError("RamifiedPrime", m);
}
inline ComputeError err_interpolation_failure(const std::string& m) {
  return ComputeError("InterpolationFailure", m);
}
inline ComputeError err_empty_kernel(const std::string& m) {
  return ComputeError("EmptyKernelComponent", m);
}
inline ComputeError err_prime_skipped(const std::string& m) {
  return ComputeError("PrimeSkipped", m);
}
inline ComputeError err_no_solution(const std::string& m) {
  return ComputeError("NoSolution", m);
}
inline ComputeError err_not_found(const std::string& m) { return ComputeError("NotFound", m); }
inline ComputeError err_ambiguous(const std::string& m) { return ComputeError("Ambiguous", m); }
inline ComputeError err_inconsistent_parity(const std::string& m) {
  return ComputeError("InconsistentParity", m);
}
inline ComputeError err_rueck_violation(const std::string& m) {
  return ComputeError("RueckViolation", m);
}

}  // namespace g2rm

#endif  // G2RM_ERRORS_HPP
