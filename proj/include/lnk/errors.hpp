#pragma once

#include <stdexcept>
#include <string>

namespace lnk {

enum class errc {
  zero_polynomial,
  division_by_zero,
  denominator_vanishes,
  not_square,
  not_symmetric,
  singular_matrix,
  singular_form,
  numerically_uncertain,
  same_point,
  not_rational_homology_sphere,
  omega_is_alexander_root,
  missing_ambient_lk,
  missing_euler_number,
  invalid_spec,
  basis_conversion_failure,
  dimension_mismatch,
  schema_error,
  invariant_violation,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::denominator_vanishes: return "DenominatorVanishes";
    case errc::not_square: return "NotSquare";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::singular_form: return "SingularForm";
    case errc::numerically_uncertain: return "NumericallyUncertain";
    case errc::same_point: return "SamePoint";
    case errc::not_rational_homology_sphere: return "NotRationalHomologySphere";
    case errc::omega_is_alexander_root: return "OmegaIsAlexanderRoot";
    case errc::missing_ambient_lk: return "MissingAmbientLk";
    case errc::missing_euler_number: return "MissingEulerNumber";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::basis_conversion_failure: return "BasisConversionFailure";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::schema_error: return "SchemaError";
    case errc::invariant_violation: return "InvariantViolation";
  }
  return "UnknownError";
}

// Exit-code contract: 1 = input error, 2 = mathematical error,
// 3 = numerical certification failure.
inline int errc_exit_code(errc c) {
  switch (c) {
    case errc::schema_error:
    case errc::invariant_violation:
      return 1;
    case errc::numerically_uncertain:
      return 3;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lnk
