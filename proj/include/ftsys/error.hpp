#pragma once

#include <stdexcept>
#include <string>

namespace ftsys {

enum class errc {
  unsupported_type,
  zero_root,
  not_a_root,
  not_orthogonal,
  not_height1,
  no_extension,
  not_long,
  mixed_basis,
  wrong_type,
  zero_scalar,
  not_simply_laced,
  zero_element,
  not_rank4,
  not_a_square,
  not_in_eigenspace,
  internal_grading,
  parse_error,
  internal_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unsupported_type:  return "UnsupportedType";
    case errc::zero_root:         return "ZeroRoot";
    case errc::not_a_root:        return "NotARoot";
    case errc::not_orthogonal:    return "NotOrthogonal";
    case errc::not_height1:       return "NotHeight1";
    case errc::no_extension:      return "NoExtension";
    case errc::not_long:          return "NotLong";
    case errc::mixed_basis:       return "MixedBasis";
    case errc::wrong_type:        return "WrongType";
    case errc::zero_scalar:       return "ZeroScalar";
    case errc::not_simply_laced:  return "NotSimplyLaced";
    case errc::zero_element:      return "ZeroElement";
    case errc::not_rank4:         return "NotRank4";
    case errc::not_a_square:      return "NotASquare";
    case errc::not_in_eigenspace: return "NotInEigenspace";
    case errc::internal_grading:  return "InternalGrading";
    case errc::parse_error:       return "ParseError";
    case errc::internal_error:    return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void ensure(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace ftsys
