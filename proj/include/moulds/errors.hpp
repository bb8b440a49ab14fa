#ifndef MOULDS_ERRORS_HPP
#define MOULDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moulds {

struct MouldError : std::runtime_error {
  explicit MouldError(const std::string& what) : std::runtime_error(what) {}
};

// evaluation point lies on a pole of some denominator form
struct PoleError : MouldError {
  explicit PoleError(const std::string& what) : MouldError(what) {}
};

// residue extraction hit a pole of order >= 2 in the pivot variable
struct HigherPoleError : MouldError {
  explicit HigherPoleError(const std::string& what) : MouldError(what) {}
};

// rational function is not a linear combination of the f_sigma basis
struct NotInSpanError : MouldError {
  explicit NotInSpanError(const std::string& what) : MouldError(what) {}
};

// shuffle operands share a letter
struct OverlapError : MouldError {
  explicit OverlapError(const std::string& what) : MouldError(what) {}
};

struct EmptyOperandError : MouldError {
  explicit EmptyOperandError(const std::string& what) : MouldError(what) {}
};

struct InvalidInputError : MouldError {
  explicit InvalidInputError(const std::string& what) : MouldError(what) {}
};

// series has no compositional (or multiplicative) inverse
struct NonInvertibleError : MouldError {
  explicit NonInvertibleError(const std::string& what) : MouldError(what) {}
};

struct ParamError : MouldError {
  explicit ParamError(const std::string& what) : MouldError(what) {}
};

struct ParseError : MouldError {
  explicit ParseError(const std::string& what) : MouldError(what) {}
};

struct IndexError : MouldError {
  explicit IndexError(const std::string& what) : MouldError(what) {}
};

}  // namespace moulds

#endif
