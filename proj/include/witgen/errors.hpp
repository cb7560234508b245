#ifndef WITGEN_ERRORS_HPP
#define WITGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace witgen {

// Stable error codes; the CLI maps each to exactly one machine-readable tag.
enum class ErrorCode {
    ParseError,
    NotMultilinear,
    ZeroPolynomial,
    DimTooSmall,
    NonzeroTrace,
    NotSupported,
    RadicandMismatch,
    DivisionByZero,
    SingularMatrix,
    DimensionMismatch,
    IndexOutOfRange,
    ArityMismatch,
    NotProper,
    InternalError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace witgen

#endif
