#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hsdyn {

// Exact rational scalar used throughout. Always in lowest terms with a
// positive denominator (the backing type maintains this on every operation).
using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

enum class ErrorCode {
    EmptyInput,
    OutOfRange,
    NotACover,
    NotFar,
    NotFarEnough,
    MeshTooCoarse,
    ArityMismatch,
    BudgetExceeded,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::NotFar: return "NotFar";
    case ErrorCode::NotFarEnough: return "NotFarEnough";
    case ErrorCode::MeshTooCoarse: return "MeshTooCoarse";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

// "p/q" for proper fractions, bare "p" for integers. This is the wire format;
// parse_rational accepts both.
std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

inline Q q_abs(const Q& x) { return x < 0 ? Q(-x) : x; }
inline const Q& q_min(const Q& a, const Q& b) { return b < a ? b : a; }
inline const Q& q_max(const Q& a, const Q& b) { return a < b ? b : a; }

// Smallest integer n with n >= x.
Z q_ceil(const Q& x);

}  // namespace hsdyn
