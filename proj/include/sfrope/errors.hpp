#ifndef SFROPE_ERRORS_HPP
#define SFROPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfrope {

/// Stable error categories, mirrored one-to-one by the C API status codes.
enum class ErrorCode {
    io = 1,
    not_coprime = 2,
    invalid_argument = 3,
    parse = 4,
    construction_failed = 5,
    degenerate_input = 6,
    internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Two or more of the three circumradius inputs coincide.
struct DegenerateTripleError : Error {
    explicit DegenerateTripleError(const std::string& what)
        : Error(ErrorCode::degenerate_input, what) {}
};

/// Curve parameter outside the arc's parameter interval.
struct ParamOutOfRangeError : Error {
    explicit ParamOutOfRangeError(const std::string& what)
        : Error(ErrorCode::invalid_argument, what) {}
};

/// Fewer than three samples, or otherwise unusable sampled curve.
struct TooFewPointsError : Error {
    explicit TooFewPointsError(const std::string& what)
        : Error(ErrorCode::invalid_argument, what) {}
};

struct InvalidThetaError : Error {
    explicit InvalidThetaError(const std::string& what)
        : Error(ErrorCode::invalid_argument, what) {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& what)
        : Error(ErrorCode::invalid_argument, what) {}
};

struct InvalidKError : Error {
    explicit InvalidKError(const std::string& what)
        : Error(ErrorCode::invalid_argument, what) {}
};

/// gcd(n, k) != 1: the seam permutation splits into several closed components.
/// Carries the component count as a diagnostic.
struct NotCoprimeError : Error {
    NotCoprimeError(int n, int k, int components)
        : Error(ErrorCode::not_coprime,
                "(" + std::to_string(n) + ", " + std::to_string(k) +
                    ") is not coprime; construction yields " + std::to_string(components) +
                    " components"),
          component_count(components) {}
    int component_count;
};

/// An open-curve candidate failed one of its validation gates.
/// `gate` names the failing check, `detail` the witness.
struct ConstructionFailedError : Error {
    ConstructionFailedError(const std::string& gate, const std::string& detail)
        : Error(ErrorCode::construction_failed, "construction gate '" + gate + "' failed: " + detail),
          gate(gate), detail(detail) {}
    std::string gate;
    std::string detail;
};

/// Hotelling/Weyl tube-area comparison is defined for closed centerlines only.
struct OpenCurveUnsupportedError : Error {
    explicit OpenCurveUnsupportedError(const std::string& what)
        : Error(ErrorCode::invalid_argument, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorCode::io, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(ErrorCode::internal, what) {}
};

} // namespace sfrope

#endif
