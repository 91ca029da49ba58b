#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace firstint {

// Exact-algebra preconditions.
struct ZeroPolynomialError : std::runtime_error {
    ZeroPolynomialError() : std::runtime_error("operation undefined on the zero polynomial") {}
};
struct BothZeroError : std::runtime_error {
    BothZeroError() : std::runtime_error("gcd of two zero polynomials is undefined") {}
};
struct ConstantPError : std::runtime_error {
    ConstantPError() : std::runtime_error("P must be nonconstant") {}
};

// power_detect.
struct NotAPowerError : std::runtime_error {
    explicit NotAPowerError(const std::string& what) : std::runtime_error(what) {}
};
struct CertificateFailedError : std::runtime_error {
    explicit CertificateFailedError(const std::string& what) : std::runtime_error(what) {}
};

// numeric_kernel.
struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};
struct DegreeZeroError : std::runtime_error {
    DegreeZeroError() : std::runtime_error("root finding needs degree >= 1") {}
};
struct NumericOverflowError : std::runtime_error {
    NumericOverflowError() : std::runtime_error("intermediate magnitude exceeded 1e300") {}
};

// leaf_verify.
struct EmptyLeafSampleError : std::runtime_error {
    explicit EmptyLeafSampleError(const std::string& what) : std::runtime_error(what) {}
};
struct LeafSamplingFailedError : std::runtime_error {
    explicit LeafSamplingFailedError(const std::string& what) : std::runtime_error(what) {}
};
struct HypothesisViolatedError : std::runtime_error {
    explicit HypothesisViolatedError(const std::string& what) : std::runtime_error(what) {}
};

// cli / parser. Spans are byte offsets [begin, end) into the source text.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool operator==(const Span&) const = default;
};

enum class ParseErrorKind { Syntax, NegativeExponent, UnknownVariable, DegreeLimitExceeded };

struct ParseError : std::runtime_error {
    ParseErrorKind kind;
    Span span;
    ParseError(ParseErrorKind kind, Span span, const std::string& what)
        : std::runtime_error(what), kind(kind), span(span) {}
};

}  // namespace firstint
