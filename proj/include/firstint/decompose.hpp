#pragma once

#include <cstdint>
#include <vector>

#include "firstint/numeric.hpp"
#include "firstint/polynomial.hpp"

namespace firstint {

/// Outcome of the exact search for h with f == h(P).
struct DecompositionResult {
    enum class Outcome { Found, NotDecomposable };
    enum class Reason { None, DegreeMismatch, LeadingFormMismatch, ResidualNonzero };

    Outcome outcome = Outcome::NotDecomposable;
    Reason reason = Reason::None;
    UnivariatePoly h;  // meaningful only when Found

    bool found() const { return outcome == Outcome::Found; }
};

/// Exact expansion of sum a_k P^k (Horner in the polynomial ring).
Polynomial compose(const UnivariatePoly& h, const Polynomial& p);

/// Peeling: extract the leading coefficient of h from the leading forms, subtract,
/// recurse on the remainder. When Found, compose(h, P) == f exactly.
/// Throws ConstantPError.
DecompositionResult decompose_exact(const Polynomial& f, const Polynomial& p);

struct HNumeric {
    std::vector<ComplexF> coeffs;  // index = exponent
    double residual = 0.0;         // relative, over a disjoint validation level set
};

/// Reads h off the leaves: one point on each of degree_hint+1 random level curves
/// P = c gives pairs (c, f at the point); interpolation plus validation on fresh
/// levels. Deterministic for a fixed seed. Throws LeafSamplingFailedError, ConstantPError.
HNumeric reconstruct_h_numeric(const Polynomial& f, const Polynomial& p, int degree_hint,
                               std::uint64_t seed = 0);

}  // namespace firstint
