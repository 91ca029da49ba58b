#pragma once

#include <optional>
#include <vector>

#include "firstint/numeric.hpp"
#include "firstint/polynomial.hpp"
#include "firstint/squarefree.hpp"

namespace firstint {

/// Maximal m such that P is an m-th power in C[[z1, z2]]; infinite for P == 0 and
/// for units (nonzero constant term), which admit every root.
struct PowerOrder {
    bool infinite = false;
    long value = 1;

    static PowerOrder inf() { return {true, 0}; }
    static PowerOrder finite(long v) { return {false, v}; }
    bool divisible_by(long m) const { return infinite || (value % m == 0); }
    bool operator==(const PowerOrder&) const = default;
};

struct PowerReport {
    PowerOrder rho;
    std::vector<int> vanishing_exponents;  // exponents of squarefree factors vanishing at 0
    SquarefreeDecomposition decomposition;
};

/// Decide the theorem hypothesis data: P is an m-th power as a power series iff
/// m divides every exponent of a squarefree factor vanishing at the origin.
PowerReport power_order(const Polynomial& p);

/// true iff P != 0, P nonconstant, and rho(P) == 1 ("not a power").
bool is_theorem_hypothesis(const Polynomial& p);

/// Truncated numeric m-th root in C[[z1, z2]] with the relative residual of
/// root^m - P over total degrees <= truncation_order.
struct SeriesCertificate {
    int m = 2;
    int truncation_order = 12;
    std::vector<std::pair<Monomial, ComplexF>> root;
    double residual = 0.0;
};

struct CertificateOptions {
    double tolerance = 1e-9;        // relative residual acceptance
    double cluster_radius = 1e-6;   // relative grouping radius for initial-form roots
};

/// Graded expansion: numeric factorization of the initial form, m-th root form q0,
/// then homogeneous layers via division against m*q0^(m-1).
/// Throws NotAPowerError when m does not divide rho, CertificateFailedError on
/// numeric breakdown (never a mathematical refutation).
SeriesCertificate power_certificate(const Polynomial& p, int m, int truncation_order = 12,
                                    const CertificateOptions& opts = {});

/// Polynomial in C with Polynomial coefficients; index = C-exponent.
using CPoly = std::vector<Polynomial>;

CPoly cpoly_mul(const CPoly& a, const CPoly& b);

/// Verdict on irreducibility of C^n - P in C[z1, z2, C].
struct CnPStatus {
    enum class Verdict { IrreducibleCertified, Reducible, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<std::pair<CPoly, CPoly>> witness;  // product is exactly C^n - P
    int searched_degree_bound = 0;
};

/// One-sided: rho == 1 certifies irreducibility; otherwise a witness search runs
/// (exact p-th roots of P over Q(i) for primes p | n) and Unknown is an honest verdict.
CnPStatus cn_minus_p_status(const Polynomial& p, int n, int factor_degree_bound);

/// Exact Q with Q^m == P over Q(i), via squarefree structure; nullopt if none found.
std::optional<Polynomial> exact_poly_root(const Polynomial& p, int m);

/// All c in Q(i) with c^m == u, found by numeric candidates plus continued-fraction
/// reconstruction; every returned value is exactly verified.
std::vector<GaussianRational> scalar_mth_roots(const GaussianRational& u, int m);

/// C^n - P as a CPoly (monic of C-degree n).
CPoly cn_minus_p(const Polynomial& p, int n);

}  // namespace firstint
