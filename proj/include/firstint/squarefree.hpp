#pragma once

#include <vector>

#include "firstint/gcd.hpp"
#include "firstint/polynomial.hpp"

namespace firstint {

/// P == unit * prod factors[j].first ^ factors[j].second, with squarefree,
/// pairwise coprime, lex-monic factors. Constant P has an empty factor list.
struct SquarefreeDecomposition {
    GaussianRational unit;
    std::vector<std::pair<Polynomial, int>> factors;

    Polynomial expand() const {
        Polynomial p = Polynomial::constant(unit);
        for (const auto& [g, e] : factors) p *= g.pow(static_cast<unsigned>(e));
        return p;
    }
};

/// Yun's characteristic-0 scheme in z2 on the z2-primitive part, combined with a
/// univariate Yun decomposition of the z1-content. Deterministic (factors sorted
/// canonically). Throws ZeroPolynomialError on P == 0.
SquarefreeDecomposition squarefree_decomposition(const Polynomial& p);

}  // namespace firstint
