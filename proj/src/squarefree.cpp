#include "firstint/squarefree.hpp"

#include <algorithm>
#include <stdexcept>

namespace firstint {

namespace {

// Yun over Q(i)[z1, z2] with derivative d; valid when every repeated irreducible
// factor of f has a nonzero d-image, which holds for the z2-derivative on
// z2-primitive inputs and for the z1-derivative on z1-only inputs.
template <typename Deriv>
void yun(const Polynomial& f, Deriv d, std::vector<std::pair<Polynomial, int>>& out) {
    Polynomial fp = d(f);
    if (fp.is_zero()) {
        // f is constant in the active variable; nothing to decompose.
        if (!f.is_constant()) throw std::logic_error("yun: vanishing derivative on nonconstant input");
        return;
    }
    Polynomial g = gcd_bivariate(f, fp);
    Polynomial c = divide_exact(f, g);
    Polynomial w = divide_exact(fp, g) - d(c);
    int multiplicity = 1;
    while (!c.is_constant()) {
        Polynomial gi = gcd_bivariate(c, w);
        if (!gi.is_constant()) out.emplace_back(normalize_lex(gi), multiplicity);
        c = divide_exact(c, gi);
        w = divide_exact(w, gi) - d(c);
        ++multiplicity;
    }
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    SquarefreeDecomposition result;
    if (p.is_constant()) {
        result.unit = p.constant_term();
        return result;
    }

    // Split off the z1-content so that the z2-derivative Yun pass below only sees
    // factors of positive z2-degree.
    Polynomial cont = content_z2(p);
    Polynomial pp = divide_exact(p, cont);

    if (!cont.is_constant())
        yun(cont, [](const Polynomial& q) { return q.derivative_z1(); }, result.factors);
    if (!pp.is_constant())
        yun(pp, [](const Polynomial& q) { return q.derivative_z2(); }, result.factors);

    std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return canonical_less(a.first, b.first);
    });

    // Factors are lex-monic and the lex order is multiplicative, so the unit is
    // the lex-leading coefficient of p.
    result.unit = p.lex_leading().second;
    return result;
}

}  // namespace firstint
