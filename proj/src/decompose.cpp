#include "firstint/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "firstint/leaf.hpp"

namespace firstint {

Polynomial compose(const UnivariatePoly& h, const Polynomial& p) {
    Polynomial acc;
    for (int k = h.degree(); k >= 0; --k) {
        acc = acc * p;
        acc += Polynomial::constant(h.coeff(k));
    }
    return acc;
}

DecompositionResult decompose_exact(const Polynomial& f, const Polynomial& p) {
    if (p.is_constant()) throw ConstantPError();

    DecompositionResult result;
    if (f.is_constant()) {
        result.outcome = DecompositionResult::Outcome::Found;
        result.h = UnivariatePoly::constant(f.constant_term());
        return result;
    }

    const int dp = p.total_degree();
    const int df = f.total_degree();
    if (df % dp != 0) {
        result.reason = DecompositionResult::Reason::DegreeMismatch;
        return result;
    }
    const int dh = df / dp;

    std::vector<GaussianRational> h_coeffs(dh + 1);
    const Polynomial lead_p = p.homogeneous_part(dp);

    // Cache P^k; peeling consumes them from the top degree down.
    std::vector<Polynomial> p_pow(dh + 1);
    p_pow[0] = Polynomial::one();
    for (int k = 1; k <= dh; ++k) p_pow[k] = p_pow[k - 1] * p;

    Polynomial r = f;
    bool first = true;
    while (!r.is_zero()) {
        if (r.is_constant()) {
            h_coeffs[0] = r.constant_term();
            break;
        }
        int dr = r.total_degree();
        if (dr % dp != 0) {
            result.reason = first ? DecompositionResult::Reason::DegreeMismatch
                                  : DecompositionResult::Reason::ResidualNonzero;
            return result;
        }
        int k = dr / dp;
        // leading_form(h(P)) = a_k * leading_form(P)^k; read a_k off one monomial
        // and verify the whole homogeneous identity.
        Polynomial lead_r = r.homogeneous_part(dr);
        Polynomial lead_pk = lead_p.pow(static_cast<unsigned>(k));
        auto [mono, c_pk] = lead_pk.lex_leading();
        GaussianRational a_k = lead_r.coeff(mono) / c_pk;
        if (a_k.is_zero() || lead_pk.scaled(a_k) != lead_r) {
            result.reason = DecompositionResult::Reason::LeadingFormMismatch;
            return result;
        }
        h_coeffs[k] = a_k;
        r -= p_pow[k].scaled(a_k);
        first = false;
    }

    result.outcome = DecompositionResult::Outcome::Found;
    result.reason = DecompositionResult::Reason::None;
    result.h = UnivariatePoly(std::move(h_coeffs));
    return result;
}

namespace {

// First sampled point of the level curve P = c, using progressively coarser grids.
std::pair<ComplexF, ComplexF> point_on_leaf(const Polynomial& p, ComplexF c) {
    for (const Grid& grid : {Grid{{1.0}, 6}, Grid{{2.0, 0.5}, 8}}) {
        try {
            LeafSample sample = sample_leaf(p, c, grid);
            return sample.points.front();
        } catch (const EmptyLeafSampleError&) {
            continue;
        }
    }
    throw LeafSamplingFailedError("no point found on the level curve");
}

}  // namespace

HNumeric reconstruct_h_numeric(const Polynomial& f, const Polynomial& p, int degree_hint,
                               std::uint64_t seed) {
    if (p.is_constant()) throw ConstantPError();
    if (degree_hint < 0) throw std::invalid_argument("degree_hint must be >= 0");

    const int n_nodes = degree_hint + 1;
    const int n_validate = degree_hint + 3;
    std::mt19937_64 rng(seed);
    std::vector<ComplexF> levels = draw_annulus_levels(rng, n_nodes + n_validate);

    std::vector<ComplexF> values(levels.size());
    double value_scale = 1.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        auto [z1, z2] = point_on_leaf(p, levels[i]);
        values[i] = eval_numeric(f, z1, z2);
        value_scale = std::max(value_scale, std::abs(values[i]));
    }

    // Newton divided differences on the first n_nodes levels.
    std::vector<ComplexF> nodes(levels.begin(), levels.begin() + n_nodes);
    std::vector<ComplexF> dd(values.begin(), values.begin() + n_nodes);
    for (int level = 1; level < n_nodes; ++level)
        for (int i = n_nodes - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);

    // Expand the Newton form into monomial coefficients.
    std::vector<ComplexF> coeffs(n_nodes, ComplexF(0.0));
    std::vector<ComplexF> basis{ComplexF(1.0)};  // prod (x - nodes[j]) so far
    coeffs[0] = dd[0];
    for (int k = 1; k < n_nodes; ++k) {
        std::vector<ComplexF> next(basis.size() + 1, ComplexF(0.0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            next[j + 1] += basis[j];
            next[j] -= basis[j] * nodes[k - 1];
        }
        basis = std::move(next);
        for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[k] * basis[j];
    }

    HNumeric out;
    out.coeffs = std::move(coeffs);
    for (int i = n_nodes; i < static_cast<int>(levels.size()); ++i) {
        ComplexF predicted = eval_poly(out.coeffs, levels[i]);
        out.residual = std::max(out.residual, std::abs(predicted - values[i]) / value_scale);
    }
    return out;
}

}  // namespace firstint
