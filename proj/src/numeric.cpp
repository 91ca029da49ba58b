#include "firstint/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace firstint {

namespace {

constexpr double kOverflowLimit = 1e300;

void check_magnitude(ComplexF v) {
    if (!(std::abs(v.real()) <= kOverflowLimit) || !(std::abs(v.imag()) <= kOverflowLimit))
        throw NumericOverflowError();
}

}  // namespace

ComplexF eval_numeric(const Polynomial& p, ComplexF z1, ComplexF z2) {
    if (p.is_zero()) return {};
    int dz2 = p.degree_z2();
    std::vector<std::vector<ComplexF>> by_z2(dz2 + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& row = by_z2[m.e2];
        if (static_cast<int>(row.size()) <= m.e1) row.resize(m.e1 + 1);
        row[m.e1] = c.to_complex();
    }
    ComplexF acc = 0.0;
    for (int k = dz2; k >= 0; --k) {
        ComplexF row_val = 0.0;
        const auto& row = by_z2[k];
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            row_val = row_val * z1 + *it;
            check_magnitude(row_val);
        }
        acc = acc * z2 + row_val;
        check_magnitude(acc);
    }
    return acc;
}

std::vector<ComplexF> z2_slice_coeffs(const Polynomial& p, ComplexF z1_0) {
    std::vector<ComplexF> coeffs(p.degree_z2() + 1, ComplexF(0.0));
    int dz1 = p.degree_z1();
    std::vector<std::vector<ComplexF>> rows(coeffs.size(), std::vector<ComplexF>(dz1 + 1));
    for (const auto& [m, c] : p.terms()) rows[m.e2][m.e1] = c.to_complex();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        ComplexF v = 0.0;
        for (auto it = rows[k].rbegin(); it != rows[k].rend(); ++it) v = v * z1_0 + *it;
        coeffs[k] = v;
    }
    return coeffs;
}

std::vector<ComplexF> numeric_coeffs_z1(const Polynomial& p) {
    std::vector<ComplexF> coeffs(p.is_zero() ? 1 : p.degree_z1() + 1, ComplexF(0.0));
    for (const auto& [m, c] : p.terms()) coeffs[m.e1] = c.to_complex();
    return coeffs;
}

ComplexF eval_poly(const std::vector<ComplexF>& coeffs, ComplexF z) {
    ComplexF acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexF newton_polish(const std::vector<ComplexF>& coeffs, ComplexF z, int steps) {
    std::vector<ComplexF> deriv;
    deriv.reserve(coeffs.size());
    for (std::size_t k = 1; k < coeffs.size(); ++k) deriv.push_back(coeffs[k] * double(k));
    for (int s = 0; s < steps; ++s) {
        ComplexF dp = eval_poly(deriv, z);
        if (std::abs(dp) < 1e-280) break;
        z -= eval_poly(coeffs, z) / dp;
    }
    return z;
}

RootSet find_roots(const std::vector<ComplexF>& coeffs, const RootFindOptions& opts) {
    std::vector<ComplexF> a = coeffs;
    while (!a.empty() && a.back() == ComplexF(0.0)) a.pop_back();
    int degree = static_cast<int>(a.size()) - 1;
    if (degree < 1) throw DegreeZeroError();

    double coeff_scale = 0.0;
    for (ComplexF c : coeffs) coeff_scale = std::max(coeff_scale, std::abs(c));

    // Monic normalization for the iteration.
    ComplexF lead = a.back();
    std::vector<ComplexF> monic(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) monic[k] = a[k] / lead;

    double radius = 0.0;
    for (int k = 0; k < degree; ++k) radius = std::max(radius, std::abs(monic[k]));
    radius += 1.0;

    constexpr double kAngleOffset = 0.70710678118654752;  // irrational rotation
    std::vector<ComplexF> z(degree);
    for (int k = 0; k < degree; ++k) {
        double theta = 2.0 * M_PI * k / degree + kAngleOffset;
        z[k] = radius * ComplexF(std::cos(theta), std::sin(theta));
    }

    bool update_converged = false;
    for (int iter = 0; iter < opts.max_iterations && !update_converged; ++iter) {
        double max_update = 0.0;
        double pos_scale = 1.0;
        for (int i = 0; i < degree; ++i) pos_scale = std::max(pos_scale, std::abs(z[i]));
        for (int i = 0; i < degree; ++i) {
            ComplexF denom = 1.0;
            for (int j = 0; j < degree; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (denom == ComplexF(0.0)) {
                // Collided estimates; nudge deterministically.
                z[i] += ComplexF(1e-8, 1e-8) * (1.0 + std::abs(z[i]));
                max_update = radius;
                continue;
            }
            ComplexF w = eval_poly(monic, z[i]) / denom;
            z[i] -= w;
            max_update = std::max(max_update, std::abs(w));
        }
        update_converged = max_update < opts.tol * pos_scale;
    }

    for (int i = 0; i < degree; ++i) z[i] = newton_polish(a, z[i], 3);

    // Cluster sizes for the multiple-root residual relaxation.
    double pos_scale = 1.0;
    for (int i = 0; i < degree; ++i) pos_scale = std::max(pos_scale, std::abs(z[i]));
    std::vector<int> cluster_size(degree, 1);
    for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j)
            if (j != i && std::abs(z[i] - z[j]) <= opts.cluster_radius * pos_scale)
                ++cluster_size[i];

    RootSet out;
    out.roots = z;
    out.residuals.resize(degree);
    double res_scale = coeff_scale > 0.0 ? coeff_scale : 1.0;
    for (int i = 0; i < degree; ++i) {
        out.residuals[i] = std::abs(eval_poly(a, z[i])) / res_scale;
        double limit = cluster_size[i] > 1 ? opts.relaxed_residual : opts.tol;
        if (!(out.residuals[i] <= limit))
            throw NoConvergenceError("root residual " + std::to_string(out.residuals[i]) +
                                     " above tolerance after iteration cap");
        if (!std::isfinite(z[i].real()) || !std::isfinite(z[i].imag()))
            throw NoConvergenceError("non-finite root estimate");
    }
    return out;
}

}  // namespace firstint
