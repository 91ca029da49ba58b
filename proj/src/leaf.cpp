#include "firstint/leaf.hpp"

#include <algorithm>
#include <cmath>

#include "firstint/power.hpp"

namespace firstint {

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<ComplexF> draw_annulus_levels(std::mt19937_64& rng, int count) {
    std::vector<ComplexF> levels;
    levels.reserve(count);
    while (static_cast<int>(levels.size()) < count) {
        double r = 0.5 + 1.5 * uniform_unit(rng);
        double theta = 2.0 * M_PI * uniform_unit(rng);
        ComplexF c(r * std::cos(theta), r * std::sin(theta));
        bool dup = false;
        for (ComplexF prev : levels)
            if (std::abs(prev - c) < 1e-6) dup = true;
        if (!dup) levels.push_back(c);
    }
    return levels;
}

namespace {

// One slice: roots of P(z1_0, z2) = c in z2, polished, filtered by the leaf residual.
void sample_slice(const Polynomial& p, ComplexF c, ComplexF z1_0, LeafSample& out) {
    std::vector<ComplexF> coeffs = z2_slice_coeffs(p, z1_0);
    coeffs[0] -= c;
    double coeff_scale = 0.0;
    for (ComplexF a : coeffs) coeff_scale = std::max(coeff_scale, std::abs(a));
    if (coeff_scale == 0.0) return;  // the whole vertical line degenerates; skip
    std::size_t top = coeffs.size() - 1;
    while (top > 0 && std::abs(coeffs[top]) <= 1e-12 * coeff_scale) --top;
    if (top < coeffs.size() - 1) ++out.degenerate_slices;
    if (top == 0) return;  // constant slice, c unattained over this z1
    coeffs.resize(top + 1);

    RootSet roots;
    try {
        roots = find_roots(coeffs);
    } catch (const NoConvergenceError&) {
        return;  // slice skipped; EmptyLeafSample fires only if every slice fails
    }
    double tol = kLeafResidualTol * (std::abs(c) + 1.0);
    for (ComplexF z2 : roots.roots) {
        z2 = newton_polish(coeffs, z2, 2);
        ComplexF value;
        try {
            value = eval_numeric(p, z1_0, z2);
        } catch (const NumericOverflowError&) {
            continue;
        }
        double residual = std::abs(value - c);
        if (residual <= tol) {
            out.points.emplace_back(z1_0, z2);
            out.residual_max = std::max(out.residual_max, residual);
        }
    }
}

}  // namespace

LeafSample sample_leaf(const Polynomial& p, ComplexF c, const Grid& grid) {
    if (p.is_constant()) throw ConstantPError();
    LeafSample sample;
    sample.level = c;

    if (!p.depends_on_z2()) {
        // Leaves are unions of vertical lines z1 = root of P(z1) = c.
        std::vector<ComplexF> coeffs = numeric_coeffs_z1(p);
        coeffs[0] -= c;
        RootSet roots;
        try {
            roots = find_roots(coeffs);
        } catch (const NoConvergenceError&) {
            throw EmptyLeafSampleError("root finding failed for the z1-only level equation");
        }
        double tol = kLeafResidualTol * (std::abs(c) + 1.0);
        for (ComplexF z1 : roots.roots) {
            z1 = newton_polish(coeffs, z1, 2);
            ComplexF value = eval_numeric(p, z1, ComplexF(0.0));
            if (std::abs(value - c) > tol) continue;
            for (double r : grid.radii)
                for (int k = 0; k < grid.angles_per_radius; ++k) {
                    double theta = 2.0 * M_PI * k / grid.angles_per_radius;
                    ComplexF z2(r * std::cos(theta), r * std::sin(theta));
                    sample.points.emplace_back(z1, z2);
                    sample.residual_max = std::max(sample.residual_max, std::abs(value - c));
                }
        }
    } else {
        for (double r : grid.radii)
            for (int k = 0; k < grid.angles_per_radius; ++k) {
                double theta = 2.0 * M_PI * k / grid.angles_per_radius;
                ComplexF z1_0(r * std::cos(theta), r * std::sin(theta));
                sample_slice(p, c, z1_0, sample);
            }
    }
    if (sample.points.empty())
        throw EmptyLeafSampleError("no slice produced a point within the residual tolerance");
    return sample;
}

void evaluate_f_on_leaf(const Polynomial& f, LeafSample& sample) {
    sample.f_values.clear();
    sample.f_values.reserve(sample.points.size());
    for (const auto& [z1, z2] : sample.points) sample.f_values.push_back(eval_numeric(f, z1, z2));
    sample.scale = 1.0;
    for (ComplexF v : sample.f_values) sample.scale = std::max(sample.scale, std::abs(v));
    sample.spread = 0.0;
    for (std::size_t i = 0; i < sample.f_values.size(); ++i)
        for (std::size_t j = i + 1; j < sample.f_values.size(); ++j)
            sample.spread = std::max(sample.spread, std::abs(sample.f_values[i] - sample.f_values[j]));
}

std::vector<LevelSpread> leaf_spread_report(const Polynomial& f, const Polynomial& p,
                                            const std::vector<ComplexF>& levels, const Grid& grid) {
    std::vector<LevelSpread> report;
    report.reserve(levels.size());
    for (ComplexF c : levels) {
        LevelSpread row;
        row.level = c;
        try {
            LeafSample sample = sample_leaf(p, c, grid);
            evaluate_f_on_leaf(f, sample);
            row.ok = true;
            row.relative_spread = sample.spread / sample.scale;
        } catch (const std::runtime_error& e) {
            row.error = e.what();
        }
        report.push_back(std::move(row));
    }
    return report;
}

GrowthTable growth_probe(const Polynomial& f, const Polynomial& p, ComplexF c,
                         const std::vector<double>& radii) {
    if (p.is_constant()) throw ConstantPError();
    GrowthTable table;
    for (double radius : radii) {
        Grid grid;
        grid.radii = {radius};
        LeafSample sample;
        try {
            sample = sample_leaf(p, c, grid);
        } catch (const EmptyLeafSampleError& e) {
            table.diagnostics.push_back("radius " + std::to_string(radius) + ": " + e.what());
            continue;
        }
        double max_abs = 0.0;
        bool overflow = false;
        for (const auto& [z1, z2] : sample.points) {
            try {
                max_abs = std::max(max_abs, std::abs(eval_numeric(f, z1, z2)));
            } catch (const NumericOverflowError&) {
                overflow = true;
                break;
            }
        }
        if (overflow) {
            table.overflowed = true;
            table.diagnostics.push_back("radius " + std::to_string(radius) +
                                        ": |f| overflowed (divergence evidence)");
            break;
        }
        table.radii.push_back(radius);
        table.max_abs_f.push_back(max_abs);
    }
    return table;
}

TheoremVerdict theorem_check(const Polynomial& f, const Polynomial& p, const TheoremConfig& config) {
    if (!is_theorem_hypothesis(p))
        throw HypothesisViolatedError("P must be nonconstant and not a power as a power series");

    TheoremVerdict verdict;
    verdict.exact = decompose_exact(f, p);

    std::mt19937_64 rng(config.seed);
    std::vector<ComplexF> levels = draw_annulus_levels(rng, config.num_levels);
    verdict.leaf_spreads = leaf_spread_report(f, p, levels, config.grid);

    bool all_small = true;
    bool any_ok = false;
    for (const auto& row : verdict.leaf_spreads) {
        if (!row.ok) continue;
        any_ok = true;
        if (row.relative_spread > config.spread_tol) all_small = false;
    }
    if (!any_ok) throw LeafSamplingFailedError("every sampled level failed");

    verdict.consistent = verdict.exact.found() == all_small;

    if (!verdict.exact.found()) {
        // Probe the worst level for the growth table attached as refutation evidence.
        ComplexF worst = verdict.leaf_spreads.front().level;
        double worst_spread = -1.0;
        for (const auto& row : verdict.leaf_spreads)
            if (row.ok && row.relative_spread > worst_spread) {
                worst_spread = row.relative_spread;
                worst = row.level;
            }
        verdict.growth = growth_probe(f, p, worst, config.growth_radii);
    }
    return verdict;
}

}  // namespace firstint
