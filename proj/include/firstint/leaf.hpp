#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "firstint/decompose.hpp"
#include "firstint/numeric.hpp"
#include "firstint/polynomial.hpp"

namespace firstint {

struct Grid {
    std::vector<double> radii = {1.0, 2.0, 4.0, 8.0};
    int angles_per_radius = 16;
};

// Points accepted only with |P(point) - c| <= kLeafResidualTol * (|c| + 1).
inline constexpr double kLeafResidualTol = 1e-8;
inline constexpr double kSpreadTol = 1e-8;

/// Numerically sampled points of one level curve P = c.
struct LeafSample {
    ComplexF level;
    std::vector<std::pair<ComplexF, ComplexF>> points;  // (z1, z2) on the curve
    std::vector<ComplexF> f_values;                     // filled by evaluate_f_on_leaf
    double spread = 0.0;        // max pairwise |f_i - f_j|
    double scale = 1.0;         // max(1, max |f_i|)
    double residual_max = 0.0;  // max |P(point) - c|
    int degenerate_slices = 0;  // slices with a vanishing z2-leading coefficient
};

/// Slice sampling of the curve P = c over the grid. For z1-only P the leaves are
/// unions of vertical lines and the grid values serve as z2 coordinates.
/// Throws ConstantPError, EmptyLeafSampleError.
LeafSample sample_leaf(const Polynomial& p, ComplexF c, const Grid& grid = {});

/// Evaluate f on the sample points and fill f_values/spread/scale.
void evaluate_f_on_leaf(const Polynomial& f, LeafSample& sample);

struct LevelSpread {
    ComplexF level;
    bool ok = false;
    double relative_spread = 0.0;
    std::string error;  // failure marker when !ok
};

/// Relative spread (spread/scale) of f per level; failing levels are marked, not omitted.
std::vector<LevelSpread> leaf_spread_report(const Polynomial& f, const Polynomial& p,
                                            const std::vector<ComplexF>& levels,
                                            const Grid& grid = {});

/// max |f| on the leaf restricted to slices |z1| = radius, per radius. Overflow is
/// recorded as divergence evidence; radii whose slice sampling fails are skipped
/// with a diagnostic.
struct GrowthTable {
    std::vector<double> radii;
    std::vector<double> max_abs_f;
    bool overflowed = false;
    std::vector<std::string> diagnostics;
};

GrowthTable growth_probe(const Polynomial& f, const Polynomial& p, ComplexF c,
                         const std::vector<double>& radii);

struct TheoremConfig {
    int num_levels = 8;
    Grid grid;
    double spread_tol = kSpreadTol;
    std::uint64_t seed = 0;
    std::vector<double> growth_radii = {1.0, 10.0, 100.0};
};

/// Exact decomposition side by side with the per-leaf constancy measurements;
/// consistent == (Found <=> every sampled generic leaf has relative spread <= tol).
struct TheoremVerdict {
    DecompositionResult exact;
    std::vector<LevelSpread> leaf_spreads;
    bool consistent = false;
    std::optional<GrowthTable> growth;  // refutation evidence for NotDecomposable
};

/// Throws HypothesisViolatedError when P is constant, a power, or zero.
TheoremVerdict theorem_check(const Polynomial& f, const Polynomial& p,
                             const TheoremConfig& config = {});

/// Seeded draws from the annulus 0.5 <= |c| <= 2, pairwise distinct.
std::vector<ComplexF> draw_annulus_levels(std::mt19937_64& rng, int count);

/// Uniform double in [0, 1) from the engine; fixed mapping for cross-platform determinism.
double uniform_unit(std::mt19937_64& rng);

}  // namespace firstint
