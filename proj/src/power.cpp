#include "firstint/power.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace firstint {

PowerReport power_order(const Polynomial& p) {
    PowerReport report;
    if (p.is_zero()) {
        report.rho = PowerOrder::inf();  // 0 == 0^m for every m
        return report;
    }
    report.decomposition = squarefree_decomposition(p);
    for (const auto& [g, e] : report.decomposition.factors)
        if (g.constant_term().is_zero()) report.vanishing_exponents.push_back(e);

    if (!p.constant_term().is_zero()) {
        report.rho = PowerOrder::inf();  // unit in the power series ring
        return report;
    }
    long g = 0;
    for (int e : report.vanishing_exponents) g = std::gcd(g, static_cast<long>(e));
    if (g == 0) throw std::logic_error("power_order: no vanishing factor despite P(0,0)=0");
    report.rho = PowerOrder::finite(g);
    return report;
}

bool is_theorem_hypothesis(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return false;
    PowerOrder rho = power_order(p).rho;
    return !rho.infinite && rho.value == 1;
}

namespace {

// Best rational approximation of x with denominator <= max_den (continued fractions
// over the exact binary value of the double), accepted only if it matches x closely.
std::optional<Rational> reconstruct_rational(double x, const mpz_class& max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    Rational exact(x);  // exact binary rational
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;  // h(-2)/k(-2), h(-1)/k(-1)
    Rational rest = exact;
    for (int step = 0; step < 128; ++step) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        Rational frac = rest - Rational(a);
        if (sgn(frac) == 0) break;
        rest = Rational(frac.get_den(), frac.get_num());
        rest.canonicalize();
    }
    if (q1 == 0) return std::nullopt;
    Rational approx = make_rational(p1, q1);
    double err = std::abs(approx.get_d() - x);
    if (err > 1e-9 * std::max(1.0, std::abs(x))) return std::nullopt;
    return approx;
}

}  // namespace

std::vector<GaussianRational> scalar_mth_roots(const GaussianRational& u, int m) {
    if (m < 1) throw std::invalid_argument("scalar_mth_roots: m must be positive");
    std::vector<GaussianRational> out;
    if (u.is_zero()) {
        out.emplace_back();
        return out;
    }
    ComplexF uc = u.to_complex();
    double r = std::pow(std::abs(uc), 1.0 / m);
    double base_arg = std::arg(uc);
    const mpz_class max_den = mpz_class(10000000);
    for (int j = 0; j < m; ++j) {
        double theta = (base_arg + 2.0 * M_PI * j) / m;
        ComplexF cand(r * std::cos(theta), r * std::sin(theta));
        auto re = reconstruct_rational(cand.real(), max_den);
        auto im = reconstruct_rational(cand.imag(), max_den);
        if (!re || !im) continue;
        GaussianRational c(*re, *im);
        if (c.pow(static_cast<unsigned>(m)) == u &&
            std::none_of(out.begin(), out.end(), [&](const GaussianRational& x) { return x == c; }))
            out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const GaussianRational& a, const GaussianRational& b) {
        return lex_less(a, b);
    });
    return out;
}

std::optional<Polynomial> exact_poly_root(const Polynomial& p, int m) {
    if (m < 2) throw std::invalid_argument("exact_poly_root: m must be >= 2");
    if (p.is_zero()) return Polynomial();
    SquarefreeDecomposition dec = squarefree_decomposition(p);
    Polynomial base = Polynomial::one();
    for (const auto& [g, e] : dec.factors) {
        if (e % m != 0) return std::nullopt;
        base *= g.pow(static_cast<unsigned>(e / m));
    }
    std::vector<GaussianRational> units = scalar_mth_roots(dec.unit, m);
    if (units.empty()) return std::nullopt;
    Polynomial q = base.scaled(units.front());
    if (q.pow(static_cast<unsigned>(m)) != p) return std::nullopt;  // defensive; should not trigger
    return q;
}

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

CPoly cn_minus_p(const Polynomial& p, int n) {
    CPoly c(n + 1);
    c[n] = Polynomial::one();
    c[0] = -p;
    return c;
}

namespace {

std::vector<int> prime_divisors(int n) {
    std::vector<int> primes;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

}  // namespace

CnPStatus cn_minus_p_status(const Polynomial& p, int n, int factor_degree_bound) {
    if (p.is_zero()) throw std::invalid_argument("cn_minus_p_status: P must be nonzero");
    if (n < 1) throw std::invalid_argument("cn_minus_p_status: n must be >= 1");

    CnPStatus status;
    status.searched_degree_bound = factor_degree_bound;

    PowerReport report = power_order(p);
    if ((!report.rho.infinite && report.rho.value == 1) || n == 1) {
        status.verdict = CnPStatus::Verdict::IrreducibleCertified;
        return status;
    }

    // X^n - a over a field containing i is reducible iff a is a p-th power for some
    // prime p | n; a Q(i)-polynomial p-th root of P yields an explicit witness via
    // D = C^(n/p):  D^p - Q^p = (D - Q) * sum_j D^j Q^(p-1-j).
    for (int prime : prime_divisors(n)) {
        auto root = exact_poly_root(p, prime);
        if (!root) continue;
        int stride = n / prime;
        CPoly a(stride + 1);
        a[stride] = Polynomial::one();
        a[0] = -*root;
        CPoly b(stride * (prime - 1) + 1);
        for (int j = 0; j < prime; ++j)
            b[stride * j] = root->pow(static_cast<unsigned>(prime - 1 - j));
        if (cpoly_mul(a, b) != cn_minus_p(p, n))
            throw std::logic_error("cn_minus_p_status: witness failed re-multiplication");
        status.verdict = CnPStatus::Verdict::Reducible;
        status.witness = {std::move(a), std::move(b)};
        return status;
    }
    status.verdict = CnPStatus::Verdict::Unknown;
    return status;
}

// ---------------------------------------------------------------------------
// power_certificate: graded expansion of the series m-th root.
// ---------------------------------------------------------------------------

namespace {

// Homogeneous form of degree d as a coefficient vector v, v[k] <-> z1^(d-k) z2^k.
using Form = std::vector<ComplexF>;
// layers[d] is the degree-d homogeneous component (may be empty == zero).
using Layers = std::vector<Form>;

Form form_mul(const Form& a, const Form& b) {
    if (a.empty() || b.empty()) return {};
    Form c(a.size() + b.size() - 1, ComplexF(0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

void layers_accumulate(Layers& acc, const Form& f, int degree) {
    if (f.empty()) return;
    if (static_cast<int>(acc.size()) <= degree) acc.resize(degree + 1);
    if (acc[degree].empty()) acc[degree].assign(degree + 1, ComplexF(0.0));
    for (std::size_t k = 0; k < f.size(); ++k) acc[degree][k] += f[k];
}

Layers layers_mul(const Layers& a, const Layers& b, int max_degree) {
    Layers c;
    for (int da = 0; da < static_cast<int>(a.size()); ++da) {
        if (a[da].empty()) continue;
        for (int db = 0; db < static_cast<int>(b.size()) && da + db <= max_degree; ++db) {
            if (b[db].empty()) continue;
            layers_accumulate(c, form_mul(a[da], b[db]), da + db);
        }
    }
    return c;
}

Layers layers_pow(const Layers& a, int e, int max_degree) {
    Layers acc;
    layers_accumulate(acc, Form{ComplexF(1.0)}, 0);
    for (int i = 0; i < e; ++i) acc = layers_mul(acc, a, max_degree);
    return acc;
}

Layers to_layers(const Polynomial& p, int max_degree) {
    Layers l;
    for (const auto& [mono, c] : p.terms()) {
        int d = mono.total_degree();
        if (d > max_degree) continue;
        if (static_cast<int>(l.size()) <= d) l.resize(d + 1);
        if (l[d].empty()) l[d].assign(d + 1, ComplexF(0.0));
        l[d][mono.e2] += c.to_complex();
    }
    return l;
}

struct Cluster {
    ComplexF center;
    int multiplicity = 0;
};

// Deterministic greedy clustering; centers refined by Newton on the (mult-1)-th
// derivative, where the multiple root becomes simple.
std::vector<Cluster> cluster_roots(std::vector<ComplexF> roots, const std::vector<ComplexF>& poly,
                                   double relative_radius) {
    std::sort(roots.begin(), roots.end(), [](ComplexF a, ComplexF b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    double scale = 1.0;
    for (ComplexF r : roots) scale = std::max(scale, std::abs(r));
    double radius = relative_radius * scale;

    std::vector<Cluster> clusters;
    std::vector<ComplexF> sums;
    for (ComplexF r : roots) {
        bool placed = false;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (std::abs(r - clusters[i].center) <= radius) {
                sums[i] += r;
                ++clusters[i].multiplicity;
                clusters[i].center = sums[i] / double(clusters[i].multiplicity);
                placed = true;
                break;
            }
        }
        if (!placed) {
            clusters.push_back({r, 1});
            sums.push_back(r);
        }
    }
    for (auto& cl : clusters) {
        if (cl.multiplicity <= 1) continue;
        std::vector<ComplexF> d = poly;
        for (int k = 1; k < cl.multiplicity; ++k) {
            std::vector<ComplexF> next;
            next.reserve(d.size());
            for (std::size_t j = 1; j < d.size(); ++j) next.push_back(d[j] * double(j));
            d = std::move(next);
        }
        cl.center = newton_polish(d, cl.center, 10);
    }
    return clusters;
}

}  // namespace

SeriesCertificate power_certificate(const Polynomial& p, int m, int truncation_order,
                                    const CertificateOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("power_certificate: P must be nonzero");
    if (m < 2) throw std::invalid_argument("power_certificate: m must be >= 2");
    PowerReport report = power_order(p);
    if (!report.rho.divisible_by(m))
        throw NotAPowerError("rho(P) = " + std::to_string(report.rho.value) +
                             " is not divisible by m = " + std::to_string(m));

    const int N = truncation_order;
    int nu = p.order();
    if (nu > N)
        throw std::invalid_argument("power_certificate: truncation order below the order of P");
    if (nu % m != 0) throw CertificateFailedError("order of P not divisible by m");
    int mu = nu / m;

    // Exact support of the initial form decides the z1-multiplicity and the
    // dehomogenized polynomial, so no epsilon is involved here.
    Polynomial initial = p.homogeneous_part(nu);
    int k_max = 0;
    for (const auto& [mono, c] : initial.terms()) k_max = std::max(k_max, mono.e2);
    int z1_mult = nu - k_max;
    if (z1_mult % m != 0)
        throw CertificateFailedError("z1-multiplicity of the initial form not divisible by m");

    std::vector<ComplexF> dehom(k_max + 1, ComplexF(0.0));
    for (const auto& [mono, c] : initial.terms()) dehom[mono.e2] = c.to_complex();

    // q0 = a^(1/m) * z1^(z1_mult/m) * prod (z2 - center*z1)^(mult/m)
    Form q0{std::pow(dehom.back(), 1.0 / m)};
    int q0_degree = z1_mult / m;
    if (k_max >= 1) {
        RootSet rs = find_roots(dehom);
        auto clusters = cluster_roots(rs.roots, dehom, opts.cluster_radius);
        for (const auto& cl : clusters) {
            if (cl.multiplicity % m != 0)
                throw CertificateFailedError(
                    "initial-form root multiplicities are not all divisible by m");
            Form lin{-cl.center, ComplexF(1.0)};
            for (int k = 0; k < cl.multiplicity / m; ++k) q0 = form_mul(q0, lin);
            q0_degree += cl.multiplicity / m;
        }
    }
    q0.resize(mu + 1, ComplexF(0.0));  // pad the implicit z1 power
    if (q0_degree != mu) throw CertificateFailedError("inconsistent initial root degree");

    Layers p_layers = to_layers(p, N);
    auto p_layer = [&](int d) -> Form {
        if (d < static_cast<int>(p_layers.size()) && !p_layers[d].empty()) return p_layers[d];
        return Form(d + 1, ComplexF(0.0));
    };

    // Divisor for every layer step: B = m * q0^(m-1).
    Form divisor{ComplexF(1.0)};
    for (int k = 0; k < m - 1; ++k) divisor = form_mul(divisor, q0);
    for (auto& c : divisor) c *= double(m);
    int top_b = static_cast<int>(divisor.size()) - 1;
    while (top_b > 0 && std::abs(divisor[top_b]) == 0.0) --top_b;

    Layers root_layers;
    layers_accumulate(root_layers, q0, mu);

    for (int j = 1; j <= N - nu; ++j) {
        Layers power = layers_pow(root_layers, m, nu + j);
        Form target = p_layer(nu + j);
        if (nu + j < static_cast<int>(power.size()) && !power[nu + j].empty())
            for (std::size_t k = 0; k < target.size(); ++k) target[k] -= power[nu + j][k];

        double max_t = 0.0;
        for (ComplexF c : target) max_t = std::max(max_t, std::abs(c));
        if (max_t == 0.0) continue;
        int top_t = static_cast<int>(target.size()) - 1;
        while (top_t > 0 && std::abs(target[top_t]) <= 1e-13 * max_t) --top_t;
        if (top_t < top_b || top_t - top_b > mu + j)
            throw CertificateFailedError("homogeneous division failed at layer " +
                                         std::to_string(nu + j));

        // Synthetic division of t-polynomials; the remainder feeds the final residual.
        Form quotient(top_t - top_b + 1, ComplexF(0.0));
        Form rem(target.begin(), target.begin() + top_t + 1);
        for (int k = top_t - top_b; k >= 0; --k) {
            ComplexF f = rem[k + top_b] / divisor[top_b];
            quotient[k] = f;
            for (int i = 0; i <= top_b; ++i) rem[k + i] -= f * divisor[i];
        }
        quotient.resize(mu + j + 1, ComplexF(0.0));
        layers_accumulate(root_layers, quotient, mu + j);
    }

    // Residual of root^m - P over total degrees <= N, relative to max |P| coefficient.
    Layers recomposed = layers_pow(root_layers, m, N);
    double p_scale = 0.0;
    for (const auto& layer : p_layers)
        for (ComplexF c : layer) p_scale = std::max(p_scale, std::abs(c));
    if (p_scale == 0.0) p_scale = 1.0;
    double residual = 0.0;
    for (int d = 0; d <= N; ++d) {
        Form diff = p_layer(d);
        if (d < static_cast<int>(recomposed.size()) && !recomposed[d].empty())
            for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= recomposed[d][k];
        else
            for (auto& c : diff) c = -c;
        for (ComplexF c : diff) residual = std::max(residual, std::abs(c));
    }
    residual /= p_scale;

    SeriesCertificate cert;
    cert.m = m;
    cert.truncation_order = N;
    cert.residual = residual;
    double root_scale = 0.0;
    for (const auto& layer : root_layers)
        for (ComplexF c : layer) root_scale = std::max(root_scale, std::abs(c));
    for (int d = 0; d < static_cast<int>(root_layers.size()); ++d) {
        if (root_layers[d].empty()) continue;
        for (int k = 0; k <= d; ++k) {
            ComplexF c = root_layers[d][k];
            if (std::abs(c) > 1e-13 * root_scale)
                cert.root.emplace_back(Monomial{d - k, k}, c);
        }
    }
    if (!(residual <= opts.tolerance))
        throw CertificateFailedError("certificate residual " + std::to_string(residual) +
                                     " exceeds tolerance");
    return cert;
}

}  // namespace firstint
