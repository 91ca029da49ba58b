#pragma once

#include <map>
#include <utility>
#include <vector>

#include "firstint/errors.hpp"
#include "firstint/rational.hpp"

namespace firstint {

/// Exponent pair of one term z1^e1 * z2^e2. Ordered z1-major (lexicographic).
struct Monomial {
    int e1 = 0;
    int e2 = 0;
    auto operator<=>(const Monomial&) const = default;
    Monomial operator*(const Monomial& o) const { return {e1 + o.e1, e2 + o.e2}; }
    int total_degree() const { return e1 + e2; }
};

/// Sparse exact bivariate polynomial over Q(i). No zero coefficient is ever stored;
/// the zero polynomial is the empty map.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default;

    static Polynomial constant(GaussianRational c) {
        Polynomial p;
        p.add_term({0, 0}, std::move(c));
        return p;
    }
    static Polynomial one() { return constant(GaussianRational(1)); }
    static Polynomial z1() { return term({1, 0}, GaussianRational(1)); }
    static Polynomial z2() { return term({0, 1}, GaussianRational(1)); }
    static Polynomial term(Monomial m, GaussianRational c) {
        Polynomial p;
        p.add_term(m, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }
    std::size_t term_count() const { return terms_.size(); }

    GaussianRational coeff(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    GaussianRational constant_term() const { return coeff({0, 0}); }

    /// Accumulate c into the coefficient of m, dropping the term if it cancels.
    void add_term(Monomial m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const GaussianRational& s) const {
        Polynomial r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    /// Exact k-th power; pow(0) == 1 including for the zero polynomial.
    Polynomial pow(unsigned k) const {
        Polynomial acc = one();
        Polynomial base = *this;
        while (k) {
            if (k & 1u) acc *= base;
            if (k >>= 1u) base *= base;
        }
        return acc;
    }

    int total_degree() const {
        if (is_zero()) throw ZeroPolynomialError();
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    int order() const {
        if (is_zero()) throw ZeroPolynomialError();
        int d = terms_.begin()->first.total_degree();
        for (const auto& [m, c] : terms_) d = std::min(d, m.total_degree());
        return d;
    }
    int degree_z1() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e1);
        return d;
    }
    int degree_z2() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e2);
        return d;
    }
    bool depends_on_z2() const { return degree_z2() > 0; }

    /// Sum of terms of total degree exactly d.
    Polynomial homogeneous_part(int d) const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == d) r.terms_.emplace(m, c);
        return r;
    }

    /// Largest exponent pair in z1-major lexicographic order, and its coefficient.
    std::pair<Monomial, GaussianRational> lex_leading() const {
        if (is_zero()) throw ZeroPolynomialError();
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    Polynomial derivative_z1() const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.e1 > 0) r.terms_.emplace(Monomial{m.e1 - 1, m.e2}, c * GaussianRational(m.e1));
        return r;
    }
    Polynomial derivative_z2() const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.e2 > 0) r.terms_.emplace(Monomial{m.e1, m.e2 - 1}, c * GaussianRational(m.e2));
        return r;
    }

    /// Exact value by substitution (Horner in z2 over Horner-in-z1 coefficients).
    GaussianRational evaluate(const GaussianRational& z1, const GaussianRational& z2) const;

    /// Coefficient of z2^k as a polynomial in z1 alone.
    Polynomial z2_coefficient(int k) const {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.e2 == k) r.terms_.emplace(Monomial{m.e1, 0}, c);
        return r;
    }

    /// Deterministic total order (term lists compared lex-descending); for sorting outputs.
    friend bool canonical_less(const Polynomial& a, const Polynomial& b);

  private:
    TermMap terms_;
};

struct DegreeData {
    int total_degree = 0;
    int order = 0;
    Polynomial leading_form;
    Polynomial initial_form;
};

/// total/order degrees plus homogeneous leading and initial forms. Throws on zero input.
DegreeData degree_data(const Polynomial& p);

/// Exact dense univariate polynomial over Q(i); trailing zeros trimmed,
/// index = exponent. Houses h and the C^n - P gadgets.
class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    static UnivariatePoly constant(GaussianRational c) {
        return UnivariatePoly(std::vector<GaussianRational>{std::move(c)});
    }
    static UnivariatePoly variable() {
        return UnivariatePoly({GaussianRational(0), GaussianRational(1)});
    }

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero poly
    GaussianRational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : GaussianRational();
    }
    GaussianRational leading() const { return is_zero() ? GaussianRational() : coeffs_.back(); }

    bool operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UnivariatePoly& o) const { return !(*this == o); }

    UnivariatePoly operator-() const {
        UnivariatePoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    UnivariatePoly scaled(const GaussianRational& s) const;

    GaussianRational evaluate(const GaussianRational& x) const {
        GaussianRational acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UnivariatePoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<GaussianRational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = coeffs_[k] * GaussianRational(static_cast<long>(k));
        return UnivariatePoly(std::move(d));
    }

    /// Euclidean division a = q*b + r over the field Q(i); b nonzero.
    static void divmod(const UnivariatePoly& a, const UnivariatePoly& b, UnivariatePoly& q,
                       UnivariatePoly& r);

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

  private:
    std::vector<GaussianRational> coeffs_;
};

/// Monic gcd over Q(i)[x] by the Euclidean algorithm; gcd(0, 0) == 0.
UnivariatePoly gcd_univariate(UnivariatePoly a, UnivariatePoly b);

}  // namespace firstint
