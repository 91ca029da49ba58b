#include "firstint/polynomial.hpp"

#include <algorithm>

namespace firstint {

GaussianRational Polynomial::evaluate(const GaussianRational& z1, const GaussianRational& z2) const {
    if (is_zero()) return {};
    // Horner in z2; each z2-coefficient is itself Horner-evaluated in z1.
    int dz2 = degree_z2();
    std::vector<std::vector<GaussianRational>> by_z2(dz2 + 1);
    for (const auto& [m, c] : terms_) {
        auto& row = by_z2[m.e2];
        if (static_cast<int>(row.size()) <= m.e1) row.resize(m.e1 + 1);
        row[m.e1] = c;
    }
    GaussianRational acc;
    for (int k = dz2; k >= 0; --k) {
        GaussianRational row_val;
        const auto& row = by_z2[k];
        for (auto it = row.rbegin(); it != row.rend(); ++it) row_val = row_val * z1 + *it;
        acc = acc * z2 + row_val;
    }
    return acc;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return lex_less(ia->second, ib->second);
    }
    return ia == a.terms_.rend() && ib != b.terms_.rend();
}

DegreeData degree_data(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    DegreeData d;
    d.total_degree = p.total_degree();
    d.order = p.order();
    d.leading_form = p.homogeneous_part(d.total_degree);
    d.initial_form = p.homogeneous_part(d.order);
    return d;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<GaussianRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) c[k] -= b.coeffs_[k];
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::scaled(const GaussianRational& s) const {
    if (s.is_zero()) return {};
    UnivariatePoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

void UnivariatePoly::divmod(const UnivariatePoly& a, const UnivariatePoly& b, UnivariatePoly& q,
                            UnivariatePoly& r) {
    if (b.is_zero()) throw ZeroPolynomialError();
    r = a;
    q = {};
    if (a.degree() < b.degree()) return;
    std::vector<GaussianRational> qc(a.degree() - b.degree() + 1);
    GaussianRational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        GaussianRational f = r.leading() / lb;
        qc[shift] = f;
        for (int k = 0; k <= b.degree(); ++k) r.coeffs_[k + shift] -= f * b.coeffs_[k];
        r.trim();
    }
    q = UnivariatePoly(std::move(qc));
}

UnivariatePoly gcd_univariate(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        UnivariatePoly q, r;
        UnivariatePoly::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    GaussianRational inv = GaussianRational(1) / a.leading();
    return a.scaled(inv);
}

}  // namespace firstint
