#include "firstint/gcd.hpp"

#include <stdexcept>
#include <vector>

namespace firstint {

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    Polynomial q;
    Polynomial r = a;
    // Lex-leading elimination. If b | a the leading monomial of r stays divisible
    // by the leading monomial of b at every step, and the lex order is a well order,
    // so this terminates with r == 0. Any non-divisible leading monomial refutes b | a.
    auto [mb, cb] = b.lex_leading();
    while (!r.is_zero()) {
        auto [mr, cr] = r.lex_leading();
        Monomial mq{mr.e1 - mb.e1, mr.e2 - mb.e2};
        if (mq.e1 < 0 || mq.e2 < 0) return std::nullopt;
        GaussianRational cq = cr / cb;
        Polynomial t = Polynomial::term(mq, cq);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = try_divide(a, b);
    if (!q) throw std::logic_error("divide_exact: divisor does not divide dividend");
    return *q;
}

Polynomial normalize_lex(const Polynomial& p) {
    if (p.is_zero()) return p;
    auto [m, c] = p.lex_leading();
    return p.scaled(GaussianRational(1) / c);
}

UnivariatePoly to_univariate_z1(const Polynomial& p) {
    std::vector<GaussianRational> c(p.degree_z1() + 1);
    for (const auto& [m, coeff] : p.terms()) {
        if (m.e2 != 0) throw std::logic_error("to_univariate_z1: input depends on z2");
        c[m.e1] = coeff;
    }
    return UnivariatePoly(std::move(c));
}

Polynomial from_univariate_z1(const UnivariatePoly& u) {
    Polynomial p;
    for (int k = 0; k <= u.degree(); ++k) p.add_term({k, 0}, u.coeff(k));
    return p;
}

UnivariatePoly to_univariate_z2(const Polynomial& p) {
    std::vector<GaussianRational> c(p.degree_z2() + 1);
    for (const auto& [m, coeff] : p.terms()) {
        if (m.e1 != 0) throw std::logic_error("to_univariate_z2: input depends on z1");
        c[m.e2] = coeff;
    }
    return UnivariatePoly(std::move(c));
}

namespace {

// Dense-in-z2 view: coefficient k is a univariate polynomial in z1.
struct Z2Dense {
    std::vector<UnivariatePoly> c;  // index = z2 exponent, trimmed
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

Z2Dense to_dense(const Polynomial& p) {
    Z2Dense d;
    d.c.resize(p.degree_z2() + 1);
    for (int k = 0; k <= p.degree_z2(); ++k) d.c[k] = to_univariate_z1(p.z2_coefficient(k));
    d.trim();
    return d;
}

Polynomial from_dense(const Z2Dense& d) {
    Polynomial p;
    for (int k = 0; k < static_cast<int>(d.c.size()); ++k)
        for (int j = 0; j <= d.c[k].degree(); ++j) p.add_term({j, k}, d.c[k].coeff(j));
    return p;
}

UnivariatePoly content_of(const Z2Dense& d) {
    UnivariatePoly g;
    for (const auto& ck : d.c) g = gcd_univariate(g, ck);
    return g;
}

Z2Dense divide_coeffs(const Z2Dense& d, const UnivariatePoly& g) {
    Z2Dense r;
    r.c.reserve(d.c.size());
    for (const auto& ck : d.c) {
        UnivariatePoly q, rem;
        UnivariatePoly::divmod(ck, g, q, rem);
        if (!rem.is_zero()) throw std::logic_error("content division left a remainder");
        r.c.push_back(std::move(q));
    }
    r.trim();
    return r;
}

Z2Dense scale_coeffs(const Z2Dense& d, const UnivariatePoly& g) {
    Z2Dense r;
    r.c.reserve(d.c.size());
    for (const auto& ck : d.c) r.c.push_back(ck * g);
    r.trim();
    return r;
}

// Pseudo-remainder of a by b in z2: lc(b)^(deg a - deg b + 1) * a reduced mod b.
Z2Dense pseudo_remainder(Z2Dense a, const Z2Dense& b) {
    const UnivariatePoly& lb = b.c.back();
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        UnivariatePoly la = a.c.back();
        // a := lb * a - la * z2^shift * b
        for (auto& ck : a.c) ck = ck * lb;
        for (int k = 0; k <= db; ++k) a.c[k + shift] = a.c[k + shift] - la * b.c[k];
        a.trim();
    }
    return a;
}

UnivariatePoly primitive_part_inplace(Z2Dense& d) {
    if (d.is_zero()) return {};
    UnivariatePoly cont = content_of(d);
    if (cont.degree() > 0 || !cont.coeff(0).is_one()) d = divide_coeffs(d, cont);
    return cont;
}

}  // namespace

Polynomial content_z2(const Polynomial& p) {
    if (p.is_zero()) return {};
    Z2Dense d = to_dense(p);
    return from_univariate_z1(content_of(d));
}

Polynomial gcd_bivariate(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw BothZeroError();
    if (a.is_zero()) return normalize_lex(b);
    if (b.is_zero()) return normalize_lex(a);

    Z2Dense da = to_dense(a);
    Z2Dense db = to_dense(b);
    UnivariatePoly cont_a = primitive_part_inplace(da);
    UnivariatePoly cont_b = primitive_part_inplace(db);
    UnivariatePoly cont_gcd = gcd_univariate(cont_a, cont_b);

    // Primitive PRS on the z2-primitive parts.
    if (da.degree() < db.degree()) std::swap(da, db);
    while (!db.is_zero()) {
        Z2Dense r = pseudo_remainder(da, db);
        primitive_part_inplace(r);
        da = std::move(db);
        db = std::move(r);
    }
    // da is the primitive gcd when either input had positive z2-degree; for two
    // z2-free inputs both primitive parts are constants and da is a scalar.
    Polynomial result = from_dense(scale_coeffs(da, cont_gcd));
    return normalize_lex(result);
}

}  // namespace firstint
