/// @file poly.hpp
/// @brief Small exact polynomial utilities: dense quadratic forms and a sparse
/// multivariate polynomial, enough for coefficient linear algebra and Hilbert
/// function computations at desk scale.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "spinorkit/error.hpp"
#include "spinorkit/matrix.hpp"

namespace spinorkit {

// ---------------------------------------------------------------------------
// QuadForm: homogeneous quadratic form, coefficients indexed by i <= j.
// ---------------------------------------------------------------------------

template <class F>
class QuadForm {
  public:
    QuadForm(std::size_t vars, FieldSpec spec)
        : vars_(vars), spec_(spec), coeffs_(vars * (vars + 1) / 2, zero_of<F>(spec)) {}

    [[nodiscard]] std::size_t vars() const { return vars_; }
    [[nodiscard]] const FieldSpec& field() const { return spec_; }

    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        // row-major upper triangle
        return i * vars_ - i * (i - 1) / 2 + (j - i);
    }

    F& coeff(std::size_t i, std::size_t j) { return coeffs_[index(i, j)]; }
    const F& coeff(std::size_t i, std::size_t j) const { return coeffs_[index(i, j)]; }

    [[nodiscard]] const Vec<F>& coefficients() const { return coeffs_; }

    [[nodiscard]] bool is_zero() const {
        for (const F& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    [[nodiscard]] F evaluate(const Vec<F>& x) const {
        require(x.size() == vars_, ErrorCode::DimensionMismatch, "evaluation arity mismatch");
        F acc = zero_of<F>(spec_);
        std::size_t k = 0;
        for (std::size_t i = 0; i < vars_; ++i)
            for (std::size_t j = i; j < vars_; ++j, ++k) {
                if (coeffs_[k].is_zero()) continue;
                acc += coeffs_[k] * x[i] * x[j];
            }
        return acc;
    }

    // q(c + d) - q(c) - q(d); exact in every characteristic.
    [[nodiscard]] F polar(const Vec<F>& c, const Vec<F>& d) const {
        F acc = zero_of<F>(spec_);
        std::size_t k = 0;
        for (std::size_t i = 0; i < vars_; ++i)
            for (std::size_t j = i; j < vars_; ++j, ++k) {
                if (coeffs_[k].is_zero()) continue;
                acc += coeffs_[k] * (c[i] * d[j] + d[i] * c[j]);
            }
        return acc;
    }

    [[nodiscard]] Vec<F> gradient(const Vec<F>& x) const {
        require(x.size() == vars_, ErrorCode::DimensionMismatch, "gradient arity mismatch");
        Vec<F> g(vars_, zero_of<F>(spec_));
        std::size_t k = 0;
        for (std::size_t i = 0; i < vars_; ++i)
            for (std::size_t j = i; j < vars_; ++j, ++k) {
                const F& c = coeffs_[k];
                if (c.is_zero()) continue;
                if (i == j) {
                    g[i] += (c + c) * x[i];
                } else {
                    g[i] += c * x[j];
                    g[j] += c * x[i];
                }
            }
        return g;
    }

    // Pullback along x = E z, E a vars x m matrix: returns q(E z) on m variables.
    [[nodiscard]] QuadForm compose_linear(const Mat<F>& e) const {
        require(e.rows() == vars_, ErrorCode::DimensionMismatch, "substitution shape mismatch");
        QuadForm out(e.cols(), spec_);
        std::size_t k = 0;
        for (std::size_t i = 0; i < vars_; ++i)
            for (std::size_t j = i; j < vars_; ++j, ++k) {
                const F& c = coeffs_[k];
                if (c.is_zero()) continue;
                for (std::size_t a = 0; a < e.cols(); ++a)
                    for (std::size_t b = 0; b < e.cols(); ++b) {
                        F term = c * e(i, a) * e(j, b);
                        if (term.is_zero()) continue;
                        out.coeff(a, b) += term;  // (a,b) and (b,a) both land on a<=b
                    }
            }
        return out;
    }

    // Kill the variables listed (substitute zero).
    [[nodiscard]] QuadForm restrict_zero(const std::vector<std::size_t>& killed) const {
        std::vector<bool> dead(vars_, false);
        for (auto v : killed) dead[v] = true;
        QuadForm out = *this;
        std::size_t k = 0;
        for (std::size_t i = 0; i < vars_; ++i)
            for (std::size_t j = i; j < vars_; ++j, ++k)
                if (dead[i] || dead[j]) out.coeffs_[k] = zero_of<F>(spec_);
        return out;
    }

  private:
    std::size_t vars_;
    FieldSpec spec_;
    Vec<F> coeffs_;
};

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial; exponents packed 4 bits per variable into a
// 64-bit key (so at most 16 variables, degree at most 15 per variable).
// ---------------------------------------------------------------------------

using Monomial = std::uint64_t;

namespace monomial {

inline constexpr std::size_t kMaxVars = 16;

inline int exponent(Monomial m, std::size_t var) { return static_cast<int>((m >> (4 * var)) & 0xf); }

inline Monomial with_exponent(Monomial m, std::size_t var, int e) {
    m &= ~(Monomial(0xf) << (4 * var));
    return m | (Monomial(e) << (4 * var));
}

inline Monomial mul(Monomial a, Monomial b) { return a + b; }  // no overflow at desk degrees

inline int total_degree(Monomial m) {
    int d = 0;
    while (m) {
        d += static_cast<int>(m & 0xf);
        m >>= 4;
    }
    return d;
}

inline Monomial variable(std::size_t var) { return Monomial(1) << (4 * var); }

// All monomials of the given total degree in `vars` variables, in a fixed
// deterministic order (lexicographic by exponent vector, first variable major).
inline void list_of_degree(std::size_t vars, int degree, std::vector<Monomial>& out,
                           Monomial prefix = 0, std::size_t var = 0) {
    if (var + 1 == vars) {
        out.push_back(with_exponent(prefix, var, degree));
        return;
    }
    for (int e = degree; e >= 0; --e)
        list_of_degree(vars, degree - e, out, with_exponent(prefix, var, e), var + 1);
}

inline std::vector<Monomial> of_degree(std::size_t vars, int degree) {
    std::vector<Monomial> out;
    list_of_degree(vars, degree, out);
    return out;
}

}  // namespace monomial

template <class F>
class Poly {
  public:
    Poly(std::size_t vars, FieldSpec spec) : vars_(vars), spec_(spec) {
        require(vars <= monomial::kMaxVars, ErrorCode::BadShape, "too many variables");
    }

    static Poly constant(std::size_t vars, const F& c, FieldSpec spec) {
        Poly p(vars, spec);
        if (!c.is_zero()) p.terms_.push_back({0, c});
        return p;
    }

    static Poly variable(std::size_t vars, std::size_t var, FieldSpec spec) {
        Poly p(vars, spec);
        p.terms_.push_back({monomial::variable(var), one_of<F>(spec)});
        return p;
    }

    static Poly from_quadform(const QuadForm<F>& q) {
        Poly p(q.vars(), q.field());
        for (std::size_t i = 0; i < q.vars(); ++i)
            for (std::size_t j = i; j < q.vars(); ++j) {
                const F& c = q.coeff(i, j);
                if (c.is_zero()) continue;
                Monomial m = monomial::mul(monomial::variable(i), monomial::variable(j));
                p.terms_.push_back({m, c});
            }
        p.normalize();
        return p;
    }

    [[nodiscard]] std::size_t vars() const { return vars_; }
    [[nodiscard]] const FieldSpec& field() const { return spec_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, monomial::total_degree(t.key));
        return d;
    }

    [[nodiscard]] bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = monomial::total_degree(terms_.front().key);
        for (const auto& t : terms_)
            if (monomial::total_degree(t.key) != d) return false;
        return true;
    }

    void add_term(Monomial m, const F& c) {
        terms_.push_back({m, c});
        normalize();
    }

    [[nodiscard]] F coeff(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Monomial key) { return t.key < key; });
        if (it != terms_.end() && it->key == m) return it->coeff;
        return zero_of<F>(spec_);
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& t : o.terms_) terms_.push_back(t);
        normalize();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend Poly operator-(Poly a, const Poly& b) { return a += -b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.vars_, a.spec_);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                r.terms_.push_back({monomial::mul(ta.key, tb.key), ta.coeff * tb.coeff});
        r.normalize();
        return r;
    }

    Poly& operator*=(const F& c) {
        for (auto& t : terms_) t.coeff *= c;
        normalize();
        return *this;
    }

    [[nodiscard]] Poly times_monomial(Monomial m) const {
        Poly r = *this;
        for (auto& t : r.terms_) t.key = monomial::mul(t.key, m);
        return r;
    }

    [[nodiscard]] F evaluate(const Vec<F>& x) const {
        require(x.size() == vars_, ErrorCode::DimensionMismatch, "evaluation arity mismatch");
        F acc = zero_of<F>(spec_);
        for (const auto& t : terms_) {
            F v = t.coeff;
            for (std::size_t i = 0; i < vars_; ++i)
                for (int e = 0; e < monomial::exponent(t.key, i); ++e) v *= x[i];
            acc += v;
        }
        return acc;
    }

    // Coefficient row with respect to an explicit monomial basis.
    [[nodiscard]] Vec<F> coefficient_row(const std::vector<Monomial>& basis) const {
        Vec<F> row(basis.size(), zero_of<F>(spec_));
        for (std::size_t i = 0; i < basis.size(); ++i) row[i] = coeff(basis[i]);
        return row;
    }

    struct Term {
        Monomial key;
        F coeff;
    };
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }

  private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.key < b.key; });
        std::vector<Term> merged;
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().key == t.key) merged.back().coeff += t.coeff;
            else merged.push_back(t);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Term& t) { return t.coeff.is_zero(); }),
                     merged.end());
        terms_ = std::move(merged);
    }

    std::size_t vars_;
    FieldSpec spec_;
    std::vector<Term> terms_;
};

}  // namespace spinorkit
