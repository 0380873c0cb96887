/// @file sections.hpp
/// @brief Linear sections of the spinor tenfold: sampling, orthogonal duals,
/// smoothness scans, the 10-dimensional space of quadrics through a section,
/// its unique quadratic relation, the 5-dimensional isotropic fibers attached
/// to points, and zero-dimensional length probes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinorkit/grass25.hpp"
#include "spinorkit/poly.hpp"
#include "spinorkit/sigma.hpp"

namespace spinorkit {

enum class SectionSide { Plus, Minus };

// X = Sigma ^ P^{7+k}, cut by 8-k independent hyperplanes; the hyperplanes of
// P(S+) are indexed by odd spinors (not necessarily pure: generic sections).
// A Minus-side object is the mirror picture with the parities exchanged.
template <class F>
struct LinearSection {
    int k = 1;
    SectionSide side = SectionSide::Plus;
    std::vector<HalfSpinor<F>> cutting;
    FieldSpec spec;
    std::uint64_t seed = 0;

    [[nodiscard]] std::size_t num_cutting() const { return static_cast<std::size_t>(8 - k); }
    [[nodiscard]] std::size_t ambient_points() const { return static_cast<std::size_t>(8 + k); }
    [[nodiscard]] int dim() const { return 2 + k; }
};

namespace section_detail {

// Rows of the cutting forms in the native coordinates of the section's side:
// point coordinates for Plus, odd slot coefficients for Minus.
template <class F>
Mat<F> forms_matrix(const LinearSection<F>& x) {
    Mat<F> m(x.cutting.size(), 16, x.spec);
    for (std::size_t i = 0; i < x.cutting.size(); ++i) {
        Vec<F> row = x.side == SectionSide::Plus ? hyperplane_form(x.cutting[i])
                                                 : beta_form(x.cutting[i]);
        m.set_row(i, row);
    }
    return m;
}

template <class F>
std::vector<std::size_t> rref_pivots(const Mat<F>& rref_basis) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
        std::size_t c = 0;
        while (c < rref_basis.cols() && rref_basis(i, c).is_zero()) ++c;
        require(c < rref_basis.cols(), ErrorCode::Internal, "zero row in RREF basis");
        pivots.push_back(c);
    }
    return pivots;
}

}  // namespace section_detail

// Canonical coordinates on the ambient P^{7+k}: the RREF kernel basis of the
// cutting forms, rows in native coordinates.
template <class F>
Mat<F> ambient_basis(const LinearSection<F>& x) {
    auto ker = kernel_basis(section_detail::forms_matrix(x));
    require(ker.size() == x.ambient_points(), ErrorCode::Internal,
            "cutting forms are not independent");
    return row_span_basis(Mat<F>::from_rows(ker, x.spec));
}

template <class F>
bool in_ambient(const LinearSection<F>& x, const SigmaPoint<F>& pt) {
    auto forms = section_detail::forms_matrix(x);
    return is_zero_vector(forms.apply(pt.coords()));
}

template <class F>
bool on_section(const LinearSection<F>& x, const SigmaPoint<F>& pt) {
    require(x.side == SectionSide::Plus, ErrorCode::WrongComponent,
            "transport a Minus-side section before evaluating points");
    return in_ambient(x, pt) && on_sigma(pt);
}

// Section coordinates of an ambient point: coefficients in the RREF basis.
template <class F>
Vec<F> section_coordinates(const LinearSection<F>& x, const SigmaPoint<F>& pt) {
    require(in_ambient(x, pt), ErrorCode::BadSample, "point is outside the ambient subspace");
    auto basis = ambient_basis(x);
    auto pivots = section_detail::rref_pivots(basis);
    Vec<F> z(basis.rows(), zero_of<F>(x.spec));
    for (std::size_t i = 0; i < pivots.size(); ++i) z[i] = pt.coords()[pivots[i]];
    return z;
}

template <class F>
SigmaPoint<F> lift_section_coordinates(const Mat<F>& basis, const Vec<F>& z,
                                       const FieldSpec& spec) {
    require(z.size() == basis.rows(), ErrorCode::DimensionMismatch, "coordinate arity mismatch");
    Vec<F> coords(16, zero_of<F>(spec));
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < 16; ++j) coords[j] += z[i] * basis(i, j);
    return SigmaPoint<F>(std::move(coords), spec);
}

template <class F>
SigmaPoint<F> point_from_section_coordinates(const LinearSection<F>& x, const Vec<F>& z) {
    return lift_section_coordinates(ambient_basis(x), z, x.spec);
}

// ---------------------------------------------------------------------------
// Sampling and duality.
// ---------------------------------------------------------------------------

template <class F>
LinearSection<F> section_sample(int k, const FieldSpec& spec, std::uint64_t seed) {
    require(k >= -1 && k <= 1, ErrorCode::BadK, "k must be -1, 0 or 1");
    Rng rng(seed);
    LinearSection<F> x{k, SectionSide::Plus, {}, spec, seed};
    Mat<F> rows(0, 16, spec);
    while (x.cutting.size() < x.num_cutting()) {
        HalfSpinor<F> w(Parity::Odd, spec);
        for (int sl = 0; sl < masks::kCount; ++sl)
            w.set_coeff_at_slot(sl, random_scalar<F>(rng, spec));
        if (w.is_zero()) continue;
        Mat<F> trial = rows.stacked(Mat<F>::from_rows({w.coefficients()}, spec));
        if (rank_of(trial) != trial.rows()) continue;  // independence by rejection
        rows = std::move(trial);
        x.cutting.push_back(std::move(w));
    }
    return x;
}

// The orthogonal section: its ambient is the span of the cutting spinors, cut
// inside the opposite family; the cutting data of the dual is the ambient
// basis of the original. Applying it twice restores the ambient span.
template <class F>
LinearSection<F> dual_section(const LinearSection<F>& x) {
    LinearSection<F> dual{-x.k, x.side == SectionSide::Plus ? SectionSide::Minus : SectionSide::Plus,
                          {}, x.spec, x.seed};
    auto basis = ambient_basis(x);
    Parity p = x.side == SectionSide::Plus ? Parity::Even : Parity::Odd;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        HalfSpinor<F> s(p, x.spec);
        if (x.side == SectionSide::Plus) {
            s = spinor_of_point(SigmaPoint<F>(basis.row(i), x.spec));
        } else {
            for (int sl = 0; sl < masks::kCount; ++sl) s.set_coeff_at_slot(sl, basis(i, sl));
        }
        dual.cutting.push_back(std::move(s));
    }
    return dual;
}

// Span of the cutting spinors in native spinor coefficients; for comparing
// ambient data across double dualization.
template <class F>
Mat<F> cutting_span(const LinearSection<F>& x) {
    Mat<F> rows(x.cutting.size(), 16, x.spec);
    for (std::size_t i = 0; i < x.cutting.size(); ++i) rows.set_row(i, x.cutting[i].coefficients());
    return row_span_basis(rows);
}

// Mirror a Minus-side section onto the Plus side through the component-swap
// reflection, so that all Plus-side machinery applies verbatim.
template <class F>
LinearSection<F> transported_to_plus(const LinearSection<F>& x) {
    if (x.side == SectionSide::Plus) return x;
    LinearSection<F> t{x.k, SectionSide::Plus, {}, x.spec, x.seed};
    for (const auto& c : x.cutting) t.cutting.push_back(parity_swap(c));
    return t;
}

// Membership of an odd pure spinor in the dual section of x (Plus side).
template <class F>
bool in_dual_section(const LinearSection<F>& x, const HalfSpinor<F>& w) {
    require(x.side == SectionSide::Plus, ErrorCode::WrongComponent, "expected a Plus-side section");
    require(w.parity() == Parity::Odd, ErrorCode::ParityMismatch, "dual points are odd spinors");
    if (!is_pure(w)) return false;
    auto basis = ambient_basis(x);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        auto s = spinor_of_point(SigmaPoint<F>(basis.row(i), x.spec));
        if (!beta_pair(s, w).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Smoothness scan.
// ---------------------------------------------------------------------------

template <class F>
struct ScanRecord {
    bool on_section = false;
    std::size_t jacobian_rank = 0;
    bool smooth = false;
};

// Rank of the ten quadric gradients stacked with the cutting forms; smooth
// points of a transversal section have rank 5 + (8-k) = 13 - k.
template <class F>
std::vector<ScanRecord<F>> smooth_scan(const LinearSection<F>& x,
                                       const std::vector<SigmaPoint<F>>& points) {
    require(x.side == SectionSide::Plus, ErrorCode::WrongComponent,
            "transport a Minus-side section before scanning");
    auto forms = section_detail::forms_matrix(x);
    auto qs = sigma_quadrics<F>(x.spec);
    std::vector<ScanRecord<F>> out;
    out.reserve(points.size());
    const std::size_t expected = static_cast<std::size_t>(13 - x.k);
    for (const auto& pt : points) {
        ScanRecord<F> rec;
        rec.on_section = is_zero_vector(forms.apply(pt.coords())) && on_sigma(pt);
        if (rec.on_section) {
            Mat<F> stacked(10 + forms.rows(), 16, x.spec);
            for (int qi = 0; qi < 10; ++qi) {
                auto g = qs[qi].gradient(pt.coords());
                for (std::size_t j = 0; j < 16; ++j) stacked(qi, j) = g[j];
            }
            for (std::size_t i = 0; i < forms.rows(); ++i)
                for (std::size_t j = 0; j < 16; ++j) stacked(10 + i, j) = forms(i, j);
            rec.jacobian_rank = rank_of(stacked);
            rec.smooth = rec.jacobian_rank == expected;
        }
        out.push_back(rec);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quadrics through the section.
// ---------------------------------------------------------------------------

template <class F>
struct QuadricSpaceV {
    std::vector<QuadForm<F>> basis;  // forms on the 8+k section coordinates
    bool conclusive = false;         // sample count reached the threshold
    std::size_t sample_count = 0;
    std::size_t ambient_vars = 0;
};

template <class F>
std::size_t quadric_sample_threshold(const LinearSection<F>& x) {
    std::size_t n = x.ambient_points();
    return 3 * (n * (n + 1) / 2);
}

template <class F>
std::size_t qv_sample_threshold(const LinearSection<F>& x) {
    std::size_t n = x.ambient_points();  // monomials of degree 4 in n variables
    return 3 * (n * (n + 1) * (n + 2) * (n + 3) / 24);
}

// The ten quadrics of the tenfold restricted to the ambient subspace of x,
// as forms in the section coordinates. For a transversal section these are
// independent and span the whole space of quadrics through X.
template <class F>
std::vector<QuadForm<F>> restricted_quadrics(const LinearSection<F>& x) {
    auto basis = ambient_basis(x);  // rows span the ambient; substitution is E^T
    Mat<F> e = basis.transpose();   // 16 x (8+k)
    std::vector<QuadForm<F>> out;
    for (const auto& q : sigma_quadrics<F>(x.spec)) out.push_back(q.compose_linear(e));
    return out;
}

template <class F>
std::size_t restricted_quadrics_rank(const LinearSection<F>& x) {
    auto rq = restricted_quadrics(x);
    std::vector<Vec<F>> rows;
    for (const auto& q : rq) rows.push_back(q.coefficients());
    return rank_of(Mat<F>::from_rows(rows, x.spec));
}

// Kernel of the evaluation of quadric monomials at the samples: the space of
// quadratic forms on P^{7+k} vanishing at every sample. Results below the
// sampling threshold carry conclusive = false rather than being asserted.
template <class F>
QuadricSpaceV<F> quadrics_through(const LinearSection<F>& x,
                                  const std::vector<SigmaPoint<F>>& samples) {
    require(x.side == SectionSide::Plus, ErrorCode::WrongComponent, "expected a Plus-side section");
    const std::size_t n = x.ambient_points();
    std::vector<Vec<F>> zs;
    for (const auto& pt : samples) {
        require(on_section(x, pt), ErrorCode::BadSample, "sample point is not on the section");
        zs.push_back(section_coordinates(x, pt));
    }
    Mat<F> eval(zs.size(), n * (n + 1) / 2, x.spec);
    for (std::size_t r = 0; r < zs.size(); ++r) {
        std::size_t col = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j, ++col) eval(r, col) = zs[r][i] * zs[r][j];
    }
    auto ker = kernel_basis(eval);
    QuadricSpaceV<F> v;
    v.ambient_vars = n;
    v.sample_count = samples.size();
    v.conclusive = samples.size() >= quadric_sample_threshold(x);
    for (const auto& kv : ker) {
        QuadForm<F> q(n, x.spec);
        std::size_t col = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j, ++col) q.coeff(i, j) = kv[col];
        v.basis.push_back(std::move(q));
    }
    // cross-check: the restrictions of the ten quadrics lie in the span
    auto rq = restricted_quadrics(x);
    std::vector<Vec<F>> span_rows;
    for (const auto& q : v.basis) span_rows.push_back(q.coefficients());
    Mat<F> span = span_rows.empty() ? Mat<F>(0, n * (n + 1) / 2, x.spec)
                                    : Mat<F>::from_rows(span_rows, x.spec);
    for (const auto& q : rq)
        require(in_row_span(span, q.coefficients()), ErrorCode::Internal,
                "restricted quadric escaped the sampled kernel");
    return v;
}

// The space of quadrics used by the downstream constructions: the restricted
// quadrics themselves, validated to be independent (dimension 10). Sampling
// cannot certify this space over small fields when the section has fewer
// rational points than conditions, so the exact construction is primary and
// quadrics_through serves as the oracle where the counts suffice.
template <class F>
QuadricSpaceV<F> mukai_quadric_space(const LinearSection<F>& x) {
    require(characteristic(x.spec) == 0 || characteristic(x.spec) >= 5,
            ErrorCode::SmallFieldUnsupported, "quadric-space computations need p >= 5");
    QuadricSpaceV<F> v;
    v.ambient_vars = x.ambient_points();
    v.conclusive = true;
    v.basis = restricted_quadrics(x);
    std::vector<Vec<F>> rows;
    for (const auto& q : v.basis) rows.push_back(q.coefficients());
    require(rank_of(Mat<F>::from_rows(rows, x.spec)) == 10, ErrorCode::UnexpectedRelationSpace,
            "restricted quadrics are dependent: non-generic section");
    return v;
}

// ---------------------------------------------------------------------------
// The quadratic relation q_V.
// ---------------------------------------------------------------------------

template <class F>
struct QvResult {
    QuadForm<F> form;            // on the 10 coordinates of V
    std::size_t kernel_dim = 0;  // of the relation space found
    bool conclusive = false;
};

namespace section_detail {

template <class F>
QvResult<F> qv_from_kernel(const std::vector<Vec<F>>& ker, const FieldSpec& spec, bool conclusive) {
    QvResult<F> out{QuadForm<F>(10, spec), ker.size(), conclusive};
    if (conclusive)
        require(ker.size() == 1, ErrorCode::UnexpectedRelationSpace,
                "relation space has dimension " + std::to_string(ker.size()));
    if (!ker.empty()) {
        std::size_t col = 0;
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = i; j < 10; ++j, ++col) out.form.coeff(i, j) = ker.front()[col];
    }
    return out;
}

}  // namespace section_detail

// Sampled route: kernel of the evaluation of the 55 products q_i q_j at the
// sample points. Below the degree-4 threshold the result is inconclusive.
template <class F>
QvResult<F> qv_relation(const LinearSection<F>& x, const QuadricSpaceV<F>& v,
                        const std::vector<SigmaPoint<F>>& samples) {
    require(v.basis.size() == 10, ErrorCode::UnexpectedRelationSpace,
            "the quadric space must be 10-dimensional");
    std::vector<Vec<F>> zs;
    for (const auto& pt : samples) zs.push_back(section_coordinates(x, pt));
    Mat<F> eval(zs.size(), 55, x.spec);
    for (std::size_t r = 0; r < zs.size(); ++r) {
        Vec<F> qvals(10, zero_of<F>(x.spec));
        for (int i = 0; i < 10; ++i) qvals[i] = v.basis[i].evaluate(zs[r]);
        std::size_t col = 0;
        for (std::size_t i = 0; i < 10; ++i)
            for (std::size_t j = i; j < 10; ++j, ++col) eval(r, col) = qvals[i] * qvals[j];
    }
    bool conclusive = samples.size() >= qv_sample_threshold(x);
    return section_detail::qv_from_kernel(kernel_basis(eval), x.spec, conclusive);
}

// Exact route: the kernel of the coefficient matrix of the products q_i q_j
// inside the space of quartic forms. This is the identity the relation
// asserts, independent of any point sampling.
template <class F>
QvResult<F> qv_relation_exact(const QuadricSpaceV<F>& v, const FieldSpec& spec) {
    require(v.basis.size() == 10, ErrorCode::UnexpectedRelationSpace,
            "the quadric space must be 10-dimensional");
    const std::size_t n = v.ambient_vars;
    std::vector<Poly<F>> qpolys;
    for (const auto& q : v.basis) qpolys.push_back(Poly<F>::from_quadform(q));
    auto quartics = monomial::of_degree(n, 4);
    // columns are the products, rows the quartic monomials, so the kernel is
    // the space of identical relations sum c_ij q_i q_j = 0
    Mat<F> coeffs(quartics.size(), 55, spec);
    std::size_t col = 0;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i; j < 10; ++j, ++col) {
            auto prod = qpolys[i] * qpolys[j];
            auto r = prod.coefficient_row(quartics);
            for (std::size_t c = 0; c < quartics.size(); ++c) coeffs(c, col) = r[c];
        }
    return section_detail::qv_from_kernel(kernel_basis(coeffs), spec, true);
}

// ---------------------------------------------------------------------------
// The 5-dimensional isotropic fiber of quadrics double at a point.
// ---------------------------------------------------------------------------

template <class F>
Mat<F> mukai_fiber(const LinearSection<F>& x, const QuadricSpaceV<F>& v, const QuadForm<F>& qv,
                   const SigmaPoint<F>& p) {
    require(on_section(x, p), ErrorCode::BadSample, "fiber point must lie on the section");
    auto z = section_coordinates(x, p);
    const std::size_t n = v.ambient_vars;
    // order >= 2 at p: all first partials vanish (the value follows by Euler
    // in characteristic != 2)
    Mat<F> cond(n, 10, x.spec);
    for (int i = 0; i < 10; ++i) {
        auto g = v.basis[i].gradient(z);
        for (std::size_t a = 0; a < n; ++a) cond(a, i) = g[a];
    }
    auto ker = kernel_basis(cond);
    require(ker.size() == 5, ErrorCode::UnexpectedFiber,
            "fiber has dimension " + std::to_string(ker.size()));
    Mat<F> fiber = row_span_basis(Mat<F>::from_rows(ker, x.spec));
    for (std::size_t i = 0; i < 5; ++i) {
        require(qv.evaluate(fiber.row(i)).is_zero(), ErrorCode::IsotropyViolation,
                "fiber vector is not q_V-isotropic");
        for (std::size_t j = i + 1; j < 5; ++j)
            require(qv.polar(fiber.row(i), fiber.row(j)).is_zero(), ErrorCode::IsotropyViolation,
                    "fiber vectors are not q_V-orthogonal");
    }
    return fiber;
}

// ---------------------------------------------------------------------------
// rho fiber: the 2-plane U_p ^ U_w in U_w coordinates, for w in the dual
// section. Its Plucker point is the projection of p.
// ---------------------------------------------------------------------------

template <class F>
Mat<F> rho_fiber(const LinearSection<F>& x, const HalfSpinor<F>& w, const SigmaPoint<F>& p) {
    require(in_dual_section(x, w), ErrorCode::NotInSection, "w is not in the dual section");
    require(on_section(x, p), ErrorCode::NotInSection, "p is not on the section");
    return section_plane_in_uw(p, w);
}

// ---------------------------------------------------------------------------
// Hilbert-function length of a zero-dimensional homogeneous ideal.
// ---------------------------------------------------------------------------

struct LengthResult {
    bool positive_dimensional = false;
    std::uint64_t length = 0;

    [[nodiscard]] std::string to_string() const {
        return positive_dimensional ? "positive-dimensional" : std::to_string(length);
    }
};

inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Dimension of the degree-d graded quotient by monomial linear algebra, for
// increasing d, until constant over `window` consecutive degrees; growth ends
// in PositiveDimensional at the cap.
template <class F>
LengthResult scheme_length_0dim(const std::vector<Poly<F>>& forms, std::size_t ambient_dim,
                                const FieldSpec& spec, int window = 3, int max_degree = 16) {
    require(ambient_dim <= 3, ErrorCode::TooExpensive,
            "length probes are desk-scale: ambient dimension at most 3");
    const std::size_t vars = ambient_dim + 1;
    int min_start = 0;
    for (const auto& f : forms) {
        require(f.vars() == vars, ErrorCode::DimensionMismatch, "form arity mismatch");
        require(f.is_homogeneous(), ErrorCode::BadInput, "forms must be homogeneous");
        min_start = std::max(min_start, f.total_degree());
    }

    int run = 0;
    std::uint64_t last = 0;
    for (int d = 0; d <= max_degree; ++d) {
        auto basis_d = monomial::of_degree(vars, d);
        std::vector<Vec<F>> rows;
        for (const auto& f : forms) {
            int e = f.total_degree();
            if (e < 0 || e > d) continue;
            for (Monomial m : monomial::of_degree(vars, d - e))
                rows.push_back(f.times_monomial(m).coefficient_row(basis_d));
        }
        std::size_t ideal_dim =
            rows.empty() ? 0 : rank_of(Mat<F>::from_rows(rows, spec));
        std::uint64_t h = binomial_u64(static_cast<std::uint64_t>(d) + ambient_dim, ambient_dim) -
                          ideal_dim;
        if (d >= min_start && d > 0) {
            if (h == last) ++run;
            else run = 1;
            if (run >= window) return {false, h};
        } else {
            run = 1;
        }
        last = h;
    }
    return {true, 0};
}

// ---------------------------------------------------------------------------
// Plane sections of the tenfold through three given points: length of the
// resulting zero-dimensional scheme, or PositiveDimensional when the plane
// meets the tenfold in a curve or lies on it.
// ---------------------------------------------------------------------------

template <class F>
LengthResult four_secant_probe(const SigmaPoint<F>& c1, const SigmaPoint<F>& c2,
                               const SigmaPoint<F>& c3) {
    for (const auto* c : {&c1, &c2, &c3})
        require(on_sigma(*c), ErrorCode::NotOnSigma, "probe points must lie on the tenfold");
    const FieldSpec& spec = c1.field();
    Mat<F> span(3, 16, spec);
    for (std::size_t j = 0; j < 16; ++j) {
        span(0, j) = c1.coords()[j];
        span(1, j) = c2.coords()[j];
        span(2, j) = c3.coords()[j];
    }
    require(rank_of(span) == 3, ErrorCode::DegeneratePlane, "probe points do not span a plane");

    Mat<F> param = span.transpose();  // 16 x 3
    std::vector<Poly<F>> restricted;
    for (const auto& q : sigma_quadrics<F>(spec)) {
        auto r = q.compose_linear(param);
        if (!r.is_zero()) restricted.push_back(Poly<F>::from_quadform(r));
    }
    auto result = scheme_length_0dim(restricted, 2, spec);
    require(result.positive_dimensional || result.length <= 3, ErrorCode::Internal,
            "plane section of length exceeding 3");
    return result;
}

}  // namespace spinorkit
