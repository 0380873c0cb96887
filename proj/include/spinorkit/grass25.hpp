/// @file grass25.hpp
/// @brief G(2,5) in Plucker coordinates: decomposability relations as
/// quadratic Pfaffians, the projection of a hyperplane section of the spinor
/// tenfold onto the Grassmannian, kernel-bundle fibers, zero loci of sections
/// of the quotient bundle, and sub-Grassmannian membership.
///
/// Plucker indices use the same (12,13,14,15,23,24,25,34,35,45) order as the
/// x block of a SigmaPoint, so "the projection is the x block" is a literal
/// coordinate slice at the standard dual point.

#pragma once

#include <string>
#include <vector>

#include "spinorkit/sigma.hpp"

namespace spinorkit {

template <class F>
class PluckerPoint {
  public:
    PluckerPoint(Vec<F> coords, FieldSpec spec) : spec_(spec), coords_(std::move(coords)) {
        require(coords_.size() == 10, ErrorCode::BadShape, "a Plucker point has 10 coordinates");
        canonicalize();
    }

    [[nodiscard]] const Vec<F>& coords() const { return coords_; }
    [[nodiscard]] const FieldSpec& field() const { return spec_; }

    // The skew bivector matrix K with K[i][j] = x_ij.
    [[nodiscard]] Mat<F> bivector() const {
        Mat<F> k(5, 5, spec_);
        for (int p = 0; p < 10; ++p) {
            auto [i, j] = sigma_detail::x_pairs[p];
            k(i, j) = coords_[p];
            k(j, i) = -coords_[p];
        }
        return k;
    }

    friend bool operator==(const PluckerPoint& a, const PluckerPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const PluckerPoint& a, const PluckerPoint& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const { return vector_to_string(coords_); }

    static PluckerPoint parse(const std::string& text, FieldSpec spec) {
        auto v = parse_vector<F>(text, spec);
        require(v.size() == 10, ErrorCode::BadInput, "expected 10 Plucker coordinates");
        return PluckerPoint(std::move(v), spec);
    }

  private:
    void canonicalize() {
        for (const F& c : coords_) {
            if (c.is_zero()) continue;
            F inv = c.inv();
            for (F& e : coords_) e *= inv;
            return;
        }
        fail(ErrorCode::BadInput, "projective point cannot be zero");
    }

    FieldSpec spec_;
    Vec<F> coords_;
};

// 2x2 minors of a rank-2 basis, in pair order; basis-independent up to scale.
template <class F>
PluckerPoint<F> plucker_of_plane(const Mat<F>& basis) {
    require(basis.rows() == 2 && basis.cols() == 5, ErrorCode::BadShape,
            "expected a 2x5 plane basis");
    require(rank_of(basis) == 2, ErrorCode::DegeneratePlane, "plane basis has rank < 2");
    Vec<F> coords(10, zero_of<F>(basis.field()));
    for (int p = 0; p < 10; ++p) {
        auto [i, j] = sigma_detail::x_pairs[p];
        coords[p] = basis(0, i) * basis(1, j) - basis(0, j) * basis(1, i);
    }
    return PluckerPoint<F>(std::move(coords), basis.field());
}

// The five 4x4 Pfaffians of the generic skew matrix with entries x_ij; the
// zero vector characterizes decomposable bivectors, i.e. points of G(2,5).
template <class F>
Vec<F> grass_relations(const PluckerPoint<F>& p) {
    Mat<F> k = p.bivector();
    Vec<F> out(5, zero_of<F>(p.field()));
    for (std::size_t i = 0; i < 5; ++i) {
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < 5; ++t)
            if (t != i) idx.push_back(t);
        out[i] = pfaffian_sub(k, std::move(idx));
    }
    return out;
}

template <class F>
bool on_grassmannian(const PluckerPoint<F>& p) {
    return is_zero_vector(grass_relations(p));
}

// Row space of the rank-2 bivector recovers the plane.
template <class F>
Mat<F> plane_of_plucker(const PluckerPoint<F>& p) {
    require(on_grassmannian(p), ErrorCode::NotOnGrassmannian,
            "bivector is not decomposable (nonzero quadratic Pfaffians)");
    Mat<F> plane = row_span_basis(p.bivector());
    require(plane.rows() == 2, ErrorCode::Internal, "decomposable bivector of rank != 2");
    require(plucker_of_plane(plane).coords() == p.coords(), ErrorCode::Internal,
            "plane reconstruction mismatch");
    return plane;
}

// ---------------------------------------------------------------------------
// Projection of H_w onto G(2,5): c maps to the 2-plane U_c ^ U_w written in
// the row-reduced basis of U_w. At the standard dual point this is the x
// block of c.
// ---------------------------------------------------------------------------

namespace grass_detail {

// Coefficients of `rows` with respect to an RREF basis: read off the pivot
// columns.
template <class F>
Mat<F> coefficients_in_rref_basis(const Mat<F>& rref_basis, const Mat<F>& rows,
                                  const std::vector<std::size_t>& pivots) {
    Mat<F> coeff(rows.rows(), rref_basis.rows(), rref_basis.field());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t k = 0; k < pivots.size(); ++k) coeff(r, k) = rows(r, pivots[k]);
    return coeff;
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

}  // namespace grass_detail

// The 2-plane U_c ^ U_w in U_w coordinates.
template <class F>
Mat<F> section_plane_in_uw(const SigmaPoint<F>& c, const HalfSpinor<F>& w) {
    require(on_sigma(c), ErrorCode::NotOnSigma, "projection needs a point of the tenfold");
    auto ann = annihilator(w);
    require(ann.is_pure, ErrorCode::NotPure, "dual point must be a pure spinor");
    IsotropicSubspace<F> uw(ann.basis);
    auto uc = point_to_subspace(c);
    Mat<F> meet = intersect_subspaces(uc.basis(), uw.basis());
    if (meet.rows() == 0) fail(ErrorCode::NotInSection, "point is not in the hyperplane of w");
    if (meet.rows() == 4)
        fail(ErrorCode::CenterOfProjection, "point lies in the tangency locus of w");
    require(meet.rows() == 2, ErrorCode::Internal, "unexpected incidence dimension");
    auto pivots = grass_detail::rref_pivots(uw.basis());
    return grass_detail::coefficients_in_rref_basis(uw.basis(), meet, pivots);
}

template <class F>
PluckerPoint<F> project_pi_w(const SigmaPoint<F>& c, const HalfSpinor<F>& w) {
    return plucker_of_plane(section_plane_in_uw(c, w));
}

// The rank-3 kernel of the projected bivector, in U_w coordinates; the fiber
// of the projection through c is this universal-subbundle fiber.
template <class F>
Mat<F> kernel_fiber(const SigmaPoint<F>& c, const HalfSpinor<F>& w) {
    auto p = project_pi_w(c, w);
    auto ker = kernel_basis(p.bivector());
    require(ker.size() == 3, ErrorCode::Internal, "kernel fiber is not 3-dimensional");
    return row_span_basis(Mat<F>::from_rows(ker, c.field()));
}

// ---------------------------------------------------------------------------
// sigma_11(L): planes contained in the hyperplane ker L of the 5-space.
// ---------------------------------------------------------------------------

template <class F>
bool sigma11_test(const PluckerPoint<F>& p, const Vec<F>& ell) {
    require(ell.size() == 5, ErrorCode::BadShape, "hyperplane form needs 5 coefficients");
    require(!is_zero_vector(ell), ErrorCode::ZeroForm, "zero hyperplane form");
    require(on_grassmannian(p), ErrorCode::NotOnGrassmannian,
            "sigma_11 membership is only defined on the Grassmannian");
    // plane subset of ker L  <=>  contraction K . ell = 0
    return is_zero_vector(p.bivector().apply(ell));
}

// ---------------------------------------------------------------------------
// Zero locus of the quotient-bundle section attached to a linear form ell on
// U_w, for the standard dual point: five linear and five quadratic forms on
// the ambient coordinates. For ell = x5 this is, on the nose, the system
//   u = x15 = x25 = x35 = x45 = 0,
//   q5+, q1-, q2-, q3-, q4-  (restricted),
// and the general case is pulled back along the GL(5) change of basis sending
// ell to the last coordinate.
// ---------------------------------------------------------------------------

template <class F>
struct ZLSystem {
    std::vector<Vec<F>> linear;          // 5 rows of 16 coefficients
    std::vector<QuadForm<F>> quadratic;  // 5 forms on 16 coordinates

    [[nodiscard]] bool vanishes_at(const SigmaPoint<F>& pt) const {
        for (const auto& row : linear)
            if (!evaluate_form(row, pt).is_zero()) return false;
        for (const auto& q : quadratic)
            if (!q.evaluate(pt.coords()).is_zero()) return false;
        return true;
    }
};

namespace grass_detail {

// Point-coordinate matrix of the even exterior power of g acting on Uinf.
// The half-spin action differs from the plain exterior power by a global
// scalar only, so this is the right projective transformation.
template <class F>
Mat<F> even_power_point_matrix(const Mat<F>& g) {
    const FieldSpec& spec = g.field();
    Mat<F> slot_mat(16, 16, spec);
    for (int sl = 0; sl < masks::kCount; ++sl) {
        std::uint8_t mask = masks::even[sl];
        HalfSpinor<F> img = HalfSpinor<F>::scalar_one(spec);
        for (int b = 0; b < 5; ++b) {
            if (!((mask >> b) & 1u)) continue;
            Vec<F> col(5, zero_of<F>(spec));
            for (std::size_t r = 0; r < 5; ++r) col[r] = g(r, static_cast<std::size_t>(b));
            img = wedge_right(img, col);
        }
        for (int out = 0; out < masks::kCount; ++out) slot_mat(out, sl) = img.coeff_at_slot(out);
    }
    // conjugate from slot order to point-coordinate order
    Mat<F> t(16, 16, spec);
    for (int a = 0; a < masks::kCount; ++a)
        for (int b = 0; b < masks::kCount; ++b) {
            const auto& ca = sigma_detail::slot_coord[a];
            const auto& cb = sigma_detail::slot_coord[b];
            F v = slot_mat(a, b);
            if (ca.sign * cb.sign < 0) v = -v;
            t(static_cast<std::size_t>(ca.coord), static_cast<std::size_t>(cb.coord)) = v;
        }
    return t;
}

template <class F>
Mat<F> inverse_matrix(const Mat<F>& g) {
    const std::size_t n = g.rows();
    Mat<F> aug(n, 2 * n, g.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = g(i, j);
        aug(i, n + i) = one_of<F>(g.field());
    }
    auto rr = row_reduce(std::move(aug));
    require(rr.rank == n, ErrorCode::DegeneratePlane, "matrix is singular");
    Mat<F> inv(n, n, g.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.rref(i, n + j);
    return inv;
}

}  // namespace grass_detail

template <class F>
ZLSystem<F> zero_section_system(const Vec<F>& ell, const HalfSpinor<F>& w) {
    require(ell.size() == 5, ErrorCode::BadShape, "section form needs 5 coefficients");
    require(!is_zero_vector(ell), ErrorCode::ZeroForm, "zero section form");
    const FieldSpec& spec = w.field();
    require(w.canonical_scaled() == standard_dual_point<F>(spec), ErrorCode::WrongComponent,
            "the zero-locus system is computed in the standard frame; reduce w first");

    // g sends ker(x5) to ker(ell): columns are a basis of ker ell, then a
    // vector with ell-value 1. Pivot: last nonzero coefficient of ell.
    std::size_t m = 5;
    for (std::size_t i = 5; i-- > 0;)
        if (!ell[i].is_zero()) { m = i; break; }
    Mat<F> g(5, 5, spec);
    F inv_lm = ell[m].inv();
    std::size_t col = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        if (i == m) continue;
        g(i, col) = one_of<F>(spec);
        g(m, col) -= ell[i] * inv_lm;
        ++col;
    }
    g(m, 4) = inv_lm;

    Mat<F> t = grass_detail::even_power_point_matrix(grass_detail::inverse_matrix(g));

    // Standard system: linear forms u, x15, x25, x35, x45 and the restricted
    // quadrics q5+, q1-, q2-, q3-, q4-.
    static constexpr std::size_t linear_coords[5] = {0, 4, 7, 9, 10};
    std::vector<std::size_t> killed(std::begin(linear_coords), std::end(linear_coords));
    auto qs = sigma_quadrics<F>(spec);
    static constexpr int quad_order[5] = {4, 5, 6, 7, 8};  // q5+, q1-..q4-

    ZLSystem<F> out;
    for (std::size_t lc : linear_coords) {
        Vec<F> row(16, zero_of<F>(spec));
        for (std::size_t j = 0; j < 16; ++j) row[j] = t(lc, j);
        out.linear.push_back(std::move(row));
    }
    for (int qi : quad_order) out.quadratic.push_back(qs[qi].restrict_zero(killed).compose_linear(t));
    return out;
}

// The five quadratic Pfaffians of the skew matrix mixing the y and x blocks
// whose vanishing locus is the Grassmannian cone inside {u = x_i5 = 0}; equal
// to the standard-frame zero-locus quadrics term by term.
template <class F>
std::vector<QuadForm<F>> grassmann_cone_quadrics(const FieldSpec& spec) {
    struct Entry {
        int coord, sign;
    };
    // m[i][j] for i < j over point-coordinate indices
    static constexpr Entry entries[5][5] = {
        {{-1, 0}, {11, -1}, {12, +1}, {13, -1}, {14, +1}},
        {{-1, 0}, {-1, 0}, {8, +1}, {6, +1}, {5, +1}},
        {{-1, 0}, {-1, 0}, {-1, 0}, {3, +1}, {2, +1}},
        {{-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {1, +1}},
        {{-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}},
    };
    auto entry = [&](int i, int j) -> Entry {
        if (i < j) return entries[i][j];
        Entry e = entries[j][i];
        return {e.coord, -e.sign};
    };
    std::vector<QuadForm<F>> out;
    for (int skip = 0; skip < 5; ++skip) {
        int idx[4], t = 0;
        for (int i = 0; i < 5; ++i)
            if (i != skip) idx[t++] = i;
        // Pf(4x4) = m01 m23 - m02 m13 + m03 m12 on the retained indices
        QuadForm<F> q(16, spec);
        auto add = [&](int a, int b, int c, int d, int sign) {
            Entry ab = entry(idx[a], idx[b]), cd = entry(idx[c], idx[d]);
            int s = sign * ab.sign * cd.sign;
            q.coeff(static_cast<std::size_t>(ab.coord), static_cast<std::size_t>(cd.coord)) +=
                make_scalar<F>(spec, s);
        };
        add(0, 1, 2, 3, +1);
        add(0, 2, 1, 3, -1);
        add(0, 3, 1, 2, +1);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace spinorkit
