/// @file sigma.hpp
/// @brief The spinor tenfold in coordinates: the embedding of skew matrices,
/// the ten defining quadrics, tangent spaces, the correspondence with maximal
/// isotropic subspaces, hyperplane tangency loci, and multiplicity probes.
///
/// Coordinates of P^15 are ordered (u; x12,x13,x14,x15,x23,x24,x25,x34,x35,
/// x45; y1..y5). The identification with even half-spinor coefficients is
///   u = s_{}, x_ij = s_{i,j}, y_i = (-1)^i s_{complement of i},
/// the signs being forced by requiring the skew-matrix embedding and the pure
/// spinor of the corresponding graph subspace to agree on the nose.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "spinorkit/clifford.hpp"
#include "spinorkit/error.hpp"
#include "spinorkit/linalg.hpp"
#include "spinorkit/poly.hpp"

namespace spinorkit {

namespace sigma_detail {

// Coordinate indices.
inline constexpr std::size_t kU = 0;
inline constexpr std::size_t kX = 1;   // x12 x13 x14 x15 x23 x24 x25 x34 x35 x45
inline constexpr std::size_t kY = 11;  // y1..y5

// Pair order of the x block; pair_slot[i][j] gives the coordinate index.
inline constexpr int x_pairs[10][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                       {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

inline std::size_t x_coord(int i, int j) {  // 0-based i < j
    static constexpr int table[5][5] = {{-1, 1, 2, 3, 4},
                                        {0, -1, 5, 6, 7},
                                        {0, 0, -1, 8, 9},
                                        {0, 0, 0, -1, 10},
                                        {0, 0, 0, 0, -1}};
    return static_cast<std::size_t>(table[i][j]);
}

// The ten quadrics as (coordinate, coordinate, sign) triples.
struct QuadricTerm {
    int a, b, sign;
};
inline constexpr QuadricTerm quadric_terms[10][4] = {
    // q1+ = u y1 + x23 x45 - x24 x35 + x25 x34
    {{0, 11, +1}, {5, 10, +1}, {6, 9, -1}, {7, 8, +1}},
    // q2+ = u y2 - x13 x45 + x14 x35 - x15 x34
    {{0, 12, +1}, {2, 10, -1}, {3, 9, +1}, {4, 8, -1}},
    // q3+ = u y3 + x12 x45 - x14 x25 + x15 x24
    {{0, 13, +1}, {1, 10, +1}, {3, 7, -1}, {4, 6, +1}},
    // q4+ = u y4 - x12 x35 + x13 x25 - x15 x23
    {{0, 14, +1}, {1, 9, -1}, {2, 7, +1}, {4, 5, -1}},
    // q5+ = u y5 + x12 x34 - x13 x24 + x14 x23
    {{0, 15, +1}, {1, 8, +1}, {2, 6, -1}, {3, 5, +1}},
    // q1- = x12 y2 + x13 y3 + x14 y4 + x15 y5
    {{1, 12, +1}, {2, 13, +1}, {3, 14, +1}, {4, 15, +1}},
    // q2- = -x12 y1 + x23 y3 + x24 y4 + x25 y5
    {{1, 11, -1}, {5, 13, +1}, {6, 14, +1}, {7, 15, +1}},
    // q3- = -x13 y1 - x23 y2 + x34 y4 + x35 y5
    {{2, 11, -1}, {5, 12, -1}, {8, 14, +1}, {9, 15, +1}},
    // q4- = -x14 y1 - x24 y2 - x34 y3 + x45 y5
    {{3, 11, -1}, {6, 12, -1}, {8, 13, -1}, {10, 15, +1}},
    // q5- = -x15 y1 - x25 y2 - x35 y3 - x45 y4
    {{4, 11, -1}, {7, 12, -1}, {9, 13, -1}, {10, 14, -1}},
};

// Even spinor slot -> (coordinate, sign) under the fixed identification.
struct SlotCoord {
    int coord;
    int sign;
};
inline constexpr std::array<SlotCoord, 16> slot_coord = {{
    {0, +1},   // {}          -> u
    {1, +1},   // {1,2}       -> x12
    {2, +1},   // {1,3}       -> x13
    {5, +1},   // {2,3}       -> x23
    {3, +1},   // {1,4}       -> x14
    {6, +1},   // {2,4}       -> x24
    {8, +1},   // {3,4}       -> x34
    {15, -1},  // {1,2,3,4}   -> -y5
    {4, +1},   // {1,5}       -> x15
    {7, +1},   // {2,5}       -> x25
    {9, +1},   // {3,5}       -> x35
    {14, +1},  // {1,2,3,5}   -> y4
    {10, +1},  // {4,5}       -> x45
    {13, -1},  // {1,2,4,5}   -> -y3
    {12, +1},  // {1,3,4,5}   -> y2
    {11, -1},  // {2,3,4,5}   -> -y1
}};

}  // namespace sigma_detail

// ---------------------------------------------------------------------------
// SigmaPoint: a projective point of P^15, canonically scaled (first nonzero
// coordinate 1). It need not lie on the tenfold; membership is a predicate.
// ---------------------------------------------------------------------------

template <class F>
class SigmaPoint {
  public:
    SigmaPoint(Vec<F> coords, FieldSpec spec) : spec_(spec), coords_(std::move(coords)) {
        require(coords_.size() == 16, ErrorCode::BadShape, "a point of P^15 has 16 coordinates");
        canonicalize();
    }

    [[nodiscard]] const Vec<F>& coords() const { return coords_; }
    [[nodiscard]] const FieldSpec& field() const { return spec_; }
    [[nodiscard]] const F& u() const { return coords_[0]; }
    [[nodiscard]] const F& x(int i, int j) const { return coords_[sigma_detail::x_coord(i, j)]; }
    [[nodiscard]] const F& y(int i) const { return coords_[sigma_detail::kY + i]; }

    [[nodiscard]] Mat<F> x_block() const {
        Mat<F> m(5, 5, spec_);
        for (int p = 0; p < 10; ++p) {
            auto [i, j] = sigma_detail::x_pairs[p];
            m(i, j) = coords_[sigma_detail::kX + p];
            m(j, i) = -coords_[sigma_detail::kX + p];
        }
        return m;
    }

    [[nodiscard]] Vec<F> y_part() const {
        return Vec<F>(coords_.begin() + sigma_detail::kY, coords_.end());
    }

    friend bool operator==(const SigmaPoint& a, const SigmaPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const SigmaPoint& a, const SigmaPoint& b) { return !(a == b); }

    // Format: `u; x12 x13 x14 x15 x23 x24 x25 x34 x35 x45; y1 y2 y3 y4 y5`.
    [[nodiscard]] std::string to_string() const {
        std::string s = coords_[0].to_string() + ";";
        for (int p = 0; p < 10; ++p) s += " " + coords_[sigma_detail::kX + p].to_string();
        s += ";";
        for (int i = 0; i < 5; ++i) s += " " + coords_[sigma_detail::kY + i].to_string();
        return s;
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

template <class F>
SigmaPoint<F> parse_sigma_point(const std::string& text, FieldSpec spec) {
    std::vector<std::string> groups;
    std::size_t start = 0;
    while (true) {
        auto end = text.find(';', start);
        groups.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    require(groups.size() == 3, ErrorCode::BadInput, "point needs 'u; x...; y...' groups");
    Vec<F> coords;
    std::size_t expect[3] = {1, 10, 5};
    for (int g = 0; g < 3; ++g) {
        auto part = parse_vector<F>(groups[g], spec);
        require(part.size() == expect[g], ErrorCode::BadInput,
                "group " + std::to_string(g + 1) + " must have " + std::to_string(expect[g]) +
                    " coordinates");
        coords.insert(coords.end(), part.begin(), part.end());
    }
    return SigmaPoint<F>(std::move(coords), spec);
}

// ---------------------------------------------------------------------------
// The ten quadrics.
// ---------------------------------------------------------------------------

template <class F>
std::vector<QuadForm<F>> sigma_quadrics(const FieldSpec& spec) {
    std::vector<QuadForm<F>> qs;
    qs.reserve(10);
    for (int k = 0; k < 10; ++k) {
        QuadForm<F> q(16, spec);
        for (const auto& t : sigma_detail::quadric_terms[k])
            q.coeff(t.a, t.b) = make_scalar<F>(spec, t.sign);
        qs.push_back(std::move(q));
    }
    return qs;
}

// (q1+,...,q5+, q1-,...,q5-) at the point; all zero iff the point lies on the
// tenfold (u y = Pf(X) and X y = 0 in matrix form).
template <class F>
Vec<F> quadrics_eval(const SigmaPoint<F>& pt) {
    const auto& c = pt.coords();
    Vec<F> out(10, zero_of<F>(pt.field()));
    for (int k = 0; k < 10; ++k) {
        F acc = zero_of<F>(pt.field());
        for (const auto& t : sigma_detail::quadric_terms[k]) {
            F term = c[t.a] * c[t.b];
            if (t.sign < 0) acc -= term;
            else acc += term;
        }
        out[k] = acc;
    }
    return out;
}

template <class F>
bool on_sigma(const SigmaPoint<F>& pt) {
    return is_zero_vector(quadrics_eval(pt));
}

// j : Alt5 -> P^15, A -> (1 : A : Pf(A)); lands on the tenfold by the
// classical sub-Pfaffian identities.
template <class F>
SigmaPoint<F> embed_alt(const Mat<F>& a) {
    require(a.rows() == 5 && a.cols() == 5, ErrorCode::BadShape, "expected a 5x5 matrix");
    require(a.is_skew(), ErrorCode::NotSkew, "embedding needs a skew matrix");
    Vec<F> coords(16, zero_of<F>(a.field()));
    coords[0] = one_of<F>(a.field());
    for (int p = 0; p < 10; ++p) {
        auto [i, j] = sigma_detail::x_pairs[p];
        coords[sigma_detail::kX + p] = a(i, j);
    }
    auto pf = sub_pfaffian_vector(a);
    for (int i = 0; i < 5; ++i) coords[sigma_detail::kY + i] = pf[i];
    return SigmaPoint<F>(std::move(coords), a.field());
}

// ---------------------------------------------------------------------------
// Point <-> spinor identification.
// ---------------------------------------------------------------------------

template <class F>
HalfSpinor<F> spinor_of_point(const SigmaPoint<F>& pt) {
    HalfSpinor<F> s(Parity::Even, pt.field());
    for (int sl = 0; sl < masks::kCount; ++sl) {
        const auto& sc = sigma_detail::slot_coord[sl];
        F v = pt.coords()[sc.coord];
        s.set_coeff_at_slot(sl, sc.sign < 0 ? -v : v);
    }
    return s;
}

template <class F>
SigmaPoint<F> point_of_spinor(const HalfSpinor<F>& s) {
    require(s.parity() == Parity::Even, ErrorCode::WrongComponent,
            "points of P(S+) come from even spinors");
    Vec<F> coords(16, zero_of<F>(s.field()));
    for (int sl = 0; sl < masks::kCount; ++sl) {
        const auto& sc = sigma_detail::slot_coord[sl];
        const F& v = s.coeff_at_slot(sl);
        coords[sc.coord] = sc.sign < 0 ? -v : v;
    }
    return SigmaPoint<F>(std::move(coords), s.field());
}

template <class F>
IsotropicSubspace<F> point_to_subspace(const SigmaPoint<F>& pt) {
    require(on_sigma(pt), ErrorCode::NotOnSigma, "point does not satisfy the ten quadrics");
    auto ann = annihilator(spinor_of_point(pt));
    require(ann.is_pure, ErrorCode::Internal, "point on the tenfold with impure spinor");
    return IsotropicSubspace<F>(ann.basis);
}

template <class F>
SigmaPoint<F> subspace_to_point(const IsotropicSubspace<F>& u) {
    require(u.parity() == Parity::Even, ErrorCode::WrongComponent,
            "odd-parity subspaces correspond to points of the dual family");
    return point_of_spinor(pure_spinor(u));
}

// ---------------------------------------------------------------------------
// Hyperplanes cut by odd spinors.
// ---------------------------------------------------------------------------

// Coefficients, in point-coordinate order, of the hyperplane {beta(., w) = 0}.
template <class F>
Vec<F> hyperplane_form(const HalfSpinor<F>& w) {
    require(w.parity() == Parity::Odd, ErrorCode::ParityMismatch,
            "hyperplanes of P(S+) are cut by odd spinors");
    auto on_slots = beta_form(w);
    Vec<F> row(16, zero_of<F>(w.field()));
    for (int sl = 0; sl < masks::kCount; ++sl) {
        const auto& sc = sigma_detail::slot_coord[sl];
        row[sc.coord] = sc.sign < 0 ? -on_slots[sl] : on_slots[sl];
    }
    return row;
}

template <class F>
F evaluate_form(const Vec<F>& form, const SigmaPoint<F>& pt) {
    F acc = zero_of<F>(pt.field());
    for (std::size_t i = 0; i < 16; ++i) acc += form[i] * pt.coords()[i];
    return acc;
}

// The standard dual point w0 = [e1^e2^e3^e4^e5]; its hyperplane is {u = 0}.
template <class F>
HalfSpinor<F> standard_dual_point(const FieldSpec& spec) {
    return HalfSpinor<F>::monomial(0b11111, spec);
}

// true iff beta(s_c, w) = 0, i.e. dim(U_c ^ U_w) >= 1.
template <class F>
bool beta_membership(const SigmaPoint<F>& c, const HalfSpinor<F>& w) {
    require(on_sigma(c), ErrorCode::NotOnSigma, "membership test needs a point of the tenfold");
    require(is_pure(w), ErrorCode::NotPure, "dual point must be a pure spinor");
    return beta_pair(spinor_of_point(c), w).is_zero();
}

// ---------------------------------------------------------------------------
// Tangency: Jacobian and tangent space.
// ---------------------------------------------------------------------------

template <class F>
struct JacobianTangent {
    Mat<F> jacobian;       // 10 x 16
    Mat<F> tangent_basis;  // affine tangent cone, 11 x 16 at smooth points
};

template <class F>
JacobianTangent<F> jacobian_tangent(const SigmaPoint<F>& pt) {
    require(on_sigma(pt), ErrorCode::NotOnSigma, "Jacobian is taken at points of the tenfold");
    auto qs = sigma_quadrics<F>(pt.field());
    Mat<F> jac(10, 16, pt.field());
    for (int k = 0; k < 10; ++k) {
        auto g = qs[k].gradient(pt.coords());
        for (std::size_t j = 0; j < 16; ++j) jac(k, j) = g[j];
    }
    auto ker = kernel_basis(jac);
    Mat<F> tangent = ker.empty() ? Mat<F>(0, 16, pt.field()) : Mat<F>::from_rows(ker, pt.field());
    return {std::move(jac), row_span_basis(tangent)};
}

// T_c Sigma is contained in the hyperplane of w iff the hyperplane section is
// singular at c; equivalent to dim(U_c ^ U_w) = 4 by the multiplicity formula.
template <class F>
bool hyperplane_tangent_at(const SigmaPoint<F>& c, const HalfSpinor<F>& w) {
    auto jt = jacobian_tangent(c);
    auto form = hyperplane_form(w);
    for (std::size_t i = 0; i < jt.tangent_basis.rows(); ++i) {
        F acc = zero_of<F>(c.field());
        for (std::size_t j = 0; j < 16; ++j) acc += form[j] * jt.tangent_basis(i, j);
        if (!acc.is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// complete_isotropic: the two maximal isotropic extensions of a 4-dimensional
// isotropic subspace, one per component; the quotient of its perp is a split
// hyperbolic plane, so both extensions are rational over any base field of
// odd characteristic.
// ---------------------------------------------------------------------------

template <class F>
IsotropicSubspace<F> complete_isotropic(const Mat<F>& h, Parity target) {
    require(h.rows() == 4 && h.cols() == 10, ErrorCode::BadShape,
            "expected a 4x10 basis of an isotropic subspace");
    require_odd_characteristic(h.field(), "isotropic completion");
    require(rank_of(h) == 4, ErrorCode::DegeneratePlane, "basis must have rank 4");
    for (std::size_t i = 0; i < 4; ++i) {
        auto ri = h.row(i);
        require(SplitQuadraticSpace::q(ri).is_zero(), ErrorCode::NotMaximalIsotropic,
                "input is not isotropic");
        for (std::size_t j = i + 1; j < 4; ++j)
            require(SplitQuadraticSpace::polar(ri, h.row(j)).is_zero(),
                    ErrorCode::NotMaximalIsotropic, "input is not isotropic");
    }
    const FieldSpec& spec = h.field();

    // h^perp: kernel of v -> (B(h_i, v))_i. B pairs coordinate i with 5+i.
    Mat<F> pairing(4, 10, spec);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            pairing(i, j) = h(i, 5 + j);
            pairing(i, 5 + j) = h(i, j);
        }
    auto perp_vectors = kernel_basis(pairing);
    Mat<F> perp = Mat<F>::from_rows(perp_vectors, spec);
    require(perp.rows() == 6, ErrorCode::Internal, "perp of a rank-4 isotropic must be 6-dim");

    // Two vectors of perp completing h, in deterministic kernel order.
    Mat<F> accum = row_span_basis(h);
    std::vector<Vec<F>> complement;
    for (std::size_t i = 0; i < perp.rows() && complement.size() < 2; ++i) {
        Mat<F> trial = accum.stacked(Mat<F>::from_rows({perp.row(i)}, spec));
        if (rank_of(trial) > accum.rows()) {
            accum = row_span_basis(trial);
            complement.push_back(perp.row(i));
        }
    }
    require(complement.size() == 2, ErrorCode::Internal, "could not complement inside the perp");
    const auto& c1 = complement[0];
    const auto& c2 = complement[1];

    F q1 = SplitQuadraticSpace::q(c1);
    F q2 = SplitQuadraticSpace::q(c2);
    F b = SplitQuadraticSpace::polar(c1, c2);

    // Roots of q1 x^2 + b xy + q2 y^2 = 0, the two isotropic directions of the
    // induced hyperbolic plane.
    std::vector<std::pair<F, F>> roots;
    if (q1.is_zero()) {
        require(!b.is_zero(), ErrorCode::Internal, "degenerate induced form");
        roots.emplace_back(one_of<F>(spec), zero_of<F>(spec));
        roots.emplace_back(q2, -b);
    } else {
        F disc = b * b - make_scalar<F>(spec, 4) * q1 * q2;
        F s;
        try {
            s = scalar_sqrt(disc);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NonResidue)
                fail(ErrorCode::NotSplitOverField, "induced plane is anisotropic over this field");
            throw;
        }
        F two_q1 = q1 + q1;
        roots.emplace_back(-b + s, two_q1);
        roots.emplace_back(-b - s, two_q1);
    }

    for (const auto& [x, y] : roots) {
        Vec<F> v(10, zero_of<F>(spec));
        for (std::size_t j = 0; j < 10; ++j) v[j] = x * c1[j] + y * c2[j];
        if (is_zero_vector(v)) continue;
        Mat<F> ext = h.stacked(Mat<F>::from_rows({v}, spec));
        if (rank_of(ext) != 5) continue;  // double root direction already inside h
        IsotropicSubspace<F> u(ext);
        if (u.parity() == target) return u;
    }
    fail(ErrorCode::Internal, "no completion of the requested parity exists");
}

// ---------------------------------------------------------------------------
// Tangency locus of a hyperplane: the singular P^4 of H_w, spanned by the
// even completions over the five coordinate hyperplanes of U_w.
// ---------------------------------------------------------------------------

template <class F>
struct TangencyLocus {
    std::vector<SigmaPoint<F>> points;  // five spanning points
    Mat<F> span_basis;                  // 5 x 16, rank 5
};

template <class F>
TangencyLocus<F> tangency_locus(const HalfSpinor<F>& w) {
    require(w.parity() == Parity::Odd, ErrorCode::ParityMismatch, "dual points are odd spinors");
    auto ann = annihilator(w);
    require(ann.is_pure, ErrorCode::NotPure, "tangency locus needs a pure dual point");
    IsotropicSubspace<F> uw(ann.basis);

    std::vector<SigmaPoint<F>> points;
    for (std::size_t drop = 0; drop < 5; ++drop) {
        Mat<F> h(4, 10, w.field());
        std::size_t r = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            if (i == drop) continue;
            for (std::size_t j = 0; j < 10; ++j) h(r, j) = uw.basis()(i, j);
            ++r;
        }
        auto completed = complete_isotropic(h, Parity::Even);
        require(incidence_dim(completed, uw) == 4, ErrorCode::Internal,
                "completion does not meet U_w in dimension 4");
        points.push_back(subspace_to_point(completed));
    }
    Mat<F> span(5, 16, w.field());
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 16; ++j) span(i, j) = points[i].coords()[j];
    require(rank_of(span) == 5, ErrorCode::Internal, "tangency points do not span a P^4");
    return {std::move(points), row_span_basis(span)};
}

// ---------------------------------------------------------------------------
// multiplicity_probe: restrict the ten quadrics to the line through c and d,
// as binary quadratics s^2 q(c) + st grad q(c).d + t^2 q(d) with q(c) = 0, and
// return the order of vanishing of their gcd at c. Along generic tangent
// probes this order is the multiplicity of H_w at c: 2 on the tangency locus,
// 1 at smooth points along generic hyperplane probes.
// ---------------------------------------------------------------------------

struct MultiplicityResult {
    bool positive_dimensional = false;
    int order = 0;  // meaningful when not positive_dimensional

    [[nodiscard]] std::string to_string() const {
        return positive_dimensional ? "positive-dimensional" : std::to_string(order);
    }
};

template <class F>
MultiplicityResult multiplicity_probe(const SigmaPoint<F>& c, const HalfSpinor<F>& w,
                                      const SigmaPoint<F>& second) {
    require(on_sigma(c), ErrorCode::NotOnSigma, "probe base point must lie on the tenfold");
    auto form = hyperplane_form(w);
    require(evaluate_form(form, c).is_zero(), ErrorCode::BadProbe,
            "base point is not in the hyperplane of w");
    require(evaluate_form(form, second).is_zero(), ErrorCode::BadProbe,
            "probe line leaves the hyperplane of w");
    require(c != second, ErrorCode::BadProbe, "probe needs two distinct points");

    auto qs = sigma_quadrics<F>(c.field());
    bool all_linear_zero = true, all_const_zero = true;
    for (const auto& q : qs) {
        F lin = q.polar(c.coords(), second.coords());
        F quad = q.evaluate(second.coords());
        if (!lin.is_zero()) all_linear_zero = false;
        if (!quad.is_zero()) all_const_zero = false;
    }
    if (all_linear_zero && all_const_zero) return {true, 0};
    if (all_linear_zero) return {false, 2};
    return {false, 1};
}

// A deterministic probe direction inside the affine tangent space at c, kept
// inside the hyperplane of w automatically when the hyperplane is tangent.
template <class F>
SigmaPoint<F> tangent_probe_point(const SigmaPoint<F>& c, Rng& rng) {
    auto jt = jacobian_tangent(c);
    const FieldSpec& spec = c.field();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec<F> v(16, zero_of<F>(spec));
        for (std::size_t i = 0; i < jt.tangent_basis.rows(); ++i) {
            F coef = random_scalar<F>(rng, spec);
            if (coef.is_zero()) continue;
            for (std::size_t j = 0; j < 16; ++j) v[j] += coef * jt.tangent_basis(i, j);
        }
        if (is_zero_vector(v)) continue;
        SigmaPoint<F> pt(std::move(v), spec);
        if (pt != c) return pt;
    }
    fail(ErrorCode::Internal, "could not sample a tangent probe direction");
}

// ---------------------------------------------------------------------------
// Sampling helpers.
// ---------------------------------------------------------------------------

template <class F>
Mat<F> random_skew5(Rng& rng, const FieldSpec& spec) {
    Mat<F> a(5, 5, spec);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            F v = random_scalar<F>(rng, spec);
            a(i, j) = v;
            a(j, i) = -v;
        }
    return a;
}

template <class F>
SigmaPoint<F> random_sigma_point(Rng& rng, const FieldSpec& spec) {
    return subspace_to_point(random_isotropic<F>(rng, spec, Parity::Even));
}

}  // namespace spinorkit
