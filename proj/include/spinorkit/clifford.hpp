/// @file clifford.hpp
/// @brief Exterior algebra on a 5-space, half-spinors, the Clifford action,
/// the fundamental pairing beta, and the pure-spinor correspondence with
/// maximal isotropic subspaces of the split 10-dimensional quadratic space.
///
/// Conventions, fixed once for the whole library:
///  - V = U0 + Uinf with basis order (e_{-1},...,e_{-5}, e_1,...,e_5) and
///    pairing B(e_{-i}, e_j) = delta_ij.
///  - q(u0 + uinf) = (u0, uinf), so that phi_u . phi_u = q(u) id. The polar
///    form B(u,v) = q(u+v) - q(u) - q(v) avoids division by 2.
///  - e_I for I = {i1 < ... < ip} means e_{i1} ^ ... ^ e_{ip}; subsets of
///    {1..5} are 5-bit masks (bit i-1 for index i), coefficients stored in
///    increasing numeric mask order within each parity.

#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "spinorkit/error.hpp"
#include "spinorkit/linalg.hpp"
#include "spinorkit/matrix.hpp"
#include "spinorkit/rng.hpp"

namespace spinorkit {

enum class Parity { Even, Odd };

inline Parity opposite(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

namespace masks {

inline constexpr int kCount = 16;

inline constexpr std::array<std::uint8_t, kCount> even = {0,  3,  5,  6,  9,  10, 12, 15,
                                                          17, 18, 20, 23, 24, 27, 29, 30};
inline constexpr std::array<std::uint8_t, kCount> odd = {1,  2,  4,  7,  8,  11, 13, 14,
                                                         16, 19, 21, 22, 25, 26, 28, 31};

constexpr int popcount(std::uint8_t m) {
    int c = 0;
    while (m) {
        c += m & 1;
        m = static_cast<std::uint8_t>(m >> 1);
    }
    return c;
}

inline constexpr std::array<std::uint8_t, 32> slot_table = [] {
    std::array<std::uint8_t, 32> t{};
    for (int s = 0; s < kCount; ++s) {
        t[even[s]] = static_cast<std::uint8_t>(s);
        t[odd[s]] = static_cast<std::uint8_t>(s);
    }
    return t;
}();

inline Parity parity_of(std::uint8_t mask) {
    return popcount(mask) % 2 == 0 ? Parity::Even : Parity::Odd;
}

inline int slot(std::uint8_t mask) { return slot_table[mask]; }

inline std::uint8_t mask_at(Parity p, int s) { return p == Parity::Even ? even[s] : odd[s]; }

// #{m in mask : m < j}, j and mask over 0-based bit positions.
inline int count_below(std::uint8_t mask, int j) {
    return popcount(static_cast<std::uint8_t>(mask & ((1u << j) - 1u)));
}

inline std::string to_string(std::uint8_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!first) s += ',';
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

inline std::uint8_t parse(const std::string& text) {
    require(text.size() >= 2 && text.front() == '{' && text.back() == '}', ErrorCode::BadInput,
            "bad mask literal '" + text + "'");
    std::uint8_t m = 0;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        int i = std::stoi(tok);
        require(i >= 1 && i <= 5, ErrorCode::BadInput, "mask index out of range in '" + text + "'");
        require(!(m & (1u << (i - 1))), ErrorCode::BadInput, "repeated index in '" + text + "'");
        m |= static_cast<std::uint8_t>(1u << (i - 1));
    }
    return m;
}

}  // namespace masks

// ---------------------------------------------------------------------------
// The split quadratic space (V, q) with its fixed hyperbolic basis.
// ---------------------------------------------------------------------------

struct SplitQuadraticSpace {
    static constexpr std::size_t dim = 10;

    template <class F>
    static F q(const Vec<F>& v) {
        F acc = v.empty() ? F() : v[0].zero();
        for (std::size_t i = 0; i < 5; ++i) acc += v[i] * v[5 + i];
        return acc;
    }

    // Polarization-free bilinear form q(u+v) - q(u) - q(v); valid in every
    // characteristic, equals 2 B_sym in odd characteristic.
    template <class F>
    static F polar(const Vec<F>& u, const Vec<F>& v) {
        F acc = u.empty() ? F() : u[0].zero();
        for (std::size_t i = 0; i < 5; ++i) acc += u[i] * v[5 + i] + v[i] * u[5 + i];
        return acc;
    }
};

// ---------------------------------------------------------------------------
// HalfSpinor
// ---------------------------------------------------------------------------

template <class F>
class HalfSpinor {
  public:
    HalfSpinor(Parity parity, FieldSpec spec)
        : parity_(parity), spec_(spec), coeffs_{} {
        coeffs_.fill(zero_of<F>(spec));
    }

    static HalfSpinor monomial(std::uint8_t mask, FieldSpec spec) {
        HalfSpinor s(masks::parity_of(mask), spec);
        s.coeffs_[masks::slot(mask)] = one_of<F>(spec);
        return s;
    }

    static HalfSpinor scalar_one(FieldSpec spec) { return monomial(0, spec); }

    [[nodiscard]] Parity parity() const { return parity_; }
    [[nodiscard]] const FieldSpec& field() const { return spec_; }

    [[nodiscard]] const F& coeff(std::uint8_t mask) const {
        require(masks::parity_of(mask) == parity_, ErrorCode::ParityMismatch,
                "coefficient mask of wrong parity");
        return coeffs_[masks::slot(mask)];
    }
    void set_coeff(std::uint8_t mask, const F& v) {
        require(masks::parity_of(mask) == parity_, ErrorCode::ParityMismatch,
                "coefficient mask of wrong parity");
        coeffs_[masks::slot(mask)] = v;
    }

    [[nodiscard]] const F& coeff_at_slot(int s) const { return coeffs_[s]; }
    void set_coeff_at_slot(int s, const F& v) { coeffs_[s] = v; }

    [[nodiscard]] bool is_zero() const {
        for (const F& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    HalfSpinor& operator+=(const HalfSpinor& o) {
        require(parity_ == o.parity_, ErrorCode::ParityMismatch, "adding spinors of opposite parity");
        for (int s = 0; s < masks::kCount; ++s) coeffs_[s] += o.coeffs_[s];
        return *this;
    }
    friend HalfSpinor operator+(HalfSpinor a, const HalfSpinor& b) { return a += b; }
    HalfSpinor operator-() const {
        HalfSpinor r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend HalfSpinor operator-(HalfSpinor a, const HalfSpinor& b) { return a += -b; }
    HalfSpinor& operator*=(const F& f) {
        for (auto& c : coeffs_) c *= f;
        return *this;
    }
    friend HalfSpinor operator*(const F& f, HalfSpinor s) { return s *= f; }

    friend bool operator==(const HalfSpinor& a, const HalfSpinor& b) {
        return a.parity_ == b.parity_ && a.coeffs_ == b.coeffs_;
    }

    // First nonzero coefficient in mask order scaled to 1.
    [[nodiscard]] HalfSpinor canonical_scaled() const {
        for (int s = 0; s < masks::kCount; ++s) {
            if (coeffs_[s].is_zero()) continue;
            HalfSpinor r = *this;
            F inv = coeffs_[s].inv();
            for (auto& c : r.coeffs_) c *= inv;
            return r;
        }
        return *this;
    }

    [[nodiscard]] bool proportional_to(const HalfSpinor& o) const {
        return parity_ == o.parity_ && canonical_scaled() == o.canonical_scaled();
    }

    [[nodiscard]] Vec<F> coefficients() const { return Vec<F>(coeffs_.begin(), coeffs_.end()); }

    // Text format: "even:"/"odd:" then coeff@{indices} pairs, zeros omitted.
    [[nodiscard]] std::string to_string() const {
        std::string out = parity_ == Parity::Even ? "even:" : "odd:";
        for (int s = 0; s < masks::kCount; ++s) {
            if (coeffs_[s].is_zero()) continue;
            out += ' ';
            out += coeffs_[s].to_string();
            out += '@';
            out += masks::to_string(masks::mask_at(parity_, s));
        }
        return out;
    }

    static HalfSpinor parse(const std::string& text, FieldSpec spec) {
        std::istringstream is(text);
        std::string head;
        is >> head;
        Parity p;
        if (head == "even:" || head == "even") p = Parity::Even;
        else if (head == "odd:" || head == "odd") p = Parity::Odd;
        else fail(ErrorCode::BadInput, "spinor text must start with 'even:' or 'odd:'");
        HalfSpinor s(p, spec);
        std::string tok;
        while (is >> tok) {
            auto at = tok.find('@');
            require(at != std::string::npos, ErrorCode::BadInput, "expected coeff@mask, got '" + tok + "'");
            F c = parse_scalar<F>(tok.substr(0, at), spec);
            std::uint8_t m = masks::parse(tok.substr(at + 1));
            require(masks::parity_of(m) == p, ErrorCode::ParityMismatch,
                    "mask " + masks::to_string(m) + " has wrong parity");
            s.set_coeff(m, c);
        }
        return s;
    }

  private:
    Parity parity_;
    FieldSpec spec_;
    std::array<F, masks::kCount> coeffs_;
};

// ---------------------------------------------------------------------------
// Clifford action and the fundamental form.
// ---------------------------------------------------------------------------

// phi_u = contraction by the U0 part + wedge by the Uinf part; flips parity.
template <class F>
HalfSpinor<F> clifford_act(const Vec<F>& u, const HalfSpinor<F>& s) {
    require(u.size() == 10, ErrorCode::DimensionMismatch, "Clifford vector must have 10 coordinates");
    HalfSpinor<F> out(opposite(s.parity()), s.field());
    for (int sl = 0; sl < masks::kCount; ++sl) {
        const F& c = s.coeff_at_slot(sl);
        if (c.is_zero()) continue;
        std::uint8_t m = masks::mask_at(s.parity(), sl);
        for (int j = 0; j < 5; ++j) {
            bool inside = (m >> j) & 1u;
            int below = masks::count_below(m, j);
            if (inside) {
                if (u[j].is_zero()) continue;
                std::uint8_t t = static_cast<std::uint8_t>(m & ~(1u << j));
                F term = u[j] * c;
                if (below % 2) term = -term;
                out.set_coeff_at_slot(masks::slot(t), out.coeff_at_slot(masks::slot(t)) + term);
            } else {
                if (u[5 + j].is_zero()) continue;
                std::uint8_t t = static_cast<std::uint8_t>(m | (1u << j));
                F term = u[5 + j] * c;
                if (below % 2) term = -term;
                out.set_coeff_at_slot(masks::slot(t), out.coeff_at_slot(masks::slot(t)) + term);
            }
        }
    }
    return out;
}

// s ^ v for v in Uinf (5 coordinates), the vector acting from the right.
template <class F>
HalfSpinor<F> wedge_right(const HalfSpinor<F>& s, const Vec<F>& v) {
    require(v.size() == 5, ErrorCode::DimensionMismatch, "wedge vector must have 5 coordinates");
    HalfSpinor<F> out(opposite(s.parity()), s.field());
    for (int sl = 0; sl < masks::kCount; ++sl) {
        const F& c = s.coeff_at_slot(sl);
        if (c.is_zero()) continue;
        std::uint8_t m = masks::mask_at(s.parity(), sl);
        int deg = masks::popcount(m);
        for (int j = 0; j < 5; ++j) {
            if ((m >> j) & 1u) continue;
            if (v[j].is_zero()) continue;
            std::uint8_t t = static_cast<std::uint8_t>(m | (1u << j));
            int above = deg - masks::count_below(m, j);  // e_j passes these factors
            F term = v[j] * c;
            if (above % 2) term = -term;
            out.set_coeff_at_slot(masks::slot(t), out.coeff_at_slot(masks::slot(t)) + term);
        }
    }
    return out;
}

namespace detail {
// Sign of the shuffle sorting (sorted I, sorted J) into sorted I u J, for
// disjoint masks: parity of #{(i,j) : i in I, j in J, i > j}.
inline int shuffle_sign(std::uint8_t i_mask, std::uint8_t j_mask) {
    int inversions = 0;
    for (int j = 0; j < 5; ++j)
        if ((j_mask >> j) & 1u)
            inversions += masks::popcount(static_cast<std::uint8_t>(i_mask & ~((2u << j) - 1u)));
    return inversions % 2 ? -1 : 1;
}
}  // namespace detail

// beta(xi, xi') = (-1)^{p(p-1)/2} (xi ^ xi')_top on homogeneous pieces of
// degree p. For nu = 5 the arguments must have opposite parity.
template <class F>
F beta_pair(const HalfSpinor<F>& s, const HalfSpinor<F>& t) {
    require(s.parity() != t.parity(), ErrorCode::ParityMismatch,
            "beta needs opposite parities (no top component otherwise)");
    F acc = zero_of<F>(s.field());
    for (int sl = 0; sl < masks::kCount; ++sl) {
        const F& cs = s.coeff_at_slot(sl);
        if (cs.is_zero()) continue;
        std::uint8_t m = masks::mask_at(s.parity(), sl);
        std::uint8_t comp = static_cast<std::uint8_t>(~m & 0x1fu);
        const F& ct = t.coeff_at_slot(masks::slot(comp));
        if (ct.is_zero()) continue;
        int p = masks::popcount(m);
        int sign = ((p * (p - 1) / 2) % 2 ? -1 : 1) * detail::shuffle_sign(m, comp);
        F term = cs * ct;
        acc += (sign < 0) ? -term : term;
    }
    return acc;
}

// Coefficients of the linear form s -> beta(s, w) on the 16 slots of the
// opposite parity; row vector of the hyperplane cut by w.
template <class F>
Vec<F> beta_form(const HalfSpinor<F>& w) {
    Vec<F> row(masks::kCount, zero_of<F>(w.field()));
    Parity p = opposite(w.parity());
    for (int sl = 0; sl < masks::kCount; ++sl) {
        HalfSpinor<F> basis = HalfSpinor<F>::monomial(masks::mask_at(p, sl), w.field());
        row[sl] = beta_pair(basis, w);
    }
    return row;
}

// ---------------------------------------------------------------------------
// IsotropicSubspace: a maximal isotropic 5-subspace of (V, q), stored as the
// canonical RREF basis so equality is structural.
// ---------------------------------------------------------------------------

template <class F>
class IsotropicSubspace {
  public:
    explicit IsotropicSubspace(const Mat<F>& basis_rows) : basis_(row_span_basis(basis_rows)) {
        require(basis_rows.cols() == 10, ErrorCode::DimensionMismatch,
                "isotropic subspace lives in a 10-dimensional space");
        require(basis_.rows() == 5, ErrorCode::NotMaximalIsotropic,
                "expected rank 5, got " + std::to_string(basis_.rows()));
        for (std::size_t i = 0; i < 5; ++i) {
            auto ri = basis_.row(i);
            require(SplitQuadraticSpace::q(ri).is_zero(), ErrorCode::NotMaximalIsotropic,
                    "basis vector is not q-isotropic");
            for (std::size_t j = i + 1; j < 5; ++j)
                require(SplitQuadraticSpace::polar(ri, basis_.row(j)).is_zero(),
                        ErrorCode::NotMaximalIsotropic, "basis vectors not pairwise orthogonal");
        }
    }

    [[nodiscard]] const Mat<F>& basis() const { return basis_; }
    [[nodiscard]] const FieldSpec& field() const { return basis_.field(); }

    // dim(U ^ Uinf) = 5 - rank of the U0 block.
    [[nodiscard]] std::size_t dim_meet_uinf() const {
        Mat<F> u0(5, 5, field());
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) u0(i, j) = basis_(i, j);
        return 5 - rank_of(u0);
    }

    [[nodiscard]] Parity parity() const {
        return dim_meet_uinf() % 2 == 0 ? Parity::Even : Parity::Odd;
    }

    friend bool operator==(const IsotropicSubspace& a, const IsotropicSubspace& b) {
        return a.basis_ == b.basis_;
    }

  private:
    Mat<F> basis_;
};

// Vector-space dimension of U ^ U' (0..5); the paper's projective dimensions
// are this minus one.
template <class F>
std::size_t incidence_dim(const IsotropicSubspace<F>& a, const IsotropicSubspace<F>& b) {
    require(a.field() == b.field(), ErrorCode::FieldMismatch, "subspaces over different fields");
    return intersect_subspaces(a.basis(), b.basis()).rows();
}

// ---------------------------------------------------------------------------
// pure_spinor: the division-free construction through the adapted basis.
// Writing U = (graph rows v_i) + (rows f_k spanning U ^ Uinf), the spinor is
//   s_U = (sum_I Pf_I(A) e_I) ^ f_1 ^ ... ^ f_d
// where the skew matrix A solves d(v0_i) alpha + vinf_i = 0 mod span{f_k}.
// No factorial division: exp(alpha) is expanded via sub-Pfaffians.
// ---------------------------------------------------------------------------

template <class F>
HalfSpinor<F> pure_spinor(const IsotropicSubspace<F>& u) {
    const FieldSpec& spec = u.field();
    const Mat<F>& rr = u.basis();  // already RREF

    std::vector<std::size_t> graph_rows, meet_rows;
    for (std::size_t i = 0; i < 5; ++i) {
        bool graph = false;
        for (std::size_t j = 0; j < 5; ++j)
            if (!rr(i, j).is_zero()) { graph = true; break; }
        (graph ? graph_rows : meet_rows).push_back(i);
    }
    const std::size_t r = graph_rows.size(), d = meet_rows.size();

    // Unknowns: A_{kl} for 0 <= k < l < 5 (10 of them), then mu_{i,k}.
    auto avar = [](std::size_t k, std::size_t l) {  // k < l
        static constexpr int base[5] = {0, 4, 7, 9, 10};
        return static_cast<std::size_t>(base[k]) + (l - k - 1);
    };
    Mat<F> sys(5 * r, 10 + r * d, spec);
    Vec<F> rhs(5 * r, zero_of<F>(spec));
    for (std::size_t gi = 0; gi < r; ++gi) {
        auto v = rr.row(graph_rows[gi]);
        for (std::size_t m = 0; m < 5; ++m) {
            std::size_t eq = gi * 5 + m;
            for (std::size_t l = 0; l < 5; ++l) {
                if (l == m) continue;
                // coefficient of the (l,m) entry of the skew matrix A
                if (l < m) sys(eq, avar(l, m)) += v[l];
                else sys(eq, avar(m, l)) -= v[l];
            }
            for (std::size_t k = 0; k < d; ++k) sys(eq, 10 + gi * d + k) = -rr(meet_rows[k], 5 + m);
            rhs[eq] = -v[5 + m];
        }
    }
    auto sol = solve(sys, rhs);
    require(sol.has_value(), ErrorCode::Internal, "pure spinor system inconsistent");

    Mat<F> a(5, 5, spec);
    for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t l = k + 1; l < 5; ++l) {
            a(k, l) = (*sol)[avar(k, l)];
            a(l, k) = -a(k, l);
        }

    HalfSpinor<F> s(Parity::Even, spec);
    for (int sl = 0; sl < masks::kCount; ++sl) {
        std::uint8_t m = masks::even[sl];
        std::vector<std::size_t> idx;
        for (int b = 0; b < 5; ++b)
            if ((m >> b) & 1u) idx.push_back(static_cast<std::size_t>(b));
        s.set_coeff_at_slot(sl, pfaffian_sub(a, std::move(idx)));
    }
    for (std::size_t k = 0; k < d; ++k) {
        Vec<F> f(5, zero_of<F>(spec));
        for (std::size_t j = 0; j < 5; ++j) f[j] = rr(meet_rows[k], 5 + j);
        s = wedge_right(s, f);
    }
    for (std::size_t i = 0; i < 5; ++i)
        require(clifford_act(rr.row(i), s).is_zero(), ErrorCode::Internal,
                "constructed spinor is not annihilated by its subspace");
    return s.canonical_scaled();
}

// ---------------------------------------------------------------------------
// annihilator: {u in V : phi_u(s) = 0} by one exact kernel computation;
// the spinor is pure exactly when the dimension is 5.
// ---------------------------------------------------------------------------

template <class F>
struct AnnihilatorResult {
    Mat<F> basis;  // rows, RREF
    bool is_pure = false;
};

template <class F>
AnnihilatorResult<F> annihilator(const HalfSpinor<F>& s) {
    require(!s.is_zero(), ErrorCode::ZeroSpinor, "annihilator of the zero spinor");
    const FieldSpec& spec = s.field();
    Mat<F> phi(masks::kCount, 10, spec);
    for (std::size_t j = 0; j < 10; ++j) {
        Vec<F> basis_vec(10, zero_of<F>(spec));
        basis_vec[j] = one_of<F>(spec);
        HalfSpinor<F> img = clifford_act(basis_vec, s);
        for (int sl = 0; sl < masks::kCount; ++sl) phi(sl, j) = img.coeff_at_slot(sl);
    }
    auto ker = kernel_basis(phi);
    Mat<F> rows = ker.empty() ? Mat<F>(0, 10, spec) : Mat<F>::from_rows(ker, spec);
    AnnihilatorResult<F> out{row_span_basis(rows), ker.size() == 5};
    return out;
}

template <class F>
bool is_pure(const HalfSpinor<F>& s) {
    return !s.is_zero() && annihilator(s).is_pure;
}

template <class F>
IsotropicSubspace<F> annihilator_subspace(const HalfSpinor<F>& s) {
    auto ann = annihilator(s);
    require(ann.is_pure, ErrorCode::NotPure,
            "spinor annihilator has dimension " + std::to_string(ann.basis.rows()));
    return IsotropicSubspace<F>(ann.basis);
}

// ---------------------------------------------------------------------------
// Component swap: Clifford multiplication by e_5 + e_{-5} realizes the
// reflection exchanging the two families, so Sigma^- maps onto Sigma^+.
// ---------------------------------------------------------------------------

template <class F>
HalfSpinor<F> parity_swap(const HalfSpinor<F>& s) {
    Vec<F> v(10, zero_of<F>(s.field()));
    v[4] = one_of<F>(s.field());
    v[9] = one_of<F>(s.field());
    return clifford_act(v, s);
}

// ---------------------------------------------------------------------------
// Sampling: graph subspaces, the rows of [I | A] for skew A, twisted by
// hyperbolic coordinate swaps e_i <-> e_{-i}; each swap flips the component.
// ---------------------------------------------------------------------------

template <class F>
IsotropicSubspace<F> graph_subspace(const Mat<F>& a) {
    require(a.rows() == 5 && a.cols() == 5, ErrorCode::BadShape, "graph matrix must be 5x5");
    require(a.is_skew(), ErrorCode::NotSkew, "graph matrix must be skew");
    Mat<F> basis(5, 10, a.field());
    for (std::size_t i = 0; i < 5; ++i) {
        basis(i, i) = one_of<F>(a.field());
        for (std::size_t j = 0; j < 5; ++j) basis(i, 5 + j) = a(i, j);
    }
    return IsotropicSubspace<F>(basis);
}

template <class F>
IsotropicSubspace<F> random_isotropic(Rng& rng, const FieldSpec& spec, Parity parity) {
    Mat<F> a(5, 5, spec);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            F v = random_scalar<F>(rng, spec);
            a(i, j) = v;
            a(j, i) = -v;
        }
    std::uint8_t twist = static_cast<std::uint8_t>(rng.next_below(32));
    int want = parity == Parity::Even ? 0 : 1;
    if (masks::popcount(twist) % 2 != want) twist ^= static_cast<std::uint8_t>(1u << rng.next_below(5));
    Mat<F> basis(5, 10, spec);
    for (std::size_t i = 0; i < 5; ++i) {
        basis(i, i) = one_of<F>(spec);
        for (std::size_t j = 0; j < 5; ++j) basis(i, 5 + j) = a(i, j);
    }
    // Column swaps keep the rank at 5, and each hyperbolic swap flips the
    // component, so the requested parity is reached exactly.
    for (int j = 0; j < 5; ++j) {
        if (!((twist >> j) & 1u)) continue;
        for (std::size_t i = 0; i < 5; ++i) std::swap(basis(i, j), basis(i, 5 + j));
    }
    IsotropicSubspace<F> u(basis);
    require(u.parity() == parity, ErrorCode::Internal, "twist parity bookkeeping broke");
    return u;
}

template <class F>
HalfSpinor<F> random_pure_spinor(Rng& rng, const FieldSpec& spec, Parity parity) {
    return pure_spinor(random_isotropic<F>(rng, spec, parity));
}

}  // namespace spinorkit
