#include "spinorkit/sigma.hpp"

#include "test_util.hpp"

using namespace spinorkit;

namespace {

template <class F>
SigmaPoint<F> coordinate_point(std::size_t coord, const FieldSpec& spec) {
    Vec<F> c(16, zero_of<F>(spec));
    c[coord] = one_of<F>(spec);
    return SigmaPoint<F>(std::move(c), spec);
}

// (0 : x12 = 1 : y5 = 1), the standard rank-2 point of H_w.
template <class F>
SigmaPoint<F> rank2_point(const FieldSpec& spec) {
    Vec<F> c(16, zero_of<F>(spec));
    c[1] = one_of<F>(spec);
    c[15] = one_of<F>(spec);
    return SigmaPoint<F>(std::move(c), spec);
}

}  // namespace

TEST_CASE("embed_alt basics") {
    auto q = FieldSpec::rational();
    Mat<Rat> zero(5, 5, q);
    auto origin = embed_alt(zero);
    CHECK(origin == coordinate_point<Rat>(0, q));
    CHECK(on_sigma(origin));

    Mat<Rat> r2(5, 5, q);
    r2(0, 1) = Rat(1);
    r2(1, 0) = Rat(-1);
    auto pt = embed_alt(r2);
    CHECK(pt.u() == Rat(1));
    CHECK(pt.x(0, 1) == Rat(1));
    CHECK(is_zero_vector(pt.y_part()));
    CHECK(on_sigma(pt));

    CHECK_THROWS_AS(embed_alt(Mat<Rat>::identity(5, q)), Error);
}

TEST_CASE("embedded points satisfy all ten quadrics") {
    auto f7 = FieldSpec::prime(7);
    Rng rng(70);
    for (int t = 0; t < 300; ++t) {
        auto pt = embed_alt(random_skew5<Fp>(rng, f7));
        CHECK(is_zero_vector(quadrics_eval(pt)));
    }
    auto q = FieldSpec::rational();
    Rng rq(71);
    for (int t = 0; t < 60; ++t) {
        auto pt = embed_alt(random_skew5<Rat>(rq, q));
        CHECK(is_zero_vector(quadrics_eval(pt)));
    }
}

TEST_CASE("quadrics_eval on explicit points") {
    auto q = FieldSpec::rational();
    // (1 : 0 : y1 = 1) is off the tenfold, only q1+ survives
    Vec<Rat> c(16, Rat(0));
    c[0] = Rat(1);
    c[11] = Rat(1);
    SigmaPoint<Rat> pt(std::move(c), q);
    auto vals = quadrics_eval(pt);
    CHECK(vals[0] == Rat(1));
    for (int i = 1; i < 10; ++i) CHECK(vals[i].is_zero());

    CHECK(on_sigma(rank2_point<Rat>(q)));
}

TEST_CASE("point text format") {
    auto q = FieldSpec::rational();
    auto pt = rank2_point<Rat>(q);
    CHECK(pt.to_string() == "0; 1 0 0 0 0 0 0 0 0 0; 0 0 0 0 1");
    CHECK(parse_sigma_point<Rat>(pt.to_string(), q) == pt);
    CHECK_THROWS_AS(parse_sigma_point<Rat>("1; 2 3", q), Error);
}

TEST_CASE("jacobian rank and tangent space") {
    auto q = FieldSpec::rational();
    auto origin = coordinate_point<Rat>(0, q);
    auto jt = jacobian_tangent(origin);
    CHECK(rank_of(jt.jacobian) == 5);
    REQUIRE(jt.tangent_basis.rows() == 11);
    // kernel = span of u and the ten x directions
    Mat<Rat> expect(11, 16, q);
    for (std::size_t i = 0; i < 11; ++i) expect(i, i) = Rat(1);
    CHECK(same_row_span(jt.tangent_basis, expect));

    auto jt2 = jacobian_tangent(rank2_point<Rat>(q));
    CHECK(rank_of(jt2.jacobian) == 5);
    CHECK(jt2.tangent_basis.rows() == 11);

    // rank is invariant under rescaling: canonicalization normalizes scale
    Vec<Rat> scaled(16, Rat(0));
    scaled[1] = Rat(BigInt(7), BigInt(3));
    scaled[15] = Rat(BigInt(7), BigInt(3));
    CHECK(jacobian_tangent(SigmaPoint<Rat>(std::move(scaled), q)).tangent_basis.rows() == 11);

    Vec<Rat> off(16, Rat(0));
    off[0] = Rat(1);
    off[11] = Rat(1);  // (1 : 0 : y1 = 1) violates q1+
    CHECK_THROWS_AS(jacobian_tangent(SigmaPoint<Rat>(std::move(off), q)), Error);
}

TEST_CASE("jacobian rank is 5 at sampled points") {
    auto f7 = FieldSpec::prime(7);
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        auto pt = random_sigma_point<Fp>(rng, f7);
        CHECK(rank_of(jacobian_tangent(pt).jacobian) == 5);
    }
}

TEST_CASE("point/subspace correspondence on reference cases") {
    auto q = FieldSpec::rational();
    auto origin = coordinate_point<Rat>(0, q);
    auto u0 = point_to_subspace(origin);
    Mat<Rat> u0_expect(5, 10, q);
    for (std::size_t i = 0; i < 5; ++i) u0_expect(i, i) = Rat(1);
    CHECK(u0.basis() == u0_expect);
    CHECK(subspace_to_point(u0) == origin);

    auto pt = rank2_point<Rat>(q);
    auto u = point_to_subspace(pt);
    // U ^ Uinf contains e1 and e2
    Mat<Rat> e12(2, 10, q);
    e12(0, 5) = Rat(1);
    e12(1, 6) = Rat(1);
    CHECK(intersect_subspaces(u.basis(), e12).rows() == 2);
    CHECK(subspace_to_point(u) == pt);

    // odd-parity input is the wrong component
    CHECK_THROWS_AS(subspace_to_point(annihilator_subspace(standard_dual_point<Rat>(q))), Error);
    Vec<Rat> off(16, Rat(0));
    off[0] = Rat(1);
    off[11] = Rat(1);
    CHECK_THROWS_AS(point_to_subspace(SigmaPoint<Rat>(std::move(off), q)), Error);
}

TEST_CASE("embedding matches pure spinors of graph subspaces") {
    // j(A) corresponds to the graph rows {e_{-i} - sum_j A_ij e_j}; the pure
    // spinor route and the Pfaffian embedding must produce the same point.
    auto f11 = FieldSpec::prime(11);
    Rng rng(8);
    for (int t = 0; t < 60; ++t) {
        auto a = random_skew5<Fp>(rng, f11);
        Mat<Fp> minus_a(5, 5, f11);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) minus_a(i, j) = -a(i, j);
        auto via_spinor = subspace_to_point(graph_subspace(minus_a));
        CHECK(via_spinor == embed_alt(a));
        CHECK(point_to_subspace(embed_alt(a)) == graph_subspace(minus_a));
    }
}

TEST_CASE("round trip point -> subspace -> point on random embeddings") {
    auto f7 = FieldSpec::prime(7);
    Rng rng(55);
    for (int t = 0; t < 80; ++t) {
        auto pt = embed_alt(random_skew5<Fp>(rng, f7));
        CHECK(subspace_to_point(point_to_subspace(pt)) == pt);
    }
}

TEST_CASE("incidence dimensions of reference subspaces") {
    auto q = FieldSpec::rational();
    Mat<Rat> u0b(5, 10, q), uinfb(5, 10, q), mixed(5, 10, q);
    for (std::size_t i = 0; i < 5; ++i) {
        u0b(i, i) = Rat(1);
        uinfb(i, 5 + i) = Rat(1);
    }
    // span{e2,e3,e4,e5,e-1}
    for (std::size_t i = 0; i < 4; ++i) mixed(i, 6 + i) = Rat(1);
    mixed(4, 0) = Rat(1);
    IsotropicSubspace<Rat> u0(u0b), uinf(uinfb), mix(mixed);
    CHECK(incidence_dim(u0, uinf) == 0);
    CHECK(incidence_dim(uinf, uinf) == 5);
    CHECK(incidence_dim(uinf, mix) == 4);
}

TEST_CASE("incidence parity classifies components") {
    auto f5 = FieldSpec::prime(5);
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        auto a = random_isotropic<Fp>(rng, f5, Parity::Even);
        auto b = random_isotropic<Fp>(rng, f5, Parity::Even);
        auto w = random_isotropic<Fp>(rng, f5, Parity::Odd);
        CHECK(incidence_dim(a, b) % 2 == 1);  // same component: vector dim odd
        CHECK(incidence_dim(a, w) % 2 == 0);  // opposite: even
    }
}

TEST_CASE("beta membership against the standard dual point") {
    auto q = FieldSpec::rational();
    auto w = standard_dual_point<Rat>(q);
    Vec<Rat> u_form(16, Rat(0));
    u_form[0] = Rat(1);
    CHECK(hyperplane_form(w) == u_form);
    CHECK_FALSE(beta_membership(coordinate_point<Rat>(0, q), w));
    CHECK(beta_membership(rank2_point<Rat>(q), w));

    // e125 + e345 is impure: its annihilator is just <e5>
    HalfSpinor<Rat> impure(Parity::Odd, q);
    impure.set_coeff(0b10011, Rat(1));
    impure.set_coeff(0b11100, Rat(1));
    CHECK_FALSE(is_pure(impure));
    CHECK_THROWS_AS(beta_membership(rank2_point<Rat>(q), impure), Error);
}

TEST_CASE("beta vanishing agrees with incidence dimension") {
    auto f5 = FieldSpec::prime(5);
    Rng rng(500);
    int zero_beta = 0;
    for (int t = 0; t < 200; ++t) {
        auto uc = random_isotropic<Fp>(rng, f5, Parity::Even);
        auto uw = random_isotropic<Fp>(rng, f5, Parity::Odd);
        bool beta_zero = beta_pair(pure_spinor(uc), pure_spinor(uw)).is_zero();
        std::size_t dim = incidence_dim(uc, uw);
        CHECK(beta_zero == (dim >= 1));
        if (beta_zero) ++zero_beta;
        CHECK((dim == 0 || dim == 2 || dim == 4));
    }
    CHECK(zero_beta > 0);  // both branches exercised
}

TEST_CASE("complete_isotropic reference completions") {
    auto q = FieldSpec::rational();
    Mat<Rat> h(4, 10, q);
    for (std::size_t i = 0; i < 4; ++i) h(i, 6 + i) = Rat(1);  // e2,e3,e4,e5

    auto odd = complete_isotropic(h, Parity::Odd);
    Mat<Rat> uinfb(5, 10, q);
    for (std::size_t i = 0; i < 5; ++i) uinfb(i, 5 + i) = Rat(1);
    CHECK(odd == IsotropicSubspace<Rat>(uinfb));

    auto even = complete_isotropic(h, Parity::Even);
    Mat<Rat> mixed(5, 10, q);
    for (std::size_t i = 0; i < 4; ++i) mixed(i, 6 + i) = Rat(1);
    mixed(4, 0) = Rat(1);
    CHECK(even == IsotropicSubspace<Rat>(mixed));

    auto f2 = FieldSpec::prime(2);
    Mat<Fp> h2(4, 10, f2);
    for (std::size_t i = 0; i < 4; ++i) h2(i, 6 + i) = Fp(1, 2);
    CHECK_THROWS_AS(complete_isotropic(h2, Parity::Odd), Error);
}

TEST_CASE("complete_isotropic on random flags") {
    auto f7 = FieldSpec::prime(7);
    Rng rng(4242);
    for (int t = 0; t < 60; ++t) {
        auto u = random_isotropic<Fp>(rng, f7, t % 2 ? Parity::Even : Parity::Odd);
        std::size_t drop = rng.next_below(5);
        Mat<Fp> h(4, 10, f7);
        std::size_t r = 0;
        for (std::size_t i = 0; i < 5; ++i) {
            if (i == drop) continue;
            for (std::size_t j = 0; j < 10; ++j) h(r, j) = u.basis()(i, j);
            ++r;
        }
        auto even = complete_isotropic(h, Parity::Even);
        auto odd = complete_isotropic(h, Parity::Odd);
        CHECK(even.parity() == Parity::Even);
        CHECK(odd.parity() == Parity::Odd);
        CHECK_FALSE(even == odd);
        auto meet = intersect_subspaces(even.basis(), odd.basis());
        CHECK(meet.rows() == 4);
        CHECK(same_row_span(meet, row_span_basis(h)));
    }
}

TEST_CASE("tangency locus of the standard dual point") {
    auto q = FieldSpec::rational();
    auto w = standard_dual_point<Rat>(q);
    auto locus = tangency_locus(w);
    REQUIRE(locus.points.size() == 5);
    // exactly the coordinate locus {(0 : 0 : y)}
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(locus.points[i] == coordinate_point<Rat>(sigma_detail::kY + i, q));

    auto uw = annihilator_subspace(w);
    Rng rng(66);
    for (const auto& pt : locus.points) {
        CHECK(beta_membership(pt, w));
        CHECK(incidence_dim(point_to_subspace(pt), uw) == 4);
        CHECK(hyperplane_tangent_at(pt, w));
    }
    // sampled points of the span lie on the tenfold
    for (int t = 0; t < 30; ++t) {
        Vec<Rat> combo(16, Rat(0));
        for (std::size_t i = 0; i < 5; ++i) {
            Rat c = random_scalar<Rat>(rng, q);
            for (std::size_t j = 0; j < 16; ++j) combo[j] += c * locus.span_basis(i, j);
        }
        if (is_zero_vector(combo)) continue;
        CHECK(on_sigma(SigmaPoint<Rat>(std::move(combo), q)));
    }
}

TEST_CASE("tangency locus of a random dual point") {
    auto f7 = FieldSpec::prime(7);
    Rng rng(77);
    auto uw = random_isotropic<Fp>(rng, f7, Parity::Odd);
    auto w = pure_spinor(uw);
    auto locus = tangency_locus(w);
    for (const auto& pt : locus.points) {
        CHECK(on_sigma(pt));
        CHECK(incidence_dim(point_to_subspace(pt), uw) == 4);
        CHECK(hyperplane_tangent_at(pt, w));
    }
    for (int t = 0; t < 20; ++t) {
        Vec<Fp> combo(16, Fp(0, 7));
        for (std::size_t i = 0; i < 5; ++i) {
            Fp c = random_scalar<Fp>(rng, f7);
            for (std::size_t j = 0; j < 16; ++j) combo[j] += c * locus.span_basis(i, j);
        }
        if (is_zero_vector(combo)) continue;
        CHECK(on_sigma(SigmaPoint<Fp>(std::move(combo), f7)));
    }
}

TEST_CASE("rank dichotomy on the standard hyperplane section") {
    auto f7 = FieldSpec::prime(7);
    Rng rng(1234);
    auto uinf = annihilator_subspace(standard_dual_point<Fp>(f7));
    int rank0 = 0, rank2 = 0, seen = 0;
    while (seen < 120) {
        auto pt = random_sigma_point<Fp>(rng, f7);
        if (!pt.u().is_zero()) continue;
        ++seen;
        std::size_t r = rank_of(pt.x_block());
        CHECK((r == 0 || r == 2));
        bool tangency = incidence_dim(point_to_subspace(pt), uinf) == 4;
        CHECK(tangency == (r == 0));
        // y part lies in the kernel of the x block
        CHECK(is_zero_vector(pt.x_block().apply(pt.y_part())));
        (r == 0 ? rank0 : rank2) += 1;
    }
    CHECK(rank2 > 0);
}

TEST_CASE("multiplicity probe") {
    auto q = FieldSpec::rational();
    auto w = standard_dual_point<Rat>(q);
    auto y5 = coordinate_point<Rat>(15, q);

    // tangent probes at a tangency point see order exactly 2
    Rng rng(31337);
    int measured = 0;
    for (int t = 0; t < 20; ++t) {
        auto d = tangent_probe_point(y5, rng);
        auto res = multiplicity_probe(y5, w, d);
        if (res.positive_dimensional) continue;  // probe fell inside the cone
        CHECK(res.order == 2);
        ++measured;
    }
    CHECK(measured > 0);

    // second point in the tangency locus: the line lies on the tenfold
    auto res_pi = multiplicity_probe(y5, w, coordinate_point<Rat>(14, q));
    CHECK(res_pi.positive_dimensional);

    // smooth point of H_w, generic probe in the hyperplane: order 1
    auto smooth = rank2_point<Rat>(q);
    Rng rng2(999);
    for (int t = 0; t < 20; ++t) {
        Vec<Rat> d(16, Rat(0));
        for (std::size_t i = 1; i < 16; ++i) d[i] = random_scalar<Rat>(rng2, q);
        if (is_zero_vector(d)) continue;
        SigmaPoint<Rat> dp(std::move(d), q);
        if (dp == smooth) continue;
        auto res = multiplicity_probe(smooth, w, dp);
        CHECK_FALSE(res.positive_dimensional);
        CHECK(res.order == 1);
    }

    // validation: probe line must stay in the hyperplane and be a real line
    CHECK_THROWS_AS(multiplicity_probe(y5, w, coordinate_point<Rat>(0, q)), Error);
    CHECK_THROWS_AS(multiplicity_probe(y5, w, y5), Error);
}

TEST_CASE("membership equivalence: quadrics vanish iff the spinor is pure") {
    auto f5 = FieldSpec::prime(5);
    Rng rng(2718);
    int off = 0;
    for (int t = 0; t < 150; ++t) {
        HalfSpinor<Fp> s(Parity::Even, f5);
        for (int sl = 0; sl < masks::kCount; ++sl)
            s.set_coeff_at_slot(sl, random_scalar<Fp>(rng, f5));
        if (s.is_zero()) continue;
        auto pt = point_of_spinor(s);
        bool member = on_sigma(pt);
        CHECK(member == is_pure(s));
        if (!member) ++off;
    }
    CHECK(off > 0);
    // the "on" side is exercised by the embedded points
    for (int t = 0; t < 50; ++t) {
        auto pt = embed_alt(random_skew5<Fp>(rng, f5));
        CHECK(is_pure(spinor_of_point(pt)));
    }
}

TEST_CASE("tangency reflexivity through the component swap") {
    // H_w singular at c iff H_c (on the minus side) is singular at w; the
    // minus side is computed through the parity swap reflection.
    auto f7 = FieldSpec::prime(7);
    Rng rng(1357);
    int tangent_pairs = 0, checked = 0;
    for (int t = 0; t < 30; ++t) {
        auto uc = random_isotropic<Fp>(rng, f7, Parity::Even);
        auto c = subspace_to_point(uc);
        IsotropicSubspace<Fp> uw = [&] {
            if (t % 2 == 0) {
                // force tangency: complete a 4-dim subspace of U_c on the odd side
                Mat<Fp> h(4, 10, f7);
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 10; ++j) h(i, j) = uc.basis()(i, j);
                return complete_isotropic(h, Parity::Odd);
            }
            return random_isotropic<Fp>(rng, f7, Parity::Odd);
        }();
        auto w = pure_spinor(uw);
        if (!beta_pair(spinor_of_point(c), w).is_zero()) continue;

        bool plus_side = hyperplane_tangent_at(c, w);
        // mirrored test: swap both to the other component
        auto w_plus = point_of_spinor(parity_swap(w));
        auto c_minus = parity_swap(spinor_of_point(c));
        bool minus_side = hyperplane_tangent_at(w_plus, c_minus);
        CHECK(plus_side == minus_side);
        CHECK(plus_side == (incidence_dim(uc, uw) == 4));
        if (plus_side) ++tangent_pairs;
        ++checked;
    }
    CHECK(tangent_pairs > 0);
    CHECK(checked > tangent_pairs);
}
