#include "spinorkit/clifford.hpp"

#include "test_util.hpp"

using namespace spinorkit;

namespace {

template <class F>
Vec<F> random_v10(Rng& rng, const FieldSpec& spec) {
    Vec<F> v(10);
    for (auto& e : v) e = random_scalar<F>(rng, spec);
    return v;
}

template <class F>
HalfSpinor<F> random_spinor(Rng& rng, const FieldSpec& spec, Parity p) {
    HalfSpinor<F> s(p, spec);
    for (int sl = 0; sl < masks::kCount; ++sl) s.set_coeff_at_slot(sl, random_scalar<F>(rng, spec));
    return s;
}

Mat<Rat> u0_basis() {
    Mat<Rat> m(5, 10, FieldSpec::rational());
    for (std::size_t i = 0; i < 5; ++i) m(i, i) = Rat(1);
    return m;
}

Mat<Rat> uinf_basis() {
    Mat<Rat> m(5, 10, FieldSpec::rational());
    for (std::size_t i = 0; i < 5; ++i) m(i, 5 + i) = Rat(1);
    return m;
}

}  // namespace

TEST_CASE("clifford action on monomials") {
    auto q = FieldSpec::rational();
    // phi_{e1}(1) = e1
    Vec<Rat> e1(10, Rat(0));
    e1[5] = Rat(1);
    auto s = clifford_act(e1, HalfSpinor<Rat>::scalar_one(q));
    CHECK(s == HalfSpinor<Rat>::monomial(0b00001, q));

    // phi_{e-1}(e1 ^ e2) = e2
    Vec<Rat> em1(10, Rat(0));
    em1[0] = Rat(1);
    auto t = clifford_act(em1, HalfSpinor<Rat>::monomial(0b00011, q));
    CHECK(t == HalfSpinor<Rat>::monomial(0b00010, q));
}

TEST_CASE("clifford relation phi_u^2 = q(u) id") {
    {
        auto spec = FieldSpec::prime(7);
        Rng rng(2);
        for (int t = 0; t < 100; ++t) {
            auto u = random_v10<Fp>(rng, spec);
            auto s = random_spinor<Fp>(rng, spec, t % 2 ? Parity::Even : Parity::Odd);
            CHECK(clifford_act(u, clifford_act(u, s)) == SplitQuadraticSpace::q(u) * s);
        }
    }
    {
        auto spec = FieldSpec::rational();
        Rng rng(1);
        for (int t = 0; t < 100; ++t) {
            auto u = random_v10<Rat>(rng, spec);
            auto s = random_spinor<Rat>(rng, spec, t % 2 ? Parity::Even : Parity::Odd);
            CHECK(clifford_act(u, clifford_act(u, s)) == SplitQuadraticSpace::q(u) * s);
        }
    }
}

TEST_CASE("clifford action is bilinear") {
    auto spec = FieldSpec::prime(11);
    Rng rng(9);
    for (int t = 0; t < 40; ++t) {
        auto u = random_v10<Fp>(rng, spec);
        auto v = random_v10<Fp>(rng, spec);
        auto s = random_spinor<Fp>(rng, spec, Parity::Even);
        auto s2 = random_spinor<Fp>(rng, spec, Parity::Even);
        Fp a = random_scalar<Fp>(rng, spec), b = random_scalar<Fp>(rng, spec);
        Vec<Fp> au_bv(10);
        for (int i = 0; i < 10; ++i) au_bv[i] = a * u[i] + b * v[i];
        CHECK(clifford_act(au_bv, s) == a * clifford_act(u, s) + b * clifford_act(v, s));
        CHECK(clifford_act(u, a * s + b * s2) == a * clifford_act(u, s) + b * clifford_act(u, s2));
    }
}

TEST_CASE("beta on monomials") {
    auto q = FieldSpec::rational();
    auto one = HalfSpinor<Rat>::scalar_one(q);
    auto top = HalfSpinor<Rat>::monomial(0b11111, q);
    CHECK(beta_pair(one, top) == Rat(1));

    // beta(e12, e345) = -1: p = 2 gives sign -1 and e12 ^ e345 = +e12345
    auto e12 = HalfSpinor<Rat>::monomial(0b00011, q);
    auto e345 = HalfSpinor<Rat>::monomial(0b11100, q);
    CHECK(beta_pair(e12, e345) == Rat(-1));

    // overlapping factors wedge to zero
    auto e123 = HalfSpinor<Rat>::monomial(0b00111, q);
    CHECK(beta_pair(e12, e123) == Rat(0));

    CHECK_THROWS_AS(beta_pair(e12, e12), Error);  // same parity
}

TEST_CASE("beta is a perfect pairing and symmetric for nu = 5") {
    auto spec = FieldSpec::prime(5);
    Mat<Fp> gram(16, 16, spec);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            auto a = HalfSpinor<Fp>::monomial(masks::even[i], spec);
            auto b = HalfSpinor<Fp>::monomial(masks::odd[j], spec);
            gram(i, j) = beta_pair(a, b);
            CHECK(beta_pair(a, b) == beta_pair(b, a));
        }
    CHECK(rank_of(gram) == 16);
}

TEST_CASE("beta is bilinear") {
    auto spec = FieldSpec::prime(7);
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        auto s1 = random_spinor<Fp>(rng, spec, Parity::Even);
        auto s2 = random_spinor<Fp>(rng, spec, Parity::Even);
        auto w = random_spinor<Fp>(rng, spec, Parity::Odd);
        Fp a = random_scalar<Fp>(rng, spec), b = random_scalar<Fp>(rng, spec);
        CHECK(beta_pair(a * s1 + b * s2, w) == a * beta_pair(s1, w) + b * beta_pair(s2, w));
    }
}

TEST_CASE("pure spinor of the reference subspaces") {
    auto q = FieldSpec::rational();
    IsotropicSubspace<Rat> u0(u0_basis());
    CHECK(u0.parity() == Parity::Even);
    CHECK(pure_spinor(u0) == HalfSpinor<Rat>::scalar_one(q));

    IsotropicSubspace<Rat> uinf(uinf_basis());
    CHECK(uinf.parity() == Parity::Odd);
    CHECK(uinf.dim_meet_uinf() == 5);
    CHECK(pure_spinor(uinf) == HalfSpinor<Rat>::monomial(0b11111, q));

    Mat<Rat> not_iso(5, 10, FieldSpec::rational());
    for (std::size_t i = 0; i < 5; ++i) not_iso(i, i) = Rat(1);
    not_iso(0, 5) = Rat(1);  // q(e-1 + e1) = 1
    CHECK_THROWS_AS(IsotropicSubspace<Rat>(not_iso), Error);
}

TEST_CASE("pure spinor of a mixed-position subspace") {
    // span{e1, e2, e-3 + e4, e-4 - e3, e-5}  ->  e12 - e1234
    auto q = FieldSpec::rational();
    Mat<Rat> b(5, 10, q);
    b(0, 5) = Rat(1);                      // e1
    b(1, 6) = Rat(1);                      // e2
    b(2, 2) = Rat(1); b(2, 8) = Rat(1);    // e-3 + e4
    b(3, 3) = Rat(1); b(3, 7) = Rat(-1);   // e-4 - e3
    b(4, 4) = Rat(1);                      // e-5
    IsotropicSubspace<Rat> u(b);
    CHECK(u.dim_meet_uinf() == 2);
    CHECK(u.parity() == Parity::Even);
    auto s = pure_spinor(u);
    HalfSpinor<Rat> want(Parity::Even, q);
    want.set_coeff(0b00011, Rat(1));    // e12
    want.set_coeff(0b01111, Rat(-1));   // -e1234
    CHECK(s == want);
}

TEST_CASE("annihilator of reference spinors") {
    auto q = FieldSpec::rational();
    auto a0 = annihilator(HalfSpinor<Rat>::scalar_one(q));
    CHECK(a0.is_pure);
    CHECK(a0.basis == u0_basis());

    auto ainf = annihilator(HalfSpinor<Rat>::monomial(0b11111, q));
    CHECK(ainf.is_pure);
    CHECK(ainf.basis == uinf_basis());

    // impure: e12 + e34 is annihilated exactly by <e-5>
    HalfSpinor<Rat> imp(Parity::Even, q);
    imp.set_coeff(0b00011, Rat(1));
    imp.set_coeff(0b01100, Rat(1));
    auto ai = annihilator(imp);
    CHECK_FALSE(ai.is_pure);
    REQUIRE(ai.basis.rows() == 1);
    CHECK(ai.basis(0, 4) == Rat(1));

    CHECK_THROWS_AS(annihilator(HalfSpinor<Rat>(Parity::Even, q)), Error);
}

TEST_CASE("pure spinor round trip with annihilator") {
    // Constructive route vs linear-system route; they must invert each other.
    for (auto spec : {FieldSpec::rational(), FieldSpec::prime(5), FieldSpec::prime(7),
                      FieldSpec::prime(11)}) {
        Rng rng(40 + spec.p);
        for (int t = 0; t < 60; ++t) {
            Parity want = t % 2 ? Parity::Even : Parity::Odd;
            if (spec.is_rational()) {
                auto u = random_isotropic<Rat>(rng, spec, want);
                auto s = pure_spinor(u);
                CHECK(s.parity() == want);
                for (std::size_t i = 0; i < 5; ++i)
                    CHECK(clifford_act(u.basis().row(i), s).is_zero());
                auto ann = annihilator(s);
                CHECK(ann.is_pure);
                CHECK(ann.basis == u.basis());
            } else {
                auto u = random_isotropic<Fp>(rng, spec, want);
                auto s = pure_spinor(u);
                CHECK(s.parity() == want);
                CHECK((u.dim_meet_uinf() % 2 == 0) == (want == Parity::Even));
                for (std::size_t i = 0; i < 5; ++i)
                    CHECK(clifford_act(u.basis().row(i), s).is_zero());
                auto ann = annihilator(s);
                CHECK(ann.is_pure);
                CHECK(ann.basis == u.basis());
            }
        }
    }
}

TEST_CASE("pure spinor works in characteristic 2") {
    auto spec = FieldSpec::prime(2);
    Rng rng(77);
    for (int t = 0; t < 30; ++t) {
        auto u = random_isotropic<Fp>(rng, spec, t % 2 ? Parity::Even : Parity::Odd);
        auto s = pure_spinor(u);
        auto ann = annihilator(s);
        CHECK(ann.is_pure);
        CHECK(ann.basis == u.basis());
    }
}

TEST_CASE("parity swap exchanges the two families") {
    auto q = FieldSpec::rational();
    auto swapped = parity_swap(HalfSpinor<Rat>::monomial(0b11111, q));
    CHECK(swapped.parity() == Parity::Even);
    CHECK(is_pure(swapped));
    // tau^2 = q(e5 + e-5) id = id
    CHECK(parity_swap(swapped) == HalfSpinor<Rat>::monomial(0b11111, q));

    Rng rng(123);
    auto f7 = FieldSpec::prime(7);
    for (int t = 0; t < 20; ++t) {
        auto u = random_isotropic<Fp>(rng, f7, Parity::Odd);
        auto s = pure_spinor(u);
        auto ts = parity_swap(s);
        CHECK(ts.parity() == Parity::Even);
        auto ann = annihilator(ts);
        CHECK(ann.is_pure);
        // the annihilator is the hyperbolic reflection of u in the 5th pair
        Mat<Fp> reflected = u.basis();
        for (std::size_t i = 0; i < 5; ++i) {
            Fp a = reflected(i, 4), b = reflected(i, 9);
            reflected(i, 4) = -b;
            reflected(i, 9) = -a;
        }
        CHECK(same_row_span(ann.basis, reflected));
    }
}

TEST_CASE("spinor text format round trip") {
    auto q = FieldSpec::rational();
    HalfSpinor<Rat> s(Parity::Even, q);
    s.set_coeff(0b00011, Rat(BigInt(-3), BigInt(2)));
    s.set_coeff(0b11110, Rat(7));
    auto text = s.to_string();
    CHECK(text == "even: -3/2@{1,2} 7@{2,3,4,5}");
    CHECK(HalfSpinor<Rat>::parse(text, q) == s);

    auto odd = HalfSpinor<Fp>::parse("odd: 1@{1,2,3,4,5} 3@{4}", FieldSpec::prime(5));
    CHECK(odd.coeff(0b11111) == Fp(1, 5));
    CHECK(odd.coeff(0b01000) == Fp(3, 5));
    CHECK_THROWS_AS(HalfSpinor<Fp>::parse("odd: 1@{1,2}", FieldSpec::prime(5)), Error);
}
