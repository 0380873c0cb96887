#include "test_util.hpp"

using namespace spinorkit;

TEST_CASE("row_reduce identity and zero") {
    auto spec = FieldSpec::rational();
    auto id = Mat<Rat>::identity(3, spec);
    auto rr = row_reduce(id);
    CHECK(rr.rref == id);
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});

    Mat<Rat> z(2, 4, spec);
    auto rz = row_reduce(z);
    CHECK(rz.rref == z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());
}

TEST_CASE("row_reduce is idempotent and rank-nullity holds over F7") {
    auto spec = FieldSpec::prime(7);
    Rng rng(101);
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix<Fp>(rng, 6, 6, spec);
        auto rr = row_reduce(m);
        CHECK(row_reduce(rr.rref).rref == rr.rref);
        auto ker = kernel_basis(m);
        CHECK(rr.rank + ker.size() == 6);
        for (const auto& v : ker) CHECK(is_zero_vector(m.apply(v)));
    }
}

TEST_CASE("kernel_basis canonical cases") {
    auto spec = FieldSpec::rational();
    CHECK(kernel_basis(Mat<Rat>::identity(4, spec)).empty());

    Mat<Rat> z(3, 3, spec);
    auto ker = kernel_basis(z);
    REQUIRE(ker.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(ker[i][j] == (i == j ? Rat(1) : Rat(0)));

    // skew with x12 = 1, rest 0: kernel is span{e3, e4, e5}
    Mat<Rat> x(5, 5, spec);
    x(0, 1) = Rat(1);
    x(1, 0) = Rat(-1);
    auto kx = kernel_basis(x);
    REQUIRE(kx.size() == 3);
    auto got = Mat<Rat>::from_rows(kx, spec);
    Mat<Rat> want(3, 5, spec);
    want(0, 2) = Rat(1);
    want(1, 3) = Rat(1);
    want(2, 4) = Rat(1);
    CHECK(same_row_span(got, want));
}

TEST_CASE("intersect_subspaces basics and Grassmann formula") {
    auto spec = FieldSpec::rational();
    Mat<Rat> a(2, 4, spec), b(2, 4, spec);
    a(0, 0) = Rat(1);
    a(1, 1) = Rat(1);
    b(0, 1) = Rat(1);
    b(1, 2) = Rat(1);
    auto c = intersect_subspaces(a, b);
    REQUIRE(c.rows() == 1);
    CHECK(c(0, 0).is_zero());
    CHECK(c(0, 1) == Rat(1));

    CHECK(same_row_span(intersect_subspaces(a, a), row_span_basis(a)));

    auto f7 = FieldSpec::prime(7);
    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        auto u = random_matrix<Fp>(rng, 5, 10, f7);
        auto v = random_matrix<Fp>(rng, 5, 10, f7);
        std::size_t du = rank_of(u), dv = rank_of(v);
        std::size_t dsum = rank_of(u.stacked(v));
        auto w = intersect_subspaces(u, v);
        CHECK(w.rows() == du + dv - dsum);
    }

    Mat<Rat> wrong(1, 5, spec);
    CHECK_THROWS_AS(intersect_subspaces(a, wrong), Error);
}

TEST_CASE("pfaffian small cases") {
    auto spec = FieldSpec::rational();
    Mat<Rat> m2(2, 2, spec);
    m2(0, 1) = Rat(5);
    m2(1, 0) = Rat(-5);
    CHECK(pfaffian(m2) == Rat(5));

    // Generic 4x4: a12 a34 - a13 a24 + a14 a23, the x-part of the quadric q5+.
    Rng rng(11);
    auto q = FieldSpec::rational();
    for (int t = 0; t < 20; ++t) {
        auto m = random_skew<Rat>(rng, 4, q);
        Rat expect = m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
        CHECK(pfaffian(m) == expect);
    }

    Mat<Rat> odd(3, 3, spec);
    CHECK(pfaffian(odd) == Rat(0));

    Mat<Rat> notskew = Mat<Rat>::identity(2, spec);
    CHECK_THROWS_AS(pfaffian(notskew), Error);
}

TEST_CASE("pfaffian squared equals determinant") {
    Rng rng(2024);
    auto f11 = FieldSpec::prime(11);
    int done = 0;
    while (done < 250) {
        for (std::size_t n = 2; n <= 8 && done < 250; n += 2) {
            auto m = random_skew<Fp>(rng, n, f11);
            CHECK(pfaffian(m) * pfaffian(m) == det(m));
            ++done;
        }
    }
    auto q = FieldSpec::rational();
    for (int t = 0; t < 30; ++t) {
        for (std::size_t n = 2; n <= 6; n += 2) {
            auto m = random_skew<Rat>(rng, n, q);
            CHECK(pfaffian(m) * pfaffian(m) == det(m));
        }
    }
}

TEST_CASE("sub_pfaffian_vector trivial cases") {
    auto spec = FieldSpec::rational();
    Mat<Rat> z(5, 5, spec);
    CHECK(is_zero_vector(sub_pfaffian_vector(z)));

    // rank-2 input: every 4x4 principal submatrix is singular skew
    Mat<Rat> r2(5, 5, spec);
    r2(0, 1) = Rat(1);
    r2(1, 0) = Rat(-1);
    CHECK(is_zero_vector(sub_pfaffian_vector(r2)));

    Mat<Rat> bad(4, 4, spec);
    CHECK_THROWS_AS(sub_pfaffian_vector(bad), Error);
}

TEST_CASE("sub_pfaffian_vector transposition law") {
    // Conjugating by a transposition permutes components and flips every sign:
    // v(P m P^T)_{s(i)} = -v(m)_i. Sampled over F11 and Q.
    Rng rng(5);
    auto f11 = FieldSpec::prime(11);
    for (int t = 0; t < 60; ++t) {
        auto m = random_skew<Fp>(rng, 5, f11);
        std::size_t a = rng.next_below(5), b = rng.next_below(5);
        if (a == b) continue;
        std::vector<std::size_t> perm{0, 1, 2, 3, 4};
        std::swap(perm[a], perm[b]);
        Mat<Fp> conj(5, 5, f11);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) conj(perm[i], perm[j]) = m(i, j);
        auto vm = sub_pfaffian_vector(m);
        auto vc = sub_pfaffian_vector(conj);
        for (std::size_t i = 0; i < 5; ++i) CHECK(vc[perm[i]] == -vm[i]);
    }
}

TEST_CASE("solve finds exact solutions") {
    auto f7 = FieldSpec::prime(7);
    Rng rng(3);
    for (int t = 0; t < 30; ++t) {
        auto m = random_matrix<Fp>(rng, 4, 6, f7);
        Vec<Fp> x0(6);
        for (auto& e : x0) e = random_scalar<Fp>(rng, f7);
        auto b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
    Mat<Fp> zero(2, 2, f7);
    Vec<Fp> rhs{Fp(1, 7), Fp(0, 7)};
    CHECK_FALSE(solve(zero, rhs).has_value());
}

TEST_CASE("scalar_sqrt") {
    CHECK(scalar_sqrt(Rat(BigInt(9), BigInt(4))) == Rat(BigInt(3), BigInt(2)));
    CHECK_THROWS_AS(scalar_sqrt(Rat(2)), Error);
    CHECK_THROWS_AS(scalar_sqrt(Rat(-4)), Error);

    CHECK(scalar_sqrt(Fp(2, 7)) == Fp(3, 7));  // 3^2 = 9 = 2 mod 7, smallest rep
    CHECK(scalar_sqrt(Fp(4, 7)) == Fp(2, 7));
    CHECK_THROWS_AS(scalar_sqrt(Fp(3, 7)), Error);  // squares mod 7 are {0,1,2,4}
    CHECK_THROWS_AS(scalar_sqrt(Fp(1, 2)), Error);  // char 2 rejected
}

TEST_CASE("scalar plumbing") {
    CHECK(Rat(BigInt(-6), BigInt(4)).to_string() == "-3/2");
    CHECK(parse_scalar<Rat>("-3/2", FieldSpec::rational()) == Rat(BigInt(-3), BigInt(2)));
    CHECK(parse_scalar<Fp>("12", FieldSpec::prime(7)) == Fp(5, 7));
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
    CHECK_THROWS_AS((Fp(1, 5) + Fp(1, 7)), Error);
    CHECK(FieldSpec::parse("Fp:13").p == 13);
    CHECK(FieldSpec::parse("Q").is_rational());

    auto m = Mat<Rat>::parse("0 1; -1 0", FieldSpec::rational());
    CHECK(m.rows() == 2);
    CHECK(m(1, 0) == Rat(-1));
    CHECK(Mat<Rat>::parse(m.to_string(), FieldSpec::rational()) == m);
}
