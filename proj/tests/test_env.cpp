#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pialg/env.hpp"
#include "pialg/rng.hpp"

using namespace pialg;

namespace {

FpVec random_coords(uint32_t p, size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<uint32_t> d(0, p - 1);
    FpVec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("envelope of the two-dimensional example") {
    EnvAlgebra u = build_u(lie_example_d());
    REQUIRE(u.A.dim == 4);
    CHECK(u.A.labels == std::vector<std::string>{"1", "a", "b", "a*b"});
    CHECK(*u.A.unit == FpVec{1, 0, 0, 0});

    // frozen structure constants, independently derived from the relations
    // a^2 = 0, b^2 = b, ba = ab + a
    CHECK(u.A.entry(1, 1) == SparseFpVec{});
    CHECK(u.A.entry(1, 2) == SparseFpVec{{3, 1}});
    CHECK(u.A.entry(2, 1) == SparseFpVec{{1, 1}, {3, 1}});
    CHECK(u.A.entry(2, 2) == SparseFpVec{{2, 1}});
    CHECK(u.A.entry(2, 3) == SparseFpVec{});
    CHECK(u.A.entry(3, 2) == SparseFpVec{{3, 1}});
    CHECK(u.A.entry(3, 1) == SparseFpVec{});
    CHECK(u.A.entry(3, 3) == SparseFpVec{});
}

TEST_CASE("envelope dimension is p^n") {
    CHECK(build_u(lie_abelian(3, 1, FpMat{{0}})).A.dim == 3);
    CHECK(build_u(lie_heisenberg(2)).A.dim == 8);
    CHECK(build_u(lie_sl2(3)).A.dim == 27);
    // tensor-style multiplicativity over direct sums
    RLieSpec dd = lie_direct_sum(lie_example_d(), lie_example_d());
    CHECK(build_u(dd).A.dim == 16);
}

TEST_CASE("truncated polynomial envelope") {
    EnvAlgebra u = build_u(lie_abelian(3, 1, FpMat{{0}}));
    // x * x = x^2, x^2 * x = x^3 = 0
    CHECK(u.A.entry(1, 1) == SparseFpVec{{2, 1}});
    CHECK(u.A.entry(2, 1) == SparseFpVec{});
    SubspaceBasis omega = augmentation_ideal_env(u);
    CHECK(omega.rows == FpMat{{0, 1, 0}, {0, 0, 1}});
    CHECK(omega.is_ideal);
    CHECK(nilpotency_index(u.A, omega) == 3u);
}

TEST_CASE("straightening reproduces the p-map in sl2") {
    EnvAlgebra u = build_u(lie_sl2(3));
    FpRing F(3);
    auto h = alg_lift(u.A, F, env_embed(u, {0, 1, 0}));
    CHECK(alg_pow(u.A, F, h, 3) == h); // h^3 = h
    auto e = alg_lift(u.A, F, env_embed(u, {1, 0, 0}));
    CHECK(alg_is_zero(F, alg_pow(u.A, F, e, 3)));
    auto f = alg_lift(u.A, F, env_embed(u, {0, 0, 1}));
    CHECK(alg_is_zero(F, alg_pow(u.A, F, f, 3)));
}

TEST_CASE("embedding fidelity on basis pairs") {
    for (const RLieSpec& L : {lie_example_d(), lie_heisenberg(2), lie_sl2(3)}) {
        EnvAlgebra u = build_u(L);
        FpRing F(L.p);
        for (size_t i = 0; i < L.dim; ++i) {
            FpVec ei(L.dim, 0);
            ei[i] = 1;
            for (size_t j = 0; j < L.dim; ++j) {
                FpVec ej(L.dim, 0);
                ej[j] = 1;
                auto lhs = alg_commutator(u.A, F, alg_lift(u.A, F, env_embed(u, ei)),
                                          alg_lift(u.A, F, env_embed(u, ej)));
                auto rhs = alg_lift(u.A, F, env_embed(u, lie_bracket(L, ei, ej)));
                CHECK(lhs == rhs);
            }
            auto pw = alg_pow(u.A, F, alg_lift(u.A, F, env_embed(u, ei)), L.p);
            CHECK(pw == alg_lift(u.A, F, env_embed(u, L.pmap[i])));
        }
    }
}

TEST_CASE("augmentation is an algebra map") {
    EnvAlgebra u = build_u(lie_sl2(3));
    FpRing F(3);
    auto rng = seeded_rng(global_seed(), "eps-hom");
    for (int it = 0; it < 20; ++it) {
        FpVec x = random_coords(3, u.A.dim, rng), y = random_coords(3, u.A.dim, rng);
        auto prod = alg_mul(u.A, F, alg_lift(u.A, F, x), alg_lift(u.A, F, y));
        FpVec dense(u.A.dim);
        for (size_t i = 0; i < u.A.dim; ++i) dense[i] = prod[i];
        CHECK(env_eps(dense) == F.mul(env_eps(x), env_eps(y)));
    }
    CHECK(augmentation_ideal_env(u).dim() == 26); // p^n - 1
}

TEST_CASE("general p-th powers via the envelope") {
    // (x+y)^[2] = z in the GF(2) Heisenberg algebra; the semilinear basis
    // formula misses the bracket correction
    RLieSpec h = lie_heisenberg(2);
    EnvAlgebra u = build_u(h);
    CHECK(lie_pmap_general(u, {1, 1, 0}) == FpVec{0, 0, 1});
    CHECK(pmap_semilinear(h, {1, 1, 0}) == FpVec{0, 0, 0});

    EnvAlgebra ud = build_u(lie_example_d());
    CHECK(lie_pmap_general(ud, {1, 1}) == FpVec{1, 1}); // (a+b)^2 = a + b
}

TEST_CASE("regular representation over a restricted ideal") {
    RLieSpec d = lie_example_d();
    SubspaceBasis a = span_of(2, 2, {{1, 0}});
    RegularRep rep = regular_rep_over(d, a);
    CHECK(rep.q == 2);
    CHECK(rep.adim == 1);
    CHECK(rep.ua.A.dim == 2);

    // matrix of a over the complement monomials {1, b}: 1*a = a and
    // b*a = ab + a, giving rows (a, 0) and (a, a)
    auto ma = rep.matrix_of(rep.embed_original({1, 0}));
    CHECK(ma[0][0] == FpVec{0, 1});
    CHECK(ma[0][1] == FpVec{0, 0});
    CHECK(ma[1][0] == FpVec{0, 1});
    CHECK(ma[1][1] == FpVec{0, 1});

    // rep(1) is the identity
    FpVec one(rep.u.A.dim, 0);
    one[0] = 1;
    auto mi = rep.matrix_of(one);
    for (size_t i = 0; i < rep.q; ++i)
        for (size_t j = 0; j < rep.q; ++j) {
            FpVec want(rep.ua.A.dim, 0);
            if (i == j) want[0] = 1;
            CHECK(mi[i][j] == want);
        }

    // multiplicative on all basis monomial pairs
    for (size_t m1 = 0; m1 < rep.u.A.dim; ++m1)
        for (size_t m2 = 0; m2 < rep.u.A.dim; ++m2) {
            FpVec x(rep.u.A.dim, 0), y(rep.u.A.dim, 0);
            x[m1] = 1;
            y[m2] = 1;
            FpVec xy = to_dense(rep.u.A.entry(m1, m2), rep.u.A.dim);
            CHECK(rep.matrix_of(xy) == rep_mat_mul(rep.ua, rep.matrix_of(x), rep.matrix_of(y)));
        }

    // injectivity: the flattened matrices of the basis monomials are
    // linearly independent
    FpMat flat;
    for (size_t m = 0; m < rep.u.A.dim; ++m) {
        FpVec x(rep.u.A.dim, 0);
        x[m] = 1;
        auto mm = rep.matrix_of(x);
        FpVec row;
        for (auto& r : mm)
            for (auto& entry : r) row.insert(row.end(), entry.begin(), entry.end());
        flat.push_back(std::move(row));
    }
    CHECK(rank_of(flat, FpRing(2)) == rep.u.A.dim);
}

TEST_CASE("central ideals act diagonally") {
    RLieSpec ab = lie_abelian(2, 2, FpMat{{0, 0}, {0, 1}});
    SubspaceBasis a = span_of(2, 2, {{1, 0}});
    RegularRep rep = regular_rep_over(ab, a);
    CHECK(rep.q == 2);
    auto m = rep.matrix_of(rep.embed_original({1, 0}));
    CHECK(m[0][0] == FpVec{0, 1});
    CHECK(m[1][1] == FpVec{0, 1});
    CHECK(m[0][1] == FpVec{0, 0});
    CHECK(m[1][0] == FpVec{0, 0});
}

TEST_CASE("regular representation rejects non-ideals") {
    CHECK_THROWS_AS(regular_rep_over(lie_heisenberg(3), span_of(3, 3, {{1, 0, 0}})),
                    usage_error);
}

TEST_CASE("left-normed brackets against p-th powers of the right entry") {
    // [x, y, ..., y] with p^t copies of y equals [x, y^(p^t)] in any
    // associative algebra of characteristic p
    auto rng = seeded_rng(global_seed(), "left-normed");
    {
        EnvAlgebra u = build_u(lie_example_d());
        FpRing F(2);
        for (int it = 0; it < 10; ++it) {
            auto x = alg_lift(u.A, F, random_coords(2, u.A.dim, rng));
            auto y = alg_lift(u.A, F, random_coords(2, u.A.dim, rng));
            for (uint64_t pt : {2ull, 4ull}) {
                CHECK(alg_left_normed(u.A, F, x, y, pt) ==
                      alg_commutator(u.A, F, x, alg_pow(u.A, F, y, pt)));
            }
        }
    }
    {
        EnvAlgebra u = build_u(lie_sl2(3));
        FpRing F(3);
        for (int it = 0; it < 4; ++it) {
            auto x = alg_lift(u.A, F, random_coords(3, u.A.dim, rng));
            auto y = alg_lift(u.A, F, random_coords(3, u.A.dim, rng));
            CHECK(alg_left_normed(u.A, F, x, y, 3) ==
                  alg_commutator(u.A, F, x, alg_pow(u.A, F, y, 3)));
        }
    }
}

TEST_CASE("module rank bound for abelian algebras") {
    // L abelian of dim 2 with zero p-map, A = span{e1}: u(A) = K[x]/(x^2)
    // has augmentation ideal of generic nil index 2 = p^1; the ideal it
    // generates in u(L) stays within the q * p^t bound
    RLieSpec ab = lie_abelian(2, 2, FpMat(2, FpVec(2, 0)));
    RegularRep rep = regular_rep_over(ab, span_of(2, 2, {{1, 0}}));
    auto inner = nil_bounded_index(rep.ua.A, augmentation_ideal_env(rep.ua));
    REQUIRE(inner.has_value());
    CHECK(*inner == 2);

    EnvAlgebra u = build_u(ab);
    SubspaceBasis closure = ideal_closure(u.A, {to_dense({{1, 1}}, 4)}); // the element x1
    auto outer = nil_bounded_index(u.A, closure);
    REQUIRE(outer.has_value());
    CHECK(*outer == 2);
    CHECK(*outer <= rep.q * (*inner));
}

TEST_CASE("envelope size guard") {
    // 13 generators over GF(2) would need 2^13 monomials
    RLieSpec big = lie_abelian(2, 13, FpMat(13, FpVec(13, 0)));
    CHECK_THROWS_AS(build_u(big), resource_error);
    // invalid input is rejected before any table work
    std::vector<SparseFpVec> br(4);
    br[1] = {{0, 1}};
    br[2] = {{0, 1}};
    RLieSpec bad = make_rlie(2, 2, std::move(br), FpMat{{0, 0}, {1, 0}}, {"a", "b"});
    CHECK_THROWS_AS(build_u(bad), usage_error);
}
