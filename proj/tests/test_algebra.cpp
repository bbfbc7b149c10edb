#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pialg/algebra.hpp"
#include "pialg/rng.hpp"

using namespace pialg;

namespace {

// 4-dimensional unital algebra over GF(2) on basis 1, a, b, ab with
// a^2 = 0, b^2 = b, ba = ab + a.  Small, noncommutative, a standard fixture.
AlgebraSpec fixture4(uint32_t p = 2) {
    const size_t d = 4;
    std::vector<SparseFpVec> t(d * d);
    auto set = [&](size_t i, size_t j, SparseFpVec v) { t[i * d + j] = std::move(v); };
    for (size_t j = 0; j < d; ++j) set(0, j, {{static_cast<uint32_t>(j), 1}});
    for (size_t i = 1; i < d; ++i) set(i, 0, {{static_cast<uint32_t>(i), 1}});
    set(1, 1, {});                       // a*a = 0
    set(1, 2, {{3, 1}});                 // a*b = ab
    set(1, 3, {});                       // a*ab = a^2 b = 0
    set(2, 1, {{1, p - 1}, {3, 1}});     // b*a = ab - a
    set(2, 2, {{2, 1}});                 // b*b = b
    set(2, 3, {});                       // b*ab = (ab - a)b = 0
    set(3, 1, {});                       // ab*a = 0
    set(3, 2, {{3, 1}});                 // ab*b = ab
    set(3, 3, {});                       // (ab)^2 = 0
    return make_algebra(p, d, std::move(t), FpVec{1, 0, 0, 0}, {"1", "a", "b", "ab"});
}

// group algebra of the cyclic group of order 3 over GF(3)
AlgebraSpec kc3() {
    const size_t d = 3;
    std::vector<SparseFpVec> t(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) t[i * d + j] = {{static_cast<uint32_t>((i + j) % d), 1}};
    return make_algebra(3, d, std::move(t), FpVec{1, 0, 0}, {"g0", "g1", "g2"});
}

} // namespace

TEST_CASE("make_algebra validates its input") {
    // the fixture table is associative over GF(2) but not over GF(3):
    // (b*b)*a = ab - a while b*(b*a) = a - ab there
    CHECK_NOTHROW(fixture4(2));
    CHECK_THROWS_AS(fixture4(3), usage_error);

    // wrong unit
    std::vector<SparseFpVec> t(1, SparseFpVec{{0, 1}});
    CHECK_THROWS_AS(make_algebra(2, 1, t, FpVec{0}, {}), usage_error);
    CHECK_NOTHROW(make_algebra(2, 1, t, FpVec{1}, {}));

    // malformed sparse entries
    std::vector<SparseFpVec> bad1(1, SparseFpVec{{5, 1}}); // index out of range
    CHECK_THROWS_AS(make_algebra(2, 1, bad1, std::nullopt, {}), usage_error);
    std::vector<SparseFpVec> bad2(1, SparseFpVec{{0, 2}}); // coeff not reduced
    CHECK_THROWS_AS(make_algebra(2, 1, bad2, std::nullopt, {}), usage_error);
    std::vector<SparseFpVec> bad3(4, SparseFpVec{});
    bad3[0] = {{1, 1}, {0, 1}}; // unsorted
    CHECK_THROWS_AS(make_algebra(2, 2, bad3, std::nullopt, {}), usage_error);
}

TEST_CASE("matrix algebra structure constants") {
    AlgebraSpec m2 = m2_algebra(3);
    FpRing F(3);
    // e12 * e21 = e11, e21 * e12 = e22, e12 * e12 = 0
    CHECK(m2.entry(1, 2) == SparseFpVec{{0, 1}});
    CHECK(m2.entry(2, 1) == SparseFpVec{{3, 1}});
    CHECK(m2.entry(1, 1) == SparseFpVec{});
    CHECK(*m2.unit == FpVec{1, 0, 0, 1});
    CHECK(m2.labels == std::vector<std::string>{"e11", "e12", "e21", "e22"});
}

TEST_CASE("element arithmetic over GF(p)") {
    AlgebraSpec A = fixture4();
    FpRing F(2);
    auto a = alg_lift(A, F, {0, 1, 0, 0});
    auto b = alg_lift(A, F, {0, 0, 1, 0});
    // [a, b] = a in this algebra
    CHECK(alg_commutator(A, F, a, b) == a);
    // b is idempotent
    CHECK(alg_mul(A, F, b, b) == b);
    // a^2 = 0 and unit powers
    CHECK(alg_is_zero(F, alg_mul(A, F, a, a)));
    CHECK(alg_pow(A, F, a, 0) == alg_lift(A, F, *A.unit));
    // left-normed brackets: [a, b, b] = [a, b] = a
    CHECK(alg_left_normed(A, F, a, b, 2) == a);
}

TEST_CASE("associative rearrangement holds generically") {
    // y*x*y = x*y^2 - [x, y]*y with full polynomial coefficients
    AlgebraSpec A = fixture4();
    PolyRing R(2, 8);
    std::vector<Poly> x, y;
    for (uint32_t i = 0; i < 4; ++i) x.push_back(R.gen(i));
    for (uint32_t i = 4; i < 8; ++i) y.push_back(R.gen(i));
    auto lhs = alg_mul(A, R, alg_mul(A, R, y, x), y);
    auto rhs = alg_sub(R, alg_mul(A, R, x, alg_mul(A, R, y, y)),
                       alg_mul(A, R, alg_commutator(A, R, x, y), y));
    CHECK(lhs == rhs);
}

TEST_CASE("ideal closure of a single generator") {
    AlgebraSpec A = fixture4();
    SubspaceBasis I = ideal_closure(A, {{0, 1, 0, 0}});
    CHECK(I.rows == FpMat{{0, 1, 0, 0}, {0, 0, 0, 1}});
    CHECK(I.is_ideal);
    CHECK(check_ideal(A, I));

    // idempotence and monotonicity
    SubspaceBasis again = ideal_closure(A, I.rows);
    CHECK(again == I);
    FpRing F(2);
    CHECK(I.contains({0, 1, 0, 0}, F));
    CHECK(!I.contains({0, 0, 1, 0}, F));
}

TEST_CASE("commutator ideal of the fixture") {
    AlgebraSpec A = fixture4();
    SubspaceBasis g2 = commutator_ideal(A);
    CHECK(g2.rows == FpMat{{0, 1, 0, 0}, {0, 0, 0, 1}});
    CHECK(g2.dim() == 2);
    CHECK(g2.is_ideal);

    // its square vanishes: every pairwise product of basis elements is zero
    SubspaceBasis sq = subspace_product(A, g2, g2);
    CHECK(sq.dim() == 0);
    CHECK(nilpotency_index(A, g2) == 2u);
    CHECK(nil_bounded_index(A, g2) == 2u);
}

TEST_CASE("commutator ideal of a simple algebra is everything") {
    AlgebraSpec m2 = m2_algebra(3);
    SubspaceBasis g2 = commutator_ideal(m2);
    CHECK(g2.dim() == 4);
    CHECK(g2 == whole_space(3, 4));
    // powers stabilize at the whole algebra: no nilpotency index
    CHECK(!nilpotency_index(m2, g2).has_value());
    // e11 is idempotent, so no power of a generic element can vanish
    CHECK(!nil_bounded_index(m2, g2).has_value());
}

TEST_CASE("augmentation ideal of the cyclic group algebra") {
    AlgebraSpec A = kc3();
    // omega = span{g1 - g0, g2 - g0}
    SubspaceBasis omega = span_of(3, 3, {{2, 1, 0}, {2, 0, 1}});
    CHECK(omega.dim() == 2);
    CHECK(check_ideal(A, omega));
    // (g - 1)^3 = g^3 - 1 = 0 over GF(3); index is exactly 3
    CHECK(nilpotency_index(A, omega) == 3u);
    CHECK(nil_bounded_index(A, omega) == 3u);
}

TEST_CASE("centers") {
    AlgebraSpec A = fixture4();
    SubspaceBasis z = center_of(A);
    CHECK(z.rows == FpMat{{1, 0, 0, 0}});
    CHECK(z.is_subalgebra);

    AlgebraSpec m2 = m2_algebra(5);
    SubspaceBasis zm = center_of(m2);
    CHECK(zm.rows == FpMat{{1, 0, 0, 1}});

    // the cyclic group algebra is commutative
    CHECK(center_of(kc3()).dim() == 3);
}

TEST_CASE("subspace sum and flags") {
    AlgebraSpec A = fixture4();
    SubspaceBasis s = span_of(2, 4, {{0, 1, 0, 0}});
    SubspaceBasis t = span_of(2, 4, {{0, 0, 0, 1}});
    CHECK(subspace_sum(s, t).rows == FpMat{{0, 1, 0, 0}, {0, 0, 0, 1}});
    // span{a} alone is multiplication-closed (a^2 = 0) but not an ideal
    CHECK(check_mul_closed(A, s));
    CHECK(!check_ideal(A, s));
}

TEST_CASE("base change leaves verdicts alone") {
    AlgebraSpec A = fixture4();
    FpRing F(2);
    auto rng = seeded_rng(global_seed(), "base-change");
    std::uniform_int_distribution<uint32_t> c(0, 1);
    for (int it = 0; it < 10; ++it) {
        // random invertible transition matrix
        FpMat P = mat_identity(4);
        for (int op = 0; op < 12; ++op) {
            size_t i = rng() % 4, j = rng() % 4;
            if (i != j && c(rng)) P[i] = vec_add(P[i], P[j], F);
        }
        AlgebraSpec B = change_basis(A, P);
        SubspaceBasis g2a = commutator_ideal(A), g2b = commutator_ideal(B);
        CHECK(g2a.dim() == g2b.dim());
        CHECK(nilpotency_index(A, g2a) == nilpotency_index(B, g2b));
        CHECK(nil_bounded_index(A, g2a) == nil_bounded_index(B, g2b));
        // transported generators of the ideal span the transported ideal
        SubspaceBasis moved = span_of(2, 4, transport_rows(g2a.rows, P, F));
        CHECK(moved.rows == g2b.rows);
        CHECK(center_of(B).dim() == center_of(A).dim());
    }
}

TEST_CASE("printing uses basis labels") {
    AlgebraSpec A = fixture4();
    CHECK(element_to_string(A, {1, 0, 0, 1}) == "1 + ab");
    CHECK(element_to_string(A, {0, 0, 0, 0}) == "0");
    AlgebraSpec m2 = m2_algebra(3);
    CHECK(element_to_string(m2, {0, 2, 0, 0}) == "2*e12");
}
