#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pialg/env.hpp"
#include "pialg/rlie.hpp"

using namespace pialg;

namespace {

// Heisenberg bracket with a hand-chosen p-map (possibly inconsistent).
RLieSpec heis_with_pmap(uint32_t p, FpMat pmap) {
    std::vector<SparseFpVec> br(9);
    br[0 * 3 + 1] = {{2, 1}};
    br[1 * 3 + 0] = {{2, p - 1}};
    return make_rlie(p, 3, std::move(br), std::move(pmap), {"x", "y", "z"});
}

} // namespace

TEST_CASE("builtins validate") {
    CHECK(validate_rlie(lie_example_d()).ok());
    CHECK(validate_rlie(lie_sl2(3)).ok());
    CHECK(validate_rlie(lie_heisenberg(3)).ok());
    CHECK(validate_rlie(lie_abelian(5, 2, FpMat(2, FpVec(2, 0)))).ok());
    CHECK(validate_rlie(lie_direct_sum(lie_example_d(), lie_example_d())).ok());
}

TEST_CASE("axiom failures are reported with witnesses") {
    // change b^[2] to a: ad(b)^2 fixes a but ad(a) kills it
    {
        std::vector<SparseFpVec> br(4);
        br[1] = {{0, 1}};
        br[2] = {{0, 1}};
        RLieSpec bad = make_rlie(2, 2, std::move(br), FpMat{{0, 0}, {1, 0}}, {"a", "b"});
        RLieValidation v = validate_rlie(bad);
        REQUIRE(!v.ok());
        CHECK(v.issues.size() == 1);
        CHECK(v.issues[0].axiom == "pmap");
        CHECK(v.issues[0].indices == std::vector<size_t>{1});
    }
    // broken antisymmetry: [a,b] = [b,a] = a over GF(3)
    {
        std::vector<SparseFpVec> br(4);
        br[1] = {{0, 1}};
        br[2] = {{0, 1}};
        RLieSpec bad = make_rlie(3, 2, std::move(br), FpMat(2, FpVec(2, 0)), {});
        RLieValidation v = validate_rlie(bad);
        REQUIRE(!v.ok());
        CHECK(v.issues[0].axiom == "antisymmetry");
    }
    // [e_i, e_i] != 0
    {
        std::vector<SparseFpVec> br(1);
        br[0] = {{0, 1}};
        RLieValidation v = validate_rlie(make_rlie(2, 1, std::move(br), FpMat{{0}}, {}));
        REQUIRE(!v.ok());
        CHECK(v.issues[0].axiom == "alternating");
    }
    // Jacobi breaks: [x0,x1] = x2, [x2,x0] = x0, rest zero
    {
        std::vector<SparseFpVec> br(9);
        br[0 * 3 + 1] = {{2, 1}};
        br[1 * 3 + 0] = {{2, 2}};
        br[2 * 3 + 0] = {{0, 1}};
        br[0 * 3 + 2] = {{0, 2}};
        RLieSpec bad = make_rlie(3, 3, std::move(br), FpMat(3, FpVec(3, 0)), {});
        RLieValidation v = validate_rlie(bad);
        REQUIRE(!v.ok());
        CHECK(v.issues[0].axiom == "jacobi");
        CHECK(v.issues[0].indices == std::vector<size_t>{0, 1, 2});
    }
}

TEST_CASE("make_rlie rejects malformed tables") {
    CHECK_THROWS_AS(make_rlie(4, 1, {SparseFpVec{}}, FpMat{{0}}, {}), usage_error);
    CHECK_THROWS_AS(make_rlie(2, 2, std::vector<SparseFpVec>(3), FpMat(2, FpVec(2, 0)), {}),
                    usage_error);
    CHECK_THROWS_AS(make_rlie(2, 1, {SparseFpVec{}}, FpMat{{0, 0}}, {}), usage_error);
    CHECK_THROWS_AS(make_rlie(2, 1, {SparseFpVec{{0, 5}}}, FpMat{{0}}, {}), usage_error);
}

TEST_CASE("derived subalgebras and centers") {
    RLieSpec d = lie_example_d();
    CHECK(derived_lie(d).rows == FpMat{{1, 0}});
    CHECK(derived_lie(d).is_ideal); // a^[2] = 0 keeps it p-closed
    CHECK(center_lie(d).dim() == 0);

    RLieSpec h = lie_heisenberg(3);
    SubspaceBasis dh = derived_lie(h);
    CHECK(dh.rows == FpMat{{0, 0, 1}});
    CHECK(dh == center_lie(h));
    CHECK(center_lie(h).is_ideal);

    RLieSpec ab = lie_abelian(3, 2, FpMat(2, FpVec(2, 0)));
    CHECK(derived_lie(ab).dim() == 0);
    CHECK(center_lie(ab).dim() == 2);

    // sl2 is perfect in characteristic 3
    CHECK(derived_lie(lie_sl2(3)).dim() == 3);

    RLieSpec dd = lie_direct_sum(lie_example_d(), lie_example_d());
    CHECK(dd.labels == std::vector<std::string>{"a", "b", "a'", "b'"});
    CHECK(derived_lie(dd).rows == FpMat{{1, 0, 0, 0}, {0, 0, 1, 0}});
}

TEST_CASE("lower central series stabilizes") {
    auto sd = lower_central(lie_example_d());
    REQUIRE(sd.size() == 2);
    CHECK(sd[0].dim() == 2);
    CHECK(sd[1].rows == FpMat{{1, 0}}); // [span{a}, L] = span{a}: not nilpotent

    auto sh = lower_central(lie_heisenberg(3));
    REQUIRE(sh.size() == 3);
    CHECK(sh[1].rows == FpMat{{0, 0, 1}});
    CHECK(sh[2].dim() == 0); // nilpotent in two steps

    CHECK(lower_central(lie_sl2(3)).size() == 1); // perfect: series is constant
    CHECK(lower_central(lie_abelian(2, 1, FpMat{{0}})).size() == 2);
}

TEST_CASE("restricted ideal closure grows through the p-map") {
    // z^[p] = x is inconsistent with the bracket (ad(x) != 0), but the
    // closure operation is defined at table level regardless
    RLieSpec h = heis_with_pmap(3, FpMat{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
    CHECK(!validate_rlie(h).ok());
    SubspaceBasis s = restricted_ideal_closure(h, span_of(3, 3, {{0, 0, 1}}));
    CHECK(s.rows == FpMat{{1, 0, 0}, {0, 0, 1}});

    // with the consistent zero p-map, span{z} is already closed
    RLieSpec h0 = lie_heisenberg(3);
    CHECK(restricted_ideal_closure(h0, span_of(3, 3, {{0, 0, 1}})).rows == FpMat{{0, 0, 1}});
    // and the closure of a non-ideal picks up its brackets
    CHECK(restricted_ideal_closure(h0, span_of(3, 3, {{1, 0, 0}})).rows ==
          FpMat{{1, 0, 0}, {0, 0, 1}});
}

TEST_CASE("p-hull") {
    RLieSpec d = lie_example_d();
    CHECK(p_hull(d, span_of(2, 2, {{1, 0}})).rows == FpMat{{1, 0}}); // a^[2] = 0

    RLieSpec s3 = lie_sl2(3);
    CHECK(p_hull(s3, span_of(3, 3, {{0, 1, 0}})).rows == FpMat{{0, 1, 0}}); // h^[3] = h

    // (x+y)^[2] = z in the GF(2) Heisenberg algebra: the hull must see
    // p-th powers of sums, not only of the spanning rows' semilinear images
    RLieSpec h2 = lie_heisenberg(2);
    SubspaceBasis hull = p_hull(h2, span_of(2, 3, {{1, 1, 0}}));
    CHECK(hull.rows == FpMat{{1, 1, 0}, {0, 0, 1}});
    CHECK(hull.is_subalgebra);

    CHECK_THROWS_AS(p_hull(heis_with_pmap(3, FpMat{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}),
                           span_of(3, 3, {{0, 0, 1}})),
                    usage_error);
}

TEST_CASE("bounded p-nilpotency index") {
    RLieSpec d = lie_example_d();
    CHECK(p_nil_bounded(d, derived_lie(d)) == 1u);     // a^[2] = 0
    CHECK(p_nil_bounded(d, span_of(2, 2, {})) == 0u);  // zero subspace
    CHECK(!p_nil_bounded(d, whole_space(2, 2)).has_value()); // b^[2] = b survives

    RLieSpec s3 = lie_sl2(3);
    CHECK(!p_nil_bounded(s3, span_of(3, 3, {{0, 1, 0}})).has_value());

    RLieSpec h3 = lie_heisenberg(3);
    CHECK(p_nil_bounded(h3, derived_lie(h3)) == 1u);   // z^[3] = 0

    // subspace monotonicity on a present instance
    RLieSpec dd = lie_direct_sum(lie_example_d(), lie_example_d());
    auto t_full = p_nil_bounded(dd, derived_lie(dd));
    auto t_sub = p_nil_bounded(dd, span_of(2, 4, {{1, 0, 0, 0}}));
    REQUIRE(t_full.has_value());
    REQUIRE(t_sub.has_value());
    CHECK(*t_sub <= *t_full);
    CHECK(*t_full == 1u);
}

TEST_CASE("quotients by restricted ideals") {
    RLieSpec h = lie_heisenberg(3);
    RLieSpec q = lie_quotient(h, center_lie(h));
    CHECK(q.dim == 2);
    CHECK(validate_rlie(q).ok());
    CHECK(derived_lie(q).dim() == 0); // Heisenberg mod center is abelian

    // span{x} is not an ideal: [x,y] = z escapes
    CHECK_THROWS_AS(lie_quotient(h, span_of(3, 3, {{1, 0, 0}})), usage_error);

    // quotient by the zero ideal is the algebra itself (up to labels)
    RLieSpec q0 = lie_quotient(h, span_of(3, 3, {}));
    CHECK(q0.dim == 3);
    CHECK(q0.bracket == h.bracket);
    CHECK(q0.pmap == h.pmap);
}
