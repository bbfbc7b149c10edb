#include "pialg/env.hpp"

#include <cstdlib>

#include "pialg/rng.hpp"

namespace pialg {

uint32_t env_dim_limit() {
    if (const char* s = std::getenv("PIALG_ENV_LIMIT")) {
        long v = std::atol(s);
        if (v >= 1) return static_cast<uint32_t>(v);
    }
    return 12;
}

size_t EnvAlgebra::gen_mono(size_t i) const {
    size_t m = 1;
    for (size_t t = 0; t < i; ++t) m *= L.p;
    return m;
}

namespace {

size_t guarded_dim(uint32_t p, size_t n) {
    const uint64_t limit = 1ull << env_dim_limit();
    uint64_t q = 1;
    for (size_t i = 0; i < n; ++i) {
        q *= p;
        if (q > limit)
            throw resource_error("build_u: p^n = " + std::to_string(p) + "^" +
                                 std::to_string(n) + " exceeds the envelope size limit 2^" +
                                 std::to_string(env_dim_limit()) +
                                 " (set PIALG_ENV_LIMIT to raise)");
    }
    return static_cast<size_t>(q);
}

std::string mono_label(const RLieSpec& L, const std::vector<uint16_t>& e) {
    std::string s;
    for (size_t i = 0; i < L.dim; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += L.labels[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

// Straightening engine: memoized normal forms of generator * monomial.
struct Straightener {
    const RLieSpec& L;
    size_t Q;
    std::vector<size_t> pow_p;               // p^i
    std::vector<SparseFpVec> memo;           // per (g * Q + m)
    std::vector<uint8_t> state;              // 0 new, 1 in progress, 2 done
    FpRing F;

    explicit Straightener(const RLieSpec& l, size_t q) : L(l), Q(q), F(l.p) {
        pow_p.resize(L.dim + 1);
        pow_p[0] = 1;
        for (size_t i = 0; i < L.dim; ++i) pow_p[i + 1] = pow_p[i] * L.p;
        memo.resize(L.dim * Q);
        state.assign(L.dim * Q, 0);
    }

    uint32_t digit(size_t m, size_t i) const {
        return static_cast<uint32_t>((m / pow_p[i]) % L.p);
    }

    void accumulate(FpVec& acc, uint32_t c, const SparseFpVec& v) {
        for (auto& [m, cm] : v) acc[m] = F.add(acc[m], F.mul(c, cm));
    }

    const SparseFpVec& nf(size_t g, size_t m) {
        const size_t key = g * Q + m;
        if (state[key] == 2) return memo[key];
        if (state[key] == 1)
            throw usage_error("build_u: straightening cycle (termination measure violated)");
        state[key] = 1;

        SparseFpVec result;
        size_t j = L.dim; // first generator occurring in m
        for (size_t i = 0; i < L.dim; ++i)
            if (digit(m, i) > 0) {
                j = i;
                break;
            }

        if (j == L.dim || g < j) {
            // e_g prepends cleanly (digit g is zero)
            result = {{static_cast<uint32_t>(m + pow_p[g]), 1}};
        } else if (g == j) {
            if (digit(m, g) + 1 < L.p) {
                result = {{static_cast<uint32_t>(m + pow_p[g]), 1}};
            } else {
                // e_g^p collapses to the p-map image
                const size_t rest = m - (L.p - 1) * pow_p[g];
                FpVec acc(Q, 0);
                for (size_t k = 0; k < L.dim; ++k)
                    if (L.pmap[g][k]) accumulate(acc, L.pmap[g][k], nf(k, rest));
                result = to_sparse(acc);
            }
        } else {
            // g > j: e_g e_j = e_j e_g + [e_g, e_j]
            const size_t tail = m - pow_p[j];
            FpVec acc(Q, 0);
            SparseFpVec v1 = nf(g, tail); // copy: recursion below may resize memo
            for (auto& [m1, c1] : v1) accumulate(acc, c1, nf(j, m1));
            for (auto [k, ck] : L.br(g, j)) accumulate(acc, ck, nf(k, tail));
            result = to_sparse(acc);
        }

        memo[key] = std::move(result);
        state[key] = 2;
        return memo[key];
    }

    // normal form of (basis monomial m1) * (basis monomial m2)
    SparseFpVec product(size_t m1, size_t m2) {
        SparseFpVec cur{{static_cast<uint32_t>(m2), 1}};
        // peel m1's word from its right end: highest generator first
        for (size_t i = L.dim; i-- > 0;) {
            const uint32_t e = digit(m1, i);
            for (uint32_t t = 0; t < e; ++t) {
                FpVec acc(Q, 0);
                for (auto& [m, c] : cur) accumulate(acc, c, nf(i, m));
                cur = to_sparse(acc);
            }
        }
        return cur;
    }
};

} // namespace

EnvAlgebra build_u(const RLieSpec& L) {
    RLieValidation v = validate_rlie(L);
    if (!v.ok())
        throw usage_error("build_u: input fails restricted Lie validation (" +
                          v.issues.front().axiom + ")");
    const size_t Q = guarded_dim(L.p, L.dim);

    Straightener st(L, Q);
    std::vector<SparseFpVec> table(Q * Q);
    for (size_t m1 = 0; m1 < Q; ++m1)
        for (size_t m2 = 0; m2 < Q; ++m2) table[m1 * Q + m2] = st.product(m1, m2);

    EnvAlgebra u;
    u.L = L;
    u.expo.resize(Q);
    std::vector<std::string> labels(Q);
    for (size_t m = 0; m < Q; ++m) {
        std::vector<uint16_t> e(L.dim);
        for (size_t i = 0; i < L.dim; ++i) e[i] = static_cast<uint16_t>(st.digit(m, i));
        labels[m] = mono_label(L, e);
        u.expo[m] = std::move(e);
    }
    FpVec unit(Q, 0);
    unit[0] = 1;
    u.A = make_algebra(L.p, Q, std::move(table), std::move(unit), std::move(labels));
    return u;
}

FpVec env_embed(const EnvAlgebra& u, const FpVec& x_lie) {
    if (x_lie.size() != u.L.dim) throw usage_error("env_embed: coordinate length");
    FpVec r(u.A.dim, 0);
    for (size_t i = 0; i < u.L.dim; ++i) r[u.gen_mono(i)] = x_lie[i] % u.L.p;
    return r;
}

FpVec env_project_lie(const EnvAlgebra& u, const FpVec& x_env) {
    FpVec r(u.L.dim, 0);
    std::vector<bool> is_gen(u.A.dim, false);
    for (size_t i = 0; i < u.L.dim; ++i) is_gen[u.gen_mono(i)] = true;
    for (size_t m = 0; m < u.A.dim; ++m)
        if (x_env[m] && !is_gen[m])
            throw usage_error("env_project_lie: element leaves the embedded Lie algebra");
    for (size_t i = 0; i < u.L.dim; ++i) r[i] = x_env[u.gen_mono(i)];
    return r;
}

uint32_t env_eps(const FpVec& x_env) { return x_env.empty() ? 0 : x_env[0]; }

SubspaceBasis augmentation_ideal_env(const EnvAlgebra& u) {
    FpMat rows;
    for (size_t m = 1; m < u.A.dim; ++m) {
        FpVec v(u.A.dim, 0);
        v[m] = 1;
        rows.push_back(std::move(v));
    }
    SubspaceBasis s = span_of(u.L.p, u.A.dim, std::move(rows));
    s.is_subalgebra = check_mul_closed(u.A, s);
    s.is_ideal = check_ideal(u.A, s);
    return s;
}

FpVec lie_pmap_general(const EnvAlgebra& u, const FpVec& x_lie) {
    FpRing F(u.L.p);
    auto x = alg_lift(u.A, F, env_embed(u, x_lie));
    auto pw = alg_pow(u.A, F, x, u.L.p);
    FpVec dense(u.A.dim, 0);
    for (size_t m = 0; m < u.A.dim; ++m) dense[m] = pw[m];
    return env_project_lie(u, dense);
}

SubspaceBasis p_hull(const RLieSpec& L, const SubspaceBasis& h) {
    RLieValidation v = validate_rlie(L);
    if (!v.ok()) throw usage_error("p_hull: input fails restricted Lie validation");
    EnvAlgebra u = build_u(L);
    FpRing F = L.field();

    SubspaceBasis s = span_of(L.p, L.dim, h.rows);
    bool grew = true;
    while (grew) {
        grew = false;
        // p-th powers are not additive, so every element of the span counts
        const size_t k = s.dim();
        uint64_t total = 1;
        for (size_t i = 0; i < k; ++i) total *= L.p;
        for (uint64_t code = 1; code < total && !grew; ++code) {
            FpVec x(L.dim, 0);
            uint64_t c = code;
            for (size_t i = 0; i < k; ++i) {
                const uint32_t ci = static_cast<uint32_t>(c % L.p);
                c /= L.p;
                if (ci) x = vec_add(x, vec_scale(s.rows[i], ci, F), F);
            }
            FpVec xp = lie_pmap_general(u, x);
            if (!vec_is_zero(xp) && !s.contains(xp, F)) {
                FpMat rows = s.rows;
                rows.push_back(std::move(xp));
                s = span_of(L.p, L.dim, std::move(rows));
                grew = true;
            }
        }
    }
    s.is_subalgebra = lie_check_subalgebra(L, s);
    s.is_ideal = lie_check_restricted_ideal(L, s);
    return s;
}

std::optional<uint32_t> p_nil_bounded(const RLieSpec& L, const SubspaceBasis& h,
                                      uint64_t seed) {
    if (h.dim() == 0) return 0;
    RLieValidation v = validate_rlie(L);
    if (!v.ok()) throw usage_error("p_nil_bounded: input fails restricted Lie validation");
    EnvAlgebra u = build_u(L);

    uint32_t k = 1;
    {
        uint64_t q = L.p;
        while (q < 32 && k < kFqMaxDegree) {
            q *= L.p;
            ++k;
        }
    }
    FqRing E(L.p, k);

    // concrete elements of H embedded in u(L); their p^t-th powers refute
    std::vector<std::vector<FqRing::Elem>> running;
    for (const auto& r : h.rows) running.push_back(alg_lift(u.A, E, env_embed(u, r)));
    {
        auto rng = seeded_rng(seed, "p_nil_bounded");
        std::uniform_int_distribution<uint32_t> co(0, E.p() - 1);
        for (int extra = 0; extra < 8; ++extra) {
            auto x = alg_zero(u.A, E);
            for (const auto& r : h.rows) {
                FqRing::Elem c{};
                for (uint32_t i = 0; i < E.k; ++i) c[i] = co(rng);
                auto lifted = alg_lift(u.A, E, env_embed(u, r));
                x = alg_add(E, x, alg_scale(E, c, lifted));
            }
            running.push_back(std::move(x));
        }
    }

    // generic power chain, materialized only when all witnesses vanish
    std::optional<PolyRing> R;
    std::vector<Poly> gpow;
    uint32_t gpow_t = 0;

    for (uint32_t t = 1; t <= L.dim; ++t) {
        bool refuted = false;
        for (auto& w : running) {
            w = alg_pow(u.A, E, w, L.p);
            if (!alg_is_zero(E, w)) refuted = true;
        }
        if (refuted) continue;

        if (!R) {
            R.emplace(L.p, static_cast<uint32_t>(h.dim()));
            gpow = alg_zero(u.A, *R);
            for (size_t i = 0; i < h.rows.size(); ++i) {
                auto lifted = alg_lift(u.A, *R, env_embed(u, h.rows[i]));
                gpow = alg_add(*R, gpow, alg_scale(*R, R->gen(static_cast<uint32_t>(i)), lifted));
            }
            gpow_t = 0;
        }
        while (gpow_t < t) {
            gpow = alg_pow(u.A, *R, gpow, L.p);
            ++gpow_t;
        }
        if (alg_is_zero(*R, gpow)) return t;
    }
    return std::nullopt;
}

FpVec RegularRep::embed_original(const FpVec& x_lie_original) const {
    // rewrite in the adapted basis first: x = c * adapted_rows
    FpRing F(lad.p);
    auto inv = mat_inverse(adapted_rows, F);
    if (!inv) throw usage_error("regular_rep: adapted basis not invertible");
    FpVec c(lad.dim, 0);
    for (size_t j = 0; j < lad.dim; ++j)
        for (size_t i = 0; i < lad.dim; ++i)
            c[j] = F.add(c[j], F.mul(x_lie_original[i], (*inv)[i][j]));
    return env_embed(u, c);
}

std::vector<std::vector<FpVec>> RegularRep::matrix_of(const FpVec& x_env) const {
    FpRing F(lad.p);
    const size_t pa = ua.A.dim; // p^adim
    std::vector<std::vector<FpVec>> m(q, std::vector<FpVec>(q, FpVec(pa, 0)));
    auto x = alg_lift(u.A, F, x_env);
    for (size_t nu = 0; nu < q; ++nu) {
        FpVec nu_elem(u.A.dim, 0);
        nu_elem[nu * pa] = 1; // complement monomial: zero A-part
        auto prod = alg_mul(u.A, F, alg_lift(u.A, F, nu_elem), x);
        for (size_t mono = 0; mono < u.A.dim; ++mono) {
            if (prod[mono] == 0) continue;
            const size_t alpha = mono % pa;
            const size_t mu = mono / pa;
            m[nu][mu][alpha] = F.add(m[nu][mu][alpha], prod[mono]);
        }
    }
    return m;
}

std::vector<std::vector<FpVec>> rep_mat_mul(const EnvAlgebra& ua,
                                            const std::vector<std::vector<FpVec>>& x,
                                            const std::vector<std::vector<FpVec>>& y) {
    FpRing F(ua.L.p);
    const size_t q = x.size();
    std::vector<std::vector<FpVec>> r(q, std::vector<FpVec>(q, FpVec(ua.A.dim, 0)));
    for (size_t i = 0; i < q; ++i)
        for (size_t t = 0; t < q; ++t) {
            if (vec_is_zero(x[i][t])) continue;
            auto xe = alg_lift(ua.A, F, x[i][t]);
            for (size_t j = 0; j < q; ++j) {
                if (vec_is_zero(y[t][j])) continue;
                auto prod = alg_mul(ua.A, F, xe, alg_lift(ua.A, F, y[t][j]));
                for (size_t c = 0; c < ua.A.dim; ++c) r[i][j][c] = F.add(r[i][j][c], prod[c]);
            }
        }
    return r;
}

RegularRep regular_rep_over(const RLieSpec& L, const SubspaceBasis& a) {
    if (!lie_check_restricted_ideal(L, a))
        throw usage_error("regular_rep_over: subspace is not a restricted ideal");
    RLieValidation v = validate_rlie(L);
    if (!v.ok()) throw usage_error("regular_rep_over: input fails restricted Lie validation");

    FpRing F = L.field();
    EnvAlgebra u_orig = build_u(L);

    // adapted basis: ideal rows first, then standard complement vectors
    FpMat rows = a.rows;
    std::vector<bool> is_pivot(L.dim, false);
    for (size_t c : a.pivots) is_pivot[c] = true;
    std::vector<std::string> labels;
    for (size_t i = 0; i < a.rows.size(); ++i) labels.push_back("a" + std::to_string(i + 1));
    for (size_t c = 0; c < L.dim; ++c)
        if (!is_pivot[c]) {
            FpVec v2(L.dim, 0);
            v2[c] = 1;
            rows.push_back(std::move(v2));
            labels.push_back(L.labels[c]);
        }
    auto inv = mat_inverse(rows, F);
    if (!inv) throw usage_error("regular_rep_over: adapted basis is singular");

    auto to_new = [&](const FpVec& old) {
        FpVec c(L.dim, 0);
        for (size_t j = 0; j < L.dim; ++j)
            for (size_t i = 0; i < L.dim; ++i)
                c[j] = F.add(c[j], F.mul(old[i], (*inv)[i][j]));
        return c;
    };

    // transported bracket and p-map (true p-th powers via the envelope)
    std::vector<SparseFpVec> br(L.dim * L.dim);
    FpMat pm;
    for (size_t i = 0; i < L.dim; ++i)
        for (size_t j = 0; j < L.dim; ++j)
            br[i * L.dim + j] = to_sparse(to_new(lie_bracket(L, rows[i], rows[j])));
    for (size_t i = 0; i < L.dim; ++i) pm.push_back(to_new(lie_pmap_general(u_orig, rows[i])));

    RegularRep rep;
    rep.lad = make_rlie(L.p, L.dim, std::move(br), std::move(pm), std::move(labels));
    {
        RLieValidation va = validate_rlie(rep.lad);
        if (!va.ok())
            throw usage_error("regular_rep_over: transported structure fails validation");
    }
    rep.adapted_rows = rows;
    rep.adim = a.rows.size();
    rep.u = build_u(rep.lad);

    // induced structure on A in its own coordinates (first adim adapted rows)
    const size_t ad = rep.adim;
    std::vector<SparseFpVec> bra(ad * ad);
    FpMat pma;
    for (size_t i = 0; i < ad; ++i)
        for (size_t j = 0; j < ad; ++j) {
            FpVec w = lie_bracket(L, rows[i], rows[j]);
            FpVec c = to_new(std::move(w));
            for (size_t t = ad; t < L.dim; ++t)
                if (c[t]) throw usage_error("regular_rep_over: ideal not bracket-closed");
            bra[i * ad + j] = to_sparse(FpVec(c.begin(), c.begin() + ad));
        }
    for (size_t i = 0; i < ad; ++i) {
        FpVec c = to_new(lie_pmap_general(u_orig, rows[i]));
        for (size_t t = ad; t < L.dim; ++t)
            if (c[t]) throw usage_error("regular_rep_over: ideal not p-map closed");
        pma.push_back(FpVec(c.begin(), c.begin() + ad));
    }
    std::vector<std::string> alab;
    for (size_t i = 0; i < ad; ++i) alab.push_back("a" + std::to_string(i + 1));
    RLieSpec aspec = make_rlie(L.p, ad, std::move(bra), std::move(pma), std::move(alab));
    rep.ua = build_u(aspec);

    rep.q = 1;
    for (size_t i = 0; i < L.dim - ad; ++i) rep.q *= L.p;
    return rep;
}

} // namespace pialg
