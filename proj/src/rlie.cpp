#include "pialg/rlie.hpp"

#include <algorithm>

namespace pialg {

namespace {

void validate_sparse_rows(uint32_t p, size_t dim, const std::vector<SparseFpVec>& rows,
                          const char* what) {
    for (const auto& e : rows) {
        uint32_t prev_seen = 0;
        bool first = true;
        for (auto& [idx, c] : e) {
            if (idx >= dim) throw usage_error(std::string(what) + ": index out of range");
            if (!first && idx <= prev_seen)
                throw usage_error(std::string(what) + ": entries not strictly sorted");
            if (c == 0 || c >= p)
                throw usage_error(std::string(what) + ": coefficient not in [1, p)");
            prev_seen = idx;
            first = false;
        }
    }
}

} // namespace

RLieSpec make_rlie(uint32_t p, size_t dim, std::vector<SparseFpVec> bracket, FpMat pmap,
                   std::vector<std::string> labels) {
    if (!is_prime_u32(p)) throw usage_error("make_rlie: p must be prime");
    if (bracket.size() != dim * dim) throw usage_error("make_rlie: bracket table size");
    validate_sparse_rows(p, dim, bracket, "make_rlie bracket");
    if (pmap.size() != dim) throw usage_error("make_rlie: pmap needs one row per basis element");
    for (auto& r : pmap) {
        if (r.size() != dim) throw usage_error("make_rlie: pmap row length");
        for (uint32_t c : r)
            if (c >= p) throw usage_error("make_rlie: pmap coefficient not reduced");
    }
    if (labels.empty())
        for (size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
    if (labels.size() != dim) throw usage_error("make_rlie: label count");

    RLieSpec L;
    L.p = p;
    L.dim = dim;
    L.bracket = std::move(bracket);
    L.pmap = std::move(pmap);
    L.labels = std::move(labels);
    return L;
}

FpVec lie_bracket(const RLieSpec& L, const FpVec& x, const FpVec& y) {
    FpRing F = L.field();
    FpVec r(L.dim, 0);
    for (size_t i = 0; i < L.dim; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < L.dim; ++j) {
            if (y[j] == 0) continue;
            const uint32_t c = F.mul(x[i], y[j]);
            for (auto& [k, ck] : L.br(i, j)) r[k] = F.add(r[k], F.mul(c, ck));
        }
    }
    return r;
}

FpMat ad_matrix(const RLieSpec& L, const FpVec& x) {
    FpRing F = L.field();
    FpMat m(L.dim, FpVec(L.dim, 0));
    for (size_t j = 0; j < L.dim; ++j) {
        for (size_t i = 0; i < L.dim; ++i) {
            if (x[i] == 0) continue;
            for (auto& [k, ck] : L.br(i, j)) m[k][j] = F.add(m[k][j], F.mul(x[i], ck));
        }
    }
    return m;
}

FpVec pmap_semilinear(const RLieSpec& L, const FpVec& x) {
    FpRing F = L.field();
    FpVec r(L.dim, 0);
    for (size_t i = 0; i < L.dim; ++i) {
        if (x[i] == 0) continue;
        const uint32_t cp = F.pow(x[i], L.p);
        for (size_t k = 0; k < L.dim; ++k) r[k] = F.add(r[k], F.mul(cp, L.pmap[i][k]));
    }
    return r;
}

RLieValidation validate_rlie(const RLieSpec& L) {
    FpRing F = L.field();
    RLieValidation rep;
    auto basis = [&](size_t i) {
        FpVec v(L.dim, 0);
        v[i] = 1;
        return v;
    };

    for (size_t i = 0; i < L.dim; ++i)
        if (!L.br(i, i).empty())
            rep.issues.push_back({"alternating", {i},
                                  "[" + L.labels[i] + "," + L.labels[i] + "] != 0"});

    for (size_t i = 0; i < L.dim; ++i)
        for (size_t j = i + 1; j < L.dim; ++j) {
            FpVec s = vec_add(to_dense(L.br(i, j), L.dim), to_dense(L.br(j, i), L.dim), F);
            if (!vec_is_zero(s))
                rep.issues.push_back({"antisymmetry", {i, j},
                                      "[" + L.labels[i] + "," + L.labels[j] + "] + [" +
                                          L.labels[j] + "," + L.labels[i] + "] != 0"});
        }

    for (size_t i = 0; i < L.dim; ++i)
        for (size_t j = i + 1; j < L.dim; ++j)
            for (size_t k = j + 1; k < L.dim; ++k) {
                FpVec s = lie_bracket(L, to_dense(L.br(i, j), L.dim), basis(k));
                s = vec_add(s, lie_bracket(L, to_dense(L.br(j, k), L.dim), basis(i)), F);
                s = vec_add(s, lie_bracket(L, to_dense(L.br(k, i), L.dim), basis(j)), F);
                if (!vec_is_zero(s))
                    rep.issues.push_back({"jacobi", {i, j, k},
                                          "cyclic sum over (" + L.labels[i] + "," + L.labels[j] +
                                              "," + L.labels[k] + ") is " +
                                              element_to_string_raw(L.labels, s)});
            }

    for (size_t i = 0; i < L.dim; ++i) {
        FpMat lhs = ad_matrix(L, L.pmap[i]);
        FpMat rhs = mat_pow(ad_matrix(L, basis(i)), L.p, F);
        if (lhs != rhs)
            rep.issues.push_back({"pmap", {i},
                                  "ad(" + L.labels[i] + "^[p]) != ad(" + L.labels[i] + ")^p"});
    }
    return rep;
}

bool lie_check_subalgebra(const RLieSpec& L, const SubspaceBasis& s) {
    FpRing F = L.field();
    for (size_t i = 0; i < s.rows.size(); ++i)
        for (size_t j = i + 1; j < s.rows.size(); ++j)
            if (!s.contains(lie_bracket(L, s.rows[i], s.rows[j]), F)) return false;
    return true;
}

bool lie_check_restricted_ideal(const RLieSpec& L, const SubspaceBasis& s) {
    FpRing F = L.field();
    for (const auto& r : s.rows) {
        for (size_t j = 0; j < L.dim; ++j) {
            FpVec ej(L.dim, 0);
            ej[j] = 1;
            if (!s.contains(lie_bracket(L, r, ej), F)) return false;
        }
        if (!s.contains(pmap_semilinear(L, r), F)) return false;
    }
    return true;
}

SubspaceBasis derived_lie(const RLieSpec& L) {
    FpMat gens;
    for (size_t i = 0; i < L.dim; ++i)
        for (size_t j = i + 1; j < L.dim; ++j) {
            FpVec v = to_dense(L.br(i, j), L.dim);
            if (!vec_is_zero(v)) gens.push_back(std::move(v));
        }
    SubspaceBasis s = span_of(L.p, L.dim, std::move(gens));
    s.is_subalgebra = lie_check_subalgebra(L, s);
    s.is_ideal = lie_check_restricted_ideal(L, s);
    return s;
}

SubspaceBasis center_lie(const RLieSpec& L) {
    FpRing F = L.field();
    // stack the constraint ad(e_j)^T blocks: x central iff [x, e_j] = 0 for all j
    FpMat m;
    for (size_t j = 0; j < L.dim; ++j) {
        FpMat block(L.dim, FpVec(L.dim, 0)); // block[k][i] = coeff of e_k in [e_i, e_j]
        for (size_t i = 0; i < L.dim; ++i)
            for (auto& [k, ck] : L.br(i, j)) block[k][i] = ck;
        for (auto& row : block) m.push_back(std::move(row));
    }
    SubspaceBasis s;
    s.ambient_dim = L.dim;
    s.p = L.p;
    s.rows = nullspace(std::move(m), L.dim, F);
    {
        FpMat tmp = s.rows;
        s.pivots = rref(tmp, F); // rows already reduced; recompute pivots cheaply
    }
    s.is_subalgebra = true; // brackets of central elements vanish
    s.is_ideal = lie_check_restricted_ideal(L, s);
    return s;
}

std::vector<SubspaceBasis> lower_central(const RLieSpec& L) {
    std::vector<SubspaceBasis> series{whole_space(L.p, L.dim)};
    while (true) {
        const SubspaceBasis& g = series.back();
        FpMat gens;
        for (const auto& r : g.rows)
            for (size_t j = 0; j < L.dim; ++j) {
                FpVec ej(L.dim, 0);
                ej[j] = 1;
                FpVec v = lie_bracket(L, r, ej);
                if (!vec_is_zero(v)) gens.push_back(std::move(v));
            }
        SubspaceBasis next = span_of(L.p, L.dim, std::move(gens));
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

SubspaceBasis restricted_ideal_closure(const RLieSpec& L, const SubspaceBasis& h) {
    FpRing F = L.field();
    FpMat rows = h.rows;
    SubspaceBasis s = span_of(L.p, L.dim, rows);
    while (true) {
        FpMat grown = s.rows;
        bool changed = false;
        auto absorb = [&](FpVec v) {
            if (!vec_is_zero(v) && !s.contains(v, F)) {
                grown.push_back(std::move(v));
                changed = true;
            }
        };
        for (const auto& r : s.rows) {
            for (size_t j = 0; j < L.dim; ++j) {
                FpVec ej(L.dim, 0);
                ej[j] = 1;
                absorb(lie_bracket(L, r, ej));
            }
            absorb(pmap_semilinear(L, r));
        }
        if (!changed) break;
        s = span_of(L.p, L.dim, std::move(grown));
    }
    s.is_subalgebra = true;
    s.is_ideal = true;
    return s;
}

RLieSpec lie_quotient(const RLieSpec& L, const SubspaceBasis& s,
                      std::vector<std::string> labels) {
    if (!lie_check_restricted_ideal(L, s))
        throw usage_error("lie_quotient: subspace is not a restricted ideal");
    FpRing F = L.field();
    std::vector<bool> is_pivot(L.dim, false);
    for (size_t c : s.pivots) is_pivot[c] = true;
    std::vector<size_t> comp; // standard basis vectors spanning a complement
    for (size_t c = 0; c < L.dim; ++c)
        if (!is_pivot[c]) comp.push_back(c);
    const size_t d = comp.size();

    // coordinates of v mod s in terms of the complement columns
    auto project = [&](FpVec v) {
        v = reduce_against(std::move(v), s.rows, s.pivots, F);
        FpVec r(d, 0);
        for (size_t t = 0; t < d; ++t) r[t] = v[comp[t]];
        return r;
    };

    std::vector<SparseFpVec> bracket(d * d);
    for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
            bracket[a * d + b] = to_sparse(project(to_dense(L.br(comp[a], comp[b]), L.dim)));
    FpMat pmap;
    for (size_t a = 0; a < d; ++a) pmap.push_back(project(L.pmap[comp[a]]));

    if (labels.empty())
        for (size_t a = 0; a < d; ++a) labels.push_back(L.labels[comp[a]] + "~");
    return make_rlie(L.p, d, std::move(bracket), std::move(pmap), std::move(labels));
}

namespace {

RLieSpec checked(RLieSpec L, const char* name) {
    RLieValidation v = validate_rlie(L);
    if (!v.ok()) throw usage_error(std::string(name) + ": construction failed validation");
    return L;
}

} // namespace

RLieSpec lie_example_d() {
    std::vector<SparseFpVec> br(4);
    br[0 * 2 + 1] = {{0, 1}}; // [a,b] = a
    br[1 * 2 + 0] = {{0, 1}}; // [b,a] = -a = a over GF(2)
    FpMat pmap{{0, 0}, {0, 1}};
    return checked(make_rlie(2, 2, std::move(br), std::move(pmap), {"a", "b"}), "lie_example_d");
}

RLieSpec lie_abelian(uint32_t p, size_t n, FpMat pmap) {
    std::vector<SparseFpVec> br(n * n);
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return checked(make_rlie(p, n, std::move(br), std::move(pmap), std::move(labels)),
                   "lie_abelian");
}

RLieSpec lie_heisenberg(uint32_t p) {
    std::vector<SparseFpVec> br(9);
    br[0 * 3 + 1] = {{2, 1}};     // [x,y] = z
    br[1 * 3 + 0] = {{2, p - 1}}; // [y,x] = -z
    FpMat pmap(3, FpVec(3, 0));
    return checked(make_rlie(p, 3, std::move(br), std::move(pmap), {"x", "y", "z"}),
                   "lie_heisenberg");
}

RLieSpec lie_sl2(uint32_t p) {
    // basis {e, h, f}: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    std::vector<SparseFpVec> br(9);
    auto put = [&](size_t i, size_t j, uint32_t idx, uint32_t c) {
        c %= p;
        if (c) br[i * 3 + j] = {{idx, c}};
    };
    put(0, 2, 1, 1);     // [e,f] = h
    put(2, 0, 1, p - 1); // [f,e] = -h
    put(1, 0, 0, 2);     // [h,e] = 2e
    put(0, 1, 0, p - 2); // [e,h] = -2e
    put(1, 2, 2, p - 2); // [h,f] = -2f
    put(2, 1, 2, 2);     // [f,h] = 2f
    FpMat pmap{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}};
    return checked(make_rlie(p, 3, std::move(br), std::move(pmap), {"e", "h", "f"}), "lie_sl2");
}

RLieSpec lie_direct_sum(const RLieSpec& a, const RLieSpec& b) {
    if (a.p != b.p) throw usage_error("lie_direct_sum: mismatched characteristic");
    const size_t n = a.dim + b.dim;
    std::vector<SparseFpVec> br(n * n);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) br[i * n + j] = a.br(i, j);
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t j = 0; j < b.dim; ++j) {
            SparseFpVec shifted;
            for (auto& [k, c] : b.br(i, j)) shifted.emplace_back(k + a.dim, c);
            br[(a.dim + i) * n + (a.dim + j)] = std::move(shifted);
        }
    FpMat pmap(n, FpVec(n, 0));
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t k = 0; k < a.dim; ++k) pmap[i][k] = a.pmap[i][k];
    for (size_t i = 0; i < b.dim; ++i)
        for (size_t k = 0; k < b.dim; ++k) pmap[a.dim + i][a.dim + k] = b.pmap[i][k];

    std::vector<std::string> labels = a.labels;
    for (const auto& l : b.labels) {
        std::string cand = l;
        while (std::find(labels.begin(), labels.end(), cand) != labels.end()) cand += "'";
        labels.push_back(cand);
    }
    return checked(make_rlie(a.p, n, std::move(br), std::move(pmap), std::move(labels)),
                   "lie_direct_sum");
}

} // namespace pialg
