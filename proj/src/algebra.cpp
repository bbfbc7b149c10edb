#include "pialg/algebra.hpp"

#include <algorithm>

#include "pialg/rng.hpp"

namespace pialg {

namespace {

void dense_accum_product(const AlgebraSpec& a, const SparseFpVec& left, size_t right_idx,
                         FpVec& acc, const FpRing& F) {
    for (auto& [t, c] : left)
        for (auto& [s, d] : a.entry(t, right_idx))
            acc[s] = F.add(acc[s], F.mul(c, d));
}

void dense_accum_product_r(const AlgebraSpec& a, size_t left_idx, const SparseFpVec& right,
                           FpVec& acc, const FpRing& F) {
    for (auto& [t, c] : right)
        for (auto& [s, d] : a.entry(left_idx, t))
            acc[s] = F.add(acc[s], F.mul(c, d));
}

} // namespace

AlgebraSpec make_algebra(uint32_t p, size_t dim, std::vector<SparseFpVec> table,
                         std::optional<FpVec> unit, std::vector<std::string> labels) {
    FpRing F(p);
    if (dim == 0) throw usage_error("make_algebra: dimension must be positive");
    if (table.size() != dim * dim)
        throw usage_error("make_algebra: structure table must have dim*dim entries");
    for (auto& e : table) {
        uint32_t prev_seen = 0;
        bool first = true;
        for (auto& [i, c] : e) {
            if (i >= dim) throw usage_error("make_algebra: structure index out of range");
            if (c == 0 || c >= p) throw usage_error("make_algebra: coefficient out of range");
            if (!first && i <= prev_seen)
                throw usage_error("make_algebra: sparse entries must be strictly sorted");
            prev_seen = i;
            first = false;
        }
    }
    if (labels.empty()) {
        labels.reserve(dim);
        for (size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    }
    if (labels.size() != dim) throw usage_error("make_algebra: label count mismatch");

    AlgebraSpec a;
    a.p = p;
    a.dim = dim;
    a.table = std::move(table);
    a.unit = std::move(unit);
    a.labels = std::move(labels);

    // associativity on every basis triple
    FpVec lhs(dim), rhs(dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            const SparseFpVec& cij = a.entry(i, j);
            for (size_t k = 0; k < dim; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                dense_accum_product(a, cij, k, lhs, F);
                dense_accum_product_r(a, i, a.entry(j, k), rhs, F);
                if (lhs != rhs)
                    throw usage_error("make_algebra: associativity fails at basis triple (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
            }
        }

    if (a.unit) {
        if (a.unit->size() != dim) throw usage_error("make_algebra: unit has wrong length");
        for (size_t i = 0; i < dim; ++i) {
            FpVec left(dim, 0), right(dim, 0), want(dim, 0);
            want[i] = 1;
            for (size_t j = 0; j < dim; ++j) {
                if ((*a.unit)[j] == 0) continue;
                for (auto& [s, d] : a.entry(j, i))
                    left[s] = F.add(left[s], F.mul((*a.unit)[j], d));
                for (auto& [s, d] : a.entry(i, j))
                    right[s] = F.add(right[s], F.mul((*a.unit)[j], d));
            }
            if (left != want || right != want)
                throw usage_error("make_algebra: unit axiom fails at basis index " +
                                  std::to_string(i));
        }
    }
    return a;
}

AlgebraSpec m2_algebra(uint32_t p) {
    // basis e11, e12, e21, e22 with index 2*row + col
    const size_t dim = 4;
    std::vector<SparseFpVec> table(dim * dim);
    for (uint32_t a_ = 0; a_ < 2; ++a_)
        for (uint32_t b = 0; b < 2; ++b)
            for (uint32_t c = 0; c < 2; ++c)
                for (uint32_t d = 0; d < 2; ++d) {
                    size_t i = 2 * a_ + b, j = 2 * c + d;
                    if (b == c) table[i * dim + j] = {{2 * a_ + d, 1}};
                }
    FpVec unit(dim, 0);
    unit[0] = unit[3] = 1;
    return make_algebra(p, dim, std::move(table), unit, {"e11", "e12", "e21", "e22"});
}

AlgebraSpec change_basis(const AlgebraSpec& a, const FpMat& basis_rows,
                         std::vector<std::string> new_labels) {
    FpRing F(a.p);
    if (basis_rows.size() != a.dim)
        throw usage_error("change_basis: need dim rows");
    auto inv = mat_inverse(basis_rows, F);
    if (!inv) throw usage_error("change_basis: basis matrix is singular");

    auto to_new = [&](const FpVec& old) {
        FpVec y(a.dim, 0);
        for (size_t k = 0; k < a.dim; ++k) {
            if (old[k] == 0) continue;
            for (size_t j = 0; j < a.dim; ++j)
                y[j] = F.add(y[j], F.mul(old[k], (*inv)[k][j]));
        }
        return y;
    };

    std::vector<SparseFpVec> table(a.dim * a.dim);
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            FpVec prod = alg_mul(a, F, basis_rows[i], basis_rows[j]);
            table[i * a.dim + j] = to_sparse(to_new(prod));
        }
    std::optional<FpVec> unit;
    if (a.unit) unit = to_new(*a.unit);
    if (new_labels.empty()) {
        for (size_t i = 0; i < a.dim; ++i) new_labels.push_back("f" + std::to_string(i));
    }
    return make_algebra(a.p, a.dim, std::move(table), std::move(unit), std::move(new_labels));
}

std::string element_to_string_raw(const std::vector<std::string>& labels, const FpVec& v) {
    std::string s;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (v[i] != 1) s += std::to_string(v[i]) + "*";
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

std::string element_to_string(const AlgebraSpec& a, const FpVec& v) {
    return element_to_string_raw(a.labels, v);
}

SubspaceBasis span_of(uint32_t p, size_t ambient_dim, FpMat generators) {
    FpRing F(p);
    for (auto& g : generators)
        if (g.size() != ambient_dim)
            throw usage_error("span_of: generator length mismatch");
    SubspaceBasis s;
    s.ambient_dim = ambient_dim;
    s.p = p;
    s.rows = std::move(generators);
    s.pivots = rref(s.rows, F);
    return s;
}

SubspaceBasis whole_space(uint32_t p, size_t dim) {
    return span_of(p, dim, mat_identity(dim));
}

SubspaceBasis subspace_sum(const SubspaceBasis& s, const SubspaceBasis& t) {
    FpMat rows = s.rows;
    rows.insert(rows.end(), t.rows.begin(), t.rows.end());
    return span_of(s.p, s.ambient_dim, std::move(rows));
}

SubspaceBasis subspace_product(const AlgebraSpec& a, const SubspaceBasis& s,
                               const SubspaceBasis& t) {
    FpRing F(a.p);
    FpMat rows;
    rows.reserve(s.rows.size() * t.rows.size());
    for (auto& u : s.rows)
        for (auto& v : t.rows) rows.push_back(alg_mul(a, F, u, v));
    return span_of(a.p, a.dim, std::move(rows));
}

bool check_mul_closed(const AlgebraSpec& a, const SubspaceBasis& s) {
    FpRing F(a.p);
    for (auto& u : s.rows)
        for (auto& v : s.rows)
            if (!s.contains(alg_mul(a, F, u, v), F)) return false;
    return true;
}

bool check_ideal(const AlgebraSpec& a, const SubspaceBasis& s) {
    FpRing F(a.p);
    for (auto& u : s.rows)
        for (size_t i = 0; i < a.dim; ++i) {
            FpVec b(a.dim, 0);
            b[i] = 1;
            if (!s.contains(alg_mul(a, F, b, u), F)) return false;
            if (!s.contains(alg_mul(a, F, u, b), F)) return false;
        }
    return true;
}

SubspaceBasis ideal_closure(const AlgebraSpec& a, const FpMat& generators) {
    FpRing F(a.p);
    SubspaceBasis s = span_of(a.p, a.dim, generators);
    while (true) {
        FpMat fresh;
        for (auto& u : s.rows)
            for (size_t i = 0; i < a.dim; ++i) {
                FpVec b(a.dim, 0);
                b[i] = 1;
                FpVec left = alg_mul(a, F, b, u);
                if (!s.contains(left, F)) fresh.push_back(std::move(left));
                FpVec right = alg_mul(a, F, u, b);
                if (!s.contains(right, F)) fresh.push_back(std::move(right));
            }
        if (fresh.empty()) break;
        FpMat rows = s.rows;
        rows.insert(rows.end(), fresh.begin(), fresh.end());
        s = span_of(a.p, a.dim, std::move(rows));
    }
    s.is_ideal = true;
    return s;
}

SubspaceBasis commutator_ideal(const AlgebraSpec& a) {
    FpRing F(a.p);
    FpMat gens;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = i + 1; j < a.dim; ++j) {
            FpVec u(a.dim, 0), v(a.dim, 0);
            u[i] = 1;
            v[j] = 1;
            FpVec c = alg_commutator(a, F, u, v);
            if (!vec_is_zero(c)) gens.push_back(std::move(c));
        }
    return ideal_closure(a, gens);
}

SubspaceBasis center_of(const AlgebraSpec& a) {
    FpRing F(a.p);
    // unknowns x_j; constraints: for every basis i and coordinate k,
    // sum_j x_j * ( (b_j b_i)_k - (b_i b_j)_k ) = 0
    FpMat sys;
    sys.reserve(a.dim * a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        FpMat block(a.dim, FpVec(a.dim, 0)); // block[k][j]
        for (size_t j = 0; j < a.dim; ++j) {
            for (auto& [k, c] : a.entry(j, i)) block[k][j] = F.add(block[k][j], c);
            for (auto& [k, c] : a.entry(i, j)) block[k][j] = F.sub(block[k][j], c);
        }
        for (auto& row : block)
            if (!vec_is_zero(row)) sys.push_back(std::move(row));
    }
    FpMat basis = nullspace(std::move(sys), a.dim, F);
    SubspaceBasis s = span_of(a.p, a.dim, std::move(basis));
    s.is_subalgebra = check_mul_closed(a, s);
    return s;
}

std::optional<uint32_t> nilpotency_index(const AlgebraSpec& a, const SubspaceBasis& ideal) {
    if (ideal.dim() == 0) return 1;
    SubspaceBasis power = ideal;
    for (uint32_t c = 2;; ++c) {
        SubspaceBasis next = subspace_product(a, power, ideal);
        if (next.dim() == 0) return c;
        if (next == power) return std::nullopt; // stabilized above zero
        power = next;
    }
}

std::optional<uint32_t> nil_bounded_index(const AlgebraSpec& a, const SubspaceBasis& ideal,
                                          uint64_t seed) {
    const size_t d = ideal.dim();
    if (d == 0) return 1;
    FpRing F(a.p);

    // witness pool over GF(p^k): basis rows plus seeded random combinations
    uint32_t k = 1;
    uint64_t q = a.p;
    while (q < 32 && k < kFqMaxDegree) {
        q *= a.p;
        ++k;
    }
    FqRing E(a.p, k);
    using EV = std::vector<FqRing::Elem>;
    std::vector<EV> pool;
    for (auto& row : ideal.rows) pool.push_back(alg_lift(a, E, row));
    auto rng = seeded_rng(seed, "nil_bounded_index");
    std::uniform_int_distribution<uint32_t> coeff(0, a.p - 1);
    for (int t = 0; t < 8; ++t) {
        EV x = alg_zero(a, E);
        for (auto& row : ideal.rows) {
            FqRing::Elem c{};
            for (uint32_t i = 0; i < k; ++i) c[i] = coeff(rng);
            x = alg_add(E, x, alg_scale(E, c, alg_lift(a, E, row)));
        }
        pool.push_back(std::move(x));
    }
    std::vector<EV> running = pool; // running[i] = pool[i]^n at step n

    // generic element over the polynomial ring, materialized only on demand
    std::optional<PolyRing> P;
    std::vector<Poly> gx, gpow;
    uint32_t gexp = 0;

    const uint32_t limit = static_cast<uint32_t>(d) + 1;
    for (uint32_t n = 1; n <= limit; ++n) {
        if (n > 1)
            for (size_t i = 0; i < running.size(); ++i)
                running[i] = alg_mul(a, E, running[i], pool[i]);
        bool refuted = false;
        for (auto& r : running)
            if (!alg_is_zero(E, r)) {
                refuted = true;
                break;
            }
        if (refuted) continue;

        if (!P) {
            P.emplace(a.p, static_cast<uint32_t>(d));
            gx.assign(a.dim, P->zero());
            for (size_t i = 0; i < d; ++i) {
                for (size_t c = 0; c < a.dim; ++c)
                    if (ideal.rows[i][c])
                        gx[c] = poly_add(gx[c], Poly::variable(a.p, static_cast<uint32_t>(d),
                                                               static_cast<uint32_t>(i),
                                                               ideal.rows[i][c]));
            }
            gpow = gx;
            gexp = 1;
        }
        while (gexp < n) {
            gpow = alg_mul(a, *P, gpow, gx);
            ++gexp;
        }
        if (alg_is_zero(*P, gpow)) return n;
    }
    return std::nullopt;
}

FpMat transport_rows(const FpMat& rows, const FpMat& basis_rows, const FpRing& F) {
    auto inv = mat_inverse(basis_rows, F);
    if (!inv) throw usage_error("transport_rows: basis matrix is singular");
    FpMat out;
    out.reserve(rows.size());
    for (auto& v : rows) {
        FpVec y(v.size(), 0);
        for (size_t kk = 0; kk < v.size(); ++kk) {
            if (v[kk] == 0) continue;
            for (size_t j = 0; j < v.size(); ++j)
                y[j] = F.add(y[j], F.mul(v[kk], (*inv)[kk][j]));
        }
        out.push_back(std::move(y));
    }
    return out;
}

} // namespace pialg
