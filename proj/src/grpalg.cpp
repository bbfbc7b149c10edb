#include "pialg/grpalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pialg {

uint32_t GroupSpec::pow(uint32_t i, uint64_t e) const {
    uint32_t r = 0;
    for (uint64_t t = 0; t < e; ++t) r = mul(r, i); // orders are tiny here
    return r;
}

GroupSpec make_group(std::vector<uint32_t> table, std::vector<std::string> labels) {
    size_t m = 1;
    while (m * m < table.size()) ++m;
    if (m * m != table.size() || table.empty())
        throw usage_error("make_group: table must be a nonempty m*m square");

    GroupSpec g;
    g.order = m;
    g.table = std::move(table);

    for (uint32_t v : g.table)
        if (v >= m) throw usage_error("make_group: entry out of range");
    std::vector<bool> seen(m);
    for (size_t i = 0; i < m; ++i) {
        seen.assign(m, false);
        for (size_t j = 0; j < m; ++j) {
            if (seen[g.mul(i, j)])
                throw usage_error("make_group: row " + std::to_string(i) +
                                  " is not a permutation");
            seen[g.mul(i, j)] = true;
        }
    }
    for (size_t j = 0; j < m; ++j) {
        seen.assign(m, false);
        for (size_t i = 0; i < m; ++i) {
            if (seen[g.mul(i, j)])
                throw usage_error("make_group: column " + std::to_string(j) +
                                  " is not a permutation");
            seen[g.mul(i, j)] = true;
        }
    }
    for (size_t i = 0; i < m; ++i)
        if (g.mul(0, i) != i || g.mul(i, 0) != i)
            throw usage_error("make_group: element 0 is not a two-sided identity");
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < m; ++k)
                if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)))
                    throw usage_error("make_group: associativity fails at (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");

    g.inverse.resize(m);
    for (uint32_t i = 0; i < m; ++i) {
        uint32_t j = 0;
        while (g.mul(i, j) != 0) ++j;
        if (g.mul(j, i) != 0)
            throw usage_error("make_group: one-sided inverse at " + std::to_string(i));
        g.inverse[i] = j;
    }

    if (labels.empty())
        for (size_t i = 0; i < m; ++i) labels.push_back("g" + std::to_string(i));
    if (labels.size() != m) throw usage_error("make_group: label count");
    g.labels = std::move(labels);
    return g;
}

GroupSpec group_cyclic(size_t n) {
    if (n < 1) throw usage_error("group_cyclic: order must be positive");
    std::vector<uint32_t> t(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<uint32_t>((i + j) % n);
    std::vector<std::string> labels{"1"};
    if (n > 1) labels.push_back("g");
    for (size_t i = 2; i < n; ++i) labels.push_back("g^" + std::to_string(i));
    return make_group(std::move(t), std::move(labels));
}

GroupSpec group_dihedral(size_t order) {
    if (order < 2 || order % 2 != 0)
        throw usage_error("group_dihedral: order must be even and at least 2");
    const size_t n = order / 2;
    // indices: rotations b^k at k, reflections a b^k at n + k
    auto idx = [&](bool refl, size_t k) { return static_cast<uint32_t>((refl ? n : 0) + k); };
    std::vector<uint32_t> t(order * order);
    for (size_t i = 0; i < order; ++i)
        for (size_t j = 0; j < order; ++j) {
            const bool ri = i >= n, rj = j >= n;
            const size_t ki = ri ? i - n : i, kj = rj ? j - n : j;
            uint32_t v;
            if (!ri && !rj) v = idx(false, (ki + kj) % n);
            else if (!ri && rj) v = idx(true, (kj + n - ki) % n); // b^k (a b^l) = a b^(l-k)
            else if (ri && !rj) v = idx(true, (ki + kj) % n);
            else v = idx(false, (kj + n - ki) % n);               // (a b^k)(a b^l) = b^(l-k)
            t[i * order + j] = v;
        }
    std::vector<std::string> labels{"1"};
    if (n > 1) labels.push_back("b");
    for (size_t k = 2; k < n; ++k) labels.push_back("b^" + std::to_string(k));
    labels.push_back("a");
    if (n > 1) labels.push_back("a*b");
    for (size_t k = 2; k < n; ++k) labels.push_back("a*b^" + std::to_string(k));
    return make_group(std::move(t), std::move(labels));
}

GroupSpec group_direct_product(const GroupSpec& g, const GroupSpec& h) {
    const size_t m = g.order * h.order;
    auto idx = [&](size_t i, size_t j) { return static_cast<uint32_t>(i * h.order + j); };
    std::vector<uint32_t> t(m * m);
    for (size_t i1 = 0; i1 < g.order; ++i1)
        for (size_t j1 = 0; j1 < h.order; ++j1)
            for (size_t i2 = 0; i2 < g.order; ++i2)
                for (size_t j2 = 0; j2 < h.order; ++j2)
                    t[idx(i1, j1) * m + idx(i2, j2)] =
                        idx(g.mul(static_cast<uint32_t>(i1), static_cast<uint32_t>(i2)),
                            h.mul(static_cast<uint32_t>(j1), static_cast<uint32_t>(j2)));
    std::vector<std::string> labels;
    for (size_t i = 0; i < g.order; ++i)
        for (size_t j = 0; j < h.order; ++j)
            labels.push_back("(" + g.labels[i] + "," + h.labels[j] + ")");
    return make_group(std::move(t), std::move(labels));
}

GroupSpec group_quaternion() {
    // element 2*l + s: letter l in {1,i,j,k}, s = 1 for the negative sign
    static const int lsign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const uint32_t lmul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::vector<uint32_t> t(64);
    for (uint32_t x = 0; x < 8; ++x)
        for (uint32_t y = 0; y < 8; ++y) {
            uint32_t lx = x / 2, ly = y / 2;
            uint32_t s = (x % 2) ^ (y % 2) ^ (lsign[lx][ly] < 0 ? 1u : 0u);
            t[x * 8 + y] = 2 * lmul[lx][ly] + s;
        }
    return make_group(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

bool Subgroup::contains(uint32_t i) const {
    return std::binary_search(elems.begin(), elems.end(), i);
}

namespace {

bool subgroup_is_normal(const GroupSpec& g, const std::vector<uint32_t>& elems) {
    for (uint32_t x : elems)
        for (uint32_t s = 0; s < g.order; ++s) {
            const uint32_t conj = g.mul(g.mul(s, x), g.inv(s));
            if (!std::binary_search(elems.begin(), elems.end(), conj)) return false;
        }
    return true;
}

} // namespace

Subgroup subgroup_closure(const GroupSpec& g, std::vector<uint32_t> generators) {
    std::vector<bool> in(g.order, false);
    in[0] = true;
    std::vector<uint32_t> work{0};
    for (uint32_t x : generators)
        if (x < g.order && !in[x]) {
            in[x] = true;
            work.push_back(x);
        }
    // closure under products; inverses follow from finiteness
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < work.size(); ++a)
            for (size_t b = 0; b < work.size(); ++b) {
                const uint32_t prod = g.mul(work[a], work[b]);
                if (!in[prod]) {
                    in[prod] = true;
                    work.push_back(prod);
                    changed = true;
                }
            }
    }
    Subgroup s;
    for (uint32_t i = 0; i < g.order; ++i)
        if (in[i]) s.elems.push_back(i);
    s.is_normal = subgroup_is_normal(g, s.elems);
    return s;
}

Subgroup derived_subgroup(const GroupSpec& g) {
    std::vector<uint32_t> gens;
    for (uint32_t a = 0; a < g.order; ++a)
        for (uint32_t b = 0; b < g.order; ++b)
            gens.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    return subgroup_closure(g, std::move(gens));
}

Subgroup center_group(const GroupSpec& g) {
    Subgroup s;
    for (uint32_t x = 0; x < g.order; ++x) {
        bool central = true;
        for (uint32_t y = 0; y < g.order && central; ++y)
            if (g.mul(x, y) != g.mul(y, x)) central = false;
        if (central) s.elems.push_back(x);
    }
    s.is_normal = true; // conjugation fixes central elements
    return s;
}

uint64_t element_order(const GroupSpec& g, uint32_t i) {
    uint64_t n = 1;
    uint32_t x = i;
    while (x != 0) {
        x = g.mul(x, i);
        ++n;
    }
    return n;
}

uint64_t group_exponent(const GroupSpec& g) {
    uint64_t e = 1;
    for (uint32_t i = 0; i < g.order; ++i) e = std::lcm(e, element_order(g, i));
    return e;
}

bool is_p_elements(const GroupSpec& g, const std::vector<uint32_t>& elems, uint32_t p) {
    for (uint32_t i : elems) {
        uint64_t n = element_order(g, i);
        while (n % p == 0) n /= p;
        if (n != 1) return false;
    }
    return true;
}

std::optional<uint32_t> nilpotency_class(const GroupSpec& g) {
    Subgroup cur = subgroup_closure(g, [&] {
        std::vector<uint32_t> all(g.order);
        for (uint32_t i = 0; i < g.order; ++i) all[i] = i;
        return all;
    }());
    uint32_t steps = 0;
    while (cur.order() > 1) {
        std::vector<uint32_t> gens;
        for (uint32_t x : cur.elems)
            for (uint32_t y = 0; y < g.order; ++y)
                gens.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
        Subgroup next = subgroup_closure(g, std::move(gens));
        if (next == cur) return std::nullopt; // stabilized above the identity
        cur = std::move(next);
        ++steps;
    }
    return steps == 0 ? 1 : steps; // trivial group has class 1 by convention
}

GroupInfo group_info(const GroupSpec& g) {
    GroupInfo info;
    info.derived = derived_subgroup(g);
    info.center = center_group(g);
    info.exponent = group_exponent(g);
    info.nilpotency_class = nilpotency_class(g);
    return info;
}

AlgebraSpec build_kg(const GroupSpec& g, uint32_t p) {
    std::vector<SparseFpVec> table(g.order * g.order);
    for (uint32_t i = 0; i < g.order; ++i)
        for (uint32_t j = 0; j < g.order; ++j)
            table[i * g.order + j] = {{g.mul(i, j), 1}};
    FpVec unit(g.order, 0);
    unit[0] = 1;
    return make_algebra(p, g.order, std::move(table), std::move(unit), g.labels);
}

SubspaceBasis augmentation_ideal_kg(const AlgebraSpec& kg) {
    FpMat rows;
    for (size_t i = 1; i < kg.dim; ++i) {
        FpVec v(kg.dim, 0);
        v[0] = kg.p - 1;
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    SubspaceBasis s = span_of(kg.p, kg.dim, std::move(rows));
    s.is_subalgebra = check_mul_closed(kg, s);
    s.is_ideal = check_ideal(kg, s);
    return s;
}

TorsionScan torsion_scan(const GroupSpec& g, uint32_t p, uint32_t t) {
    TorsionScan scan;
    for (uint32_t i = 0; i < g.order; ++i)
        if (element_order(g, i) == 2) scan.has_2_torsion = true;

    Subgroup z = center_group(g);
    uint64_t pt = 1;
    for (uint32_t i = 0; i < t; ++i) pt *= p;
    scan.all_covered = true;
    for (uint32_t h = 0; h < g.order; ++h) {
        TorsionScan::Entry e;
        e.h = h;
        e.central_power = z.contains(g.pow(h, pt * p)); // h^(p^(t+1))
        e.torsion_square = g.pow(h, 2 * pt) == 0;       // h^(2 p^t) = 1
        if (!e.central_power && !e.torsion_square) scan.all_covered = false;
        scan.entries.push_back(e);
    }
    return scan;
}

std::optional<std::pair<uint32_t, uint32_t>> six_term_witness(const GroupSpec& g, uint32_t p,
                                                              uint32_t t) {
    FpRing F(p);
    uint64_t s = 1;
    for (uint32_t i = 0; i < t; ++i) s *= p;
    for (uint32_t h = 0; h < g.order; ++h) {
        const uint32_t hs = g.pow(h, s), h2s = g.pow(h, 2 * s);
        for (uint32_t x = 0; x < g.order; ++x) {
            FpVec acc(g.order, 0);
            auto add = [&](uint32_t elem, uint32_t sign) {
                acc[elem] = F.add(acc[elem], sign ? 1 : p - 1);
            };
            add(g.mul(hs, x), 1);
            add(g.mul(x, hs), 0);
            add(g.mul(h2s, x), 0);
            add(g.mul(x, h2s), 1);
            add(g.mul(g.mul(h2s, x), hs), 1);
            add(g.mul(g.mul(hs, x), h2s), 0);
            if (!vec_is_zero(acc)) return std::make_pair(x, h);
        }
    }
    return std::nullopt;
}

} // namespace pialg
