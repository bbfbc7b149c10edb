#include "pialg/suite.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "pialg/env.hpp"
#include "pialg/errors.hpp"
#include "pialg/identity.hpp"

namespace pialg {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// least t with p^t >= n
uint32_t pow_exponent_for(uint32_t p, uint32_t n) {
    uint32_t t = 0;
    uint64_t q = 1;
    while (q < n) {
        q *= p;
        ++t;
    }
    return t;
}

std::string opt_index(const std::optional<uint32_t>& v) {
    return v ? "index " + std::to_string(*v) : "absent";
}

std::string opt_degree(const std::optional<uint32_t>& v) {
    return v ? std::to_string(*v) : "absent";
}

FpVec fp_mul(const AlgebraSpec& a, const FpVec& x, const FpVec& y) {
    FpRing F(a.p);
    return alg_mul(a, F, x, y);
}

FpVec fp_comm(const AlgebraSpec& a, const FpVec& x, const FpVec& y) {
    FpRing F(a.p);
    return alg_commutator(a, F, x, y);
}

FpVec fp_add(const AlgebraSpec& a, const FpVec& x, const FpVec& y) {
    FpRing F(a.p);
    return alg_add(F, x, y);
}

FpVec fp_sub(const AlgebraSpec& a, const FpVec& x, const FpVec& y) {
    FpRing F(a.p);
    return alg_sub(F, x, y);
}

bool subspace_contained(const SubspaceBasis& inner, const SubspaceBasis& outer) {
    FpRing F(inner.p);
    for (const auto& row : inner.rows)
        if (!outer.contains(row, F)) return false;
    return true;
}

// A basis element of s whose powers never vanish, if one exists.
std::optional<std::string> non_nil_basis_element(const AlgebraSpec& a, const SubspaceBasis& s) {
    FpRing F(a.p);
    for (const auto& row : s.rows) {
        FpVec x = row;
        bool died = false;
        for (size_t i = 0; i + 1 < 2 * a.dim + 2; ++i) {
            x = fp_mul(a, x, row);
            if (vec_is_zero(x)) {
                died = true;
                break;
            }
        }
        if (!died) return element_to_string(a, row);
    }
    return std::nullopt;
}

// The power-commutator witness clause shared by the two nonmatrix checkers.
void witness_power_commutator(TheoremReport& r, const AlgebraSpec& a, uint32_t nil_index) {
    const uint32_t t = pow_exponent_for(a.p, nil_index);
    TheoremCondition c;
    c.label = "(i)";
    c.witnessed = true;
    try {
        Identity pc = power_commutator_identity(t, a.p);
        bool nm = is_nonmatrix(pc, a.p);
        bool held;
        std::string how;
        try {
            held = holds_on(a, whole_space(a.p, a.dim), pc).holds;
            how = "checked";
        } catch (const resource_error&) {
            // whole-algebra generic substitution can exceed the indeterminate
            // budget; the nil bound on gamma^2 already forces the identity
            held = true;
            c.witnessed = false;
            how = "decided from the nil bound";
        }
        c.value = held && nm;
        c.detail = "power-commutator identity at t=" + std::to_string(t) + ", nonmatrix=" +
                   (nm ? "true" : "false") + ", " + how;
    } catch (const resource_error& e) {
        c.value = false;
        c.witnessed = false;
        c.detail = std::string("not constructed: ") + e.what();
    }
    r.equivalent = r.equivalent && c.value;
    r.conditions.push_back(c);
}

size_t thread_count() {
    const char* s = std::getenv("PIALG_THREADS");
    if (!s || !*s) return 1;
    long v = std::strtol(s, nullptr, 10);
    if (v < 1) return 1;
    if (v > 16) return 16;
    return static_cast<size_t>(v);
}

} // namespace

std::string TheoremReport::text(bool timing) const {
    std::string s = theorem + " on " + instance + ": ";
    s += completed ? (equivalent ? "equivalent" : "NOT EQUIVALENT") : "incomplete";
    if (!note.empty()) s += "\n  reduction: " + note;
    for (const auto& c : conditions) {
        s += "\n  " + c.label + " = " + (c.value ? "true" : "false");
        s += c.witnessed ? " [witnessed]" : " [decided]";
        if (!c.detail.empty()) s += "  " + c.detail;
    }
    if (timing) s += "\n  elapsed_ms=" + std::to_string(elapsed_ms);
    return s;
}

bool FixtureReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string FixtureReport::text() const {
    std::string s = "fixture " + name + ": " + (ok() ? "pass" : "FAIL");
    for (const auto& c : checks) {
        s += std::string("\n  ") + (c.ok ? "ok   " : "FAIL ") + c.label;
        if (!c.detail.empty()) s += "  [" + c.detail + "]";
    }
    return s;
}

TheoremReport check_thm_nonmatrix_L(const RLieSpec& L, const std::string& id) {
    Timer tm;
    TheoremReport r;
    r.theorem = "nonmatrix-envelope";
    r.instance = id.empty() ? "lie p=" + std::to_string(L.p) + " dim=" + std::to_string(L.dim) : id;
    r.note = "finite-scale clauses read with the whole algebra as the witness";
    try {
        auto der = derived_lie(L);
        auto t3 = p_nil_bounded(L, der);
        r.conditions.push_back({"(iii)",
                                "derived p-nil of bounded index: " +
                                    (t3 ? "exponent p^" + std::to_string(*t3) : "absent"),
                                t3.has_value(), false});

        EnvAlgebra u = build_u(L);
        SubspaceBasis g2 = commutator_ideal(u.A);
        auto n4 = nil_bounded_index(u.A, g2);
        std::string d4 = "commutator ideal of the envelope nil: " + opt_index(n4);
        if (!n4) {
            if (auto bad = non_nil_basis_element(u.A, g2)) d4 += ", non-nil element " + *bad;
        }
        r.conditions.push_back({"(iv)", d4, n4.has_value(), false});

        r.equivalent = t3.has_value() == n4.has_value();
        if (n4) witness_power_commutator(r, u.A, *n4);
    } catch (const resource_error& e) {
        r.completed = false;
        r.note += std::string("; resource limit: ") + e.what();
    }
    r.elapsed_ms = tm.ms();
    return r;
}

TheoremReport check_thm_nonmatrix_G(const GroupSpec& G, uint32_t p, const std::string& id) {
    Timer tm;
    TheoremReport r;
    r.theorem = "nonmatrix-group-algebra";
    r.instance = id.empty() ? "group order=" + std::to_string(G.order) + " p=" + std::to_string(p)
                            : id;
    r.note = "finite-scale clauses read with the whole group as the witness";
    try {
        Subgroup der = derived_subgroup(G);
        bool pgrp = is_p_elements(G, der.elems, p);
        r.conditions.push_back({"(iii)",
                                "derived subgroup of order " + std::to_string(der.order()) +
                                    (pgrp ? " is" : " is not") + " a p-group",
                                pgrp, false});

        AlgebraSpec kg = build_kg(G, p);
        SubspaceBasis g2 = commutator_ideal(kg);
        auto n4 = nil_bounded_index(kg, g2);
        std::string d4 = "commutator ideal of the group algebra nil: " + opt_index(n4);
        if (!n4) {
            if (auto bad = non_nil_basis_element(kg, g2)) d4 += ", non-nil element " + *bad;
        }
        r.conditions.push_back({"(iv)", d4, n4.has_value(), false});

        r.equivalent = pgrp == n4.has_value();
        if (n4) witness_power_commutator(r, kg, *n4);
    } catch (const resource_error& e) {
        r.completed = false;
        r.note += std::string("; resource limit: ") + e.what();
    }
    r.elapsed_ms = tm.ms();
    return r;
}

TheoremReport check_thm_engel(const RLieSpec& L, const std::string& id) {
    Timer tm;
    TheoremReport r;
    r.theorem = "engel-envelope";
    r.instance = id.empty() ? "lie p=" + std::to_string(L.p) + " dim=" + std::to_string(L.dim) : id;
    r.note = "bounded-exponent clauses read at the full algebra";
    try {
        EnvAlgebra u = build_u(L);
        auto deg = engel_degree(u.A, whole_space(L.p, u.A.dim));
        r.conditions.push_back({"(ii)", "engel degree of the envelope: " + opt_degree(deg),
                                deg.has_value(), false});

        auto chain = lower_central(L);
        bool nilp = chain.back().dim() == 0;
        auto der = derived_lie(L);
        auto dpn = p_nil_bounded(L, der);
        r.conditions.push_back({"(iii)",
                                std::string("nilpotent=") + (nilp ? "true" : "false") +
                                    ", derived p-nil: " + opt_index(dpn),
                                nilp && dpn.has_value(), false});

        SubspaceBasis z = center_lie(L);
        RLieSpec q = lie_quotient(L, z);
        auto qpn = q.dim == 0 ? std::optional<uint32_t>(0)
                              : p_nil_bounded(q, whole_space(L.p, q.dim));
        r.conditions.push_back({"(iv)",
                                "derived p-nil: " + opt_index(dpn) +
                                    ", center quotient p-nil: " + opt_index(qpn),
                                dpn.has_value() && qpn.has_value(), false});

        bool v2 = r.conditions[0].value, v3 = r.conditions[1].value, v4 = r.conditions[2].value;
        r.equivalent = (v2 == v3) && (v3 == v4);
    } catch (const resource_error& e) {
        r.completed = false;
        r.note += std::string("; resource limit: ") + e.what();
    }
    r.elapsed_ms = tm.ms();
    return r;
}

TheoremReport check_thm_engel(const GroupSpec& G, uint32_t p, const std::string& id) {
    Timer tm;
    TheoremReport r;
    r.theorem = "engel-group-algebra";
    r.instance = id.empty() ? "group order=" + std::to_string(G.order) + " p=" + std::to_string(p)
                            : id;
    r.note = "bounded-exponent clauses read at the full group";
    try {
        AlgebraSpec kg = build_kg(G, p);
        auto deg = engel_degree(kg, whole_space(p, kg.dim));
        r.conditions.push_back({"(ii)", "engel degree of the group algebra: " + opt_degree(deg),
                                deg.has_value(), false});

        auto cls = nilpotency_class(G);
        Subgroup der = derived_subgroup(G);
        bool derp = is_p_elements(G, der.elems, p);
        r.conditions.push_back({"(iii)",
                                "nilpotency class: " +
                                    (cls ? std::to_string(*cls) : std::string("absent")) +
                                    ", derived a p-group: " + (derp ? "true" : "false"),
                                cls.has_value() && derp, false});

        // center quotient a p-group of bounded exponent: some p-power of every
        // element lands in the center
        Subgroup z = center_group(G);
        bool quot = true;
        for (uint32_t g = 0; g < G.order; ++g) {
            uint32_t x = g;
            bool in = false;
            for (uint32_t e = 0; e <= 20 && !in; ++e) {
                if (z.contains(x)) in = true;
                uint32_t y = x;
                for (uint32_t i = 1; i < p; ++i) y = G.mul(y, x);
                x = y;
            }
            if (!in) quot = false;
        }
        r.conditions.push_back({"(iv)",
                                std::string("derived a p-group: ") + (derp ? "true" : "false") +
                                    ", center quotient a p-group: " + (quot ? "true" : "false"),
                                derp && quot, false});

        bool v2 = r.conditions[0].value, v3 = r.conditions[1].value, v4 = r.conditions[2].value;
        r.equivalent = (v2 == v3) && (v3 == v4);
    } catch (const resource_error& e) {
        r.completed = false;
        r.note += std::string("; resource limit: ") + e.what();
    }
    r.elapsed_ms = tm.ms();
    return r;
}

namespace {

// a, b in L with [a,b] = a != 0, a^[p] = 0, b^[p] = b, at p = 2.
std::optional<std::pair<FpVec, FpVec>> find_embedded_2d(const EnvAlgebra& u) {
    const RLieSpec& L = u.L;
    if (L.dim > 8) return std::nullopt;
    const uint64_t total = 1ull << L.dim;
    auto unpack = [&](uint64_t m) {
        FpVec v(L.dim, 0);
        for (size_t i = 0; i < L.dim; ++i) v[i] = (m >> i) & 1;
        return v;
    };
    for (uint64_t ma = 1; ma < total; ++ma) {
        FpVec a = unpack(ma);
        if (!vec_is_zero(lie_pmap_general(u, a))) continue;
        for (uint64_t mb = 1; mb < total; ++mb) {
            FpVec b = unpack(mb);
            if (lie_bracket(L, a, b) != a) continue;
            if (lie_pmap_general(u, b) != b) continue;
            return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

// sigma of order 2 and h of order p generating a dihedral subgroup of order 2p
std::optional<std::pair<uint32_t, uint32_t>> find_dihedral_subgroup(const GroupSpec& G,
                                                                    uint32_t p) {
    for (uint32_t s = 0; s < G.order; ++s) {
        if (element_order(G, s) != 2) continue;
        for (uint32_t h = 0; h < G.order; ++h) {
            if (element_order(G, h) != p) continue;
            if (G.mul(s, G.mul(h, s)) != G.inv(h)) continue;
            if (subgroup_closure(G, {s, h}).order() == 2 * p) return std::make_pair(s, h);
        }
    }
    return std::nullopt;
}

std::optional<uint32_t> least_sandwich(const AlgebraSpec& a, const SubspaceBasis& omega,
                                       uint32_t p, uint32_t m_bound) {
    for (uint32_t m = 1; m <= m_bound; ++m)
        if (holds_on(a, omega, sandwich_identity(m, p)).holds) return m;
    return std::nullopt;
}

} // namespace

TheoremReport check_thm_sandwich(const RLieSpec& L, uint32_t m_bound, const std::string& id) {
    Timer tm;
    TheoremReport r;
    r.theorem = "sandwich-envelope";
    r.instance = id.empty() ? "lie p=" + std::to_string(L.p) + " dim=" + std::to_string(L.dim) : id;
    r.note = "sandwich degree searched up to m=" + std::to_string(m_bound);
    try {
        EnvAlgebra u = build_u(L);
        SubspaceBasis omega = augmentation_ideal_env(u);
        auto m = least_sandwich(u.A, omega, L.p, m_bound);
        r.conditions.push_back({"(ii)",
                                "sandwich identity on the augmentation ideal: " +
                                    (m ? "least m = " + std::to_string(*m) : "none found"),
                                m.has_value(), false});
        auto deg = engel_degree(u.A, whole_space(L.p, u.A.dim));
        r.conditions.push_back({"(iv)", "engel degree of the envelope: " + opt_degree(deg),
                                deg.has_value(), false});

        if (L.p > 2) {
            r.conditions.push_back(
                {"(hypothesis)", "p > 2, equivalence asserted", true, false});
            r.equivalent = m.has_value() == deg.has_value();
        } else {
            // p = 2: sandwich forces engel or an embedded two-generator algebra
            bool dich = !m.has_value() || deg.has_value();
            std::string detail = "not needed";
            if (!dich) {
                auto emb = find_embedded_2d(u);
                if (emb) {
                    dich = true;
                    detail = "embedded copy: a = " +
                             element_to_string_raw(L.labels, emb->first) + ", b = " +
                             element_to_string_raw(L.labels, emb->second);
                } else {
                    detail = "no embedded copy found";
                }
            }
            r.conditions.push_back({"(dichotomy)", detail, dich, dich && detail != "not needed"});
            r.equivalent = dich;
        }
    } catch (const resource_error& e) {
        r.completed = false;
        r.note += std::string("; resource limit: ") + e.what();
    }
    r.elapsed_ms = tm.ms();
    return r;
}

TheoremReport check_thm_sandwich(const GroupSpec& G, uint32_t p, uint32_t m_bound,
                                 const std::string& id) {
    Timer tm;
    TheoremReport r;
    r.theorem = "sandwich-group-algebra";
    r.instance = id.empty() ? "group order=" + std::to_string(G.order) + " p=" + std::to_string(p)
                            : id;
    r.note = "sandwich degree searched up to m=" + std::to_string(m_bound);
    try {
        AlgebraSpec kg = build_kg(G, p);
        SubspaceBasis omega = augmentation_ideal_kg(kg);
        auto m = least_sandwich(kg, omega, p, m_bound);
        r.conditions.push_back({"(ii)",
                                "sandwich identity on the augmentation ideal: " +
                                    (m ? "least m = " + std::to_string(*m) : "none found"),
                                m.has_value(), false});
        auto deg = engel_degree(kg, whole_space(p, kg.dim));
        r.conditions.push_back({"(iv)", "engel degree of the group algebra: " + opt_degree(deg),
                                deg.has_value(), false});

        bool torsion2 = false;
        for (uint32_t g = 1; g < G.order; ++g)
            if (element_order(G, g) == 2) torsion2 = true;

        if (p == 2 || !torsion2) {
            r.conditions.push_back({"(hypothesis)",
                                    std::string("p = 2 or no 2-torsion, equivalence asserted"),
                                    true, false});
            r.equivalent = m.has_value() == deg.has_value();
        } else {
            bool dich = !m.has_value() || deg.has_value();
            std::string detail = "not needed";
            if (!dich) {
                auto sub = find_dihedral_subgroup(G, p);
                if (sub) {
                    dich = true;
                    detail = "dihedral subgroup of order " + std::to_string(2 * p) +
                             " generated by " + G.labels[sub->first] + " and " +
                             G.labels[sub->second];
                } else {
                    detail = "no dihedral subgroup found";
                }
            }
            r.conditions.push_back({"(dichotomy)", detail, dich, dich && detail != "not needed"});
            r.equivalent = dich;
        }

        // the torsion claim behind the dichotomy, on instances with a sandwich
        if (m) {
            uint32_t t = pow_exponent_for(p, *m);
            TorsionScan scan = torsion_scan(G, p, t);
            r.conditions.push_back({"(torsion)",
                                    "every element has its p^" + std::to_string(t + 1) +
                                        " power central or its 2p^" + std::to_string(t) +
                                        " power trivial",
                                    scan.all_covered, false});
            r.equivalent = r.equivalent && scan.all_covered;
        }
    } catch (const resource_error& e) {
        r.completed = false;
        r.note += std::string("; resource limit: ") + e.what();
    }
    r.elapsed_ms = tm.ms();
    return r;
}

FixtureReport fixture_2d() {
    FixtureReport r;
    r.name = "two-generator envelope at p=2";
    EnvAlgebra u = build_u(lie_example_d());
    const AlgebraSpec& A = u.A;
    const FpVec one{1, 0, 0, 0}, a{0, 1, 0, 0}, b{0, 0, 1, 0}, ab{0, 0, 0, 1};
    auto push = [&](const std::string& label, bool ok, const std::string& detail = "") {
        r.checks.push_back({label, ok, detail});
    };

    SubspaceBasis omega = augmentation_ideal_env(u);
    push("omega has basis {a, b, ab}",
         omega.rows == FpMat{a, b, ab} && omega.dim() == 3);

    push("[a,b] = a", fp_comm(A, a, b) == a);
    push("[a,ab] = a^2 = 0",
         vec_is_zero(fp_comm(A, a, ab)) && vec_is_zero(fp_mul(A, a, a)));
    FpVec one_plus_b_a = fp_mul(A, fp_add(A, one, b), a);
    push("[ab,b] = ab = (1+b)a", fp_comm(A, ab, b) == ab && one_plus_b_a == ab);
    push("a annihilates each commutator value on both sides",
         vec_is_zero(fp_mul(A, a, a)) && vec_is_zero(fp_mul(A, a, ab)) &&
             vec_is_zero(fp_mul(A, ab, a)));
    FpVec bab = fp_mul(A, fp_mul(A, b, a), b);
    FpVec b_1b_a = fp_mul(A, b, one_plus_b_a);
    push("bab = b(1+b)a = 2ba = 0", vec_is_zero(bab) && vec_is_zero(b_1b_a) && bab == b_1b_a);
    push("b[(1+b)a]b = 2bab = 0", vec_is_zero(fp_mul(A, b_1b_a, b)));

    auto rep = holds_on(A, omega, parse_identity("wxyz - wyxz", 2), CheckMode::basis_multilinear);
    push("wxyz - wyxz vanishes on all basis substitutions", rep.holds,
         rep.summary);
    return r;
}

FixtureReport fixture_dihedral() {
    FixtureReport r;
    r.name = "dihedral group algebra at p=3";
    GroupSpec g = group_dihedral(6);
    AlgebraSpec kg = build_kg(g, 3);
    FpRing F(3);
    auto push = [&](const std::string& label, bool ok, const std::string& detail = "") {
        r.checks.push_back({label, ok, detail});
    };

    // basis order: 1, b, b^2, a, ab, ab^2
    const FpVec one{1, 0, 0, 0, 0, 0}, rb{0, 1, 0, 0, 0, 0}, rb2{0, 0, 1, 0, 0, 0},
        ra{0, 0, 0, 1, 0, 0};
    FpVec e = alg_scale(F, F.inv(F.from_int(2)), fp_sub(kg, one, ra));
    FpVec d = fp_sub(kg, rb, rb2);
    FpVec d2 = fp_mul(kg, d, d);
    FpVec ed = fp_mul(kg, e, d);
    FpVec ed2 = fp_mul(kg, e, d2);

    push("e = (1-a)/2 and d = b - b^-1 constructed", e == FpVec{2, 0, 0, 1, 0, 0} &&
                                                        d == FpVec{0, 1, 2, 0, 0, 0});
    push("e^2 = e", fp_mul(kg, e, e) == e);
    push("d^3 = 0", vec_is_zero(fp_mul(kg, d2, d)) && !vec_is_zero(d2));
    bool central = true;
    for (size_t i = 0; i < 6; ++i) {
        FpVec basis(6, 0);
        basis[i] = 1;
        if (!vec_is_zero(fp_comm(kg, d2, basis))) central = false;
    }
    push("d^2 is central", central);
    push("ed = d(1-e)", ed == fp_mul(kg, d, fp_sub(kg, one, e)));

    SubspaceBasis omega = augmentation_ideal_kg(kg);
    SubspaceBasis span5 = span_of(3, 6, {e, d2, ed2, d, ed});
    push("{e, d^2, ed^2, d, ed} is a basis of the augmentation ideal",
         span5.dim() == 5 && span5 == omega);

    SubspaceBasis r0 = span_of(3, 6, {e, d2, ed2});
    SubspaceBasis r1 = span_of(3, 6, {d, ed});
    push("R0 + R1 is a direct sum decomposition",
         r0.dim() == 3 && r1.dim() == 2 && subspace_sum(r0, r1) == omega);
    push("superalgebra grading: R0R0<=R0, R0R1<=R1, R1R0<=R1, R1R1<=R0",
         subspace_contained(subspace_product(kg, r0, r0), r0) &&
             subspace_contained(subspace_product(kg, r0, r1), r1) &&
             subspace_contained(subspace_product(kg, r1, r0), r1) &&
             subspace_contained(subspace_product(kg, r1, r1), r0));

    bool r0_comm = true;
    for (const FpVec& x : {e, d2, ed2})
        for (const FpVec& y : {e, d2, ed2})
            if (!vec_is_zero(fp_comm(kg, x, y))) r0_comm = false;
    push("R0 is commutative", r0_comm);

    bool r1_cubes = true;
    for (const FpVec& x : {d, ed})
        for (const FpVec& y : {d, ed})
            for (const FpVec& z : {d, ed})
                if (!vec_is_zero(fp_mul(kg, fp_mul(kg, x, y), z))) r1_cubes = false;
    push("(R1)^3 = 0 on all basis triples",
         r1_cubes && subspace_product(kg, subspace_product(kg, r1, r1), r1).dim() == 0);

    bool sandwich_zero = true;
    for (const FpVec& x : {e, d2, ed2})
        for (const FpVec& y : {d, ed})
            for (const FpVec& z : {e, d2, ed2})
                if (!vec_is_zero(fp_mul(kg, fp_mul(kg, x, y), z))) sandwich_zero = false;
    push("R0R1R0 = 0 on all basis triples", sandwich_zero);

    bool kills = vec_is_zero(fp_mul(kg, d2, d2)) && vec_is_zero(fp_mul(kg, d2, ed2)) &&
                 vec_is_zero(fp_mul(kg, d2, d)) && vec_is_zero(fp_mul(kg, d2, ed));
    push("d^2 kills all basis elements except e", kills && fp_mul(kg, d2, e) == ed2 &&
                                                      !vec_is_zero(ed2));

    auto rep = holds_on(kg, omega, sandwich_identity(1, 3), CheckMode::generic);
    push("yxy^2 - y^2xy vanishes on the augmentation ideal", rep.holds, rep.summary);
    return r;
}

InstanceCatalog standard_catalog() {
    InstanceCatalog c;
    c.lie.push_back({"example-2d", lie_example_d(), true, false});
    c.lie.push_back({"heisenberg-p2", lie_heisenberg(2), true, true});
    c.lie.push_back({"heisenberg-p3", lie_heisenberg(3), true, true});
    c.lie.push_back({"sl2-p3", lie_sl2(3), false, false});
    c.lie.push_back({"abelian-null-p3", lie_abelian(3, 2, FpMat{{0, 0}, {0, 0}}), true, true});
    c.lie.push_back({"torus-p2", lie_abelian(2, 1, FpMat{{1}}), true, true});
    c.lie.push_back({"example-2d-plus-torus",
                     lie_direct_sum(lie_example_d(), lie_abelian(2, 1, FpMat{{1}})), true, false});

    c.groups.push_back({"cyclic4-p2", group_cyclic(4), 2, true, true});
    c.groups.push_back({"cyclic6-p3", group_cyclic(6), 3, true, true});
    c.groups.push_back(
        {"klein-p2", group_direct_product(group_cyclic(2), group_cyclic(2)), 2, true, true});
    c.groups.push_back({"dihedral6-p3", group_dihedral(6), 3, true, false});
    c.groups.push_back({"dihedral6-p5", group_dihedral(6), 5, false, false});
    c.groups.push_back({"dihedral8-p2", group_dihedral(8), 2, true, true});
    c.groups.push_back({"quaternion-p2", group_quaternion(), 2, true, true});

    for (const auto& inst : c.lie)
        if (!validate_rlie(inst.L).ok())
            throw usage_error("standard_catalog: invalid instance " + inst.id);
    return c;
}

std::vector<TheoremReport> run_catalog(const InstanceCatalog& c) {
    std::vector<std::function<TheoremReport()>> tasks;
    for (const auto& inst : c.lie) {
        tasks.push_back([&inst] { return check_thm_nonmatrix_L(inst.L, inst.id); });
        tasks.push_back([&inst] { return check_thm_engel(inst.L, inst.id); });
        tasks.push_back([&inst] { return check_thm_sandwich(inst.L, 3, inst.id); });
    }
    for (const auto& inst : c.groups) {
        tasks.push_back([&inst] { return check_thm_nonmatrix_G(inst.G, inst.p, inst.id); });
        tasks.push_back([&inst] { return check_thm_engel(inst.G, inst.p, inst.id); });
        tasks.push_back([&inst] { return check_thm_sandwich(inst.G, inst.p, 3, inst.id); });
    }

    std::vector<TheoremReport> results(tasks.size());
    const size_t workers = std::min(thread_count(), tasks.size());
    if (workers <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                results[i] = tasks[i]();
        });
    for (auto& th : pool) th.join();
    return results;
}

} // namespace pialg
