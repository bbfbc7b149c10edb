#include "pialg/identity.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "pialg/errors.hpp"
#include "pialg/fq.hpp"
#include "pialg/poly.hpp"
#include "pialg/rng.hpp"

namespace pialg {

namespace {

constexpr size_t kTermListLimit = 1u << 20;

// (degree, then word read through the variable names)
bool term_less(const std::vector<char>& names, const IdTerm& s, const IdTerm& t) {
    if (s.word.size() != t.word.size()) return s.word.size() < t.word.size();
    for (size_t i = 0; i < s.word.size(); ++i) {
        char a = names[s.word[i]], b = names[t.word[i]];
        if (a != b) return a < b;
    }
    return false;
}

// Non-canonical working form used by the constructors and the parser.
using TermList = std::vector<IdTerm>;

TermList tl_combine(const TermList& a, uint32_t p) {
    std::map<std::vector<uint8_t>, uint32_t> m;
    for (const auto& t : a) m[t.word] = (m[t.word] + t.coeff) % p;
    TermList r;
    for (auto& [w, c] : m)
        if (c) r.push_back({c, w});
    return r;
}

TermList tl_mul(const TermList& a, const TermList& b, uint32_t p) {
    if (a.size() * b.size() > kTermListLimit)
        throw resource_error("identity expansion exceeds the term limit");
    TermList r;
    r.reserve(a.size() * b.size());
    for (const auto& s : a)
        for (const auto& t : b) {
            uint32_t c = static_cast<uint32_t>(uint64_t(s.coeff) * t.coeff % p);
            if (!c) continue;
            IdTerm u;
            u.coeff = c;
            u.word = s.word;
            u.word.insert(u.word.end(), t.word.begin(), t.word.end());
            r.push_back(std::move(u));
        }
    return tl_combine(r, p);
}

TermList tl_scale(const TermList& a, uint32_t c, uint32_t p) {
    c %= p;
    TermList r;
    for (const auto& t : a) {
        uint32_t d = static_cast<uint32_t>(uint64_t(t.coeff) * c % p);
        if (d) r.push_back({d, t.word});
    }
    return r;
}

TermList tl_add(const TermList& a, const TermList& b, uint32_t p) {
    TermList r = a;
    r.insert(r.end(), b.begin(), b.end());
    return tl_combine(r, p);
}

TermList tl_sub(const TermList& a, const TermList& b, uint32_t p) {
    return tl_add(a, tl_scale(b, p - 1, p), p);
}

TermList tl_commutator(const TermList& a, const TermList& b, uint32_t p) {
    return tl_sub(tl_mul(a, b, p), tl_mul(b, a, p), p);
}

TermList tl_pow(const TermList& a, uint64_t e, uint32_t p) {
    TermList r = a;
    for (uint64_t i = 1; i < e; ++i) r = tl_mul(r, a, p);
    return r;
}

TermList tl_var(uint8_t v) { return {{1, {v}}}; }

uint64_t ipow_sat(uint64_t b, uint64_t e, uint64_t cap) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (r > cap / (b ? b : 1)) return cap + 1;
        r *= b;
    }
    return r;
}

} // namespace

uint32_t Identity::degree() const {
    size_t d = 0;
    for (const auto& t : terms) d = std::max(d, t.word.size());
    return static_cast<uint32_t>(d);
}

Identity make_identity_terms(uint32_t p, std::vector<char> names, std::vector<IdTerm> terms,
                             std::string tag) {
    if (!is_prime_u32(p)) throw usage_error("identity: modulus is not prime");
    if (names.size() > 26) throw usage_error("identity: more than 26 variables");
    {
        std::vector<char> s = names;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw usage_error("identity: duplicate variable name");
        for (char c : s)
            if (c < 'a' || c > 'z') throw usage_error("identity: variable names are a-z");
    }
    for (auto& t : terms) {
        if (t.word.empty()) throw usage_error("identity: empty word");
        for (uint8_t v : t.word)
            if (v >= names.size()) throw usage_error("identity: variable index out of range");
    }
    TermList out = tl_combine(terms, p);
    if (out.empty()) throw usage_error("identity: all terms cancel");
    std::sort(out.begin(), out.end(),
              [&](const IdTerm& s, const IdTerm& t) { return term_less(names, s, t); });

    // relabel indices by first appearance; unused variables drop out
    std::vector<int> newidx(names.size(), -1);
    std::vector<char> newnames;
    for (const auto& t : out)
        for (uint8_t v : t.word)
            if (newidx[v] < 0) {
                newidx[v] = static_cast<int>(newnames.size());
                newnames.push_back(names[v]);
            }
    for (auto& t : out)
        for (auto& v : t.word) v = static_cast<uint8_t>(newidx[v]);

    Identity f;
    f.p = p;
    f.varnames = std::move(newnames);
    f.terms = std::move(out);
    f.tag = std::move(tag);
    return f;
}

Identity engel_identity(uint32_t m, uint32_t p) {
    if (m < 1) throw usage_error("engel: m >= 1 required");
    if (m > 200) throw resource_error("engel: m too large");
    TermList e = tl_var(0);
    for (uint32_t i = 0; i < m; ++i) e = tl_commutator(e, tl_var(1), p);
    return make_identity_terms(p, {'x', 'y'}, e, "engel(" + std::to_string(m) + ")");
}

Identity sandwich_identity(uint32_t m, uint32_t p) {
    if (m < 1) throw usage_error("sandwich: m >= 1 required");
    if (m > 80) throw resource_error("sandwich: m too large");
    TermList e = tl_var(0);
    for (uint32_t i = 0; i < m; ++i) e = tl_commutator(e, tl_var(1), p);
    TermList ym{{1, std::vector<uint8_t>(m, 1)}};
    TermList s = tl_mul(tl_mul(ym, e, p), ym, p);
    return make_identity_terms(p, {'x', 'y'}, s, "sandwich(" + std::to_string(m) + ")");
}

Identity semigroup_identity(const std::string& w1, const std::string& w2, uint32_t p) {
    std::vector<char> names;
    int idx[26];
    std::fill(std::begin(idx), std::end(idx), -1);
    auto word_of = [&](const std::string& w) {
        std::vector<uint8_t> out;
        size_t i = 0;
        while (i < w.size()) {
            char c = w[i];
            if (c < 'a' || c > 'z')
                throw usage_error("semigroup: words are letters a-z with optional ^n");
            if (idx[c - 'a'] < 0) {
                idx[c - 'a'] = static_cast<int>(names.size());
                names.push_back(c);
            }
            ++i;
            uint64_t e = 1;
            if (i < w.size() && w[i] == '^') {
                ++i;
                if (i >= w.size() || !isdigit(static_cast<unsigned char>(w[i])))
                    throw usage_error("semigroup: '^' needs an exponent");
                e = 0;
                while (i < w.size() && isdigit(static_cast<unsigned char>(w[i])))
                    e = e * 10 + (w[i++] - '0');
                if (e == 0 || e > 1024) throw usage_error("semigroup: exponent out of range");
            }
            out.insert(out.end(), e, static_cast<uint8_t>(idx[c - 'a']));
        }
        if (out.empty()) throw usage_error("semigroup: empty word");
        return out;
    };
    std::vector<uint8_t> a = word_of(w1), b = word_of(w2);
    if (a == b) throw usage_error("semigroup: the two words coincide");
    if (!is_prime_u32(p)) throw usage_error("identity: modulus is not prime");
    return make_identity_terms(p, names, {{1, a}, {p - 1, b}}, "semigroup");
}

Identity power_commutator_identity(uint32_t t, uint32_t p) {
    if (!is_prime_u32(p)) throw usage_error("identity: modulus is not prime");
    uint64_t e = ipow_sat(p, t, 16);
    if (e > 16) throw resource_error("power_commutator: p^t too large");
    TermList base = tl_mul(tl_commutator(tl_var(0), tl_var(1), p), tl_var(2), p);
    return make_identity_terms(p, {'x', 'y', 'z'}, tl_pow(base, e, p),
                               "power_commutator(" + std::to_string(t) + ")");
}

Identity power_diff_identity(uint64_t k, uint64_t l, uint32_t p) {
    if (k < 1 || l < 1) throw usage_error("power_diff: exponents must be positive");
    if (k == l) throw usage_error("power_diff: exponents coincide");
    if (k > 65536 || l > 65536) throw resource_error("power_diff: exponent too large");
    if (!is_prime_u32(p)) throw usage_error("identity: modulus is not prime");
    IdTerm a{1, std::vector<uint8_t>(k, 0)};
    IdTerm b{p - 1, std::vector<uint8_t>(l, 0)};
    return make_identity_terms(p, {'x'}, {a, b},
                               "power_diff(" + std::to_string(k) + "," + std::to_string(l) + ")");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct IdParser {
    const std::string& s;
    uint32_t p;
    size_t i = 0;
    std::vector<char> names;
    int idx[26];

    explicit IdParser(const std::string& text, uint32_t p_) : s(text), p(p_) {
        std::fill(std::begin(idx), std::end(idx), -1);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw usage_error("identity parse error at position " + std::to_string(i) + ": " + msg);
    }
    void skip() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool at(char c) const { return i < s.size() && s[i] == c; }
    bool at_letter() const { return i < s.size() && s[i] >= 'a' && s[i] <= 'z'; }
    bool at_digit() const { return i < s.size() && isdigit(static_cast<unsigned char>(s[i])); }

    uint64_t integer() {
        if (!at_digit()) fail("expected a number");
        uint64_t v = 0;
        while (at_digit()) {
            v = v * 10 + (s[i++] - '0');
            if (v > 1000000000) fail("number too large");
        }
        return v;
    }

    uint8_t var(char c) {
        if (idx[c - 'a'] < 0) {
            if (names.size() >= 26) fail("too many variables");
            idx[c - 'a'] = static_cast<int>(names.size());
            names.push_back(c);
        }
        return static_cast<uint8_t>(idx[c - 'a']);
    }

    TermList primary() {
        skip();
        if (at_letter()) {
            uint8_t v = var(s[i]);
            ++i;
            return tl_var(v);
        }
        if (at('[')) {
            ++i;
            std::vector<TermList> parts;
            parts.push_back(word());
            skip();
            while (at(',')) {
                ++i;
                parts.push_back(word());
                skip();
            }
            if (!at(']')) fail("expected ']'");
            ++i;
            if (parts.size() < 2) fail("commutator needs at least two components");
            TermList r = parts[0];
            for (size_t j = 1; j < parts.size(); ++j) r = tl_commutator(r, parts[j], p);
            return r;
        }
        fail("expected a variable or '['");
    }

    TermList factor() {
        TermList b = primary();
        skip();
        if (at('^')) {
            ++i;
            uint64_t e = integer();
            if (e == 0) fail("exponent must be positive");
            if (e > 65536) fail("exponent too large");
            return tl_pow(b, e, p);
        }
        return b;
    }

    // factor+ with no leading coefficient (commutator components)
    TermList word() {
        skip();
        if (!at_letter() && !at('[')) fail("expected a variable or '['");
        TermList cur = factor();
        skip();
        while (at_letter() || at('[')) {
            cur = tl_mul(cur, factor(), p);
            skip();
        }
        return cur;
    }

    TermList term() {
        skip();
        uint32_t coeff = 1;
        if (at_digit()) coeff = static_cast<uint32_t>(integer() % p);
        TermList t = word();
        return coeff == 1 ? t : tl_scale(t, coeff, p);
    }

    TermList expr() {
        TermList acc;
        skip();
        int sign = 1;
        if (at('+') || at('-')) {
            sign = at('-') ? -1 : 1;
            ++i;
        }
        while (true) {
            TermList t = term();
            acc = sign < 0 ? tl_sub(acc, t, p) : tl_add(acc, t, p);
            skip();
            if (at('+') || at('-')) {
                sign = at('-') ? -1 : 1;
                ++i;
                continue;
            }
            break;
        }
        return acc;
    }

    TermList run() {
        TermList lhs = expr();
        skip();
        if (at('=')) {
            ++i;
            TermList rhs = expr();
            lhs = tl_sub(lhs, rhs, p);
            skip();
        }
        if (i != s.size()) fail("unexpected character");
        return lhs;
    }
};

} // namespace

Identity parse_identity(const std::string& text, uint32_t p) {
    if (!is_prime_u32(p)) throw usage_error("identity: modulus is not prime");
    IdParser ps(text, p);
    TermList t = ps.run();
    return make_identity_terms(p, ps.names, t, "parse");
}

std::string identity_to_string(const Identity& f) {
    std::string s;
    for (size_t n = 0; n < f.terms.size(); ++n) {
        const IdTerm& t = f.terms[n];
        const bool neg = (f.p > 2 && t.coeff == f.p - 1);
        if (n == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (!neg && t.coeff != 1) s += std::to_string(t.coeff);
        size_t i = 0;
        while (i < t.word.size()) {
            size_t j = i;
            while (j < t.word.size() && t.word[j] == t.word[i]) ++j;
            s += f.varnames[t.word[i]];
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
    }
    return s;
}

bool is_multilinear(const Identity& f) {
    const size_t n = f.nvars();
    for (const auto& t : f.terms) {
        if (t.word.size() != n) return false;
        std::vector<uint32_t> cnt(n, 0);
        for (uint8_t v : t.word) ++cnt[v];
        for (uint32_t c : cnt)
            if (c != 1) return false;
    }
    return true;
}

std::vector<Identity> multihomogeneous_components(const Identity& f) {
    std::vector<std::pair<std::vector<uint32_t>, TermList>> comps;
    for (const auto& t : f.terms) {
        std::vector<uint32_t> deg(f.nvars(), 0);
        for (uint8_t v : t.word) ++deg[v];
        auto it = std::find_if(comps.begin(), comps.end(),
                               [&](const auto& c) { return c.first == deg; });
        if (it == comps.end()) {
            comps.push_back({deg, {t}});
        } else {
            it->second.push_back(t);
        }
    }
    std::vector<Identity> out;
    for (auto& [deg, terms] : comps)
        out.push_back(make_identity_terms(f.p, f.varnames, terms, f.tag));
    return out;
}

bool identity_equivalent(const Identity& f, const Identity& g) {
    if (f.p != g.p || f.nvars() != g.nvars() || f.terms.size() != g.terms.size()) return false;
    const size_t n = f.nvars();
    if (n > 8) throw resource_error("identity_equivalent: renaming orbit too large");

    auto key = [](const std::vector<IdTerm>& ts) {
        std::vector<std::pair<std::vector<uint8_t>, uint32_t>> k;
        for (const auto& t : ts) k.push_back({t.word, t.coeff});
        std::sort(k.begin(), k.end());
        return k;
    };
    const auto gk = key(g.terms);

    std::vector<uint8_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<uint8_t>(i);
    do {
        std::vector<IdTerm> mapped = f.terms;
        for (auto& t : mapped)
            for (auto& v : t.word) v = perm[v];
        if (key(mapped) == gk) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// One full substitution: per variable, ambient coordinates over the ring.
// skip_len > 0 drops words of at least that length (sound when the domain's
// products of skip_len factors vanish).
template <class Ring>
std::vector<typename Ring::Elem> eval_identity(const AlgebraSpec& a, const Ring& r,
                                               const Identity& f,
                                               const std::vector<std::vector<typename Ring::Elem>>& sub,
                                               uint32_t skip_len) {
    auto acc = alg_zero(a, r);
    for (const auto& t : f.terms) {
        if (skip_len && t.word.size() >= skip_len) continue;
        auto cur = sub[t.word[0]];
        for (size_t i = 1; i < t.word.size() && !alg_is_zero(r, cur); ++i)
            cur = alg_mul(a, r, cur, sub[t.word[i]]);
        if (alg_is_zero(r, cur)) continue;
        acc = alg_add(r, acc, alg_scale(r, r.from_int(static_cast<int64_t>(t.coeff)), cur));
    }
    return acc;
}

FqRing make_field(uint32_t p, uint32_t k) {
    if (k == 1 && p > kFqMaxPrime) return FqRing(p, 1, upoly::UPoly{0, 1});
    return FqRing(p, k);
}

// Smallest k (up to 6) with p^k >= 32 and p^k > degree; primes beyond the
// modulus table stay at k = 1.
uint32_t pick_ext_degree(uint32_t p, uint32_t degree) {
    if (p > kFqMaxPrime) return 1;
    uint64_t q = 1;
    uint32_t k = 0;
    while (k < kFqMaxDegree && (q < 32 || q <= degree)) {
        q *= p;
        ++k;
    }
    return std::max<uint32_t>(k, 1);
}

FqRing::Elem random_fq(const FqRing& F, std::mt19937_64& rng) {
    FqRing::Elem e{};
    for (uint32_t d = 0; d < F.k; ++d) e[d] = static_cast<uint32_t>(rng() % F.p());
    return e;
}

// Per variable, a random combination of the domain rows.
std::vector<std::vector<FqRing::Elem>> random_substitution(const AlgebraSpec& a,
                                                           const SubspaceBasis& domain,
                                                           const FqRing& F, size_t nvars,
                                                           std::mt19937_64& rng) {
    std::vector<std::vector<FqRing::Elem>> sub(nvars);
    for (size_t v = 0; v < nvars; ++v) {
        std::vector<FqRing::Elem> x(a.dim, F.zero());
        for (const auto& row : domain.rows) {
            FqRing::Elem c = random_fq(F, rng);
            for (size_t j = 0; j < a.dim; ++j)
                x[j] = F.add(x[j], F.mul(c, F.from_int(row[j])));
        }
        sub[v] = x;
    }
    return sub;
}

// x_v = sum_j t_{v*D+j} d_j
std::vector<std::vector<Poly>> generic_substitution(const AlgebraSpec& a,
                                                    const SubspaceBasis& domain,
                                                    const PolyRing& R, size_t nvars) {
    const size_t D = domain.rows.size();
    std::vector<std::vector<Poly>> sub(nvars);
    for (size_t v = 0; v < nvars; ++v) {
        std::vector<Poly> x(a.dim, R.zero());
        for (size_t j = 0; j < D; ++j)
            for (size_t c = 0; c < a.dim; ++c)
                if (domain.rows[j][c])
                    x[c] = poly_add(x[c], Poly::variable(R.p, R.nvars,
                                                         static_cast<uint32_t>(v * D + j),
                                                         domain.rows[j][c]));
        sub[v] = x;
    }
    return sub;
}

void dense_mul(const AlgebraSpec& a, FpVec& out, const FpVec& x, const FpVec& y) {
    std::fill(out.begin(), out.end(), 0u);
    for (size_t i = 0; i < a.dim; ++i) {
        if (!x[i]) continue;
        for (size_t j = 0; j < a.dim; ++j) {
            if (!y[j]) continue;
            const uint64_t c = uint64_t(x[i]) * y[j] % a.p;
            if (!c) continue;
            for (const auto& [k, ck] : a.entry(i, j))
                out[k] = static_cast<uint32_t>((out[k] + c * ck) % a.p);
        }
    }
}

// Per-term DFS over basis assignments in word order, accumulating each
// tuple's value; shared prefixes are multiplied once and zero prefixes prune
// whole subtrees.  Only sound for multilinear identities.
struct MultilinearAccum {
    const AlgebraSpec& a;
    const SubspaceBasis& domain;
    const size_t nv;
    const size_t D;
    std::vector<uint8_t> acc;       // tuple-major, a.dim coordinates each
    std::vector<FpVec> buf;         // partial product per depth
    std::vector<size_t> choice;     // variable -> row index
    const std::vector<uint8_t>* word = nullptr;
    uint32_t coeff = 0;

    MultilinearAccum(const AlgebraSpec& a_, const SubspaceBasis& d_, size_t nv_)
        : a(a_), domain(d_), nv(nv_), D(d_.rows.size()) {
        uint64_t tuples = ipow_sat(D, nv, 1u << 24);
        if (tuples > (1u << 24) || tuples * a.dim > 140000000)
            throw resource_error("basis_multilinear: tuple space too large");
        acc.assign(static_cast<size_t>(tuples) * a.dim, 0);
        buf.assign(nv + 1, FpVec(a.dim, 0));
        choice.assign(nv, 0);
    }

    size_t code_of() const {
        size_t code = 0, mult = 1;
        for (size_t v = 0; v < nv; ++v) {
            code += choice[v] * mult;
            mult *= D;
        }
        return code;
    }

    void walk(size_t pos) {
        if (pos == word->size()) {
            const FpVec& val = buf[pos];
            uint8_t* slot = &acc[code_of() * a.dim];
            for (size_t c = 0; c < a.dim; ++c)
                slot[c] = static_cast<uint8_t>((slot[c] + uint64_t(coeff) * val[c]) % a.p);
            return;
        }
        const uint8_t v = (*word)[pos];
        for (size_t r = 0; r < D; ++r) {
            choice[v] = r;
            if (pos == 0)
                buf[1] = domain.rows[r];
            else
                dense_mul(a, buf[pos + 1], buf[pos], domain.rows[r]);
            if (!vec_is_zero(buf[pos + 1])) walk(pos + 1);
        }
    }

    void add_term(const IdTerm& t) {
        word = &t.word;
        coeff = t.coeff;
        walk(0);
    }
};

std::vector<FqRing::Elem> lift_row(const FqRing& F, const FpVec& row) {
    std::vector<FqRing::Elem> x(row.size());
    for (size_t i = 0; i < row.size(); ++i) x[i] = F.from_int(row[i]);
    return x;
}

void verify_witness(const AlgebraSpec& a, const Identity& f, const CheckReport& rep) {
    FqRing F = make_field(a.p, rep.witness_k);
    auto v = eval_identity(a, F, f, rep.witness, 0);
    if (alg_is_zero(F, v)) throw std::logic_error("holds_on: witness failed re-evaluation");
}

} // namespace

CheckReport holds_on(const AlgebraSpec& a, const SubspaceBasis& domain, const Identity& f,
                     CheckMode mode, uint64_t seed) {
    if (domain.p != a.p || domain.ambient_dim != a.dim)
        throw usage_error("holds_on: domain does not match the algebra");
    if (f.p != a.p) throw usage_error("holds_on: identity modulus differs from the algebra");
    if (!check_mul_closed(a, domain))
        throw usage_error("holds_on: domain is not closed under multiplication");
    if (mode == CheckMode::basis_multilinear && !is_multilinear(f))
        throw usage_error("holds_on: basis_multilinear mode requires a multilinear identity");

    const size_t nv = f.nvars();
    const size_t D = domain.dim();

    CheckMode resolved = mode;
    if (mode == CheckMode::automatic)
        resolved = (is_multilinear(f) && ipow_sat(D, nv, 4096) <= 4096)
                       ? CheckMode::basis_multilinear
                       : CheckMode::prefilter_generic;
    const char* mode_name = resolved == CheckMode::basis_multilinear ? "basis_multilinear"
                            : resolved == CheckMode::generic         ? "generic"
                                                                     : "prefilter+generic";

    CheckReport rep;
    rep.p = a.p;
    rep.mode_used = mode_name;

    if (D == 0) {
        rep.holds = true;
        rep.summary = "domain is zero";
        return rep;
    }

    uint32_t skip = 0;
    if (auto c = nilpotency_index(a, domain)) skip = *c;

    if (resolved == CheckMode::basis_multilinear) {
        MultilinearAccum ml(a, domain, nv);
        for (const auto& t : f.terms) ml.add_term(t);
        const size_t tuples = ml.acc.size() / a.dim;
        for (size_t code = 0; code < tuples; ++code) {
            bool nonzero = false;
            for (size_t c = 0; c < a.dim; ++c)
                if (ml.acc[code * a.dim + c]) nonzero = true;
            if (!nonzero) continue;
            FqRing F = make_field(a.p, 1);
            rep.holds = false;
            rep.witness_k = 1;
            size_t rem = code;
            for (size_t v = 0; v < nv; ++v) {
                rep.witness.push_back(lift_row(F, domain.rows[rem % D]));
                rem /= D;
            }
            rep.summary = "a basis substitution evaluates to a nonzero element";
            verify_witness(a, f, rep);
            return rep;
        }
        rep.holds = true;
        rep.summary = "all " + std::to_string(tuples) + " basis substitutions vanish";
        return rep;
    }

    const uint32_t k = pick_ext_degree(a.p, f.degree());
    FqRing F = make_field(a.p, k);
    auto rng = seeded_rng(seed, "holds_on");

    if (resolved == CheckMode::prefilter_generic) {
        for (int trial = 0; trial < 24; ++trial) {
            auto sub = random_substitution(a, domain, F, nv, rng);
            auto v = eval_identity(a, F, f, sub, skip);
            if (!alg_is_zero(F, v)) {
                rep.holds = false;
                rep.witness_k = k;
                rep.witness = std::move(sub);
                rep.summary = "substitution over GF(" + std::to_string(a.p) + "^" +
                              std::to_string(k) + ") evaluates to a nonzero element";
                verify_witness(a, f, rep);
                return rep;
            }
        }
    }

    if (nv * D > indeterminate_budget())
        throw resource_error("holds_on: generic substitution needs " + std::to_string(nv * D) +
                             " indeterminates, budget is " +
                             std::to_string(indeterminate_budget()));
    PolyRing R(a.p, static_cast<uint32_t>(nv * D));
    auto gsub = generic_substitution(a, domain, R, nv);
    auto gval = eval_identity(a, R, f, gsub, skip);
    if (alg_is_zero(R, gval)) {
        rep.holds = true;
        rep.summary = resolved == CheckMode::prefilter_generic
                          ? "24 random substitutions and the generic substitution vanish"
                          : "generic substitution vanishes identically";
        return rep;
    }

    for (int trial = 0; trial < 400; ++trial) {
        auto sub = random_substitution(a, domain, F, nv, rng);
        auto v = eval_identity(a, F, f, sub, skip);
        if (!alg_is_zero(F, v)) {
            rep.holds = false;
            rep.witness_k = k;
            rep.witness = std::move(sub);
            rep.summary = "substitution over GF(" + std::to_string(a.p) + "^" +
                          std::to_string(k) + ") evaluates to a nonzero element";
            verify_witness(a, f, rep);
            return rep;
        }
    }
    throw resource_error("holds_on: generic value is nonzero but no concrete witness found");
}

bool is_nonmatrix(const Identity& f, uint32_t p) {
    if (f.p != p) throw usage_error("is_nonmatrix: modulus mismatch");
    AlgebraSpec a = m2_algebra(p);
    // same verdict as pure generic: a concrete refutation short-circuits,
    // a holds verdict still requires the generic substitution to vanish
    return !holds_on(a, whole_space(p, 4), f, CheckMode::prefilter_generic).holds;
}

std::optional<uint32_t> engel_degree(const AlgebraSpec& a, const SubspaceBasis& domain,
                                     uint64_t seed) {
    if (domain.p != a.p || domain.ambient_dim != a.dim)
        throw usage_error("engel_degree: domain does not match the algebra");
    if (!check_mul_closed(a, domain))
        throw usage_error("engel_degree: domain is not closed under multiplication");
    const size_t D = domain.dim();

    const uint32_t k = pick_ext_degree(a.p, 0);
    FqRing F = make_field(a.p, k);
    auto rng = seeded_rng(seed, "engel_degree");

    // pool entries: (current left-normed value, fixed y)
    std::vector<std::pair<std::vector<FqRing::Elem>, std::vector<FqRing::Elem>>> pool;
    for (size_t i = 0; i < D; ++i)
        for (size_t j = 0; j < D; ++j)
            pool.push_back({lift_row(F, domain.rows[i]), lift_row(F, domain.rows[j])});
    for (int r = 0; r < 8; ++r) {
        auto sub = random_substitution(a, domain, F, 2, rng);
        pool.push_back({sub[0], sub[1]});
    }

    std::optional<PolyRing> R;
    std::vector<std::vector<Poly>> cols;
    std::vector<std::vector<Poly>> gy;
    uint32_t col_level = 0;

    for (uint32_t m = 1; m <= D; ++m) {
        bool refuted = false;
        for (auto& [cur, y] : pool) {
            cur = alg_commutator(a, F, cur, y);
            if (!alg_is_zero(F, cur)) refuted = true;
        }
        if (refuted) continue;

        if (!R) {
            if (D > indeterminate_budget())
                throw resource_error("engel_degree: domain dimension exceeds the indeterminate budget");
            R.emplace(a.p, static_cast<uint32_t>(D));
            gy = generic_substitution(a, domain, *R, 1);
            for (size_t j = 0; j < D; ++j) cols.push_back(alg_lift(a, *R, domain.rows[j]));
        }
        while (col_level < m) {
            for (auto& col : cols) col = alg_commutator(a, *R, col, gy[0]);
            ++col_level;
        }
        bool all_zero = true;
        for (const auto& col : cols)
            if (!alg_is_zero(*R, col)) all_zero = false;
        if (all_zero) return m;
    }
    return std::nullopt;
}

Identity hull_transform(const Identity& f) {
    const size_t n = f.nvars();
    if (3 * n > 26) throw usage_error("hull_transform: needs 3n distinct letters");

    std::vector<char> names = f.varnames;
    std::vector<bool> used(26, false);
    for (char c : names) used[c - 'a'] = true;
    std::vector<uint8_t> ysub(n), zsub(n);
    char next = 'a';
    auto fresh = [&]() {
        while (used[next - 'a']) ++next;
        used[next - 'a'] = true;
        names.push_back(next);
        return static_cast<uint8_t>(names.size() - 1);
    };
    for (size_t v = 0; v < n; ++v) {
        ysub[v] = fresh();
        zsub[v] = fresh();
    }

    // x -> [x, y_x] z_x = x y_x z_x - y_x x z_x
    std::vector<TermList> image(n);
    for (size_t v = 0; v < n; ++v) {
        uint8_t x = static_cast<uint8_t>(v), y = ysub[v], z = zsub[v];
        image[v] = {{1, {x, y, z}}, {f.p - 1, {y, x, z}}};
    }

    TermList out;
    for (const auto& t : f.terms) {
        TermList w{{t.coeff, {}}};
        for (uint8_t v : t.word) w = tl_mul(w, image[v], f.p);
        out = tl_add(out, w, f.p);
    }
    return make_identity_terms(f.p, names, out, "hull(" + f.tag + ")");
}

std::vector<Identity> semigroup_search(const AlgebraSpec& a, const SubspaceBasis& domain,
                                       uint32_t max_degree, uint32_t max_vars) {
    if (domain.p != a.p || domain.ambient_dim != a.dim)
        throw usage_error("semigroup_search: domain does not match the algebra");
    if (!check_mul_closed(a, domain))
        throw usage_error("semigroup_search: domain is not closed under multiplication");
    if (max_degree < 2 || max_degree > 6 || max_vars < 1 || max_vars > 4)
        throw usage_error("semigroup_search: supported bounds are degree 2..6, variables 1..4");

    const size_t D = domain.dim();
    uint32_t skip = 0;
    if (auto c = nilpotency_index(a, domain)) skip = *c;

    std::set<std::pair<std::vector<uint8_t>, std::vector<uint8_t>>> seen;
    std::vector<Identity> out;

    // Canonical key of an unordered pair under simultaneous renaming.
    auto pair_key = [](std::vector<uint8_t> w1, std::vector<uint8_t> w2, size_t v) {
        std::pair<std::vector<uint8_t>, std::vector<uint8_t>> best;
        bool have = false;
        std::vector<uint8_t> perm(v);
        for (size_t i = 0; i < v; ++i) perm[i] = static_cast<uint8_t>(i);
        do {
            std::vector<uint8_t> a1(w1.size()), a2(w2.size());
            for (size_t i = 0; i < w1.size(); ++i) a1[i] = perm[w1[i]];
            for (size_t i = 0; i < w2.size(); ++i) a2[i] = perm[w2[i]];
            if (a2 < a1) std::swap(a1, a2);
            // normalize by first appearance across both words
            std::vector<int> re(v, -1);
            int nxt = 0;
            auto norm = [&](std::vector<uint8_t>& w) {
                for (auto& x : w) {
                    if (re[x] < 0) re[x] = nxt++;
                    x = static_cast<uint8_t>(re[x]);
                }
            };
            norm(a1);
            norm(a2);
            auto cand = std::make_pair(a1, a2);
            if (!have || cand < best) {
                best = cand;
                have = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    for (uint32_t v = 1; v <= max_vars; ++v) {
        if (v > max_degree) break;
        if (D != 0 && static_cast<uint64_t>(v) * D > indeterminate_budget()) break;
        std::optional<PolyRing> R;
        std::vector<std::vector<Poly>> gsub;
        if (D != 0) {
            R.emplace(a.p, static_cast<uint32_t>(v * D));
            gsub = generic_substitution(a, domain, *R, v);
        }
        std::vector<char> names;
        for (uint32_t i = 0; i < v; ++i) names.push_back(static_cast<char>('a' + i));

        // multidegrees: each variable at least once
        std::vector<uint32_t> deg(v, 1);
        while (true) {
            uint32_t total = 0;
            for (uint32_t d : deg) total += d;
            if (total <= max_degree) {
                // enumerate all arrangements of the multiset, evaluate once each
                std::map<std::vector<Poly>, std::vector<std::vector<uint8_t>>> buckets;
                std::vector<uint8_t> word;
                std::vector<uint32_t> left = deg;
                auto emit = [&](const std::vector<uint8_t>& w) {
                    std::vector<Poly> val;
                    if (D == 0 || (skip && w.size() >= skip)) {
                        val.assign(a.dim, Poly(a.p, R ? R->nvars : 0));
                    } else {
                        auto cur = gsub[w[0]];
                        for (size_t i = 1; i < w.size(); ++i) cur = alg_mul(a, *R, cur, gsub[w[i]]);
                        val = cur;
                    }
                    buckets[val].push_back(w);
                };
                std::function<void()> rec = [&]() {
                    if (word.size() == total) {
                        emit(word);
                        return;
                    }
                    for (uint32_t x = 0; x < v; ++x) {
                        if (!left[x]) continue;
                        --left[x];
                        word.push_back(static_cast<uint8_t>(x));
                        rec();
                        word.pop_back();
                        ++left[x];
                    }
                };
                rec();
                for (auto& [val, words] : buckets) {
                    for (size_t i = 0; i < words.size(); ++i)
                        for (size_t j = i + 1; j < words.size(); ++j) {
                            auto k = pair_key(words[i], words[j], v);
                            if (!seen.insert(k).second) continue;
                            out.push_back(make_identity_terms(
                                a.p, names, {{1, words[i]}, {a.p - 1, words[j]}}, "semigroup"));
                        }
                }
            }
            // odometer over degrees 1..max_degree per slot
            size_t pos = 0;
            while (pos < v) {
                if (++deg[pos] <= max_degree) break;
                deg[pos] = 1;
                ++pos;
            }
            if (pos == v) break;
        }
    }

    std::sort(out.begin(), out.end(), [](const Identity& x, const Identity& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return identity_to_string(x) < identity_to_string(y);
    });
    return out;
}

} // namespace pialg
