#include "skewcyclic/poly.hpp"

#include <algorithm>

namespace skewcyclic {

Poly Poly::monomial(FieldElement a, int k) {
    if (a.enc == 0) return {};
    std::vector<FieldElement> c(size_t(k) + 1, FieldElement{0});
    c.back() = a;
    return Poly{std::move(c)};
}

Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b) {
    std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()), FieldElement{0});
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(int(i)), b.coeff(int(i)));
    return Poly{std::move(c)};
}

Poly poly_neg(const FieldSpec& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FieldElement> c(a.c.size() + b.c.size() - 1, FieldElement{0});
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].enc == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly{std::move(c)};
}

Poly poly_scale(const FieldSpec& F, const Poly& a, FieldElement s) {
    if (s.enc == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return r;
}

Poly poly_shift(const Poly& a, int k) {
    if (a.is_zero() || k == 0) return a;
    Poly r;
    r.c.assign(a.c.size() + size_t(k), FieldElement{0});
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

PolyDivMod poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    PolyDivMod out;
    out.rem = a;
    if (a.degree() < b.degree()) return out;
    out.quot.c.assign(size_t(a.degree() - b.degree()) + 1, FieldElement{0});
    FieldElement lead_inv = F.inv(b.leading());
    while (!out.rem.is_zero() && out.rem.degree() >= b.degree()) {
        int shift = out.rem.degree() - b.degree();
        FieldElement q = F.mul(out.rem.leading(), lead_inv);
        out.quot.c[size_t(shift)] = q;
        for (int i = 0; i <= b.degree(); ++i)
            out.rem.c[size_t(i + shift)] =
                F.sub(out.rem.c[size_t(i + shift)], F.mul(q, b.c[size_t(i)]));
        out.rem.trim();
    }
    out.quot.trim();
    return out;
}

Poly poly_mod(const FieldSpec& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).rem;
}

Poly poly_div_exact(const FieldSpec& F, const Poly& a, const Poly& b) {
    auto dm = poly_divmod(F, a, b);
    if (!dm.rem.is_zero()) throw InvalidParameters("inexact polynomial division");
    return dm.quot;
}

Poly poly_make_monic(const FieldSpec& F, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(F, a, F.inv(a.leading()));
}

Poly poly_gcd(const FieldSpec& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(F, a);
}

PolyXgcd poly_xgcd(const FieldSpec& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1 = Poly::zero();
    Poly t0 = Poly::zero(), t1 = Poly::one();
    while (!r1.is_zero()) {
        auto dm = poly_divmod(F, r0, r1);
        Poly r2 = dm.rem;
        Poly s2 = poly_sub(F, s0, poly_mul(F, dm.quot, s1));
        Poly t2 = poly_sub(F, t0, poly_mul(F, dm.quot, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero() && r0.leading().enc != 1) {
        FieldElement c = F.inv(r0.leading());
        r0 = poly_scale(F, r0, c);
        s0 = poly_scale(F, s0, c);
        t0 = poly_scale(F, t0, c);
    }
    return {r0, s0, t0};
}

Poly poly_mulmod(const FieldSpec& F, const Poly& a, const Poly& b, const Poly& mod) {
    return poly_mod(F, poly_mul(F, a, b), mod);
}

Poly poly_powmod(const FieldSpec& F, Poly base, uint64_t e, const Poly& mod) {
    Poly r = poly_mod(F, Poly::one(), mod);
    base = poly_mod(F, base, mod);
    while (e) {
        if (e & 1) r = poly_mulmod(F, r, base, mod);
        base = poly_mulmod(F, base, base, mod);
        e >>= 1;
    }
    return r;
}

FieldElement poly_eval(const FieldSpec& F, const Poly& a, FieldElement x) {
    FieldElement r{0};
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

Poly poly_eval_mod(const FieldSpec& F, const Poly& a, const Poly& u, const Poly& mod) {
    Poly r;
    for (size_t i = a.c.size(); i-- > 0;) {
        r = poly_mulmod(F, r, u, mod);
        r = poly_add(F, r, Poly::constant(a.c[i]));
    }
    return poly_mod(F, r, mod);
}

Poly poly_invmod(const FieldSpec& F, const Poly& a, const Poly& mod) {
    auto x = poly_xgcd(F, poly_mod(F, a, mod), mod);
    if (x.g.degree() != 0) throw NotAUnit("element not invertible modulo the given polynomial");
    return poly_mod(F, x.s, mod);
}

bool poly_is_irreducible(const FieldSpec& F, const Poly& f) {
    int m = f.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    const Poly x = Poly::x();
    auto frob_pow = [&](int k) {
        Poly h = poly_mod(F, x, f);
        for (int i = 0; i < k; ++i) h = poly_powmod(F, h, F.q(), f);
        return h;
    };
    if (poly_sub(F, frob_pow(m), poly_mod(F, x, f)) != Poly::zero()) return false;
    for (int l = 2; l <= m; ++l) {
        if (m % l != 0 || !is_prime_u32(uint32_t(l))) continue;
        Poly h = poly_sub(F, frob_pow(m / l), poly_mod(F, x, f));
        if (poly_gcd(F, f, h).degree() != 0) return false;
    }
    return true;
}

namespace {

// Enumerate nonconstant polynomials of degree < max_deg in a fixed order for
// the deterministic equal-degree splitting.
Poly nth_test_poly(const FieldSpec& F, uint64_t idx, int max_deg) {
    // degree d polys have (q-1) q^d encodings; walk degrees ascending
    uint64_t q = F.q();
    for (int d = 1; d < max_deg; ++d) {
        uint64_t count = (q - 1);
        for (int i = 0; i < d; ++i) count *= q;
        if (idx < count) {
            std::vector<FieldElement> c(size_t(d) + 1, FieldElement{0});
            uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                c[size_t(i)] = FieldElement{uint32_t(v % q)};
                v /= q;
            }
            c[size_t(d)] = FieldElement{uint32_t(v % (q - 1)) + 1};
            return Poly{std::move(c)};
        }
        idx -= count;
    }
    throw InvalidParameters("equal-degree splitting exhausted its search space");
}

// Split a product of k >= 2 distinct irreducibles, all of degree d.
void equal_degree_split(const FieldSpec& F, const Poly& P, int d, std::vector<Poly>& out) {
    if (P.degree() == d) {
        out.push_back(poly_make_monic(F, P));
        return;
    }
    const uint32_t p = F.p();
    // exponent (q^d - 1) / 2 for the odd-characteristic power test
    uint64_t half_exp = 0;
    if (p != 2) {
        uint64_t qd = 1;
        for (int i = 0; i < d; ++i) {
            if (qd > (uint64_t(1) << 62) / F.q())
                throw InvalidParameters("factor degree too large for splitting");
            qd *= F.q();
        }
        half_exp = (qd - 1) / 2;
    }
    uint32_t trace_len = 0; // q^d = 2^(m*d) in characteristic 2
    if (p == 2) trace_len = F.m() * uint32_t(d);

    for (uint64_t idx = 0;; ++idx) {
        Poly T = nth_test_poly(F, idx, P.degree());
        Poly g = poly_gcd(F, T, P);
        if (g.degree() == 0) {
            if (p != 2) {
                Poly e = poly_powmod(F, T, half_exp, P);
                g = poly_gcd(F, poly_sub(F, e, Poly::one()), P);
            } else {
                Poly tr = Poly::zero(), cur = poly_mod(F, T, P);
                for (uint32_t i = 0; i < trace_len; ++i) {
                    tr = poly_add(F, tr, cur);
                    cur = poly_mulmod(F, cur, cur, P);
                }
                g = poly_gcd(F, tr, P);
            }
        }
        if (g.degree() > 0 && g.degree() < P.degree()) {
            equal_degree_split(F, g, d, out);
            equal_degree_split(F, poly_div_exact(F, P, g), d, out);
            return;
        }
    }
}

} // namespace

std::vector<Poly> factor_squarefree(const FieldSpec& F, const Poly& f) {
    std::vector<Poly> out;
    Poly rem = poly_make_monic(F, f);
    if (rem.degree() <= 0) return out;
    // distinct-degree stage, powers taken against the fixed original modulus
    const Poly fixed = rem;
    Poly h = poly_mod(F, Poly::x(), fixed);
    for (int d = 1; rem.degree() > 0; ++d) {
        if (2 * d > rem.degree()) {
            out.push_back(poly_make_monic(F, rem));
            break;
        }
        h = poly_powmod(F, h, F.q(), fixed);
        Poly g = poly_gcd(F, poly_sub(F, h, Poly::x()), rem);
        if (g.degree() > 0) {
            equal_degree_split(F, g, d, out);
            rem = poly_div_exact(F, rem, g);
        }
    }
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].enc != b.c[i].enc) return a.c[i].enc < b.c[i].enc;
    }
    return false;
}

} // namespace skewcyclic
