#ifndef SKEWCYCLIC_POLY_HPP
#define SKEWCYCLIC_POLY_HPP

#include <vector>

#include "skewcyclic/galois.hpp"

namespace skewcyclic {

// Dense univariate polynomial over a FieldSpec, coefficients low-to-high,
// trailing zeros trimmed.  The zero polynomial has an empty coefficient
// sequence and degree() == -1.
struct Poly {
    std::vector<FieldElement> c;

    Poly() = default;
    explicit Poly(std::vector<FieldElement> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    FieldElement coeff(int i) const {
        return (i >= 0 && i < int(c.size())) ? c[size_t(i)] : FieldElement{0};
    }
    FieldElement leading() const { return c.empty() ? FieldElement{0} : c.back(); }
    void trim() {
        while (!c.empty() && c.back().enc == 0) c.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    static Poly zero() { return {}; }
    static Poly constant(FieldElement a) { return a.enc ? Poly{{a}} : Poly{}; }
    static Poly one() { return Poly{{FieldElement{1}}}; }
    static Poly x() { return Poly{{FieldElement{0}, FieldElement{1}}}; }
    // c * x^k
    static Poly monomial(FieldElement a, int k);
};

Poly poly_add(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_neg(const FieldSpec& F, const Poly& a);
Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldSpec& F, const Poly& a, FieldElement s);
Poly poly_shift(const Poly& a, int k); // multiply by x^k

struct PolyDivMod {
    Poly quot, rem;
};
PolyDivMod poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldSpec& F, const Poly& a, const Poly& b);
Poly poly_div_exact(const FieldSpec& F, const Poly& a, const Poly& b);

Poly poly_make_monic(const FieldSpec& F, const Poly& a);
Poly poly_gcd(const FieldSpec& F, Poly a, Poly b); // monic gcd
struct PolyXgcd {
    Poly g, s, t; // g = s*a + t*b, g monic
};
PolyXgcd poly_xgcd(const FieldSpec& F, const Poly& a, const Poly& b);

Poly poly_mulmod(const FieldSpec& F, const Poly& a, const Poly& b, const Poly& mod);
Poly poly_powmod(const FieldSpec& F, Poly base, uint64_t e, const Poly& mod);
FieldElement poly_eval(const FieldSpec& F, const Poly& a, FieldElement x);
// Evaluate a at the residue class u modulo `mod` (polynomial composition mod).
Poly poly_eval_mod(const FieldSpec& F, const Poly& a, const Poly& u, const Poly& mod);

// Inverse of a modulo `mod`; requires gcd(a, mod) = 1.
Poly poly_invmod(const FieldSpec& F, const Poly& a, const Poly& mod);

// Distinct monic irreducible factors of a squarefree polynomial, in
// deterministic order of discovery (callers re-sort as needed).
std::vector<Poly> factor_squarefree(const FieldSpec& F, const Poly& f);

bool poly_is_irreducible(const FieldSpec& F, const Poly& f);

// Total order used for canonical sorting: degree, then low-to-high
// lexicographic on integer encodings.
bool poly_less(const Poly& a, const Poly& b);

} // namespace skewcyclic

#endif
