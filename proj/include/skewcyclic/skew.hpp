#ifndef SKEWCYCLIC_SKEW_HPP
#define SKEWCYCLIC_SKEW_HPP

#include <optional>
#include <utility>

#include "skewcyclic/ring.hpp"

namespace skewcyclic {

class SkewContext;
using SkewContextPtr = std::shared_ptr<const SkewContext>;

// The Piret algebra A[z; sigma]: A[z] as a left F[z]-module, with the skew
// product determined by a*z = z*sigma(a).  Caches the cyclic group generated
// by sigma so that sigma^nu lookups are O(1).
class SkewContext {
  public:
    static SkewContextPtr build(RingContextPtr ring, Automorphism sigma);

    const RingContextPtr& ring_ptr() const { return ring_; }
    const RingContext& ring() const { return *ring_; }
    const Automorphism& sigma() const { return powers_[1 % powers_.size()]; }
    int sigma_order() const { return int(powers_.size()); }
    // sigma^nu for any integer nu (reduced modulo the order).
    const Automorphism& sigma_power(int64_t nu) const;
    // tau^nu(k) where sigma(e_k) = e_tau(k).
    int tau_power(int64_t nu, int k) const;

    bool operator==(const SkewContext& o) const {
        return *ring_ == *o.ring_ && sigma() == o.sigma();
    }

  private:
    SkewContext() = default;
    RingContextPtr ring_;
    std::vector<Automorphism> powers_; // sigma^0, ..., sigma^(order-1)
};

// Element of A[z; sigma]: z-coefficients (in A) stored low-to-high, written
// to the right of the corresponding power of z, trailing zeros trimmed.
struct SkewPoly {
    SkewContextPtr ctx;
    std::vector<RingElement> zc;

    int deg_z() const { return int(zc.size()) - 1; }
    bool is_zero() const { return zc.empty(); }
    RingElement coeff(int nu) const;
    // z-free term (zero element if the polynomial is zero).
    RingElement zfree() const { return coeff(0); }
    void trim() {
        while (!zc.empty() && zc.back().is_zero()) zc.pop_back();
    }
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.zc == b.zc; }
};

// Left monomial z^zpow * e_comp, ordered by z-power, then component.
struct Monomial {
    int zpow = 0;
    int comp = 0; // 0-based
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

SkewPoly skew_zero(SkewContextPtr ctx);
SkewPoly skew_constant(SkewContextPtr ctx, RingElement a);
SkewPoly skew_from_coeffs(SkewContextPtr ctx, std::vector<RingElement> zc);

SkewPoly skew_add(const SkewPoly& g, const SkewPoly& h);
SkewPoly skew_sub(const SkewPoly& g, const SkewPoly& h);
SkewPoly skew_mul(const SkewPoly& g, const SkewPoly& h);
// a * g and g * a for a constant a in A.
SkewPoly skew_scale_left(const RingElement& a, const SkewPoly& g);
SkewPoly skew_scale_right(const SkewPoly& g, const RingElement& a);
// z^s * a * g (the shape of an elementary reduction operation).
SkewPoly skew_zshift_mul(int s, const RingElement& a, const SkewPoly& g);

// f^(k) = e_k f; the z-coefficients wander through the components according
// to the idempotent permutation of sigma.
SkewPoly component(const SkewPoly& f, int k);
// Support T_f = { k : e_k f != 0 }, 0-based, ascending.
std::vector<int> support(const SkewPoly& f);

Monomial leading_monomial(const SkewPoly& f);                       // f != 0
std::pair<Monomial, RingElement> leading_term(const SkewPoly& f);  // f != 0

// Right-divisibility of the term z^term.zpow * c (c in component term.comp)
// by the monomial z^lm.zpow * e_{lm.comp}; on success returns the pair
// (z-shift, a) with  z^shift * a * (z^lm.zpow * b) = z^term.zpow * c,
// where b is the divisor's leading coefficient.
std::optional<std::pair<int, RingElement>>
monomial_divides(const SkewContext& ctx, Monomial lm, const RingElement& divisor_lead,
                 Monomial term, const RingElement& term_coeff);

bool is_reduced(const SkewPoly& g);

// The elementary-operation closure of Prop. style reduction: returns a
// left-reduced family generating the same left ideal.  Zero members are kept
// in place so the output has the same length as the input.
std::vector<SkewPoly> reduce_family(std::vector<SkewPoly> fs);

// Multiplies by the unit of A that turns every nonzero component's leading
// z-coefficient into its primitive idempotent.
SkewPoly normalize(const SkewPoly& g);

struct ReductionOutcome {
    std::vector<SkewPoly> reduced_family; // nonzero, normalized, one component each
    std::vector<int> family_components;   // component index of each member
    bool is_principal = false;
    bool is_delay_free = false;
    std::optional<SkewPoly> generator; // unique reduced normalized generator
};

// Splits the inputs into components, reduces, and evaluates principality,
// delay-freeness, and the unique reduced normalized generator.
ReductionOutcome principal_generator(const std::vector<SkewPoly>& fs);

// g -> sum_nu z^nu sigma^(-nu)(g_nu), an anti-isomorphism onto A[z; sigma^-1].
SkewPoly tilde(const SkewPoly& g);
// g -> sum_nu z^nu sigma_hat^nu(theta(g_nu)), an anti-isomorphism onto
// A[z; sigma_hat]; applying it again over sigma_hat gives back g.
SkewPoly hat_skew(const SkewPoly& g);

// Product of the prime factors pi_k over the support of g; annihilates g.
Poly pi_of(const SkewPoly& g);

// Support of g equals support of its z-free term (the delay-freeness witness
// for reduced normalized generators).
bool is_delay_free_witness(const SkewPoly& g);

bool same_context(const SkewPoly& a, const SkewPoly& b);

} // namespace skewcyclic

#endif
