#ifndef SKEWCYCLIC_RING_HPP
#define SKEWCYCLIC_RING_HPP

#include <memory>
#include <vector>

#include "skewcyclic/poly.hpp"

namespace skewcyclic {

class RingContext;
using RingContextPtr = std::shared_ptr<const RingContext>;

// Representative of an element of A = F[x]/(x^n - 1): exactly n coefficients,
// low-to-high.
struct RingElement {
    std::vector<FieldElement> c;
    bool is_zero() const {
        for (auto x : c)
            if (x.enc) return false;
        return true;
    }
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

// An F-algebra automorphism of A, determined by sigma(x).  Carries the images
// of all basis powers (the matrix of sigma as an F-linear map), the induced
// permutation of the primitive idempotents, and the order in Aut_F(A).
class Automorphism {
  public:
    Automorphism(RingContextPtr ctx, RingElement image_of_x);

    const RingContextPtr& ctx() const { return ctx_; }
    const RingElement& image_of_x() const { return image_; }
    // sigma(e_k) = e_{tau(k)}, 0-based components.
    const std::vector<int>& tau() const { return tau_; }
    int order() const { return order_; }

    RingElement apply(const RingElement& a) const;
    bool is_identity() const;
    bool fixes_all_components() const;

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.image_ == b.image_;
    }

  private:
    RingContextPtr ctx_;
    RingElement image_;
    std::vector<RingElement> xpow_; // xpow_[i] = sigma(x^i), i < n
    std::vector<int> tau_;
    int order_ = 1;
};

Automorphism compose(const Automorphism& s, const Automorphism& t); // s after t
Automorphism power(const Automorphism& s, int64_t k);
Automorphism inverse(const Automorphism& s);
// sigma_hat = theta o sigma^(-1) o theta; satisfies P_sigma^T = P_sigma_hat.
Automorphism sigma_hat(const Automorphism& s);

// The commutative ring A = F[x]/(x^n - 1) together with the factorization of
// x^n - 1, the primitive idempotents and CRT tables.  Immutable after
// construction.
class RingContext : public std::enable_shared_from_this<RingContext> {
  public:
    static RingContextPtr build(FieldSpecPtr field, uint32_t n);

    const FieldSpecPtr& field_ptr() const { return field_; }
    const FieldSpec& field() const { return *field_; }
    uint32_t n() const { return n_; }
    int r() const { return int(factors_.size()); }
    // Monic irreducible divisors of x^n - 1, ordered by (degree, lexicographic
    // on coefficient encodings).
    const std::vector<Poly>& factors() const { return factors_; }
    const std::vector<RingElement>& idempotents() const { return idempotents_; }

    // --- element arithmetic -------------------------------------------------
    RingElement zero() const;
    RingElement one() const;
    RingElement x() const;
    RingElement from_poly(const Poly& p) const; // reduces mod x^n - 1
    Poly to_poly(const RingElement& a) const;
    RingElement from_encs(const std::vector<uint32_t>& encs) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement scale(const RingElement& a, FieldElement s) const;
    RingElement pow(const RingElement& a, uint64_t e) const;

    // --- CRT ---------------------------------------------------------------
    std::vector<Poly> crt_forward(const RingElement& a) const;
    RingElement crt_inverse(const std::vector<Poly>& residues) const;
    Poly residue(const RingElement& a, int k) const;
    // residues must satisfy deg(residues[k]) < deg(pi_k)
    RingElement lift_component(int k, const Poly& residue) const;

    // theta: g -> g(x^(n-1)), an involutive F-algebra automorphism.
    RingElement theta(const RingElement& a) const;

    bool is_unit(const RingElement& a) const;
    RingElement unit_inverse(const RingElement& a) const;
    // Inverse of the k-th component of a inside the component field K^(k);
    // the other components of the result are zero.
    RingElement component_inverse(const RingElement& a, int k) const;

    bool operator==(const RingContext& o) const {
        return n_ == o.n_ && *field_ == *o.field_;
    }

  private:
    RingContext() = default;

    FieldSpecPtr field_;
    uint32_t n_ = 0;
    std::vector<Poly> factors_;
    std::vector<RingElement> idempotents_;
    std::vector<Poly> idempotent_polys_;
};

// All F-algebra automorphisms of A, sorted by the encoding of sigma(x).
std::vector<Automorphism> enumerate_automorphisms(const RingContextPtr& ctx);

// Brute-force criterion: a^n = 1 and 1, a, ..., a^(n-1) F-linearly
// independent.
bool is_automorphism_image(const RingContext& ctx, const RingElement& a);

} // namespace skewcyclic

#endif
