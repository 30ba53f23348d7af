#ifndef SKEWCYCLIC_GALOIS_HPP
#define SKEWCYCLIC_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "skewcyclic/errors.hpp"

namespace skewcyclic {

// Element of GF(p^m), carried around as its integer encoding
//   enc(a) = sum_i coeffs[i] * p^i  with coeffs the coordinates in the
// polynomial basis 1, t, ..., t^(m-1).  All arithmetic goes through the
// owning FieldSpec.
struct FieldElement {
    uint32_t enc = 0;
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// Exact arithmetic in GF(p^m), p prime, q = p^m <= 2^16.  Immutable once
// built; safe to share between threads.
class FieldSpec {
  public:
    // If modulus is absent the lexicographically smallest monic irreducible
    // of degree m over GF(p) is selected (compared as low-to-high coefficient
    // tuples).
    static std::shared_ptr<const FieldSpec>
    build(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    // Monic irreducible modulus, length m+1, coefficients low-to-high mod p.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    // Smallest-encoding generator of the multiplicative group.
    FieldElement generator() const { return {gen_}; }

    bool is_zero(FieldElement a) const { return a.enc == 0; }
    FieldElement from_enc(uint64_t e) const;
    std::vector<uint32_t> coeffs(FieldElement a) const;
    FieldElement from_coeffs(const std::vector<uint32_t>& c) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, int64_t e) const;
    // Frobenius a -> a^p; frobenius_iter applies it k times.
    FieldElement frobenius(FieldElement a) const { return pow(a, p_); }
    FieldElement frobenius_iter(FieldElement a, uint32_t k) const;

    // Discrete log to base generator(); only defined for a != 0.
    uint32_t log(FieldElement a) const;

    bool operator==(const FieldSpec& o) const {
        return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
    }

  private:
    FieldSpec() = default;

    uint32_t p_ = 0, m_ = 0, q_ = 0;
    uint32_t gen_ = 1;
    std::vector<uint32_t> modulus_;
    // exp_[i] = gen^i for i in [0, q-1); log_[enc] for enc in [1, q).
    std::vector<uint32_t> exp_, log_;

    // Raw polynomial-basis product, used to bootstrap the tables.
    uint32_t raw_mul(uint32_t a, uint32_t b) const;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

bool is_prime_u32(uint32_t n);

} // namespace skewcyclic

#endif
