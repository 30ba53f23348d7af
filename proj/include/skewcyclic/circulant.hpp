#ifndef SKEWCYCLIC_CIRCULANT_HPP
#define SKEWCYCLIC_CIRCULANT_HPP

#include "skewcyclic/linalg.hpp"
#include "skewcyclic/skew.hpp"

namespace skewcyclic {

// The mutually inverse F[z]-linear identifications p: F[z]^n -> A[z;sigma]
// and v = p^(-1).  Vectors over F[z] are plain std::vector<Poly> of length n.
SkewPoly vec_to_poly(SkewContextPtr ctx, const std::vector<Poly>& v);
std::vector<Poly> poly_to_vec(const SkewPoly& f);

// Classical circulant M_a: row i = v(x^i * a), constant entries.
PolyMatrix classical_circulant(const RingContext& ring, const RingElement& a);

// P_sigma: row i = v(sigma(x^i)); the matrix of sigma as an F-linear map on
// row vectors.
PolyMatrix p_sigma(const Automorphism& sigma);

// sigma-circulant M^sigma(g) = sum_nu z^nu P_sigma^nu M_(g_nu); row i equals
// v(x^i * g) in A[z;sigma].
PolyMatrix sigma_circulant(const SkewPoly& g);

// The generalized shift m(v) = v(x * p(v)); F-linear, and the cyclic row
// shift when sigma = id.
std::vector<Poly> sigma_shift(SkewContextPtr ctx, const std::vector<Poly>& v);

} // namespace skewcyclic

#endif
