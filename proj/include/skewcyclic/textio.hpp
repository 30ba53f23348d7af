#ifndef SKEWCYCLIC_TEXTIO_HPP
#define SKEWCYCLIC_TEXTIO_HPP

#include <string>

#include "skewcyclic/codes.hpp"

namespace skewcyclic {

// Canonical text forms.  Field constants print as powers of the canonical
// generator `a`; polynomials print ascending in z, then ascending in x, with
// zero terms omitted.  The printer output round-trips through parse_skew_poly.
std::string format_field_element(const FieldSpec& F, FieldElement e);
std::string format_poly_x(const FieldSpec& F, const Poly& p); // variable x
std::string format_poly_z(const FieldSpec& F, const Poly& p); // variable z
std::string format_ring_element(const RingContext& R, const RingElement& a);
std::string format_skew_poly(const SkewPoly& f);
std::string format_matrix(const PolyMatrix& m); // one bracketed row per line

// Grammar: sums of products of atoms INT | a | x | z | (expr), each with an
// optional ^exponent; whitespace-insensitive; integers are field-element
// encodings.  Throws ParseError with a position on bad input.
SkewPoly parse_skew_poly(const std::string& text, SkewContextPtr ctx);
// Same grammar, but the result must be z-free.
RingElement parse_ring_element(const std::string& text, SkewContextPtr ctx);

} // namespace skewcyclic

#endif
