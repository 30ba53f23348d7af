#include "skewcyclic/circulant.hpp"

namespace skewcyclic {

SkewPoly vec_to_poly(SkewContextPtr ctx, const std::vector<Poly>& v) {
    const RingContext& R = ctx->ring();
    if (v.size() != R.n()) throw LengthMismatch("vector length must equal n");
    int dmax = -1;
    for (const Poly& p : v) dmax = std::max(dmax, p.degree());
    std::vector<RingElement> zc;
    for (int nu = 0; nu <= dmax; ++nu) {
        RingElement a = R.zero();
        for (size_t i = 0; i < v.size(); ++i) a.c[i] = v[i].coeff(nu);
        zc.push_back(std::move(a));
    }
    return skew_from_coeffs(std::move(ctx), std::move(zc));
}

std::vector<Poly> poly_to_vec(const SkewPoly& f) {
    const RingContext& R = f.ctx->ring();
    std::vector<Poly> v(R.n());
    for (size_t i = 0; i < R.n(); ++i) {
        std::vector<FieldElement> c(f.zc.size(), FieldElement{0});
        for (size_t nu = 0; nu < f.zc.size(); ++nu) c[nu] = f.zc[nu].c[i];
        v[i] = Poly{std::move(c)};
    }
    return v;
}

PolyMatrix classical_circulant(const RingContext& ring, const RingElement& a) {
    uint32_t n = ring.n();
    PolyMatrix m(ring.field_ptr(), n, n);
    RingElement row = a;
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) m.at(i, j) = Poly::constant(row.c[j]);
        row = ring.mul(row, ring.x());
    }
    return m;
}

PolyMatrix p_sigma(const Automorphism& sigma) {
    const RingContext& R = *sigma.ctx();
    uint32_t n = R.n();
    PolyMatrix m(R.field_ptr(), n, n);
    RingElement xp = R.one();
    for (uint32_t i = 0; i < n; ++i) {
        RingElement img = sigma.apply(xp);
        for (uint32_t j = 0; j < n; ++j) m.at(i, j) = Poly::constant(img.c[j]);
        xp = R.mul(xp, R.x());
    }
    return m;
}

PolyMatrix sigma_circulant(const SkewPoly& g) {
    const RingContext& R = g.ctx->ring();
    uint32_t n = R.n();
    PolyMatrix m(R.field_ptr(), n, n);
    SkewPoly row = g;
    const SkewPoly x = skew_constant(g.ctx, R.x());
    for (uint32_t i = 0; i < n; ++i) {
        std::vector<Poly> v = poly_to_vec(row);
        for (uint32_t j = 0; j < n; ++j) m.at(i, j) = v[j];
        if (i + 1 < n) row = skew_mul(x, row);
    }
    return m;
}

std::vector<Poly> sigma_shift(SkewContextPtr ctx, const std::vector<Poly>& v) {
    const RingContext& R = ctx->ring();
    SkewPoly f = vec_to_poly(ctx, v);
    SkewPoly xf = skew_mul(skew_constant(ctx, R.x()), f);
    return poly_to_vec(xf);
}

} // namespace skewcyclic
