#include "skewcyclic/skew.hpp"

#include <algorithm>

namespace skewcyclic {

// ---------------------------------------------------------------------------
// SkewContext
// ---------------------------------------------------------------------------

SkewContextPtr SkewContext::build(RingContextPtr ring, Automorphism sigma) {
    if (!(*sigma.ctx() == *ring)) throw ContextMismatch("sigma defined over a different ring");
    auto ctx = std::shared_ptr<SkewContext>(new SkewContext());
    ctx->ring_ = std::move(ring);
    Automorphism id(ctx->ring_, ctx->ring_->x());
    ctx->powers_.push_back(std::move(id));
    if (!sigma.is_identity()) {
        Automorphism cur = sigma;
        while (true) {
            ctx->powers_.push_back(cur);
            if (int(ctx->powers_.size()) == sigma.order()) break;
            cur = compose(sigma, cur);
        }
    }
    return ctx;
}

const Automorphism& SkewContext::sigma_power(int64_t nu) const {
    int64_t ord = int64_t(powers_.size());
    return powers_[size_t(((nu % ord) + ord) % ord)];
}

int SkewContext::tau_power(int64_t nu, int k) const {
    return sigma_power(nu).tau()[size_t(k)];
}

// ---------------------------------------------------------------------------
// SkewPoly basics
// ---------------------------------------------------------------------------

RingElement SkewPoly::coeff(int nu) const {
    if (nu >= 0 && nu < int(zc.size())) return zc[size_t(nu)];
    return ctx->ring().zero();
}

bool same_context(const SkewPoly& a, const SkewPoly& b) {
    if (a.ctx == b.ctx) return true;
    return a.ctx && b.ctx && *a.ctx == *b.ctx;
}

static void require_same_context(const SkewPoly& a, const SkewPoly& b) {
    if (!same_context(a, b)) throw ContextMismatch("skew polynomials from different algebras");
}

SkewPoly skew_zero(SkewContextPtr ctx) { return SkewPoly{std::move(ctx), {}}; }

SkewPoly skew_constant(SkewContextPtr ctx, RingElement a) {
    SkewPoly f{std::move(ctx), {std::move(a)}};
    f.trim();
    return f;
}

SkewPoly skew_from_coeffs(SkewContextPtr ctx, std::vector<RingElement> zc) {
    SkewPoly f{std::move(ctx), std::move(zc)};
    f.trim();
    return f;
}

SkewPoly skew_add(const SkewPoly& g, const SkewPoly& h) {
    require_same_context(g, h);
    const RingContext& R = g.ctx->ring();
    SkewPoly r{g.ctx, {}};
    r.zc.resize(std::max(g.zc.size(), h.zc.size()), R.zero());
    for (size_t i = 0; i < r.zc.size(); ++i) r.zc[i] = R.add(g.coeff(int(i)), h.coeff(int(i)));
    r.trim();
    return r;
}

SkewPoly skew_sub(const SkewPoly& g, const SkewPoly& h) {
    require_same_context(g, h);
    const RingContext& R = g.ctx->ring();
    SkewPoly r{g.ctx, {}};
    r.zc.resize(std::max(g.zc.size(), h.zc.size()), R.zero());
    for (size_t i = 0; i < r.zc.size(); ++i) r.zc[i] = R.sub(g.coeff(int(i)), h.coeff(int(i)));
    r.trim();
    return r;
}

SkewPoly skew_mul(const SkewPoly& g, const SkewPoly& h) {
    require_same_context(g, h);
    const RingContext& R = g.ctx->ring();
    if (g.is_zero() || h.is_zero()) return skew_zero(g.ctx);
    SkewPoly r{g.ctx, std::vector<RingElement>(g.zc.size() + h.zc.size() - 1, R.zero())};
    for (size_t nu = 0; nu < g.zc.size(); ++nu) {
        if (g.zc[nu].is_zero()) continue;
        for (size_t mu = 0; mu < h.zc.size(); ++mu) {
            if (h.zc[mu].is_zero()) continue;
            RingElement t = R.mul(g.ctx->sigma_power(int64_t(mu)).apply(g.zc[nu]), h.zc[mu]);
            r.zc[nu + mu] = R.add(r.zc[nu + mu], t);
        }
    }
    r.trim();
    return r;
}

SkewPoly skew_scale_left(const RingElement& a, const SkewPoly& g) {
    const RingContext& R = g.ctx->ring();
    SkewPoly r{g.ctx, {}};
    r.zc.reserve(g.zc.size());
    for (size_t nu = 0; nu < g.zc.size(); ++nu)
        r.zc.push_back(R.mul(g.ctx->sigma_power(int64_t(nu)).apply(a), g.zc[nu]));
    r.trim();
    return r;
}

SkewPoly skew_scale_right(const SkewPoly& g, const RingElement& a) {
    const RingContext& R = g.ctx->ring();
    SkewPoly r{g.ctx, {}};
    r.zc.reserve(g.zc.size());
    for (const auto& c : g.zc) r.zc.push_back(R.mul(c, a));
    r.trim();
    return r;
}

SkewPoly skew_zshift_mul(int s, const RingElement& a, const SkewPoly& g) {
    const RingContext& R = g.ctx->ring();
    SkewPoly r{g.ctx, std::vector<RingElement>(size_t(s) + g.zc.size(), R.zero())};
    for (size_t mu = 0; mu < g.zc.size(); ++mu)
        r.zc[size_t(s) + mu] = R.mul(g.ctx->sigma_power(int64_t(mu)).apply(a), g.zc[mu]);
    r.trim();
    return r;
}

// ---------------------------------------------------------------------------
// Components, terms, monomial order
// ---------------------------------------------------------------------------

SkewPoly component(const SkewPoly& f, int k) {
    const RingContext& R = f.ctx->ring();
    if (k < 0 || k >= R.r()) throw InvalidParameters("component index out of range");
    SkewPoly r{f.ctx, {}};
    r.zc.reserve(f.zc.size());
    for (size_t nu = 0; nu < f.zc.size(); ++nu) {
        int l = f.ctx->tau_power(int64_t(nu), k);
        Poly res = R.residue(f.zc[nu], l);
        r.zc.push_back(res.is_zero() ? R.zero() : R.lift_component(l, res));
    }
    r.trim();
    return r;
}

std::vector<int> support(const SkewPoly& f) {
    const RingContext& R = f.ctx->ring();
    std::vector<int> out;
    for (int k = 0; k < R.r(); ++k) {
        for (size_t nu = 0; nu < f.zc.size(); ++nu) {
            int l = f.ctx->tau_power(int64_t(nu), k);
            if (!R.residue(f.zc[nu], l).is_zero()) {
                out.push_back(k);
                break;
            }
        }
    }
    return out;
}

Monomial leading_monomial(const SkewPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("zero polynomial has no leading monomial");
    const RingContext& R = f.ctx->ring();
    for (int nu = f.deg_z(); nu >= 0; --nu)
        for (int k = R.r() - 1; k >= 0; --k)
            if (!R.residue(f.zc[size_t(nu)], k).is_zero()) return Monomial{nu, k};
    throw ZeroPolynomial("zero polynomial has no leading monomial"); // unreachable
}

std::pair<Monomial, RingElement> leading_term(const SkewPoly& f) {
    Monomial lm = leading_monomial(f);
    const RingContext& R = f.ctx->ring();
    return {lm, R.lift_component(lm.comp, R.residue(f.zc[size_t(lm.zpow)], lm.comp))};
}

std::optional<std::pair<int, RingElement>>
monomial_divides(const SkewContext& ctx, Monomial lm, const RingElement& divisor_lead,
                 Monomial term, const RingElement& term_coeff) {
    if (lm.comp != term.comp || lm.zpow > term.zpow) return std::nullopt;
    const RingContext& R = ctx.ring();
    int k = lm.comp;
    Poly b = R.residue(divisor_lead, k);
    Poly c = R.residue(term_coeff, k);
    if (b.is_zero() || c.is_zero()) return std::nullopt;
    Poly q = poly_mod(R.field(), poly_mul(R.field(), c, poly_invmod(R.field(), b, R.factors()[size_t(k)])),
                      R.factors()[size_t(k)]);
    RingElement a = ctx.sigma_power(-int64_t(lm.zpow)).apply(R.lift_component(k, q));
    return std::make_pair(term.zpow - lm.zpow, a);
}

namespace {

// Nonzero terms of f as (monomial, residue in K_comp), descending.
struct Term {
    Monomial mono;
    Poly residue;
};

std::vector<Term> terms_desc(const SkewPoly& f) {
    const RingContext& R = f.ctx->ring();
    std::vector<Term> out;
    for (int nu = f.deg_z(); nu >= 0; --nu)
        for (int k = R.r() - 1; k >= 0; --k) {
            Poly res = R.residue(f.zc[size_t(nu)], k);
            if (!res.is_zero()) out.push_back({Monomial{nu, k}, std::move(res)});
        }
    return out;
}

} // namespace

bool is_reduced(const SkewPoly& g) {
    if (g.is_zero()) return true;
    const RingContext& R = g.ctx->ring();
    std::vector<SkewPoly> comps;
    for (int k = 0; k < R.r(); ++k) {
        SkewPoly c = component(g, k);
        if (!c.is_zero()) comps.push_back(std::move(c));
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        Monomial lm = leading_monomial(comps[i]);
        for (size_t j = 0; j < comps.size(); ++j) {
            if (i == j) continue;
            for (const Term& t : terms_desc(comps[j]))
                if (t.mono.comp == lm.comp && t.mono.zpow >= lm.zpow) return false;
        }
    }
    return true;
}

std::vector<SkewPoly> reduce_family(std::vector<SkewPoly> fs) {
    if (fs.empty()) return fs;
    for (size_t i = 1; i < fs.size(); ++i) require_same_context(fs[0], fs[i]);
    const SkewContextPtr ctx = fs[0].ctx;
    const RingContext& R = ctx->ring();

    for (long guard = 0;; ++guard) {
        if (guard > 2000000) throw InvalidParameters("reduction did not terminate");
        // candidate per target: its largest term divisible by some other LM
        bool have = false;
        Monomial best_term{-1, -1};
        size_t best_t = 0, best_s = 0;
        Monomial best_lm{};
        for (size_t t = 0; t < fs.size(); ++t) {
            if (fs[t].is_zero()) continue;
            for (const Term& term : terms_desc(fs[t])) {
                bool found = false;
                for (size_t s = 0; s < fs.size() && !found; ++s) {
                    if (s == t || fs[s].is_zero()) continue;
                    Monomial lm = leading_monomial(fs[s]);
                    if (lm.comp == term.mono.comp && lm.zpow <= term.mono.zpow) {
                        if (!have || best_term < term.mono) {
                            best_term = term.mono;
                            best_t = t;
                            best_s = s;
                            best_lm = lm;
                            have = true;
                        }
                        found = true;
                    }
                }
                if (found) break; // only the largest reducible term of this target matters
            }
        }
        if (!have) break;
        auto [lm, lead] = leading_term(fs[best_s]);
        RingElement coeff = R.lift_component(best_term.comp,
                                             R.residue(fs[best_t].zc[size_t(best_term.zpow)],
                                                       best_term.comp));
        auto w = monomial_divides(*ctx, lm, lead, best_term, coeff);
        if (!w) throw InvalidParameters("internal: divisor vanished during reduction");
        fs[best_t] = skew_sub(fs[best_t], skew_zshift_mul(w->first, w->second, fs[best_s]));
    }
    return fs;
}

SkewPoly normalize(const SkewPoly& g) {
    if (g.is_zero()) return g;
    const RingContext& R = g.ctx->ring();
    RingElement a = R.zero();
    std::vector<int> supp = support(g);
    std::vector<bool> in_supp(size_t(R.r()), false);
    for (int k : supp) in_supp[size_t(k)] = true;
    for (int k = 0; k < R.r(); ++k) {
        if (!in_supp[size_t(k)]) {
            a = R.add(a, R.idempotents()[size_t(k)]);
            continue;
        }
        SkewPoly comp = component(g, k);
        int d = comp.deg_z();
        RingElement lead = comp.zc[size_t(d)]; // lives in K^(tau^d(k))
        int l = g.ctx->tau_power(d, k);
        RingElement inv = R.component_inverse(lead, l);
        a = R.add(a, g.ctx->sigma_power(-int64_t(d)).apply(inv));
    }
    return skew_scale_left(a, g);
}

ReductionOutcome principal_generator(const std::vector<SkewPoly>& fs) {
    if (fs.empty()) throw EmptyInput("need at least one generator");
    for (size_t i = 1; i < fs.size(); ++i) require_same_context(fs[0], fs[i]);
    const SkewContextPtr ctx = fs[0].ctx;
    const RingContext& R = ctx->ring();

    std::vector<SkewPoly> family;
    for (const SkewPoly& f : fs)
        for (int k = 0; k < R.r(); ++k) {
            SkewPoly c = component(f, k);
            if (!c.is_zero()) family.push_back(std::move(c));
        }

    ReductionOutcome out;
    if (family.empty()) {
        // the zero ideal
        out.is_principal = true;
        out.is_delay_free = true;
        out.generator = skew_zero(ctx);
        return out;
    }

    family = reduce_family(std::move(family));

    std::vector<std::pair<int, SkewPoly>> members;
    for (SkewPoly& f : family) {
        if (f.is_zero()) continue;
        std::vector<int> supp = support(f);
        if (supp.size() != 1)
            throw InvalidParameters("internal: reduced member not in a single component");
        members.emplace_back(supp[0], normalize(f));
    }
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return leading_monomial(a.second) < leading_monomial(b.second);
    });

    out.is_principal = true;
    for (size_t i = 0; i + 1 < members.size(); ++i)
        if (members[i].first == members[i + 1].first) out.is_principal = false;

    for (auto& [k, f] : members) {
        out.family_components.push_back(k);
        out.reduced_family.push_back(f);
    }

    if (out.is_principal) {
        SkewPoly g = skew_zero(ctx);
        for (const SkewPoly& f : out.reduced_family) g = skew_add(g, f);
        out.is_delay_free = g.is_zero() || is_delay_free_witness(g);
        out.generator = std::move(g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Anti-isomorphisms, annihilator polynomial, delay-freeness witness
// ---------------------------------------------------------------------------

SkewPoly tilde(const SkewPoly& g) {
    auto target = SkewContext::build(g.ctx->ring_ptr(), inverse(g.ctx->sigma()));
    SkewPoly r{target, {}};
    r.zc.reserve(g.zc.size());
    for (size_t nu = 0; nu < g.zc.size(); ++nu)
        r.zc.push_back(g.ctx->sigma_power(-int64_t(nu)).apply(g.zc[nu]));
    r.trim();
    return r;
}

SkewPoly hat_skew(const SkewPoly& g) {
    const RingContext& R = g.ctx->ring();
    auto target = SkewContext::build(g.ctx->ring_ptr(), sigma_hat(g.ctx->sigma()));
    SkewPoly r{target, {}};
    r.zc.reserve(g.zc.size());
    for (size_t nu = 0; nu < g.zc.size(); ++nu)
        r.zc.push_back(target->sigma_power(int64_t(nu)).apply(R.theta(g.zc[nu])));
    r.trim();
    return r;
}

Poly pi_of(const SkewPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("pi_() of the zero polynomial");
    const RingContext& R = g.ctx->ring();
    Poly p = Poly::one();
    for (int k : support(g)) p = poly_mul(R.field(), p, R.factors()[size_t(k)]);
    return p;
}

bool is_delay_free_witness(const SkewPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("witness undefined for the zero polynomial");
    const RingContext& R = g.ctx->ring();
    std::vector<int> supp0;
    RingElement g0 = g.zfree();
    for (int k = 0; k < R.r(); ++k)
        if (!R.residue(g0, k).is_zero()) supp0.push_back(k);
    return support(g) == supp0;
}

} // namespace skewcyclic
