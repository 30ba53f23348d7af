#include "skewcyclic/ring.hpp"

#include <algorithm>
#include <numeric>

namespace skewcyclic {

// ---------------------------------------------------------------------------
// RingContext
// ---------------------------------------------------------------------------

RingContextPtr RingContext::build(FieldSpecPtr field, uint32_t n) {
    if (n == 0) throw InvalidParameters("code length must be positive");
    if (n % field->p() == 0)
        throw CharDividesN("characteristic " + std::to_string(field->p()) +
                           " divides n = " + std::to_string(n));
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->field_ = std::move(field);
    ctx->n_ = n;

    const FieldSpec& F = *ctx->field_;
    // x^n - 1
    std::vector<FieldElement> xc(n + 1, FieldElement{0});
    xc[0] = F.neg(F.one());
    xc[n] = F.one();
    Poly xn1{std::move(xc)};

    ctx->factors_ = factor_squarefree(F, xn1);
    std::sort(ctx->factors_.begin(), ctx->factors_.end(), poly_less);

    // e_k = s * (x^n-1)/pi_k  with  s * u + t * pi_k = 1
    for (const Poly& pi : ctx->factors_) {
        Poly u = poly_div_exact(F, xn1, pi);
        auto xg = poly_xgcd(F, u, pi);
        if (xg.g.degree() != 0) throw InvalidParameters("factors of x^n - 1 not coprime");
        Poly e = poly_mod(F, poly_mul(F, xg.s, u), xn1);
        ctx->idempotent_polys_.push_back(e);
        ctx->idempotents_.push_back(ctx->from_poly(e));
    }
    return ctx;
}

RingElement RingContext::zero() const {
    return RingElement{std::vector<FieldElement>(n_, FieldElement{0})};
}

RingElement RingContext::one() const {
    RingElement a = zero();
    a.c[0] = field_->one();
    return a;
}

RingElement RingContext::x() const {
    RingElement a = zero();
    if (n_ == 1)
        a.c[0] = field_->one();
    else
        a.c[1] = field_->one();
    return a;
}

RingElement RingContext::from_poly(const Poly& p) const {
    RingElement a = zero();
    for (size_t i = 0; i < p.c.size(); ++i)
        a.c[i % n_] = field_->add(a.c[i % n_], p.c[i]);
    return a;
}

Poly RingContext::to_poly(const RingElement& a) const { return Poly{a.c}; }

RingElement RingContext::from_encs(const std::vector<uint32_t>& encs) const {
    if (encs.size() != n_) throw LengthMismatch("ring element must have n coefficients");
    RingElement a = zero();
    for (size_t i = 0; i < encs.size(); ++i) a.c[i] = field_->from_enc(encs[i]);
    return a;
}

RingElement RingContext::add(const RingElement& a, const RingElement& b) const {
    RingElement r = a;
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = field_->add(r.c[i], b.c[i]);
    return r;
}

RingElement RingContext::sub(const RingElement& a, const RingElement& b) const {
    RingElement r = a;
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = field_->sub(r.c[i], b.c[i]);
    return r;
}

RingElement RingContext::neg(const RingElement& a) const {
    RingElement r = a;
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = field_->neg(r.c[i]);
    return r;
}

RingElement RingContext::mul(const RingElement& a, const RingElement& b) const {
    RingElement r = zero();
    for (uint32_t i = 0; i < n_; ++i) {
        if (a.c[i].enc == 0) continue;
        for (uint32_t j = 0; j < n_; ++j) {
            if (b.c[j].enc == 0) continue;
            uint32_t k = i + j;
            if (k >= n_) k -= n_;
            r.c[k] = field_->add(r.c[k], field_->mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

RingElement RingContext::scale(const RingElement& a, FieldElement s) const {
    RingElement r = a;
    for (uint32_t i = 0; i < n_; ++i) r.c[i] = field_->mul(r.c[i], s);
    return r;
}

RingElement RingContext::pow(const RingElement& a, uint64_t e) const {
    RingElement r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Poly> RingContext::crt_forward(const RingElement& a) const {
    std::vector<Poly> res;
    res.reserve(factors_.size());
    Poly ap = to_poly(a);
    for (const Poly& pi : factors_) res.push_back(poly_mod(*field_, ap, pi));
    return res;
}

RingElement RingContext::crt_inverse(const std::vector<Poly>& residues) const {
    if (residues.size() != factors_.size())
        throw LengthMismatch("expected one residue per prime factor");
    RingElement acc = zero();
    for (size_t k = 0; k < residues.size(); ++k) {
        if (residues[k].degree() >= factors_[k].degree())
            throw DegreeOutOfRange("residue degree must be below deg pi_k");
        if (residues[k].is_zero()) continue;
        acc = add(acc, lift_component(int(k), residues[k]));
    }
    return acc;
}

Poly RingContext::residue(const RingElement& a, int k) const {
    return poly_mod(*field_, to_poly(a), factors_[size_t(k)]);
}

RingElement RingContext::lift_component(int k, const Poly& res) const {
    if (res.degree() >= factors_[size_t(k)].degree())
        throw DegreeOutOfRange("residue degree must be below deg pi_k");
    return from_poly(poly_mul(*field_, res, idempotent_polys_[size_t(k)]));
}

RingElement RingContext::theta(const RingElement& a) const {
    RingElement r = zero();
    r.c[0] = a.c[0];
    for (uint32_t i = 1; i < n_; ++i) r.c[i] = a.c[n_ - i];
    return r;
}

bool RingContext::is_unit(const RingElement& a) const {
    for (int k = 0; k < r(); ++k)
        if (residue(a, k).is_zero()) return false;
    return true;
}

RingElement RingContext::unit_inverse(const RingElement& a) const {
    std::vector<Poly> res = crt_forward(a);
    for (size_t k = 0; k < res.size(); ++k) {
        if (res[k].is_zero()) throw NotAUnit("zero component " + std::to_string(k + 1));
        res[k] = poly_invmod(*field_, res[k], factors_[k]);
    }
    return crt_inverse(res);
}

RingElement RingContext::component_inverse(const RingElement& a, int k) const {
    Poly res = residue(a, k);
    if (res.is_zero()) throw NotAUnit("component is zero");
    return lift_component(k, poly_invmod(*field_, res, factors_[size_t(k)]));
}

// ---------------------------------------------------------------------------
// Automorphism
// ---------------------------------------------------------------------------

bool is_automorphism_image(const RingContext& ctx, const RingElement& a) {
    const FieldSpec& F = ctx.field();
    uint32_t n = ctx.n();
    if (ctx.pow(a, n) != ctx.one()) return false;
    // rank of the n x n matrix whose rows are 1, a, ..., a^(n-1)
    std::vector<RingElement> rows;
    RingElement cur = ctx.one();
    for (uint32_t i = 0; i < n; ++i) {
        rows.push_back(cur);
        cur = ctx.mul(cur, a);
    }
    uint32_t rank = 0;
    for (uint32_t col = 0; col < n && rank < n; ++col) {
        uint32_t piv = rank;
        while (piv < n && rows[piv].c[col].enc == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[rank], rows[piv]);
        FieldElement inv = F.inv(rows[rank].c[col]);
        for (uint32_t i = 0; i < n; ++i) {
            if (i == rank || rows[i].c[col].enc == 0) continue;
            FieldElement f = F.mul(rows[i].c[col], inv);
            for (uint32_t j = 0; j < n; ++j)
                rows[i].c[j] = F.sub(rows[i].c[j], F.mul(f, rows[rank].c[j]));
        }
        ++rank;
    }
    return rank == n;
}

Automorphism::Automorphism(RingContextPtr ctx, RingElement image_of_x)
    : ctx_(std::move(ctx)), image_(std::move(image_of_x)) {
    if (!is_automorphism_image(*ctx_, image_))
        throw NotAnAutomorphism("sigma(x) does not determine an automorphism");
    uint32_t n = ctx_->n();
    xpow_.reserve(n);
    RingElement cur = ctx_->one();
    for (uint32_t i = 0; i < n; ++i) {
        xpow_.push_back(cur);
        cur = ctx_->mul(cur, image_);
    }
    // induced permutation of the idempotents
    int r = ctx_->r();
    tau_.assign(size_t(r), -1);
    for (int k = 0; k < r; ++k) {
        RingElement img = apply(ctx_->idempotents()[size_t(k)]);
        for (int l = 0; l < r; ++l)
            if (img == ctx_->idempotents()[size_t(l)]) {
                tau_[size_t(k)] = l;
                break;
            }
        if (tau_[size_t(k)] < 0) throw NotAnAutomorphism("image does not permute idempotents");
    }
    // order by iterating on sigma(x)
    RingElement it = image_;
    order_ = 1;
    const RingElement x = ctx_->x();
    while (!(it == x)) {
        it = apply(it);
        ++order_;
        if (order_ > 1000000) throw InvalidParameters("automorphism order out of bounds");
    }
}

RingElement Automorphism::apply(const RingElement& a) const {
    RingElement r = ctx_->zero();
    const FieldSpec& F = ctx_->field();
    for (uint32_t i = 0; i < ctx_->n(); ++i) {
        if (a.c[i].enc == 0) continue;
        const RingElement& row = xpow_[i];
        for (uint32_t j = 0; j < ctx_->n(); ++j)
            r.c[j] = F.add(r.c[j], F.mul(a.c[i], row.c[j]));
    }
    return r;
}

bool Automorphism::is_identity() const { return image_ == ctx_->x(); }

bool Automorphism::fixes_all_components() const {
    for (size_t k = 0; k < tau_.size(); ++k)
        if (tau_[k] != int(k)) return false;
    return true;
}

Automorphism compose(const Automorphism& s, const Automorphism& t) {
    if (!(*s.ctx() == *t.ctx())) throw ContextMismatch("automorphisms over different rings");
    return Automorphism(s.ctx(), s.apply(t.image_of_x()));
}

Automorphism power(const Automorphism& s, int64_t k) {
    int64_t ord = s.order();
    int64_t e = ((k % ord) + ord) % ord;
    RingElement img = s.ctx()->x();
    for (int64_t i = 0; i < e; ++i) img = s.apply(img);
    return Automorphism(s.ctx(), img);
}

Automorphism inverse(const Automorphism& s) { return power(s, s.order() - 1); }

Automorphism sigma_hat(const Automorphism& s) {
    const RingContext& R = *s.ctx();
    Automorphism si = inverse(s);
    RingElement img = R.theta(si.apply(R.theta(R.x())));
    return Automorphism(s.ctx(), img);
}

// ---------------------------------------------------------------------------
// Enumeration of Aut_F(A)
// ---------------------------------------------------------------------------

namespace {

// All roots of pi_src inside K_dst = F[x]/(pi_dst); both factors must have the
// same degree d.  Found by scanning for one root in encoding order, then
// taking its Frobenius orbit.
std::vector<Poly> roots_in_component(const FieldSpec& F, const Poly& pi_src, const Poly& pi_dst) {
    int d = pi_dst.degree();
    uint64_t space = 1;
    for (int i = 0; i < d; ++i) {
        space *= F.q();
        if (space > (1u << 20))
            throw InvalidParameters("component field too large for automorphism enumeration");
    }
    Poly first;
    bool found = false;
    for (uint64_t v = 0; v < space && !found; ++v) {
        std::vector<FieldElement> c(size_t(d), FieldElement{0});
        uint64_t rest = v;
        for (int i = 0; i < d; ++i) {
            c[size_t(i)] = FieldElement{uint32_t(rest % F.q())};
            rest /= F.q();
        }
        Poly u{std::move(c)};
        if (poly_eval_mod(F, pi_src, u, pi_dst).is_zero()) {
            first = u;
            found = true;
        }
    }
    if (!found) throw InvalidParameters("no root found in equal-degree component");
    std::vector<Poly> roots{first};
    Poly cur = first;
    for (int i = 1; i < d; ++i) {
        cur = poly_powmod(F, cur, F.q(), pi_dst);
        roots.push_back(cur);
    }
    std::sort(roots.begin(), roots.end(), poly_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (int(roots.size()) != d) throw InvalidParameters("unexpected root count in component");
    return roots;
}

} // namespace

std::vector<Automorphism> enumerate_automorphisms(const RingContextPtr& ctx) {
    const FieldSpec& F = ctx->field();
    int r = ctx->r();
    // group component indices by factor degree (factors are sorted by degree)
    std::vector<std::vector<int>> classes;
    for (int k = 0; k < r; ++k) {
        if (k > 0 && ctx->factors()[size_t(k)].degree() == ctx->factors()[size_t(k - 1)].degree())
            classes.back().push_back(k);
        else
            classes.push_back({k});
    }

    // roots[k][l]: roots of pi_k inside K_l, for k, l in the same class
    std::vector<std::vector<std::vector<Poly>>> roots;
    roots.assign(size_t(r), std::vector<std::vector<Poly>>(size_t(r)));
    for (const auto& cls : classes)
        for (int k : cls)
            for (int l : cls)
                roots[size_t(k)][size_t(l)] =
                    roots_in_component(F, ctx->factors()[size_t(k)], ctx->factors()[size_t(l)]);

    // per class: all assignments l -> residue of sigma(x) in K_l
    struct Assignment {
        std::vector<std::pair<int, Poly>> slots; // (component l, residue)
    };
    std::vector<std::vector<Assignment>> per_class;
    for (const auto& cls : classes) {
        std::vector<Assignment> list;
        int d = ctx->factors()[size_t(cls.front())].degree();
        std::vector<int> perm(cls.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            // src(cls[i]) = cls[perm[i]]; choose one root per slot
            std::vector<size_t> choice(cls.size(), 0);
            while (true) {
                Assignment a;
                for (size_t i = 0; i < cls.size(); ++i) {
                    int l = cls[i], src = cls[size_t(perm[i])];
                    a.slots.emplace_back(l, roots[size_t(src)][size_t(l)][choice[i]]);
                }
                list.push_back(std::move(a));
                // mixed-radix increment
                size_t pos = 0;
                while (pos < choice.size()) {
                    if (++choice[pos] < size_t(d)) break;
                    choice[pos] = 0;
                    ++pos;
                }
                if (pos == choice.size()) break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        per_class.push_back(std::move(list));
    }

    uint64_t total = 1;
    for (const auto& list : per_class) {
        total *= list.size();
        if (total > 100000) throw InvalidParameters("automorphism group too large to enumerate");
    }

    std::vector<Automorphism> out;
    out.reserve(size_t(total));
    std::vector<size_t> idx(per_class.size(), 0);
    while (true) {
        std::vector<Poly> residues;
        residues.resize(size_t(r));
        for (size_t c = 0; c < per_class.size(); ++c)
            for (const auto& [l, res] : per_class[c][idx[c]].slots) residues[size_t(l)] = res;
        out.emplace_back(ctx, ctx->crt_inverse(residues));
        size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < per_class[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    std::sort(out.begin(), out.end(), [](const Automorphism& a, const Automorphism& b) {
        return std::lexicographical_compare(
            a.image_of_x().c.begin(), a.image_of_x().c.end(), b.image_of_x().c.begin(),
            b.image_of_x().c.end(),
            [](FieldElement u, FieldElement v) { return u.enc < v.enc; });
    });
    return out;
}

} // namespace skewcyclic
