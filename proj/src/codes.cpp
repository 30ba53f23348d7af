#include "skewcyclic/codes.hpp"

#include <algorithm>
#include <queue>

namespace skewcyclic {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw InvalidParameters(std::string("internal check failed: ") + what);
}

// max degree over the kappa x kappa minors; used as the Forney cross-check
// for the complexity formula.  Skipped when the minor count explodes.
void check_minor_degree(const PolyMatrix& g, int kappa, int delta) {
    size_t n = g.cols();
    if (kappa == 0) return;
    double combos = 1;
    for (int i = 0; i < kappa; ++i) combos *= double(n - size_t(i)) / double(i + 1);
    if (combos > 3000) return;
    std::vector<size_t> idx(static_cast<size_t>(kappa));
    for (int i = 0; i < kappa; ++i) idx[size_t(i)] = size_t(i);
    int best = -1;
    while (true) {
        PolyMatrix sub(g.field_ptr(), size_t(kappa), size_t(kappa));
        for (int i = 0; i < kappa; ++i)
            for (int j = 0; j < kappa; ++j) sub.at(size_t(i), size_t(j)) = g.at(size_t(i), idx[size_t(j)]);
        best = std::max(best, determinant(sub).degree());
        // next combination
        int pos = kappa - 1;
        while (pos >= 0 && idx[size_t(pos)] == n - size_t(kappa - pos)) --pos;
        if (pos < 0) break;
        ++idx[size_t(pos)];
        for (int i = pos + 1; i < kappa; ++i) idx[size_t(i)] = idx[size_t(i - 1)] + 1;
    }
    internal_check(best == delta, "complexity equals the largest kappa-minor degree");
}

} // namespace

ConvCode code_from_generator(SkewContextPtr ctx, const std::vector<SkewPoly>& fs) {
    const RingContext& R = ctx->ring();
    ReductionOutcome out = principal_generator(fs);
    if (!out.is_principal) throw NotPrincipal("the generated left ideal is not principal");

    ConvCode code;
    code.ctx = ctx;
    code.generator = *out.generator;
    code.circulant = sigma_circulant(code.generator);

    // Delay-freeness ground truth: Smith classification of the row module of
    // the full circulant (the stacked x-power multiples of g).
    ModuleClassification cls = module_classify(code.circulant);
    code.delay_free_witness = out.is_delay_free;
    if (!cls.delay_free) throw NotDelayFree("the generated ideal is not delay-free");
    internal_check(cls.delay_free == out.is_delay_free,
                   "witness and Smith classification agree on delay-freeness");

    code.support = support(code.generator);
    code.pi = code.generator.is_zero() ? Poly::one() : pi_of(code.generator);
    code.kappa = std::max(code.pi.degree(), 0);
    code.generator_matrix = code.circulant.first_rows(size_t(code.kappa));
    code.is_code = is_basic(code.circulant);

    internal_check(rank(code.circulant) == code.kappa, "rank M^sigma(g) = deg pi_(g)");

    // minimal generator matrix: per component, the first deg pi_k rows of the
    // circulant of that component
    PolyMatrix minimal(R.field_ptr(), 0, R.n());
    code.complexity = 0;
    for (int k : code.support) {
        SkewPoly comp = component(code.generator, k);
        int dk = R.factors()[size_t(k)].degree();
        minimal = mat_stack(minimal, sigma_circulant(comp).first_rows(size_t(dk)));
        code.complexity += dk * comp.deg_z();
    }
    code.minimal_generator_matrix = minimal;

    internal_check(code.kappa == int(minimal.rows()), "minimal matrix has kappa rows");
    if (code.kappa > 0) {
        internal_check(is_minimal(code.minimal_generator_matrix), "minimal matrix minimality");
        internal_check(module_equal(code.minimal_generator_matrix, code.generator_matrix),
                       "minimal matrix spans the code");
        int forney = 0;
        for (size_t i = 0; i < minimal.rows(); ++i) {
            int d = -1;
            for (size_t j = 0; j < minimal.cols(); ++j) d = std::max(d, minimal.at(i, j).degree());
            forney += std::max(d, 0);
        }
        internal_check(forney == code.complexity, "complexity equals the row-degree sum");
        check_minor_degree(code.minimal_generator_matrix, code.kappa, code.complexity);
    }
    return code;
}

const PolyMatrix& minimal_generator_matrix(const ConvCode& code) {
    if (!code.is_code) throw NotACode("module is not basic");
    return code.minimal_generator_matrix;
}

DualityReport control_polynomial(const ConvCode& code) {
    if (!code.is_code) throw NotACode("module is not basic");
    const RingContext& R = code.ctx->ring();
    auto hat_ctx = SkewContext::build(code.ctx->ring_ptr(), sigma_hat(code.ctx->sigma()));

    DualityReport rep;
    PolyMatrix kernel = right_kernel_basis(code.circulant);
    if (kernel.cols() == 0) {
        rep.dual_generator = skew_zero(hat_ctx);
    } else {
        std::vector<SkewPoly> fs;
        for (size_t c = 0; c < kernel.cols(); ++c) {
            std::vector<Poly> w(R.n());
            for (size_t i = 0; i < R.n(); ++i) w[i] = kernel.at(i, c);
            fs.push_back(vec_to_poly(hat_ctx, w));
        }
        ReductionOutcome out = principal_generator(fs);
        if (!out.is_principal)
            throw InternalNotPrincipal("annihilator ideal reduced to several generators");
        rep.dual_generator = *out.generator;
    }
    rep.control_poly = hat_skew(rep.dual_generator); // back in A[z;sigma]
    rep.dual_control = hat_skew(code.generator);
    rep.control_matrix = sigma_circulant(rep.control_poly);

    // annihilation identities
    internal_check(skew_mul(code.generator, rep.control_poly).is_zero(), "g h = 0");
    internal_check(mat_mul(code.circulant, rep.control_matrix).is_zero(),
                   "M^sigma(g) M^sigma(h) = 0");
    internal_check(mat_mul(rep.control_matrix, code.circulant).is_zero(),
                   "M^sigma(h) M^sigma(g) = 0");
    internal_check(module_equal(left_kernel_basis(rep.control_matrix), code.generator_matrix),
                   "ker M^sigma(h) = im M^sigma(g)");
    return rep;
}

ConvCode dual_code(const ConvCode& code) {
    if (!code.is_code) throw NotACode("module is not basic");
    DualityReport rep = control_polynomial(code);
    ConvCode dual = code_from_generator(rep.dual_generator.ctx, {rep.dual_generator});
    internal_check(dual.kappa == int(code.ctx->ring().n()) - code.kappa,
                   "dual dimension is n - kappa");
    return dual;
}

bool is_basic_poly_test(const SkewPoly& g) {
    if (g.is_zero()) throw ZeroPolynomial("basicness test needs a nonzero polynomial");
    if (!is_reduced(g)) throw NotReduced("polynomial is not left reduced");
    return is_basic(sigma_circulant(g));
}

// ---------------------------------------------------------------------------
// Free distance
// ---------------------------------------------------------------------------

int free_distance(const ConvCode& code, uint64_t state_bound) {
    if (!code.is_code) throw NotACode("module is not basic");
    if (code.kappa < 1) throw NotACode("free distance needs dimension >= 1");
    const FieldSpec& F = code.ctx->ring().field();
    const PolyMatrix& G = code.minimal_generator_matrix;
    const size_t n = G.cols();
    const int kappa = code.kappa;
    const uint64_t q = F.q();

    // row coefficient vectors and row degrees
    std::vector<int> rowdeg(static_cast<size_t>(kappa), 0);
    std::vector<std::vector<std::vector<FieldElement>>> rc(static_cast<size_t>(kappa));
    for (int j = 0; j < kappa; ++j) {
        int d = 0;
        for (size_t c = 0; c < n; ++c) d = std::max(d, G.at(size_t(j), c).degree());
        rowdeg[size_t(j)] = d;
        rc[size_t(j)].assign(size_t(d) + 1, std::vector<FieldElement>(n, FieldElement{0}));
        for (size_t c = 0; c < n; ++c)
            for (int i = 0; i <= d; ++i) rc[size_t(j)][size_t(i)][c] = G.at(size_t(j), c).coeff(i);
    }
    int delta = 0;
    for (int d : rowdeg) delta += d;
    internal_check(delta == code.complexity, "memory cells match the complexity");

    uint64_t states = 1;
    for (int i = 0; i < delta; ++i) {
        states *= q;
        if (states > state_bound) throw StateSpaceTooLarge("q^delta exceeds the configured bound");
    }
    uint64_t inputs = 1;
    for (int i = 0; i < kappa; ++i) {
        inputs *= q;
        if (inputs > state_bound) throw StateSpaceTooLarge("q^kappa exceeds the configured bound");
    }

    std::vector<size_t> offset(static_cast<size_t>(kappa), 0);
    {
        size_t off = 0;
        for (int j = 0; j < kappa; ++j) {
            offset[size_t(j)] = off;
            off += size_t(rowdeg[size_t(j)]);
        }
    }

    std::vector<uint32_t> digits(static_cast<size_t>(delta)), ndigits(static_cast<size_t>(delta)),
        u(static_cast<size_t>(kappa));
    std::vector<FieldElement> y(n);
    // step: returns (next_state, output_weight)
    auto step = [&](uint64_t s, uint64_t uidx) -> std::pair<uint64_t, uint32_t> {
        for (int i = 0; i < delta; ++i) {
            digits[size_t(i)] = uint32_t(s % q);
            s /= q;
        }
        uint64_t ui = uidx;
        for (int j = 0; j < kappa; ++j) {
            u[size_t(j)] = uint32_t(ui % q);
            ui /= q;
        }
        std::fill(y.begin(), y.end(), FieldElement{0});
        for (int j = 0; j < kappa; ++j) {
            FieldElement uj{u[size_t(j)]};
            if (uj.enc) {
                const auto& g0 = rc[size_t(j)][0];
                for (size_t c = 0; c < n; ++c) y[c] = F.add(y[c], F.mul(uj, g0[c]));
            }
            for (int i = 1; i <= rowdeg[size_t(j)]; ++i) {
                FieldElement mji{digits[offset[size_t(j)] + size_t(i) - 1]};
                if (!mji.enc) continue;
                const auto& gi = rc[size_t(j)][size_t(i)];
                for (size_t c = 0; c < n; ++c) y[c] = F.add(y[c], F.mul(mji, gi[c]));
            }
        }
        uint32_t w = 0;
        for (size_t c = 0; c < n; ++c)
            if (y[c].enc) ++w;
        // shift the memory of each row
        for (int j = 0; j < kappa; ++j) {
            for (int i = rowdeg[size_t(j)] - 1; i >= 1; --i)
                ndigits[offset[size_t(j)] + size_t(i)] = digits[offset[size_t(j)] + size_t(i) - 1];
            if (rowdeg[size_t(j)] > 0) ndigits[offset[size_t(j)]] = u[size_t(j)];
        }
        uint64_t ns = 0;
        for (int i = delta - 1; i >= 0; --i) ns = ns * q + ndigits[size_t(i)];
        return {ns, w};
    };

    const uint32_t INF = 0xffffffffu;
    std::vector<uint32_t> dist(static_cast<size_t>(states), INF);
    uint32_t best = INF;
    using QE = std::pair<uint32_t, uint64_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;

    for (uint64_t uidx = 1; uidx < inputs; ++uidx) {
        auto [ns, w] = step(0, uidx);
        if (ns == 0) {
            best = std::min(best, w);
        } else if (w < dist[size_t(ns)]) {
            dist[size_t(ns)] = w;
            pq.push({w, ns});
        }
    }
    while (!pq.empty()) {
        auto [d, s] = pq.top();
        pq.pop();
        if (d != dist[size_t(s)] || d >= best) continue;
        for (uint64_t uidx = 0; uidx < inputs; ++uidx) {
            auto [ns, w] = step(s, uidx);
            uint32_t nd = d + w;
            if (ns == 0) {
                best = std::min(best, nd);
            } else if (nd < dist[size_t(ns)]) {
                dist[size_t(ns)] = nd;
                pq.push({nd, ns});
            }
        }
    }
    internal_check(best != INF && best > 0, "free distance is positive and finite");
    return int(best);
}

int memory(const ConvCode& code) {
    int mem = 0;
    const PolyMatrix& G = code.minimal_generator_matrix;
    for (size_t i = 0; i < G.rows(); ++i)
        for (size_t j = 0; j < G.cols(); ++j) mem = std::max(mem, G.at(i, j).degree());
    return mem;
}

int64_t heller_bound(int64_t n, int64_t k, int64_t delta, int64_t mem, uint64_t q, int i_max) {
    if (n < 1 || k < 1 || delta < 0 || mem < 0 || q < 2 || i_max < 1)
        throw InvalidParameters("bad Heller bound parameters");
    if (k * (mem + 1) <= delta)
        throw InvalidParameters("k(m+i) must exceed delta for all evaluated i");
    using u128 = unsigned __int128;
    const u128 LIMIT = (u128(1) << 120);
    bool have = false;
    u128 best = 0;
    for (int i = 1; i <= i_max; ++i) {
        int64_t e = k * (mem + i) - delta;
        u128 qe = 1;
        bool overflow = false;
        for (int64_t t = 0; t < e; ++t) {
            qe *= q;
            if (qe > LIMIT) {
                overflow = true;
                break;
            }
        }
        if (overflow) continue; // the minimand is astronomically large here
        u128 num = u128(uint64_t(n * (mem + i))) * (qe / q) * (q - 1);
        u128 den = qe - 1;
        u128 val = num / den;
        if (!have || val < best) {
            best = val;
            have = true;
        }
    }
    if (!have) throw InvalidParameters("Heller bound overflow for every horizon");
    return int64_t(best);
}

CodeClassification classify(const ConvCode& code) {
    CodeClassification c;
    c.is_block = code.complexity == 0;
    c.sigma_forces_block = code.ctx->sigma().fixes_all_components();
    return c;
}

SmallestModuleResult smallest_cyclic_module(SkewContextPtr ctx, const std::vector<Poly>& v) {
    bool zero = true;
    for (const Poly& p : v)
        if (!p.is_zero()) zero = false;
    if (zero) throw ZeroPolynomial("the zero word spans no module");
    SkewPoly g = vec_to_poly(ctx, v);
    ReductionOutcome out = principal_generator({g});
    internal_check(out.is_principal, "a single generator always yields a principal ideal");
    SmallestModuleResult res;
    res.generator = *out.generator;
    PolyMatrix full = sigma_circulant(res.generator);
    res.module_matrix = full.first_rows(size_t(std::max(pi_of(res.generator).degree(), 0)));
    res.is_code = is_basic(full);
    return res;
}

} // namespace skewcyclic
