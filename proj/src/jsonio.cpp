#include "skewcyclic/jsonio.hpp"

#include <cstdlib>

namespace skewcyclic {

njson poly_to_json(const Poly& p) {
    njson a = njson::array();
    for (auto c : p.c) a.push_back(c.enc);
    return a;
}

Poly poly_from_json(const FieldSpec& F, const njson& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of encodings");
    std::vector<FieldElement> c;
    for (const auto& v : j) c.push_back(F.from_enc(v.get<uint64_t>()));
    return Poly{std::move(c)};
}

njson ring_to_json(const RingElement& a) {
    njson out = njson::array();
    for (auto c : a.c) out.push_back(c.enc);
    return out;
}

RingElement ring_from_json(const RingContext& R, const njson& j) {
    if (!j.is_array()) throw ParseError("ring element must be an array of encodings");
    std::vector<uint32_t> encs;
    for (const auto& v : j) encs.push_back(v.get<uint32_t>());
    return R.from_encs(encs);
}

njson skew_to_json(const SkewPoly& f) {
    njson out = njson::array();
    for (const auto& c : f.zc) out.push_back(ring_to_json(c));
    return out;
}

njson skew_to_crt_json(const SkewPoly& f) {
    const RingContext& R = f.ctx->ring();
    njson out = njson::array();
    for (const auto& c : f.zc) {
        njson row = njson::array();
        for (const Poly& res : R.crt_forward(c)) row.push_back(poly_to_json(res));
        out.push_back(row);
    }
    return out;
}

SkewPoly skew_from_json(SkewContextPtr ctx, const njson& j) {
    const RingContext& R = ctx->ring();
    if (j.is_string()) return parse_skew_poly(j.get<std::string>(), ctx);
    if (j.is_object() && j.contains("crt")) {
        const njson& levels = j.at("crt");
        std::vector<RingElement> zc;
        for (const auto& level : levels) {
            if (int(level.size()) != R.r())
                throw ParseError("crt level must list one residue per factor");
            std::vector<Poly> residues;
            for (const auto& res : level) residues.push_back(poly_from_json(R.field(), res));
            zc.push_back(R.crt_inverse(residues));
        }
        return skew_from_coeffs(std::move(ctx), std::move(zc));
    }
    if (j.is_array()) {
        std::vector<RingElement> zc;
        for (const auto& level : j) zc.push_back(ring_from_json(R, level));
        return skew_from_coeffs(std::move(ctx), std::move(zc));
    }
    throw ParseError("skew polynomial must be a string, dense array, or {\"crt\": ...}");
}

njson matrix_to_json(const PolyMatrix& m) {
    njson rows = njson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        njson row = njson::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

PolyMatrix matrix_from_json(FieldSpecPtr F, const njson& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    size_t rows = j.size(), cols = j.at(0).size();
    PolyMatrix m(F, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw ParseError("ragged matrix rows");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = poly_from_json(*F, j.at(i).at(c));
    }
    return m;
}

RingContextPtr ring_from_job(const njson& job) {
    if (!job.contains("field") || !job.contains("n"))
        throw UsageError("job needs \"field\" and \"n\"");
    const njson& f = job.at("field");
    std::optional<std::vector<uint32_t>> modulus;
    if (f.contains("modulus")) modulus = f.at("modulus").get<std::vector<uint32_t>>();
    auto spec = FieldSpec::build(f.at("p").get<uint32_t>(), f.at("m").get<uint32_t>(), modulus);
    return RingContext::build(spec, job.at("n").get<uint32_t>());
}

SkewContextPtr skew_context_from_job(const njson& job) {
    RingContextPtr ring = ring_from_job(job);
    if (!job.contains("sigma")) throw UsageError("job needs \"sigma\"");
    const njson& s = job.at("sigma");
    RingElement image = ring->zero();
    if (s.is_string()) {
        auto tmp = SkewContext::build(ring, Automorphism(ring, ring->x()));
        image = parse_ring_element(s.get<std::string>(), tmp);
    } else {
        image = ring_from_json(*ring, s);
    }
    return SkewContext::build(ring, Automorphism(ring, image));
}

namespace {

std::vector<SkewPoly> polys_from_job(const SkewContextPtr& ctx, const njson& job) {
    if (!job.contains("polys")) throw UsageError("job needs \"polys\"");
    std::vector<SkewPoly> out;
    for (const auto& p : job.at("polys")) out.push_back(skew_from_json(ctx, p));
    return out;
}

int heller_imax(const njson& job) {
    if (job.contains("imax")) return job.at("imax").get<int>();
    if (const char* env = std::getenv("SKEWCYCLIC_IMAX")) return std::atoi(env);
    return 20;
}

njson cmd_autos(const njson& job) {
    RingContextPtr ring = ring_from_job(job);
    auto autos = enumerate_automorphisms(ring);
    njson images = njson::array();
    for (const auto& s : autos) images.push_back(ring_to_json(s.image_of_x()));
    njson out;
    out["count"] = autos.size();
    out["images"] = images;
    njson factors = njson::array();
    for (const Poly& pi : ring->factors()) factors.push_back(poly_to_json(pi));
    out["factors"] = factors;
    return out;
}

njson reduction_to_json(const ReductionOutcome& red) {
    njson out;
    njson family = njson::array();
    for (const auto& f : red.reduced_family) family.push_back(skew_to_json(f));
    out["family"] = family;
    njson comps = njson::array();
    for (int k : red.family_components) comps.push_back(k + 1);
    out["components"] = comps;
    out["is_principal"] = red.is_principal;
    out["is_delay_free"] = red.is_delay_free;
    if (red.generator && red.is_principal) {
        out["generator"] = skew_to_json(*red.generator);
        out["generator_crt"] = skew_to_crt_json(*red.generator);
        if (!red.generator->is_zero()) {
            njson supp = njson::array();
            for (int k : support(*red.generator)) supp.push_back(k + 1);
            out["support"] = supp;
            out["pi"] = poly_to_json(pi_of(*red.generator));
            out["kappa"] = pi_of(*red.generator).degree();
        } else {
            out["support"] = njson::array();
            out["pi"] = poly_to_json(Poly::one());
            out["kappa"] = 0;
        }
    } else {
        out["generator"] = nullptr;
    }
    return out;
}

njson cmd_reduce(const njson& job) {
    auto ctx = skew_context_from_job(job);
    return reduction_to_json(principal_generator(polys_from_job(ctx, job)));
}

njson code_report(const ConvCode& code, int imax) {
    const RingContext& R = code.ctx->ring();
    njson out;
    out["n"] = R.n();
    out["q"] = R.field().q();
    out["sigma"] = ring_to_json(code.ctx->sigma().image_of_x());
    out["generator"] = skew_to_json(code.generator);
    out["kappa"] = code.kappa;
    out["complexity"] = code.complexity;
    out["is_code"] = code.is_code;
    out["generator_matrix"] = matrix_to_json(code.generator_matrix);
    out["minimal_generator_matrix"] = matrix_to_json(code.minimal_generator_matrix);
    if (code.is_code) {
        DualityReport rep = control_polynomial(code);
        out["control_poly"] = skew_to_json(rep.control_poly);
        out["dual_generator"] = skew_to_json(rep.dual_generator);
    } else {
        out["control_poly"] = nullptr;
        out["dual_generator"] = nullptr;
    }
    if (code.is_code && code.kappa >= 1) {
        out["d_free"] = free_distance(code);
        out["heller_bound"] = heller_bound(R.n(), code.kappa, code.complexity,
                                           memory(code), R.field().q(), imax);
    } else {
        out["d_free"] = nullptr;
        out["heller_bound"] = nullptr;
    }
    out["is_block"] = classify(code).is_block;
    return out;
}

njson cmd_generator(const njson& job) {
    auto ctx = skew_context_from_job(job);
    ConvCode code = code_from_generator(ctx, polys_from_job(ctx, job));
    return code_report(code, heller_imax(job));
}

njson cmd_circulant(const njson& job) {
    auto ctx = skew_context_from_job(job);
    std::string what = job.value("what", std::string("msigma"));
    njson out;
    PolyMatrix m;
    if (what == "mg") {
        if (!job.contains("element")) throw UsageError("circulant mg needs \"element\"");
        RingElement a = job.at("element").is_string()
                            ? parse_ring_element(job.at("element").get<std::string>(), ctx)
                            : ring_from_json(ctx->ring(), job.at("element"));
        m = classical_circulant(ctx->ring(), a);
    } else if (what == "psigma") {
        m = p_sigma(ctx->sigma());
    } else if (what == "msigma") {
        if (!job.contains("poly")) throw UsageError("circulant msigma needs \"poly\"");
        m = sigma_circulant(skew_from_json(ctx, job.at("poly")));
    } else {
        throw UsageError("circulant \"what\" must be mg, psigma or msigma");
    }
    out["what"] = what;
    out["matrix"] = matrix_to_json(m);
    out["rank"] = rank(m);
    return out;
}

njson cmd_control(const njson& job) {
    auto ctx = skew_context_from_job(job);
    ConvCode code = code_from_generator(ctx, polys_from_job(ctx, job));
    DualityReport rep = control_polynomial(code);
    njson out;
    out["rank"] = code.kappa;
    out["dual_dimension"] = int(ctx->ring().n()) - code.kappa;
    out["control_poly"] = skew_to_json(rep.control_poly);
    out["dual_generator"] = skew_to_json(rep.dual_generator);
    out["dual_control"] = skew_to_json(rep.dual_control);
    out["control_matrix"] = matrix_to_json(rep.control_matrix);
    return out;
}

njson cmd_dual(const njson& job) {
    auto ctx = skew_context_from_job(job);
    ConvCode code = code_from_generator(ctx, polys_from_job(ctx, job));
    ConvCode dual = dual_code(code);
    njson out = code_report(dual, heller_imax(job));
    out["sigma_hat"] = ring_to_json(dual.ctx->sigma().image_of_x());
    return out;
}

njson cmd_distance(const njson& job) {
    auto ctx = skew_context_from_job(job);
    ConvCode code = code_from_generator(ctx, polys_from_job(ctx, job));
    njson out;
    out["d_free"] = free_distance(code);
    return out;
}

njson cmd_heller(const njson& job) {
    njson out;
    out["bound"] = heller_bound(job.at("n").get<int64_t>(), job.at("k").get<int64_t>(),
                                job.at("delta").get<int64_t>(), job.at("mem").get<int64_t>(),
                                job.at("q").get<uint64_t>(), heller_imax(job));
    return out;
}

njson cmd_classify(const njson& job) {
    auto ctx = skew_context_from_job(job);
    ConvCode code = code_from_generator(ctx, polys_from_job(ctx, job));
    CodeClassification c = classify(code);
    njson out;
    out["is_block"] = c.is_block;
    out["sigma_forces_block"] = c.sigma_forces_block;
    out["complexity"] = code.complexity;
    return out;
}

} // namespace

njson execute(const njson& job) {
    if (!job.contains("command")) throw UsageError("job needs \"command\"");
    std::string cmd = job.at("command").get<std::string>();
    if (cmd == "autos") return cmd_autos(job);
    if (cmd == "reduce") return cmd_reduce(job);
    if (cmd == "generator") return cmd_generator(job);
    if (cmd == "circulant") return cmd_circulant(job);
    if (cmd == "control") return cmd_control(job);
    if (cmd == "dual") return cmd_dual(job);
    if (cmd == "distance") return cmd_distance(job);
    if (cmd == "heller") return cmd_heller(job);
    if (cmd == "classify") return cmd_classify(job);
    throw UsageError("unknown command: " + cmd);
}

// ---------------------------------------------------------------------------

namespace {

// Rebuild enough context to pretty-print polynomial payloads.
struct PrettyCtx {
    SkewContextPtr ctx;
    FieldSpecPtr F;
};

PrettyCtx pretty_ctx(const njson& job) {
    PrettyCtx p;
    try {
        if (job.contains("sigma")) {
            p.ctx = skew_context_from_job(job);
            p.F = p.ctx->ring().field_ptr();
        } else if (job.contains("field")) {
            const njson& f = job.at("field");
            std::optional<std::vector<uint32_t>> modulus;
            if (f.contains("modulus")) modulus = f.at("modulus").get<std::vector<uint32_t>>();
            p.F = FieldSpec::build(f.at("p").get<uint32_t>(), f.at("m").get<uint32_t>(), modulus);
        }
    } catch (const Error&) {
    }
    return p;
}

std::string pretty_value(const PrettyCtx& p, const std::string& key, const njson& v) {
    if (v.is_null()) return "-";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_number()) return v.dump();
    bool matrix_like = key.find("matrix") != std::string::npos || key == "images" ||
                       key == "family" || key == "factors";
    if (p.ctx && !matrix_like && v.is_array()) {
        try {
            return format_skew_poly(skew_from_json(p.ctx, v));
        } catch (...) {
        }
    }
    return v.dump();
}

} // namespace

std::string render_pretty(const njson& job, const njson& out) {
    PrettyCtx p = pretty_ctx(job);
    std::string s;
    for (auto it = out.begin(); it != out.end(); ++it) {
        const std::string& key = it.key();
        const njson& v = it.value();
        if (v.is_array() && p.F &&
            (key.find("matrix") != std::string::npos || key == "images" || key == "family" ||
             key == "factors")) {
            s += key + ":\n";
            try {
                if (key == "images" || key == "factors") {
                    for (const auto& row : v) {
                        Poly q = poly_from_json(*p.F, row);
                        s += "  " + format_poly_x(*p.F, q) + "\n";
                    }
                } else if (key == "family" && p.ctx) {
                    for (const auto& f : v)
                        s += "  " + format_skew_poly(skew_from_json(p.ctx, f)) + "\n";
                } else {
                    PolyMatrix m = matrix_from_json(p.F, v);
                    std::string fm = format_matrix(m);
                    size_t pos = 0;
                    while (pos < fm.size()) {
                        size_t e = fm.find('\n', pos);
                        if (e == std::string::npos) e = fm.size();
                        s += "  " + fm.substr(pos, e - pos) + "\n";
                        pos = e + 1;
                    }
                }
            } catch (...) {
                s += "  " + v.dump() + "\n";
            }
            continue;
        }
        s += key + ": " + pretty_value(p, key, v) + "\n";
    }
    return s;
}

bool json_matches(const njson& expected, const njson& actual, std::string& why) {
    if (expected.is_object()) {
        if (!actual.is_object()) {
            why = "expected an object";
            return false;
        }
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!actual.contains(it.key())) {
                why = "missing key \"" + it.key() + "\"";
                return false;
            }
            std::string inner;
            if (!json_matches(it.value(), actual.at(it.key()), inner)) {
                why = "\"" + it.key() + "\": " + inner;
                return false;
            }
        }
        return true;
    }
    if (expected != actual) {
        why = "expected " + expected.dump() + ", got " + actual.dump();
        return false;
    }
    return true;
}

} // namespace skewcyclic
