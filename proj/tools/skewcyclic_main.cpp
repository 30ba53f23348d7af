#include <CLI11.hpp>

#include <iostream>

#include "skewcyclic/jsonio.hpp"

using skewcyclic::njson;

namespace {

// Poly/sigma/element option values may be either grammar text or inline JSON.
njson value_or_json(const std::string& s) {
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && (s[i] == '[' || s[i] == '{')) return njson::parse(s);
    return njson(s);
}

struct CommonArgs {
    uint32_t p = 0, m = 1;
    std::vector<uint32_t> modulus;
    uint32_t n = 0;
    std::string sigma;
    std::vector<std::string> polys;

    void add_field(CLI::App* cmd, bool with_sigma, bool with_polys) {
        cmd->add_option("--p", p, "prime characteristic")->required();
        cmd->add_option("--m", m, "extension degree (default 1)");
        cmd->add_option("--modulus", modulus,
                        "modulus coefficients, low to high (default: smallest irreducible)");
        cmd->add_option("--n", n, "code length")->required();
        if (with_sigma)
            cmd->add_option("--sigma", sigma, "sigma(x), e.g. \"x^2\" or \"[0,0,1,0,0]\"")
                ->required();
        if (with_polys)
            cmd->add_option("--poly", polys, "skew polynomial (text or JSON); repeatable")
                ->required();
    }

    njson job(const std::string& command) const {
        njson j;
        j["command"] = command;
        njson f;
        f["p"] = p;
        f["m"] = m;
        if (!modulus.empty()) f["modulus"] = modulus;
        j["field"] = f;
        j["n"] = n;
        if (!sigma.empty()) j["sigma"] = value_or_json(sigma);
        if (!polys.empty()) {
            njson arr = njson::array();
            for (const auto& s : polys) arr.push_back(value_or_json(s));
            j["polys"] = arr;
        }
        return j;
    }
};

int run_job(const njson& job, bool json_out) {
    njson out = skewcyclic::execute(job);
    if (json_out)
        std::cout << out.dump() << "\n";
    else
        std::cout << skewcyclic::render_pretty(job, out);
    return 0;
}

int run_examples(const std::string& action, const std::string& id, bool json_out) {
    const auto& table = skewcyclic::fixtures();
    if (action == "list") {
        for (const auto& fx : table) std::cout << fx.id << "  (" << fx.provenance << ")\n";
        return 0;
    }
    if (action != "run") throw skewcyclic::UsageError("examples action must be list or run");
    int failures = 0, ran = 0;
    for (const auto& fx : table) {
        if (id != "all" && id != fx.id) continue;
        ++ran;
        std::string verdict = "PASS", detail;
        try {
            njson out = skewcyclic::execute(njson::parse(fx.job));
            std::string why;
            if (!skewcyclic::json_matches(njson::parse(fx.expected), out, why)) {
                verdict = "FAIL";
                detail = why;
                ++failures;
            }
        } catch (const skewcyclic::Error& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        std::cout << verdict << "  " << fx.id;
        if (!detail.empty()) std::cout << "  -- " << detail;
        std::cout << "\n";
    }
    if (ran == 0) throw skewcyclic::UsageError("unknown fixture id: " + id);
    std::cout << (failures ? "FAILED " : "OK ") << ran - failures << "/" << ran << " fixtures\n";
    (void)json_out;
    return failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra for sigma-cyclic convolutional codes"};
    app.require_subcommand(1);
    app.fallthrough(true);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable JSON output");

    CommonArgs autos_a, reduce_a, gen_a, circ_a, control_a, dual_a, dist_a, classify_a;

    auto* c_autos = app.add_subcommand("autos", "list all F-algebra automorphisms of F[x]/(x^n-1)");
    autos_a.add_field(c_autos, false, false);

    auto* c_reduce = app.add_subcommand("reduce", "reduce a family and report the ideal generator");
    reduce_a.add_field(c_reduce, true, true);

    auto* c_gen = app.add_subcommand("generator", "full code report from generating polynomials");
    gen_a.add_field(c_gen, true, true);

    auto* c_circ = app.add_subcommand("circulant", "print M_g, P_sigma or M^sigma(g)");
    circ_a.add_field(c_circ, true, false);
    std::string what = "msigma", element, cpoly;
    c_circ->add_option("--what", what, "mg | psigma | msigma (default msigma)");
    c_circ->add_option("--element", element, "ring element for --what mg");
    c_circ->add_option("--poly", cpoly, "skew polynomial for --what msigma");

    auto* c_control = app.add_subcommand("control", "control polynomial and control matrix");
    control_a.add_field(c_control, true, true);

    auto* c_dual = app.add_subcommand("dual", "dual code report (over sigma_hat)");
    dual_a.add_field(c_dual, true, true);

    auto* c_dist = app.add_subcommand("distance", "exact free distance");
    dist_a.add_field(c_dist, true, true);

    auto* c_heller = app.add_subcommand("heller", "Heller upper bound on the free distance");
    int64_t hn = 0, hk = 0, hdelta = 0, hmem = 0;
    uint64_t hq = 0;
    int himax = 0;
    c_heller->add_option("--n", hn, "length")->required();
    c_heller->add_option("--k", hk, "dimension")->required();
    c_heller->add_option("--delta", hdelta, "complexity")->required();
    c_heller->add_option("--mem", hmem, "memory (largest row degree)")->required();
    c_heller->add_option("--q", hq, "field size")->required();
    c_heller->add_option("--imax", himax, "horizon (default 20 or SKEWCYCLIC_IMAX)");

    auto* c_classify = app.add_subcommand("classify", "block-code classification");
    classify_a.add_field(c_classify, true, true);

    auto* c_examples = app.add_subcommand("examples", "replay the bundled example fixtures");
    std::string action, fixture_id = "all";
    c_examples->add_option("action", action, "list | run")->required();
    c_examples->add_option("id", fixture_id, "fixture id or \"all\" (default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (c_autos->parsed()) return run_job(autos_a.job("autos"), json_out);
        if (c_reduce->parsed()) return run_job(reduce_a.job("reduce"), json_out);
        if (c_gen->parsed()) return run_job(gen_a.job("generator"), json_out);
        if (c_circ->parsed()) {
            njson j = circ_a.job("circulant");
            j["what"] = what;
            if (!element.empty()) j["element"] = value_or_json(element);
            if (!cpoly.empty()) j["poly"] = value_or_json(cpoly);
            return run_job(j, json_out);
        }
        if (c_control->parsed()) return run_job(control_a.job("control"), json_out);
        if (c_dual->parsed()) return run_job(dual_a.job("dual"), json_out);
        if (c_dist->parsed()) return run_job(dist_a.job("distance"), json_out);
        if (c_heller->parsed()) {
            njson j;
            j["command"] = "heller";
            j["n"] = hn;
            j["k"] = hk;
            j["delta"] = hdelta;
            j["mem"] = hmem;
            j["q"] = hq;
            if (himax > 0) j["imax"] = himax;
            return run_job(j, json_out);
        }
        if (c_classify->parsed()) return run_job(classify_a.job("classify"), json_out);
        if (c_examples->parsed()) return run_examples(action, fixture_id, json_out);
    } catch (const skewcyclic::UsageError& e) {
        njson err;
        err["error"] = e.name();
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const skewcyclic::Error& e) {
        njson err;
        err["error"] = e.name();
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const njson::exception& e) {
        njson err;
        err["error"] = "ParseError";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 2;
}
