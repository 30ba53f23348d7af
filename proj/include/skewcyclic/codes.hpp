#ifndef SKEWCYCLIC_CODES_HPP
#define SKEWCYCLIC_CODES_HPP

#include "skewcyclic/circulant.hpp"

namespace skewcyclic {

// A sigma-cyclic convolutional code, built from the unique reduced normalized
// generator of its ideal.  kappa = deg pi_(g) is the dimension; the generator
// matrix is the first kappa rows of the sigma-circulant of g.
struct ConvCode {
    SkewContextPtr ctx;
    SkewPoly generator;
    std::vector<int> support; // T_g, 0-based
    Poly pi;                  // pi_(generator); 1 for the zero ideal
    int kappa = 0;
    PolyMatrix circulant;     // full n x n sigma-circulant of the generator
    PolyMatrix generator_matrix;
    PolyMatrix minimal_generator_matrix;
    int complexity = 0;
    bool is_code = false;          // the circulant is basic
    bool delay_free_witness = true; // support(g) == support(g_0)
};

struct DualityReport {
    SkewPoly control_poly;   // h in A[z;sigma], right annihilator generator
    SkewPoly dual_generator; // h' = hat(h) in A[z;sigma_hat]
    SkewPoly dual_control;   // g' = hat(g) in A[z;sigma_hat]
    PolyMatrix control_matrix; // M^sigma(h)
};

struct CodeClassification {
    bool is_block = false;
    bool sigma_forces_block = false;
};

struct SmallestModuleResult {
    SkewPoly generator; // reduced normalized generator of <p(v)>
    PolyMatrix module_matrix;
    bool is_code = false;
};

// Runs the principal-generator algorithm on fs and assembles the code data.
// Throws NotPrincipal / NotDelayFree when the generated ideal fails either
// property (delay-freeness judged by the Smith classification of the
// circulant row module).
ConvCode code_from_generator(SkewContextPtr ctx, const std::vector<SkewPoly>& fs);

const PolyMatrix& minimal_generator_matrix(const ConvCode& code); // requires is_code

// Control polynomial via the right kernel of M^sigma(g), transported to
// A[z;sigma_hat] and reduced there.
DualityReport control_polynomial(const ConvCode& code);

// The dual code, generated by h' over sigma_hat.
ConvCode dual_code(const ConvCode& code);

// For reduced g: whether M^sigma(g) is basic.
bool is_basic_poly_test(const SkewPoly& g);

// Exact free distance via a lowest-weight search on the state graph of the
// minimal encoder in controller canonical form.
int free_distance(const ConvCode& code, uint64_t state_bound = 1000000);

// Largest row degree of the minimal generator matrix.
int memory(const ConvCode& code);

// min over i = 1..i_max of floor(n(m+i) q^(k(m+i)-delta-1) (q-1) / (q^(k(m+i)-delta) - 1))
int64_t heller_bound(int64_t n, int64_t k, int64_t delta, int64_t mem, uint64_t q, int i_max);

CodeClassification classify(const ConvCode& code);

// The smallest sigma-cyclic module containing v: generating matrix of
// v(<p(v)>) plus whether that module is a code (basic).
SmallestModuleResult smallest_cyclic_module(SkewContextPtr ctx, const std::vector<Poly>& v);

} // namespace skewcyclic

#endif
