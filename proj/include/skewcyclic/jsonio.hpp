#ifndef SKEWCYCLIC_JSONIO_HPP
#define SKEWCYCLIC_JSONIO_HPP

#include <json.hpp>

#include "skewcyclic/textio.hpp"

namespace skewcyclic {

using njson = nlohmann::ordered_json;

// --- JSON codecs (integer-encoded field elements throughout) ---------------
njson poly_to_json(const Poly& p);
Poly poly_from_json(const FieldSpec& F, const njson& j);
njson ring_to_json(const RingElement& a);
RingElement ring_from_json(const RingContext& R, const njson& j);
njson skew_to_json(const SkewPoly& f);
// CRT display form: array over nu of arrays over k of residue coefficients.
njson skew_to_crt_json(const SkewPoly& f);
SkewPoly skew_from_json(SkewContextPtr ctx, const njson& j);
njson matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(FieldSpecPtr F, const njson& j);

// Context assembly from a JobSpec payload ({"field":{p,m,modulus?},"n":...}).
RingContextPtr ring_from_job(const njson& job);
// Additionally reads "sigma" (text or dense array).
SkewContextPtr skew_context_from_job(const njson& job);

// Runs one JobSpec ({"command": ..., ...}) and returns the canonical JSON
// output.  Throws typed errors; the CLI maps them to exit code 1.
njson execute(const njson& job);

// Human-readable rendering of an execute() result.
std::string render_pretty(const njson& job, const njson& out);

// expected is a subset-pattern of actual: objects require matching keys,
// everything else must compare equal.  Mismatch description goes to `why`.
bool json_matches(const njson& expected, const njson& actual, std::string& why);

struct Fixture {
    const char* id;
    const char* provenance; // PAPER / DERIVED tag plus source note
    const char* job;        // JobSpec JSON
    const char* expected;   // subset-pattern JSON
};
const std::vector<Fixture>& fixtures();

} // namespace skewcyclic

#endif
