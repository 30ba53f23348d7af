#include "skewcyclic/jsonio.hpp"

namespace skewcyclic {

// Regression corpus: worked examples with their published results, replayed
// through the same execute() path as the CLI.  Integer encodings over GF(4):
// 0, 1, a -> 2, a^2 -> 3.
const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> table = {
        {"E-Azs1.autos", "PAPER: six automorphisms of F4[x]/(x^3-1)",
         R"json({"command":"autos","field":{"p":2,"m":2},"n":3})json",
         R"json({"count":6,
             "images":[[0,0,1],[0,0,2],[0,0,3],[0,1,0],[0,2,0],[0,3,0]],
             "factors":[[1,1],[2,1],[3,1]]})json"},

        {"E-autos.n5", "PAPER: automorphism table for F4[x]/(x^5-1)",
         R"json({"command":"autos","field":{"p":2,"m":2},"n":5})json",
         R"json({"count":8,
             "images":[[0,0,0,0,1],[0,0,0,1,0],[0,0,1,0,0],[0,1,0,0,0],
                       [0,1,2,3,1],[0,1,3,2,1],[0,2,1,1,3],[0,3,1,1,2]],
             "factors":[[1,1],[1,2,1],[1,3,1]]})json"},

        {"E-CCC1.generator", "PAPER: 1-dimensional code of length 3, complexity 2, d_free 9",
         R"json({"command":"generator","field":{"p":2,"m":2},"n":3,"sigma":[0,3,0],
             "polys":["1 + a*x + a^2*x^2 + z*(1+x+x^2) + z^2*(1+a^2*x+a*x^2)"]})json",
         R"json({"kappa":1,"complexity":2,"is_code":true,"is_block":false,
             "generator":[[1,2,3],[1,1,1],[1,3,2]],
             "generator_matrix":[[[1,1,1],[2,1,3],[3,1,2]]],
             "d_free":9,"heller_bound":9})json"},

        {"E-cMsigma.circulant", "PAPER: printed 3x3 sigma-circulant, basic of rank 1",
         R"json({"command":"circulant","what":"msigma","field":{"p":2,"m":2},"n":3,
             "sigma":[0,3,0],"poly":[[1,2,3],[1,1,1],[1,3,2]]})json",
         R"json({"matrix":[[[1,1,1],[2,1,3],[3,1,2]],
                       [[3,3,3],[1,3,2],[2,3,1]],
                       [[2,2,2],[3,2,1],[1,2,3]]],
             "rank":1})json"},

        {"E-sigma.tau.circulant", "PAPER: printed 5x5 sigma-circulant for sigma(x)=x^2",
         R"json({"command":"circulant","what":"msigma","field":{"p":2,"m":2},"n":5,
             "sigma":"x^2","poly":[[1,3,3,1,0],[1,1,3,0,3]]})json",
         R"json({"matrix":[[[1,1],[3,1],[3,3],[1],[0,3]],
                       [[],[1,3],[3,1],[3,1],[1,3]],
                       [[1,1],[0,3],[1],[3,3],[3,1]],
                       [[3,3],[1,1],[0,1],[1,3],[3]],
                       [[3,3],[3],[1,3],[0,1],[1,1]]],
             "rank":2})json"},

        {"E-norming.reduce", "PAPER: normalization [0,z(a^2x+a^2),ax+1] -> [0,z,1]; DERIVED lift",
         R"json({"command":"reduce","field":{"p":2,"m":2},"n":5,"sigma":"x^2",
             "polys":[{"crt":[[[],[],[1,2]],[[],[3,3],[]]]}]})json",
         R"json({"is_principal":true,"is_delay_free":true,
             "generator":[[0,3,2,2,3],[0,2,3,3,2]],
             "generator_crt":[[[],[],[1]],[[],[1],[]]],
             "support":[3],"pi":[1,3,1],"kappa":2})json"},

        {"E-reduction.reduce", "PAPER: reduction of f1..f6 to {e1, z*e3+e2}; DERIVED lifts",
         R"json({"command":"reduce","field":{"p":2,"m":2},"n":5,"sigma":"x^3",
             "polys":[{"crt":[[[],[],[]],[[1],[],[]]]},
                      {"crt":[[[],[0,3],[]],[[],[],[2,2]]]},
                      {"crt":[[[1],[],[]],[[1],[],[]]]},
                      {"crt":[[[1],[],[]],[[3],[],[]],[[2],[],[]]]},
                      {"crt":[[[],[3,3],[]],[[],[],[1,2]]]},
                      {"crt":[[[],[],[]],[[],[0,1],[]],[[],[],[3,3]]]}]})json",
         R"json({"is_principal":true,"is_delay_free":true,
             "family":[[[1,1,1,1,1]],[[0,2,3,3,2],[0,3,2,2,3]]],
             "components":[1,2],
             "generator":[[1,3,2,2,3],[0,3,2,2,3]],
             "generator_crt":[[[1],[1],[]],[[],[],[1]]]})json"},

        {"E-comp.reduce", "PAPER: principal generator z*e3+e1+e2 from h1,h2,h3",
         R"json({"command":"reduce","field":{"p":2,"m":2},"n":5,"sigma":"x^3",
             "polys":[[[1,0,1,2,2],[0,0,3,1,3]],
                      [[0,1,0,3,3],[0,0,3,1,3]],
                      [[0,0,2,1,2],[0,0,2,1,0],[0,0,1,2,1]]]})json",
         R"json({"is_principal":true,"is_delay_free":true,
             "generator":[[1,3,2,2,3],[0,3,2,2,3]],
             "generator_crt":[[[1],[1],[]],[[],[],[1]]],
             "support":[1,2],"pi":[1,3,3,1],"kappa":3})json"},

        {"E-sigma.tau2.control", "PAPER: control pipeline (h', h, M^sigma(h)); DERIVED: dual_control",
         R"json({"command":"control","field":{"p":2,"m":2},"n":5,"sigma":"x^2",
             "polys":[[[1,3,3,1,0],[1,1,3,0,3]]]})json",
         R"json({"rank":2,"dual_dimension":3,
             "control_poly":[[1,3,2,2,3],[0,2,3,3,2]],
             "dual_generator":[[1,3,2,2,3],[0,3,2,2,3]],
             "dual_control":[[0,3,2,2,3],[0,3,2,2,3]],
             "control_matrix":[[[1],[3,2],[2,3],[2,3],[3,2]],
                               [[3,3],[1,2],[3],[2,2],[2,3]],
                               [[2,2],[3,3],[1,3],[3,2],[2]],
                               [[2,2],[2],[3,2],[1,3],[3,3]],
                               [[3,3],[2,3],[2,2],[3],[1,2]]]})json"},

        {"E-sigma.tau2.generator", "PAPER: 2-dimensional code, complexity 2, d_free 8",
         R"json({"command":"generator","field":{"p":2,"m":2},"n":5,"sigma":"x^2",
             "polys":[[[1,3,3,1,0],[1,1,3,0,3]]]})json",
         R"json({"kappa":2,"complexity":2,"is_code":true,"is_block":false,
             "generator":[[0,3,2,2,3],[0,2,3,3,2]],
             "d_free":8,"heller_bound":8})json"},

        {"E-sigma.tau2.heller", "DERIVED: direct evaluation of the displayed bound",
         R"json({"command":"heller","n":5,"k":2,"delta":2,"mem":1,"q":4})json", R"json({"bound":8})json"},

        {"E-CCC1.heller", "DERIVED: direct evaluation; equals the reported optimum d_free",
         R"json({"command":"heller","n":3,"k":1,"delta":2,"mem":2,"q":4})json", R"json({"bound":9})json"},

        {"E-rank.nonreduced", "PAPER: non-reduced h has rank M^sigma(h) = 3 < deg pi_(h) = 5",
         R"json({"command":"circulant","what":"msigma","field":{"p":2,"m":2},"n":5,
             "sigma":"x^2","poly":[[1,3,2,2,3],[0,2,3,3,2]]})json",
         R"json({"rank":3})json"},

        {"E-minbasis.dual", "PAPER: minimal basic generator matrix of the dual code",
         R"json({"command":"dual","field":{"p":2,"m":2},"n":5,"sigma":"x^2",
             "polys":[[[1,3,3,1,0],[1,1,3,0,3]]]})json",
         R"json({"kappa":3,"complexity":2,"d_free":5,
             "sigma_hat":[0,0,0,1,0],
             "generator":[[1,3,2,2,3],[0,3,2,2,3]],
             "minimal_generator_matrix":[[[1],[1],[1],[1],[1]],
                                         [[],[2,3],[3,2],[3,2],[2,3]],
                                         [[2,2],[0,2],[2,3],[3],[3,3]]]})json"},
    };
    return table;
}

} // namespace skewcyclic
