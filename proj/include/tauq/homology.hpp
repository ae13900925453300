#pragma once

#include "tauq/rep.hpp"

// Homological toolbox: Hom spaces as intertwiner kernels, minimal projective
// presentations, the Nakayama functor on presentation maps, the AR translate
// tau as ker(nu P1 -> nu P0), Ext^1 via syzygy restriction, isomorphism
// testing and projective dimension with period detection.

namespace tauq {

struct UnknownIsoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HomBasis {
    // one element = one matrix per vertex (f_v: M_v -> N_v)
    std::vector<std::vector<Matrix>> elems;
    int dim() const { return static_cast<int>(elems.size()); }
};

int hom_dim(const MonomialAlgebra& A, const Representation& M, const Representation& N);
HomBasis hom_basis(const MonomialAlgebra& A, const Representation& M, const Representation& N);

// Direct sum of projectives with labeled basis: per vertex w, entries
// (summand index, algebra basis index of the path v_summand ~> w).
struct ProjSum {
    std::vector<int> summand_vertex;
    Representation rep;
    std::vector<std::vector<std::pair<int, int>>> labels;
};
ProjSum projective_sum(const MonomialAlgebra& A, const std::vector<int>& vertices);

// Direct sum of injectives: per vertex w, entries (summand, basis index of
// the path w ~> v_summand); an arrow strips itself off the front.
struct InjSum {
    std::vector<int> summand_vertex;
    Representation rep;
    std::vector<std::vector<std::pair<int, int>>> labels;
};
InjSum injective_sum(const MonomialAlgebra& A, const std::vector<int>& vertices);

// Kernel of a per-vertex linear map as a subrepresentation, with the
// embedding matrices (columns = kernel basis).
struct SubRep {
    Representation rep;
    std::vector<Matrix> embed;
};
SubRep kernel_subrep(const MonomialAlgebra& A, const Representation& big,
                     const std::vector<Matrix>& to);

struct PathComb {
    std::vector<std::pair<int, Fp>> terms; // (algebra basis index, coefficient)
};

// Minimal projective presentation P1 -> P0 -> M -> 0. The map P1 -> P0 is
// kept symbolically: entry[i][j] is the element of e_{u_j} A e_{w_i} (a
// combination of paths w_i ~> u_j) that generator j multiplies by.
struct ProjPresentation {
    std::vector<int> p0_vertices, p1_vertices;
    ProjSum p0;
    std::vector<Matrix> cover; // per vertex: P0_v -> M_v, surjective
    SubRep omega;              // ker(cover) = first syzygy
    std::vector<std::vector<PathComb>> entry; // [p0 summand][p1 summand]
};
ProjPresentation min_presentation(const MonomialAlgebra& A, const Representation& M);

// nu(P1 -> P0): the induced map between injective sums. A generator landing
// on the path combination p acts on duals by striping p off the tail.
struct NakayamaMap {
    InjSum nu_p1, nu_p0;
    std::vector<Matrix> map; // per vertex: (nu P1)_v -> (nu P0)_v
};
NakayamaMap nakayama(const MonomialAlgebra& A, const ProjPresentation& pres);

// AR translate. Zero representation iff M is projective.
Representation tau_rep(const MonomialAlgebra& A, const Representation& M);

// dim Ext^1(M, N) = dim Hom(Omega M, N) - rank(Hom(P0, N) restricted to Omega).
int ext1_dim(const MonomialAlgebra& A, const ProjPresentation& presM, const Representation& N);
int ext1_dim(const MonomialAlgebra& A, const Representation& M, const Representation& N);

enum class IsoResult { No, Yes, Unknown };

// Deterministic scan (single basis elements, then pairs), a fixed-seed
// randomized search, then an exhaustive scan when p^dim is small. Single
// elements alone already decide the indecomposable case: when End is local a
// basis cannot avoid the units. Unknown can only arise for decomposable
// comparisons at large p.
IsoResult iso_test(const MonomialAlgebra& A, const Representation& M, const Representation& N);

// Same, but throws UnknownIsoError instead of returning Unknown.
bool is_isomorphic(const MonomialAlgebra& A, const Representation& M, const Representation& N);

struct PdResult {
    enum Kind { Finite, InfinitePeriodic, AtLeast } kind = Finite;
    int value = 0; // the dimension for Finite, the cutoff for AtLeast
    friend bool operator==(const PdResult& a, const PdResult& b) {
        return a.kind == b.kind && (a.kind == InfinitePeriodic || a.value == b.value);
    }
};
std::string pd_to_string(const PdResult& pd);

// Iterated syzygies; a repeat (up to isomorphism) of a nonzero syzygy proves
// infinite projective dimension.
PdResult proj_dimension(const MonomialAlgebra& A, const Representation& M, int cutoff = 20);

// Flatten a hom element to one coefficient vector (fixed vertex-major order),
// for rank computations over spaces of maps.
std::vector<Fp> flatten_hom(const std::vector<Matrix>& f);

} // namespace tauq
