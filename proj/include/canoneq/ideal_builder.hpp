#ifndef CANONEQ_IDEAL_BUILDER_HPP
#define CANONEQ_IDEAL_BUILDER_HPP

#include "canoneq/linrep.hpp"
#include "canoneq/parampoly.hpp"

namespace canoneq {

/// Homogeneous parametric ideal over Q(zeta)[c_1..c_m][x_0..x_{g-1}].
struct ParamIdeal {
    int nvars = 0;
    int nparams = 0;
    TermOrder order{OrderKind::grevlex};
    std::vector<PPoly> generators;
    std::vector<CPoly> nonvanishing; // constraints on surviving parameters

    struct ParamInfo {
        int irreducible = -1;  // table index of the component it multiplies
        int combination = 0;   // which generic combination within the component
        int copy = 0;          // which aligned copy
        bool fixed_to_one = false;
        int degree = 2;        // degree of the component's generators
    };
    std::vector<ParamInfo> params;

    struct GenInfo {
        int irreducible = -1;
        int combination = 0;
        int slot = 0; // basis index within the copy
        int degree = 2;
    };
    std::vector<GenInfo> gen_info;

    std::vector<std::string> log; // normalization record

    std::vector<int> free_params() const {
        std::vector<int> f;
        for (int i = 0; i < nparams; ++i)
            if (!params[i].fixed_to_one) f.push_back(i);
        return f;
    }
    /// Full parameter vector from an assignment to the free parameters only.
    std::vector<Cyclotomic> full_assignment(const std::vector<Cyclotomic>& free_values) const;
};

struct CandidateBuild {
    ParamIdeal ideal;
    std::vector<AlignedIsotypic> components; // the components that contributed
};

/// Assembles the candidate ideal: for each irreducible p with multiplicity
/// m_p in I_d and M_p aligned copies in S_d, emits either the whole
/// component (m_p = M_p, no parameters) or m_p generic combinations with one
/// parameter per copy, the parameter shared across the deg(V_p) basis slots.
CandidateBuild build_candidate(const std::vector<AlignedIsotypic>& aligned,
                               const std::vector<long>& ideal_mults, int nvars, int d);

/// Sets a maximal independent set of parameters to 1 using per-block
/// coordinate scalings of S_1 plus one scalar per generic combination;
/// deterministic in parameter index order. s1_blocks lists the variable
/// indices of each block of the S_1 action.
ParamIdeal normalize(const CandidateBuild& build, const std::vector<std::vector<int>>& s1_blocks);

/// Exact check that every group generator maps each ideal generator into the
/// cyclotomic-linear span of the generators with matching parameters.
void check_g_stability(const CandidateBuild& build);

} // namespace canoneq

#endif
