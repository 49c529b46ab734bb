#ifndef CANONEQ_STRATIFIER_HPP
#define CANONEQ_STRATIFIER_HPP

#include "canoneq/ideal_builder.hpp"

namespace canoneq {

enum class StratumStatus {
    unexplored,
    explored,
    specialized,
    verified_good,
    verified_bad,
    unsolved,
    inconsistent,
    capped
};

std::string stratum_status_name(StratumStatus s);

struct Stratum {
    int id = 0;
    int parent = -1;
    std::vector<CPoly> equations;    // monic, required = 0
    std::vector<CPoly> nonvanishing; // monic, required != 0
    std::vector<std::string> evidence;
    StratumStatus status = StratumStatus::unexplored;
    std::vector<Monomial> initial_ideal; // leads of the partial basis over this stratum
    HilbertData hilbert;
    std::vector<std::vector<Cyclotomic>> solutions; // full parameter vectors
    std::vector<int> children;
};

struct StratifyOptions {
    int max_strata = 64;
    long max_pairs = 500;
    int degree_cap = 6;
};

struct StratumTree {
    std::vector<Stratum> strata;
    bool budget_hit = false;
};

/// Partial flattening stratification: fraction-free Buchberger, forking a
/// child stratum on every new nonunit content/leading factor (h = 0 child,
/// h != 0 continues), breadth-first within the budget.
StratumTree explore(const ParamIdeal& ideal, const StratifyOptions& opt = {});

/// All exact cyclotomic solutions of the stratum's equations (triangular
/// linear/binomial/quadratic steps only), filtered by the nonvanishing
/// constraints. Returns full parameter vectors. Throws unsolved_system.
std::vector<std::vector<Cyclotomic>> solve_stratum(const Stratum& s, const ParamIdeal& ideal);

/// Exact substitution of a full parameter vector; throws
/// degenerate_specialization if a generator collapses to zero.
std::vector<Poly<Cyclotomic>> specialize(const ParamIdeal& ideal,
                                         const std::vector<Cyclotomic>& assignment);

} // namespace canoneq

#endif
