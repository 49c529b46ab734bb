#ifndef CANONEQ_PIPELINE_HPP
#define CANONEQ_PIPELINE_HPP

#include <string>

#include "canoneq/formats.hpp"

namespace canoneq {

struct JobConfig {
    std::string group_file;
    std::string skg_file;
    std::string rep_file;   // optional S_1 matrices (defaults to the group file
                            // when its backend is matrix and dims agree)
    std::string table_file; // optional: bypasses the Dixon computation
    std::string ideal_file;
    std::string maps_file;
    std::string reference_table; // optional: print a permutation match
    std::string out_dir;
    OrderKind order = OrderKind::grevlex;
    SmoothMode smooth = SmoothMode::modular;
    unsigned long seed = 1;
    int max_strata = 64;
    long max_pairs = 500;
    int degree_cap = 6;
    long genus = 0;
    int differential_power = 1;
    bool exact_smooth_requested = false;
};

struct CommandResult {
    std::string text;
    int exit_code = 0; // 0 ok, 2 parse error, 3 verification failure, 4 resources
};

CommandResult cmd_chartable(const JobConfig& cfg);
CommandResult cmd_screen(const JobConfig& cfg);
CommandResult cmd_characters(const JobConfig& cfg, int d);
CommandResult cmd_candidate(const JobConfig& cfg);
CommandResult cmd_stratify(const JobConfig& cfg);
CommandResult cmd_verify(const JobConfig& cfg);
CommandResult cmd_pipeline(const JobConfig& cfg);

/// Shared context loaded from job inputs.
struct PipelineContext {
    GroupModel group;
    CharacterTable table;
    SurfaceKernelData skg;
    MatrixRep rep; // action on S_1
    long genus = 0;

    static PipelineContext load(const JobConfig& cfg, bool need_skg, bool need_rep);
};

/// Candidate construction shared by cmd_candidate and cmd_pipeline:
/// quadrics always; cubics added unless the screens say quadrics suffice.
struct CandidateResult {
    ParamIdeal ideal;
    CandidateBuild build;
    ScreenResult screens;
};
CandidateResult make_candidate(PipelineContext& ctx, const JobConfig& cfg);

} // namespace canoneq

#endif
