#include <iostream>

#include "CLI11.hpp"
#include "canoneq/pipeline.hpp"

using namespace canoneq;

namespace {

void add_common(CLI::App* cmd, JobConfig& cfg, std::string& order, std::string& smooth) {
    cmd->add_option("--out", cfg.out_dir, "directory for output artifacts");
    cmd->add_option("--seed", cfg.seed, "seed for the randomized extraction steps");
    cmd->add_option("--order", order)->check(CLI::IsMember({"lex", "grevlex"}));
    cmd->add_option("--smooth", smooth)->check(CLI::IsMember({"exact", "modular"}));
    cmd->add_option("--max-strata", cfg.max_strata, "stratum budget");
    cmd->add_option("--max-pairs", cfg.max_pairs, "S-pair budget per stratum");
    cmd->add_option("--degree-cap", cfg.degree_cap, "degree cap for parametric S-pairs");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical equations of Riemann surfaces with automorphisms"};
    app.require_subcommand(1);

    JobConfig cfg;
    std::string order = "grevlex", smooth = "modular";
    int dpow = 1;

    auto* chartable = app.add_subcommand("chartable", "character table of a group");
    chartable->add_option("group", cfg.group_file, "group file")->required();
    chartable->add_option("--match", cfg.reference_table, "reference table to permute against");
    add_common(chartable, cfg, order, smooth);

    auto* screen_cmd = app.add_subcommand("screen", "gonality screens for an skg file");
    screen_cmd->add_option("skg", cfg.skg_file, "surface kernel generator file")->required();
    add_common(screen_cmd, cfg, order, smooth);

    auto* characters = app.add_subcommand("characters", "differential and ideal characters");
    characters->add_option("skg", cfg.skg_file)->required();
    characters->add_option("-d,--power", dpow, "power of the canonical bundle");
    add_common(characters, cfg, order, smooth);

    auto* candidate = app.add_subcommand("candidate", "build the parametric candidate ideal");
    candidate->add_option("skg", cfg.skg_file)->required();
    candidate->add_option("--rep", cfg.rep_file, "matrix action on differentials");
    candidate->add_option("--table", cfg.table_file, "character table file");
    add_common(candidate, cfg, order, smooth);

    auto* stratify = app.add_subcommand("stratify", "partial flattening stratification");
    stratify->add_option("ideal", cfg.ideal_file)->required();
    add_common(stratify, cfg, order, smooth);

    auto* verify = app.add_subcommand("verify", "verify a specialized canonical ideal");
    verify->add_option("ideal", cfg.ideal_file)->required();
    verify->add_option("--maps", cfg.maps_file, "generator maps to check invariance under");
    verify->add_option("--genus", cfg.genus, "expected genus")->required();
    add_common(verify, cfg, order, smooth);

    auto* pipeline = app.add_subcommand("pipeline", "candidate, stratify, solve, verify");
    pipeline->add_option("skg", cfg.skg_file)->required();
    pipeline->add_option("--rep", cfg.rep_file);
    pipeline->add_option("--table", cfg.table_file);
    add_common(pipeline, cfg, order, smooth);

    CLI11_PARSE(app, argc, argv);
    cfg.order = order == "lex" ? OrderKind::lex : OrderKind::grevlex;
    cfg.smooth = smooth == "exact" ? SmoothMode::exact : SmoothMode::modular;

    try {
        CommandResult result;
        if (*chartable) result = cmd_chartable(cfg);
        if (*screen_cmd) result = cmd_screen(cfg);
        if (*characters) result = cmd_characters(cfg, dpow);
        if (*candidate) result = cmd_candidate(cfg);
        if (*stratify) result = cmd_stratify(cfg);
        if (*verify) result = cmd_verify(cfg);
        if (*pipeline) result = cmd_pipeline(cfg);
        std::cout << result.text;
        return result.exit_code;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const resource_exceeded& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
