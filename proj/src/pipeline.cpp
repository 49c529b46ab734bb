#include "canoneq/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

namespace canoneq {

namespace {

std::string out_path(const JobConfig& cfg, const std::string& name) {
    if (cfg.out_dir.empty()) return name;
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

std::string seed_line(const JobConfig& cfg) {
    return "seed: " + std::to_string(cfg.seed) + "\n";
}

std::vector<Matrix> group_generator_matrices(const GroupModel& g) {
    std::vector<Matrix> out;
    for (int i = 0; i < g.num_generators(); ++i) out.push_back(g.element(g.generator(i)).mat);
    return out;
}

} // namespace

PipelineContext PipelineContext::load(const JobConfig& cfg, bool need_skg, bool need_rep) {
    PipelineContext ctx;

    std::string group_path = cfg.group_file;
    SkgFileData skg_data;
    if (!cfg.skg_file.empty()) {
        skg_data = load_skg_file(cfg.skg_file);
        if (group_path.empty()) group_path = skg_data.group_path;
    }
    if (group_path.empty()) throw parse_error("no group file given");
    GroupFileData gf = load_group_file(group_path);
    ctx.group = GroupModel::enumerate(gf.generators);

    if (!cfg.table_file.empty())
        ctx.table = load_table_file(cfg.table_file, ctx.group);
    else
        ctx.table = character_table(ctx.group);
    ctx.table.group = &ctx.group;
    for (auto& chi : ctx.table.irreducibles) chi.group = &ctx.group;

    if (need_skg) {
        if (cfg.skg_file.empty()) throw parse_error("this command needs an skg file");
        ctx.skg = resolve_skg(skg_data, ctx.group);
        auto violations = validate_skg(ctx.skg);
        if (!violations.empty()) {
            std::string msg = "surface kernel generators are invalid:";
            for (const auto& v : violations) msg += "\n  - " + v;
            throw error(msg);
        }
        Rational genus = riemann_hurwitz_genus(ctx.group.order(), ctx.skg.signature);
        if (!is_integer(genus) || genus < 2)
            throw error("Riemann-Hurwitz genus " + genus.get_str() + " is not an integer >= 2");
        ctx.genus = to_long(genus);
    }

    if (need_rep) {
        if (!cfg.rep_file.empty()) {
            GroupFileData rf = load_group_file(cfg.rep_file);
            if (rf.backend != Backend::matrix)
                throw parse_error("representation file must have matrix backend");
            std::vector<Matrix> mats;
            for (auto& e : rf.generators) mats.push_back(e.mat);
            if ((int)mats.size() != ctx.group.num_generators())
                throw parse_error("representation file must match the group generators");
            ctx.rep = MatrixRep{&ctx.group, mats[0].rows, mats};
            if (!rf.declared_character.empty()) {
                Character actual = ctx.rep.character();
                if ((int)rf.declared_character.size() != ctx.group.num_classes() ||
                    actual.values != rf.declared_character)
                    throw error("representation file's declared character row does not "
                                "match the trace of the matrices");
            }
        } else if (ctx.group.backend() == Backend::matrix) {
            ctx.rep = MatrixRep{&ctx.group, ctx.group.degree(),
                                group_generator_matrices(ctx.group)};
        } else {
            throw parse_error("a matrix representation of S_1 is required (rep file)");
        }
        if (need_skg) {
            // the S_1 matrices must realize the differential character
            Character chi1 = eichler_character(ctx.skg, 1).chi;
            if (!(ctx.rep.character() == chi1))
                throw error("the supplied matrices do not realize the character of "
                            "the action on differentials");
        }
    }
    return ctx;
}

CandidateResult make_candidate(PipelineContext& ctx, const JobConfig& cfg) {
    CandidateResult out;
    out.screens = screen(ctx.skg, ctx.table);
    if (out.screens.hyperelliptic)
        throw error("the surface is hyperelliptic; the canonical-ideal pipeline does not apply");

    int nvars = (int)ctx.genus;
    TermOrder ord{cfg.order};

    auto aligned_for = [&](int d, const std::vector<long>& mults) {
        MatrixRep symd = sym_action(ctx.rep, d);
        std::vector<AlignedIsotypic> aligned;
        for (int p = 0; p < (int)mults.size(); ++p) {
            if (mults[(size_t)p] == 0) continue;
            MatrixRep ref = extract_irreducible(ctx.group, ctx.table.irreducibles[(size_t)p],
                                                cfg.seed + (unsigned long)p);
            aligned.push_back(aligned_bases(symd, ctx.table, p, ref, nvars, d));
        }
        return aligned;
    };

    Character i2 = ideal_character(ctx.skg, 2, ctx.table);
    auto mults2 = decompose(i2, ctx.table);
    CandidateBuild build = build_candidate(aligned_for(2, mults2), mults2, nvars, 2);

    if (!out.screens.quadrics_suffice) {
        // Cubic generators beyond S_1 * I_2, component by component. The
        // tensor character overcounts when products are dependent; the
        // verifier downstream is the arbiter.
        Character i3 = ideal_character(ctx.skg, 3, ctx.table);
        Character chi1 = eichler_character(ctx.skg, 1).chi;
        Character old3 = chi1 * i2;
        auto m3 = decompose(i3, ctx.table);
        std::vector<long> new3(m3.size(), 0);
        for (size_t p = 0; p < m3.size(); ++p) {
            Cyclotomic ip = inner_product(old3, ctx.table.irreducibles[p]);
            long used = ip.is_rational() && is_integer(ip.rational_value())
                            ? to_long(ip.rational_value())
                            : 0;
            new3[p] = std::max(0L, m3[p] - used);
        }
        bool any = false;
        for (long m : new3) any = any || m > 0;
        if (any) {
            CandidateBuild cubic = build_candidate(aligned_for(3, new3), new3, nvars, 3);
            int offset = build.ideal.nparams;
            for (auto& gen : cubic.ideal.generators)
                build.ideal.generators.push_back(ppoly_shift_params(gen, offset));
            for (auto& gi : cubic.ideal.gen_info) build.ideal.gen_info.push_back(gi);
            for (auto& pi : cubic.ideal.params) build.ideal.params.push_back(pi);
            build.ideal.nparams += cubic.ideal.nparams;
            for (auto& comp : cubic.components) build.components.push_back(std::move(comp));
        }
    }

    build.ideal.order = ord;
    for (auto& gen : build.ideal.generators) {
        std::vector<Term<CPoly>> ts(gen.terms.begin(), gen.terms.end());
        gen = poly_normalize(std::move(ts), ord);
    }
    check_g_stability(build);

    auto blocks = block_supports(ctx.rep, ctx.table, cfg.seed);
    out.ideal = normalize(build, blocks);
    out.build = std::move(build);
    return out;
}

CommandResult cmd_chartable(const JobConfig& cfg) {
    PipelineContext ctx = PipelineContext::load(cfg, false, false);
    std::ostringstream os;
    os << seed_line(cfg);
    os << "group_order: " << ctx.group.order() << "\n";
    os << "classes: " << ctx.group.num_classes() << "\n";
    os << "class_sizes:";
    for (int c = 0; c < ctx.group.num_classes(); ++c) os << " " << ctx.group.class_size(c);
    os << "\nclass_orders:";
    for (int c = 0; c < ctx.group.num_classes(); ++c)
        os << " " << ctx.group.element_order(ctx.group.class_rep(c));
    os << "\n";
    for (const auto& chi : ctx.table.irreducibles) {
        os << "row: ";
        for (size_t i = 0; i < chi.values.size(); ++i)
            os << (i ? ", " : "") << chi.values[i].str();
        os << "\n";
    }
    if (!cfg.out_dir.empty()) save_table_file(out_path(cfg, "character_table.txt"), ctx.table);

    if (!cfg.reference_table.empty()) {
        CharacterTable ref = load_table_file(cfg.reference_table, ctx.group);
        // search for a column permutation making our rows a permutation of
        // the reference rows
        int k = ctx.group.num_classes();
        std::vector<int> col_map((size_t)k, -1);
        std::vector<bool> used((size_t)k, false);
        long budget = 1000000;
        std::function<bool(int)> assign = [&](int c) -> bool {
            if (--budget < 0) return false;
            if (c == k) {
                std::multiset<std::vector<std::string>> ours, theirs;
                for (const auto& chi : ctx.table.irreducibles) {
                    std::vector<std::string> row((size_t)k);
                    for (int i = 0; i < k; ++i)
                        row[(size_t)col_map[(size_t)i]] = chi.values[(size_t)i].str();
                    ours.insert(row);
                }
                for (const auto& chi : ref.irreducibles) {
                    std::vector<std::string> row;
                    for (const auto& v : chi.values) row.push_back(v.str());
                    theirs.insert(row);
                }
                return ours == theirs;
            }
            for (int t = 0; t < k; ++t) {
                if (used[(size_t)t]) continue;
                // column value multisets must agree
                std::multiset<std::string> a, b;
                for (const auto& chi : ctx.table.irreducibles) a.insert(chi.values[(size_t)c].str());
                for (const auto& chi : ref.irreducibles) b.insert(chi.values[(size_t)t].str());
                if (a != b) continue;
                col_map[(size_t)c] = t;
                used[(size_t)t] = true;
                if (assign(c + 1)) return true;
                used[(size_t)t] = false;
            }
            return false;
        };
        if (assign(0)) {
            os << "reference_class_permutation:";
            for (int c = 0; c < k; ++c) os << " " << c << "->" << col_map[(size_t)c];
            os << "\n";
        } else {
            os << "reference_class_permutation: none found\n";
        }
    }
    return {os.str(), 0};
}

CommandResult cmd_screen(const JobConfig& cfg) {
    PipelineContext ctx = PipelineContext::load(cfg, true, false);
    ScreenResult sc = screen(ctx.skg, ctx.table);
    std::ostringstream os;
    os << seed_line(cfg);
    os << "genus: " << sc.genus << "\n";
    os << "hyperelliptic: " << (sc.hyperelliptic ? "yes" : "no") << "\n";
    os << "cyclic_trigonal_candidate: " << (sc.cyclic_trigonal_candidate ? "yes" : "no") << "\n";
    os << "plane_quintic_candidate: " << (sc.plane_quintic_candidate ? "yes" : "no") << "\n";
    os << "quadrics_suffice: " << (sc.quadrics_suffice ? "yes" : "no") << "\n";
    if (!cfg.out_dir.empty()) write_text_file(out_path(cfg, "screen.txt"), os.str());
    return {os.str(), 0};
}

CommandResult cmd_characters(const JobConfig& cfg, int d) {
    PipelineContext ctx = PipelineContext::load(cfg, true, false);
    std::ostringstream os;
    os << seed_line(cfg);
    DifferentialCharacter chid = eichler_character(ctx.skg, d);
    os << "chi_" << d << ":";
    for (const auto& v : chid.chi.values) os << " " << v.str() << ";";
    os << "\n";
    auto m = decompose(chid.chi, ctx.table);
    os << "chi_" << d << "_multiplicities:";
    for (long x : m) os << " " << x;
    os << "\n";
    if (d == 2 || d == 3) {
        ScreenResult sc = screen(ctx.skg, ctx.table);
        if (sc.hyperelliptic) {
            os << "ideal_" << d << ": skipped (hyperelliptic surface, no canonical ideal)\n";
        } else {
            Character id = ideal_character(ctx.skg, d, ctx.table);
            os << "ideal_" << d << "_dimension: " << id.values[0].str() << "\n";
            auto mi = decompose(id, ctx.table);
            os << "ideal_" << d << "_multiplicities:";
            for (long x : mi) os << " " << x;
            os << "\n";
        }
    }
    if (!cfg.out_dir.empty())
        write_text_file(out_path(cfg, "characters_d" + std::to_string(d) + ".txt"), os.str());
    return {os.str(), 0};
}

CommandResult cmd_candidate(const JobConfig& cfg) {
    PipelineContext ctx = PipelineContext::load(cfg, true, true);
    ScreenResult sc = screen(ctx.skg, ctx.table);
    if (sc.hyperelliptic)
        return {"advisory: the surface is hyperelliptic; canonical quadrics do not embed it\n", 0};
    CandidateResult cand = make_candidate(ctx, cfg);
    std::ostringstream os;
    os << seed_line(cfg);
    os << "generators: " << cand.ideal.generators.size() << "\n";
    os << "parameters_total: " << cand.ideal.nparams << "\n";
    os << "parameters_free: " << cand.ideal.free_params().size() << "\n";
    for (const auto& l : cand.ideal.log) os << "log: " << l << "\n";
    std::string path = out_path(cfg, "candidate.ideal");
    save_ideal_file(path, cand.ideal, {"seed: " + std::to_string(cfg.seed)});
    os << "written: " << path << "\n";
    return {os.str(), 0};
}

namespace {

ParamIdeal ideal_from_file_data(const IdealFileData& data) {
    ParamIdeal ideal;
    ideal.nvars = (int)data.names.vars.size();
    ideal.nparams = (int)data.names.params.size();
    ideal.order = data.names.order;
    ideal.generators = data.generators;
    ideal.nonvanishing = data.assume_nonzero;
    for (int p = 0; p < ideal.nparams; ++p) ideal.params.push_back({-1, 0, p, false});
    return ideal;
}

} // namespace

CommandResult cmd_stratify(const JobConfig& cfg) {
    if (cfg.ideal_file.empty()) return {"stratify needs an ideal file\n", 2};
    IdealFileData data = load_ideal_file(cfg.ideal_file);
    ParamIdeal ideal = ideal_from_file_data(data);
    StratifyOptions opt{cfg.max_strata, cfg.max_pairs, cfg.degree_cap};
    StratumTree tree = explore(ideal, opt);
    for (auto& s : tree.strata) {
        if (s.status != StratumStatus::explored || s.equations.empty()) continue;
        try {
            s.solutions = solve_stratum(s, ideal);
            if (!s.solutions.empty()) s.status = StratumStatus::specialized;
        } catch (const unsolved_system&) {
            s.status = StratumStatus::unsolved;
        }
    }
    std::string report = seed_line(cfg) + stratum_report(tree, ideal);
    if (!cfg.out_dir.empty()) write_text_file(out_path(cfg, "strata.txt"), report);
    return {report, tree.budget_hit ? 4 : 0};
}

CommandResult cmd_verify(const JobConfig& cfg) {
    if (cfg.ideal_file.empty() || cfg.genus < 2)
        return {"verify needs an ideal file and --genus\n", 2};
    IdealFileData data = load_ideal_file(cfg.ideal_file);
    if (!data.names.params.empty()) return {"verify expects a fully specialized ideal\n", 2};
    std::vector<Poly<Cyclotomic>> polys;
    for (const auto& gen : data.generators) {
        std::vector<Term<Cyclotomic>> ts;
        for (const auto& t : gen.terms) ts.push_back({t.m, t.c.constant_value()});
        polys.push_back(poly_normalize(std::move(ts), data.names.order));
    }
    std::vector<Matrix> maps;
    if (!cfg.maps_file.empty()) maps = load_maps_file(cfg.maps_file);

    VerifyOptions opt;
    opt.order = data.names.order;
    opt.smooth_mode = cfg.smooth;
    VerificationReport rep =
        verify_curve(polys, (int)data.names.vars.size(), cfg.genus, maps, opt);
    std::string text = seed_line(cfg) + rep.to_text();
    if (!cfg.out_dir.empty()) write_text_file(out_path(cfg, "verify.txt"), text);
    return {text, rep.all_ok() ? 0 : 3};
}

CommandResult cmd_pipeline(const JobConfig& cfg) {
    PipelineContext ctx = PipelineContext::load(cfg, true, true);
    std::ostringstream os;
    os << seed_line(cfg);
    ScreenResult sc = screen(ctx.skg, ctx.table);
    os << "genus: " << sc.genus << "\n";
    if (sc.hyperelliptic) {
        os << "advisory: hyperelliptic surface; halting (no canonical ideal pipeline)\n";
        if (!cfg.out_dir.empty()) write_text_file(out_path(cfg, "pipeline.txt"), os.str());
        return {os.str(), 0};
    }

    CandidateResult cand = make_candidate(ctx, cfg);
    if (!cfg.out_dir.empty())
        save_ideal_file(out_path(cfg, "candidate.ideal"), cand.ideal,
                        {"seed: " + std::to_string(cfg.seed)});
    os << "candidate_generators: " << cand.ideal.generators.size() << "\n";
    os << "free_parameters: " << cand.ideal.free_params().size() << "\n";

    // invariance maps: transposed group matrices act as substitutions
    std::vector<Matrix> maps;
    for (int i = 0; i < ctx.group.num_generators(); ++i)
        maps.push_back(ctx.rep.gen_images[(size_t)i].transpose());

    VerifyOptions vopt;
    vopt.order = cand.ideal.order;
    vopt.smooth_mode = cfg.smooth;

    int good = 0, bad = 0;
    auto verify_assignment = [&](const std::vector<Cyclotomic>& full, const std::string& label)
        -> bool {
        auto fiber = specialize(cand.ideal, full);
        VerificationReport rep =
            verify_curve(fiber, cand.ideal.nvars, ctx.genus, maps, vopt, (uint64_t)ctx.group.order());
        if (!cfg.out_dir.empty()) {
            RingNames names;
            for (int v = 0; v < cand.ideal.nvars; ++v)
                names.vars.push_back("x" + std::to_string(v));
            names.order = cand.ideal.order;
            std::ostringstream ideal_text;
            ideal_text << "# " << label << "\nvars: ";
            for (size_t i = 0; i < names.vars.size(); ++i)
                ideal_text << (i ? ", " : "") << names.vars[i];
            ideal_text << "\norder: "
                        << (cand.ideal.order.kind == OrderKind::lex ? "lex" : "grevlex") << "\n";
            for (const auto& f : fiber) ideal_text << "poly: " << poly_str(f, names) << "\n";
            write_text_file(out_path(cfg, label + ".ideal"), ideal_text.str());
            write_text_file(out_path(cfg, label + ".verify.txt"), rep.to_text());
        }
        os << label << ": hilbert " << rep.hilbert_str << ", "
           << (rep.all_ok() ? "verified" : "FAILED") << "\n";
        return rep.all_ok();
    };

    if (cand.ideal.free_params().empty()) {
        // no parameters: verify the candidate directly
        std::vector<Cyclotomic> full((size_t)cand.ideal.nparams, Cyclotomic(1));
        bool ok = verify_assignment(full, "specialization_0");
        good += ok;
        bad += !ok;
    } else {
        StratifyOptions sopt{cfg.max_strata, cfg.max_pairs, cfg.degree_cap};
        StratumTree tree = explore(cand.ideal, sopt);
        int counter = 0;
        for (auto& s : tree.strata) {
            if (s.status != StratumStatus::explored || s.equations.empty()) continue;
            try {
                s.solutions = solve_stratum(s, cand.ideal);
            } catch (const unsolved_system&) {
                s.status = StratumStatus::unsolved;
                continue;
            }
            if (s.solutions.empty()) continue;
            s.status = StratumStatus::specialized;
            bool all_good = !s.solutions.empty();
            for (const auto& sol : s.solutions) {
                std::string label = "specialization_" + std::to_string(counter++);
                bool ok = false;
                try {
                    ok = verify_assignment(sol, label);
                } catch (const degenerate_specialization&) {
                    os << label << ": degenerate specialization\n";
                }
                good += ok;
                bad += !ok;
                all_good = all_good && ok;
            }
            s.status = all_good ? StratumStatus::verified_good : StratumStatus::verified_bad;
        }
        if (!cfg.out_dir.empty())
            write_text_file(out_path(cfg, "strata.txt"),
                            seed_line(cfg) + stratum_report(tree, cand.ideal));
    }

    os << "verified_good: " << good << "\n";
    os << "verified_bad: " << bad << "\n";
    if (!cfg.out_dir.empty()) write_text_file(out_path(cfg, "pipeline.txt"), os.str());
    return {os.str(), good > 0 ? 0 : 3};
}

} // namespace canoneq
