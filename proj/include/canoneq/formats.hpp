#ifndef CANONEQ_FORMATS_HPP
#define CANONEQ_FORMATS_HPP

#include <string>

#include "canoneq/char_theory.hpp"
#include "canoneq/ideal_builder.hpp"
#include "canoneq/stratifier.hpp"
#include "canoneq/surface_data.hpp"
#include "canoneq/verifier.hpp"

namespace canoneq {

/// Scalar text: `z16^7`, `-1/2*z8 + 3`, full +-*/^() expressions.
Cyclotomic parse_scalar(const std::string& text);
inline std::string scalar_str(const Cyclotomic& c) { return c.str(); }

/// Variable/parameter naming context for polynomial I/O.
struct RingNames {
    std::vector<std::string> vars;
    std::vector<std::string> params;   // name of parameter i (c-index i)
    TermOrder order{OrderKind::grevlex};
};

PPoly parse_ppoly(const std::string& text, const RingNames& names);
Poly<Cyclotomic> parse_poly(const std::string& text, const RingNames& names);
std::string ppoly_str(const PPoly& f, const RingNames& names);
std::string poly_str(const Poly<Cyclotomic>& f, const RingNames& names);
std::string cpoly_str(const CPoly& c, const RingNames& names);

/// Group file: `backend: perm|matrix`, `degree: N` or `dim: N`, then one
/// `gen:` block per generator (cycle notation, or N rows of N comma-separated
/// scalar expressions).
struct GroupFileData {
    Backend backend = Backend::permutation;
    int degree = 0;
    std::vector<GroupElement> generators;
    // optional `character:` row for cross-checking a representation file
    std::vector<Cyclotomic> declared_character;
};
GroupFileData load_group_file(const std::string& path);
void save_group_file(const std::string& path, const GroupFileData& data);

/// Maps file: `dim: N` and `map:` blocks; row i of a block lists the
/// coefficients of the image of x_i (substitution/arrow convention).
std::vector<Matrix> load_maps_file(const std::string& path);
void save_maps_file(const std::string& path, const std::vector<Matrix>& maps);

/// Surface-kernel-generator file: `group: <relative path>`,
/// `signature: (g0; e1, ..., er)`, `skg: <word>, <word>, ...` with words
/// over g1..gr like `(g1*g2)^-1`.
struct SkgFileData {
    std::string group_path; // resolved against the skg file's directory
    Signature signature;
    std::vector<std::string> hyperbolic_words; // a1,b1,...  (2 g0 of them)
    std::vector<std::string> branch_words;
};
SkgFileData load_skg_file(const std::string& path);
void save_skg_file(const std::string& path, const SkgFileData& data);
SurfaceKernelData resolve_skg(const SkgFileData& data, const GroupModel& group);

/// Word over group generators: identifiers g1..gr with * ^ and parentheses.
int parse_group_word(const std::string& text, const GroupModel& group);

/// Character table file: `classes: k` and `row:` lines of scalar values.
void save_table_file(const std::string& path, const CharacterTable& table);
CharacterTable load_table_file(const std::string& path, const GroupModel& group);

/// Ideal file: `vars:`, optional `params:`, `assume_nonzero:` lines and one
/// `poly:` line per generator.
struct IdealFileData {
    RingNames names;
    std::vector<PPoly> generators;
    std::vector<CPoly> assume_nonzero;
};
IdealFileData load_ideal_file(const std::string& path);
void save_ideal_file(const std::string& path, const ParamIdeal& ideal,
                     const std::vector<std::string>& comments = {});

std::string stratum_report(const StratumTree& tree, const ParamIdeal& ideal);

/// Small `key: value` metadata file.
std::map<std::string, std::string> load_kv_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace canoneq

#endif
