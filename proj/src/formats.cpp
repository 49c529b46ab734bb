#include "canoneq/formats.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace canoneq {

namespace {

// ---------------------------------------------------------------- lexer ---

struct Lexer {
    std::string s;
    size_t pos = 0;

    explicit Lexer(std::string text) : s(std::move(text)) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw parse_error("expected '" + std::string(1, c) + "' at position " +
                              std::to_string(pos) + " in: " + s);
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw parse_error("expected an integer in: " + s);
        return std::stol(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (start == pos) throw parse_error("expected an identifier in: " + s);
        return s.substr(start, pos - start);
    }
};

// Expression values are parametric polynomials; division and negative powers
// are only defined for scalar values.
struct ExprParser {
    Lexer lex;
    const RingNames* names;

    ExprParser(std::string text, const RingNames* n) : lex(std::move(text)), names(n) {}

    int nvars() const { return names ? (int)names->vars.size() : 0; }

    PPoly constant(const Cyclotomic& c) {
        PPoly p;
        if (!c.is_zero()) p.terms.push_back({Monomial::one(nvars()), CPoly(c)});
        return p;
    }

    std::optional<Cyclotomic> as_scalar(const PPoly& p) {
        if (p.is_zero()) return Cyclotomic(0);
        if (p.terms.size() != 1) return std::nullopt;
        if (!p.terms[0].m.is_one()) return std::nullopt;
        if (!p.terms[0].c.is_constant()) return std::nullopt;
        return p.terms[0].c.constant_value();
    }

    PPoly parse() {
        PPoly v = expr();
        if (!lex.eof()) throw parse_error("trailing input in expression: " + lex.s);
        return v;
    }

    PPoly expr() {
        const TermOrder& ord = names ? names->order : CPoly::order();
        bool neg = false;
        if (lex.accept('-'))
            neg = true;
        else
            lex.accept('+');
        PPoly acc = term();
        if (neg) acc = poly_neg(acc);
        for (;;) {
            if (lex.accept('+')) {
                acc = poly_add(acc, term(), ord);
            } else if (lex.accept('-')) {
                acc = poly_sub(acc, term(), ord);
            } else {
                break;
            }
        }
        return acc;
    }

    PPoly term() {
        const TermOrder& ord = names ? names->order : CPoly::order();
        PPoly acc = factor();
        for (;;) {
            if (lex.accept('*')) {
                acc = poly_mul(acc, factor(), ord);
            } else if (lex.accept('/')) {
                PPoly d = factor();
                auto s = as_scalar(d);
                if (!s || s->is_zero())
                    throw parse_error("division is only defined by nonzero scalars");
                acc = poly_scale(acc, CPoly(s->inverse()));
            } else {
                break;
            }
        }
        return acc;
    }

    PPoly factor() {
        PPoly b = base();
        if (lex.accept('^')) {
            long e = lex.integer();
            if (e < 0) {
                auto s = as_scalar(b);
                if (!s || s->is_zero())
                    throw parse_error("negative powers are only defined for nonzero scalars");
                return constant(s->pow(e));
            }
            const TermOrder& ord = names ? names->order : CPoly::order();
            PPoly acc = constant(Cyclotomic(1));
            for (long k = 0; k < e; ++k) acc = poly_mul(acc, b, ord);
            return acc;
        }
        return b;
    }

    PPoly base() {
        if (lex.accept('(')) {
            PPoly v = expr();
            lex.expect(')');
            return v;
        }
        char c = lex.peek();
        if (std::isdigit((unsigned char)c)) {
            long num = lex.integer();
            // rational a/b is handled by the division operator in term()
            return constant(Cyclotomic(num));
        }
        std::string id = lex.ident();
        if (id == "i") return constant(Cyclotomic::root_of_unity(4, 1));
        if (id.size() > 1 && id[0] == 'z' && std::isdigit((unsigned char)id[1])) {
            unsigned n = (unsigned)std::stoul(id.substr(1));
            long k = 1;
            return constant(Cyclotomic::root_of_unity(n, k));
        }
        if (names) {
            for (size_t v = 0; v < names->vars.size(); ++v)
                if (names->vars[v] == id) {
                    PPoly p;
                    p.terms.push_back({Monomial::var((int)v, nvars()), CPoly(Cyclotomic(1))});
                    return p;
                }
            for (size_t pidx = 0; pidx < names->params.size(); ++pidx)
                if (names->params[pidx] == id) {
                    PPoly p;
                    p.terms.push_back({Monomial::one(nvars()), CPoly::param((int)pidx)});
                    return p;
                }
        }
        throw parse_error("unknown identifier '" + id + "'");
    }
};

std::string scalar_text(const Cyclotomic& c, bool parenthesize_sums) {
    std::string s = c.str();
    bool needs_parens = false;
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') needs_parens = true;
    if (parenthesize_sums && needs_parens) return "(" + s + ")";
    return s;
}

std::string mono_text(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[v];
        if (m.e[v] > 1) s += "^" + std::to_string(m.e[v]);
    }
    return s;
}

} // namespace

Cyclotomic parse_scalar(const std::string& text) {
    ExprParser p(text, nullptr);
    PPoly v = p.parse();
    auto s = p.as_scalar(v);
    if (!s) throw parse_error("expression is not a scalar: " + text);
    return *s;
}

PPoly parse_ppoly(const std::string& text, const RingNames& names) {
    ExprParser p(text, &names);
    return p.parse();
}

Poly<Cyclotomic> parse_poly(const std::string& text, const RingNames& names) {
    PPoly f = parse_ppoly(text, names);
    std::vector<Term<Cyclotomic>> ts;
    for (const auto& t : f.terms) {
        if (!t.c.is_constant())
            throw parse_error("polynomial unexpectedly contains parameters: " + text);
        ts.push_back({t.m, t.c.constant_value()});
    }
    return poly_normalize(std::move(ts), names.order);
}

std::string cpoly_str(const CPoly& c, const RingNames& names) {
    if (c.is_zero()) return "0";
    if (c.is_constant()) return scalar_text(c.constant_value(), false);
    std::ostringstream os;
    bool first = true;
    for (const auto& t : c.rep().terms) {
        std::string coeff = scalar_text(t.c, true);
        std::string mono;
        for (size_t v = 0; v < t.m.e.size(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v < names.params.size() ? names.params[v] : "c" + std::to_string(v + 1);
            if (t.m.e[v] > 1) mono += "^" + std::to_string(t.m.e[v]);
        }
        std::string piece;
        if (mono.empty()) {
            piece = coeff;
        } else if (coeff == "1") {
            piece = mono;
        } else if (coeff == "-1") {
            piece = "-" + mono;
        } else {
            piece = coeff + "*" + mono;
        }
        if (first) {
            os << piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
    }
    return os.str();
}

std::string ppoly_str(const PPoly& f, const RingNames& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms) {
        std::string mono = mono_text(t.m, names.vars);
        std::string coeff;
        bool coeff_is_sum = !t.c.is_constant() && t.c.rep().terms.size() > 1;
        if (t.c.is_constant()) {
            coeff = scalar_text(t.c.constant_value(), true);
        } else {
            coeff = cpoly_str(t.c, names);
            if (coeff_is_sum) coeff = "(" + coeff + ")";
            else {
                // single-term parametric coefficient may still need parens
                if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
            }
        }
        std::string piece;
        if (mono.empty()) {
            piece = coeff;
        } else if (coeff == "1") {
            piece = mono;
        } else if (coeff == "-1") {
            piece = "-" + mono;
        } else {
            piece = coeff + "*" + mono;
        }
        if (first) {
            os << piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
    }
    return os.str();
}

std::string poly_str(const Poly<Cyclotomic>& f, const RingNames& names) {
    return ppoly_str(ppoly_from_poly(f), names);
}

// ------------------------------------------------------------- file I/O ---

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path);
    if (!out) throw error("cannot write file: " + path);
    out << content;
}

namespace {

// Lines with comments stripped; keeps blank lines out.
std::vector<std::string> clean_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    return lines;
}

bool key_value(const std::string& line, const std::string& key, std::string* value) {
    if (line.rfind(key + ":", 0) != 0) return false;
    *value = line.substr(key.size() + 1);
    size_t a = value->find_first_not_of(" \t");
    *value = a == std::string::npos ? "" : value->substr(a);
    return true;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    for (auto& p : parts) {
        size_t a = p.find_first_not_of(" \t");
        size_t b = p.find_last_not_of(" \t");
        p = a == std::string::npos ? "" : p.substr(a, b - a + 1);
    }
    return parts;
}

GroupElement parse_perm_line(const std::string& text, int degree) {
    // cycle notation: (1 2)(3 4 5) with spaces or commas
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] != '(') ++pos;
        if (pos >= text.size()) break;
        ++pos;
        std::vector<int> cycle;
        std::string num;
        while (pos < text.size() && text[pos] != ')') {
            char c = text[pos];
            if (std::isdigit((unsigned char)c)) {
                num += c;
            } else if (!num.empty()) {
                cycle.push_back(std::stoi(num) - 1);
                num.clear();
            }
            ++pos;
        }
        if (!num.empty()) cycle.push_back(std::stoi(num) - 1);
        ++pos;
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (from < 0 || from >= degree) throw parse_error("cycle entry out of range");
            images[(size_t)from] = to;
        }
    }
    return GroupElement::from_perm(std::move(images));
}

} // namespace

GroupFileData load_group_file(const std::string& path) {
    auto lines = clean_lines(read_text_file(path));
    GroupFileData out;
    size_t i = 0;
    std::string value;
    bool have_backend = false, have_degree = false;
    while (i < lines.size() && !(have_backend && have_degree)) {
        if (key_value(lines[i], "backend", &value)) {
            if (value == "perm")
                out.backend = Backend::permutation;
            else if (value == "matrix")
                out.backend = Backend::matrix;
            else
                throw parse_error("unknown backend: " + value);
            have_backend = true;
        } else if (key_value(lines[i], "degree", &value) || key_value(lines[i], "dim", &value)) {
            out.degree = std::stoi(value);
            have_degree = true;
        } else {
            throw parse_error("unexpected line in group file header: " + lines[i]);
        }
        ++i;
    }
    if (!have_backend || !have_degree) throw parse_error("group file lacks backend/degree");

    while (i < lines.size()) {
        if (key_value(lines[i], "character", &value)) {
            for (const auto& part : split_commas(value))
                out.declared_character.push_back(parse_scalar(part));
            ++i;
            continue;
        }
        if (!key_value(lines[i], "gen", &value))
            throw parse_error("expected gen: block, got: " + lines[i]);
        if (out.backend == Backend::permutation) {
            out.generators.push_back(parse_perm_line(value, out.degree));
            ++i;
        } else {
            ++i;
            Matrix m(out.degree, out.degree);
            for (int r = 0; r < out.degree; ++r, ++i) {
                if (i >= lines.size()) throw parse_error("matrix generator is truncated");
                auto entries = split_commas(lines[i]);
                if ((int)entries.size() != out.degree)
                    throw parse_error("matrix row has wrong length: " + lines[i]);
                for (int c = 0; c < out.degree; ++c) m.at(r, c) = parse_scalar(entries[(size_t)c]);
            }
            out.generators.push_back(GroupElement::from_matrix(std::move(m)));
        }
    }
    if (out.generators.empty()) throw parse_error("group file has no generators");
    return out;
}

void save_group_file(const std::string& path, const GroupFileData& data) {
    std::ostringstream os;
    os << "backend: " << (data.backend == Backend::permutation ? "perm" : "matrix") << "\n";
    os << (data.backend == Backend::permutation ? "degree: " : "dim: ") << data.degree << "\n";
    for (const auto& g : data.generators) {
        if (data.backend == Backend::permutation) {
            os << "gen:";
            std::vector<bool> seen((size_t)data.degree, false);
            bool any = false;
            for (int s = 0; s < data.degree; ++s) {
                if (seen[(size_t)s] || g.perm[(size_t)s] == s) continue;
                os << " (";
                int cur = s;
                bool first = true;
                while (!seen[(size_t)cur]) {
                    seen[(size_t)cur] = true;
                    os << (first ? "" : " ") << (cur + 1);
                    first = false;
                    cur = g.perm[(size_t)cur];
                }
                os << ")";
                any = true;
            }
            if (!any) os << " ()";
            os << "\n";
        } else {
            os << "gen:\n";
            for (int r = 0; r < data.degree; ++r) {
                for (int c = 0; c < data.degree; ++c)
                    os << (c ? ", " : "") << g.mat.at(r, c).str();
                os << "\n";
            }
        }
    }
    write_text_file(path, os.str());
}

std::vector<Matrix> load_maps_file(const std::string& path) {
    auto lines = clean_lines(read_text_file(path));
    size_t i = 0;
    std::string value;
    int dim = 0;
    if (i < lines.size() && key_value(lines[i], "dim", &value)) {
        dim = std::stoi(value);
        ++i;
    } else {
        throw parse_error("maps file must start with dim:");
    }
    std::vector<Matrix> maps;
    while (i < lines.size()) {
        if (!key_value(lines[i], "map", &value))
            throw parse_error("expected map: block, got: " + lines[i]);
        ++i;
        Matrix m(dim, dim);
        for (int r = 0; r < dim; ++r, ++i) {
            if (i >= lines.size()) throw parse_error("map block is truncated");
            auto entries = split_commas(lines[i]);
            if ((int)entries.size() != dim)
                throw parse_error("map row has wrong length: " + lines[i]);
            for (int c = 0; c < dim; ++c) m.at(r, c) = parse_scalar(entries[(size_t)c]);
        }
        maps.push_back(std::move(m));
    }
    if (maps.empty()) throw parse_error("maps file has no maps");
    return maps;
}

void save_maps_file(const std::string& path, const std::vector<Matrix>& maps) {
    std::ostringstream os;
    os << "dim: " << (maps.empty() ? 0 : maps[0].rows) << "\n";
    for (const auto& m : maps) {
        os << "map:\n";
        for (int r = 0; r < m.rows; ++r) {
            for (int c = 0; c < m.cols; ++c) os << (c ? ", " : "") << m.at(r, c).str();
            os << "\n";
        }
    }
    write_text_file(path, os.str());
}

SkgFileData load_skg_file(const std::string& path) {
    auto lines = clean_lines(read_text_file(path));
    SkgFileData out;
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    std::string value;
    for (const auto& line : lines) {
        if (key_value(line, "group", &value)) {
            out.group_path = (dir / value).string();
        } else if (key_value(line, "signature", &value)) {
            // (g0; e1, e2, ...)
            auto open = value.find('(');
            auto semi = value.find(';');
            auto close = value.find(')');
            if (open == std::string::npos || semi == std::string::npos ||
                close == std::string::npos)
                throw parse_error("signature must look like (g0; e1, ..., er)");
            out.signature.g0 = std::stoi(value.substr(open + 1, semi - open - 1));
            for (const auto& part : split_commas(value.substr(semi + 1, close - semi - 1)))
                if (!part.empty()) out.signature.branch_orders.push_back(std::stoi(part));
        } else if (key_value(line, "skg", &value)) {
            out.branch_words = split_commas(value);
        } else if (key_value(line, "hyperbolic", &value)) {
            out.hyperbolic_words = split_commas(value);
        } else {
            throw parse_error("unexpected line in skg file: " + line);
        }
    }
    if (out.group_path.empty()) throw parse_error("skg file lacks group:");
    return out;
}

void save_skg_file(const std::string& path, const SkgFileData& data) {
    std::ostringstream os;
    os << "group: " << data.group_path << "\n";
    os << "signature: (" << data.signature.g0 << ";";
    for (size_t i = 0; i < data.signature.branch_orders.size(); ++i)
        os << (i ? ", " : " ") << data.signature.branch_orders[i];
    os << ")\n";
    if (!data.hyperbolic_words.empty()) {
        os << "hyperbolic: ";
        for (size_t i = 0; i < data.hyperbolic_words.size(); ++i)
            os << (i ? ", " : "") << data.hyperbolic_words[i];
        os << "\n";
    }
    os << "skg: ";
    for (size_t i = 0; i < data.branch_words.size(); ++i)
        os << (i ? ", " : "") << data.branch_words[i];
    os << "\n";
    write_text_file(path, os.str());
}

namespace {

// word := factor (('*') factor)* ; factor := base ['^' int] ;
// base := gN | '(' word ')'
struct WordParser {
    Lexer lex;
    const GroupModel& g;

    WordParser(std::string text, const GroupModel& group) : lex(std::move(text)), g(group) {}

    int parse() {
        int v = word();
        if (!lex.eof()) throw parse_error("trailing input in group word: " + lex.s);
        return v;
    }
    int word() {
        int acc = factor();
        while (lex.accept('*')) acc = g.mul(acc, factor());
        return acc;
    }
    int factor() {
        int b = base();
        if (lex.accept('^')) {
            long e = lex.integer();
            return g.element_power(b, e);
        }
        return b;
    }
    int base() {
        if (lex.accept('(')) {
            int v = word();
            lex.expect(')');
            return v;
        }
        std::string id = lex.ident();
        if (id == "e" || id == "id") return g.identity();
        if (id.size() >= 2 && id[0] == 'g') {
            int idx = std::stoi(id.substr(1));
            if (idx < 1 || idx > g.num_generators())
                throw parse_error("word references unknown generator " + id);
            return g.generator(idx - 1);
        }
        throw parse_error("bad token in group word: " + id);
    }
};

} // namespace

int parse_group_word(const std::string& text, const GroupModel& group) {
    WordParser p(text, group);
    return p.parse();
}

SurfaceKernelData resolve_skg(const SkgFileData& data, const GroupModel& group) {
    SurfaceKernelData skg;
    skg.group = &group;
    skg.signature = data.signature;
    for (size_t i = 0; i + 1 < data.hyperbolic_words.size(); i += 2) {
        skg.a_elems.push_back(parse_group_word(data.hyperbolic_words[i], group));
        skg.b_elems.push_back(parse_group_word(data.hyperbolic_words[i + 1], group));
    }
    for (const auto& w : data.branch_words)
        skg.branch_elems.push_back(parse_group_word(w, group));
    return skg;
}

void save_table_file(const std::string& path, const CharacterTable& table) {
    std::ostringstream os;
    os << "classes: " << table.irreducibles.size() << "\n";
    for (const auto& chi : table.irreducibles) {
        os << "row: ";
        for (size_t i = 0; i < chi.values.size(); ++i)
            os << (i ? ", " : "") << chi.values[i].str();
        os << "\n";
    }
    write_text_file(path, os.str());
}

CharacterTable load_table_file(const std::string& path, const GroupModel& group) {
    auto lines = clean_lines(read_text_file(path));
    CharacterTable table;
    table.group = &group;
    std::string value;
    for (const auto& line : lines) {
        if (key_value(line, "classes", &value)) {
            if (std::stoi(value) != group.num_classes())
                throw parse_error("table class count does not match the group");
        } else if (key_value(line, "row", &value)) {
            Character chi{&group, {}};
            for (const auto& part : split_commas(value)) chi.values.push_back(parse_scalar(part));
            if ((int)chi.values.size() != group.num_classes())
                throw parse_error("table row has wrong length");
            table.irreducibles.push_back(std::move(chi));
        } else {
            throw parse_error("unexpected line in table file: " + line);
        }
    }
    if ((int)table.irreducibles.size() != group.num_classes())
        throw parse_error("table row count does not match the class count");
    // orthogonality validation
    for (size_t i = 0; i < table.irreducibles.size(); ++i)
        for (size_t j = i; j < table.irreducibles.size(); ++j)
            if (inner_product(table.irreducibles[i], table.irreducibles[j]) !=
                Cyclotomic(i == j ? 1 : 0))
                throw parse_error("loaded table fails orthogonality");
    return table;
}

IdealFileData load_ideal_file(const std::string& path) {
    auto lines = clean_lines(read_text_file(path));
    IdealFileData out;
    std::string value;
    std::vector<std::string> poly_lines, nonzero_lines;
    for (const auto& line : lines) {
        if (key_value(line, "vars", &value)) {
            out.names.vars = split_commas(value);
        } else if (key_value(line, "params", &value)) {
            out.names.params = split_commas(value);
        } else if (key_value(line, "order", &value)) {
            if (value == "lex")
                out.names.order = TermOrder{OrderKind::lex};
            else if (value == "grevlex")
                out.names.order = TermOrder{OrderKind::grevlex};
            else
                throw parse_error("unknown order: " + value);
        } else if (key_value(line, "assume_nonzero", &value)) {
            nonzero_lines.push_back(value);
        } else if (key_value(line, "poly", &value)) {
            poly_lines.push_back(value);
        } else {
            throw parse_error("unexpected line in ideal file: " + line);
        }
    }
    if (out.names.vars.empty()) throw parse_error("ideal file lacks vars:");
    for (const auto& text : poly_lines) out.generators.push_back(parse_ppoly(text, out.names));
    for (const auto& text : nonzero_lines) {
        PPoly p = parse_ppoly(text, out.names);
        if (p.terms.size() >= 1 && p.terms[0].m.is_one() && p.terms.size() == 1)
            out.assume_nonzero.push_back(p.terms[0].c);
        else
            throw parse_error("assume_nonzero must be a parameter polynomial: " + text);
    }
    return out;
}

void save_ideal_file(const std::string& path, const ParamIdeal& ideal,
                     const std::vector<std::string>& comments) {
    RingNames names;
    for (int v = 0; v < ideal.nvars; ++v) names.vars.push_back("x" + std::to_string(v));
    for (int p = 0; p < ideal.nparams; ++p) names.params.push_back("c" + std::to_string(p + 1));
    names.order = ideal.order;

    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << "\n";
    for (const auto& l : ideal.log) os << "# " << l << "\n";
    for (int p = 0; p < ideal.nparams; ++p) {
        const auto& pi = ideal.params[(size_t)p];
        if (pi.fixed_to_one || pi.irreducible < 0) continue;
        os << "# " << names.params[(size_t)p] << " multiplies copy " << (pi.copy + 1)
           << " of irreducible component " << pi.irreducible << " (combination "
           << (pi.combination + 1) << ")\n";
    }
    os << "vars: ";
    for (size_t i = 0; i < names.vars.size(); ++i) os << (i ? ", " : "") << names.vars[i];
    os << "\n";
    auto free = ideal.free_params();
    if (!free.empty()) {
        os << "params: ";
        for (size_t i = 0; i < free.size(); ++i)
            os << (i ? ", " : "") << names.params[(size_t)free[i]];
        os << "\n";
    }
    os << "order: " << (ideal.order.kind == OrderKind::lex ? "lex" : "grevlex") << "\n";
    for (const auto& nv : ideal.nonvanishing)
        os << "assume_nonzero: " << cpoly_str(nv, names) << "\n";
    for (const auto& gen : ideal.generators) os << "poly: " << ppoly_str(gen, names) << "\n";
    write_text_file(path, os.str());
}

std::string stratum_report(const StratumTree& tree, const ParamIdeal& ideal) {
    RingNames names;
    for (int v = 0; v < ideal.nvars; ++v) names.vars.push_back("x" + std::to_string(v));
    for (int p = 0; p < ideal.nparams; ++p) names.params.push_back("c" + std::to_string(p + 1));
    names.order = ideal.order;

    std::ostringstream os;
    if (tree.budget_hit) os << "# budget reached: the stratum list is partial\n";
    for (const auto& s : tree.strata) {
        os << "stratum " << s.id << ":\n";
        if (s.parent >= 0) os << "  parent: " << s.parent << "\n";
        os << "  status: " << stratum_status_name(s.status) << "\n";
        os << "  equations:";
        if (s.equations.empty()) os << " (none)";
        for (const auto& e : s.equations) os << "  [" << cpoly_str(e, names) << "]";
        os << "\n  nonvanishing:";
        if (s.nonvanishing.empty()) os << " (none)";
        for (const auto& e : s.nonvanishing) os << "  [" << cpoly_str(e, names) << "]";
        os << "\n";
        for (const auto& ev : s.evidence) os << "  evidence: " << ev << "\n";
        if (s.status == StratumStatus::explored || s.status == StratumStatus::capped ||
            s.status == StratumStatus::verified_good || s.status == StratumStatus::verified_bad ||
            s.status == StratumStatus::specialized) {
            os << "  hilbert_polynomial: " << s.hilbert.hp_str() << "\n";
            os << "  initial_ideal:";
            for (const auto& m : s.initial_ideal) os << " " << mono_text(m, names.vars);
            os << "\n";
        }
        for (const auto& sol : s.solutions) {
            os << "  solution:";
            auto free = ideal.free_params();
            for (int f : free)
                os << " " << names.params[(size_t)f] << " = " << sol[(size_t)f].str() << ";";
            os << "\n";
        }
        if (!s.children.empty()) {
            os << "  children:";
            for (int c : s.children) os << " " << c;
            os << "\n";
        }
    }
    return os.str();
}

std::map<std::string, std::string> load_kv_file(const std::string& path) {
    std::map<std::string, std::string> out;
    for (const auto& line : clean_lines(read_text_file(path))) {
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        size_t a = value.find_first_not_of(" \t");
        out[key] = a == std::string::npos ? "" : value.substr(a);
    }
    return out;
}

} // namespace canoneq
