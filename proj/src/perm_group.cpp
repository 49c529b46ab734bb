#include "canoneq/perm_group.hpp"

#include <algorithm>
#include <numeric>

namespace canoneq {

GroupElement GroupElement::from_perm(std::vector<int> p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= (int)p.size() || seen[v])
            throw error("permutation is not a bijection");
        seen[v] = true;
    }
    GroupElement e;
    e.backend = Backend::permutation;
    e.perm = std::move(p);
    return e;
}

GroupElement GroupElement::from_matrix(Matrix m) {
    if (m.rows != m.cols) throw error("group element matrix must be square");
    GroupElement e;
    e.backend = Backend::matrix;
    e.mat = std::move(m);
    return e;
}

bool GroupElement::operator==(const GroupElement& o) const {
    return backend == o.backend && perm == o.perm && mat == o.mat;
}

int GroupElement::cmp(const GroupElement& a, const GroupElement& b) {
    if (a.backend != b.backend) return a.backend < b.backend ? -1 : 1;
    if (a.backend == Backend::permutation) {
        if (a.perm != b.perm) return a.perm < b.perm ? -1 : 1;
        return 0;
    }
    if (a.mat.rows != b.mat.rows) return a.mat.rows < b.mat.rows ? -1 : 1;
    for (size_t i = 0; i < a.mat.a.size(); ++i) {
        int c = Cyclotomic::cmp_structural(a.mat.a[i], b.mat.a[i]);
        if (c != 0) return c;
    }
    return 0;
}

GroupElement element_mul(const GroupElement& a, const GroupElement& b) {
    if (a.backend != b.backend) throw mixed_backends();
    GroupElement r;
    r.backend = a.backend;
    if (a.backend == Backend::permutation) {
        if (a.perm.size() != b.perm.size()) throw error("permutation degrees differ");
        r.perm.resize(a.perm.size());
        for (size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
    } else {
        r.mat = a.mat * b.mat;
    }
    return r;
}

GroupElement element_identity(Backend backend, int degree) {
    GroupElement e;
    e.backend = backend;
    if (backend == Backend::permutation) {
        e.perm.resize(degree);
        std::iota(e.perm.begin(), e.perm.end(), 0);
    } else {
        e.mat = Matrix::identity(degree);
    }
    return e;
}

GroupModel GroupModel::enumerate(const std::vector<GroupElement>& generators, int max_order) {
    if (generators.empty()) throw error("enumerate: no generators");
    GroupModel g;
    g.backend_ = generators[0].backend;
    g.degree_ = generators[0].degree();
    for (const auto& e : generators) {
        if (e.backend != g.backend_) throw mixed_backends();
        if (e.degree() != g.degree_) throw error("generator dimensions differ");
    }

    int ngens = 0;
    for (const auto& e : generators) {
        if (g.index_.count(e)) continue; // duplicate generator
        int idx = (int)g.elements_.size();
        g.elements_.push_back(e);
        g.index_[e] = idx;
        g.parent_.emplace_back(-1, ngens);
        g.gen_indices_.push_back(idx);
        ++ngens;
    }

    // Breadth-first closure under right multiplication by the generators.
    size_t head = 0;
    while (head < g.elements_.size()) {
        GroupElement cur = g.elements_[head]; // copy: vector may reallocate
        std::vector<int> row(ngens, -1);
        for (int j = 0; j < ngens; ++j) {
            GroupElement prod = element_mul(cur, g.elements_[g.gen_indices_[j]]);
            auto it = g.index_.find(prod);
            if (it != g.index_.end()) {
                row[j] = it->second;
            } else {
                int idx = (int)g.elements_.size();
                if (idx >= max_order)
                    throw order_exceeded("group closure exceeds max_order = " +
                                         std::to_string(max_order));
                g.elements_.push_back(prod);
                g.index_[prod] = idx;
                g.parent_.emplace_back((int)head, j);
                row[j] = idx;
            }
        }
        g.right_by_gen_.push_back(std::move(row));
        ++head;
    }

    int n = (int)g.elements_.size();

    // Identity index.
    GroupElement id = element_identity(g.backend_, g.degree_);
    auto it = g.index_.find(id);
    if (it == g.index_.end()) throw internal_error("closure lacks the identity");
    g.identity_ = it->second;

    // Full product table for small groups; word walks otherwise.
    if (n <= 1024) {
        g.table_.assign(n, std::vector<int>(n, -1));
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                auto [pb, j] = g.parent_[b];
                g.table_[a][b] = pb < 0 ? g.right_by_gen_[a][j]
                                        : g.right_by_gen_[g.table_[a][pb]][j];
            }
        }
    }

    // Orders and inverses: walk the power cycle once per element.
    g.order_.assign(n, 0);
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (a == g.identity_) {
            g.order_[a] = 1;
            g.inv_[a] = a;
            continue;
        }
        int prev = a, cur = a, ord = 1;
        while (cur != g.identity_) {
            prev = cur;
            cur = g.mul(cur, a);
            ++ord;
            if (ord > n + 1) throw internal_error("order computation diverged");
        }
        g.order_[a] = ord;
        g.inv_[a] = prev; // a^(ord-1)
    }

    g.compute_classes();
    return g;
}

int GroupModel::mul(int a, int b) const {
    if (!table_.empty()) return table_[a][b];
    // Walk b's generator word from a.
    int cur = a;
    for (int j : word(b)) cur = right_by_gen_[cur][j];
    return cur;
}

std::vector<int> GroupModel::word(int i) const {
    std::vector<int> w;
    int cur = i;
    while (cur >= 0) {
        auto [p, j] = parent_[cur];
        w.push_back(j);
        cur = p;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

int GroupModel::find(const GroupElement& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? -1 : it->second;
}

int GroupModel::element_power(int a, long k) const {
    long o = element_order(a);
    long kk = k % o;
    if (kk < 0) kk += o;
    int acc = identity_, base = a;
    while (kk) {
        if (kk & 1) acc = mul(acc, base);
        kk >>= 1;
        if (kk) base = mul(base, base);
    }
    return acc;
}

int GroupModel::evaluate_word(const std::vector<std::pair<int, long>>& factors) const {
    int acc = identity_;
    for (auto [gen, e] : factors) {
        if (gen < 0 || gen >= num_generators()) throw error("word references unknown generator");
        acc = mul(acc, element_power(gen_indices_[gen], e));
    }
    return acc;
}

int GroupModel::power_class(int c, long k) const {
    return class_of_[element_power(class_rep_[c], k)];
}

unsigned GroupModel::exponent() const {
    unsigned long e = 1;
    for (int c = 0; c < num_classes(); ++c)
        e = std::lcm(e, (unsigned long)order_[class_rep_[c]]);
    return (unsigned)e;
}

void GroupModel::compute_classes() {
    int n = order();
    class_of_.assign(n, -1);
    std::vector<std::vector<int>> classes;
    std::vector<int> first_seen;
    for (int a = 0; a < n; ++a) {
        if (class_of_[a] >= 0) continue;
        int c = (int)classes.size();
        std::vector<int> members;
        for (int t = 0; t < n; ++t) {
            int conj = mul(mul(t, a), inv_[t]);
            if (class_of_[conj] < 0) {
                class_of_[conj] = c;
                members.push_back(conj);
            }
        }
        classes.push_back(std::move(members));
        first_seen.push_back(a);
    }

    // Deterministic class order: (element order, class size, discovery index).
    std::vector<int> idx(classes.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        int ox = order_[first_seen[x]], oy = order_[first_seen[y]];
        if (ox != oy) return ox < oy;
        if (classes[x].size() != classes[y].size()) return classes[x].size() < classes[y].size();
        return first_seen[x] < first_seen[y];
    });
    class_rep_.clear();
    class_size_.clear();
    for (size_t new_c = 0; new_c < idx.size(); ++new_c) {
        int old_c = idx[new_c];
        class_rep_.push_back(first_seen[old_c]);
        class_size_.push_back((int)classes[old_c].size());
        for (int m : classes[old_c]) class_of_[m] = (int)new_c;
    }

    // Centralizer orders, with the orbit-stabilizer cross-check.
    centralizer_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int count = 0;
        for (int t = 0; t < n; ++t)
            if (mul(t, a) == mul(a, t)) ++count;
        centralizer_[a] = count;
        if (count * class_size_[class_of_[a]] != n)
            throw internal_error("centralizer/class size mismatch");
    }
}

} // namespace canoneq
