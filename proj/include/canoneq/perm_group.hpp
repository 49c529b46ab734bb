#ifndef CANONEQ_PERM_GROUP_HPP
#define CANONEQ_PERM_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "canoneq/linalg.hpp"

namespace canoneq {

enum class Backend { permutation, matrix };

/// A group element given either as a permutation of {0..N-1} or as a square
/// matrix of cyclotomic entries.
struct GroupElement {
    Backend backend = Backend::permutation;
    std::vector<int> perm; // perm[i] = image of i
    Matrix mat;

    static GroupElement from_perm(std::vector<int> p);
    static GroupElement from_matrix(Matrix m);

    int degree() const {
        return backend == Backend::permutation ? (int)perm.size() : mat.rows;
    }
    bool operator==(const GroupElement& o) const;
    static int cmp(const GroupElement& a, const GroupElement& b);
};

GroupElement element_mul(const GroupElement& a, const GroupElement& b);
GroupElement element_identity(Backend backend, int degree);

/// An enumerated finite group: breadth-first closure of its generators with
/// exact element equality, plus conjugacy classes, centralizers and power
/// maps. Elements are indexed generators-first, then in BFS discovery order;
/// classes are sorted by (element order, class size, discovery index).
/// Immutable after enumeration.
class GroupModel {
  public:
    static constexpr int default_max_order = 10000;

    static GroupModel enumerate(const std::vector<GroupElement>& generators,
                                int max_order = default_max_order);

    int order() const { return (int)elements_.size(); }
    Backend backend() const { return backend_; }
    int degree() const { return degree_; }
    const GroupElement& element(int i) const { return elements_[i]; }
    int identity() const { return identity_; }
    int num_generators() const { return (int)gen_indices_.size(); }
    int generator(int i) const { return gen_indices_[i]; }

    int mul(int a, int b) const;
    int inv(int a) const { return inv_[a]; }
    int element_power(int a, long k) const;
    int element_order(int a) const { return order_[a]; }
    int centralizer_order(int a) const { return centralizer_[a]; }

    int num_classes() const { return (int)class_rep_.size(); }
    int class_of(int element) const { return class_of_[element]; }
    int class_rep(int c) const { return class_rep_[c]; }
    int class_size(int c) const { return class_size_[c]; }
    /// Class of rep^k for any representative of class c.
    int power_class(int c, long k) const;
    unsigned exponent() const; // lcm of element orders

    /// Generator-index word for element i (empty word = identity); the
    /// element equals the left-to-right product of the listed generators.
    std::vector<int> word(int i) const;
    /// BFS word DAG: element i = element(parent) * generator(gen_index);
    /// parent is -1 for the generators themselves.
    std::pair<int, int> parent(int i) const { return parent_[i]; }
    /// Index of an element value, or -1.
    int find(const GroupElement& e) const;
    /// Evaluates a word in generator indices (with integer powers).
    int evaluate_word(const std::vector<std::pair<int, long>>& factors) const;

  private:
    Backend backend_ = Backend::permutation;
    int degree_ = 0;
    int identity_ = 0;
    std::vector<GroupElement> elements_;
    std::vector<int> gen_indices_;
    std::vector<std::vector<int>> right_by_gen_; // x -> x * gen_j
    std::vector<std::pair<int, int>> parent_;    // (parent, gen) word DAG; (-1, j) for generators
    std::vector<std::vector<int>> table_;        // full product table when small
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<int> centralizer_;
    std::vector<int> class_of_;
    std::vector<int> class_rep_;
    std::vector<int> class_size_;
    std::map<GroupElement, int, bool (*)(const GroupElement&, const GroupElement&)> index_{
        [](const GroupElement& a, const GroupElement& b) { return GroupElement::cmp(a, b) < 0; }};

  public:
    GroupModel(const GroupModel&) = delete;
    GroupModel& operator=(const GroupModel&) = delete;
    GroupModel(GroupModel&&) = default;
    GroupModel& operator=(GroupModel&&) = default;

    /// Empty model placeholder; fill via move-assignment from enumerate().
    GroupModel() = default;

  private:
    void compute_classes();
};

} // namespace canoneq

#endif
