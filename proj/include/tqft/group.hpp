#pragma once

#include <string>
#include <vector>

namespace tqft {

/// One conjugacy class: sorted member list, representative = minimal member.
struct ConjugacyClass {
    int representative = 0;
    std::vector<int> members;
    int size() const { return static_cast<int>(members.size()); }
};

/// A finite group as an explicit multiplication table.  Elements are dense
/// indices 0..n-1 with the identity fixed at index 0; class and element
/// orderings are canonical (minimal index first) so that every derived matrix
/// is reproducible byte-for-byte.  Immutable after construction.
class FiniteGroup {
public:
    /// Validates the full set of group axioms and builds class structure.
    /// Associativity is checked exhaustively for order <= 512 and by Light's
    /// test (against a greedy generating set) above that.
    static FiniteGroup from_cayley(std::string name, std::vector<std::vector<int>> cayley);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);   // order 2n
    static FiniteGroup symmetric(int n);  // order n!
    static FiniteGroup quaternion8();
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    /// Preset by name: "trivial", "cyclic"/"Z", "dihedral"/"D", "symmetric"/"S",
    /// "quaternion8"/"Q8", "product".
    static FiniteGroup preset(const std::string& name, const std::vector<int>& params);

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    int mul(int a, int b) const { return cayley_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int conjugate(int g, int h) const { return mul(mul(h, g), inverse_[h]); } // h g h^-1
    int commutator(int a, int b) const { return mul(mul(a, b), mul(inverse_[a], inverse_[b])); }
    bool abelian() const { return abelian_; }
    const std::vector<std::vector<int>>& cayley() const { return cayley_; }

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int class_of(int g) const { return class_of_[g]; }

    static int order_cap;  // construction guard, default 5040

    FiniteGroup() = default; // empty shell; only valid after assignment from a factory

private:
    void finalize(bool trusted); // inverse/classes/validation
    std::string name_;
    int n_ = 0;
    std::vector<std::vector<int>> cayley_;
    std::vector<int> inverse_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_;
    bool abelian_ = false;
};

/// A subgroup carried both as parent-element indices and as a re-indexed
/// group of its own (identity at index 0, elements in ascending parent order).
struct Subgroup {
    std::vector<int> elements;     // sorted parent indices; elements[0] == 0 iff it contains the identity slot first
    FiniteGroup embedded_cayley;
    int parent_of(int sub_index) const { return elements[sub_index]; }
    int index_of(int parent_element) const; // -1 when not a member
    int order() const { return static_cast<int>(elements.size()); }
};

/// {h : hg = gh}; |centralizer| * |class(g)| = |G|.
Subgroup centralizer(const FiniteGroup& G, int g);

/// Subgroup from an arbitrary element set (must be closed; Lagrange checked).
Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> elements);

/// Class-algebra structure constants N[a][b][c] with
/// e_a e_b = sum_c N[a][b][c] e_c; computed by counting, so exact integers.
struct ClassTensor {
    int r = 0;
    std::vector<long long> n;   // r*r*r, [a*r*r + b*r + c]
    long long operator()(int a, int b, int c) const { return n[(a * r + b) * r + c]; }
};

ClassTensor class_structure_constants(const FiniteGroup& G);

} // namespace tqft
