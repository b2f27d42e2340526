#pragma once

#include "tqft/group.hpp"
#include "tqft/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace tqft {

/// Complete irreducible character data of a finite group.
/// Rows are irreps (ordered by dimension, then by the lexicographically
/// rounded character vector, so the table is seed-independent), columns are
/// conjugacy classes in the group's canonical class order.
struct CharacterTable {
    std::string group_name;
    int group_order = 0;
    std::vector<ConjugacyClass> classes;
    std::vector<int> dims;          // chi(identity class), snapped to integers
    Eigen::MatrixXcd chi;           // r x r
    std::vector<double> casimirs;   // unset (empty) for finite groups

    int num_irreps() const { return static_cast<int>(dims.size()); }
};

inline constexpr double kTolEq = 1e-9;    // equality tolerance for float checks
inline constexpr double kTolSnap = 1e-6;  // integer-snap tolerance

/// Burnside's method: simultaneously diagonalize the class-sum matrices via a
/// seeded random real combination (conjugated to a normal matrix by the
/// class-size weights), recover dims from the orthogonality normalization and
/// snap them to integers.  Fails loudly if eigenvalues refuse to separate
/// within the retry budget or a dim does not snap.
CharacterTable character_table(const FiniteGroup& G, std::uint64_t seed = kDefaultSeed);

struct OrthogonalityReport {
    double row_defect = 0;   // max |(1/|G|) sum_a |a| chi_r(a) conj(chi_s(a)) - delta_rs|
    double col_defect = 0;
    bool pass = false;
};

OrthogonalityReport verify_orthogonality(const CharacterTable& t, double tol = kTolEq);

/// One character table per conjugacy class, computed on the embedded Cayley
/// table of the representative's centralizer.  Key: class representative.
std::map<int, CharacterTable> centralizer_tables(const FiniteGroup& G,
                                                 std::uint64_t seed = kDefaultSeed);

} // namespace tqft
