#pragma once

#include "tqft/frobenius.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tqft {

/// Generators of 2Cob (Morse-slice atoms).
enum class Atom { Id, Pants, Copants, Cap, Cup, Twist };

int atom_inputs(Atom a);
int atom_outputs(Atom a);
const char* atom_name(Atom a);
Atom atom_from_name(const std::string& s);

/// A cobordism as an ordered list of time slices, each slice a horizontal
/// tensor product of atoms.  Composition is concatenation of slice lists.
struct CobordismWord {
    std::vector<std::vector<Atom>> slices;

    static CobordismWord parse(std::istream& in);   // one slice per line, atoms space-separated
    static CobordismWord parse(const std::string& text);
    std::string format() const;
};

/// Arity bookkeeping; throws std::invalid_argument naming the offending slice.
std::pair<int, int> typecheck(const CobordismWord& w);

struct EvalLimits {
    int width_cap = 8;                  // max circles in any cross-section
    std::size_t entry_cap = 10'000'000; // max dim^(width+inputs) tensor entries
};

/// Evaluate the word under a commutative Frobenius algebra; the result is the
/// matrix A^(out) <- A^(in) of shape dim^out x dim^in, computed by slice-wise
/// contraction.
Eigen::MatrixXcd evaluate(const CobordismWord& w, const FrobeniusAlgebra& A,
                          const EvalLimits& limits = {});

/// cap, then g copies of (copants; pants), then cup.
CobordismWord closed_surface_word(int genus);

struct RelationReport {
    std::vector<std::pair<std::string, double>> defects;
    double max_defect = 0;
};

/// Evaluates both sides of every generator relation (associativity, unit,
/// coassociativity, counit, Frobenius, commutativity, twist relations) and
/// reports the max matrix-norm defect.
RelationReport relation_suite(const FrobeniusAlgebra& A);

} // namespace tqft
