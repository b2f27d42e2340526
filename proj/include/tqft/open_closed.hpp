#pragma once

#include "tqft/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace tqft {

/// Semisimple closed-string algebra B = (+)_i C a_i with chosen square roots
/// of the traces (the sign choices are physical data).
struct ClosedStringAlgebra {
    Eigen::VectorXcd traces;       // eps_i, all nonzero
    Eigen::VectorXcd sqrt_traces;  // (sqrt eps_i)^2 == eps_i

    int n() const { return static_cast<int>(traces.size()); }
};

/// signs[i] = +1/-1 selects the branch of each square root; defaults to +.
ClosedStringAlgebra make_closed_algebra(const Eigen::VectorXcd& traces,
                                        const std::vector<int>& signs = {});

/// Block-diagonal element of the open algebra (+)_i Mat_{k_i}(C).
struct BlockMatrix {
    std::vector<Eigen::MatrixXcd> blocks;
};

/// Open string algebra attached to a brane: one matrix block per spacetime
/// point, with trace eps_A(psi) = sum_i sqrt(eps_i) Tr(psi_i).
struct OpenAlgebra {
    ClosedStringAlgebra closed;
    std::vector<int> k; // block sizes, >= 0

    BlockMatrix zero() const;
    BlockMatrix identity() const;
    std::complex<double> trace(const BlockMatrix& psi) const;
    BlockMatrix mul(const BlockMatrix& a, const BlockMatrix& b) const;
    int total_dim() const; // sum k_i^2
};

OpenAlgebra build_open_algebra(const ClosedStringAlgebra& B, const std::vector<int>& k);

/// i_*(a_i): the identity of block i (zero elsewhere); lands in the center.
BlockMatrix i_lower_star(const OpenAlgebra& A, int point);

/// i^*(psi) = sum_i (Tr psi_i / sqrt(eps_i)) a_i.
Eigen::VectorXcd i_upper_star(const OpenAlgebra& A, const BlockMatrix& psi);

struct CardyReport {
    double defect = 0;   // max block norm of (mu sigma Delta - i_* i^*) on a basis
};

/// Computes pi = mu . sigma . Delta from the generic dual-basis recipe on the
/// matrix-unit basis (no closed-form shortcut) and compares with i_* i^*.
CardyReport cardy_check(const OpenAlgebra& A);

/// K_0 of a semisimple B: free abelian of rank n.
std::string classify_branes(const ClosedStringAlgebra& B);

BlockMatrix random_element(const OpenAlgebra& A, Rng& rng);

} // namespace tqft
