#pragma once

#include "tqft/character.hpp"
#include "tqft/group.hpp"
#include "tqft/rational.hpp"
#include "tqft/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace tqft {

/// Numerical modular-category data: normalized S, diagonal T (twists), charge
/// conjugation C, quantum dimensions and the Gauss sums p+/p-, D, zeta.
/// Invariants (S symmetric+unitary, S^2 = C, C^2 = 1, CT = TC,
/// (ST)^3 = zeta^3 S^2, twists roots of unity) are verified on construction.
struct ModularData {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> dg_labels; // (class, centralizer irrep) for doubles; empty otherwise
    Eigen::MatrixXcd S;
    Eigen::VectorXcd T;      // diagonal entries theta_i
    std::vector<int> C;      // dual permutation i -> i*
    Eigen::VectorXd qdims;   // S_{0i}/S_{00}
    std::complex<double> p_plus, p_minus, total_D, zeta;

    int rank() const { return static_cast<int>(labels.size()); }
};

struct ModularReport {
    double s_symmetric = 0, s_unitary = 0, s2_vs_c = 0, c2 = 0, ct_commute = 0, st_cubed = 0;
    double max_defect() const;
};

ModularReport modular_relations_check(const ModularData& md);

/// D(G): simple objects are (conjugacy class, centralizer irrep) pairs with
/// the unit label ((e), trivial) pinned first; S from the double-coset
/// character sum, twists theta = chi_pi(g)/dim pi, duals by locating the
/// class of g^-1 and the conjugate character row.
ModularData drinfeld_double_data(const FiniteGroup& G, std::uint64_t seed = kDefaultSeed);

/// SU(2) level k: k+1 labels, S_ij = sqrt(2/(k+2)) sin(pi (i+1)(j+1)/(k+2)),
/// twists exp(sigma 2 pi i h_i) with h_i = i(i+2)/(4(k+2)); the sign sigma is
/// resolved automatically as the one satisfying (ST)^3 = zeta^3 S^2.
ModularData su2_level_k_data(int k);

/// Verlinde coefficients N_ij^k = sum_r S_ir S_jr S_{k* r} / S_{0r}, snapped
/// to nonnegative integers (throws if any entry is non-integral beyond 1e-6).
struct FusionTensor {
    int rank = 0;
    std::vector<int> n; // rank^3
    int operator()(int i, int j, int k) const { return n[(size_t(i) * rank + j) * rank + k]; }
};

FusionTensor verlinde_fusion(const ModularData& md);

/// D^(2g-2) sum_i qdim_i^(2-2g); snapped to an integer when within 1e-6.
double verlinde_dim(const ModularData& md, int genus);

/// |Hom(pi_1(Sigma_g), G)/G| by Burnside counting:
/// (1/|G|) sum_c |Hom(pi_1(Sigma_g), C_G(c))|, each inner count exact.
BigInt burnside_orbit_oracle(const FiniteGroup& G, int genus);

} // namespace tqft
