#pragma once

#include "tqft/character.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace tqft {

/// Irrep spectrum entering the heat-kernel state sum.  Finite-group spectra
/// carry casimir = 0; the su2 spectrum is a truncation of the infinite tower
/// (n, dim n, c (n^2 - 1)) and carries an explicit tail bound.
struct Spectrum {
    enum class Kind { FiniteGroup, Su2Truncated };
    struct Entry {
        std::string label;
        int dim;
        double casimir;
    };
    Kind kind = Kind::FiniteGroup;
    std::vector<Entry> entries;
    double casimir_scale = 0; // c in c(n^2-1), su2 spectra only
};

/// Entries n = 1..n_max with casimir c (n^2 - 1); the default c = 1/4 is the
/// j(j+1) normalization with n = 2j + 1.
Spectrum su2_spectrum(int n_max, double casimir_scale = 0.25);

/// One entry per irrep, casimir 0; degenerates the heat-kernel sum to the
/// lattice value sum_rho dim^(2-2g) at any area.
Spectrum finite_group_spectrum(const CharacterTable& t);

struct PartitionValue {
    double value = 0;
    double tail_bound = 0; // certified remainder bound for truncated spectra
};

/// Z = sum_R e^(-t casimir(R)) / dim(R)^(2g-2) plus a rigorous remainder
/// bound for su2 truncations (comparison with the Gaussian-tail integral).
/// Throws for the genuinely divergent request t = 0, g <= 1 on su2 spectra.
PartitionValue ym_partition_function(const Spectrum& s, int genus, double area);

/// Smallest n_max whose tail bound is below `target` (su2 spectra).
int su2_nmax_for_tail(int genus, double area, double casimir_scale, double target);

/// Diagonal building blocks in the character basis.
struct ElementaryOps {
    Eigen::VectorXd cylinder;   // e^(-t c_R)
    Eigen::VectorXd pants;      // e^(-t c_R) / dim R   (the RRR diagonal)
    Eigen::VectorXd cap;        // dim R e^(-t c_R)
};

ElementaryOps elementary_operators(const Spectrum& s, double area);

/// Deterministic pairwise-tree reduction (fixed order, thread-count
/// independent).
double pairwise_sum(const std::vector<double>& terms);

} // namespace tqft
