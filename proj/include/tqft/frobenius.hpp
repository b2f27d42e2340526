#pragma once

#include "tqft/group.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace tqft {

using Cplx = std::complex<double>;

/// Finite-dimensional Frobenius algebra given by structure constants
/// mu_ij^k (e_i e_j = sum_k mu_ij^k e_k), a unit vector and a trace.
/// The metric g_ij = eps(e_i e_j), its inverse and the dual basis are derived
/// on construction; all algebra axioms are verified then and violations throw.
class FrobeniusAlgebra {
public:
    /// validation_tol loosens the construction checks (fault-injection tests
    /// use this to build deliberately broken tensors); leave at the default
    /// for real data.
    FrobeniusAlgebra(std::vector<Cplx> mu, Eigen::VectorXcd unit, Eigen::VectorXcd trace,
                     std::vector<std::string> basis_labels = {}, double validation_tol = 1e-9);

    int dim() const { return n_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    bool commutative() const { return commutative_; }

    Cplx mu(int i, int j, int k) const { return mu_[(size_t(i) * n_ + j) * n_ + k]; }
    const Eigen::VectorXcd& unit() const { return unit_; }
    const Eigen::VectorXcd& trace_vector() const { return trace_; }
    const Eigen::MatrixXcd& metric() const { return metric_; }
    const Eigen::MatrixXcd& metric_inverse() const { return metric_inv_; }

    Eigen::VectorXcd multiply(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const;
    Eigen::MatrixXcd left_multiplication(const Eigen::VectorXcd& x) const; // L_x
    Cplx eps(const Eigen::VectorXcd& x) const { return trace_.transpose() * x; }
    Cplx three_point(int i, int j, int k) const; // eps(e_i e_j e_k)

private:
    int n_;
    std::vector<std::string> labels_;
    std::vector<Cplx> mu_;
    Eigen::VectorXcd unit_, trace_;
    Eigen::MatrixXcd metric_, metric_inv_;
    bool commutative_;
};

/// General constructor (validates everything).
FrobeniusAlgebra build_algebra(const std::vector<Cplx>& mu, const Eigen::VectorXcd& unit,
                               const Eigen::VectorXcd& trace,
                               std::vector<std::string> labels = {});

/// Center of C[G] on the class-sum basis, with the principal-bundle trace
/// eps(e_a) = delta_{a,1}/|G|.  Commutative and semisimple.
FrobeniusAlgebra class_function_algebra(const FiniteGroup& G);

/// Diagonal algebra e_i e_j = delta_ij e_i with eps(e_i) = traces[i] != 0.
FrobeniusAlgebra semisimple_algebra(const std::vector<Cplx>& traces);

/// Full group algebra C[G] on the element basis with the lattice (regular
/// representation) trace eps(e_h) = |G| delta_{h,e}.  Noncommutative for
/// nonabelian G; this is the algebra whose center the cylinder projects onto.
FrobeniusAlgebra group_algebra(const FiniteGroup& G);

struct HandleElement {
    Eigen::VectorXcd coordinates;
    bool invertible = false;
};

/// omega = multiplication applied to the copairing; invertibility of L_omega
/// decided by the smallest singular value relative to the largest.
HandleElement handle_element(const FrobeniusAlgebra& A);

/// eps(omega^g); g = 0 gives eps(1).  Evaluated by g applications of L_omega
/// to the unit vector.
Cplx genus_invariant(const FrobeniusAlgebra& A, int genus);

/// true iff the handle element is invertible.
bool is_semisimple(const FrobeniusAlgebra& A);

/// Delta_i^{jk}: the 3-point function with both outgoing indices raised.
/// Layout matches mu: delta[(i*n + j)*n + k].
std::vector<Cplx> comultiplication(const FrobeniusAlgebra& A);

/// pi = mu . sigma . Delta as a matrix (the double-twist map); for semisimple
/// algebras this is the projection onto the center up to the Cardy relation.
Eigen::MatrixXcd double_twist_map(const FrobeniusAlgebra& A);

} // namespace tqft
