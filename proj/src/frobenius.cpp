#include "tqft/frobenius.hpp"
#include "tqft/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace tqft {

namespace {
constexpr double kTol = 1e-9;
constexpr double kSingularCut = 1e-9; // relative smallest singular value
} // namespace

FrobeniusAlgebra::FrobeniusAlgebra(std::vector<Cplx> mu_in, Eigen::VectorXcd unit,
                                   Eigen::VectorXcd trace, std::vector<std::string> labels,
                                   double validation_tol)
    : n_(static_cast<int>(unit.size())),
      labels_(std::move(labels)),
      mu_(std::move(mu_in)),
      unit_(std::move(unit)),
      trace_(std::move(trace)) {
    if (n_ < 1) throw std::invalid_argument("algebra: dimension must be positive");
    if (static_cast<int>(trace_.size()) != n_ || mu_.size() != size_t(n_) * n_ * n_)
        throw std::invalid_argument("algebra: inconsistent tensor dimensions");
    if (labels_.empty())
        for (int i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i));

    // associativity: sum_p mu_ij^p mu_pk^l = sum_p mu_jk^p mu_ip^l
    double assoc = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    Cplx lhs = 0, rhs = 0;
                    for (int p = 0; p < n_; ++p) {
                        lhs += mu(i, j, p) * mu(p, k, l);
                        rhs += mu(j, k, p) * mu(i, p, l);
                    }
                    assoc = std::max(assoc, std::abs(lhs - rhs));
                }
    if (assoc > validation_tol)
        throw std::invalid_argument("algebra: non-associative (defect " + std::to_string(assoc) + ")");

    // unit law
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(n_);
    for (int i = 0; i < n_; ++i) {
        basis.setZero();
        basis[i] = 1;
        if ((multiply(unit_, basis) - basis).norm() > validation_tol ||
            (multiply(basis, unit_) - basis).norm() > validation_tol)
            throw std::invalid_argument("algebra: unit law violated");
    }

    commutative_ = true;
    for (int i = 0; i < n_ && commutative_; ++i)
        for (int j = 0; j < n_ && commutative_; ++j)
            for (int k = 0; k < n_; ++k)
                if (std::abs(mu(i, j, k) - mu(j, i, k)) > kTol) {
                    commutative_ = false;
                    break;
                }

    // metric g_ij = eps(e_i e_j) and its inverse
    metric_.resize(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Cplx v = 0;
            for (int k = 0; k < n_; ++k) v += mu(i, j, k) * trace_[k];
            metric_(i, j) = v;
        }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(metric_, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues()(0), smin = svd.singularValues()(n_ - 1);
    if (smax <= 0 || smin < kSingularCut * smax)
        throw std::invalid_argument("algebra: degenerate metric (trace pairing not Frobenius)");
    metric_inv_ = metric_.inverse();
}

Eigen::VectorXcd FrobeniusAlgebra::multiply(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n_);
    for (int i = 0; i < n_; ++i) {
        if (x[i] == Cplx(0)) continue;
        for (int j = 0; j < n_; ++j) {
            Cplx c = x[i] * y[j];
            if (c == Cplx(0)) continue;
            for (int k = 0; k < n_; ++k) out[k] += c * mu(i, j, k);
        }
    }
    return out;
}

Eigen::MatrixXcd FrobeniusAlgebra::left_multiplication(const Eigen::VectorXcd& x) const {
    Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) L(k, j) += x[i] * mu(i, j, k);
    return L;
}

Cplx FrobeniusAlgebra::three_point(int i, int j, int k) const {
    Cplx v = 0;
    for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q) v += mu(i, j, p) * mu(p, k, q) * trace_[q];
    return v;
}

FrobeniusAlgebra build_algebra(const std::vector<Cplx>& mu, const Eigen::VectorXcd& unit,
                               const Eigen::VectorXcd& trace, std::vector<std::string> labels) {
    return FrobeniusAlgebra(mu, unit, trace, std::move(labels));
}

FrobeniusAlgebra class_function_algebra(const FiniteGroup& G) {
    const int r = G.num_classes();
    ClassTensor N = class_structure_constants(G);
    std::vector<Cplx> mu(size_t(r) * r * r);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) mu[(size_t(a) * r + b) * r + c] = double(N(a, b, c));
    Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(r);
    unit[0] = 1;
    Eigen::VectorXcd eps = Eigen::VectorXcd::Zero(r);
    eps[0] = 1.0 / G.order();
    std::vector<std::string> labels;
    for (const auto& cl : G.classes()) labels.push_back("[" + std::to_string(cl.representative) + "]");
    return FrobeniusAlgebra(std::move(mu), std::move(unit), std::move(eps), std::move(labels));
}

FrobeniusAlgebra semisimple_algebra(const std::vector<Cplx>& traces) {
    const int n = static_cast<int>(traces.size());
    if (n < 1) throw std::invalid_argument("semisimple_algebra: need at least one trace");
    Eigen::VectorXcd eps(n);
    for (int i = 0; i < n; ++i) {
        if (traces[i] == Cplx(0)) throw std::invalid_argument("semisimple_algebra: zero trace entry");
        eps[i] = traces[i];
    }
    std::vector<Cplx> mu(size_t(n) * n * n, 0);
    for (int i = 0; i < n; ++i) mu[(size_t(i) * n + i) * n + i] = 1;
    return FrobeniusAlgebra(std::move(mu), Eigen::VectorXcd::Ones(n), std::move(eps));
}

FrobeniusAlgebra group_algebra(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<Cplx> mu(size_t(n) * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mu[(size_t(i) * n + j) * n + G.mul(i, j)] = 1;
    Eigen::VectorXcd unit = Eigen::VectorXcd::Zero(n);
    unit[0] = 1;
    Eigen::VectorXcd eps = Eigen::VectorXcd::Zero(n);
    eps[0] = double(n); // Tr(L_e) in the regular representation
    return FrobeniusAlgebra(std::move(mu), std::move(unit), std::move(eps));
}

HandleElement handle_element(const FrobeniusAlgebra& A) {
    const int n = A.dim();
    HandleElement h;
    h.coordinates = Eigen::VectorXcd::Zero(n);
    // omega^k = sum_ij g^ij mu_ij^k
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cplx gij = A.metric_inverse()(i, j);
            if (gij == Cplx(0)) continue;
            for (int k = 0; k < n; ++k) h.coordinates[k] += gij * A.mu(i, j, k);
        }
    Eigen::MatrixXcd L = A.left_multiplication(h.coordinates);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(L);
    double smax = svd.singularValues()(0), smin = svd.singularValues()(n - 1);
    h.invertible = smax > 0 && smin >= kSingularCut * smax;
    return h;
}

Cplx genus_invariant(const FrobeniusAlgebra& A, int genus) {
    if (genus < 0) throw std::invalid_argument("genus_invariant: genus must be nonnegative");
    Eigen::VectorXcd v = A.unit();
    if (genus > 0) {
        Eigen::MatrixXcd L = A.left_multiplication(handle_element(A).coordinates);
        for (int g = 0; g < genus; ++g) v = L * v;
    }
    return A.eps(v);
}

bool is_semisimple(const FrobeniusAlgebra& A) { return handle_element(A).invertible; }

std::vector<Cplx> comultiplication(const FrobeniusAlgebra& A) {
    const int n = A.dim();
    // m_ipq = eps(e_i e_p e_q), then raise both outgoing indices.  The raising
    // order matters for noncommutative algebras: Delta(x) = sum_a x e_a (x) e^a
    // corresponds to the q slot feeding the first output leg.
    std::vector<Cplx> m(size_t(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) m[(size_t(i) * n + p) * n + q] = A.three_point(i, p, q);
    std::vector<Cplx> delta(size_t(n) * n * n, 0);
    const auto& gi = A.metric_inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Cplx v = 0;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        v += m[(size_t(i) * n + p) * n + q] * gi(q, j) * gi(p, k);
                delta[(size_t(i) * n + j) * n + k] = v;
            }
    return delta;
}

Eigen::MatrixXcd double_twist_map(const FrobeniusAlgebra& A) {
    const int n = A.dim();
    std::vector<Cplx> delta = comultiplication(A);
    Eigen::MatrixXcd pi = Eigen::MatrixXcd::Zero(n, n);
    // pi(e_i) = sum_{jk} Delta_i^{jk} e_k e_j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Cplx d = delta[(size_t(i) * n + j) * n + k];
                if (d == Cplx(0)) continue;
                for (int l = 0; l < n; ++l) pi(l, i) += d * A.mu(k, j, l);
            }
    return pi;
}

} // namespace tqft
