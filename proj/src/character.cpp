#include "tqft/character.hpp"
#include "tqft/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tqft {

namespace {

using Cplx = std::complex<double>;

// Tolerant lexicographic order on rounded character rows; values are accurate
// to ~1e-12 while distinct character values are far apart, so this is a
// strict weak order in practice and makes the row order seed-independent.
bool row_less(const std::pair<int, Eigen::VectorXcd>& a, const std::pair<int, Eigen::VectorXcd>& b) {
    if (a.first != b.first) return a.first < b.first;
    constexpr double eps = 1e-6;
    for (int i = 0; i < a.second.size(); ++i) {
        double dre = a.second[i].real() - b.second[i].real();
        if (std::abs(dre) > eps) return dre < 0;
        double dim = a.second[i].imag() - b.second[i].imag();
        if (std::abs(dim) > eps) return dim < 0;
    }
    return false;
}

} // namespace

CharacterTable character_table(const FiniteGroup& G, std::uint64_t seed) {
    const auto& cls = G.classes();
    const int r = G.num_classes();
    const ClassTensor N = class_structure_constants(G);

    // class-sum multiplication matrices: (M_a)[c][b] = N_{ab}^c
    std::vector<Eigen::MatrixXd> M(r, Eigen::MatrixXd::Zero(r, r));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) M[a](c, b) = double(N(a, b, c));

    // Conjugating by sqrt(class sizes) makes the combination a normal matrix
    // (the character rows weighted by sqrt(|a|/|G|) are unitary), which keeps
    // the eigenvectors well-conditioned.
    Eigen::VectorXd sq(r), isq(r);
    for (int a = 0; a < r; ++a) {
        sq[a] = std::sqrt(double(cls[a].size()));
        isq[a] = 1.0 / sq[a];
    }

    Rng rng(seed);
    constexpr int kRetryBudget = 32;
    Eigen::MatrixXcd vecs;
    bool separated = false;
    for (int attempt = 0; attempt < kRetryBudget && !separated; ++attempt) {
        Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(r, r);
        for (int a = 0; a < r; ++a) comb += rng.uniform(-1.0, 1.0) * M[a];
        Eigen::MatrixXcd scaled = (sq.asDiagonal() * comb * isq.asDiagonal()).cast<Cplx>();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(scaled);
        if (es.info() != Eigen::Success) continue;
        double scale = es.eigenvalues().cwiseAbs().maxCoeff() + 1.0;
        separated = true;
        for (int i = 0; i < r && separated; ++i)
            for (int j = i + 1; j < r; ++j)
                if (std::abs(es.eigenvalues()[i] - es.eigenvalues()[j]) < 1e-7 * scale) {
                    separated = false;
                    break;
                }
        if (separated) vecs = es.eigenvectors();
    }
    if (!separated)
        throw invariant_error("eigenspace_separation",
                              "class-sum diagonalization failed to separate eigenspaces for " +
                                  G.name() + " after retry budget");

    std::vector<std::pair<int, Eigen::VectorXcd>> rows;
    rows.reserve(r);
    for (int k = 0; k < r; ++k) {
        Eigen::VectorXcd u = isq.asDiagonal() * vecs.col(k); // back to the class-sum basis
        int jmax = 0;
        for (int i = 1; i < r; ++i)
            if (std::abs(u[i]) > std::abs(u[jmax])) jmax = i;
        // Burnside eigenvalues w_a = |a| chi(a) / dim
        Eigen::VectorXcd w(r);
        for (int a = 0; a < r; ++a) {
            Eigen::VectorXcd Mu = M[a] * u;
            Cplx ev = Mu[jmax] / u[jmax];
            if ((Mu - ev * u).norm() > 1e-7 * (1.0 + Mu.norm()))
                throw invariant_error("shared_eigenvector",
                                      "class matrix does not share the computed eigenvector");
            w[a] = ev;
        }
        double s = 0;
        for (int a = 0; a < r; ++a) s += std::norm(w[a]) / double(cls[a].size());
        double dim_real = std::sqrt(double(G.order()) / s);
        int dim = int(std::lround(dim_real));
        if (dim < 1 || std::abs(dim_real - dim) > kTolSnap)
            throw invariant_error("dim_integer_snap",
                                  "irrep dimension " + std::to_string(dim_real) + " is not integral");
        Eigen::VectorXcd chi(r);
        for (int a = 0; a < r; ++a) chi[a] = w[a] * double(dim) / double(cls[a].size());
        rows.emplace_back(dim, std::move(chi));
    }
    std::sort(rows.begin(), rows.end(), row_less);

    CharacterTable t;
    t.group_name = G.name();
    t.group_order = G.order();
    t.classes = cls;
    t.chi.resize(r, r);
    for (int k = 0; k < r; ++k) {
        t.dims.push_back(rows[k].first);
        t.chi.row(k) = rows[k].second.transpose();
    }
    long long dimsq = 0;
    for (int d : t.dims) dimsq += static_cast<long long>(d) * d;
    if (dimsq != G.order())
        throw invariant_error("peter_weyl_sum", "sum of dim^2 = " + std::to_string(dimsq) +
                                                    " != |G| = " + std::to_string(G.order()));
    auto orth = verify_orthogonality(t);
    if (!orth.pass)
        throw invariant_error("character_orthogonality",
                              "orthogonality defect " + std::to_string(std::max(orth.row_defect, orth.col_defect)));
    return t;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t, double tol) {
    const int r = t.num_irreps();
    // V[rho][a] = chi_rho(a) sqrt(|a|/|G|) is unitary; check both Gram matrices.
    Eigen::MatrixXcd V(r, r);
    for (int k = 0; k < r; ++k)
        for (int a = 0; a < r; ++a)
            V(k, a) = t.chi(k, a) * std::sqrt(double(t.classes[a].size()) / t.group_order);
    OrthogonalityReport rep;
    rep.row_defect = (V * V.adjoint() - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
    rep.col_defect = (V.adjoint() * V - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
    rep.pass = rep.row_defect <= tol && rep.col_defect <= tol;
    return rep;
}

std::map<int, CharacterTable> centralizer_tables(const FiniteGroup& G, std::uint64_t seed) {
    std::map<int, CharacterTable> out;
    for (const auto& cl : G.classes()) {
        Subgroup z = centralizer(G, cl.representative);
        out.emplace(cl.representative, character_table(z.embedded_cayley, seed));
    }
    return out;
}

} // namespace tqft
