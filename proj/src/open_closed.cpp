#include "tqft/open_closed.hpp"

#include <cmath>
#include <stdexcept>

namespace tqft {

using Cplx = std::complex<double>;

ClosedStringAlgebra make_closed_algebra(const Eigen::VectorXcd& traces, const std::vector<int>& signs) {
    const int n = static_cast<int>(traces.size());
    if (n < 1) throw std::invalid_argument("closed algebra: need at least one point");
    if (!signs.empty() && static_cast<int>(signs.size()) != n)
        throw std::invalid_argument("closed algebra: sign list length mismatch");
    ClosedStringAlgebra B;
    B.traces = traces;
    B.sqrt_traces.resize(n);
    for (int i = 0; i < n; ++i) {
        if (traces[i] == Cplx(0)) throw std::invalid_argument("closed algebra: zero trace");
        Cplx s = std::sqrt(traces[i]);
        if (!signs.empty() && signs[i] < 0) s = -s;
        B.sqrt_traces[i] = s;
        if (std::abs(s * s - traces[i]) > 1e-12 * (1.0 + std::abs(traces[i])))
            throw std::invalid_argument("closed algebra: square root failed to verify");
    }
    return B;
}

BlockMatrix OpenAlgebra::zero() const {
    BlockMatrix m;
    for (int ki : k) m.blocks.push_back(Eigen::MatrixXcd::Zero(ki, ki));
    return m;
}

BlockMatrix OpenAlgebra::identity() const {
    BlockMatrix m;
    for (int ki : k) m.blocks.push_back(Eigen::MatrixXcd::Identity(ki, ki));
    return m;
}

Cplx OpenAlgebra::trace(const BlockMatrix& psi) const {
    Cplx t = 0;
    for (size_t i = 0; i < psi.blocks.size(); ++i)
        if (k[i] > 0) t += closed.sqrt_traces[i] * psi.blocks[i].trace();
    return t;
}

BlockMatrix OpenAlgebra::mul(const BlockMatrix& a, const BlockMatrix& b) const {
    BlockMatrix m;
    for (size_t i = 0; i < a.blocks.size(); ++i) m.blocks.push_back(a.blocks[i] * b.blocks[i]);
    return m;
}

int OpenAlgebra::total_dim() const {
    int n = 0;
    for (int ki : k) n += ki * ki;
    return n;
}

OpenAlgebra build_open_algebra(const ClosedStringAlgebra& B, const std::vector<int>& kk) {
    if (static_cast<int>(kk.size()) != B.n())
        throw std::invalid_argument("open algebra: one block size per spacetime point required");
    for (int ki : kk)
        if (ki < 0) throw std::invalid_argument("open algebra: negative block size");
    return OpenAlgebra{B, kk};
}

BlockMatrix i_lower_star(const OpenAlgebra& A, int point) {
    if (point < 0 || point >= A.closed.n()) throw std::invalid_argument("i_*: point index out of range");
    BlockMatrix m = A.zero();
    m.blocks[point] = Eigen::MatrixXcd::Identity(A.k[point], A.k[point]);
    return m;
}

Eigen::VectorXcd i_upper_star(const OpenAlgebra& A, const BlockMatrix& psi) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(A.closed.n());
    for (int i = 0; i < A.closed.n(); ++i)
        if (A.k[i] > 0) v[i] = psi.blocks[i].trace() / A.closed.sqrt_traces[i];
    return v;
}

CardyReport cardy_check(const OpenAlgebra& A) {
    // Matrix-unit basis across nonzero blocks.
    struct Unit { int block, p, q; };
    std::vector<Unit> basis;
    for (int b = 0; b < A.closed.n(); ++b)
        for (int p = 0; p < A.k[b]; ++p)
            for (int q = 0; q < A.k[b]; ++q) basis.push_back({b, p, q});
    const int N = static_cast<int>(basis.size());
    CardyReport rep;
    if (N == 0) return rep;

    auto unit_mat = [&](const Unit& u) {
        BlockMatrix m = A.zero();
        m.blocks[u.block](u.p, u.q) = 1;
        return m;
    };

    // Gram matrix of the trace pairing and its inverse give the dual basis.
    Eigen::MatrixXcd G(N, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) G(a, b) = A.trace(A.mul(unit_mat(basis[a]), unit_mat(basis[b])));
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(G);
    if (!lu.isInvertible())
        throw std::invalid_argument("cardy: degenerate trace pairing on the open algebra");
    Eigen::MatrixXcd Ginv = lu.inverse();

    // pu = mu.sigma.Delta(psi) = sum_{a,b} Ginv(a,b) e_b psi e_a
    auto pi = [&](const BlockMatrix& psi) {
        BlockMatrix out = A.zero();
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                Cplx c = Ginv(a, b);
                if (c == Cplx(0)) continue;
                // e_b psi e_a is nonzero only within one block
                if (basis[a].block != basis[b].block) continue;
                int blk = basis[a].block;
                // E_{p_b q_b} psi E_{p_a q_a} = psi(q_b, p_a) E_{p_b, q_a}
                out.blocks[blk](basis[b].p, basis[a].q) += c * psi.blocks[blk](basis[b].q, basis[a].p);
            }
        return out;
    };

    auto i_star_round_trip = [&](const BlockMatrix& psi) {
        Eigen::VectorXcd v = i_upper_star(A, psi);
        BlockMatrix out = A.zero();
        for (int i = 0; i < A.closed.n(); ++i)
            out.blocks[i] = v[i] * Eigen::MatrixXcd::Identity(A.k[i], A.k[i]);
        return out;
    };

    for (int c = 0; c < N; ++c) {
        BlockMatrix e = unit_mat(basis[c]);
        BlockMatrix lhs = pi(e), rhs = i_star_round_trip(e);
        for (size_t i = 0; i < lhs.blocks.size(); ++i) {
            if (lhs.blocks[i].size() == 0) continue; // empty brane block
            double d = (lhs.blocks[i] - rhs.blocks[i]).cwiseAbs().maxCoeff();
            rep.defect = std::max(rep.defect, d);
        }
    }
    return rep;
}

std::string classify_branes(const ClosedStringAlgebra& B) {
    return "Z^" + std::to_string(B.n());
}

BlockMatrix random_element(const OpenAlgebra& A, Rng& rng) {
    BlockMatrix m = A.zero();
    for (size_t i = 0; i < m.blocks.size(); ++i)
        for (int p = 0; p < A.k[i]; ++p)
            for (int q = 0; q < A.k[i]; ++q)
                m.blocks[i](p, q) = Cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return m;
}

} // namespace tqft
