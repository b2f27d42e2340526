#include "tqft/modular.hpp"
#include "tqft/dijkgraaf_witten.hpp"
#include "tqft/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tqft {

namespace {

using Cplx = std::complex<double>;
constexpr double kRelTol = 1e-8;

// shared post-construction finishing: qdims, Gauss sums, invariant checks
void finish(ModularData& md, bool integral_qdims, int twist_order_bound) {
    const int L = md.rank();
    Cplx s00 = md.S(0, 0);
    if (std::abs(s00) < 1e-12) throw invariant_error("unit_label", "S_00 vanishes");
    // unit-row sanity: entries positive with S_00 the smallest (qdims >= 1),
    // which pins label 0 as the unit object
    for (int i = 0; i < L; ++i) {
        if (md.S(0, i).real() < -1e-9 || std::abs(md.S(0, i).imag()) > 1e-9)
            throw invariant_error("unit_label", "unit row of S is not real positive");
        if (md.S(0, i).real() < s00.real() - 1e-9)
            throw invariant_error("unit_label", "a quantum dimension is below 1");
    }
    md.qdims.resize(L);
    for (int i = 0; i < L; ++i) {
        Cplx q = md.S(0, i) / s00;
        if (std::abs(q.imag()) > kRelTol * (1 + std::abs(q)))
            throw invariant_error("quantum_dimension", "non-real quantum dimension");
        double v = q.real();
        if (integral_qdims) {
            double snapped = std::lround(v);
            if (std::abs(v - snapped) > kTolSnap || snapped < 1)
                throw invariant_error("quantum_dimension",
                                      "expected a positive integer qdim, got " + std::to_string(v));
            v = snapped;
        }
        md.qdims[i] = v;
    }
    md.p_plus = 0;
    md.p_minus = 0;
    for (int i = 0; i < L; ++i) {
        md.p_plus += md.T[i] * md.qdims[i] * md.qdims[i];
        md.p_minus += md.qdims[i] * md.qdims[i] / md.T[i];
    }
    md.total_D = std::sqrt(md.p_plus * md.p_minus);
    // zeta is a sixth root of p+/p-, but the branch is pinned by the anomaly
    // relation zeta^3 = p+/D (the principal sixth root lands on the wrong
    // sheet once the central charge passes 2)
    md.zeta = std::pow(md.p_plus / md.total_D, 1.0 / 3.0);
    Cplx z6 = md.zeta;
    for (int i = 0; i < 5; ++i) z6 *= md.zeta;
    if (std::abs(z6 - md.p_plus / md.p_minus) > kRelTol)
        throw invariant_error("zeta_sixth_root", "zeta^6 != p+/p-");
    // twists are roots of unity
    for (int i = 0; i < L; ++i) {
        if (std::abs(std::abs(md.T[i]) - 1.0) > kRelTol)
            throw invariant_error("twist_modulus", "twist off the unit circle");
        Cplx p = 1;
        bool root = false;
        for (int n = 1; n <= twist_order_bound && !root; ++n) {
            p *= md.T[i];
            root = std::abs(p - Cplx(1)) < kRelTol;
        }
        if (!root) throw invariant_error("twist_root_of_unity", "twist is not a root of unity within the bound");
    }
    ModularReport rep = modular_relations_check(md);
    if (rep.max_defect() > kRelTol)
        throw invariant_error("modular_relations",
                              "relation defect " + std::to_string(rep.max_defect()));
}

} // namespace

double ModularReport::max_defect() const {
    return std::max({s_symmetric, s_unitary, s2_vs_c, c2, ct_commute, st_cubed});
}

ModularReport modular_relations_check(const ModularData& md) {
    const int L = md.rank();
    ModularReport rep;
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(L, L);
    rep.s_symmetric = (md.S - md.S.transpose()).cwiseAbs().maxCoeff();
    rep.s_unitary = (md.S * md.S.adjoint() - I).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(L, L);
    for (int i = 0; i < L; ++i) C(md.C[i], i) = 1;
    rep.s2_vs_c = (md.S * md.S - C).cwiseAbs().maxCoeff();
    rep.c2 = (C * C - I).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd T = md.T.asDiagonal();
    rep.ct_commute = (C * T - T * C).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd ST = md.S * T;
    Cplx z3 = md.zeta * md.zeta * md.zeta;
    rep.st_cubed = (ST * ST * ST - z3 * md.S * md.S).cwiseAbs().maxCoeff();
    return rep;
}

ModularData drinfeld_double_data(const FiniteGroup& G, std::uint64_t seed) {
    const int n = G.order();
    const auto& cls = G.classes();
    const int r = G.num_classes();

    // centralizer data per class: subgroup + character table on its embedding
    struct ZData {
        Subgroup sub;
        CharacterTable table;
        int rep;
    };
    std::vector<ZData> zd;
    zd.reserve(r);
    for (int a = 0; a < r; ++a) {
        Subgroup s = centralizer(G, cls[a].representative);
        CharacterTable t = character_table(s.embedded_cayley, seed);
        zd.push_back({std::move(s), std::move(t), cls[a].representative});
    }
    // the trivial irrep of Z(e) = G goes first
    {
        auto& t = zd[0].table;
        int triv = -1;
        for (int k = 0; k < t.num_irreps() && triv < 0; ++k) {
            bool all_one = t.dims[k] == 1;
            for (int a = 0; a < t.num_irreps() && all_one; ++a)
                all_one = std::abs(t.chi(k, a) - Cplx(1)) < 1e-8;
            if (all_one) triv = k;
        }
        if (triv < 0) throw invariant_error("trivial_irrep", "no all-ones character row");
        if (triv != 0) {
            Eigen::MatrixXcd chi = t.chi;
            std::vector<int> dims = t.dims;
            t.chi.row(0) = chi.row(triv);
            t.dims[0] = dims[triv];
            for (int k = 0, dst = 1; k < t.num_irreps(); ++k) {
                if (k == triv) continue;
                t.chi.row(dst) = chi.row(k);
                t.dims[dst] = dims[k];
                ++dst;
            }
        }
    }

    ModularData md;
    for (int a = 0; a < r; ++a)
        for (int p = 0; p < zd[a].table.num_irreps(); ++p) {
            md.dg_labels.emplace_back(a, p);
            md.labels.push_back("([" + std::to_string(cls[a].representative) + "]," + std::to_string(p) + ")");
        }
    const int L = static_cast<int>(md.dg_labels.size());

    // tr_pi(x) for x in the centralizer of class a
    auto tr = [&](int a, int p, int x) -> Cplx {
        const ZData& z = zd[a];
        int sx = z.sub.index_of(x);
        if (sx < 0) throw invariant_error("centralizer_membership", "trace argument outside the centralizer");
        return z.table.chi(p, z.sub.embedded_cayley.class_of(sx));
    };

    md.S.resize(L, L);
    for (int i = 0; i < L; ++i) {
        auto [a, p] = md.dg_labels[i];
        int ga = zd[a].rep;
        for (int j = i; j < L; ++j) {
            auto [b, q] = md.dg_labels[j];
            int gb = zd[b].rep;
            Cplx acc = 0;
            for (int h = 0; h < n; ++h) {
                int conj_gb = G.conjugate(gb, h);
                if (zd[a].sub.index_of(conj_gb) < 0) continue;
                int x = G.conjugate(G.inverse(gb), h);                       // h gb^-1 h^-1
                int y = G.mul(G.mul(G.inverse(h), G.inverse(ga)), h);        // h^-1 ga^-1 h
                acc += tr(a, p, x) * tr(b, q, y);
            }
            Cplx v = acc / double(zd[a].sub.order() * zd[b].sub.order());
            md.S(i, j) = v;
            md.S(j, i) = v;
        }
    }

    md.T.resize(L);
    for (int i = 0; i < L; ++i) {
        auto [a, p] = md.dg_labels[i];
        md.T[i] = tr(a, p, zd[a].rep) / double(zd[a].table.dims[p]);
    }

    // duals: class of g^-1 and the conjugate character row transported by the
    // conjugator between the two centralizers
    md.C.assign(L, -1);
    for (int i = 0; i < L; ++i) {
        auto [a, p] = md.dg_labels[i];
        int ginv = G.inverse(zd[a].rep);
        int b = G.class_of(ginv);
        int k = -1; // k ginv k^-1 = rep(b)
        for (int h = 0; h < n && k < 0; ++h)
            if (G.conjugate(ginv, h) == zd[b].rep) k = h;
        if (k < 0) throw invariant_error("dual_class", "no conjugator onto the class representative");
        // target character on Z(rep(b)): x -> conj(chi_p(k^-1 x k))
        int q = -1;
        for (int cand = 0; cand < zd[b].table.num_irreps() && q < 0; ++cand) {
            bool match = true;
            for (size_t cc = 0; cc < zd[b].table.classes.size() && match; ++cc) {
                int x = zd[b].sub.parent_of(zd[b].table.classes[cc].representative);
                int moved = G.mul(G.mul(G.inverse(k), x), k);
                match = std::abs(zd[b].table.chi(cand, int(cc)) - std::conj(tr(a, p, moved))) < 1e-6;
            }
            if (match) q = cand;
        }
        if (q < 0) throw invariant_error("dual_irrep", "conjugate character row not found");
        int j = -1;
        for (int cand = 0; cand < L && j < 0; ++cand)
            if (md.dg_labels[cand] == std::make_pair(b, q)) j = cand;
        md.C[i] = j;
    }

    finish(md, /*integral_qdims=*/true, /*twist_order_bound=*/2 * n);

    // D(G)-specific checks: total D = |G| and zeta = 1
    if (std::abs(md.total_D - Cplx(n)) > kRelTol * n)
        throw invariant_error("double_total_dimension", "D != |G|");
    if (std::abs(md.zeta - Cplx(1)) > kRelTol)
        throw invariant_error("double_anomaly", "zeta != 1 for a Drinfeld double");
    double sum = 0;
    for (int i = 0; i < L; ++i) sum += md.qdims[i] * md.qdims[i];
    if (std::abs(sum - double(n) * n) > 1e-6)
        throw invariant_error("double_global_dimension", "sum of qdim^2 != |G|^2");
    return md;
}

ModularData su2_level_k_data(int k) {
    if (k < 1) throw std::invalid_argument("su2_level_k_data: k >= 1 required");
    const int L = k + 1;
    ModularData md;
    for (int i = 0; i < L; ++i) md.labels.push_back(std::to_string(i));
    md.S.resize(L, L);
    const double pi = std::numbers::pi;
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            md.S(i, j) = std::sqrt(2.0 / (k + 2)) * std::sin(pi * (i + 1.0) * (j + 1.0) / (k + 2));
    md.C.assign(L, 0);
    for (int i = 0; i < L; ++i) md.C[i] = i; // self-dual labels
    // twist sign resolved empirically: try both branches of theta_i = exp(+-2 pi i h_i)
    std::string failures;
    for (int sign : {+1, -1}) {
        md.T.resize(L);
        for (int i = 0; i < L; ++i) {
            double h = double(i) * (i + 2) / (4.0 * (k + 2));
            md.T[i] = std::exp(Cplx(0, sign * 2.0 * pi * h));
        }
        try {
            ModularData candidate = md;
            finish(candidate, /*integral_qdims=*/false, /*twist_order_bound=*/8 * (k + 2));
            return candidate;
        } catch (const invariant_error& e) {
            failures += std::string(sign > 0 ? " [+]: " : " [-]: ") + e.what();
        }
    }
    throw invariant_error("su2k_twist_sign",
                          "neither twist sign satisfies (ST)^3 = zeta^3 S^2;" + failures);
}

FusionTensor verlinde_fusion(const ModularData& md) {
    const int L = md.rank();
    for (int rr = 0; rr < L; ++rr)
        if (std::abs(md.S(0, rr)) < 1e-12)
            throw std::invalid_argument("verlinde_fusion: vanishing S_0r");
    FusionTensor N;
    N.rank = L;
    N.n.assign(size_t(L) * L * L, 0);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            for (int kk = 0; kk < L; ++kk) {
                Cplx acc = 0;
                for (int rr = 0; rr < L; ++rr)
                    acc += md.S(i, rr) * md.S(j, rr) * md.S(md.C[kk], rr) / md.S(0, rr);
                double re = acc.real();
                long snapped = std::lround(re);
                if (std::abs(acc.imag()) > kTolSnap || std::abs(re - double(snapped)) > kTolSnap || snapped < 0)
                    throw invariant_error("fusion_integrality",
                                          "N_{" + std::to_string(i) + std::to_string(j) + "}^" +
                                              std::to_string(kk) + " = " + std::to_string(re) +
                                              " is not a nonnegative integer");
                N.n[(size_t(i) * L + j) * L + kk] = static_cast<int>(snapped);
            }
    // unit row
    for (int j = 0; j < L; ++j)
        for (int kk = 0; kk < L; ++kk)
            if (N(0, j, kk) != (j == kk ? 1 : 0))
                throw invariant_error("fusion_unit_row", "N_{0j}^k != delta_jk");
    return N;
}

double verlinde_dim(const ModularData& md, int genus) {
    if (genus < 0) throw std::invalid_argument("verlinde_dim: genus must be nonnegative");
    double D = std::abs(md.total_D);
    double sum = 0;
    for (int i = 0; i < md.rank(); ++i) sum += std::pow(md.qdims[i], 2.0 - 2.0 * genus);
    double v = std::pow(D, 2.0 * genus - 2.0) * sum;
    double snapped = std::lround(v);
    if (std::abs(v - snapped) <= kTolSnap * std::max(1.0, std::abs(v))) return snapped;
    return v;
}

BigInt burnside_orbit_oracle(const FiniteGroup& G, int genus) {
    if (genus < 1) throw std::invalid_argument("burnside_orbit_oracle: genus must be positive");
    // sum over elements grouped by class; conjugate elements have isomorphic
    // centralizers, so count once per class and weight by the class size
    BigInt total = 0;
    for (const auto& cl : G.classes()) {
        Subgroup z = centralizer(G, cl.representative);
        BigInt inner = count_homs_surface_group(z.embedded_cayley, genus, HomCountMethod::Convolution);
        total += BigInt(cl.size()) * inner;
    }
    if (total % G.order() != 0)
        throw invariant_error("burnside_integrality", "orbit count is not an integer");
    return total / G.order();
}

} // namespace tqft
