#include "tqft/modular.hpp"
#include "tqft/dijkgraaf_witten.hpp"
#include "tqft/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace tqft;
using Cplx = std::complex<double>;

TEST_CASE("double of the trivial group") {
    ModularData md = drinfeld_double_data(FiniteGroup::trivial());
    REQUIRE(md.rank() == 1);
    CHECK(std::abs(md.S(0, 0) - Cplx(1)) < 1e-12);
    CHECK(std::abs(md.T[0] - Cplx(1)) < 1e-12);
    FusionTensor N = verlinde_fusion(md);
    CHECK(N(0, 0, 0) == 1);
}

TEST_CASE("D(S3): 8 simples with the pinned quantum dimensions") {
    ModularData md = drinfeld_double_data(FiniteGroup::symmetric(3));
    REQUIRE(md.rank() == 8);
    std::vector<int> qd;
    for (int i = 0; i < 8; ++i) qd.push_back(int(md.qdims[i]));
    std::vector<int> sorted = qd;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3});
    int sq = 0;
    for (int q : qd) sq += q * q;
    CHECK(sq == 36);
    CHECK(std::abs(md.total_D - Cplx(6)) < 1e-9);
    CHECK(std::abs(md.zeta - Cplx(1)) < 1e-9);
    CHECK(modular_relations_check(md).max_defect() < 1e-8);
    // unit row of the fusion tensor
    FusionTensor N = verlinde_fusion(md);
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k) CHECK(N(0, j, k) == (j == k ? 1 : 0));
}

TEST_CASE("D(G) invariants across small groups") {
    for (const auto& G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                          FiniteGroup::dihedral(4), FiniteGroup::quaternion8()}) {
        ModularData md = drinfeld_double_data(G);
        ModularReport rep = modular_relations_check(md);
        CHECK(rep.max_defect() < 1e-8);
        CHECK(std::abs(md.zeta - Cplx(1)) < 1e-8);
        double sq = 0;
        for (int i = 0; i < md.rank(); ++i) sq += md.qdims[i] * md.qdims[i];
        CHECK(sq == doctest::Approx(double(G.order()) * G.order()));
        // C is an involutive permutation compatible with T
        for (int i = 0; i < md.rank(); ++i) {
            CHECK(md.C[md.C[i]] == i);
            CHECK(std::abs(md.T[md.C[i]] - md.T[i]) < 1e-9);
        }
        // fusion: integral, symmetric, dual-invariant, associative
        FusionTensor N = verlinde_fusion(md);
        int L = md.rank();
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j)
                for (int k = 0; k < L; ++k) {
                    CHECK(N(i, j, k) == N(j, i, k));
                    CHECK(N(i, j, k) == N(md.C[i], md.C[j], md.C[k]));
                }
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j)
                for (int k = 0; k < L; ++k)
                    for (int l = 0; l < L; ++l) {
                        long long lhs = 0, rhs = 0;
                        for (int m = 0; m < L; ++m) {
                            lhs += 1ll * N(i, j, m) * N(m, k, l);
                            rhs += 1ll * N(j, k, m) * N(i, m, l);
                        }
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("D(Z3) has nontrivial charge conjugation") {
    ModularData md = drinfeld_double_data(FiniteGroup::cyclic(3));
    REQUIRE(md.rank() == 9);
    bool moves_something = false;
    for (int i = 0; i < 9; ++i) moves_something = moves_something || md.C[i] != i;
    CHECK(moves_something);
}

TEST_CASE("su2 level k: pinned small cases") {
    ModularData k1 = su2_level_k_data(1);
    REQUIRE(k1.rank() == 2);
    double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(k1.S(0, 0) - Cplx(s)) < 1e-12);
    CHECK(std::abs(k1.S(0, 1) - Cplx(s)) < 1e-12);
    CHECK(std::abs(k1.S(1, 1) + Cplx(s)) < 1e-12);
    FusionTensor f1 = verlinde_fusion(k1);
    CHECK(f1(1, 1, 0) == 1);  // V1 (x) V1 = V0
    CHECK(f1(1, 1, 1) == 0);

    ModularData k2 = su2_level_k_data(2);
    CHECK(k2.qdims[0] == doctest::Approx(1.0));
    CHECK(k2.qdims[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK(k2.qdims[2] == doctest::Approx(1.0));
}

TEST_CASE("su2 level k fusion matches the truncated Clebsch-Gordan rule, k <= 8") {
    for (int k = 1; k <= 8; ++k) {
        ModularData md = su2_level_k_data(k);
        CHECK(modular_relations_check(md).max_defect() < 1e-8);
        FusionTensor N = verlinde_fusion(md);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (int l = 0; l <= k; ++l) {
                    bool allowed = (i + j + l) % 2 == 0 && std::abs(i - j) <= l &&
                                   l <= std::min(i + j, 2 * k - i - j);
                    CHECK(N(i, j, l) == (allowed ? 1 : 0));
                }
    }
}

TEST_CASE("level 4: 2 (x) 2 = 0 + 2 + 4") {
    FusionTensor N = verlinde_fusion(su2_level_k_data(4));
    for (int l = 0; l <= 4; ++l)
        CHECK(N(2, 2, l) == (l == 0 || l == 2 || l == 4 ? 1 : 0));
}

TEST_CASE("verlinde dimensions: genus 1 counts simples; pinned genus 2 values") {
    ModularData s3 = drinfeld_double_data(FiniteGroup::symmetric(3));
    CHECK(verlinde_dim(s3, 1) == doctest::Approx(8));
    CHECK(verlinde_dim(s3, 2) == doctest::Approx(116));
    ModularData z2 = drinfeld_double_data(FiniteGroup::cyclic(2));
    CHECK(verlinde_dim(z2, 1) == doctest::Approx(4));
    CHECK(verlinde_dim(z2, 2) == doctest::Approx(16));
    for (int k = 1; k <= 5; ++k)
        CHECK(verlinde_dim(su2_level_k_data(k), 1) == doctest::Approx(k + 1));
}

TEST_CASE("burnside orbit oracle: pinned values") {
    CHECK(burnside_orbit_oracle(FiniteGroup::cyclic(2), 1) == 4);
    CHECK(burnside_orbit_oracle(FiniteGroup::symmetric(3), 1) == 8);
    CHECK(burnside_orbit_oracle(FiniteGroup::symmetric(3), 2) == 116);
    // (1/6)(486 + 3*16 + 2*81) = 116 by hand
    CHECK((486 + 3 * 16 + 2 * 81) / 6 == 116);
}

TEST_CASE("verlinde-burnside bridge for the named six groups") {
    for (const auto& G : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                          FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                          FiniteGroup::quaternion8()}) {
        ModularData md = drinfeld_double_data(G);
        for (int g = 1; g <= 2; ++g) {
            double vd = verlinde_dim(md, g);
            BigInt oracle = burnside_orbit_oracle(G, g);
            CHECK(BigInt(std::llround(vd)) == oracle);
        }
    }
}

TEST_CASE("fault injection: replacing T by the identity breaks the ST relation") {
    ModularData md = drinfeld_double_data(FiniteGroup::symmetric(3));
    ModularData broken = md;
    for (int i = 0; i < broken.rank(); ++i) broken.T[i] = 1;
    ModularReport rep = modular_relations_check(broken);
    CHECK(rep.st_cubed >= 0.1);
}

TEST_CASE("fault injection: perturbing S breaks fusion integrality") {
    ModularData md = drinfeld_double_data(FiniteGroup::symmetric(3));
    md.S(3, 4) += 0.01;
    md.S(4, 3) += 0.01;
    CHECK_THROWS_WITH_AS(verlinde_fusion(md), doctest::Contains("fusion_integrality"),
                         invariant_error);
}

TEST_CASE("vanishing S_0r is rejected by the fusion formula") {
    ModularData md = drinfeld_double_data(FiniteGroup::cyclic(2));
    md.S(0, 1) = 0;
    CHECK_THROWS_AS(verlinde_fusion(md), std::invalid_argument);
}

TEST_CASE("su2 level k requires k >= 1; doubles require a valid group") {
    CHECK_THROWS_AS(su2_level_k_data(0), std::invalid_argument);
    CHECK_THROWS_AS(verlinde_dim(drinfeld_double_data(FiniteGroup::cyclic(2)), -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(burnside_orbit_oracle(FiniteGroup::cyclic(2), 0), std::invalid_argument);
}
