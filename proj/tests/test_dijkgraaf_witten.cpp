#include "tqft/dijkgraaf_witten.hpp"

#include <doctest.h>

#include <cmath>

using namespace tqft;

namespace {

// independent commutator-product oracle by literal tuple enumeration
long long oracle_hom_count(const FiniteGroup& G, int genus) {
    long long count = 0;
    int n = G.order();
    std::vector<int> t(2 * genus, 0);
    while (true) {
        int prod = 0;
        for (int i = 0; i < genus; ++i) prod = G.mul(prod, G.commutator(t[2 * i], t[2 * i + 1]));
        if (prod == 0) ++count;
        int pos = 2 * genus - 1;
        while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return count;
}

} // namespace

TEST_CASE("torus counts: Z/2 gives 4, trivial gives 1") {
    CHECK(count_homs_surface_group(FiniteGroup::cyclic(2), 1, HomCountMethod::Brute) == 4);
    CHECK(count_homs_surface_group(FiniteGroup::cyclic(2), 1, HomCountMethod::Convolution) == 4);
    for (int g = 1; g <= 4; ++g)
        CHECK(count_homs_surface_group(FiniteGroup::trivial(), g) == 1);
}

TEST_CASE("S3 genus 2: 486 homs (frozen from the tuple oracle)") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(oracle_hom_count(s3, 2) == 486);
    CHECK(count_homs_surface_group(s3, 2, HomCountMethod::Brute) == 486);
    CHECK(count_homs_surface_group(s3, 2, HomCountMethod::Convolution) == 486);
}

TEST_CASE("brute and convolution methods agree across the corpus") {
    std::vector<FiniteGroup> corpus;
    for (int n : {2, 3, 4, 6, 8, 12}) corpus.push_back(FiniteGroup::cyclic(n));
    corpus.push_back(FiniteGroup::symmetric(3));
    corpus.push_back(FiniteGroup::symmetric(4));
    corpus.push_back(FiniteGroup::dihedral(4));
    corpus.push_back(FiniteGroup::dihedral(6));
    corpus.push_back(FiniteGroup::quaternion8());
    for (const auto& G : corpus)
        for (int g = 1; g <= 3; ++g) {
            if (std::pow(double(G.order()), 2.0 * g) > 5e6) continue;
            BigInt b = count_homs_surface_group(G, g, HomCountMethod::Brute);
            BigInt c = count_homs_surface_group(G, g, HomCountMethod::Convolution);
            CHECK(b == c);
        }
    // convolution handles sizes far beyond the brute guard
    FiniteGroup s4 = FiniteGroup::symmetric(4);
    CHECK(count_homs_surface_group(s4, 6, HomCountMethod::Convolution) ==
          count_homs_surface_group(s4, 6, HomCountMethod::Convolution));
}

TEST_CASE("the brute guard rejects oversized requests") {
    CHECK_THROWS_AS(count_homs_surface_group(FiniteGroup::symmetric(4), 5, HomCountMethod::Brute),
                    std::invalid_argument);
}

TEST_CASE("dw invariants: exact rationals") {
    CHECK(dw_invariant(FiniteGroup::cyclic(2), 0) == Rational(1, 2));
    CHECK(dw_invariant(FiniteGroup::symmetric(3), 1) == Rational(3));
    CHECK(dw_invariant(FiniteGroup::symmetric(3), 2) == Rational(81));
    // genus >= 1: invariant >= 1 with denominator dividing |G|
    for (const auto& G : {FiniteGroup::cyclic(4), FiniteGroup::dihedral(4),
                          FiniteGroup::quaternion8()})
        for (int g = 1; g <= 3; ++g) {
            Rational v = dw_invariant(G, g);
            CHECK(v >= 1);
            CHECK(BigInt(G.order()) % denominator(v) == 0);
        }
}

TEST_CASE("mednykh formula matches counting (and the wrong exponent does not)") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CharacterTable t = character_table(s3);
    CHECK(mednykh_formula(s3, 2, t) == doctest::Approx(81).epsilon(1e-9));
    // exponent 2g-1 would give 36 * (1 + 1 + 1/8) = 76.5, a non-integer
    double wrong = 36.0 * (1 + 1 + std::pow(2.0, -3));
    CHECK(wrong == doctest::Approx(76.5));
    CHECK(std::abs(mednykh_formula(s3, 2, t) - wrong) > 1);
    // abelian: |G|^(2g-1)
    FiniteGroup z6 = FiniteGroup::cyclic(6);
    CharacterTable t6 = character_table(z6);
    for (int g = 1; g <= 3; ++g)
        CHECK(mednykh_formula(z6, g, t6) ==
              doctest::Approx(std::pow(6.0, 2.0 * g - 1)).epsilon(1e-9));
    CHECK(mednykh_formula(FiniteGroup::trivial(), 3, character_table(FiniteGroup::trivial())) ==
          doctest::Approx(1.0));
}

TEST_CASE("mednykh bridge across the corpus") {
    std::vector<FiniteGroup> corpus;
    for (int n : {2, 3, 5, 8}) corpus.push_back(FiniteGroup::cyclic(n));
    corpus.push_back(FiniteGroup::symmetric(3));
    corpus.push_back(FiniteGroup::dihedral(6));
    corpus.push_back(FiniteGroup::quaternion8());
    for (const auto& G : corpus) {
        CharacterTable t = character_table(G);
        for (int g = 1; g <= 2; ++g) {
            double exact = to_double(dw_invariant(G, g));
            double viachar = mednykh_formula(G, g, t);
            CHECK(std::abs(exact - viachar) <= 1e-6 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("two-point functions reproduce the cylinder metric") {
    for (const auto& G : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3),
                          FiniteGroup::cyclic(4)}) {
        int r = G.num_classes();
        for (int a = 0; a < r; ++a) {
            int ainv = G.class_of(G.inverse(G.classes()[a].representative));
            for (int b = 0; b < r; ++b) {
                SurfaceSignature sig{0, {a, b}};
                Rational want = b == ainv ? Rational(G.classes()[a].size(), G.order()) : Rational(0);
                CHECK(npoint_function(G, sig) == want);
            }
        }
    }
}

TEST_CASE("transposition boundary circles on S3 at genus 0") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    // three transpositions can never multiply to the identity (odd parity):
    // the enumeration oracle over all 27 triples confirms zero hits
    int hits_ttt = 0;
    for (int a : s3.classes()[1].members)
        for (int b : s3.classes()[1].members)
            for (int c : s3.classes()[1].members)
                if (s3.mul(s3.mul(a, b), c) == 0) ++hits_ttt;
    CHECK(hits_ttt == 0);
    CHECK(npoint_function(s3, SurfaceSignature{0, {1, 1, 1}}) == Rational(0));
    // (transposition, transposition, 3-cycle) is the allowed triple: the same
    // oracle counts 6 of 54, so the 3-point function is 6/6 = 1
    int hits_ttc = 0;
    for (int a : s3.classes()[1].members)
        for (int b : s3.classes()[1].members)
            for (int c : s3.classes()[2].members)
                if (s3.mul(s3.mul(a, b), c) == 0) ++hits_ttc;
    CHECK(hits_ttc == 6);
    CHECK(npoint_function(s3, SurfaceSignature{0, {1, 1, 2}}) == Rational(1));
}

TEST_CASE("single identity-class boundary gives 1/|G|") {
    for (const auto& G : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
        SurfaceSignature sig{0, {0}};
        CHECK(npoint_function(G, sig) == Rational(1, G.order()));
    }
}

TEST_CASE("n-point paths agree on randomized signatures") {
    Rng rng(99);
    for (const auto& G : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                          FiniteGroup::cyclic(6)}) {
        for (int trial = 0; trial < 8; ++trial) {
            SurfaceSignature sig;
            sig.genus = int(rng.below(2));
            int k = 1 + int(rng.below(3));
            for (int i = 0; i < k; ++i)
                sig.boundary_classes.push_back(int(rng.below(G.num_classes())));
            Rational direct = npoint_direct(G, sig);
            Rational algebraic = npoint_class_algebra(G, sig);
            CHECK(direct == algebraic);
        }
    }
}

TEST_CASE("closed-surface n-point with no boundary equals the dw invariant") {
    for (const auto& G : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)})
        for (int g = 0; g <= 2; ++g) {
            SurfaceSignature sig{g, {}};
            CHECK(npoint_function(G, sig) == dw_invariant(G, g));
        }
}
