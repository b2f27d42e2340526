#include "tqft/cobordism.hpp"
#include "tqft/rng.hpp"

#include <doctest.h>

#include <sstream>

using namespace tqft;

namespace {

FrobeniusAlgebra random_semisimple(Rng& rng, int dim) {
    std::vector<Cplx> traces;
    for (int i = 0; i < dim; ++i) traces.push_back(Cplx(rng.uniform(0.4, 2.0), rng.uniform(-0.3, 0.3)));
    return semisimple_algebra(traces);
}

} // namespace

TEST_CASE("typecheck: arities") {
    CobordismWord pants{{{Atom::Pants}}};
    CHECK(typecheck(pants) == std::pair<int, int>{2, 1});

    CobordismWord handle{{{Atom::Copants}, {Atom::Pants}}};
    CHECK(typecheck(handle) == std::pair<int, int>{1, 1});

    CobordismWord bad{{{Atom::Pants}, {Atom::Copants, Atom::Id}}};
    CHECK_THROWS_WITH_AS(typecheck(bad), doctest::Contains("slice 1"), std::invalid_argument);
}

TEST_CASE("identity word evaluates to the identity matrix") {
    FrobeniusAlgebra A = semisimple_algebra({Cplx(1), Cplx(2), Cplx(3)});
    CobordismWord w{{{Atom::Id, Atom::Id}}};
    Eigen::MatrixXcd m = evaluate(w, A);
    CHECK((m - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("sphere on class functions gives 1/|G|") {
    FrobeniusAlgebra A = class_function_algebra(FiniteGroup::symmetric(3));
    CobordismWord sphere{{{Atom::Cap}, {Atom::Cup}}};
    Eigen::MatrixXcd m = evaluate(sphere, A);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(std::abs(m(0, 0) - Cplx(1.0 / 6)) < 1e-12);
}

TEST_CASE("handle word is multiplication by omega on a semisimple algebra") {
    std::vector<Cplx> traces{Cplx(2), Cplx(0.5)};
    FrobeniusAlgebra A = semisimple_algebra(traces);
    CobordismWord handle{{{Atom::Copants}, {Atom::Pants}}};
    Eigen::MatrixXcd m = evaluate(handle, A);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Cplx want = (i == j) ? Cplx(1) / traces[i] : Cplx(0);
            CHECK(std::abs(m(i, j) - want) < 1e-12);
        }
}

TEST_CASE("closed surface words match the handle-element route") {
    Rng rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        FrobeniusAlgebra A = random_semisimple(rng, 1 + int(rng.below(4)));
        for (int g = 0; g <= 4; ++g) {
            Cplx word = evaluate(closed_surface_word(g), A)(0, 0);
            Cplx direct = genus_invariant(A, g);
            CHECK(std::abs(word - direct) < 1e-9 * (1.0 + std::abs(direct)));
        }
    }
    // and on a class-function algebra: torus counts irreps
    FrobeniusAlgebra B = class_function_algebra(FiniteGroup::symmetric(3));
    CHECK(std::abs(evaluate(closed_surface_word(1), B)(0, 0) - Cplx(3)) < 1e-9);
    FrobeniusAlgebra C = class_function_algebra(FiniteGroup::cyclic(2));
    CHECK(std::abs(evaluate(closed_surface_word(2), C)(0, 0) - Cplx(8)) < 1e-9);
}

TEST_CASE("inserting twist twice anywhere leaves evaluation unchanged") {
    Rng rng(5);
    FrobeniusAlgebra A = random_semisimple(rng, 3);
    CobordismWord base{{{Atom::Copants}, {Atom::Pants}}};
    CobordismWord twisted{{{Atom::Copants}, {Atom::Twist}, {Atom::Twist}, {Atom::Pants}}};
    CHECK((evaluate(base, A) - evaluate(twisted, A)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("functoriality: composite words multiply") {
    Rng rng(9);
    for (int trial = 0; trial < 8; ++trial) {
        FrobeniusAlgebra A = random_semisimple(rng, 1 + int(rng.below(3)));
        // w1: 2 -> 2, w2: 2 -> 1
        CobordismWord w1{{{Atom::Twist}, {Atom::Copants, Atom::Id}, {Atom::Id, Atom::Pants}}};
        CobordismWord w2{{{Atom::Pants}, {Atom::Copants}, {Atom::Id, Atom::Cup}}};
        CobordismWord composite = w1;
        composite.slices.insert(composite.slices.end(), w2.slices.begin(), w2.slices.end());
        Eigen::MatrixXcd lhs = evaluate(composite, A);
        Eigen::MatrixXcd rhs = evaluate(w2, A) * evaluate(w1, A);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("relation suite: clean on semisimple algebras, broken by perturbation") {
    Rng rng(13);
    FrobeniusAlgebra A = random_semisimple(rng, 4);
    RelationReport rep = relation_suite(A);
    CHECK(rep.max_defect < 1e-9);
    CHECK(rep.defects.size() >= 10);

    RelationReport one = relation_suite(semisimple_algebra({Cplx(1)}));
    CHECK(one.max_defect == 0);

    // inject a symmetric 1e-3 perturbation of mu (loosened construction
    // checks); the suite must flag it at the 1e-4 scale or larger
    int n = 2;
    std::vector<Cplx> mu(n * n * n, 0);
    mu[(0 * n + 0) * n + 0] = 1;
    mu[(0 * n + 1) * n + 1] = 1;
    mu[(1 * n + 0) * n + 1] = 1;
    mu[(1 * n + 1) * n + 0] = 1;      // x*x = 1: Z/2 group algebra
    mu[(1 * n + 0) * n + 0] = 1e-3;   // x*1 and 1*x pick up 1e-3, breaking the
    mu[(0 * n + 1) * n + 0] = 1e-3;   // unit relation but not commutativity
    Eigen::VectorXcd unit(2), eps(2);
    unit << 1, 0;
    eps << 1, 4;
    FrobeniusAlgebra broken(mu, unit, eps, {}, /*validation_tol=*/1e-2);
    RelationReport rep3 = relation_suite(broken);
    CHECK(rep3.max_defect >= 1e-4);
}

TEST_CASE("width and entry caps guard evaluation") {
    FrobeniusAlgebra A = class_function_algebra(FiniteGroup::symmetric(4)); // dim 5
    CobordismWord wide{{{Atom::Copants}, {Atom::Copants, Atom::Copants},
                        {Atom::Copants, Atom::Copants, Atom::Copants, Atom::Copants}}};
    EvalLimits tight;
    tight.width_cap = 4;
    CHECK_THROWS_AS(evaluate(wide, A, tight), std::invalid_argument);
    EvalLimits tiny;
    tiny.entry_cap = 10;
    CHECK_THROWS_AS(evaluate(CobordismWord{{{Atom::Id, Atom::Id}}}, A, tiny), std::invalid_argument);
}

TEST_CASE("noncommutative algebras are rejected by the evaluator") {
    FrobeniusAlgebra A = group_algebra(FiniteGroup::symmetric(3));
    CHECK_THROWS_AS(evaluate(closed_surface_word(1), A), std::invalid_argument);
}

TEST_CASE("word parser round trip") {
    std::string text = "cap\nid\ncopants\npants id\n";
    CobordismWord w = CobordismWord::parse(text);
    REQUIRE(w.slices.size() == 4);
    CHECK(w.slices[3] == std::vector<Atom>{Atom::Pants, Atom::Id});
    CHECK(CobordismWord::parse(w.format()).format() == w.format());
    CHECK_THROWS_AS(CobordismWord::parse(std::string("cap\nbanana\n")), std::invalid_argument);
}
