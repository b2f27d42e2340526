#include "tqft/selftest.hpp"

#include "tqft/character.hpp"
#include "tqft/cobordism.hpp"
#include "tqft/dijkgraaf_witten.hpp"
#include "tqft/errors.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/group.hpp"
#include "tqft/json_io.hpp"
#include "tqft/lattice.hpp"
#include "tqft/modular.hpp"
#include "tqft/open_closed.hpp"
#include "tqft/yang_mills.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace tqft {

namespace {

std::vector<FiniteGroup> corpus_order24() {
    std::vector<FiniteGroup> v;
    v.push_back(FiniteGroup::trivial());
    for (int n : {2, 3, 4, 5, 6, 8, 12, 24}) v.push_back(FiniteGroup::cyclic(n));
    v.push_back(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    v.push_back(FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
    v.push_back(FiniteGroup::symmetric(3));
    for (int n : {4, 5, 6, 12}) v.push_back(FiniteGroup::dihedral(n));
    v.push_back(FiniteGroup::quaternion8());
    v.push_back(FiniteGroup::symmetric(4));
    return v;
}

std::vector<FiniteGroup> corpus_order12() {
    std::vector<FiniteGroup> v;
    for (auto& g : corpus_order24())
        if (g.order() <= 12) v.push_back(std::move(g));
    return v;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// rank of an exact rational matrix by Gaussian elimination
int rational_rank(std::vector<std::vector<Rational>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

struct Criterion {
    int id;
    std::string name;
    std::function<std::pair<bool, std::string>(std::uint64_t)> run;
};

// ---- criterion bodies -----------------------------------------------------

std::pair<bool, std::string> c1_torus_count(std::uint64_t) {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    auto t0 = std::chrono::steady_clock::now();
    BigInt homs = count_homs_surface_group(z2, 1, HomCountMethod::Brute);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool ok = homs == 4 && ms < 1.0;
    return {ok, "Z/2 torus hom count = " + homs.str() + " (want 4, exact), within the 1 ms budget: " +
                    (ms < 1.0 ? "yes" : "no")};
}

std::pair<bool, std::string> c2_mednykh(std::uint64_t seed) {
    int checked = 0;
    for (const auto& [corpus, genera] :
         {std::pair{corpus_order24(), std::vector<int>{1, 2}},
          std::pair{corpus_order12(), std::vector<int>{3}}}) {
        for (const auto& G : corpus) {
            CharacterTable t = character_table(G, seed);
            for (int g : genera) {
                BigInt homs = count_homs_surface_group(G, g, HomCountMethod::Brute);
                double brute = to_double(Rational(homs, G.order()));
                double formula = mednykh_formula(G, g, t);
                if (!close_rel(brute, formula, 1e-6))
                    return {false, G.name() + " g=" + std::to_string(g) + ": brute " + fmt(brute) +
                                       " vs formula " + fmt(formula)};
                ++checked;
            }
        }
    }
    // exemplar pin
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    BigInt n486 = count_homs_surface_group(s3, 2, HomCountMethod::Brute);
    if (n486 != 486) return {false, "S3 g=2 count = " + n486.str() + ", want 486"};
    return {true, std::to_string(checked) + " (group, genus) pairs agree; S3 g=2: 486/6 = 81"};
}

std::pair<bool, std::string> c3_peter_weyl(std::uint64_t seed) {
    auto corpus = corpus_order24();
    corpus.push_back(FiniteGroup::symmetric(5));
    corpus.push_back(FiniteGroup::cyclic(30));
    corpus.push_back(FiniteGroup::dihedral(15));
    double worst = 0;
    for (const auto& G : corpus) {
        CharacterTable t = character_table(G, seed);
        long long sq = 0;
        for (int d : t.dims) sq += 1ll * d * d;
        if (sq != G.order())
            return {false, G.name() + ": sum dim^2 = " + std::to_string(sq) + " != " +
                               std::to_string(G.order())};
        auto rep = verify_orthogonality(t, 1e-9);
        worst = std::max({worst, rep.row_defect, rep.col_defect});
        if (!rep.pass) return {false, G.name() + ": orthogonality defect " + fmt(worst)};
    }
    return {true, std::to_string(corpus.size()) + " groups; worst orthogonality defect " + fmt(worst)};
}

std::pair<bool, std::string> c4_pachner(std::uint64_t seed) {
    int evaluations = 0;
    for (const char* name : {"Z2", "Z3", "S3"}) {
        FiniteGroup G = load_group_spec(name);
        LatticeTensorData data = group_algebra_tensors(G);
        for (int genus = 0; genus <= 2; ++genus) {
            Triangulation t = standard_surface(genus);
            Rational base = partition_function(t, data);
            Rng rng(seed + genus);
            for (int move = 0; move < 50; ++move) {
                t = random_pachner_mix(t, 1, rng.next_u64());
                Rational z = partition_function(t, data);
                ++evaluations;
                if (z != base)
                    return {false, std::string(name) + " genus " + std::to_string(genus) +
                                       " move " + std::to_string(move) + ": " + to_string(z) +
                                       " != " + to_string(base)};
            }
        }
    }
    return {true, std::to_string(evaluations) + " post-move evaluations, all exactly equal"};
}

std::pair<bool, std::string> c5_normalization_bridge(std::uint64_t) {
    for (const char* name : {"Z2", "Z3", "S3"}) {
        FiniteGroup G = load_group_spec(name);
        LatticeTensorData data = group_algebra_tensors(G);
        for (int genus = 0; genus <= 2; ++genus) {
            Rational lattice = partition_function(standard_surface(genus), data);
            Rational dw = dw_invariant(G, genus);
            Rational bridged = rat_pow(Rational(G.order()), 2 * genus - 2) * lattice;
            if (dw != bridged)
                return {false, std::string(name) + " g=" + std::to_string(genus) + ": dw " +
                                   to_string(dw) + " != |G|^(2g-2) Z_lattice " + to_string(bridged)};
        }
    }
    return {true, "dw = |G|^(2g-2) * Z_lattice exactly for Z2, Z3, S3, g in 0..2"};
}

std::pair<bool, std::string> c6_cylinder_projector(std::uint64_t) {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    auto pi = cylinder_projector(s3); // idempotency enforced inside
    int rank = rational_rank(pi);
    if (rank != 3) return {false, "rank(pi) = " + std::to_string(rank) + ", want 3"};
    for (const auto& cl : s3.classes()) {
        std::vector<Rational> e(s3.order(), Rational(0)), out(s3.order(), Rational(0));
        for (int m : cl.members) e[m] = 1;
        for (int i = 0; i < s3.order(); ++i)
            for (int j = 0; j < s3.order(); ++j) out[i] += pi[i][j] * e[j];
        if (out != e) return {false, "pi does not fix the class sum of " +
                                         std::to_string(cl.representative)};
    }
    return {true, "pi^2 = pi exactly, rank 3, all class sums fixed"};
}

std::pair<bool, std::string> c7_cobordism_relations(std::uint64_t seed) {
    Rng rng(seed);
    double worst_rel = 0, worst_genus = 0;
    for (int trial = 0; trial < 10; ++trial) {
        int dim = 1 + static_cast<int>(rng.below(5));
        std::vector<Cplx> traces;
        for (int i = 0; i < dim; ++i)
            traces.push_back(Cplx(rng.uniform(0.5, 2.0) * (rng.uniform01() < 0.5 ? -1 : 1),
                                  rng.uniform(-0.5, 0.5)));
        FrobeniusAlgebra A = semisimple_algebra(traces);
        RelationReport rep = relation_suite(A);
        worst_rel = std::max(worst_rel, rep.max_defect);
        if (rep.max_defect >= 1e-9)
            return {false, "relation defect " + fmt(rep.max_defect) + " on dim " + std::to_string(dim)};
        for (int g = 0; g <= 4; ++g) {
            Cplx via_word = evaluate(closed_surface_word(g), A)(0, 0);
            Cplx via_handle = genus_invariant(A, g);
            double diff = std::abs(via_word - via_handle) /
                          std::max(1.0, std::abs(via_handle));
            worst_genus = std::max(worst_genus, diff);
            if (diff >= 1e-9)
                return {false, "closed surface g=" + std::to_string(g) + " mismatch " + fmt(diff)};
        }
    }
    return {true, "10 algebras: relation defect <= " + fmt(worst_rel) +
                      ", genus-word vs eps(omega^g) defect <= " + fmt(worst_genus)};
}

std::pair<bool, std::string> c8_cardy(std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.below(3));
        Eigen::VectorXcd traces(n);
        std::vector<int> signs, k;
        for (int i = 0; i < n; ++i) {
            traces[i] = Cplx(rng.uniform(0.1, 10.0), 0);
            signs.push_back(rng.uniform01() < 0.5 ? -1 : 1);
            k.push_back(static_cast<int>(rng.below(4))); // 0..3
        }
        if (std::all_of(k.begin(), k.end(), [](int v) { return v == 0; })) k[0] = 1;
        OpenAlgebra A = build_open_algebra(make_closed_algebra(traces, signs), k);
        worst = std::max(worst, cardy_check(A).defect);
        if (worst >= 1e-9) return {false, "Cardy defect " + fmt(worst) + " at trial " + std::to_string(trial)};
    }
    return {true, "20 brane configs: max |mu sigma Delta - i_* i^*| = " + fmt(worst)};
}

std::pair<bool, std::string> c9_double_s3(std::uint64_t seed) {
    ModularData md = drinfeld_double_data(FiniteGroup::symmetric(3), seed);
    if (md.rank() != 8) return {false, "rank " + std::to_string(md.rank()) + ", want 8"};
    std::vector<int> qd;
    for (int i = 0; i < 8; ++i) qd.push_back(static_cast<int>(md.qdims[i]));
    std::vector<int> sorted_qd = qd, want = {1, 1, 2, 2, 2, 2, 3, 3};
    std::sort(sorted_qd.begin(), sorted_qd.end());
    if (sorted_qd != want) return {false, "qdims are not {1,1,2,3,3,2,2,2}"};
    int sum_sq = 0;
    for (int q : qd) sum_sq += q * q;
    if (sum_sq != 36) return {false, "sum qdim^2 = " + std::to_string(sum_sq) + ", want 36"};
    ModularReport rep = modular_relations_check(md);
    if (rep.max_defect() >= 1e-8) return {false, "modular relation defect " + fmt(rep.max_defect())};
    verlinde_fusion(md); // throws on non-integrality beyond 1e-6
    return {true, "8 simples, qdims {1,1,2,3,3,2,2,2}, sum 36, relations defect " + fmt(rep.max_defect())};
}

std::pair<bool, std::string> c10_verlinde_burnside(std::uint64_t seed) {
    std::vector<FiniteGroup> groups;
    groups.push_back(FiniteGroup::cyclic(2));
    groups.push_back(FiniteGroup::cyclic(3));
    groups.push_back(FiniteGroup::cyclic(4));
    groups.push_back(FiniteGroup::symmetric(3));
    groups.push_back(FiniteGroup::dihedral(4));
    groups.push_back(FiniteGroup::quaternion8());
    std::string exemplar;
    for (const auto& G : groups) {
        ModularData md = drinfeld_double_data(G, seed);
        for (int g : {1, 2}) {
            double vd = verlinde_dim(md, g);
            BigInt oracle = burnside_orbit_oracle(G, g);
            if (BigInt(llround(vd)) != oracle || std::abs(vd - llround(vd)) > 1e-6)
                return {false, G.name() + " g=" + std::to_string(g) + ": verlinde " + fmt(vd) +
                                   " vs orbits " + oracle.str()};
            if (G.name() == "S3" && g == 2) exemplar = oracle.str();
        }
    }
    if (exemplar != "116") return {false, "D(S3) g=2 dimension = " + exemplar + ", want 116"};
    return {true, "verlinde_dim(D(G), g) = Burnside orbit count for 6 groups, g in {1,2}; D(S3) g=2 = 116"};
}

std::pair<bool, std::string> c11_su2k_fusion(std::uint64_t) {
    double worst = 0;
    for (int k = 1; k <= 6; ++k) {
        ModularData md = su2_level_k_data(k);
        worst = std::max(worst, modular_relations_check(md).st_cubed);
        FusionTensor N = verlinde_fusion(md);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (int l = 0; l <= k; ++l) {
                    bool parity = (i + j + l) % 2 == 0;
                    bool window = std::abs(i - j) <= l && l <= std::min(i + j, 2 * k - i - j);
                    int want = (parity && window) ? 1 : 0;
                    if (N(i, j, l) != want)
                        return {false, "k=" + std::to_string(k) + ": N_{" + std::to_string(i) + "," +
                                           std::to_string(j) + "}^" + std::to_string(l) + " = " +
                                           std::to_string(N(i, j, l)) + ", oracle " + std::to_string(want)};
                }
    }
    return {true, "k <= 6 fusion matches the truncated Clebsch-Gordan oracle; (ST)^3 defect <= " + fmt(worst)};
}

std::pair<bool, std::string> c12_ym_zeta(std::uint64_t) {
    const double t = 1e-6, c = 0.25, tol = 1e-4;
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool ok = true;
    for (auto [g, target] : {std::pair{2, std::numbers::pi * std::numbers::pi / 6.0},
                             std::pair{3, std::pow(std::numbers::pi, 4) / 90.0}}) {
        int nmax = su2_nmax_for_tail(g, t, c, 1e-8);
        PartitionValue z = ym_partition_function(su2_spectrum(nmax, c), g, t);
        double diff = std::abs(z.value - target);
        detail << "g=" << g << ": Z(t=1e-6) = " << fmt(z.value) << " vs zeta = " << fmt(target)
               << ", |diff| = " << fmt(diff) << " (tol 1e-4, tail < " << fmt(z.tail_bound) << "); ";
        if (diff > tol || z.tail_bound > 1e-8) ok = false;
    }
    // gluing consistency at the same truncation: genus 2 from two pants and a
    // cylinder with areas summing to t
    {
        int nmax = su2_nmax_for_tail(2, t, c, 1e-8);
        Spectrum s = su2_spectrum(nmax, c);
        ElementaryOps a = elementary_operators(s, t / 3), b = elementary_operators(s, t / 3),
                      cyl = elementary_operators(s, t / 3);
        std::vector<double> terms(s.entries.size());
        for (size_t i = 0; i < s.entries.size(); ++i)
            terms[i] = a.pants[i] * cyl.cylinder[i] * b.pants[i];
        double assembled = pairwise_sum(terms);
        double direct = ym_partition_function(s, 2, t).value;
        double rel = std::abs(assembled - direct) / std::max(1.0, std::abs(direct));
        detail << "gluing defect = " << fmt(rel) << "; ";
        if (rel >= 1e-12) ok = false;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms >= 5000) ok = false;
    detail << "zeta-function prefactor intentionally not reproduced (normalization-dependent); "
           << "within the 5 s budget: " << (ms < 5000 ? "yes" : "no");
    return {ok, detail.str()};
}

std::vector<Criterion> criteria();

std::pair<bool, std::string> c13_determinism(std::uint64_t seed) {
    std::string a = selftest_payload_json(seed);
    std::string b = selftest_payload_json(seed);
    if (a != b) return {false, "two selftest payload runs differ"};
    return {true, "two full payload runs are byte-identical (" + std::to_string(a.size()) + " bytes)"};
}

std::vector<Criterion> criteria() {
    return {
        {1, "dw_torus_flat_bundle_count", c1_torus_count},
        {2, "dw_mednykh_bridge", c2_mednykh},
        {3, "chartable_peter_weyl_sum", c3_peter_weyl},
        {4, "lattice_pachner_invariance", c4_pachner},
        {5, "lattice_normalization_bridge", c5_normalization_bridge},
        {6, "lattice_cylinder_projector", c6_cylinder_projector},
        {7, "cob_relation_suite", c7_cobordism_relations},
        {8, "openclosed_cardy_condition", c8_cardy},
        {9, "double_s3_modular_data", c9_double_s3},
        {10, "double_verlinde_burnside_bridge", c10_verlinde_burnside},
        {11, "su2k_fusion", c11_su2k_fusion},
        {12, "ym_zeta_limit", c12_ym_zeta},
        {13, "determinism", c13_determinism},
    };
}

} // namespace

std::vector<CriterionResult> run_selftest(std::uint64_t seed, const std::string& only) {
    std::vector<CriterionResult> results;
    for (const auto& c : criteria()) {
        if (!only.empty() && c.name.find(only) == std::string::npos &&
            std::to_string(c.id) != only)
            continue;
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [pass, detail] = c.run(seed);
            r.pass = pass;
            r.detail = detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    }
    return results;
}

std::string selftest_payload_json(std::uint64_t seed, const std::string& only) {
    Json j = output_envelope("selftest");
    j["seed"] = seed;
    j["criteria"] = Json::array();
    for (const auto& c : criteria()) {
        if (c.id == 13) continue; // the determinism criterion itself compares payloads
        if (!only.empty() && c.name.find(only) == std::string::npos &&
            std::to_string(c.id) != only)
            continue;
        std::pair<bool, std::string> out;
        try {
            out = c.run(seed);
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        j["criteria"].push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", out.first},
                                     {"detail", out.second}});
    }
    return j.dump(2);
}

} // namespace tqft
