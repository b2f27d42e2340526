#include "tqft/dijkgraaf_witten.hpp"
#include "tqft/errors.hpp"
#include "tqft/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace tqft {

namespace {

// c(x) = |{(a,b) : [a,b] = x}| per class, by direct |G|^2 enumeration.
std::vector<BigInt> commutator_counts(const FiniteGroup& G) {
    std::vector<long long> per_class(G.num_classes(), 0);
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) ++per_class[G.class_of(G.commutator(a, b))];
    // the count is a class function: per element of the class
    std::vector<BigInt> c(G.num_classes());
    for (int k = 0; k < G.num_classes(); ++k) {
        if (per_class[k] % G.classes()[k].size() != 0)
            throw invariant_error("commutator_class_function", "commutator counts not constant on a class");
        c[k] = per_class[k] / G.classes()[k].size();
    }
    return c;
}

BigInt count_homs_brute(const FiniteGroup& G, int genus) {
    const int n = G.order();
    double total = std::pow(double(n), 2.0 * genus);
    if (total > double(kBruteGuard))
        throw std::invalid_argument("brute-force hom count needs |G|^(2g) = " +
                                    std::to_string(total) + " iterations; use the convolution method");
    // enumerate (a_1, b_1, ..., a_g, b_g); partition the outermost index
    const int tuple_len = 2 * genus;
    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
        std::uint64_t cnt = 0;
        std::vector<int> t(tuple_len, 0);
        for (std::uint64_t first = lo; first < hi; ++first) {
            t.assign(tuple_len, 0);
            t[0] = static_cast<int>(first);
            while (true) {
                int prod = 0;
                for (int i = 0; i < genus; ++i) prod = G.mul(prod, G.commutator(t[2 * i], t[2 * i + 1]));
                if (prod == 0) ++cnt;
                int pos = tuple_len - 1;
                while (pos >= 1 && t[pos] == n - 1) t[pos--] = 0;
                if (pos < 1) break;
                ++t[pos];
            }
        }
        return cnt;
    };
    return parallel_count(n, count_range);
}

} // namespace

CentralElement central_multiply(const ClassTensor& N, const CentralElement& x, const CentralElement& y) {
    CentralElement out;
    out.coeff.assign(N.r, Rational(0));
    for (int a = 0; a < N.r; ++a) {
        if (x.coeff[a] == 0) continue;
        for (int b = 0; b < N.r; ++b) {
            if (y.coeff[b] == 0) continue;
            Rational c = x.coeff[a] * y.coeff[b];
            for (int g = 0; g < N.r; ++g)
                if (long long nv = N(a, b, g)) out.coeff[g] += c * nv;
        }
    }
    return out;
}

BigInt count_homs_surface_group(const FiniteGroup& G, int genus, HomCountMethod method) {
    if (genus < 1) throw std::invalid_argument("count_homs_surface_group: genus must be positive");
    if (method == HomCountMethod::Brute) return count_homs_brute(G, genus);
    // convolution: coefficient of the identity in C^g, C = sum_x c([x]) x
    ClassTensor N = class_structure_constants(G);
    std::vector<BigInt> c = commutator_counts(G);
    CentralElement C;
    for (auto& v : c) C.coeff.push_back(Rational(v));
    CentralElement acc = C;
    for (int i = 1; i < genus; ++i) acc = central_multiply(N, acc, C);
    Rational at_e = acc.coeff[0];
    if (denominator(at_e) != 1)
        throw invariant_error("integral_hom_count", "convolution produced a non-integer");
    return numerator(at_e);
}

Rational dw_invariant(const FiniteGroup& G, int genus) {
    if (genus < 0) throw std::invalid_argument("dw_invariant: genus must be nonnegative");
    if (genus == 0) return Rational(1, G.order()); // pi_1(S^2) trivial: a single hom
    BigInt homs = count_homs_surface_group(G, genus, HomCountMethod::Convolution);
    return Rational(homs, G.order());
}

double mednykh_formula(const FiniteGroup& G, int genus, const CharacterTable& table) {
    double sum = 0;
    for (int d : table.dims) sum += std::pow(double(d), 2.0 - 2.0 * genus);
    return std::pow(double(G.order()), 2.0 * genus - 2.0) * sum;
}

Rational npoint_direct(const FiniteGroup& G, const SurfaceSignature& sig) {
    const int n = G.order();
    const int k = static_cast<int>(sig.boundary_classes.size());
    double total = std::pow(double(n), 2.0 * sig.genus);
    for (int c : sig.boundary_classes) {
        if (c < 0 || c >= G.num_classes()) throw std::invalid_argument("npoint: bad boundary class");
        total *= G.classes()[c].size();
    }
    if (total > double(kBruteGuard))
        throw std::invalid_argument("npoint direct count exceeds the enumeration guard");

    // odometer over (boundary members..., a_1, b_1, ..., a_g, b_g)
    std::vector<int> radix;
    for (int c : sig.boundary_classes) radix.push_back(G.classes()[c].size());
    for (int i = 0; i < 2 * sig.genus; ++i) radix.push_back(n);
    std::vector<int> t(radix.size(), 0);
    BigInt cnt = 0;
    while (true) {
        int prod = 0;
        for (int i = 0; i < k; ++i) prod = G.mul(prod, G.classes()[sig.boundary_classes[i]].members[t[i]]);
        for (int i = 0; i < sig.genus; ++i)
            prod = G.mul(prod, G.commutator(t[k + 2 * i], t[k + 2 * i + 1]));
        if (prod == 0) ++cnt;
        int pos = static_cast<int>(t.size()) - 1;
        while (pos >= 0 && t[pos] == radix[pos] - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return Rational(cnt, n);
}

Rational npoint_class_algebra(const FiniteGroup& G, const SurfaceSignature& sig) {
    ClassTensor N = class_structure_constants(G);
    const int r = G.num_classes();
    auto class_sum = [&](int c) {
        CentralElement e;
        e.coeff.assign(r, Rational(0));
        e.coeff[c] = 1;
        return e;
    };
    // omega = sum_a (|G|/|a|) e_a e_{a^-1}
    CentralElement omega;
    omega.coeff.assign(r, Rational(0));
    for (int a = 0; a < r; ++a) {
        int ainv = G.class_of(G.inverse(G.classes()[a].representative));
        Rational w(G.order(), G.classes()[a].size());
        for (int g = 0; g < r; ++g)
            if (long long nv = N(a, ainv, g)) omega.coeff[g] += w * nv;
    }
    CentralElement acc = class_sum(0); // the unit
    for (int i = 0; i < sig.genus; ++i) acc = central_multiply(N, acc, omega);
    for (int c : sig.boundary_classes) {
        if (c < 0 || c >= r) throw std::invalid_argument("npoint: bad boundary class");
        acc = central_multiply(N, acc, class_sum(c));
    }
    // eps(e_c) = delta_{c,identity-class} / |G|
    return acc.coeff[0] / G.order();
}

Rational npoint_function(const FiniteGroup& G, const SurfaceSignature& sig) {
    Rational algebraic = npoint_class_algebra(G, sig);
    Rational direct = npoint_direct(G, sig);
    if (algebraic != direct)
        throw invariant_error("npoint_paths_agree",
                              "direct count " + to_string(direct) + " != class-algebra value " +
                                  to_string(algebraic));
    return algebraic;
}

} // namespace tqft
