#include "tqft/yang_mills.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tqft {

Spectrum su2_spectrum(int n_max, double casimir_scale) {
    if (n_max < 1) throw std::invalid_argument("su2_spectrum: n_max >= 1 required");
    Spectrum s;
    s.kind = Spectrum::Kind::Su2Truncated;
    s.casimir_scale = casimir_scale;
    s.entries.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
        s.entries.push_back({std::to_string(n), n, casimir_scale * (double(n) * n - 1.0)});
    return s;
}

Spectrum finite_group_spectrum(const CharacterTable& t) {
    Spectrum s;
    s.kind = Spectrum::Kind::FiniteGroup;
    for (int k = 0; k < t.num_irreps(); ++k)
        s.entries.push_back({"rho" + std::to_string(k), t.dims[k], 0.0});
    return s;
}

double pairwise_sum(const std::vector<double>& terms) {
    if (terms.empty()) return 0;
    std::vector<double> level = terms;
    while (level.size() > 1) {
        std::vector<double> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] + level[i + 1]);
        if (level.size() % 2) next.push_back(level.back());
        level = std::move(next);
    }
    return level[0];
}

namespace {

// Rigorous remainder bound for sum_{n > N} e^{-a(n^2-1)} n^{2-2g} with a >= 0:
// the summand is decreasing (for g >= 1, or once a > 0 kills the polynomial),
// so the integral comparison applies; the Gaussian tail integral is bounded
// by e^{-aN^2} / (2aN).
double su2_tail_bound(int N, int genus, double a) {
    if (N < 1) N = 1;
    double poly = 2.0 - 2.0 * genus;
    if (a <= 0) {
        if (genus >= 2) // sum n^{2-2g} <= int_N^inf x^{2-2g} dx
            return std::pow(double(N), 3.0 - 2.0 * genus) / (2.0 * genus - 3.0);
        return std::numeric_limits<double>::infinity();
    }
    if (genus >= 2) {
        // e^{-a(n^2-1)} n^{2-2g} <= e^a n^{-(2g-2)} e^{-a n^2}
        // tail <= e^a N^{2-2g} int_N^inf e^{-a x^2} dx <= e^a N^{2-2g} e^{-aN^2}/(2aN)
        return std::exp(a) * std::pow(double(N), poly) * std::exp(-a * double(N) * N) / (2.0 * a * N);
    }
    // g <= 1: polynomial factor grows; use the term-ratio geometric bound.
    // ratio(n) = e^{-a(2n+1)} ((n+1)/n)^{2-2g} <= q for n >= N
    double q = std::exp(-a * (2.0 * N + 1.0)) * std::pow((N + 1.0) / N, poly);
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    double first = std::exp(-a * (double(N + 1) * (N + 1) - 1.0)) * std::pow(N + 1.0, poly);
    return first / (1.0 - q);
}

} // namespace

PartitionValue ym_partition_function(const Spectrum& s, int genus, double area) {
    if (genus < 0) throw std::invalid_argument("partition function: genus must be nonnegative");
    if (area < 0) throw std::invalid_argument("partition function: area must be nonnegative");
    if (s.kind == Spectrum::Kind::Su2Truncated && area == 0 && genus <= 1)
        throw std::invalid_argument("divergent request: t = 0 with g <= 1 on an infinite-type spectrum");
    std::vector<double> terms;
    terms.reserve(s.entries.size());
    for (const auto& e : s.entries)
        terms.push_back(std::exp(-area * e.casimir) * std::pow(double(e.dim), 2.0 - 2.0 * genus));
    PartitionValue out;
    out.value = pairwise_sum(terms);
    if (s.kind == Spectrum::Kind::Su2Truncated)
        out.tail_bound = su2_tail_bound(static_cast<int>(s.entries.size()), genus,
                                        area * s.casimir_scale);
    return out;
}

int su2_nmax_for_tail(int genus, double area, double casimir_scale, double target) {
    if (target <= 0) throw std::invalid_argument("tail target must be positive");
    double a = area * casimir_scale;
    int N = 2;
    while (su2_tail_bound(N, genus, a) > target) {
        if (N > 100'000'000) throw std::invalid_argument("tail target unreachable at this area");
        N *= 2;
    }
    // bisect down to the smallest sufficient N
    int lo = N / 2, hi = N;
    while (lo + 1 < hi) {
        int mid = lo + (hi - lo) / 2;
        (su2_tail_bound(mid, genus, a) > target ? lo : hi) = mid;
    }
    return hi;
}

ElementaryOps elementary_operators(const Spectrum& s, double area) {
    const int L = static_cast<int>(s.entries.size());
    ElementaryOps ops;
    ops.cylinder.resize(L);
    ops.pants.resize(L);
    ops.cap.resize(L);
    for (int i = 0; i < L; ++i) {
        double w = std::exp(-area * s.entries[i].casimir);
        ops.cylinder[i] = w;
        ops.pants[i] = w / s.entries[i].dim;
        ops.cap[i] = w * s.entries[i].dim;
    }
    return ops;
}

} // namespace tqft
