#pragma once

#include "tqft/character.hpp"
#include "tqft/group.hpp"
#include "tqft/rational.hpp"

#include <vector>

namespace tqft {

/// Genus plus ordered boundary conjugacy-class labels.
struct SurfaceSignature {
    int genus = 0;
    std::vector<int> boundary_classes; // class indices, possibly empty
};

enum class HomCountMethod { Brute, Convolution };

inline constexpr std::uint64_t kBruteGuard = 100'000'000ull; // |G|^(2g) iteration guard

/// |{(a_1,b_1,...,a_g,b_g) : prod [a_i,b_i] = e}|, exactly.
/// Brute force enumerates |G|^(2g) tuples (guarded, parallel over the
/// outermost generator); the convolution method multiplies the central
/// commutator-count element g times in the class algebra, all in integers.
BigInt count_homs_surface_group(const FiniteGroup& G, int genus,
                                HomCountMethod method = HomCountMethod::Convolution);

/// Z(Sigma_g) = |Hom(pi_1, G)| / |G| as an exact rational; genus 0 gives 1/|G|.
Rational dw_invariant(const FiniteGroup& G, int genus);

/// |G|^(2g-2) sum_rho dim(rho)^(2-2g).  Must equal dw_invariant within 1e-6
/// relative; the brute-force count is the arbiter for the exponent.
double mednykh_formula(const FiniteGroup& G, int genus, const CharacterTable& table);

/// n-point function on a genus-g surface with boundary circles labeled by
/// conjugacy classes, computed two ways that must agree exactly:
/// (i) direct count (1/|G|) |{g_i in a_i, (a,b) pairs : prod g_i prod [a,b] = e}|,
/// (ii) eps(omega^g e_{a_1} ... e_{a_k}) in the exact rational class algebra.
Rational npoint_function(const FiniteGroup& G, const SurfaceSignature& sig);

/// The two evaluation paths, exposed separately for cross-checking.
Rational npoint_direct(const FiniteGroup& G, const SurfaceSignature& sig);
Rational npoint_class_algebra(const FiniteGroup& G, const SurfaceSignature& sig);

/// Exact central class-algebra arithmetic (coefficients over class sums),
/// shared with the modular-data Burnside oracle.
struct CentralElement {
    std::vector<Rational> coeff; // per class
};

CentralElement central_multiply(const ClassTensor& N, const CentralElement& x, const CentralElement& y);

} // namespace tqft
