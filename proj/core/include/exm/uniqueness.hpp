#pragma once

#include "exm/measure.hpp"
#include "exm/product.hpp"

#include <stdexcept>
#include <vector>

namespace exm {

/// Raised when an operation would need an evaluation outside the exact
/// family (e.g. transform preimages under a non-invariant measure on a
/// continuous carrier). Checks turn this into an "unsupported" verdict
/// rather than a failure.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The measure-preserving transforms of the product carrier:
/// S(x,y) = (x, x*y), T(x,y) = (y*x, x^{-1}), R(x,y) = (y,x) and the
/// inverse S_inv(x,y) = (x, x^{-1}*y). T decomposes as S^{-1} R S R.
enum class TransformKind { S, T, R, S_inv };

std::string transform_name(TransformKind k);

/// (mu x nu)(kind^{-1}(A)), exact. Finite carriers enumerate; continuous
/// carriers require both factors in the translation-invariant exact
/// family (the slice measures are then constant per slab) and throw
/// unsupported_error otherwise.
ExtNonneg transform_preimage_measure(const GroupSpec& G, TransformKind kind, const MeasureSpec& mu,
                                     const MeasureSpec& nu, const ProductSet& A);

/// Preimage computed pointwise on finite carriers (used by the brute-force
/// oracle and the decomposition check).
FinitePairSet finite_transform_preimage(const GroupSpec& G, TransformKind kind,
                                        const FinitePairSet& A);

/// Asserts S- and T-preimage measures equal (mu x nu)(A) per case, and
/// checks the pointwise decomposition T = S^{-1} R S R on finite carriers.
CheckReport measure_preserving_check(const GroupSpec& G, const MeasureSpec& mu,
                                     const MeasureSpec& nu, const std::vector<ProductSet>& cases);

/// For mu(A) > 0: asserts mu(A^{-1}) > 0 and mu(A x) > 0 for each listed
/// x, reporting the right-translate values as the step-function witness.
CheckReport right_translate_check(const GroupSpec& G, const MeasureSpec& mu, const SetValue& A,
                                  const std::vector<Element>& xs);

/// The key rewriting identity
///   mu(K) * lintegral_nu of f(y^{-1}) / nu(K y)  =  lintegral_mu of f,
/// exact on the invariant exact family. K must be compact with
/// nu(K) > 0; the hypothesis 0 < nu(K y) < inf is verified on the way.
CheckReport key_identity_check(const GroupSpec& G, const MeasureSpec& mu, const MeasureSpec& nu,
                               const SetValue& K, const SimpleFunc& f);

/// |nu(A) - nu(K0) * estimate(A)| <= tolerance + nu(K0) * bracket width
/// per test set; exact (zero tolerance, zero width) on discrete carriers.
CheckReport uniqueness_check(const GroupSpec& G, const MeasureSpec& nu, const PositiveCompact& K0,
                             const std::vector<SetValue>& test_sets, int n_max,
                             const EpsSchedule& schedule, const Rational& tolerance);

/// Involution of the inversion measure, the equivalence "mu left
/// invariant iff mu-check right invariant" on the supplied cases, and
/// matching regularity verdicts for mu and mu-check.
CheckReport inversion_duality_check(const GroupSpec& G, const MeasureSpec& mu,
                                    const std::vector<InvarianceCase>& cases);

/// The inversion measure as a MeasureSpec (Lebesgue and counting are
/// reflection-invariant; the Dirac atom moves to its inverse).
MeasureSpec inverted_measure(const MeasureSpec& mu);

}  // namespace exm
