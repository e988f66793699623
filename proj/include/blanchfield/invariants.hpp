#pragma once

#include "blanchfield/laurent.hpp"
#include "blanchfield/mk_form.hpp"
#include "blanchfield/pairing.hpp"

#include <Eigen/Core>

#include <complex>
#include <optional>
#include <vector>

namespace blanchfield {

/// det(tA - A^T), rescaled by a unit +-t^k so that Delta(t) = Delta(t^-1) and
/// Delta(1) = 1. The empty Seifert matrix gives 1.
IntLaurentPoly alexander_polynomial(const SeifertData& s);

/// Relative eigenvalue threshold below which a signature is indeterminate.
inline constexpr double kSignatureZeroThreshold = 1e-9;

/// Signature of a hermitian complex matrix. Throws Indeterminate when an
/// eigenvalue is within kSignatureZeroThreshold times the spectral radius of 0.
int hermitian_signature(const Eigen::MatrixXcd& h);

/// (1 - z) A + (1 - conj z) A^T.
Eigen::MatrixXcd tristram_form(const SeifertData& s, std::complex<double> z);

/// Levine-Tristram signature of the form above; z on the unit circle, z != 1.
/// Evaluated on the congruent matrix P A P^T, P = reduced_congruence(s).
int levine_tristram_signature(const SeifertData& s, std::complex<double> z);

/// Signature of M_K(z).
int mk_signature(const MKForm& m, std::complex<double> z);

struct SignatureSample {
    double angle;
    std::optional<int> signature;  // empty when indeterminate
};

/// Levine-Tristram signatures at z = exp(i pi j / (samples + 1)), j = 1..samples.
std::vector<SignatureSample> signature_profile(const SeifertData& s, int samples);

}  // namespace blanchfield
