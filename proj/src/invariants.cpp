#include "blanchfield/invariants.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

namespace blanchfield {

namespace {

void require_unit_circle(std::complex<double> z) {
    if (std::abs(std::abs(z) - 1.0) > 1e-9) throw std::invalid_argument("z must lie on the unit circle");
    if (std::abs(z - 1.0) < 1e-12) throw std::invalid_argument("z must differ from 1");
}

}  // namespace

IntLaurentPoly alexander_polynomial(const SeifertData& s) {
    LaurentMatrix presentation(s.size(), s.size());
    const IntLaurentPoly t = IntLaurentPoly::t();
    for (Eigen::Index i = 0; i < s.size(); ++i)
        for (Eigen::Index j = 0; j < s.size(); ++j)
            presentation(i, j) = t * IntLaurentPoly(s.a(i, j)) - IntLaurentPoly(s.a(j, i));
    IntLaurentPoly det = determinant(presentation);
    if (det.is_zero()) throw InvariantViolation("det(tA - A^T) != 0");

    const long span = det.lowest_exponent() + det.highest_exponent();
    if (span % 2 != 0) throw Error("Alexander polynomial " + det.to_string() + " cannot be symmetrized");
    det *= IntLaurentPoly::monomial(1, -span / 2);
    mpz_class at_one = 0;
    for (const auto& c : det.coefficients()) at_one += c;
    if (at_one < 0) det = -det;
    return det;
}

int hermitian_signature(const Eigen::MatrixXcd& h) {
    if (h.rows() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Indeterminate("eigenvalue computation failed");
    const Eigen::VectorXd& values = solver.eigenvalues();
    const double scale = values.cwiseAbs().maxCoeff();
    int signature = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (std::abs(values(i)) <= kSignatureZeroThreshold * scale) throw Indeterminate("near-zero eigenvalue");
        signature += values(i) > 0 ? 1 : -1;
    }
    return signature;
}

Eigen::MatrixXcd tristram_form(const SeifertData& s, std::complex<double> z) {
    const Eigen::Index n = s.size();
    Eigen::MatrixXcd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            h(i, j) = (1.0 - z) * s.a(i, j).get_d() + (1.0 - std::conj(z)) * s.a(j, i).get_d();
    return h;
}

namespace {

// P A P^T with P from reduced_congruence. Integer congruence keeps the
// signature, and the small entries keep the eigenvalues away from the
// relative zero threshold.
SeifertData reduced(const SeifertData& s) {
    const IntegerMatrix p = reduced_congruence(s);
    return SeifertData::make(multiply(multiply(p, s.a), IntegerMatrix(p.transpose())));
}

}  // namespace

int levine_tristram_signature(const SeifertData& s, std::complex<double> z) {
    require_unit_circle(z);
    return hermitian_signature(tristram_form(reduced(s), z));
}

int mk_signature(const MKForm& m, std::complex<double> z) {
    require_unit_circle(z);
    return hermitian_signature(evaluate(m.mk_matrix, z));
}

std::vector<SignatureSample> signature_profile(const SeifertData& s, int samples) {
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
    const SeifertData r = reduced(s);
    std::vector<SignatureSample> out;
    for (int j = 1; j <= samples; ++j) {
        const double angle = std::numbers::pi * j / (samples + 1);
        SignatureSample sample{angle, std::nullopt};
        try {
            sample.signature = levine_tristram_signature(r, std::polar(1.0, angle));
        } catch (const Indeterminate&) {
        }
        out.push_back(sample);
    }
    return out;
}

}  // namespace blanchfield
