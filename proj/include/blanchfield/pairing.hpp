#pragma once

// Presented Blanchfield pairings.
//
// A pairing is carried as a square presentation matrix R over Lambda together
// with a pairing matrix B over Q(t): the module is Lambda^n / R Lambda^n and
//
//     Bl(v, w) = v^T B conj(w)  in Q/Lambda,
//
// linear in the first slot and conjugate-linear in the second.

#include "blanchfield/matrix.hpp"
#include "blanchfield/qmod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blanchfield {

/// A Seifert matrix A (size 2g) with A - A^T unimodular.
struct SeifertData {
    IntegerMatrix a;

    /// Validates and wraps; throws InvariantViolation naming the failed check.
    static SeifertData make(IntegerMatrix a);
    Eigen::Index size() const { return a.rows(); }
    Eigen::Index genus() const { return a.rows() / 2; }
};

/// Monodromy P and intersection form J of a fibred 3-manifold.
struct FibredData {
    IntegerMatrix monodromy;
    IntegerMatrix intersection;

    static FibredData make(IntegerMatrix monodromy, IntegerMatrix intersection);
    Eigen::Index size() const { return monodromy.rows(); }
};

/// The two push-off maps of a dual surface and its intersection form.
struct DualSurfaceData {
    IntegerMatrix iota_plus;
    IntegerMatrix iota_minus;
    IntegerMatrix intersection;

    static DualSurfaceData make(IntegerMatrix iota_plus, IntegerMatrix iota_minus, IntegerMatrix intersection);
    Eigen::Index size() const { return intersection.rows(); }
};

enum class Provenance { seifert, fibred, dual_surface, mk };

std::string to_string(Provenance p);

struct PresentedPairing {
    LaurentMatrix presentation;
    RationalMatrix pairing_matrix;
    Provenance label = Provenance::seifert;

    Eigen::Index size() const { return presentation.rows(); }
};

/// Module Lambda^2g/(tA - A^T) with pairing (t - 1)(A - tA^T)^-1.
PresentedPairing from_seifert(const SeifertData& s);

/// Module Lambda^k/(tP - id) with pairing J (t^-1 P - id)^-1.
PresentedPairing from_fibred(const FibredData& f);

/// v^T B conj(w) reduced into Q/Lambda.
QModLambdaElem pairing_value(const PresentedPairing& b, const LaurentVector& v, const LaurentVector& w);

/// All values Bl(e_i, e_j).
std::vector<std::vector<QModLambdaElem>> pairing_table(const PresentedPairing& b);

/// Whether v and w define the same element of the presented module, decided by
/// solving R x = v - w over Q(t) and testing each entry for membership in Lambda.
bool element_equal(const PresentedPairing& b, const LaurentVector& v, const LaurentVector& w);

/// The sesquilinear extension of an integer intersection form to Lambda:
/// (p x, q y) -> p (x . y) conj(q), i.e. v^T J conj(w).
IntLaurentPoly intersection_pairing(const IntegerMatrix& j, const LaurentVector& v, const LaurentVector& w);

/// Evaluates the dual-surface expression
///
///     Bl(iota v, iota w) = -((I+ - t^-1 I-)^-1 I+ v)^T J conj(w)
///
/// for coordinate vectors of Lambda (x) H_1(F). The value is only asserted to be
/// the Blanchfield pairing on the image of iota; for other inputs the number is
/// returned without interpretation.
class DualSurfaceEvaluator {
public:
    explicit DualSurfaceEvaluator(const DualSurfaceData& data);

    QModLambdaElem operator()(const LaurentVector& v, const LaurentVector& w) const;

    /// The matrix E with value(v, w) = v^T E conj(w).
    const RationalMatrix& matrix() const noexcept { return matrix_; }
    Eigen::Index size() const { return matrix_.rows(); }

private:
    RationalMatrix matrix_;
};

/// Kearton's expression v^T (t - 1)(tA - A^T)^-1 conj(w), deliberately left as
/// a raw rational function. It is not well defined on the module.
RationalFunction kearton_value(const SeifertData& s, const LaurentVector& v, const LaurentVector& w);

/// A move v -> v + (tA - A^T) x exhibiting that kearton_value is not well defined.
struct KeartonWitness {
    LaurentVector v;
    LaurentVector w;
    LaurentVector x;
    RationalFunction difference;  // not in Lambda
};

/// Searches x with integer entries in [-bound, bound] (all of them for size <= 2,
/// otherwise multiples of coordinate vectors), v = e_i and w = e_j.
std::optional<KeartonWitness> find_kearton_witness(const SeifertData& s, int bound = 2);

enum class StabilizationKind { upper, lower };

/// Elementary S-equivalence enlargement. With xi the given integer column:
///
///   upper:  [A xi 0; 0 0 1; 0 0 0]      lower:  [A 0 0; xi^T 0 0; 0 1 0]
///
/// The new pair has zero diagonal and a single unit off-diagonal entry;
/// det(A' - A'^T) = det(A - A^T) and det(tA' - A'^T) = t det(tA - A^T) (upper).
SeifertData stabilize(const SeifertData& s, const IntegerMatrix& xi, StabilizationKind kind);

/// Lambda vector helpers.
LaurentVector unit_vector(Eigen::Index n, Eigen::Index i);
LaurentVector parse_laurent_vector(const std::string& text);
std::string to_string(const LaurentVector& v);

}  // namespace blanchfield
