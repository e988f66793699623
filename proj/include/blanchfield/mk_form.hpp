#pragma once

#include "blanchfield/matrix.hpp"
#include "blanchfield/pairing.hpp"
#include "blanchfield/qmod.hpp"

namespace blanchfield {

/// The standard symplectic form [0 id_k; -id_k 0].
IntegerMatrix standard_symplectic(Eigen::Index k);

/// Returns a unimodular integer P with P S P^T = standard_symplectic(k) for a
/// skew-symmetric S of size 2k with det S = 1.
///
/// Symplectic Gram-Schmidt over Z: take the first remaining basis vector e,
/// reduce the pairings S(e, f) of the other vectors by Euclidean row moves
/// until a single partner f with S(e, f) = 1 remains, split the pair off by
/// projecting every other vector onto its orthogonal complement, and repeat.
/// Rows of P are the new basis vectors: e_1..e_k first, then f_1..f_k.
IntegerMatrix symplectic_normalize(const IntegerMatrix& s);

/// Given P from symplectic_normalize, returns S P with S symplectic, chosen by
/// greedy elementary symplectic moves that shrink the entries of (S P) A (S P)^T.
/// Large entries there make M_K(z) badly conditioned for the eigenvalue solver.
IntegerMatrix symplectic_reduce(const IntegerMatrix& p, const IntegerMatrix& a);

/// symplectic_reduce(symplectic_normalize(A - A^T), A).
IntegerMatrix reduced_congruence(const SeifertData& s);

/// Hermitian presentation M_K(t) of the Blanchfield pairing of a knot.
struct MKForm {
    LaurentMatrix mk_matrix;
    IntegerMatrix congruence;  // P with P (A - A^T) P^T standard
    IntegerMatrix normalized;  // P A P^T
    SeifertData source;
};

/// After A <- P A P^T with P from symplectic_normalize then symplectic_reduce, assembles
///
///   M_K(t) = diag((1 - t^-1)^-1, 1) A diag(1, 1 - t) + diag(1, 1 - t^-1) A^T diag((1 - t)^-1, 1)
///
/// with k x k blocks. Throws when an entry leaves Lambda or the result is not
/// hermitian; neither can happen for valid Seifert data.
MKForm mk_matrix(const SeifertData& s);

/// The pairing -v^T M_K(t^-1)^-1 conj(w) on Lambda^2k / M_K(t), packaged as a
/// presented pairing.
PresentedPairing mk_pairing(const MKForm& m);

QModLambdaElem mk_pairing_value(const MKForm& m, const LaurentVector& v, const LaurentVector& w);

/// Evaluates M_K at a complex number z != 0.
Eigen::MatrixXcd evaluate(const LaurentMatrix& m, std::complex<double> z);

}  // namespace blanchfield
