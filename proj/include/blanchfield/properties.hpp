#pragma once

// Randomized checks of the structural properties of presented pairings:
// well-definedness, sesquilinearity, hermitian symmetry, nonsingularity, and
// agreement between the different formulas for the same pairing. Each check
// is deterministic given the generator state.

#include "blanchfield/catalog.hpp"
#include "blanchfield/mk_form.hpp"
#include "blanchfield/pairing.hpp"

#include <string>
#include <vector>

namespace blanchfield {

struct PropertyResult {
    std::string name;
    bool passed = true;
    bool vacuous = false;
    int checks = 0;
    std::string detail{};          // e.g. "WITNESS FOUND"
    std::string counterexample{};  // vectors, as "# v: (...)" comment lines
};

PropertyResult check_well_defined(const PresentedPairing& b, Rng& rng, int trials);
PropertyResult check_sesquilinear(const PresentedPairing& b, Rng& rng, int trials);
PropertyResult check_hermitian(const PresentedPairing& b, Rng& rng, int trials);
/// (for all i, Bl(e_i, w) = 0) <=> w = 0 in the module. Half of the w are drawn
/// from the image of the presentation so both directions are exercised.
PropertyResult check_nonsingular(const PresentedPairing& b, Rng& rng, int trials);

/// Dual-surface evaluator on (A, A^T, A - A^T) against the Seifert pairing on
/// (Av, Aw).
PropertyResult check_seifert_consistency(const SeifertData& s, Rng& rng, int trials);
/// Dual-surface evaluator on (P, id, J) against the fibred pairing.
PropertyResult check_fibred_consistency(const FibredData& f, Rng& rng, int trials);
/// Sesquilinearity of the dual-surface evaluator.
PropertyResult check_evaluator_sesquilinear(const DualSurfaceData& d, Rng& rng, int trials);

/// M_K entries in Lambda, hermitian, det M_K = +-t^k Delta, and
/// sign(M_K(z)) = sigma_z(K) at z_samples points away from Alexander roots.
PropertyResult check_mk_form(const SeifertData& s, Rng& rng, int z_samples);

/// Negative control: a witness that Kearton's expression is not well defined.
PropertyResult check_kearton_ill_defined(const SeifertData& s);

/// Runs every check that applies to the entry's kind.
std::vector<PropertyResult> verify_entry(const CatalogEntry& entry, Rng& rng, int trials);

}  // namespace blanchfield
