#pragma once

// Text format for knot and 3-manifold data, the built-in examples, and the
// seeded generators used by the property suites.
//
//   name: <string>
//   kind: seifert | fibred | dual-surface
//   A: [[i,i,...],[...]]                         kind seifert
//   P: [[...]]  J: [[...]]                        kind fibred
//   Iplus: [[...]] Iminus: [[...]] J: [[...]]     kind dual-surface
//   notes: <free text>                            optional
//
// Matrix fields may share a line; "#" starts a comment outside name/notes.

#include "blanchfield/matrix.hpp"
#include "blanchfield/pairing.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace blanchfield {

enum class EntryKind { seifert, fibred, dual_surface };

std::string to_string(EntryKind kind);

struct CatalogEntry {
    std::string name;
    std::variant<SeifertData, FibredData, DualSurfaceData> data;
    std::string notes;

    EntryKind kind() const { return static_cast<EntryKind>(data.index()); }
};

bool operator==(const CatalogEntry& a, const CatalogEntry& b);

/// Parses and validates one entry. Syntax errors raise ParseError with a
/// line/column; data that parses but breaks an invariant raises
/// InvariantViolation naming it.
CatalogEntry load_entry(std::string_view text);

/// Renders in the canonical text format; load_entry(render_entry(e)) == e.
std::string render_entry(const CatalogEntry& entry);

/// Parses a single bracketed integer matrix such as "[[1,0],[0,1]]" or "[]".
IntegerMatrix parse_integer_matrix(std::string_view text);
std::string render_integer_matrix(const IntegerMatrix& m);

const std::vector<CatalogEntry>& builtin_catalog();
std::optional<CatalogEntry> find_builtin(std::string_view name);

using Rng = std::mt19937_64;

/// A = S + N with S symmetric, entries uniform in [-coeff_bound, coeff_bound],
/// and N = [0 id_g; 0 0], so A - A^T is exactly the standard symplectic form.
SeifertData random_seifert(int genus, int coeff_bound, std::uint64_t seed);
SeifertData random_seifert(int genus, int coeff_bound, Rng& rng);

/// Product of random elementary integer row operations; det = +-1.
IntegerMatrix random_unimodular(Eigen::Index n, Rng& rng, int steps = 12);

/// Laurent polynomial with coefficients in [-coeff_bound, coeff_bound] and
/// exponents in [-max_exponent, max_exponent].
IntLaurentPoly random_laurent(Rng& rng, int coeff_bound = 2, int max_exponent = 1);
LaurentVector random_laurent_vector(Rng& rng, Eigen::Index n, int coeff_bound = 2, int max_exponent = 1);

}  // namespace blanchfield
