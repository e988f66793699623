// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "blanchfield/catalog.hpp"
#include "blanchfield/invariants.hpp"
#include "blanchfield/mk_form.hpp"
#include "blanchfield/properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

using namespace blanchfield;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

void require(Outcome& o, bool condition, const std::string& what) {
    if (!condition && o.passed) o.detail = what;
    o.passed = o.passed && condition;
}

void absorb(Outcome& o, const PropertyResult& r, const std::string& context) {
    if (!r.passed && o.passed) o.detail = context + " " + r.name + "\n" + r.counterexample;
    o.passed = o.passed && r.passed;
}

IntLaurentPoly L(std::string_view s) { return IntLaurentPoly::parse(s); }

RationalFunction R(std::string_view num, std::string_view den) { return RationalFunction(L(num), L(den)); }

const SeifertData& builtin_seifert(const char* name) {
    static std::map<std::string, SeifertData> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, std::get<SeifertData>(find_builtin(name)->data)).first;
    return it->second;
}

// 200 Seifert matrices with genus 1..3 and coefficients in [-3, 3].
std::vector<SeifertData> corpus(std::uint64_t seed, int count, int max_genus) {
    Rng rng(seed);
    std::vector<SeifertData> out;
    for (int i = 0; i < count; ++i) out.push_back(random_seifert(1 + i % max_genus, 3, rng));
    return out;
}

Outcome trefoil_pin() {
    Outcome o;
    const SeifertData& s = builtin_seifert("trefoil");
    require(o, alexander_polynomial(s) == L("t - 1 + t^-1"), "Delta");
    const auto e1 = unit_vector(2, 0);
    const QModLambdaElem value = pairing_value(from_seifert(s), e1, e1);
    // (t - 1)^2 = (t^2 - t + 1) - t.
    require(o, value == qmod_canonicalize(R("t^2 - 2t + 1", "t^2 - t + 1")), "Bl(e1, e1) vs (t - 1)^2/D");
    require(o, value == qmod_canonicalize(R("-t", "t^2 - t + 1")), "Bl(e1, e1) vs -t/D");
    return o;
}

Outcome figure_eight_pin() {
    Outcome o;
    const SeifertData& s = builtin_seifert("figure-eight");
    const IntLaurentPoly delta = alexander_polynomial(s);
    require(o, delta == L("-t + 3 - t^-1"), "Delta");
    mpz_class at_one = 0;
    for (const auto& c : delta.coefficients()) at_one += c;
    require(o, at_one == 1, "Delta(1)");
    require(o, levine_tristram_signature(s, -1.0) == 0, "sigma_-1");
    return o;
}

Outcome well_definedness() {
    Outcome o;
    Rng rng(103);
    int index = 0;
    for (const auto& s : corpus(3, 200, 3)) absorb(o, check_well_defined(from_seifert(s), rng, 5), "#" + std::to_string(index++));
    return o;
}

Outcome hermitian_sesquilinear() {
    Outcome o;
    Rng rng(104);
    int index = 0;
    for (const auto& s : corpus(3, 200, 3)) {
        const PresentedPairing b = from_seifert(s);
        absorb(o, check_hermitian(b, rng, 5), "#" + std::to_string(index));
        absorb(o, check_sesquilinear(b, rng, 5), "#" + std::to_string(index));
        ++index;
    }
    return o;
}

Outcome nonsingularity() {
    Outcome o;
    Rng rng(105);
    int index = 0;
    for (const auto& s : corpus(5, 50, 2)) absorb(o, check_nonsingular(from_seifert(s), rng, 10), "#" + std::to_string(index++));
    return o;
}

Outcome consistency() {
    Outcome o;
    Rng rng(106);
    int index = 0;
    for (const auto& s : corpus(6, 100, 3)) absorb(o, check_seifert_consistency(s, rng, 1), "#" + std::to_string(index++));
    return o;
}

Outcome fibred_cross_check() {
    Outcome o;
    const FibredData f = std::get<FibredData>(find_builtin("trefoil-fibred")->data);
    const PresentedPairing b = from_fibred(f);
    const IntLaurentPoly det = determinant(b.presentation);
    const IntLaurentPoly delta = alexander_polynomial(builtin_seifert("trefoil"));
    const IntLaurentPoly shifted = det * IntLaurentPoly::monomial(1, delta.lowest_exponent() - det.lowest_exponent());
    require(o, shifted == delta || shifted == -delta, "det(tP - id) = " + det.to_string());
    Rng rng(107);
    absorb(o, check_well_defined(b, rng, 50), "fibred");
    absorb(o, check_hermitian(b, rng, 50), "fibred");
    absorb(o, check_sesquilinear(b, rng, 50), "fibred");
    absorb(o, check_nonsingular(b, rng, 50), "fibred");
    absorb(o, check_fibred_consistency(f, rng, 50), "fibred");
    return o;
}

Outcome mk_suite() {
    Outcome o;
    Rng rng(108);
    const auto base = corpus(8, 100, 3);
    for (std::size_t i = 0; i < base.size(); ++i) {
        SeifertData s = base[i];
        // Every other matrix is moved off the standard skew form so that the
        // symplectic normalization has work to do.
        if (i % 2) {
            const IntegerMatrix q = random_unimodular(s.size(), rng);
            s = SeifertData::make(multiply(multiply(q, s.a), IntegerMatrix(q.transpose())));
        }
        absorb(o, check_mk_form(s, rng, 8), "#" + std::to_string(i));
    }
    return o;
}

Outcome kearton_control() {
    Outcome o;
    const SeifertData& s = builtin_seifert("trefoil");
    const auto witness = find_kearton_witness(s, 2);
    require(o, witness.has_value(), "no witness");
    if (!witness) return o;
    // Pinned by hand: R = tA - A^T, x = (-2, -2), v = w = e1 gives
    // x^T R^T (t - 1) R^-1 e1 = (4t^2 - 6t + 2)/(t^2 - t + 1).
    require(o, to_string(witness->v) == "(1, 0)" && to_string(witness->w) == "(1, 0)", "witness vectors");
    require(o, to_string(witness->x) == "(-2, -2)", "witness x = " + to_string(witness->x));
    const RationalFunction pinned = R("4t^2 - 6t + 2", "t^2 - t + 1");
    require(o, witness->difference == pinned, "difference " + witness->difference.to_string());
    require(o, !pinned.in_lambda(), "difference in Lambda");
    return o;
}

Outcome symplectic_round_trip() {
    Outcome o;
    Rng rng(110);
    for (int i = 0; i < 100; ++i) {
        const Eigen::Index k = 1 + i % 4;
        const IntegerMatrix q = random_unimodular(2 * k, rng);
        const IntegerMatrix s = multiply(multiply(IntegerMatrix(q.transpose()), standard_symplectic(k)), q);
        const IntegerMatrix p = symplectic_normalize(s);
        require(o, multiply(multiply(p, s), IntegerMatrix(p.transpose())) == standard_symplectic(k),
                "trial " + std::to_string(i) + ": S = " + render_integer_matrix(s));
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no stated limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "trefoil pin: Delta and Bl(e1, e1)", 1.0, trefoil_pin},
        {2, "figure-eight pin: Delta, Delta(1) = 1, sigma_-1 = 0", 1.0, figure_eight_pin},
        {3, "well-definedness, 200 Seifert matrices x 5", 60.0, well_definedness},
        {4, "hermitian and sesquilinear, same corpus", 0.0, hermitian_sesquilinear},
        {5, "nonsingularity, 50 instances x 10", 0.0, nonsingularity},
        {6, "dual-surface evaluator vs Seifert formula, 100 cases", 0.0, consistency},
        {7, "trefoil-fibred determinant and suites", 0.0, fibred_cross_check},
        {8, "M_K suite, 100 Seifert matrices x 8 z", 120.0, mk_suite},
        {9, "Kearton expression witness on the trefoil", 0.0, kearton_control},
        {10, "symplectic normalization round trip, 100 cases", 0.0, symplectic_round_trip},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            if (o.passed) o.detail = "over the time limit";
            o.passed = false;
        }
        std::printf("%s  %2d  %-55s %8.3f s", o.passed ? "PASS" : "FAIL", c.id, c.name, seconds);
        if (c.limit_seconds > 0) std::printf(" (limit %g s)", c.limit_seconds);
        std::printf("\n");
        if (!o.passed) {
            std::printf("      %s\n", o.detail.c_str());
            ++failures;
        }
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
