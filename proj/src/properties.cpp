#include "blanchfield/properties.hpp"

#include "blanchfield/invariants.hpp"

#include <cmath>
#include <numbers>

namespace blanchfield {

namespace {

std::string vector_lines(std::initializer_list<std::pair<const char*, const LaurentVector*>> vectors) {
    std::string out;
    for (const auto& [name, v] : vectors) out += std::string("# ") + name + ": " + to_string(*v) + "\n";
    return out;
}

LaurentVector image(const LaurentMatrix& presentation, const LaurentVector& x) { return multiply(presentation, x); }

QModLambdaElem scaled_class(const IntLaurentPoly& p, const QModLambdaElem& value, const IntLaurentPoly& q) {
    return qmod_canonicalize(RationalFunction(p) * value.representative() * RationalFunction(q.conjugate()));
}

void fail(PropertyResult& r, std::string counterexample) {
    if (r.passed) r.counterexample = std::move(counterexample);
    r.passed = false;
}

}  // namespace

PropertyResult check_well_defined(const PresentedPairing& b, Rng& rng, int trials) {
    PropertyResult r{"well-definedness"};
    const Eigen::Index n = b.size();
    if (n == 0) {
        r.vacuous = true;
        return r;
    }
    for (int i = 0; i < trials; ++i) {
        const LaurentVector v = random_laurent_vector(rng, n);
        const LaurentVector w = random_laurent_vector(rng, n);
        const LaurentVector x = random_laurent_vector(rng, n);
        const LaurentVector rx = image(b.presentation, x);
        const QModLambdaElem base = pairing_value(b, v, w);
        r.checks += 2;
        if (pairing_value(b, v + rx, w) != base)
            fail(r, "# slot: first\n" + vector_lines({{"v", &v}, {"w", &w}, {"x", &x}}));
        if (pairing_value(b, v, w + rx) != base)
            fail(r, "# slot: second\n" + vector_lines({{"v", &v}, {"w", &w}, {"x", &x}}));
    }
    return r;
}

PropertyResult check_sesquilinear(const PresentedPairing& b, Rng& rng, int trials) {
    PropertyResult r{"sesquilinearity"};
    const Eigen::Index n = b.size();
    if (n == 0) {
        r.vacuous = true;
        return r;
    }
    for (int i = 0; i < trials; ++i) {
        const LaurentVector v = random_laurent_vector(rng, n);
        const LaurentVector w = random_laurent_vector(rng, n);
        const IntLaurentPoly p = random_laurent(rng);
        const IntLaurentPoly q = random_laurent(rng);
        const LaurentVector pv = v * p;
        const LaurentVector qw = w * q;
        ++r.checks;
        if (pairing_value(b, pv, qw) != scaled_class(p, pairing_value(b, v, w), q))
            fail(r, "# p: " + p.to_string() + "\n# q: " + q.to_string() + "\n" + vector_lines({{"v", &v}, {"w", &w}}));
    }
    return r;
}

PropertyResult check_hermitian(const PresentedPairing& b, Rng& rng, int trials) {
    PropertyResult r{"hermitian"};
    const Eigen::Index n = b.size();
    if (n == 0) {
        r.vacuous = true;
        return r;
    }
    for (int i = 0; i < trials; ++i) {
        const LaurentVector v = random_laurent_vector(rng, n);
        const LaurentVector w = random_laurent_vector(rng, n);
        ++r.checks;
        if (pairing_value(b, v, w) != pairing_value(b, w, v).conjugate())
            fail(r, vector_lines({{"v", &v}, {"w", &w}}));
    }
    return r;
}

PropertyResult check_nonsingular(const PresentedPairing& b, Rng& rng, int trials) {
    PropertyResult r{"nonsingularity"};
    const Eigen::Index n = b.size();
    if (n == 0) {
        r.vacuous = true;
        return r;
    }
    const LaurentVector zero = LaurentVector::Constant(n, IntLaurentPoly());
    for (int i = 0; i < trials; ++i) {
        LaurentVector w = random_laurent_vector(rng, n);
        if (i % 2 == 1) w = image(b.presentation, w);
        bool annihilated = true;
        for (Eigen::Index k = 0; k < n && annihilated; ++k)
            annihilated = pairing_value(b, unit_vector(n, k), w).is_zero();
        ++r.checks;
        if (annihilated != element_equal(b, w, zero)) fail(r, vector_lines({{"w", &w}}));
    }
    return r;
}

PropertyResult check_seifert_consistency(const SeifertData& s, Rng& rng, int trials) {
    PropertyResult r{"consistency"};
    const Eigen::Index n = s.size();
    if (n == 0) {
        r.vacuous = true;
        return r;
    }
    const IntegerMatrix at = s.a.transpose();
    const DualSurfaceEvaluator evaluator(DualSurfaceData::make(s.a, at, IntegerMatrix(s.a - at)));
    const PresentedPairing seifert = from_seifert(s);
    const LaurentMatrix a = to_laurent(s.a);
    for (int i = 0; i < trials; ++i) {
        const LaurentVector v = random_laurent_vector(rng, n);
        const LaurentVector w = random_laurent_vector(rng, n);
        ++r.checks;
        if (evaluator(v, w) != pairing_value(seifert, multiply(a, v), multiply(a, w)))
            fail(r, vector_lines({{"v", &v}, {"w", &w}}));
    }
    return r;
}

PropertyResult check_fibred_consistency(const FibredData& f, Rng& rng, int trials) {
    PropertyResult r{"fibred-consistency"};
    const Eigen::Index n = f.size();
    if (n == 0) {
        r.vacuous = true;
        return r;
    }
    const DualSurfaceEvaluator evaluator(
        DualSurfaceData::make(f.monodromy, IntegerMatrix::Identity(n, n), f.intersection));
    const PresentedPairing fibred = from_fibred(f);
    for (int i = 0; i < trials; ++i) {
        const LaurentVector v = random_laurent_vector(rng, n);
        const LaurentVector w = random_laurent_vector(rng, n);
        ++r.checks;
        if (evaluator(v, w) != pairing_value(fibred, v, w)) fail(r, vector_lines({{"v", &v}, {"w", &w}}));
    }
    return r;
}

PropertyResult check_evaluator_sesquilinear(const DualSurfaceData& d, Rng& rng, int trials) {
    PropertyResult r{"sesquilinearity"};
    const Eigen::Index n = d.size();
    if (n == 0) {
        r.vacuous = true;
        return r;
    }
    const DualSurfaceEvaluator evaluator(d);
    for (int i = 0; i < trials; ++i) {
        const LaurentVector v = random_laurent_vector(rng, n);
        const LaurentVector w = random_laurent_vector(rng, n);
        const IntLaurentPoly p = random_laurent(rng);
        const IntLaurentPoly q = random_laurent(rng);
        const LaurentVector pv = v * p;
        const LaurentVector qw = w * q;
        ++r.checks;
        if (evaluator(pv, qw) != scaled_class(p, evaluator(v, w), q))
            fail(r, "# p: " + p.to_string() + "\n# q: " + q.to_string() + "\n" + vector_lines({{"v", &v}, {"w", &w}}));
    }
    return r;
}

PropertyResult check_mk_form(const SeifertData& s, Rng& rng, int z_samples) {
    PropertyResult r{"mk-form"};
    MKForm m;
    try {
        m = mk_matrix(s);
    } catch (const Error& e) {
        fail(r, std::string("# ") + e.what() + "\n");
        return r;
    }
    ++r.checks;
    if (hermitian_adjoint(m.mk_matrix) != m.mk_matrix) fail(r, "# M_K not hermitian: " + to_string(m.mk_matrix) + "\n");

    const IntLaurentPoly delta = alexander_polynomial(s);
    const IntLaurentPoly det = determinant(m.mk_matrix);
    ++r.checks;
    bool unit_multiple = false;
    if (!det.is_zero()) {
        const IntLaurentPoly shifted = det * IntLaurentPoly::monomial(1, delta.lowest_exponent() - det.lowest_exponent());
        unit_multiple = shifted == delta || shifted == -delta;
    }
    if (!unit_multiple) fail(r, "# det M_K = " + det.to_string() + " vs Delta = " + delta.to_string() + "\n");

    if (s.size() == 0) return r;
    int sampled = 0;
    for (int attempt = 0; sampled < z_samples && attempt < 50 * z_samples; ++attempt) {
        const double theta = 0.01 + (2.0 * std::numbers::pi - 0.02) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const std::complex<double> z = std::polar(1.0, theta);
        if (std::abs(delta.evaluate(z)) < 1e-6) continue;
        int lt = 0, mk = 0;
        try {
            lt = levine_tristram_signature(s, z);
            mk = mk_signature(m, z);
        } catch (const Indeterminate&) {
            continue;
        }
        ++sampled;
        ++r.checks;
        if (lt != mk)
            fail(r, "# theta: " + std::to_string(theta) + " sigma_z = " + std::to_string(lt) +
                        " sign M_K(z) = " + std::to_string(mk) + "\n");
    }
    if (sampled < z_samples) fail(r, "# could not sample enough determinate points\n");
    return r;
}

PropertyResult check_kearton_ill_defined(const SeifertData& s) {
    PropertyResult r{"kearton-ill-defined"};
    if (s.size() == 0) {
        r.vacuous = true;
        return r;
    }
    const auto witness = find_kearton_witness(s);
    r.checks = 1;
    if (witness) {
        r.detail = "WITNESS FOUND";
        r.counterexample = vector_lines({{"v", &witness->v}, {"w", &witness->w}, {"x", &witness->x}}) +
                           "# difference: " + witness->difference.to_string() + "\n";
    } else {
        r.detail = "NO WITNESS";
        r.passed = false;
    }
    return r;
}

std::vector<PropertyResult> verify_entry(const CatalogEntry& entry, Rng& rng, int trials) {
    std::vector<PropertyResult> out;
    switch (entry.kind()) {
        case EntryKind::seifert: {
            const auto& s = std::get<SeifertData>(entry.data);
            const PresentedPairing b = from_seifert(s);
            out.push_back(check_well_defined(b, rng, trials));
            out.push_back(check_sesquilinear(b, rng, trials));
            out.push_back(check_hermitian(b, rng, trials));
            out.push_back(check_nonsingular(b, rng, trials));
            out.push_back(check_seifert_consistency(s, rng, trials));
            out.push_back(check_mk_form(s, rng, 8));
            out.push_back(check_kearton_ill_defined(s));
            break;
        }
        case EntryKind::fibred: {
            const auto& f = std::get<FibredData>(entry.data);
            const PresentedPairing b = from_fibred(f);
            out.push_back(check_well_defined(b, rng, trials));
            out.push_back(check_sesquilinear(b, rng, trials));
            out.push_back(check_hermitian(b, rng, trials));
            out.push_back(check_nonsingular(b, rng, trials));
            out.push_back(check_fibred_consistency(f, rng, trials));
            break;
        }
        case EntryKind::dual_surface:
            out.push_back(check_evaluator_sesquilinear(std::get<DualSurfaceData>(entry.data), rng, trials));
            break;
    }
    return out;
}

}  // namespace blanchfield
