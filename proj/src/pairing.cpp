#include "blanchfield/pairing.hpp"

#include <sstream>

namespace blanchfield {

namespace {

bool is_skew(const IntegerMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

IntegerMatrix skew_part(const IntegerMatrix& a) {
    IntegerMatrix out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - a(j, i);
    return out;
}

// p * A + q * B for integer matrices A, B and Laurent scalars p, q.
LaurentMatrix combine(const IntLaurentPoly& p, const IntegerMatrix& a, const IntLaurentPoly& q, const IntegerMatrix& b) {
    LaurentMatrix out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = p * IntLaurentPoly(a(i, j)) + q * IntLaurentPoly(b(i, j));
    return out;
}

RationalMatrix scaled(const RationalFunction& c, RationalMatrix m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= c;
    return m;
}

const IntLaurentPoly kT = IntLaurentPoly::t();
const IntLaurentPoly kTInv = IntLaurentPoly::t_inverse();

// v^T M conj(w) as a rational function.
RationalFunction bilinear(const RationalMatrix& m, const LaurentVector& v, const LaurentVector& w) {
    RationalFunction total;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (w(j).is_zero()) continue;
        RationalFunction column;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (v(i).is_zero() || m(i, j).is_zero()) continue;
            column += RationalFunction(v(i)) * m(i, j);
        }
        if (!column.is_zero()) total += column * RationalFunction(w(j).conjugate());
    }
    return total;
}

void require_length(Eigen::Index expected, const LaurentVector& v, const char* name) {
    if (v.size() != expected)
        throw DimensionMismatch(std::string("vector ") + name + " has length " + std::to_string(v.size()) +
                                ", expected " + std::to_string(expected));
}

}  // namespace

SeifertData SeifertData::make(IntegerMatrix a) {
    if (a.rows() != a.cols()) throw InvariantViolation("A square");
    if (a.rows() % 2 != 0) throw InvariantViolation("A even size");
    if (determinant(skew_part(a)) != 1) throw InvariantViolation("A - A^T unimodular");
    return SeifertData{std::move(a)};
}

FibredData FibredData::make(IntegerMatrix monodromy, IntegerMatrix intersection) {
    if (monodromy.rows() != monodromy.cols() || intersection.rows() != intersection.cols() ||
        monodromy.rows() != intersection.rows())
        throw InvariantViolation("P and J square of equal size");
    const mpz_class det = determinant(monodromy);
    if (det != 1 && det != -1) throw InvariantViolation("P invertible over the integers");
    if (!is_skew(intersection)) throw InvariantViolation("J skew-symmetric");
    const IntegerMatrix pjp = multiply(multiply(IntegerMatrix(monodromy.transpose()), intersection), monodromy);
    if (pjp != intersection) throw InvariantViolation("P^T J P = J");
    const IntegerMatrix id = IntegerMatrix::Identity(monodromy.rows(), monodromy.rows());
    if (determinant(combine(kT, monodromy, -1, id)).is_zero()) throw InvariantViolation("tP - id nonsingular");
    return FibredData{std::move(monodromy), std::move(intersection)};
}

DualSurfaceData DualSurfaceData::make(IntegerMatrix iota_plus, IntegerMatrix iota_minus, IntegerMatrix intersection) {
    if (intersection.rows() != intersection.cols()) throw InvariantViolation("J square");
    if (iota_plus.rows() != iota_minus.rows() || iota_plus.cols() != iota_minus.cols() ||
        iota_plus.cols() != intersection.rows())
        throw InvariantViolation("Iplus, Iminus and J dimensions agree");
    if (!is_skew(intersection)) throw InvariantViolation("J skew-symmetric");
    if (iota_plus.rows() != iota_plus.cols() || determinant(combine(1, iota_plus, -kTInv, iota_minus)).is_zero())
        throw InvariantViolation("det(Iplus - t^-1 Iminus) != 0");
    return DualSurfaceData{std::move(iota_plus), std::move(iota_minus), std::move(intersection)};
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::seifert: return "seifert";
        case Provenance::fibred: return "fibred";
        case Provenance::dual_surface: return "dual-surface";
        case Provenance::mk: return "mk";
    }
    return "unknown";
}

PresentedPairing from_seifert(const SeifertData& s) {
    const IntegerMatrix at = s.a.transpose();
    PresentedPairing out;
    out.label = Provenance::seifert;
    out.presentation = combine(kT, s.a, -1, at);
    const RationalMatrix a_minus_tat = to_rational(combine(1, s.a, -kT, at));
    try {
        out.pairing_matrix = scaled(RationalFunction(kT - 1), inverse(a_minus_tat));
    } catch (const SingularMatrix&) {
        throw InvariantViolation("det(A - tA^T) != 0");
    }
    return out;
}

PresentedPairing from_fibred(const FibredData& f) {
    const IntegerMatrix id = IntegerMatrix::Identity(f.size(), f.size());
    PresentedPairing out;
    out.label = Provenance::fibred;
    out.presentation = combine(kT, f.monodromy, -1, id);
    const RationalMatrix inv = inverse(to_rational(combine(kTInv, f.monodromy, -1, id)));
    out.pairing_matrix = multiply(to_rational(to_laurent(f.intersection)), inv);
    return out;
}

QModLambdaElem pairing_value(const PresentedPairing& b, const LaurentVector& v, const LaurentVector& w) {
    require_length(b.size(), v, "v");
    require_length(b.size(), w, "w");
    return qmod_canonicalize(bilinear(b.pairing_matrix, v, w));
}

std::vector<std::vector<QModLambdaElem>> pairing_table(const PresentedPairing& b) {
    const Eigen::Index n = b.size();
    std::vector<std::vector<QModLambdaElem>> out(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i)].push_back(qmod_canonicalize(b.pairing_matrix(i, j)));
    return out;
}

bool element_equal(const PresentedPairing& b, const LaurentVector& v, const LaurentVector& w) {
    require_length(b.size(), v, "v");
    require_length(b.size(), w, "w");
    const LaurentVector diff = v - w;
    const RationalMatrix x = solve(to_rational(b.presentation), to_rational(diff));
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        if (!lambda_membership(x(i, 0))) return false;
    return true;
}

IntLaurentPoly intersection_pairing(const IntegerMatrix& j, const LaurentVector& v, const LaurentVector& w) {
    require_length(j.rows(), v, "v");
    require_length(j.rows(), w, "w");
    IntLaurentPoly total;
    for (Eigen::Index a = 0; a < j.rows(); ++a)
        for (Eigen::Index b = 0; b < j.cols(); ++b)
            if (j(a, b) != 0) total += v(a) * IntLaurentPoly(j(a, b)) * w(b).conjugate();
    return total;
}

DualSurfaceEvaluator::DualSurfaceEvaluator(const DualSurfaceData& data) {
    const RationalMatrix mv = to_rational(combine(1, data.iota_plus, -kTInv, data.iota_minus));
    RationalMatrix x;
    try {
        x = solve(mv, to_rational(to_laurent(data.iota_plus)));
    } catch (const SingularMatrix&) {
        throw InvariantViolation("det(Iplus - t^-1 Iminus) != 0");
    }
    matrix_ = scaled(RationalFunction(-1), multiply(RationalMatrix(x.transpose()), to_rational(to_laurent(data.intersection))));
}

QModLambdaElem DualSurfaceEvaluator::operator()(const LaurentVector& v, const LaurentVector& w) const {
    require_length(size(), v, "v");
    require_length(size(), w, "w");
    return qmod_canonicalize(bilinear(matrix_, v, w));
}

RationalFunction kearton_value(const SeifertData& s, const LaurentVector& v, const LaurentVector& w) {
    require_length(s.size(), v, "v");
    require_length(s.size(), w, "w");
    const RationalMatrix presentation = to_rational(combine(kT, s.a, -1, IntegerMatrix(s.a.transpose())));
    return bilinear(scaled(RationalFunction(kT - 1), inverse(presentation)), v, w);
}

std::optional<KeartonWitness> find_kearton_witness(const SeifertData& s, int bound) {
    const Eigen::Index n = s.size();
    if (n == 0) return std::nullopt;
    const LaurentMatrix presentation = combine(kT, s.a, -1, IntegerMatrix(s.a.transpose()));
    const RationalMatrix kearton = scaled(RationalFunction(kT - 1), inverse(to_rational(presentation)));

    std::vector<LaurentVector> candidates;
    if (n <= 2) {
        std::vector<int> digits(static_cast<std::size_t>(n), -bound);
        while (true) {
            LaurentVector x(n);
            bool nonzero = false;
            for (Eigen::Index i = 0; i < n; ++i) {
                x(i) = IntLaurentPoly(digits[static_cast<std::size_t>(i)]);
                nonzero = nonzero || digits[static_cast<std::size_t>(i)] != 0;
            }
            if (nonzero) candidates.push_back(x);
            Eigen::Index k = n - 1;
            while (k >= 0 && digits[static_cast<std::size_t>(k)] == bound) digits[static_cast<std::size_t>(k--)] = -bound;
            if (k < 0) break;
            ++digits[static_cast<std::size_t>(k)];
        }
    } else {
        for (Eigen::Index k = 0; k < n; ++k)
            for (int c = -bound; c <= bound; ++c)
                if (c != 0) {
                    LaurentVector x = LaurentVector::Constant(n, IntLaurentPoly());
                    x(k) = IntLaurentPoly(c);
                    candidates.push_back(x);
                }
    }

    for (Eigen::Index i = 0; i < n; ++i) {
        const LaurentVector v = unit_vector(n, i);
        for (Eigen::Index j = 0; j < n; ++j) {
            const LaurentVector w = unit_vector(n, j);
            for (const auto& x : candidates) {
                const LaurentVector shifted = v + multiply(presentation, x);
                const RationalFunction diff = bilinear(kearton, shifted, w) - bilinear(kearton, v, w);
                if (!lambda_membership(diff)) return KeartonWitness{v, w, x, diff};
            }
        }
    }
    return std::nullopt;
}

SeifertData stabilize(const SeifertData& s, const IntegerMatrix& xi, StabilizationKind kind) {
    const Eigen::Index n = s.size();
    if (xi.rows() != n || xi.cols() != 1) throw DimensionMismatch("stabilization column must be " + std::to_string(n) + "x1");
    IntegerMatrix out = IntegerMatrix::Zero(n + 2, n + 2);
    out.topLeftCorner(n, n) = s.a;
    if (kind == StabilizationKind::upper) {
        out.block(0, n, n, 1) = xi;
        out(n, n + 1) = 1;
    } else {
        out.block(n, 0, 1, n) = xi.transpose();
        out(n + 1, n) = 1;
    }
    return SeifertData::make(std::move(out));
}

LaurentVector unit_vector(Eigen::Index n, Eigen::Index i) {
    LaurentVector v = LaurentVector::Constant(n, IntLaurentPoly());
    v(i) = IntLaurentPoly(1);
    return v;
}

LaurentVector parse_laurent_vector(const std::string& text) {
    std::vector<IntLaurentPoly> entries;
    std::size_t start = 0;
    if (text.find_first_not_of(" \t") == std::string::npos) return LaurentVector(0);
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            entries.push_back(IntLaurentPoly::parse(piece));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), 1, start + e.column());
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    LaurentVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
    return v;
}

std::string to_string(const LaurentVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v(i).to_string();
    }
    return out + ")";
}

}  // namespace blanchfield
