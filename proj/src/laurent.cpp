#include "blanchfield/laurent.hpp"

#include "blanchfield/errors.hpp"

#include <cctype>
#include <map>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace blanchfield {

IntLaurentPoly::IntLaurentPoly(const mpz_class& c) {
    if (c != 0) coeffs_.push_back(c);
}

IntLaurentPoly::IntLaurentPoly(long lowest_exponent, poly::ZPoly coefficients)
    : lowest_(lowest_exponent), coeffs_(std::move(coefficients)) {
    normalize();
}

IntLaurentPoly IntLaurentPoly::monomial(const mpz_class& c, long exponent) {
    return IntLaurentPoly(exponent, poly::ZPoly{c});
}

void IntLaurentPoly::normalize() {
    poly::trim(coeffs_);
    if (coeffs_.empty()) {
        lowest_ = 0;
        return;
    }
    const long v = poly::t_valuation(coeffs_);
    if (v > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + v);
        lowest_ += v;
    }
}

mpz_class IntLaurentPoly::coefficient(long exponent) const {
    const long i = exponent - lowest_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool IntLaurentPoly::is_unit() const {
    return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

IntLaurentPoly IntLaurentPoly::conjugate() const {
    if (is_zero()) return {};
    return IntLaurentPoly(-highest_exponent(), poly::ZPoly(coeffs_.rbegin(), coeffs_.rend()));
}

std::complex<double> IntLaurentPoly::evaluate(std::complex<double> z) const {
    if (z == 0.0) throw std::invalid_argument("cannot evaluate a Laurent polynomial at 0");
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
    return acc * std::pow(z, static_cast<int>(lowest_));
}

IntLaurentPoly IntLaurentPoly::divide_exact(const IntLaurentPoly& b) const {
    if (b.is_zero()) throw DivisionByZero();
    poly::ZPoly q;
    if (!poly::divide_exact(coeffs_, b.coeffs_, q)) throw Error("inexact division in Lambda");
    return IntLaurentPoly(lowest_ - b.lowest_, std::move(q));
}

IntLaurentPoly& IntLaurentPoly::operator+=(const IntLaurentPoly& b) {
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    const long lo = std::min(lowest_, b.lowest_);
    const poly::ZPoly sum = poly::add(poly::shift(coeffs_, lowest_ - lo), poly::shift(b.coeffs_, b.lowest_ - lo));
    *this = IntLaurentPoly(lo, sum);
    return *this;
}

IntLaurentPoly& IntLaurentPoly::operator-=(const IntLaurentPoly& b) { return *this += -b; }

IntLaurentPoly& IntLaurentPoly::operator*=(const IntLaurentPoly& b) {
    if (is_zero() || b.is_zero()) return *this = IntLaurentPoly();
    // Both factors have nonzero constant coefficient, so the product does too.
    coeffs_ = poly::mul(coeffs_, b.coeffs_);
    lowest_ += b.lowest_;
    return *this;
}

IntLaurentPoly operator-(IntLaurentPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::string render_terms(const std::vector<RenderedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : terms) {
        if (first) {
            if (term.sign < 0) out += "-";
        } else {
            out += term.sign < 0 ? " - " : " + ";
        }
        first = false;
        if (term.exponent == 0) {
            out += term.magnitude;
            continue;
        }
        if (!term.unit_magnitude) out += term.magnitude;
        out += "t";
        if (term.exponent != 1) out += "^" + std::to_string(term.exponent);
    }
    return out;
}

std::string IntLaurentPoly::to_string() const {
    std::vector<RenderedTerm> terms;
    for (long i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        terms.push_back({lowest_ + i, sgn(c) < 0 ? -1 : 1, mag.get_str(), mag == 1});
    }
    return render_terms(terms);
}

std::ostream& operator<<(std::ostream& os, const IntLaurentPoly& p) { return os << p.to_string(); }

namespace {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) : text_(text) {}

    IntLaurentPoly parse() {
        std::map<long, mpz_class> terms;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coefficient, exponent] = term();
            terms[exponent] += sign * coefficient;
            skip_space();
        }
        IntLaurentPoly result;
        for (const auto& [e, c] : terms) result += IntLaurentPoly::monomial(c, e);
        return result;
    }

private:
    std::pair<mpz_class, long> term() {
        mpz_class coefficient = 1;
        bool have_coefficient = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = mpz_class(digits());
            have_coefficient = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (at_end() || peek() != 't') fail("expected 't' after '*'");
            }
        }
        if (at_end() || peek() != 't') {
            if (!have_coefficient) fail("expected coefficient or 't'");
            return {coefficient, 0};
        }
        ++pos_;
        skip_space();
        long exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            bool negative = false;
            if (!at_end() && (peek() == '-' || peek() == '+')) {
                negative = peek() == '-';
                ++pos_;
            }
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            exponent = std::stol(digits());
            if (negative) exponent = -exponent;
        }
        return {coefficient, exponent};
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntLaurentPoly IntLaurentPoly::parse(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace blanchfield
