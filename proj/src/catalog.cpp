#include "blanchfield/catalog.hpp"

#include <cctype>
#include <map>
#include <set>

namespace blanchfield {

std::string to_string(EntryKind kind) {
    switch (kind) {
        case EntryKind::seifert: return "seifert";
        case EntryKind::fibred: return "fibred";
        case EntryKind::dual_surface: return "dual-surface";
    }
    return "unknown";
}

bool operator==(const CatalogEntry& a, const CatalogEntry& b) {
    if (a.name != b.name || a.notes != b.notes || a.data.index() != b.data.index()) return false;
    const auto same = [](const IntegerMatrix& x, const IntegerMatrix& y) {
        return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
    };
    switch (a.kind()) {
        case EntryKind::seifert: return same(std::get<SeifertData>(a.data).a, std::get<SeifertData>(b.data).a);
        case EntryKind::fibred: {
            const auto& x = std::get<FibredData>(a.data);
            const auto& y = std::get<FibredData>(b.data);
            return same(x.monodromy, y.monodromy) && same(x.intersection, y.intersection);
        }
        case EntryKind::dual_surface: {
            const auto& x = std::get<DualSurfaceData>(a.data);
            const auto& y = std::get<DualSurfaceData>(b.data);
            return same(x.iota_plus, y.iota_plus) && same(x.iota_minus, y.iota_minus) &&
                   same(x.intersection, y.intersection);
        }
    }
    return false;
}

namespace {

class EntryParser {
public:
    explicit EntryParser(std::string_view text) : text_(text) {}

    CatalogEntry parse() {
        std::map<std::string, IntegerMatrix> matrices;
        std::set<std::string> seen;
        std::string name, kind, notes;
        bool have_name = false, have_kind = false;

        while (true) {
            skip_blank();
            if (at_end()) break;
            const std::size_t key_line = line_, key_col = col_;
            std::string key = identifier();
            if (key.empty()) fail("expected a field name");
            skip_inline_space();
            expect(':');
            if (!seen.insert(key).second) throw ParseError("duplicate field '" + key + "'", key_line, key_col);
            if (key == "name") {
                name = rest_of_line();
                have_name = true;
            } else if (key == "kind") {
                kind = rest_of_line();
                if (const auto hash = kind.find('#'); hash != std::string::npos) {
                    kind.erase(hash);
                    kind.erase(kind.find_last_not_of(" \t") + 1);
                }
                have_kind = true;
            } else if (key == "notes") {
                notes = rest_of_line();
            } else if (key == "A" || key == "P" || key == "J" || key == "Iplus" || key == "Iminus") {
                skip_blank();
                matrices[key] = matrix();
            } else {
                throw ParseError("unknown field '" + key + "'", key_line, key_col);
            }
        }

        if (!have_name || name.empty()) fail("missing field 'name'");
        if (!have_kind) fail("missing field 'kind'");
        const auto require = [&](const char* key) -> IntegerMatrix& {
            auto it = matrices.find(key);
            if (it == matrices.end()) fail(std::string("missing field '") + key + "' for kind " + kind);
            return it->second;
        };
        const auto forbid_others = [&](std::initializer_list<const char*> allowed) {
            for (const auto& [key, m] : matrices) {
                bool ok = false;
                for (const char* a : allowed) ok = ok || key == a;
                if (!ok) fail("field '" + key + "' does not belong to kind " + kind);
            }
        };

        CatalogEntry entry;
        entry.name = name;
        entry.notes = notes;
        if (kind == "seifert") {
            forbid_others({"A"});
            entry.data = SeifertData::make(require("A"));
        } else if (kind == "fibred") {
            forbid_others({"P", "J"});
            entry.data = FibredData::make(require("P"), require("J"));
        } else if (kind == "dual-surface") {
            forbid_others({"Iplus", "Iminus", "J"});
            entry.data = DualSurfaceData::make(require("Iplus"), require("Iminus"), require("J"));
        } else {
            fail("unknown kind '" + kind + "'");
        }
        return entry;
    }

    IntegerMatrix matrix() {
        skip_blank();
        expect('[');
        skip_blank();
        std::vector<std::vector<mpz_class>> rows;
        if (peek_is(']')) {
            advance();
            return IntegerMatrix(0, 0);
        }
        while (true) {
            rows.push_back(row());
            skip_blank();
            if (peek_is(',')) {
                advance();
                skip_blank();
                continue;
            }
            expect(']');
            break;
        }
        const std::size_t cols = rows.front().size();
        IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) fail("ragged matrix: row " + std::to_string(i + 1) + " has a different length");
            for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
        return m;
    }

    void finish() {
        skip_blank();
        if (!at_end()) fail("unexpected trailing characters");
    }

private:
    std::vector<mpz_class> row() {
        expect('[');
        std::vector<mpz_class> out;
        while (true) {
            skip_blank();
            out.push_back(integer());
            skip_blank();
            if (peek_is(',')) {
                advance();
                continue;
            }
            expect(']');
            return out;
        }
    }

    mpz_class integer() {
        std::string digits;
        if (peek_is('-')) {
            digits += '-';
            advance();
        }
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_];
            advance();
        }
        if (digits.empty() || digits == "-") fail("expected an integer");
        return mpz_class(digits);
    }

    std::string identifier() {
        std::string out;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            advance();
        }
        return out;
    }

    std::string rest_of_line() {
        std::string out;
        while (!at_end() && text_[pos_] != '\n') {
            out += text_[pos_];
            advance();
        }
        const auto first = out.find_first_not_of(" \t\r");
        if (first == std::string::npos) return "";
        const auto last = out.find_last_not_of(" \t\r");
        return out.substr(first, last - first + 1);
    }

    void skip_inline_space() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) advance();
    }

    void skip_blank() {
        while (!at_end()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (!at_end() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (!peek_is(c)) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool peek_is(char c) const { return !at_end() && text_[pos_] == c; }
    bool at_end() const { return pos_ >= text_.size(); }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, col_); }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

IntegerMatrix integer_matrix(std::initializer_list<std::initializer_list<int>> rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    IntegerMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (int x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

mpz_class draw(Rng& rng, int bound) {
    const auto width = static_cast<std::uint64_t>(2 * bound + 1);
    return mpz_class(static_cast<long>(rng() % width) - bound);
}

}  // namespace

CatalogEntry load_entry(std::string_view text) { return EntryParser(text).parse(); }

IntegerMatrix parse_integer_matrix(std::string_view text) {
    EntryParser parser(text);
    IntegerMatrix m = parser.matrix();
    parser.finish();
    return m;
}

std::string render_integer_matrix(const IntegerMatrix& m) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += m(i, j).get_str();
        }
        out += "]";
    }
    return out + "]";
}

std::string render_entry(const CatalogEntry& entry) {
    std::string out = "name: " + entry.name + "\nkind: " + to_string(entry.kind()) + "\n";
    switch (entry.kind()) {
        case EntryKind::seifert:
            out += "A: " + render_integer_matrix(std::get<SeifertData>(entry.data).a) + "\n";
            break;
        case EntryKind::fibred: {
            const auto& f = std::get<FibredData>(entry.data);
            out += "P: " + render_integer_matrix(f.monodromy) + "\n";
            out += "J: " + render_integer_matrix(f.intersection) + "\n";
            break;
        }
        case EntryKind::dual_surface: {
            const auto& d = std::get<DualSurfaceData>(entry.data);
            out += "Iplus: " + render_integer_matrix(d.iota_plus) + "\n";
            out += "Iminus: " + render_integer_matrix(d.iota_minus) + "\n";
            out += "J: " + render_integer_matrix(d.intersection) + "\n";
            break;
        }
    }
    if (!entry.notes.empty()) out += "notes: " + entry.notes + "\n";
    return out;
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> out;
        out.push_back({"unknot", SeifertData::make(IntegerMatrix(0, 0)), "empty Seifert matrix"});
        const IntegerMatrix trefoil = integer_matrix({{-1, 1}, {0, -1}});
        out.push_back({"trefoil", SeifertData::make(trefoil), "a_ij = lk(d_i, d_j^+)"});
        out.push_back({"figure-eight", SeifertData::make(integer_matrix({{1, 1}, {0, -1}})), "a_ij = lk(d_i, d_j^+)"});
        const IntegerMatrix standard = integer_matrix({{0, 1}, {-1, 0}});
        out.push_back({"trefoil-fibred", FibredData::make(integer_matrix({{1, -1}, {1, 0}}), standard),
                       "punctured torus, monodromy of order 6"});
        out.push_back({"figure-eight-fibred", FibredData::make(integer_matrix({{2, 1}, {1, 1}}), standard),
                       "punctured torus, Anosov monodromy"});
        out.push_back({"trefoil-dual-surface",
                       DualSurfaceData::make(trefoil, IntegerMatrix(trefoil.transpose()), standard),
                       "Seifert surface as dual surface: Iplus = A, Iminus = A^T, J = A - A^T"});
        return out;
    }();
    return catalog;
}

std::optional<CatalogEntry> find_builtin(std::string_view name) {
    for (const auto& entry : builtin_catalog())
        if (entry.name == name) return entry;
    return std::nullopt;
}

SeifertData random_seifert(int genus, int coeff_bound, std::uint64_t seed) {
    Rng rng(seed);
    return random_seifert(genus, coeff_bound, rng);
}

SeifertData random_seifert(int genus, int coeff_bound, Rng& rng) {
    if (genus < 0) throw std::invalid_argument("genus must be non-negative");
    const Eigen::Index n = 2 * genus;
    IntegerMatrix a = IntegerMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            a(i, j) = draw(rng, coeff_bound);
            a(j, i) = a(i, j);
        }
    for (Eigen::Index i = 0; i < genus; ++i) a(i, genus + i) += 1;
    return SeifertData::make(std::move(a));
}

IntegerMatrix random_unimodular(Eigen::Index n, Rng& rng, int steps) {
    IntegerMatrix q = IntegerMatrix::Identity(n, n);
    if (n < 2) return q;
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n));
        auto j = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n - 1));
        if (j >= i) ++j;
        mpz_class c = draw(rng, 2);
        if (c == 0) c = 1;
        for (Eigen::Index k = 0; k < n; ++k) q(i, k) += c * q(j, k);
        if (rng() % 4 == 0)
            for (Eigen::Index k = 0; k < n; ++k) q(i, k) = -q(i, k);
    }
    return q;
}

IntLaurentPoly random_laurent(Rng& rng, int coeff_bound, int max_exponent) {
    IntLaurentPoly p;
    for (int e = -max_exponent; e <= max_exponent; ++e) p += IntLaurentPoly::monomial(draw(rng, coeff_bound), e);
    return p;
}

LaurentVector random_laurent_vector(Rng& rng, Eigen::Index n, int coeff_bound, int max_exponent) {
    LaurentVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = random_laurent(rng, coeff_bound, max_exponent);
    return v;
}

}  // namespace blanchfield
