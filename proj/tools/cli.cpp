#include "cli.hpp"

#include "blanchfield/catalog.hpp"
#include "blanchfield/errors.hpp"
#include "blanchfield/invariants.hpp"
#include "blanchfield/mk_form.hpp"
#include "blanchfield/properties.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

namespace blanchfield::cli {

namespace {

using nlohmann::json;

struct Context {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;
    json input = json::object();
    json result = json::object();
    json diagnostics = json::array();

    int finish(const std::string& command, const std::string& text, int code) {
        if (as_json) {
            json doc;
            doc["command"] = command;
            doc["input"] = input;
            doc["result"] = result;
            doc["diagnostics"] = diagnostics;
            out << doc.dump(2) << "\n";
        } else {
            out << text;
        }
        return code;
    }
};

// A file path if one exists, otherwise a built-in name.
CatalogEntry resolve_entry(const std::string& ref) {
    if (std::filesystem::is_regular_file(ref)) {
        std::ifstream in(ref);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return load_entry(buffer.str());
    }
    if (auto entry = find_builtin(ref)) return *entry;
    throw Error("no such file or built-in entry: " + ref);
}

const SeifertData& require_seifert(const CatalogEntry& entry) {
    if (entry.kind() != EntryKind::seifert)
        throw Error("entry '" + entry.name + "' has kind " + to_string(entry.kind()) + "; a seifert entry is required");
    return std::get<SeifertData>(entry.data);
}

json describe(const CatalogEntry& entry, const std::string& ref) {
    return json{{"entry", ref}, {"name", entry.name}, {"kind", to_string(entry.kind())}};
}

std::complex<double> parse_z(const std::string& text) {
    static const std::string prefix = "theta:";
    if (text.rfind(prefix, 0) == 0) {
        std::size_t used = 0;
        const std::string angle = text.substr(prefix.size());
        double theta = 0;
        try {
            theta = std::stod(angle, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != angle.size()) throw Error("cannot parse angle in '" + text + "'");
        return std::polar(1.0, theta);
    }
    static const std::regex complex_re(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
    std::smatch m;
    if (text.empty() || !std::regex_match(text, m, complex_re) || (!m[1].matched && !m[2].matched))
        throw Error("cannot parse z = '" + text + "'; expected re+imi or theta:<radians>");
    const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
    double im = 0.0;
    if (m[2].matched) {
        im = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (m[2].str() == "-") im = -im;
    }
    return {re, im};
}

std::string format_angle(double theta) {
    std::ostringstream os;
    os.precision(6);
    os << theta;
    return os.str();
}

std::string render_table(const std::vector<std::vector<QModLambdaElem>>& table, json& rows) {
    rows = json::array();
    if (table.empty()) return "[]\n";
    std::string text;
    for (const auto& row : table) {
        json jrow = json::array();
        text += "[";
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) text += ", ";
            text += row[j].to_string();
            jrow.push_back(row[j].to_string());
        }
        text += "]\n";
        rows.push_back(jrow);
    }
    return text;
}

json laurent_rows(const LaurentMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

json integer_rows(const IntegerMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

int cmd_alexander(Context& ctx, const std::string& ref) {
    const CatalogEntry entry = resolve_entry(ref);
    ctx.input = describe(entry, ref);
    IntLaurentPoly delta;
    if (entry.kind() == EntryKind::fibred) {
        // No normalization: for a general fibred 3-manifold det(P - id) need not be +-1.
        delta = determinant(from_fibred(std::get<FibredData>(entry.data)).presentation);
        ctx.diagnostics.push_back("fibred entry: determinant of tP - id, not normalized");
    } else {
        delta = alexander_polynomial(require_seifert(entry));
    }
    ctx.result["alexander"] = delta.to_string();
    return ctx.finish("alexander", delta.to_string() + "\n", kOk);
}

int cmd_pairing(Context& ctx, const std::string& ref, const std::optional<std::string>& v,
                const std::optional<std::string>& w) {
    const CatalogEntry entry = resolve_entry(ref);
    ctx.input = describe(entry, ref);
    if (v.has_value() != w.has_value()) throw Error("--v and --w must be given together");

    std::optional<PresentedPairing> presented;
    std::optional<DualSurfaceEvaluator> evaluator;
    switch (entry.kind()) {
        case EntryKind::seifert: presented = from_seifert(std::get<SeifertData>(entry.data)); break;
        case EntryKind::fibred: presented = from_fibred(std::get<FibredData>(entry.data)); break;
        case EntryKind::dual_surface:
            evaluator.emplace(std::get<DualSurfaceData>(entry.data));
            ctx.diagnostics.push_back("dual-surface values are the pairing only on the image of iota");
            break;
    }
    auto value = [&](const LaurentVector& a, const LaurentVector& b) {
        return presented ? pairing_value(*presented, a, b) : (*evaluator)(a, b);
    };
    const Eigen::Index n = presented ? presented->size() : evaluator->size();

    if (v) {
        const LaurentVector lv = parse_laurent_vector(*v);
        const LaurentVector lw = parse_laurent_vector(*w);
        if (lv.size() != n || lw.size() != n)
            throw DimensionMismatch("vectors must have length " + std::to_string(n));
        const std::string s = value(lv, lw).to_string();
        ctx.input["v"] = to_string(lv);
        ctx.input["w"] = to_string(lw);
        ctx.result["value"] = s;
        return ctx.finish("pairing", s + "\n", kOk);
    }
    std::vector<std::vector<QModLambdaElem>> table(n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) table[i].push_back(value(unit_vector(n, i), unit_vector(n, j)));
    json rows;
    const std::string text = render_table(table, rows);
    ctx.result["matrix"] = rows;
    return ctx.finish("pairing", text, kOk);
}

int cmd_mk(Context& ctx, const std::string& ref) {
    const CatalogEntry entry = resolve_entry(ref);
    ctx.input = describe(entry, ref);
    const MKForm m = mk_matrix(require_seifert(entry));
    const IntLaurentPoly det = determinant(m.mk_matrix);
    ctx.result["mk"] = laurent_rows(m.mk_matrix);
    ctx.result["congruence"] = integer_rows(m.congruence);
    ctx.result["det"] = det.to_string();
    std::string text = "M_K: " + to_string(m.mk_matrix) + "\n";
    text += "P: " + render_integer_matrix(m.congruence) + "\n";
    text += "det: " + det.to_string() + "\n";
    return ctx.finish("mk", text, kOk);
}

int cmd_signature(Context& ctx, const std::string& ref, const std::optional<std::string>& z_text,
                  std::optional<int> samples, bool check_mk) {
    const CatalogEntry entry = resolve_entry(ref);
    ctx.input = describe(entry, ref);
    const SeifertData& s = require_seifert(entry);
    if (z_text && samples) throw Error("--z and --samples are mutually exclusive");

    std::optional<MKForm> m;
    if (check_mk) m = mk_matrix(s);

    std::vector<std::pair<double, std::complex<double>>> points;
    if (z_text) {
        const std::complex<double> z = parse_z(*z_text);
        if (std::abs(std::abs(z) - 1.0) > 1e-9 || std::abs(z - 1.0) < 1e-12)
            throw Error("z = " + *z_text + " must lie on the unit circle and differ from 1");
        ctx.input["z"] = *z_text;
        points.emplace_back(std::arg(z), z);
    } else {
        const int count = samples.value_or(8);
        if (count < 1) throw Error("--samples must be at least 1");
        ctx.input["samples"] = count;
        for (const auto& sample : signature_profile(s, count))
            points.emplace_back(sample.angle, std::polar(1.0, sample.angle));
    }

    auto signature_or_marker = [&](auto&& compute, json& slot, double theta) -> std::optional<int> {
        try {
            const int value = compute();
            slot = value;
            return value;
        } catch (const Indeterminate&) {
            slot = "?";
            ctx.diagnostics.push_back("indeterminate at theta " + format_angle(theta));
            return std::nullopt;
        }
    };

    int code = kOk;
    std::string text;
    json rows = json::array();
    for (const auto& [theta, z] : points) {
        json row{{"theta", theta}};
        const auto lt = signature_or_marker([&] { return levine_tristram_signature(s, z); }, row["signature"], theta);
        std::string line = lt ? std::to_string(*lt) : "?";
        if (m) {
            const auto mk = signature_or_marker([&] { return mk_signature(*m, z); }, row["mk_signature"], theta);
            line += " " + (mk ? std::to_string(*mk) : std::string("?"));
            std::string verdict = "?";
            if (lt && mk) {
                verdict = *lt == *mk ? "OK" : "MISMATCH";
                if (*lt != *mk) code = kPropertyFailure;
            }
            line += " " + verdict;
            row["check"] = verdict;
        }
        if (!z_text) line = "theta:" + format_angle(theta) + "\t" + line;
        text += line + "\n";
        rows.push_back(row);
    }
    ctx.result["points"] = rows;
    return ctx.finish("signature", text, code);
}

std::string render_result(const PropertyResult& r) {
    std::string line = r.name + ": ";
    if (!r.detail.empty())
        line += r.detail;
    else if (r.vacuous)
        line += "PASS (vacuous)";
    else
        line += std::string(r.passed ? "PASS" : "FAIL") + " (" + std::to_string(r.checks) + " checks)";
    return line + "\n";
}

int cmd_verify(Context& ctx, const std::optional<std::string>& ref, const std::vector<int>& random, int trials,
               std::uint64_t seed) {
    if (ref.has_value() == !random.empty()) throw Error("give exactly one of an entry or --random g n");
    if (trials < 1) throw Error("--trials must be at least 1");

    Rng rng(seed);
    std::vector<CatalogEntry> entries;
    if (ref) {
        entries.push_back(resolve_entry(*ref));
        ctx.input = describe(entries.front(), *ref);
    } else {
        const int genus = random[0], count = random[1];
        if (genus < 0 || count < 0) throw Error("--random needs non-negative g and n");
        ctx.input["random"] = {{"genus", genus}, {"count", count}};
        for (int i = 0; i < count; ++i)
            entries.push_back({"random-" + std::to_string(i + 1), random_seifert(genus, 3, rng), ""});
    }
    ctx.input["trials"] = trials;
    ctx.input["seed"] = seed;

    bool all_passed = true;
    std::string text;
    json reports = json::array();
    for (const auto& entry : entries) {
        const auto results = verify_entry(entry, rng, trials);
        if (entries.size() > 1) text += "== " + entry.name + "\n";
        json props = json::array();
        for (const auto& r : results) {
            all_passed = all_passed && r.passed;
            text += render_result(r);
            if (!r.counterexample.empty()) {
                if (!r.passed) text += render_entry(entry);
                text += r.counterexample;
            }
            json p{{"name", r.name}, {"passed", r.passed}, {"vacuous", r.vacuous}, {"checks", r.checks}};
            if (!r.detail.empty()) p["detail"] = r.detail;
            if (!r.counterexample.empty()) p["counterexample"] = (r.passed ? "" : render_entry(entry)) + r.counterexample;
            props.push_back(p);
        }
        reports.push_back({{"name", entry.name}, {"properties", props}});
    }
    ctx.result["entries"] = reports;
    ctx.result["passed"] = all_passed;
    return ctx.finish("verify", text, all_passed ? kOk : kPropertyFailure);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    CLI::App app{"Blanchfield pairings, M_K(t), Alexander polynomials and signatures", "blanchfield"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "blanchfield 0.1.0");

    std::string ref;
    std::optional<std::string> opt_ref, v, w, z;
    std::optional<int> samples;
    bool check_mk = false;
    std::vector<int> random;
    int trials = 20;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool ref_required) {
        sub->add_flag("--json", ctx.as_json, "Emit JSON");
        if (ref_required)
            sub->add_option("entry", ref, "Entry file or built-in name")->required();
        else
            sub->add_option("entry", opt_ref, "Entry file or built-in name");
    };
    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial");
    add_common(alexander, true);
    auto* pairing = app.add_subcommand("pairing", "Blanchfield pairing values");
    add_common(pairing, true);
    pairing->add_option("--v", v, "First vector, comma-separated Laurent polynomials");
    pairing->add_option("--w", w, "Second vector");
    auto* mk = app.add_subcommand("mk", "Hermitian presentation matrix M_K(t)");
    add_common(mk, true);
    auto* signature = app.add_subcommand("signature", "Levine-Tristram signatures");
    add_common(signature, true);
    signature->add_option("--z", z, "Point on the unit circle: re+imi or theta:<radians>");
    signature->add_option("--samples", samples, "Sample count in (0, pi)");
    signature->add_flag("--check-mk", check_mk, "Compare with sign(M_K(z))");
    auto* verify = app.add_subcommand("verify", "Run the property checks");
    add_common(verify, false);
    verify->add_option("--random", random, "Random Seifert matrices: genus and count")->expected(2);
    verify->add_option("--trials", trials, "Random vectors per property");
    verify->add_option("--seed", seed, "Generator seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*alexander) return cmd_alexander(ctx, ref);
        if (*pairing) return cmd_pairing(ctx, ref, v, w);
        if (*mk) return cmd_mk(ctx, ref);
        if (*signature) return cmd_signature(ctx, ref, z, samples, check_mk);
        if (*verify) return cmd_verify(ctx, opt_ref, random, trials, seed);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.invariant() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace blanchfield::cli
