#include "spinorlab/documents.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace spinorlab {

namespace {

using nlohmann::json;

void check_n(int n, bool allow_large, const char* who) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": n must be even and at least 4");
    if (!allow_large && n > 12)
        throw std::invalid_argument(std::string(who) +
                                    ": n capped at 12 (pass allow-large to override)");
    if (n > 20) throw std::invalid_argument(std::string(who) + ": n beyond hard limit 20");
}

Scalar parse_rational_coef(const std::string& text, const char* who) {
    Scalar s = Scalar::parse(text);
    if (!s.is_rational())
        throw std::invalid_argument(std::string(who) + ": interchange files are rational-only");
    return s;
}

}  // namespace

SpinorDocument SpinorDocument::from_spinor(const Spinor& s) {
    SpinorDocument doc;
    doc.n = s.n();
    for (const auto& [mask, c] : s.terms()) {
        if (!c.is_rational())
            throw std::invalid_argument("SpinorDocument: extension scalars are not serializable");
        doc.terms.push_back({set_indices(mask), c.rat().get_str()});
    }
    return doc;
}

Spinor SpinorDocument::to_spinor(bool allow_large) const {
    check_n(n, allow_large, "SpinorDocument");
    Spinor s(n);
    std::set<IndexMask> seen;
    for (const auto& term : terms) {
        IndexMask mask = 0;
        int prev = 0;
        for (int i : term.indices) {
            if (i <= prev || i > n)
                throw std::invalid_argument(
                    "SpinorDocument: indices must be strictly increasing and within [1, n]");
            mask |= IndexMask{1} << (i - 1);
            prev = i;
        }
        if (!set_even(mask))
            throw std::invalid_argument("SpinorDocument: index sets must have even cardinality");
        if (!seen.insert(mask).second)
            throw std::invalid_argument("SpinorDocument: duplicate index set");
        s.add_coeff(mask, parse_rational_coef(term.coef, "SpinorDocument"));
    }
    return s;
}

SpinorDocument SpinorDocument::parse_json(const std::string& text) {
    json j = json::parse(text);
    SpinorDocument doc;
    doc.n = j.at("n").get<int>();
    for (const auto& term : j.at("terms")) {
        SpinorDocument::Term t;
        t.indices = term.at("indices").get<std::vector<int>>();
        t.coef = term.at("coef").get<std::string>();
        doc.terms.push_back(std::move(t));
    }
    return doc;
}

std::string SpinorDocument::to_json() const {
    json j;
    j["n"] = n;
    j["terms"] = json::array();
    for (const auto& term : terms) j["terms"].push_back({{"indices", term.indices}, {"coef", term.coef}});
    return j.dump(2) + "\n";
}

SubspaceDocument SubspaceDocument::from_subspace(const IsotropicSubspace& h) {
    SubspaceDocument doc;
    doc.n = h.n();
    for (int i = 0; i < h.dim(); ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < 2 * h.n(); ++j) {
            const Scalar& c = h.rows().at(i, j);
            if (!c.is_rational())
                throw std::invalid_argument(
                    "SubspaceDocument: extension scalars are not serializable");
            row.push_back(c.rat().get_str());
        }
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

IsotropicSubspace SubspaceDocument::to_subspace(bool allow_large) const {
    check_n(n, allow_large, "SubspaceDocument");
    Mat m(0, 2 * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != 2 * n)
            throw std::invalid_argument("SubspaceDocument: each row needs 2n coordinates");
        std::vector<Scalar> r;
        r.reserve(row.size());
        for (const auto& entry : row) r.push_back(parse_rational_coef(entry, "SubspaceDocument"));
        m.append_row(r);
    }
    return IsotropicSubspace(n, m);  // validates independence and isotropy
}

SubspaceDocument SubspaceDocument::parse_json(const std::string& text) {
    json j = json::parse(text);
    SubspaceDocument doc;
    doc.n = j.at("n").get<int>();
    doc.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return doc;
}

std::string SubspaceDocument::to_json() const {
    json j;
    j["n"] = n;
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string render_report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << " (n=" << report.n << ", seed=" << report.seed << ")\n";
    for (const auto& claim : report.claims) {
        os << "  [" << (claim.pass ? "pass" : "FAIL") << "] " << claim.id << ": "
           << claim.statement << "\n         measured: " << claim.measured << "\n";
    }
    os << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

json report_to_json(const VerificationReport& report) {
    json j;
    j["suite"] = report.suite;
    j["n"] = report.n;
    j["seed"] = report.seed;
    j["claims"] = json::array();
    for (const auto& claim : report.claims) {
        j["claims"].push_back({{"id", claim.id},
                               {"statement", claim.statement},
                               {"status", claim.pass ? "pass" : "fail"},
                               {"measured", claim.measured}});
    }
    j["all_pass"] = report.all_pass();
    return j;
}

}  // namespace

std::string render_report_json(const VerificationReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string render_reports_json(const std::vector<VerificationReport>& reports) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    return j.dump(2) + "\n";
}

}  // namespace spinorlab
