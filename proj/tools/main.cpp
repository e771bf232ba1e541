// spinorlab: exact computations in the secant geometry of spinor varieties.
//
// Exit codes: 0 success; 1 malformed input or flags; 2 mathematically invalid
// request (non-pure input, point outside the secant variety, odd component);
// 3 verification failure or internal assertion.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "spinorlab/documents.hpp"
#include "spinorlab/orbit.hpp"
#include "spinorlab/verifier.hpp"

using namespace spinorlab;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

Spinor load_spinor(const std::string& path, bool allow_large) {
    return SpinorDocument::parse_json(read_file(path)).to_spinor(allow_large);
}

OrbitLabel parse_orbit(const std::string& text) {
    if (text == "pure") return OrbitLabel::pure();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        int l = std::stoi(text.substr(colon + 1));
        std::string kind = text.substr(0, colon);
        if (kind == "sigma") return OrbitLabel::sigma(l);
        if (kind == "theta") return OrbitLabel::theta(l);
    }
    throw std::invalid_argument("orbit must be pure, sigma:L or theta:L");
}

nlohmann::json spinor_to_json(const Spinor& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, c] : s.terms())
        terms.push_back({{"indices", set_indices(mask)}, {"coef", c.str()}});
    return {{"n", s.n()}, {"terms", terms}};
}

void print_spinor(std::ostream& os, const Spinor& s) { os << s.str() << "\n"; }

int run_classify(const std::string& path, bool as_json, bool allow_large) {
    Spinor q = load_spinor(path, allow_large);
    Classification cls = classify(q);
    if (as_json) {
        nlohmann::json j;
        j["label"] = cls.label.str();
        if (cls.certificate.pair) {
            j["certificate"]["pair"] = {spinor_to_json(cls.certificate.pair->first),
                                        spinor_to_json(cls.certificate.pair->second)};
        }
        if (cls.certificate.tangency)
            j["certificate"]["tangency"] = spinor_to_json(*cls.certificate.tangency);
        if (cls.label == OrbitLabel::sigma(2))
            j["note"] = "Sigma(2) points are unidentifiable; use `decompose` for witnesses";
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "label: " << cls.label.str() << "\n";
    if (cls.certificate.pair) {
        std::cout << "decomposition (sums to the input exactly):\n";
        std::cout << "  ";
        print_spinor(std::cout, cls.certificate.pair->first);
        std::cout << "  ";
        print_spinor(std::cout, cls.certificate.pair->second);
    }
    if (cls.certificate.tangency) {
        std::cout << "tangency point:\n  ";
        print_spinor(std::cout, *cls.certificate.tangency);
    }
    if (cls.label == OrbitLabel::sigma(2))
        std::cout << "note: Sigma(2) points are unidentifiable; use `decompose` for witnesses\n";
    return 0;
}

int run_verify(int n, const std::string& suite, std::uint64_t seed, bool as_json) {
    std::vector<std::string> selected;
    if (suite == "all")
        selected = suite_names();
    else
        selected.push_back(suite);

    std::vector<VerificationReport> reports(selected.size());
    long max_workers = static_cast<long>(selected.size());
    if (const char* env = std::getenv("SPINORLAB_THREADS")) {
        long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) max_workers = std::min(max_workers, parsed);
    }
    if (max_workers <= 1 || selected.size() == 1) {
        for (size_t i = 0; i < selected.size(); ++i) reports[i] = run_suite(selected[i], n, seed);
    } else {
        // suites are pure functions of (name, n, seed): fan out freely, print
        // in the fixed canonical order afterwards
        std::vector<std::future<VerificationReport>> futures;
        for (const auto& name : selected)
            futures.push_back(
                std::async(std::launch::async, [&, name] { return run_suite(name, n, seed); }));
        for (size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
    }

    double total = 0.0;
    bool all_pass = true;
    for (const auto& r : reports) {
        total += r.seconds;
        all_pass = all_pass && r.all_pass();
    }
    if (as_json) {
        std::cout << (reports.size() == 1 ? render_report_json(reports[0])
                                          : render_reports_json(reports));
    } else {
        for (const auto& r : reports) std::cout << render_report_text(r);
        std::cout << (all_pass ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
    }
    std::cerr << "verify wall clock: " << total << "s\n";
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact secant-variety geometry of spinor varieties"};
    app.require_subcommand(1);
    bool allow_large = false;
    app.add_flag("--allow-large", allow_large,
                 "lift the n <= 12 cap (rank computations grow as 4^n)");

    auto* c_classify = app.add_subcommand("classify", "orbit label and certificate of a spinor");
    std::string in_path, out_path, a_path, b_path;
    bool as_json = false;
    c_classify->add_option("--in", in_path, "spinor document")->required();
    c_classify->add_flag("--json", as_json, "machine-readable output");

    auto* c_sample = app.add_subcommand("sample", "write a seeded random orbit sample");
    int n = 6;
    std::string orbit_text = "sigma:2";
    std::uint64_t seed = 0;
    int twists = 4;
    c_sample->add_option("--n", n, "even n, 4..12")->required();
    c_sample->add_option("--orbit", orbit_text, "pure | sigma:L | theta:L")->required();
    c_sample->add_option("--seed", seed, "sampling seed")->required();
    c_sample->add_option("--twists", twists, "number of group twists (default 4)");
    c_sample->add_option("--out", out_path, "output spinor document")->required();

    auto* c_distance = app.add_subcommand("distance", "Hamming distance of two pure spinors");
    c_distance->add_option("--a", a_path)->required();
    c_distance->add_option("--b", b_path)->required();

    auto* c_decompose = app.add_subcommand("decompose", "decompositions or tangency witness");
    int trials = 25;
    c_decompose->add_option("--in", in_path, "spinor document")->required();
    c_decompose->add_option("--trials", trials, "Sigma(2) sampling trials (default 25)");
    c_decompose->add_option("--seed", seed, "Sigma(2) sampling seed");

    auto* c_dims = app.add_subcommand("dims", "closed-form orbit dimension table");
    bool do_verify = false;
    c_dims->add_option("--n", n)->required();
    c_dims->add_flag("--verify", do_verify, "also measure dimensions on representatives");

    auto* c_terracini = app.add_subcommand("terracini", "joint tangent-span deficiency");
    c_terracini->add_option("--a", a_path)->required();
    c_terracini->add_option("--b", b_path)->required();

    auto* c_pfs = app.add_subcommand("pure-from-subspace",
                                     "pure spinor annihilated by a maximal isotropic subspace");
    c_pfs->add_option("--in", in_path, "subspace document")->required();
    c_pfs->add_option("--out", out_path, "output spinor document")->required();

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    c_verify->add_option("--n", n)->required();
    c_verify
        ->add_option("--suite", suite,
                     "poset | dims | identifiability | distance-rank | terracini | evidence | all")
        ->required();
    c_verify->add_option("--seed", seed)->required();
    c_verify->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return run_classify(in_path, as_json, allow_large);
        if (c_sample->parsed()) {
            OrbitLabel label = parse_orbit(orbit_text);
            if (n < 4 || n % 2 != 0 || (!allow_large && n > 12))
                throw std::invalid_argument("sample: n must be even, between 4 and 12");
            Spinor q = sample_orbit(label, n, seed, twists);
            write_file(out_path, SpinorDocument::from_spinor(q).to_json());
            std::cout << "wrote " << label.str() << " sample (n=" << n << ", seed=" << seed
                      << ", twists=" << twists << ") to " << out_path << "\n";
            return 0;
        }
        if (c_distance->parsed()) {
            Spinor a = load_spinor(a_path, allow_large);
            Spinor b = load_spinor(b_path, allow_large);
            std::cout << hamming_distance(a, b) << "\n";
            return 0;
        }
        if (c_decompose->parsed()) {
            Spinor q = load_spinor(in_path, allow_large);
            Classification cls = classify(q);
            std::cout << "label: " << cls.label.str() << "\n";
            if (cls.label == OrbitLabel::sigma(2)) {
                auto pairs = decompositions_sigma2(q, trials, seed);
                std::cout << "distinct decompositions found: " << pairs.size() << "\n";
                if (pairs.size() < 2)
                    std::cout << "warning: fewer than 2 decompositions within " << trials
                              << " trials\n";
                for (const auto& [a, b] : pairs) {
                    std::cout << "  pair:\n    " << a.str() << "\n    " << b.str() << "\n";
                }
            } else if (cls.certificate.pair) {
                std::cout << "unique decomposition:\n  " << cls.certificate.pair->first.str()
                          << "\n  " << cls.certificate.pair->second.str() << "\n";
            } else if (cls.certificate.tangency) {
                std::cout << "unique tangency point:\n  " << cls.certificate.tangency->str()
                          << "\n";
            } else {
                std::cout << "point lies on the variety; nothing to decompose\n";
            }
            return 0;
        }
        if (c_dims->parsed()) {
            ClosedFormDims table = closed_form_dims(n);
            std::cout << "orbit dimensions for n = " << n << "\n";
            std::cout << "  Pure        " << table.pure << "\n";
            std::cout << "  Sigma(2)    " << table.sigma2 << "\n";
            for (int l = 3; 2 * l <= n; ++l) {
                std::cout << "  Theta(" << l << ")    " << table.theta_l(l) << "\n";
                std::cout << "  Sigma(" << l << ")    " << table.sigma_l(l) << "\n";
            }
            std::cout << "  secant      " << table.secant << "\n";
            std::cout << "  tangential  " << table.tangential << "\n";
            if (do_verify) {
                bool all = true;
                std::vector<OrbitLabel> labels = {OrbitLabel::pure(), OrbitLabel::sigma(2)};
                for (int l = 3; 2 * l <= n; ++l) {
                    labels.push_back(OrbitLabel::theta(l));
                    labels.push_back(OrbitLabel::sigma(l));
                }
                for (const auto& label : labels) {
                    int measured = orbit_dimension(representative(label, n));
                    bool match = (measured == table.of_label(label));
                    all = all && match;
                    std::cout << "  measured " << label.str() << " = " << measured
                              << (match ? "  [match]" : "  [MISMATCH]") << "\n";
                }
                if (!all) return 3;
            }
            return 0;
        }
        if (c_terracini->parsed()) {
            Spinor a = load_spinor(a_path, allow_large);
            Spinor b = load_spinor(b_path, allow_large);
            TerraciniResult r = terracini_deficient(a, b);
            std::cout << "deficient: " << (r.deficient ? "yes" : "no") << "\n";
            std::cout << "joint tangent span dimension: " << r.span_dim << "\n";
            return 0;
        }
        if (c_pfs->parsed()) {
            IsotropicSubspace h =
                SubspaceDocument::parse_json(read_file(in_path)).to_subspace(allow_large);
            Spinor a = pure_from_subspace(h);
            write_file(out_path, SpinorDocument::from_spinor(a).to_json());
            std::cout << "wrote pure spinor to " << out_path << "\n";
            return 0;
        }
        if (c_verify->parsed()) {
            if (suite != "all") {
                const auto& names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end())
                    throw CLI::ValidationError("--suite", "unknown suite: " + suite);
            }
            return run_verify(n, suite, seed, as_json);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const not_in_secant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "note: the structural checks are certificate-based; a rejection is not a "
                     "proof of non-membership\n";
        return 2;
    } catch (const unsupported_field_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed document: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
