#ifndef SPINORLAB_DOCUMENTS_HPP
#define SPINORLAB_DOCUMENTS_HPP

#include <string>

#include "spinorlab/isotropic.hpp"
#include "spinorlab/spinor.hpp"
#include "spinorlab/verifier.hpp"

namespace spinorlab {

/// Interchange format for spinors: exact rational coefficients as "p/q"
/// strings, index sets as ascending even-cardinality lists. n is capped at 12
/// by default (ambient dimension 2048); allow_large lifts the cap.
struct SpinorDocument {
    int n = 0;
    struct Term {
        std::vector<int> indices;
        std::string coef;
    };
    std::vector<Term> terms;

    static SpinorDocument from_spinor(const Spinor& s);
    Spinor to_spinor(bool allow_large = false) const;

    static SpinorDocument parse_json(const std::string& text);
    std::string to_json() const;
};

/// Row basis of an isotropic subspace: each row holds 2n rational strings,
/// e-coordinates then f-coordinates. Independence and isotropy are checked on
/// load.
struct SubspaceDocument {
    int n = 0;
    std::vector<std::vector<std::string>> rows;

    static SubspaceDocument from_subspace(const IsotropicSubspace& h);
    IsotropicSubspace to_subspace(bool allow_large = false) const;

    static SubspaceDocument parse_json(const std::string& text);
    std::string to_json() const;
};

/// Plain-text and JSON renderings of a verification report. Deterministic for
/// a fixed seed: no timing data is included (the CLI prints timing to stderr).
std::string render_report_text(const VerificationReport& report);
std::string render_report_json(const VerificationReport& report);
std::string render_reports_json(const std::vector<VerificationReport>& reports);

}  // namespace spinorlab

#endif
