#ifndef SPINORLAB_VERIFIER_HPP
#define SPINORLAB_VERIFIER_HPP

#include <string>

#include "spinorlab/orbit.hpp"
#include "spinorlab/unipoly.hpp"

namespace spinorlab {

struct ClaimResult {
    std::string id;         // stable claim identifier
    std::string statement;  // self-contained mathematical statement of the claim
    bool pass = false;
    std::string measured;  // what was actually computed
};

struct VerificationReport {
    std::string suite;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<ClaimResult> claims;
    double seconds = 0.0;  // wall clock; kept out of the serialized report

    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
};

/// One-parameter polynomial families realizing the closure degenerations:
/// evaluating at generic t lands in the big orbit, t = 0 in the small one.
enum class FamilyKind { sigma_down, theta_down, sigma_to_theta };

/// sigma_down(l):    e_[n] + (e_[n-2l+2] + t e_[n-2l])   Sigma(l) -> Sigma(l-1)
/// theta_down(l):    q_{l-1} + t e_{2l-1}^e_{2l}         Theta(l) -> Theta(l-1)
/// sigma_to_theta(l): the difference quotient of the Pfaffian-chart curve of
///                    the rank-2l block matrix, q_l + t (...)  Sigma(l) -> Theta(l)
UniPolySpinor degeneration_family(FamilyKind kind, int n, int l);

ClaimResult verify_inclusion(FamilyKind kind, int n, int l, const OrbitLabel& big,
                             const OrbitLabel& small, int t_samples, Rng& rng);

VerificationReport verify_poset(int n, std::uint64_t seed);
VerificationReport verify_identifiability(int n, std::uint64_t seed, int trials);
VerificationReport verify_dimensions(int n, std::uint64_t seed);
VerificationReport verify_distance_rank(int n, int trials, std::uint64_t seed);
VerificationReport verify_terracini(int n, std::uint64_t seed);
VerificationReport singularity_evidence(int n);

/// All suite names in canonical output order.
const std::vector<std::string>& suite_names();
/// Dispatch by name; throws std::invalid_argument on unknown suites.
VerificationReport run_suite(const std::string& name, int n, std::uint64_t seed);

}  // namespace spinorlab

#endif
