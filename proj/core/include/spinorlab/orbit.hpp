#ifndef SPINORLAB_ORBIT_HPP
#define SPINORLAB_ORBIT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinorlab/apolarity.hpp"
#include "spinorlab/group.hpp"
#include "spinorlab/isotropic.hpp"

namespace spinorlab {

/// Structural checks ruled the input out of the secant variety of lines (or
/// certificate verification failed). The converse direction is not claimed: a
/// throw is a certificate failure report, not a membership disproof.
class not_in_secant_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Pure | Sigma(l) | Theta(l); Theta(2) is the same orbit as Sigma(2) and is
/// normalized away at construction.
struct OrbitLabel {
    enum class Kind { pure, sigma, theta };
    Kind kind = Kind::pure;
    int l = 0;

    static OrbitLabel pure() { return {Kind::pure, 0}; }
    static OrbitLabel sigma(int l);
    static OrbitLabel theta(int l);

    std::string str() const;
    friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) {
        return a.kind == b.kind && a.l == b.l;
    }
    friend bool operator!=(const OrbitLabel& a, const OrbitLabel& b) { return !(a == b); }
};

/// Proof attached to a classification: for Sigma(l >= 3) the unordered pure
/// pair scaled so the two summands add up to the input exactly; for Theta(l)
/// the point of tangency. Sigma(2) carries no certificate here (witnesses come
/// from decompositions_sigma2). All pieces re-verify by independent rank checks.
struct Certificate {
    std::optional<std::pair<Spinor, Spinor>> pair;
    std::optional<Spinor> tangency;
};

struct Classification {
    OrbitLabel label;
    Certificate certificate;
};

Spinor representative(const OrbitLabel& label, int n);

/// representative twisted by a seeded random group element (k = twists).
Spinor sample_orbit(const OrbitLabel& label, int n, std::uint64_t seed, int twists);

/// Wedge factor removal: q = e_{[m]} ^ result, indices shifted down by m.
/// Every monomial of q must contain {1..m}.
Spinor factor_extract(const Spinor& q, int m);
/// Inverse lift: e_{[m]} ^ (indices shifted up by m).
Spinor wedge_prefix(const Spinor& q, int m);

/// Full orbit classification inside the secant variety of lines, with a
/// verified certificate. Throws not_in_secant_error when the structural
/// checks fail and unsupported_field_error when pure points would need a
/// field extension beyond degree 2.
Classification classify(const Spinor& q);

/// Affine tangent space of the cone over the Spinor variety at a pure point:
/// span of a and the degree-2 Clifford monomial images v_a . (v_b . a);
/// dimension n(n-1)/2 + 1.
std::vector<Spinor> tangent_cone_span(const Spinor& a);
bool is_tangent_at(const Spinor& q, const Spinor& a);

/// Projective dimension of the orbit through q: the degree-2 Clifford
/// monomials span the Lie algebra action modulo scalars, and q itself fills
/// the scalar direction, so this is dim span({q} u {v_a.(v_b.q)}) - 1.
int orbit_dimension(const Spinor& q);

struct ClosedFormDims {
    int n;
    long pure;        // n(n-1)/2
    long sigma2;      // n(n-1)/2 + 4n - 15
    long secant;      // n(n-1) + 1
    long tangential;  // n(n-1)
    long sigma_l(int l) const;
    long theta_l(int l) const;
    long of_label(const OrbitLabel& label) const;
};
ClosedFormDims closed_form_dims(int n);

struct TerraciniResult {
    bool deficient;
    int span_dim;  // dim of the joint affine tangent span
};
/// Deficient iff the two affine tangent spaces span less than
/// min(n(n-1)+2, 2^(n-1)).
TerraciniResult terracini_deficient(const Spinor& a, const Spinor& b);

/// Distinct verified decomposition pairs of a Sigma(2) point, each summing to
/// q exactly. May return fewer than asked when sampling misses; never silently
/// fabricates.
std::vector<std::pair<Spinor, Spinor>> decompositions_sigma2(const Spinor& q, int trials,
                                                             std::uint64_t seed);

/// All pure points on the projective line spanned by x and w (x assumed not
/// pure), found as roots of the stabilized gcd of random max-minors of the
/// pencil's psi matrix and verified exactly; `at_infinity` marks the point
/// [w], `mult` the vanishing order seen by the gcd.
struct PencilPoint {
    Spinor point;
    int mult;
    bool at_infinity;
};
std::vector<PencilPoint> pencil_pure_points(const Spinor& x, const Spinor& w, Rng& rng);

// deterministic sampling helpers
Mat random_skew(Rng& rng, int n, long lo, long hi);
Mat random_skew_of_rank(Rng& rng, int n, int rank);
IsotropicSubspace random_max_isotropic(Rng& rng, int n, bool twist);

}  // namespace spinorlab

#endif
