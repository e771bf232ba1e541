#ifndef SPINORLAB_GROUP_HPP
#define SPINORLAB_GROUP_HPP

#include "spinorlab/isotropic.hpp"
#include "spinorlab/rng.hpp"
#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// Spin-group element as an even-length Clifford product of anisotropic
/// vectors v_1 ... v_2k; the action is projective, so the spinor norm is
/// never normalized to 1 (that would need square roots).
class GroupElement {
  public:
    GroupElement() = default;  // empty product: the identity
    explicit GroupElement(std::vector<Vector> factors);

    int n() const;
    bool is_identity() const { return factors_.empty(); }
    const std::vector<Vector>& factors() const { return factors_; }

    /// Product of the q(v_i); nonzero by construction.
    Scalar spinor_norm() const;
    /// Reversed factor list: acts as the inverse up to the spinor norm.
    GroupElement reversed() const;

  private:
    std::vector<Vector> factors_;
};

/// 2k anisotropic vectors with small integer entries.
GroupElement random_group_element(Rng& rng, int n, int k);

/// Clifford action on a spinor, rightmost factor first.
Spinor group_apply(const GroupElement& g, const Spinor& x);

/// Conjugation v -> g v g^{-1} in SO(V, q), realized reflection by reflection
/// through rho_w(u) = (P(u,w)/q(w)) w - u, rightmost factor first.
Vector conjugate(const GroupElement& g, const Vector& v);
IsotropicSubspace conjugate(const GroupElement& g, const IsotropicSubspace& h);

/// Spin lift of an isometry moving H onto span(e_1, .., e_k): a constructive
/// Witt extension plus a Cartan-Dieudonne factorization into an even number
/// of reflections. Maximal subspaces of the odd component are rejected.
GroupElement witt_standardize(const IsotropicSubspace& h);

}  // namespace spinorlab

#endif
