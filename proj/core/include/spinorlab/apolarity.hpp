#ifndef SPINORLAB_APOLARITY_HPP
#define SPINORLAB_APOLARITY_HPP

#include "spinorlab/matrix.hpp"
#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// Matrix of the apolarity operator attached to an even spinor q: columns are
/// indexed by the odd basis monomials f_I (ascending bitmask), rows by the 2n
/// output coordinates (e_1..e_n then f_1..f_n). The column at f_I is the
/// unique u in V with P(v, u) = <f_I, v.q> for every v; explicitly the
/// e_i-row holds <f_I, f_i.q> and the f_j-row holds <f_I, e_j.q>.
Mat apolarity_matrix(const Spinor& q);

/// The vector u characterized by P(v, u) = <f, v.q> for all v; bilinear in
/// (q, f).
Vector phi_apply(const Spinor& q, const Spinor& f);

/// Kernel of the apolarity operator as cospinors (coefficients on the dual
/// monomials f_I), and its rank; rank + kernel dim = 2^(n-1).
std::vector<Spinor> ker_phi(const Spinor& q);
int rank_phi(const Spinor& q);

/// The linear span L_q = { a even : <f, v.a> = 0 for all f in ker_phi(q) and
/// all basis v }; cut out by the kernel of the operator, it always contains q
/// and carries the decomposition or tangency points of q.
std::vector<Spinor> annihilator_span(const Spinor& q);

}  // namespace spinorlab

#endif
