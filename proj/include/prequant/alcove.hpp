#pragma once

#include <vector>

#include "prequant/rational.hpp"

namespace prequant {

// A point of the trace-zero hyperplane in Q^n (the Cartan algebra of su(n)).
using CartanPoint = std::vector<Rat>;

void check_cartan(const CartanPoint& x);  // coordinate sum must vanish exactly

struct AlcoveData {
    int n = 0;
    std::vector<CartanPoint> vertices;  // v_0 .. v_{n-1}
    CartanPoint barycenter;
};

// Vertices of the fundamental alcove of su(n) and its barycenter.
AlcoveData alcove_vertices(int n);

// Alcove membership: x_i >= x_{i+1} and x_1 - x_n <= 1.
bool in_alcove(const CartanPoint& x);

// The unique representative of x in the alcove under the extended affine Weyl
// action: sort coordinates descending, translate by the co-root e_n - e_1
// while x_1 - x_n > 1, repeat.
CartanPoint alcove_reduce(int n, CartanPoint x);

// Action of the center residue j on an alcove point: reduce(x + j v_1).
CartanPoint center_action(int n, int j, const CartanPoint& x);

// Co-root lattice of A_{n-1}: integer coordinates summing to zero.
bool is_coroot_lattice(const CartanPoint& x);

// Pairing with the simple co-root e_i - e_{i+1} (the basic inner product is
// the standard dot product here).
Rat simple_pairing(const CartanPoint& x, int i);

// Level-k pre-quantization test for the conjugacy class of exp(zeta):
// B(k zeta, e_i - e_{i+1}) integral for all i. Throws NotInAlcove.
bool conjclass_preq_check(int n, const CartanPoint& zeta, long long k);

struct MarkedVerdict {
    enum class Kind { Yes, No, NecessaryMetSufficiencyOpen };
    Kind kind = Kind::Yes;
    std::vector<std::string> reasons;
};

// Marked-point pre-quantization verdict for a product of conjugacy classes in
// the adjoint group: non-barycenter factors split off and are tested
// individually; the all-barycenter core follows the parity of n.
MarkedVerdict marked_points_check(int n, long long k, const std::vector<CartanPoint>& classes);

}  // namespace prequant
