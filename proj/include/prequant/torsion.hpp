#pragma once

#include <map>
#include <optional>

#include "prequant/element.hpp"

namespace prequant {

// Bockstein differentials as catalog data: per height r, the image of each
// covered generator. A generator without an entry at some height leaves the
// differential undefined there.
struct BocksteinRules {
    // height -> generator index -> image (degree + 1)
    std::map<int, std::map<int, Element>> by_height;

    int max_height() const { return by_height.empty() ? 0 : by_height.rbegin()->first; }
};

// Height-1 extension as a graded derivation over both the algebra and tensor
// products; heights >= 2 extend over tensors of single generators on which all
// lower differentials vanish. Returns nullopt where the rules do not determine
// the value.
std::optional<Element> bockstein_try(const Presentation& pres, const BocksteinRules& rules,
                                     const Element& e, int r);
std::optional<TensorElement> bockstein_try(const Presentation& pres, const BocksteinRules& rules,
                                           const TensorElement& e, int r);

// Same, but throws NotDefined.
TensorElement bockstein_apply(const Presentation& pres, const BocksteinRules& rules,
                              const TensorElement& e, int r);

struct IntegralOrderResult {
    long long order = 1;   // p^height
    int height = 0;
    TensorElement witness;  // degree d-1 class with beta^(height)(witness) = target
};

// Minimal height r and witness w over the degree-(d-1) tensor basis with
// beta^(r)(w) = target and all lower differentials vanishing on w; plain
// linear algebra over Z_p at each height. Throws NotHit when no witness
// exists within the rule set up to r_max.
IntegralOrderResult integral_order(const Presentation& pres, const BocksteinRules& rules,
                                   const TensorElement& target, int r_max);

// |Tor(Z_a, Z_b)| = gcd(a, b).
long long tor_cyclic(long long a, long long b);

// Order of n/k in Z_k: the image of a Tor(Z_n,Z_n) generator under the map
// induced by SU(n)/Z_k -> PU(n). Throws DomainError unless k | n.
long long tor_pushforward_order(long long n, long long k);

// CRT reassembly: least common multiple of per-prime orders p^{r_p}.
long long assemble_l0(const std::map<long long, long long>& per_prime);

}  // namespace prequant
