#pragma once

#include <map>
#include <string>
#include <vector>

#include "prequant/element.hpp"

namespace prequant {

// Reduced coproducts per generator; the full coproduct of a generator x is
// x(x)1 + 1(x)x + table entry.
using CoproductTable = std::map<int, TensorElement>;

// A presentation together with its Hopf structure maps. The antipode cache is
// the only mutable state and fills idempotently.
class HopfAlgebra {
public:
    HopfAlgebra(Presentation pres, CoproductTable reduced);

    const Presentation& pres() const { return pres_; }

    // Full coproduct of a single generator.
    TensorElement coproduct_generator(int i) const;

    // Algebra-map extension to monomials and linear extension to elements.
    TensorElement coproduct(const Monomial& m) const;
    TensorElement coproduct(const Element& e) const;

    // Coproduct applied to one tensor leg (arity grows by one).
    TensorElement coproduct_leg(const TensorElement& e, int leg) const;

    // Reduced coproduct of an element.
    TensorElement reduced_coproduct(const Element& e) const;

    bool is_primitive(const Element& e) const;

    // c* by recursion on degree: primitives map to -x, otherwise
    // c*(x) = -x - sum x' . c*(x'') over the reduced coproduct.
    Element antipode(const Monomial& m) const;
    Element antipode(const Element& e) const;

    // The commutator pullback, evaluated as the composition
    //   (Delta x Delta)* (1 x T x 1)* (1 x 1 x c x c)* (mu x mu)* mu*
    // right to left, returning an arity-2 tensor.
    TensorElement phi_star(const Element& e) const;

private:
    Presentation pres_;
    CoproductTable reduced_;
    mutable std::map<Monomial, Element> antipode_cache_;
};

struct AxiomCheck {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    std::vector<std::string> failing;  // a few printable witnesses
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const
    {
        for (const auto& c : checks)
            if (c.failures)
                return false;
        return true;
    }
};

// Coassociativity, counit, antipode axiom, antipode involution, and
// algebra-map consistency over every basis element of degree <= max_degree.
AxiomReport verify_axioms(const HopfAlgebra& h, int max_degree);

}  // namespace prequant
