#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "prequant/presentation.hpp"

namespace prequant {

// A normal-form linear combination of monomials with nonzero mod-p
// coefficients, keyed in canonical (sorted) monomial order.
struct Element {
    std::map<Monomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Element& o) const { return terms == o.terms; }
    bool operator!=(const Element& o) const { return terms != o.terms; }
};

// m-fold tensors (m in {1, 2, 4} for the pipeline; any m >= 1 works).
using TensorMonomial = std::vector<Monomial>;

struct TensorElement {
    int arity = 1;
    std::map<TensorMonomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const TensorElement& o) const { return arity == o.arity && terms == o.terms; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }
};

using Word = std::vector<std::pair<int, int>>;  // (generator index, exponent)

Element zero_element();
Element unit_element(const Presentation& pres);
Element make_element(const Presentation& pres, const Monomial& m, Scalar c = 1);
Element generator_element(const Presentation& pres, int i);
Element generator_element(const Presentation& pres, const std::string& name);

void add_term(Element& e, const Monomial& m, Scalar c, Scalar p);
Element add(const Element& a, const Element& b, Scalar p);
Element scale(const Element& a, Scalar c, Scalar p);
Element negate(const Element& a, Scalar p);

// Degree of a homogeneous element (throws InternalError when mixed; 0 for 0).
int degree(const Presentation& pres, const Element& e);
int degree(const Presentation& pres, const TensorMonomial& t);
int degree(const Presentation& pres, const TensorElement& e);

// Canonical form of a word of generator powers: sorts generators into
// declaration order accumulating Koszul signs, then applies the exterior,
// truncation, and square-linked rewrites to a fixed point. Signs vanish
// when p = 2.
Element normal_form(const Presentation& pres, const Word& word);

// Product of two normal-form monomials: (sign, monomial), or nullopt when
// the product is zero. Throws DegreeCapExceeded past the cap.
std::optional<std::pair<int, Monomial>> monomial_mul(const Presentation& pres, const Monomial& a,
                                                     const Monomial& b);

Element mul(const Presentation& pres, const Element& a, const Element& b);
Element power(const Presentation& pres, const Element& a, int e);

TensorElement tensor_lift(const Element& e);                      // arity 1
Element tensor_collapse(const TensorElement& e);                   // arity 1 only
TensorElement tensor_unit(const Presentation& pres, int arity);
TensorElement make_tensor(const Presentation& pres, const TensorMonomial& t, Scalar c = 1);

void add_term(TensorElement& e, const TensorMonomial& t, Scalar c, Scalar p);
TensorElement add(const TensorElement& a, const TensorElement& b, Scalar p);
TensorElement scale(const TensorElement& a, Scalar c, Scalar p);

// Factorwise product with the Koszul crossing sign.
TensorElement tensor_mul(const Presentation& pres, const TensorElement& a, const TensorElement& b);

// Concatenation a (x) b of tensor factors (the Kunneth identification); no
// sign is involved.
TensorElement tensor_concat(const TensorElement& a, const TensorElement& b, Scalar p);

// Swap adjacent tensor factors i, i+1 with sign (-1)^{|u||v|}.
TensorElement koszul_swap(const Presentation& pres, const TensorElement& e, int i);

// Pointwise application of an Element-valued map to one tensor leg.
template <typename F>
TensorElement map_leg(const Presentation& pres, const TensorElement& e, int leg, F&& f)
{
    TensorElement out;
    out.arity = e.arity;
    Scalar p = pres.prime();
    for (const auto& [t, c] : e.terms) {
        Element img = f(t[static_cast<size_t>(leg)]);
        for (const auto& [m, cm] : img.terms) {
            TensorMonomial nt = t;
            nt[static_cast<size_t>(leg)] = m;
            add_term(out, nt, mod_mul(c, cm, p), p);
        }
    }
    return out;
}

}  // namespace prequant
