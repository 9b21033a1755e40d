#pragma once

#include <string>

#include "prequant/alcove.hpp"
#include "prequant/catalog.hpp"

namespace prequant {

struct Style {
    bool ascii = false;  // "(x)" instead of the tensor sign

    const char* tensor() const { return ascii ? " (x) " : "⊗"; }
};

// Monomials print as generator names joined by '*' with '^e' powers; the unit
// prints as '1'.
std::string format_monomial(const Presentation& pres, const Monomial& m);

// Coefficients print balanced: at odd p, residues above p/2 print as negatives
// (so 2 mod 3 renders as '-').
std::string format_element(const Presentation& pres, const Element& e, const Style& style = {});
std::string format_tensor(const Presentation& pres, const TensorElement& e,
                          const Style& style = {});

std::string format_cartan(const CartanPoint& x);

const char* provenance_name(Provenance p);

std::string format_l0_text(const L0Result& r);
std::string format_l0_json(const L0Result& r);

std::string format_table_text(const std::vector<L0Result>& rows);
std::string format_table_json(int n_max, const std::vector<L0Result>& rows);

std::string verdict_name(MarkedVerdict::Kind k);

}  // namespace prequant
