#include "prequant/hopf.hpp"

namespace prequant {

HopfAlgebra::HopfAlgebra(Presentation pres, CoproductTable reduced)
    : pres_(std::move(pres)), reduced_(std::move(reduced))
{
    for (auto& [gen, t] : reduced_) {
        if (gen < 0 || gen >= pres_.num_generators())
            throw InternalError("coproduct table references an unknown generator");
        if (t.terms.empty()) {
            t.arity = 2;
            continue;
        }
        if (t.arity != 2)
            throw InternalError("reduced coproduct must have arity 2");
        int d = pres_.generator(gen).degree;
        for (const auto& [tm, c] : t.terms) {
            int dl = pres_.degree(tm[0]), dr = pres_.degree(tm[1]);
            if (dl + dr != d)
                throw InternalError("reduced coproduct of " + pres_.generator(gen).name +
                                    " is not homogeneous");
            if (dl == 0 || dr == 0)
                throw InternalError("reduced coproduct of " + pres_.generator(gen).name +
                                    " has a degree-zero leg");
        }
    }
}

TensorElement HopfAlgebra::coproduct_generator(int i) const
{
    Scalar p = pres_.prime();
    Monomial g = pres_.generator_monomial(i);
    TensorElement out;
    out.arity = 2;
    add_term(out, TensorMonomial{g, pres_.unit()}, 1, p);
    add_term(out, TensorMonomial{pres_.unit(), g}, 1, p);
    auto it = reduced_.find(i);
    if (it != reduced_.end())
        out = add(out, it->second, p);
    return out;
}

TensorElement HopfAlgebra::coproduct(const Monomial& m) const
{
    TensorElement out = tensor_unit(pres_, 2);
    for (int i = 0; i < pres_.num_generators(); ++i) {
        int e = m[static_cast<size_t>(i)];
        if (e == 0)
            continue;
        // Degree-1 generators are primitive for degree reasons; anything else
        // needs a table entry (an explicitly empty one marks a primitive).
        if (reduced_.find(i) == reduced_.end() && pres_.generator(i).degree > 1)
            throw DomainError("missing coproduct table entry for generator " +
                              pres_.generator(i).name);
        TensorElement dg = coproduct_generator(i);
        for (int k = 0; k < e; ++k)
            out = tensor_mul(pres_, out, dg);
    }
    return out;
}

TensorElement HopfAlgebra::coproduct(const Element& e) const
{
    Scalar p = pres_.prime();
    TensorElement out;
    out.arity = 2;
    for (const auto& [m, c] : e.terms)
        out = add(out, scale(coproduct(m), c, p), p);
    return out;
}

TensorElement HopfAlgebra::coproduct_leg(const TensorElement& e, int leg) const
{
    if (leg < 0 || leg >= e.arity)
        throw InternalError("coproduct_leg out of range");
    Scalar p = pres_.prime();
    TensorElement out;
    out.arity = e.arity + 1;
    for (const auto& [t, c] : e.terms) {
        TensorElement dm = coproduct(t[static_cast<size_t>(leg)]);
        for (const auto& [dt, dc] : dm.terms) {
            TensorMonomial nt;
            nt.reserve(static_cast<size_t>(e.arity) + 1);
            for (int i = 0; i < e.arity; ++i) {
                if (i == leg) {
                    nt.push_back(dt[0]);
                    nt.push_back(dt[1]);
                } else {
                    nt.push_back(t[static_cast<size_t>(i)]);
                }
            }
            add_term(out, nt, mod_mul(c, dc, p), p);
        }
    }
    return out;
}

TensorElement HopfAlgebra::reduced_coproduct(const Element& e) const
{
    Scalar p = pres_.prime();
    TensorElement out = coproduct(e);
    for (const auto& [m, c] : e.terms) {
        add_term(out, TensorMonomial{m, pres_.unit()}, mod_neg(c, p), p);
        add_term(out, TensorMonomial{pres_.unit(), m}, mod_neg(c, p), p);
    }
    // The unit contributes 1(x)1 once, counted twice above.
    auto it = e.terms.find(pres_.unit());
    if (it != e.terms.end())
        add_term(out, TensorMonomial{pres_.unit(), pres_.unit()}, it->second, p);
    return out;
}

bool HopfAlgebra::is_primitive(const Element& e) const { return reduced_coproduct(e).is_zero(); }

Element HopfAlgebra::antipode(const Monomial& m) const
{
    auto cached = antipode_cache_.find(m);
    if (cached != antipode_cache_.end())
        return cached->second;

    Scalar p = pres_.prime();
    Element result;
    if (pres_.degree(m) == 0) {
        result = unit_element(pres_);
    } else {
        Element x = make_element(pres_, m);
        TensorElement red = reduced_coproduct(x);
        result = negate(x, p);
        for (const auto& [t, c] : red.terms) {
            // Strictly decreasing degree on the right leg.
            Element cright = antipode(t[1]);
            Element left = make_element(pres_, t[0], c);
            result = add(result, negate(mul(pres_, left, cright), p), p);
        }
    }
    antipode_cache_.emplace(m, result);
    return result;
}

Element HopfAlgebra::antipode(const Element& e) const
{
    Scalar p = pres_.prime();
    Element out;
    for (const auto& [m, c] : e.terms)
        out = add(out, scale(antipode(m), c, p), p);
    return out;
}

TensorElement HopfAlgebra::phi_star(const Element& e) const
{
    Scalar p = pres_.prime();

    // mu*: arity 1 -> 2.
    TensorElement t = coproduct(e);

    // (mu x mu)*: coproduct on each factor, arity 2 -> 4.
    TensorElement t4;
    t4.arity = 4;
    for (const auto& [tm, c] : t.terms) {
        TensorElement da = coproduct(tm[0]);
        TensorElement db = coproduct(tm[1]);
        TensorElement block = tensor_concat(da, db, p);
        t4 = add(t4, scale(block, c, p), p);
    }

    // (1 x 1 x c x c)*: antipode on factors 3 and 4.
    t4 = map_leg(pres_, t4, 2, [&](const Monomial& m) { return antipode(m); });
    t4 = map_leg(pres_, t4, 3, [&](const Monomial& m) { return antipode(m); });

    // (1 x T x 1)*: swap factors 2 and 3.
    t4 = koszul_swap(pres_, t4, 1);

    // (Delta x Delta)*: multiply factors (1,2) and (3,4), arity 4 -> 2.
    TensorElement out;
    out.arity = 2;
    for (const auto& [tm, c] : t4.terms) {
        auto left = monomial_mul(pres_, tm[0], tm[1]);
        if (!left)
            continue;
        auto right = monomial_mul(pres_, tm[2], tm[3]);
        if (!right)
            continue;
        Scalar nc = c;
        if (left->first * right->first < 0)
            nc = mod_neg(nc, p);
        add_term(out, TensorMonomial{left->second, right->second}, nc, p);
    }
    return out;
}

namespace {

std::string describe(const Presentation& pres, const Monomial& m)
{
    std::string s;
    for (int i = 0; i < pres.num_generators(); ++i) {
        int e = m[static_cast<size_t>(i)];
        if (e == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += pres.generator(i).name;
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

AxiomReport verify_axioms(const HopfAlgebra& h, int max_degree)
{
    const Presentation& pres = h.pres();
    Scalar p = pres.prime();
    if (max_degree > pres.degree_cap())
        throw DomainError("axiom degree exceeds the presentation cap");

    AxiomCheck coassoc{"coassociativity", 0, 0, {}};
    AxiomCheck counit{"counit", 0, 0, {}};
    AxiomCheck antipode_axiom{"antipode-axiom", 0, 0, {}};
    AxiomCheck involution{"antipode-involution", 0, 0, {}};
    AxiomCheck algebra_map{"algebra-map", 0, 0, {}};

    auto record = [](AxiomCheck& c, bool ok, const std::string& witness) {
        ++c.checked;
        if (!ok) {
            ++c.failures;
            if (c.failing.size() < 4)
                c.failing.push_back(witness);
        }
    };

    auto basis = pres.basis_up_to(max_degree);
    for (const auto& m : basis) {
        Element x = make_element(pres, m);
        std::string name = describe(pres, m);
        TensorElement dx = h.coproduct(m);

        // (Delta (x) id) Delta = (id (x) Delta) Delta.
        record(coassoc, h.coproduct_leg(dx, 0) == h.coproduct_leg(dx, 1), name);

        // Collapsing either leg by the augmentation returns x.
        Element left_collapse, right_collapse;
        for (const auto& [t, c] : dx.terms) {
            if (pres.degree(t[0]) == 0)
                add_term(right_collapse, t[1], c, p);
            if (pres.degree(t[1]) == 0)
                add_term(left_collapse, t[0], c, p);
        }
        record(counit, left_collapse == x && right_collapse == x, name);

        // multiply (id (x) c) Delta(x) is 0 in positive degree, unit on the unit.
        Element folded;
        for (const auto& [t, c] : dx.terms) {
            Element ca = h.antipode(t[1]);
            folded = add(folded, scale(mul(pres, make_element(pres, t[0]), ca), c, p), p);
        }
        bool ok = pres.degree(m) == 0 ? (folded == unit_element(pres)) : folded.is_zero();
        record(antipode_axiom, ok, name);

        record(involution, h.antipode(h.antipode(x)) == x, name);
    }

    // Algebra-map consistency on generator pairs, including aliased squares
    // (e.g. a square-linked x with x^2 stored as a named degree-2|x| class).
    for (int i = 0; i < pres.num_generators(); ++i) {
        for (int j = i; j < pres.num_generators(); ++j) {
            const auto& gi = pres.generator(i);
            const auto& gj = pres.generator(j);
            if (gi.degree + gj.degree > pres.degree_cap())
                continue;
            Element a = generator_element(pres, i), b = generator_element(pres, j);
            Element ab = mul(pres, a, b);
            TensorElement lhs = h.coproduct(ab);
            TensorElement rhs = tensor_mul(pres, h.coproduct(a), h.coproduct(b));
            record(algebra_map, lhs == rhs, gi.name + "*" + gj.name);
        }
    }

    AxiomReport report;
    report.checks = {coassoc, counit, antipode_axiom, involution, algebra_map};
    return report;
}

}  // namespace prequant
