#include "prequant/element.hpp"

#include <algorithm>

namespace prequant {

Element zero_element() { return Element{}; }

Element unit_element(const Presentation& pres)
{
    Element e;
    e.terms.emplace(pres.unit(), 1);
    return e;
}

Element make_element(const Presentation& pres, const Monomial& m, Scalar c)
{
    Element e;
    c %= pres.prime();
    if (c != 0)
        e.terms.emplace(m, c);
    return e;
}

Element generator_element(const Presentation& pres, int i)
{
    return make_element(pres, pres.generator_monomial(i));
}

Element generator_element(const Presentation& pres, const std::string& name)
{
    int i = pres.find(name);
    if (i < 0)
        throw DomainError("unknown generator " + name);
    return generator_element(pres, i);
}

void add_term(Element& e, const Monomial& m, Scalar c, Scalar p)
{
    c %= p;
    if (c == 0)
        return;
    auto it = e.terms.find(m);
    if (it == e.terms.end()) {
        e.terms.emplace(m, c);
        return;
    }
    it->second = mod_add(it->second, c, p);
    if (it->second == 0)
        e.terms.erase(it);
}

Element add(const Element& a, const Element& b, Scalar p)
{
    Element out = a;
    for (const auto& [m, c] : b.terms)
        add_term(out, m, c, p);
    return out;
}

Element scale(const Element& a, Scalar c, Scalar p)
{
    Element out;
    c %= p;
    if (c == 0)
        return out;
    for (const auto& [m, cm] : a.terms)
        out.terms.emplace(m, mod_mul(cm, c, p));
    return out;
}

Element negate(const Element& a, Scalar p) { return scale(a, p - 1, p); }

int degree(const Presentation& pres, const Element& e)
{
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : e.terms) {
        int dm = pres.degree(m);
        if (first) {
            d = dm;
            first = false;
        } else if (dm != d) {
            throw InternalError("degree of a non-homogeneous element");
        }
    }
    return d;
}

int degree(const Presentation& pres, const TensorMonomial& t)
{
    int d = 0;
    for (const auto& m : t)
        d += pres.degree(m);
    return d;
}

int degree(const Presentation& pres, const TensorElement& e)
{
    int d = 0;
    bool first = true;
    for (const auto& [t, c] : e.terms) {
        int dt = degree(pres, t);
        if (first) {
            d = dt;
            first = false;
        } else if (dt != d) {
            throw InternalError("degree of a non-homogeneous tensor");
        }
    }
    return d;
}

namespace {

// Applies the relation rewrites to an exponent vector. Returns false when the
// monomial is zero. Signs never arise: rewrites only touch even-degree squares
// or run at p = 2.
bool rewrite(const Presentation& pres, Monomial& m)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < pres.num_generators(); ++i) {
            auto& e = m[static_cast<size_t>(i)];
            if (e == 0)
                continue;
            const auto& g = pres.generator(i);
            switch (g.relation) {
            case Relation::Exterior:
                if (e >= 2)
                    return false;
                break;
            case Relation::TruncatedPolynomial:
                if (e >= g.height)
                    return false;
                break;
            case Relation::SquareLinked:
                if (e >= 2) {
                    int target = pres.square_target(i);
                    if (target < 0)
                        return false;
                    e = static_cast<std::uint8_t>(e - 2);
                    m[static_cast<size_t>(target)] =
                        static_cast<std::uint8_t>(m[static_cast<size_t>(target)] + 1);
                    changed = true;
                }
                break;
            }
        }
    }
    return true;
}

}  // namespace

Element normal_form(const Presentation& pres, const Word& word)
{
    Scalar p = pres.prime();
    int total = 0;
    for (const auto& [g, e] : word) {
        if (g < 0 || g >= pres.num_generators())
            throw DomainError("word references an unknown generator");
        if (e < 0)
            throw DomainError("negative exponent");
        total += e * pres.generator(g).degree;
    }
    if (total > pres.degree_cap())
        throw DegreeCapExceeded("word degree " + std::to_string(total) + " exceeds cap " +
                                std::to_string(pres.degree_cap()));

    // Expand into single-generator factors and bubble-sort into declaration
    // order, accumulating the Koszul sign of each adjacent odd-odd swap.
    std::vector<int> factors;
    for (const auto& [g, e] : word)
        for (int i = 0; i < e; ++i)
            factors.push_back(g);
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < factors.size(); ++i) {
            if (factors[i] > factors[i + 1]) {
                if (p != 2) {
                    int da = pres.generator(factors[i]).degree;
                    int db = pres.generator(factors[i + 1]).degree;
                    if ((da % 2) && (db % 2))
                        sign = -sign;
                }
                std::swap(factors[i], factors[i + 1]);
                moved = true;
            }
        }
    }

    Monomial m = pres.unit();
    for (int g : factors)
        m[static_cast<size_t>(g)] = static_cast<std::uint8_t>(m[static_cast<size_t>(g)] + 1);
    if (!rewrite(pres, m))
        return zero_element();
    Scalar c = (sign < 0) ? p - 1 : 1;
    return make_element(pres, m, c);
}

std::optional<std::pair<int, Monomial>> monomial_mul(const Presentation& pres, const Monomial& a,
                                                     const Monomial& b)
{
    int da = pres.degree(a), db = pres.degree(b);
    if (da + db > pres.degree_cap())
        throw DegreeCapExceeded("product degree " + std::to_string(da + db) + " exceeds cap " +
                                std::to_string(pres.degree_cap()));
    int sign = 1;
    if (pres.prime() != 2) {
        // Each factor of b at position j crosses each factor of a at a later
        // position i > j; odd-odd crossings flip the sign.
        int n = pres.num_generators();
        std::vector<int> odd_suffix(static_cast<size_t>(n) + 1, 0);
        for (int i = n - 1; i >= 0; --i) {
            int cnt = (pres.generator(i).degree % 2) ? a[static_cast<size_t>(i)] : 0;
            odd_suffix[static_cast<size_t>(i)] = odd_suffix[static_cast<size_t>(i) + 1] + cnt;
        }
        long long flips = 0;
        for (int j = 0; j < n; ++j) {
            if (pres.generator(j).degree % 2 && b[static_cast<size_t>(j)])
                flips += static_cast<long long>(b[static_cast<size_t>(j)]) *
                         odd_suffix[static_cast<size_t>(j) + 1];
        }
        if (flips % 2)
            sign = -1;
    }
    Monomial m = a;
    for (size_t i = 0; i < m.size(); ++i)
        m[i] = static_cast<std::uint8_t>(m[i] + b[i]);
    if (!rewrite(pres, m))
        return std::nullopt;
    return std::make_pair(sign, m);
}

Element mul(const Presentation& pres, const Element& a, const Element& b)
{
    Scalar p = pres.prime();
    Element out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            auto prod = monomial_mul(pres, ma, mb);
            if (!prod)
                continue;
            Scalar c = mod_mul(ca, cb, p);
            if (prod->first < 0)
                c = mod_neg(c, p);
            add_term(out, prod->second, c, p);
        }
    return out;
}

Element power(const Presentation& pres, const Element& a, int e)
{
    Element out = unit_element(pres);
    for (int i = 0; i < e; ++i)
        out = mul(pres, out, a);
    return out;
}

TensorElement tensor_lift(const Element& e)
{
    TensorElement t;
    t.arity = 1;
    for (const auto& [m, c] : e.terms)
        t.terms.emplace(TensorMonomial{m}, c);
    return t;
}

Element tensor_collapse(const TensorElement& e)
{
    if (e.arity != 1)
        throw InternalError("tensor_collapse requires arity 1");
    Element out;
    for (const auto& [t, c] : e.terms)
        out.terms.emplace(t[0], c);
    return out;
}

TensorElement tensor_unit(const Presentation& pres, int arity)
{
    TensorElement t;
    t.arity = arity;
    t.terms.emplace(TensorMonomial(static_cast<size_t>(arity), pres.unit()), 1);
    return t;
}

TensorElement make_tensor(const Presentation& pres, const TensorMonomial& t, Scalar c)
{
    TensorElement e;
    e.arity = static_cast<int>(t.size());
    c %= pres.prime();
    if (c != 0)
        e.terms.emplace(t, c);
    return e;
}

void add_term(TensorElement& e, const TensorMonomial& t, Scalar c, Scalar p)
{
    c %= p;
    if (c == 0)
        return;
    auto it = e.terms.find(t);
    if (it == e.terms.end()) {
        e.terms.emplace(t, c);
        return;
    }
    it->second = mod_add(it->second, c, p);
    if (it->second == 0)
        e.terms.erase(it);
}

TensorElement add(const TensorElement& a, const TensorElement& b, Scalar p)
{
    if (a.arity != b.arity)
        throw InternalError("tensor arity mismatch in add");
    TensorElement out = a;
    for (const auto& [t, c] : b.terms)
        add_term(out, t, c, p);
    return out;
}

TensorElement scale(const TensorElement& a, Scalar c, Scalar p)
{
    TensorElement out;
    out.arity = a.arity;
    c %= p;
    if (c == 0)
        return out;
    for (const auto& [t, ct] : a.terms)
        out.terms.emplace(t, mod_mul(ct, c, p));
    return out;
}

TensorElement tensor_mul(const Presentation& pres, const TensorElement& a, const TensorElement& b)
{
    if (a.arity != b.arity)
        throw InternalError("tensor arity mismatch in tensor_mul");
    Scalar p = pres.prime();
    TensorElement out;
    out.arity = a.arity;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms) {
            // Crossing sign: factor b_i passes every a_j with j > i.
            int sign = 1;
            if (p != 2) {
                long long flips = 0;
                for (int i = 0; i < a.arity; ++i)
                    for (int j = i + 1; j < a.arity; ++j)
                        flips += static_cast<long long>(pres.degree(tb[static_cast<size_t>(i)])) *
                                 pres.degree(ta[static_cast<size_t>(j)]);
                if (flips % 2)
                    sign = -1;
            }
            TensorMonomial t(static_cast<size_t>(a.arity));
            bool zero = false;
            for (int i = 0; i < a.arity && !zero; ++i) {
                auto prod = monomial_mul(pres, ta[static_cast<size_t>(i)], tb[static_cast<size_t>(i)]);
                if (!prod) {
                    zero = true;
                    break;
                }
                if (prod->first < 0)
                    sign = -sign;
                t[static_cast<size_t>(i)] = prod->second;
            }
            if (zero)
                continue;
            Scalar c = mod_mul(ca, cb, p);
            if (sign < 0)
                c = mod_neg(c, p);
            add_term(out, t, c, p);
        }
    return out;
}

TensorElement tensor_concat(const TensorElement& a, const TensorElement& b, Scalar p)
{
    TensorElement out;
    out.arity = a.arity + b.arity;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms) {
            TensorMonomial t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            add_term(out, t, mod_mul(ca, cb, p), p);
        }
    return out;
}

TensorElement koszul_swap(const Presentation& pres, const TensorElement& e, int i)
{
    if (i < 0 || i + 1 >= e.arity)
        throw DomainError("koszul_swap position out of range");
    Scalar p = pres.prime();
    TensorElement out;
    out.arity = e.arity;
    for (const auto& [t, c] : e.terms) {
        TensorMonomial nt = t;
        std::swap(nt[static_cast<size_t>(i)], nt[static_cast<size_t>(i) + 1]);
        Scalar nc = c;
        if (p != 2) {
            long long du = pres.degree(t[static_cast<size_t>(i)]);
            long long dv = pres.degree(t[static_cast<size_t>(i) + 1]);
            if ((du * dv) % 2)
                nc = mod_neg(nc, p);
        }
        add_term(out, nt, nc, p);
    }
    return out;
}

}  // namespace prequant
