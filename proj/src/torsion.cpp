#include "prequant/torsion.hpp"

#include <algorithm>
#include <numeric>

namespace prequant {

namespace {

const Element* rule_for(const BocksteinRules& rules, int r, int gen)
{
    auto h = rules.by_height.find(r);
    if (h == rules.by_height.end())
        return nullptr;
    auto it = h->second.find(gen);
    return it == h->second.end() ? nullptr : &it->second;
}

// Height-1 derivation on a single normal-form monomial.
std::optional<Element> derive_monomial(const Presentation& pres, const BocksteinRules& rules,
                                       const Monomial& m)
{
    Scalar p = pres.prime();
    Element out;
    int prefix_degree = 0;
    for (int i = 0; i < pres.num_generators(); ++i) {
        int e = m[static_cast<size_t>(i)];
        int d = pres.generator(i).degree;
        if (e == 0)
            continue;
        const Element* img = rule_for(rules, 1, i);
        if (!img)
            return std::nullopt;
        if (!img->is_zero() && (e % static_cast<int>(p)) != 0) {
            // beta(g^e) factor inside the monomial: sign from the part of the
            // monomial to the left of the inserted beta(g), and from moving
            // beta(g) back across the remaining factors to multiply in normal
            // order.
            Monomial rest = m;
            rest[static_cast<size_t>(i)] = static_cast<std::uint8_t>(e - 1);
            int suffix_degree = 0;
            for (int j = 0; j < pres.num_generators(); ++j) {
                int ej = (j == i) ? e - 1 : m[static_cast<size_t>(j)];
                if (j > i)
                    suffix_degree += ej * pres.generator(j).degree;
            }
            int sign = 1;
            if (p != 2) {
                long long flips =
                    static_cast<long long>(prefix_degree + (e - 1) * d) +
                    static_cast<long long>(d + 1) * suffix_degree;
                if (flips % 2)
                    sign = -1;
            }
            Scalar c = static_cast<Scalar>(e % static_cast<int>(p));
            if (sign < 0)
                c = mod_neg(c, p);
            Element term = mul(pres, make_element(pres, rest, c), *img);
            out = add(out, term, p);
        }
        prefix_degree += e * d;
    }
    return out;
}

// A tensor leg usable at heights >= 2: the unit or a single generator.
std::optional<int> single_generator(const Monomial& m)
{
    int found = -1;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (m[i] > 1 || found >= 0)
            return std::nullopt;
        found = static_cast<int>(i);
    }
    return found;  // -1 encodes the unit
}

std::optional<Element> higher_on_monomial(const Presentation&, const BocksteinRules& rules,
                                          const Monomial& m, int r)
{
    auto gen = single_generator(m);
    if (!gen)
        return std::nullopt;
    if (*gen < 0)
        return Element{};  // all differentials vanish on the unit
    // All lower differentials must be known to vanish on the generator.
    for (int j = 1; j < r; ++j) {
        const Element* lower = rule_for(rules, j, *gen);
        if (!lower || !lower->is_zero())
            return std::nullopt;
    }
    const Element* img = rule_for(rules, r, *gen);
    if (!img)
        return std::nullopt;
    return *img;
}

}  // namespace

std::optional<Element> bockstein_try(const Presentation& pres, const BocksteinRules& rules,
                                     const Element& e, int r)
{
    Scalar p = pres.prime();
    Element out;
    for (const auto& [m, c] : e.terms) {
        std::optional<Element> dm =
            (r == 1) ? derive_monomial(pres, rules, m) : higher_on_monomial(pres, rules, m, r);
        if (!dm)
            return std::nullopt;
        out = add(out, scale(*dm, c, p), p);
    }
    return out;
}

std::optional<TensorElement> bockstein_try(const Presentation& pres, const BocksteinRules& rules,
                                           const TensorElement& e, int r)
{
    Scalar p = pres.prime();
    TensorElement out;
    out.arity = e.arity;
    for (const auto& [t, c] : e.terms) {
        int prefix = 0;
        for (int leg = 0; leg < e.arity; ++leg) {
            const Monomial& m = t[static_cast<size_t>(leg)];
            std::optional<Element> dm =
                (r == 1) ? derive_monomial(pres, rules, m) : higher_on_monomial(pres, rules, m, r);
            if (!dm)
                return std::nullopt;
            if (!dm->is_zero()) {
                Scalar c_leg = c;
                if (p != 2 && (prefix % 2))
                    c_leg = mod_neg(c_leg, p);
                for (const auto& [im, ic] : dm->terms) {
                    TensorMonomial nt = t;
                    nt[static_cast<size_t>(leg)] = im;
                    add_term(out, nt, mod_mul(c_leg, ic, p), p);
                }
            }
            prefix += pres.degree(m);
        }
    }
    return out;
}

TensorElement bockstein_apply(const Presentation& pres, const BocksteinRules& rules,
                              const TensorElement& e, int r)
{
    auto out = bockstein_try(pres, rules, e, r);
    if (!out)
        throw NotDefined("the Bockstein rule set does not determine the value at height " +
                         std::to_string(r));
    return *out;
}

namespace {

// Tensor monomials of the given total degree, each leg in normal form;
// deterministic order.
std::vector<TensorMonomial> tensor_basis(const Presentation& pres, int arity, int total)
{
    std::vector<TensorMonomial> out;
    TensorMonomial cur(static_cast<size_t>(arity));
    auto rec = [&](auto&& self, int leg, int remaining) -> void {
        if (leg == arity) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            for (const auto& m : pres.basis(d)) {
                cur[static_cast<size_t>(leg)] = m;
                self(self, leg + 1, remaining - d);
            }
        }
        cur[static_cast<size_t>(leg)] = pres.unit();
    };
    rec(rec, 0, total);
    std::sort(out.begin(), out.end());
    return out;
}

// Solves A w = rhs over Z_p where columns are indexed by candidate witnesses;
// returns coefficients or nullopt.
std::optional<std::vector<Scalar>> solve_mod_p(std::vector<std::vector<Scalar>> rows,
                                               std::vector<Scalar> rhs, size_t ncols, Scalar p)
{
    size_t nrows = rows.size();
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t pivot = nrows;
        for (size_t r = rank; r < nrows; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == nrows)
            continue;
        std::swap(rows[rank], rows[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        Scalar inv = mod_inv(rows[rank][col], p);
        for (size_t c = col; c < ncols; ++c)
            rows[rank][c] = mod_mul(rows[rank][c], inv, p);
        rhs[rank] = mod_mul(rhs[rank], inv, p);
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            Scalar f = rows[r][col];
            for (size_t c = col; c < ncols; ++c)
                rows[r][c] = mod_sub(rows[r][c], mod_mul(f, rows[rank][c], p), p);
            rhs[r] = mod_sub(rhs[r], mod_mul(f, rhs[rank], p), p);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // Inconsistent rows?
    for (size_t r = rank; r < nrows; ++r)
        if (rhs[r] != 0)
            return std::nullopt;
    std::vector<Scalar> w(ncols, 0);
    for (size_t r = 0; r < rank; ++r)
        w[pivot_col[r]] = rhs[r];
    return w;
}

}  // namespace

IntegralOrderResult integral_order(const Presentation& pres, const BocksteinRules& rules,
                                   const TensorElement& target, int r_max)
{
    if (target.is_zero())
        throw DomainError("integral_order requires a nonzero target");
    Scalar p = pres.prime();
    int d = degree(pres, target);
    auto witnesses = tensor_basis(pres, target.arity, d - 1);

    for (int r = 1; r <= r_max; ++r) {
        // Columns usable at height r: all differentials through r defined.
        std::vector<size_t> usable;
        std::vector<std::vector<TensorElement>> images;  // per column, heights 1..r
        for (size_t i = 0; i < witnesses.size(); ++i) {
            TensorElement w = make_tensor(pres, witnesses[i]);
            std::vector<TensorElement> imgs;
            bool ok = true;
            for (int j = 1; j <= r; ++j) {
                auto im = bockstein_try(pres, rules, w, j);
                if (!im) {
                    ok = false;
                    break;
                }
                imgs.push_back(*im);
            }
            if (ok) {
                usable.push_back(i);
                images.push_back(std::move(imgs));
            }
        }
        if (usable.empty())
            continue;

        // Row index: (height, tensor monomial) pairs appearing anywhere.
        std::map<std::pair<int, TensorMonomial>, size_t> row_of;
        auto row_index = [&](int height, const TensorMonomial& t) {
            return row_of.emplace(std::make_pair(height, t), row_of.size()).first->second;
        };
        for (size_t c = 0; c < usable.size(); ++c)
            for (int j = 1; j <= r; ++j)
                for (const auto& [t, coef] : images[c][static_cast<size_t>(j - 1)].terms)
                    row_index(j, t);
        for (const auto& [t, coef] : target.terms)
            row_index(r, t);

        std::vector<std::vector<Scalar>> rows(row_of.size(),
                                              std::vector<Scalar>(usable.size(), 0));
        std::vector<Scalar> rhs(row_of.size(), 0);
        for (size_t c = 0; c < usable.size(); ++c)
            for (int j = 1; j <= r; ++j)
                for (const auto& [t, coef] : images[c][static_cast<size_t>(j - 1)].terms)
                    rows[row_index(j, t)][c] = coef;
        for (const auto& [t, coef] : target.terms)
            rhs[row_index(r, t)] = coef;

        auto sol = solve_mod_p(rows, rhs, usable.size(), p);
        if (!sol)
            continue;
        TensorElement witness;
        witness.arity = target.arity;
        for (size_t c = 0; c < usable.size(); ++c)
            add_term(witness, witnesses[usable[c]], (*sol)[c], p);
        if (witness.is_zero())
            continue;  // target was hit by the zero combination: impossible for nonzero target
        IntegralOrderResult res;
        res.height = r;
        res.order = 1;
        for (int i = 0; i < r; ++i)
            res.order *= p;
        res.witness = witness;
        return res;
    }
    throw NotHit("no Bockstein witness up to height " + std::to_string(r_max));
}

long long tor_cyclic(long long a, long long b)
{
    if (a < 1 || b < 1)
        throw DomainError("tor_cyclic requires positive orders");
    return std::gcd(a, b);
}

long long tor_pushforward_order(long long n, long long k)
{
    if (k < 1 || n < 1 || n % k != 0)
        throw DomainError("tor_pushforward_order requires k | n");
    return k / std::gcd(k, n / k);
}

long long assemble_l0(const std::map<long long, long long>& per_prime)
{
    long long l = 1;
    for (const auto& [p, order] : per_prime) {
        if (!is_prime(static_cast<std::uint64_t>(p)))
            throw DomainError("assemble_l0 key " + std::to_string(p) + " is not prime");
        long long o = order;
        while (o > 1) {
            if (o % p != 0)
                throw DomainError("order " + std::to_string(order) + " is not a power of " +
                                  std::to_string(p));
            o /= p;
        }
        if (order < 1)
            throw DomainError("orders must be positive");
        l = std::lcm(l, order);
    }
    return l;
}

}  // namespace prequant
