#include "prequant/alcove.hpp"

#include <algorithm>
#include <functional>

namespace prequant {

Rat parse_rat(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(std::stoll(text));
        return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw DomainError("cannot parse rational '" + text + "'");
    }
}

void check_cartan(const CartanPoint& x)
{
    Rat sum(0);
    for (const auto& c : x)
        sum = sum + c;
    if (!sum.is_zero())
        throw DomainError("coordinates must sum to zero");
}

AlcoveData alcove_vertices(int n)
{
    if (n < 2)
        throw DomainError("alcove requires n >= 2");
    AlcoveData a;
    a.n = n;
    for (int k = 0; k < n; ++k) {
        CartanPoint v(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            v[static_cast<size_t>(j)] = (j < k) ? Rat(n - k, n) : Rat(-k, n);
        check_cartan(v);
        a.vertices.push_back(std::move(v));
    }
    a.barycenter.assign(static_cast<size_t>(n), Rat(0));
    for (const auto& v : a.vertices)
        for (int j = 0; j < n; ++j)
            a.barycenter[static_cast<size_t>(j)] =
                a.barycenter[static_cast<size_t>(j)] + v[static_cast<size_t>(j)] / Rat(n);
    return a;
}

bool in_alcove(const CartanPoint& x)
{
    size_t n = x.size();
    for (size_t i = 0; i + 1 < n; ++i)
        if (x[i] < x[i + 1])
            return false;
    return x[0] - x[n - 1] <= Rat(1);
}

CartanPoint alcove_reduce(int n, CartanPoint x)
{
    if (static_cast<int>(x.size()) != n)
        throw DomainError("point dimension mismatch");
    check_cartan(x);
    Rat norm1(0);
    for (const auto& c : x)
        norm1 = norm1 + c.abs();
    long long cap = 10LL * n * (1 + norm1.ceil());
    long long steps = 0;
    for (;;) {
        std::sort(x.begin(), x.end(), std::greater<Rat>());
        if (x.front() - x.back() <= Rat(1))
            return x;
        // translate by the co-root e_n - e_1
        x.front() = x.front() - Rat(1);
        x.back() = x.back() + Rat(1);
        if (++steps > cap)
            throw InternalError("alcove reduction exceeded its iteration cap");
    }
}

CartanPoint center_action(int n, int j, const CartanPoint& x)
{
    if (static_cast<int>(x.size()) != n)
        throw DomainError("point dimension mismatch");
    j = ((j % n) + n) % n;
    auto a = alcove_vertices(n);
    CartanPoint shifted = x;
    for (int t = 0; t < n; ++t)
        shifted[static_cast<size_t>(t)] =
            shifted[static_cast<size_t>(t)] + Rat(j) * a.vertices[1][static_cast<size_t>(t)];
    return alcove_reduce(n, shifted);
}

bool is_coroot_lattice(const CartanPoint& x)
{
    Rat sum(0);
    for (const auto& c : x) {
        if (!c.is_integer())
            return false;
        sum = sum + c;
    }
    return sum.is_zero();
}

Rat simple_pairing(const CartanPoint& x, int i)
{
    return x[static_cast<size_t>(i)] - x[static_cast<size_t>(i) + 1];
}

bool conjclass_preq_check(int n, const CartanPoint& zeta, long long k)
{
    if (static_cast<int>(zeta.size()) != n)
        throw DomainError("point dimension mismatch");
    check_cartan(zeta);
    if (!in_alcove(zeta))
        throw NotInAlcove("conjugacy-class point must lie in the alcove");
    if (k < 1)
        throw DomainError("level must be positive");
    for (int i = 0; i + 1 < n; ++i) {
        Rat pairing = simple_pairing(zeta, i) * Rat(k);
        if (!pairing.is_integer())
            return false;
    }
    return true;
}

MarkedVerdict marked_points_check(int n, long long k, const std::vector<CartanPoint>& classes)
{
    if (n < 2)
        throw DomainError("marked points require n >= 2");
    if (k < 1)
        throw DomainError("level must be positive");
    auto a = alcove_vertices(n);

    int barycenter_factors = 0;
    bool any_no = false, any_open = false;
    MarkedVerdict v;
    for (size_t idx = 0; idx < classes.size(); ++idx) {
        const auto& zeta = classes[idx];
        if (static_cast<int>(zeta.size()) != n)
            throw DomainError("class dimension mismatch");
        check_cartan(zeta);
        if (!in_alcove(zeta))
            throw NotInAlcove("marked-point class " + std::to_string(idx + 1) +
                              " is not in the alcove");
        if (zeta == a.barycenter) {
            ++barycenter_factors;
            continue;
        }
        // Non-barycenter classes split off as conjugacy classes of the cover;
        // any of the n lifts gives the same integrality answer, so the
        // canonical representative is tested.
        bool ok = conjclass_preq_check(n, alcove_reduce(n, zeta), k);
        if (ok) {
            v.reasons.push_back("class " + std::to_string(idx + 1) +
                                ": split factor pre-quantizable at level " + std::to_string(k));
        } else {
            v.reasons.push_back("class " + std::to_string(idx + 1) +
                                ": split factor fails the integrality test at level " +
                                std::to_string(k));
            any_no = true;
        }
    }

    if (barycenter_factors > 0) {
        if (n == 2) {
            if (k % 2 == 0) {
                v.reasons.push_back("barycenter core (n=2): level is even");
            } else {
                v.reasons.push_back("barycenter core (n=2): level must be even");
                any_no = true;
            }
        } else if (n % 2 == 1) {
            if (k % n == 0) {
                v.reasons.push_back("barycenter core (n odd): n divides the level");
            } else {
                v.reasons.push_back("barycenter core (n odd): n must divide the level");
                any_no = true;
            }
        } else {
            if (k % n != 0) {
                v.reasons.push_back("barycenter core (n even): n must divide the level");
                any_no = true;
            } else if (k % (2 * static_cast<long long>(n)) == 0) {
                v.reasons.push_back("barycenter core (n even): 2n divides the level");
            } else {
                v.reasons.push_back(
                    "barycenter core (n even): the necessary condition n | level holds, but "
                    "sufficiency is only known when 2n | level");
                any_open = true;
            }
        }
    }

    if (any_no)
        v.kind = MarkedVerdict::Kind::No;
    else if (any_open)
        v.kind = MarkedVerdict::Kind::NecessaryMetSufficiencyOpen;
    else
        v.kind = MarkedVerdict::Kind::Yes;
    return v;
}

}  // namespace prequant
