#include "prequant/presentation.hpp"

#include <algorithm>

namespace prequant {

Presentation::Presentation(Scalar p, int degree_cap, std::vector<GeneratorSpec> gens)
    : p_(p), cap_(degree_cap), gens_(std::move(gens))
{
    if (!is_prime(p_))
        throw DomainError("coefficient modulus " + std::to_string(p_) + " is not prime");
    if (cap_ < 1)
        throw DomainError("degree cap must be positive");

    for (int i = 0; i < num_generators(); ++i) {
        const auto& g = gens_[static_cast<size_t>(i)];
        if (g.degree <= 0)
            throw DomainError("generator " + g.name + " must have positive degree");
        if (!index_.emplace(g.name, i).second)
            throw DomainError("duplicate generator name " + g.name);
        switch (g.relation) {
        case Relation::Exterior:
            if (p_ != 2 && g.degree % 2 == 0)
                throw DomainError("exterior generator " + g.name + " must have odd degree at odd p");
            break;
        case Relation::TruncatedPolynomial:
            if (g.height < 2)
                throw DomainError("truncation height of " + g.name + " must be >= 2");
            if (p_ != 2 && g.degree % 2 != 0)
                throw DomainError("truncated polynomial generator " + g.name +
                                  " must have even degree at odd p");
            break;
        case Relation::SquareLinked:
            if (p_ != 2)
                throw DomainError("square-linked generator " + g.name + " requires p = 2");
            break;
        }
    }

    // Resolve square-linked rewrites g^2 -> generator of degree 2|g|, or zero.
    square_target_.assign(gens_.size(), -1);
    for (int i = 0; i < num_generators(); ++i) {
        if (gens_[static_cast<size_t>(i)].relation != Relation::SquareLinked)
            continue;
        int want = 2 * gens_[static_cast<size_t>(i)].degree;
        int target = -1;
        for (int j = 0; j < num_generators(); ++j) {
            if (gens_[static_cast<size_t>(j)].degree == want) {
                if (target != -1)
                    throw DomainError("ambiguous square target for " + gens_[static_cast<size_t>(i)].name);
                target = j;
            }
        }
        square_target_[static_cast<size_t>(i)] = target;
    }

    unit_.assign(gens_.size(), 0);
}

int Presentation::find(const std::string& name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Presentation::max_exponent(int i) const
{
    const auto& g = gens_[static_cast<size_t>(i)];
    switch (g.relation) {
    case Relation::Exterior:
        return 1;
    case Relation::TruncatedPolynomial:
        return g.height - 1;
    case Relation::SquareLinked:
        return 1;
    }
    return 0;
}

int Presentation::degree(const Monomial& m) const
{
    int d = 0;
    for (size_t i = 0; i < m.size(); ++i)
        d += static_cast<int>(m[i]) * gens_[i].degree;
    return d;
}

Monomial Presentation::generator_monomial(int i) const
{
    Monomial m = unit_;
    m[static_cast<size_t>(i)] = 1;
    return m;
}

std::vector<Monomial> Presentation::basis(int d) const
{
    if (d > cap_)
        throw DegreeCapExceeded("basis degree " + std::to_string(d) + " exceeds cap " +
                                std::to_string(cap_));
    std::vector<Monomial> out;
    Monomial cur = unit_;
    // Enumerate exponent vectors in lexicographic order.
    auto rec = [&](auto&& self, int gen, int remaining) -> void {
        if (gen == num_generators()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        int dg = gens_[static_cast<size_t>(gen)].degree;
        int emax = std::min(max_exponent(gen), remaining / dg);
        for (int e = 0; e <= emax; ++e) {
            cur[static_cast<size_t>(gen)] = static_cast<std::uint8_t>(e);
            self(self, gen + 1, remaining - e * dg);
        }
        cur[static_cast<size_t>(gen)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> Presentation::basis_up_to(int d) const
{
    std::vector<Monomial> out;
    for (int q = 0; q <= d; ++q) {
        auto b = basis(q);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

}  // namespace prequant
