#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prequant/errors.hpp"
#include "prequant/zmod.hpp"

namespace prequant {

// Relation satisfied by a single generator.
//   Exterior            g^2 = 0
//   TruncatedPolynomial g^q = 0 for a height q >= 2
//   SquareLinked        g^2 = h where h is the generator of degree 2|g|,
//                       or 0 when no such generator exists (p = 2 only)
enum class Relation { Exterior, TruncatedPolynomial, SquareLinked };

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    Relation relation = Relation::Exterior;
    int height = 0;  // TruncatedPolynomial only
};

// Exponent vector over the generators of a presentation, in declaration order.
using Monomial = std::vector<std::uint8_t>;

// A finitely presented graded-commutative algebra over Z_p, truncated at a
// degree cap. Immutable after construction.
class Presentation {
public:
    Presentation(Scalar p, int degree_cap, std::vector<GeneratorSpec> gens);

    Scalar prime() const { return p_; }
    int degree_cap() const { return cap_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const GeneratorSpec& generator(int i) const { return gens_[static_cast<size_t>(i)]; }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }

    // Index of the generator with the given name, or -1.
    int find(const std::string& name) const;

    // Resolved square-rewrite target for generator i: index of the degree-2|g|
    // generator, or -1 meaning the square is zero. Only meaningful for
    // SquareLinked generators.
    int square_target(int i) const { return square_target_[static_cast<size_t>(i)]; }

    int max_exponent(int i) const;

    const Monomial& unit() const { return unit_; }
    int degree(const Monomial& m) const;
    Monomial generator_monomial(int i) const;

    // All normal-form monomials of degree exactly d, in a deterministic
    // (lexicographic in exponent vectors) order.
    std::vector<Monomial> basis(int d) const;

    // Basis of all degrees 0..d inclusive.
    std::vector<Monomial> basis_up_to(int d) const;

private:
    Scalar p_;
    int cap_;
    std::vector<GeneratorSpec> gens_;
    std::vector<int> square_target_;
    std::map<std::string, int> index_;
    Monomial unit_;
};

}  // namespace prequant
