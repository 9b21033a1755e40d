#include <doctest.h>

#include "prequant/catalog.hpp"
#include "prequant/format.hpp"
#include "sweep.hpp"

using namespace prequant;

namespace {

const Presentation& pres_of(const PrimeData& pd) { return pd.hopf.pres(); }

PrimeData pu(int n, long long p) { return make_prime_data(GroupId{Family::PU, n, 0}, p, 8); }

Element gen(const Presentation& P, const char* name) { return generator_element(P, name); }

Word word_of(const Presentation& P, const Monomial& m)
{
    Word w;
    for (int i = 0; i < P.num_generators(); ++i)
        if (m[static_cast<size_t>(i)])
            w.push_back({i, m[static_cast<size_t>(i)]});
    return w;
}

}  // namespace

TEST_CASE("normal form applies exterior squares, truncation, and aliases")
{
    auto pu3 = pu(3, 3);
    const auto& P = pres_of(pu3);
    int x1 = P.find("x1"), y2 = P.find("y2");

    CHECK(normal_form(P, {{x1, 2}}).is_zero());           // exterior square at odd p
    CHECK(normal_form(P, {{y2, 3}}).is_zero());           // y2^{p^r} = 0
    CHECK(!normal_form(P, {{y2, 2}}).is_zero());

    auto pu2 = pu(2, 2);
    const auto& Q = pres_of(pu2);
    Element sq = normal_form(Q, {{Q.find("x1"), 2}});
    CHECK(sq == gen(Q, "y2"));  // stored alias of x1^2
    CHECK(normal_form(Q, {{Q.find("x1"), 4}}).is_zero());  // x1^4 = y2^2 = 0
}

TEST_CASE("normal form is idempotent and order-insensitive up to sign")
{
    auto pu3 = pu(3, 3);
    const auto& P = pres_of(pu3);
    for (const auto& m : P.basis_up_to(8)) {
        Element e = normal_form(P, word_of(P, m));
        CHECK(e == make_element(P, m));
        // Reversed word gives the same monomial up to the Koszul sign.
        Word w = word_of(P, m);
        std::reverse(w.begin(), w.end());
        Element r = normal_form(P, w);
        CHECK(r.terms.size() == 1);
        CHECK(r.terms.begin()->first == m);
    }
}

TEST_CASE("mul matches the worked examples")
{
    auto pu3 = pu(3, 3);
    const auto& P = pres_of(pu3);
    Element x1 = gen(P, "x1"), y2 = gen(P, "y2"), x3 = gen(P, "x3");

    CHECK(format_element(P, mul(P, x1, y2)) == "x1*y2");
    CHECK(mul(P, y2, mul(P, y2, y2)).is_zero());  // y2 * y2^2 = 0 under y2^3 = 0
    CHECK(!mul(P, y2, y2).is_zero());

    Element x1x3 = mul(P, x1, x3);
    CHECK(format_element(P, x1x3) == "x1*x3");
    // Graded commutativity: x3 * x1 = -x1*x3.
    CHECK(mul(P, x3, x1) == negate(x1x3, 3));
}

TEST_CASE("mul is associative and graded-commutative on basis pairs")
{
    for (auto pd : {pu(3, 3), make_prime_data(GroupId{Family::SO, 9, 0}, 2, 8)}) {
        const auto& P = pres_of(pd);
        auto basis = P.basis_up_to(4);
        for (const auto& a : basis)
            for (const auto& b : basis) {
                int da = P.degree(a), db = P.degree(b);
                if (da + db > P.degree_cap())
                    continue;
                Element ea = make_element(P, a), eb = make_element(P, b);
                Element ab = mul(P, ea, eb);
                Scalar sign = (P.prime() != 2 && (da % 2) && (db % 2)) ? P.prime() - 1 : 1;
                CHECK(mul(P, eb, ea) == scale(ab, sign, P.prime()));
                for (const auto& c : basis) {
                    if (da + db + P.degree(c) > P.degree_cap())
                        continue;
                    Element ec = make_element(P, c);
                    CHECK(mul(P, ab, ec) == mul(P, ea, mul(P, eb, ec)));
                }
            }
    }
}

TEST_CASE("mul past the degree cap raises DegreeCapExceeded")
{
    auto pu9 = pu(9, 3);  // y2 truncates at height 9, so y2^4 is a real class
    const auto& P = pres_of(pu9);
    Element y2 = gen(P, "y2");
    Element y4 = mul(P, y2, y2);
    Element y8 = mul(P, y4, y4);  // degree 8 = cap, fine
    CHECK(!y8.is_zero());
    CHECK_THROWS_AS(mul(P, y8, y2), DegreeCapExceeded);
}

TEST_CASE("basis enumeration matches the worked examples")
{
    auto pu3 = pu(3, 3);
    const auto& P = pres_of(pu3);
    auto b3 = P.basis(3);
    REQUIRE(b3.size() == 2);
    std::vector<std::string> names;
    for (const auto& m : b3)
        names.push_back(format_monomial(P, m));
    CHECK(std::find(names.begin(), names.end(), "x3") != names.end());
    CHECK(std::find(names.begin(), names.end(), "x1*y2") != names.end());

    CHECK(P.basis(0).size() == 1);
    CHECK(P.basis(0)[0] == P.unit());

    auto pu2 = pu(2, 2);
    const auto& Q = pres_of(pu2);
    auto q2 = Q.basis(2);
    REQUIRE(q2.size() == 1);
    CHECK(format_monomial(Q, q2[0]) == "y2");
}

TEST_CASE("basis cardinalities agree with a flat exponent-vector oracle")
{
    std::vector<PrimeData> samples;
    for (const auto& g : sweep_groups())
        for (long long p : relevant_primes(g))
            samples.push_back(make_prime_data(g, p, 8));

    for (const auto& pd : samples) {
        const auto& P = pres_of(pd);
        // Flat product-space enumeration with an independent validity filter.
        std::vector<int> counts(9, 0);
        std::vector<int> caps;
        for (int i = 0; i < P.num_generators(); ++i) {
            const auto& g = P.generator(i);
            int emax = 8 / g.degree;
            if (g.relation == Relation::Exterior || g.relation == Relation::SquareLinked)
                emax = std::min(emax, 1);
            else
                emax = std::min(emax, g.height - 1);
            caps.push_back(emax);
        }
        std::vector<int> exp(caps.size(), 0);
        for (;;) {
            int deg = 0;
            for (size_t i = 0; i < exp.size(); ++i)
                deg += exp[i] * P.generator(static_cast<int>(i)).degree;
            if (deg <= 8)
                ++counts[static_cast<size_t>(deg)];
            size_t pos = 0;
            while (pos < exp.size() && exp[pos] == caps[pos])
                exp[pos++] = 0;
            if (pos == exp.size())
                break;
            ++exp[pos];
        }
        for (int d = 0; d <= 8; ++d)
            CHECK(P.basis(d).size() == static_cast<size_t>(counts[static_cast<size_t>(d)]));
    }
}

TEST_CASE("tensor products carry the Koszul crossing sign")
{
    auto pu3 = pu(3, 3);
    const auto& P = pres_of(pu3);
    Element x1 = gen(P, "x1"), y2 = gen(P, "y2");

    auto two = [&](const Element& a, const Element& b) {
        return tensor_concat(tensor_lift(a), tensor_lift(b), P.prime());
    };
    TensorElement left = two(unit_element(P), x1);   // 1 (x) x1
    TensorElement right = two(x1, unit_element(P));  // x1 (x) 1
    TensorElement product = tensor_mul(P, left, right);
    CHECK(product == scale(two(x1, x1), 2, 3));  // -(x1 (x) x1)

    auto pu2 = pu(2, 2);
    const auto& Q = pres_of(pu2);
    Element qx1 = gen(Q, "x1");
    auto two2 = [&](const Element& a, const Element& b) {
        return tensor_concat(tensor_lift(a), tensor_lift(b), 2);
    };
    CHECK(tensor_mul(Q, two2(unit_element(Q), qx1), two2(qx1, unit_element(Q))) ==
          two2(qx1, qx1));  // signs vanish mod 2

    CHECK(tensor_mul(P, two(x1, unit_element(P)), two(unit_element(P), y2)) == two(x1, y2));
}

TEST_CASE("koszul_swap signs, involution, and multiplicativity")
{
    auto pu3 = pu(3, 3);
    const auto& P = pres_of(pu3);
    Element x1 = gen(P, "x1"), y2 = gen(P, "y2"), x3 = gen(P, "x3");
    auto two = [&](const Element& a, const Element& b) {
        return tensor_concat(tensor_lift(a), tensor_lift(b), P.prime());
    };

    CHECK(koszul_swap(P, two(x1, y2), 0) == two(y2, x1));
    CHECK(koszul_swap(P, two(x1, x3), 0) == scale(two(x3, x1), 2, 3));

    // Involution and algebra-map property over a basis sample.
    std::vector<TensorElement> sample;
    for (const auto& a : P.basis_up_to(3))
        for (const auto& b : P.basis_up_to(3))
            sample.push_back(make_tensor(P, TensorMonomial{a, b}));
    for (const auto& t : sample)
        CHECK(koszul_swap(P, koszul_swap(P, t, 0), 0) == t);
    for (const auto& s : sample)
        for (const auto& t : sample) {
            if (degree(P, s) + degree(P, t) > P.degree_cap())
                continue;
            CHECK(koszul_swap(P, tensor_mul(P, s, t), 0) ==
                  tensor_mul(P, koszul_swap(P, s, 0), koszul_swap(P, t, 0)));
        }
}

TEST_CASE("arity-1 tensor_mul agrees with mul")
{
    auto pd = pu(5, 5);
    const auto& P = pres_of(pd);
    auto basis = P.basis_up_to(4);
    for (const auto& a : basis)
        for (const auto& b : basis) {
            if (P.degree(a) + P.degree(b) > P.degree_cap())
                continue;
            Element ea = make_element(P, a), eb = make_element(P, b);
            CHECK(tensor_mul(P, tensor_lift(ea), tensor_lift(eb)) ==
                  tensor_lift(mul(P, ea, eb)));
        }
}
