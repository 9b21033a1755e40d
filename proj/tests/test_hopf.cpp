#include <doctest.h>

#include "prequant/catalog.hpp"
#include "prequant/format.hpp"

using namespace prequant;

namespace {

PrimeData pu(int n, long long p) { return make_prime_data(GroupId{Family::PU, n, 0}, p, 8); }

TensorElement two(const Presentation& P, const Element& a, const Element& b)
{
    return tensor_concat(tensor_lift(a), tensor_lift(b), P.prime());
}

}  // namespace

TEST_CASE("coproducts of the unitary family")
{
    auto pd = pu(3, 3);
    const auto& P = pd.hopf.pres();
    Element x1 = generator_element(P, "x1");
    Element y2 = generator_element(P, "y2");
    Element x3 = generator_element(P, "x3");
    Element one = unit_element(P);

    TensorElement expected = two(P, x3, one);
    expected = add(expected, two(P, one, x3), 3);
    expected = add(expected, two(P, x1, y2), 3);
    CHECK(pd.hopf.coproduct(x3) == expected);

    TensorElement dx1 = two(P, x1, one);
    dx1 = add(dx1, two(P, one, x1), 3);
    CHECK(pd.hopf.coproduct(x1) == dx1);

    // Delta(y2^2) = y2^2 (x) 1 + 2 y2 (x) y2 + 1 (x) y2^2 (binomial oracle).
    Element y2sq = mul(P, y2, y2);
    TensorElement dy2sq = two(P, y2sq, one);
    dy2sq = add(dy2sq, scale(two(P, y2, y2), 2, 3), 3);
    dy2sq = add(dy2sq, two(P, one, y2sq), 3);
    CHECK(pd.hopf.coproduct(y2sq) == dy2sq);
}

TEST_CASE("antipode recursion on the unitary family")
{
    auto pd = pu(3, 3);
    const auto& P = pd.hopf.pres();
    Element x1 = generator_element(P, "x1");
    Element x3 = generator_element(P, "x3");

    CHECK(pd.hopf.antipode(x1) == negate(x1, 3));
    CHECK(pd.hopf.antipode(unit_element(P)) == unit_element(P));

    Element expected = add(negate(x3, 3),
                           mul(P, x1, generator_element(P, "y2")), 3);
    CHECK(pd.hopf.antipode(x3) == expected);
}

TEST_CASE("phi_star reproduces the displayed computations")
{
    for (long long p : {3LL, 5LL, 7LL}) {
        auto pd = pu(static_cast<int>(p), p);
        const auto& P = pd.hopf.pres();
        Element x1 = generator_element(P, "x1");
        Element y2 = generator_element(P, "y2");
        TensorElement expected = two(P, x1, y2);
        expected = add(expected, scale(two(P, y2, x1), static_cast<Scalar>(p - 1),
                                       static_cast<Scalar>(p)),
                       static_cast<Scalar>(p));
        CHECK(pd.hopf.phi_star(generator_element(P, "x3")) == expected);
        CHECK(pd.hopf.phi_star(x1).is_zero());
    }
}

TEST_CASE("phi_star kills primitives in the orthogonal family")
{
    auto so = make_prime_data(GroupId{Family::SO, 9, 0}, 2, 8);
    CHECK(so.hopf.phi_star(generator_element(so.hopf.pres(), "x3")).is_zero());
    for (int i = 0; i < so.hopf.pres().num_generators(); ++i)
        CHECK(so.hopf.is_primitive(generator_element(so.hopf.pres(), i)));
}

TEST_CASE("phi_star of u3 in PO(2n), n odd")
{
    auto po = make_prime_data(GroupId{Family::PO, 10, 0}, 2, 8);
    const auto& P = po.hopf.pres();
    Element v1 = generator_element(P, "v1");
    Element u2 = generator_element(P, "u2");
    TensorElement expected = two(P, v1, u2);
    expected = add(expected, two(P, u2, v1), 2);
    CHECK(po.hopf.phi_star(generator_element(P, "u3")) == expected);
}

TEST_CASE("phi_star of x3 in PE6 pairs x1 with y2")
{
    auto pe6 = make_prime_data(GroupId{Family::PE6, 0, 0}, 3, 8);
    const auto& P = pe6.hopf.pres();
    TensorElement t = pe6.hopf.phi_star(generator_element(P, "x3"));
    Monomial mx1 = P.generator_monomial(P.find("x1"));
    Monomial my2 = P.generator_monomial(P.find("y2"));
    REQUIRE(t.terms.size() == 2);
    auto a = t.terms.find(TensorMonomial{my2, mx1});
    auto b = t.terms.find(TensorMonomial{mx1, my2});
    REQUIRE(a != t.terms.end());
    REQUIRE(b != t.terms.end());
    CHECK(a->second == mod_neg(b->second, 3));  // y2 (x) x1 - x1 (x) y2 up to a unit
}

TEST_CASE("is_primitive matches the catalog tables")
{
    auto pd = pu(3, 3);
    const auto& P = pd.hopf.pres();
    CHECK(pd.hopf.is_primitive(generator_element(P, "x1")));
    CHECK(!pd.hopf.is_primitive(generator_element(P, "x3")));
}

TEST_CASE("phi_star is multiplicative")
{
    auto pd = pu(3, 3);
    const auto& P = pd.hopf.pres();
    auto basis = P.basis_up_to(4);
    for (const auto& a : basis)
        for (const auto& b : basis) {
            if (P.degree(a) + P.degree(b) > P.degree_cap())
                continue;
            Element ea = make_element(P, a), eb = make_element(P, b);
            CHECK(pd.hopf.phi_star(mul(P, ea, eb)) ==
                  tensor_mul(P, pd.hopf.phi_star(ea), pd.hopf.phi_star(eb)));
        }
}

TEST_CASE("aliased squares keep the coproduct an algebra map")
{
    auto pd = pu(2, 2);
    const auto& P = pd.hopf.pres();
    Element x1 = generator_element(P, "x1");
    Element y2 = generator_element(P, "y2");
    CHECK(tensor_mul(P, pd.hopf.coproduct(x1), pd.hopf.coproduct(x1)) == pd.hopf.coproduct(y2));
}

TEST_CASE("axiom suite passes on a cross-family sample")
{
    std::vector<std::pair<GroupId, long long>> sample = {
        {GroupId{Family::PU, 2, 0}, 2},  {GroupId{Family::PU, 3, 0}, 3},
        {GroupId{Family::PU, 4, 0}, 2},  {GroupId{Family::PU, 8, 0}, 2},
        {GroupId{Family::SUmodZ, 12, 2}, 2}, {GroupId{Family::PSp, 3, 0}, 2},
        {GroupId{Family::PSp, 4, 0}, 2}, {GroupId{Family::SO, 10, 0}, 2},
        {GroupId{Family::PO, 8, 0}, 2},  {GroupId{Family::PO, 10, 0}, 2},
        {GroupId{Family::PO, 12, 0}, 2}, {GroupId{Family::Ss, 8, 0}, 2},
        {GroupId{Family::Ss, 12, 0}, 2}, {GroupId{Family::Ss, 16, 0}, 2},
        {GroupId{Family::PE6, 0, 0}, 3}, {GroupId{Family::PE7, 0, 0}, 2},
    };
    for (const auto& [g, p] : sample) {
        auto pd = make_prime_data(g, p, 8);
        auto report = verify_axioms(pd.hopf, 8);
        INFO(to_string(g), " at p = ", p);
        for (const auto& check : report.checks) {
            INFO(check.name, " failures on ",
                 (check.failing.empty() ? std::string("-") : check.failing.front()));
            CHECK(check.failures == 0);
        }
    }
}

TEST_CASE("missing coproduct entries are reported")
{
    Presentation P(3, 8, {{"a", 2, Relation::TruncatedPolynomial, 3}});
    HopfAlgebra h(P, {});
    CHECK_THROWS_AS(h.coproduct(generator_element(P, "a")), DomainError);
}
