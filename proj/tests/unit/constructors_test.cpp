#include "isgkit/constructors.hpp"

#include <gtest/gtest.h>

#include <memory>

#include "isgkit/error.hpp"
#include "support/oracles.hpp"

namespace isgkit {
namespace {

TEST(SymmetricInverse, SizesMatchFormula)
{
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto s = symmetric_inverse_monoid(n);
        EXPECT_EQ(s.size(), testing::symmetric_inverse_size(static_cast<int>(n))) << n;
        EXPECT_EQ(idempotents(s).count(), std::size_t{1} << n) << n;
    }
    EXPECT_EQ(testing::symmetric_inverse_size(3), 34U);
    EXPECT_THROW(symmetric_inverse_monoid(6), InputError);
}

TEST(SymmetricInverse, CarrierMatchesBruteForce)
{
    for (int n = 0; n <= 3; ++n) {
        const auto s = symmetric_inverse_monoid(static_cast<std::size_t>(n));
        std::set<testing::Images> carrier;
        for (const auto& p : s.models())
            carrier.insert(testing::images_of(p));
        EXPECT_EQ(carrier, testing::brute_force_partial_bijections(n));
    }
}

TEST(SymmetricInverse, ProductsMatchRawComposition)
{
    const auto s = symmetric_inverse_monoid(3);
    for (ElementId a : s.elements())
        for (ElementId b : s.elements())
            EXPECT_EQ(testing::images_of(s.model(s.product(a, b))),
                      testing::raw_compose(testing::images_of(s.model(a)), testing::images_of(s.model(b))));
}

TEST(Semilattice, PentagonAndDiamondTables)
{
    const auto n5 = builtin("n5");
    const auto m3 = builtin("m3");
    for (std::size_t i = 0; i < 25; ++i) {
        EXPECT_EQ(n5.product_table()[i], testing::kPentagonMeet[i]) << i;
        EXPECT_EQ(m3.product_table()[i], testing::kDiamondMeet[i]) << i;
    }
    EXPECT_EQ(std::vector<std::string>(n5.labels().begin(), n5.labels().end()), (std::vector<std::string>{"0", "a", "b", "c", "1"}));
}

TEST(Semilattice, FromMeetTable)
{
    const auto s = semilattice_from_meet_table(5, testing::kPentagonMeet);
    EXPECT_EQ(s, semilattice_from_meet_table(5, testing::kPentagonMeet));
    for (ElementId a : s.elements())
        EXPECT_EQ(s.inverse(a), a);
}

TEST(Semilattice, RejectsNonSemilattices)
{
    // not commutative
    EXPECT_THROW(semilattice_from_meet_table(2, {0, 0, 1, 1}), AxiomError);
    // not idempotent
    EXPECT_THROW(semilattice_from_meet_table(2, {1, 1, 1, 1}), AxiomError);
    EXPECT_THROW(semilattice_from_meet_table(2, {0, 0, 0}), InputError);
    EXPECT_THROW(semilattice_from_meet_table(2, {0, 0, 0, 7}), InputError);
}

TEST(Chains, AreTotallyOrdered)
{
    const auto s = builtin("chain4");
    for (ElementId a : s.elements())
        for (ElementId b : s.elements())
            EXPECT_EQ(s.product(a, b), element(std::min(index(a), index(b))));
    EXPECT_THROW(builtin("chain0"), InputError);
}

TEST(CyclicGroup, Structure)
{
    const auto s = cyclic_group(4);
    EXPECT_EQ(std::vector<std::string>(s.labels().begin(), s.labels().end()), (std::vector<std::string>{"e", "g", "g^2", "g^3"}));
    EXPECT_EQ(s.product(*s.find_label("g"), *s.find_label("g^3")), *s.find_label("e"));
    EXPECT_EQ(s.inverse(*s.find_label("g")), *s.find_label("g^3"));
    EXPECT_EQ(idempotents(s).count(), 1U);
    EXPECT_THROW(cyclic_group(0), InputError);
}

TEST(Brandt, Products)
{
    const auto s = brandt(2);
    ASSERT_EQ(s.size(), 5U);
    auto e = [&](std::string_view l) { return *s.find_label(l); };
    EXPECT_EQ(s.product(e("(1,2)"), e("(2,1)")), e("(1,1)"));
    EXPECT_EQ(s.product(e("(1,2)"), e("(1,2)")), e("0"));
    EXPECT_EQ(s.inverse(e("(1,2)")), e("(2,1)"));
    EXPECT_EQ(idempotents(s).count(), 3U);
    EXPECT_EQ(brandt(3).size(), 10U);
    EXPECT_THROW(brandt(1), InputError);
}

TEST(AdjoinZero, AppendsAbsorbingElement)
{
    const auto s = adjoin_zero(cyclic_group(2));
    ASSERT_EQ(s.size(), 3U);
    const ElementId z = element(2);
    EXPECT_EQ(s.label(z), "z");
    for (ElementId a : s.elements()) {
        EXPECT_EQ(s.product(a, z), z);
        EXPECT_EQ(s.product(z, a), z);
    }
    // a label already called z forces a fresh one
    const auto twice = adjoin_zero(s);
    EXPECT_EQ(twice.label(element(3)), "z'");
}

TEST(Builtins, AllSatisfyTheAxioms)
{
    for (const char* name : {"n5", "m3", "fork4", "chain1", "chain3", "i0", "i1", "i2", "i3", "i4", "c1", "c5",
                             "b2", "b3"})
        EXPECT_NO_THROW(validate_axioms(builtin(name))) << name;
    EXPECT_NO_THROW(validate_axioms(adjoin_zero(brandt(2))));
    EXPECT_NO_THROW(validate_axioms(testing::split4()));
    EXPECT_THROW(builtin("x9"), InputError);
    EXPECT_THROW(builtin("i"), InputError);
}

TEST(Build, FamilySpecs)
{
    using F = FamilySpec::Family;
    FamilySpec spec;
    spec.family = F::symmetric_inverse;
    spec.n = 2;
    EXPECT_EQ(build(spec).size(), 7U);
    spec.n.reset();
    EXPECT_THROW(build(spec), InputError);

    spec = {};
    spec.family = F::semilattice;
    spec.name = "n5";
    EXPECT_EQ(build(spec), builtin("n5"));
    spec.name = "c3";
    EXPECT_THROW(build(spec), InputError);

    spec = {};
    spec.family = F::adjoin_zero;
    EXPECT_THROW(build(spec), InputError);
    spec.inner = std::make_shared<const InverseSemigroup>(builtin("c3"));
    EXPECT_EQ(build(spec).size(), 4U);

    for (F f : {F::symmetric_inverse, F::semilattice, F::cyclic_group, F::brandt, F::adjoin_zero, F::builtin})
        EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_FALSE(parse_family("free"));
}

}  // namespace
}  // namespace isgkit
