#include "isgkit/partial_bijection.hpp"

#include <gtest/gtest.h>

#include <random>

#include "isgkit/error.hpp"
#include "support/oracles.hpp"

namespace isgkit {
namespace {

using P = PartialBijection;

P swap2() { return P::from_images({1, 0}); }

TEST(Compose, IdentityTimesIdentity)
{
    EXPECT_EQ(compose(P::identity(2), P::identity(2)), P::identity(2));
}

TEST(Compose, SwapSquared)
{
    EXPECT_EQ(compose(swap2(), swap2()), P::identity(2));
}

TEST(Compose, AppliesRightFactorFirst)
{
    // p = id on {0}, q = swap: (pq)(0) = p(1) undefined, (pq)(1) = p(0) = 0.
    const P p = P::parse("[0,-]");
    EXPECT_EQ(compose(p, swap2()), P::parse("[-,0]"));
    EXPECT_EQ(testing::images_of(compose(p, swap2())),
              testing::raw_compose(testing::images_of(p), testing::images_of(swap2())));
}

TEST(Compose, DegreeMismatchRejected)
{
    EXPECT_THROW(compose(P::identity(2), P::identity(3)), InputError);
}

TEST(Invert, Examples)
{
    EXPECT_EQ(invert(P::identity(2)), P::identity(2));
    EXPECT_EQ(invert(P::parse("[1,-]")), P::parse("[-,0]"));
    EXPECT_EQ(invert(P(3)), P(3));
}

TEST(PartialBijection, RejectsNonInjectiveAndOutOfRange)
{
    EXPECT_THROW(P::from_images({0, 0}), InputError);
    EXPECT_THROW(P::from_images({2, -1}), InputError);
    EXPECT_THROW(P::from_images({-2, 0}), InputError);
    EXPECT_THROW(P::parse("[0,x]"), InputError);
    EXPECT_THROW(P::parse("0,1"), InputError);
}

TEST(PartialBijection, TextFormRoundTrips)
{
    for (const auto& p : all_partial_bijections(3))
        EXPECT_EQ(P::parse(p.to_string()), p);
    EXPECT_EQ(P(0).to_string(), "[]");
    EXPECT_EQ(P::parse("[2,-,0]").domain(), (std::vector<P::Point>{0, 2}));
    EXPECT_EQ(P::parse("[2,-,0]").range(), (std::vector<P::Point>{0, 2}));
}

TEST(PartialBijection, EnumerationMatchesBruteForce)
{
    for (int n = 0; n <= 4; ++n) {
        const auto all = all_partial_bijections(static_cast<std::size_t>(n));
        const auto oracle = testing::brute_force_partial_bijections(n);
        ASSERT_EQ(all.size(), oracle.size()) << n;
        EXPECT_EQ(all.size(), testing::symmetric_inverse_size(n));
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        for (const auto& p : all)
            EXPECT_TRUE(oracle.contains(testing::images_of(p)));
    }
}

// Property: group-like laws of the concrete model on random triples of I_4.
TEST(PartialBijection, ModelLaws)
{
    const auto all = all_partial_bijections(4);
    std::mt19937 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const auto& p = all[rng() % all.size()];
        const auto& q = all[rng() % all.size()];
        const auto& r = all[rng() % all.size()];
        EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
        EXPECT_EQ(invert(invert(p)), p);
        EXPECT_EQ(invert(compose(p, q)), compose(invert(q), invert(p)));
        EXPECT_EQ(compose(compose(p, invert(p)), p), p);
        // p p^-1 is the partial identity on the range of p.
        EXPECT_EQ(compose(p, invert(p)), P::partial_identity(4, p.range()));
    }
}

}  // namespace
}  // namespace isgkit
