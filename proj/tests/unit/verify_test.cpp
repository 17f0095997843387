#include "isgkit/verify.hpp"

#include <gtest/gtest.h>

#include "isgkit/constructors.hpp"
#include "isgkit/error.hpp"
#include "support/oracles.hpp"

namespace isgkit {
namespace {

using testing::brute_join;
using testing::brute_meet;
using testing::corpus;

SubsetBudget budget_for(const InverseSemigroup& s)
{
    return s.size() <= 12 ? SubsetBudget::exhaustive() : SubsetBudget::bounded(2, 200, 1);
}

ElementId id(const InverseSemigroup& s, std::string_view label)
{
    auto e = s.find_label(label);
    EXPECT_TRUE(e.has_value()) << label;
    return e.value_or(element(0));
}

// Left distributivity over every subset, using only table products.
bool brute_left_distributive(const InverseSemigroup& s)
{
    const std::size_t n = s.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<ElementId> xs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U)
                xs.push_back(element(i));
        const auto w = brute_join(s, xs);
        if (!w)
            continue;
        for (ElementId m : s.elements()) {
            std::vector<ElementId> translated;
            for (ElementId x : xs)
                translated.push_back(s.product(m, x));
            if (brute_join(s, translated) != s.product(m, *w))
                return false;
        }
    }
    return true;
}

TEST(Distributivity, SmallFixturesHold)
{
    for (const char* name : {"i2", "c3", "b2", "chain3"}) {
        const auto s = builtin(name);
        const NaturalOrder order(s);
        const auto r = is_infinitely_distributive(s, order, SubsetBudget::exhaustive());
        EXPECT_EQ(r.verdict, Verdict::holds) << name;
        EXPECT_FALSE(r.witness) << name;
        ASSERT_TRUE(r.mirror);
        EXPECT_EQ(r.mirror->verdict, Verdict::holds) << name;
    }
}

TEST(Distributivity, I2CountsEveryCase)
{
    const auto s = builtin("i2");
    const auto r = is_infinitely_distributive(s, NaturalOrder(s), SubsetBudget::exhaustive());
    EXPECT_EQ(r.cases_checked, 128U * 7 * 2);
    EXPECT_EQ(r.failures, 0U);
}

TEST(Distributivity, PentagonWitness)
{
    const auto s = builtin("n5");
    const NaturalOrder order(s);
    const auto r = is_infinitely_distributive(s, order, SubsetBudget::exhaustive());
    ASSERT_EQ(r.verdict, Verdict::fails);
    ASSERT_TRUE(r.witness);
    const Witness& w = *r.witness;
    EXPECT_EQ(w.clause, Clause::left_distributivity);
    EXPECT_EQ(w.s, id(s, "c"));
    EXPECT_EQ(w.subset, ElementSet(s.size(), {id(s, "a"), id(s, "b")}));
    EXPECT_EQ(w.lhs, id(s, "c"));
    EXPECT_EQ(w.rhs, id(s, "a"));
    EXPECT_TRUE(replay(s, order, w));
}

TEST(Distributivity, DiamondWitness)
{
    const auto s = builtin("m3");
    const NaturalOrder order(s);
    const auto r = is_infinitely_distributive(s, order, SubsetBudget::exhaustive());
    ASSERT_EQ(r.verdict, Verdict::fails);
    const Witness& w = *r.witness;
    EXPECT_EQ(w.s, id(s, "c"));
    EXPECT_EQ(w.subset, ElementSet(s.size(), {id(s, "a"), id(s, "b")}));
    EXPECT_EQ(w.lhs, id(s, "c"));
    EXPECT_EQ(w.rhs, id(s, "0"));
    EXPECT_TRUE(replay(s, order, w));
    ASSERT_TRUE(r.mirror);
    EXPECT_EQ(r.mirror->verdict, Verdict::fails);
    EXPECT_TRUE(replay(s, order, *r.mirror->witness));
}

TEST(Distributivity, AgreesWithBruteForce)
{
    for (const auto& [name, s] : corpus()) {
        if (s.size() > 12)
            continue;
        const auto r = is_infinitely_distributive(s, NaturalOrder(s), SubsetBudget::exhaustive());
        EXPECT_EQ(r.verdict == Verdict::holds, brute_left_distributive(s)) << name;
        EXPECT_EQ(r.verdict == Verdict::holds, testing::known_distributive(name)) << name;
    }
}

TEST(Distributivity, BoundedNeverOverclaims)
{
    const auto s = builtin("i3");
    const auto r = is_infinitely_distributive(s, NaturalOrder(s), SubsetBudget::bounded(2));
    EXPECT_EQ(r.verdict, Verdict::holds_within_budget);
}

TEST(Distributivity, MonotoneBudget)
{
    for (const char* name : {"n5", "m3"}) {
        const auto s = builtin(name);
        const NaturalOrder order(s);
        bool failed = false;
        for (const auto& budget : {SubsetBudget::bounded(1), SubsetBudget::bounded(2), SubsetBudget::bounded(3),
                                   SubsetBudget::bounded(2, 50, 9), SubsetBudget::exhaustive()}) {
            const auto r = is_infinitely_distributive(s, order, budget);
            if (failed)
                EXPECT_EQ(r.verdict, Verdict::fails) << name;
            failed = failed || r.verdict == Verdict::fails;
        }
        EXPECT_TRUE(failed) << name;
    }
}

TEST(Distributivity, RefusesOversizedExhaustive)
{
    const auto s = builtin("i3");
    EXPECT_THROW(is_infinitely_distributive(s, NaturalOrder(s), SubsetBudget::exhaustive()), BudgetError);
}

TEST(Lemma1F, Examples)
{
    const auto s = builtin("i2");
    const NaturalOrder order(s);
    const ElementId e = id(s, "[0,-]");
    EXPECT_EQ(lemma1_f(s, order, e, e).witness(), e);
    EXPECT_EQ(lemma1_f(s, order, id(s, "[0,1]"), id(s, "[1,0]")).witness(), id(s, "[-,-]"));
    EXPECT_EQ(lemma1_f(s, order, id(s, "[0,1]"), e).witness(), e);
}

TEST(Lemma1F, MissingWithoutMeet)
{
    const auto s = testing::split4();
    const NaturalOrder order(s);
    const auto f = lemma1_f(s, order, id(s, "[2,1,0,3]"), id(s, "[0,1,2,3]"));
    EXPECT_FALSE(f.exists());
    EXPECT_FALSE(meet_via_lemma1(s, order, id(s, "[2,1,0,3]"), id(s, "[0,1,2,3]")).exists());
}

TEST(MeetViaLemma1, Examples)
{
    const auto s = builtin("i2");
    const NaturalOrder order(s);
    for (ElementId x : s.elements())
        EXPECT_EQ(meet_via_lemma1(s, order, x, x).witness(), x);
    EXPECT_EQ(meet_via_lemma1(s, order, id(s, "[0,1]"), id(s, "[1,0]")), meet(order, id(s, "[0,1]"), id(s, "[1,0]")));
}

TEST(MeetViaLemma1, MatchesLatticeMeetsWithoutDistributivity)
{
    for (const char* name : {"n5", "m3"}) {
        const auto s = builtin(name);
        const NaturalOrder order(s);
        const auto& table = std::string(name) == "n5" ? testing::kPentagonMeet : testing::kDiamondMeet;
        for (ElementId x : s.elements())
            for (ElementId y : s.elements())
                EXPECT_EQ(meet_via_lemma1(s, order, x, y).witness(), element(table[index(x) * 5 + index(y)]))
                    << name;
    }
}

TEST(MeetViaLemma1, OracleEquivalenceOnDistributiveMembers)
{
    for (const auto& [name, s] : corpus()) {
        if (!testing::known_distributive(name))
            continue;
        const NaturalOrder order(s);
        for (ElementId x : s.elements())
            for (ElementId y : s.elements()) {
                const auto via = meet_via_lemma1(s, order, x, y);
                ASSERT_EQ(via.witness(), brute_meet(s, x, y)) << name;
                ASSERT_TRUE(via.same_outcome(meet(order, x, y))) << name;
            }
    }
}

TEST(MeetViaLemma1, I3AgainstRestrictionMeet)
{
    const auto s = builtin("i3");
    const NaturalOrder order(s);
    for (ElementId x : s.elements())
        for (ElementId y : s.elements()) {
            const auto via = meet_via_lemma1(s, order, x, y);
            ASSERT_TRUE(via.exists());
            EXPECT_EQ(testing::images_of(s.model(via.value())),
                      testing::restriction_meet(testing::images_of(s.model(x)), testing::images_of(s.model(y))));
        }
}

TEST(Lemma1, HoldsOnEveryCorpusMember)
{
    for (const auto& [name, s] : corpus()) {
        const auto r = check_lemma1(s, NaturalOrder(s));
        EXPECT_EQ(r.verdict, Verdict::holds) << name;
        EXPECT_EQ(r.cases_checked, s.size() * s.size()) << name;
        EXPECT_EQ(r.failures, 0U) << name;
    }
}

TEST(Lemma1, CyclicGroupOnlyDiagonalMeets)
{
    const auto s = builtin("c3");
    const auto r = check_lemma1(s, NaturalOrder(s));
    EXPECT_EQ(r.cases_applicable, 3U);
}

TEST(Lemma2, HoldsOnDistributiveMembers)
{
    for (const char* name : {"i2", "c3", "c4", "b2", "fork4", "chain3"}) {
        const auto s = builtin(name);
        const auto r = check_lemma2(s, NaturalOrder(s), SubsetBudget::exhaustive());
        EXPECT_EQ(r.verdict, Verdict::holds) << name;
        EXPECT_EQ(r.hypothesis, Verdict::holds) << name;
    }
    const auto i2 = builtin("i2");
    EXPECT_EQ(check_lemma2(i2, NaturalOrder(i2), SubsetBudget::exhaustive()).cases_checked, 49U);
}

TEST(Lemma2, GroupPairsReduceToDiagonal)
{
    const auto s = builtin("c4");
    const auto r = check_lemma2(s, NaturalOrder(s), SubsetBudget::exhaustive());
    EXPECT_EQ(r.cases_applicable, 4U);
}

TEST(Lemma2, HypothesisGate)
{
    for (const char* name : {"n5", "m3"}) {
        const auto s = builtin(name);
        const NaturalOrder order(s);
        const auto lemma = check_lemma2(s, order, SubsetBudget::exhaustive());
        EXPECT_EQ(lemma.verdict, Verdict::hypothesis_not_established) << name;
        EXPECT_EQ(lemma.hypothesis, Verdict::fails) << name;
        EXPECT_FALSE(lemma.witness);
        EXPECT_EQ(check_theorem(s, order, SubsetBudget::exhaustive()).verdict, Verdict::hypothesis_not_established);
    }
}

TEST(Theorem, ExhaustiveOnI2)
{
    const auto s = builtin("i2");
    const auto r = check_theorem(s, NaturalOrder(s), SubsetBudget::exhaustive());
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(r.failures, 0U);
    EXPECT_EQ(r.cases_checked, 128U * 7);
    EXPECT_GT(r.cases_applicable, 0U);
}

TEST(Theorem, WorkedExamples)
{
    const auto s = builtin("i2");
    const NaturalOrder order(s);
    const ElementSet y(s.size(), {id(s, "[0,-]"), id(s, "[-,1]")});
    const ElementId yv = join(order, y).value();
    EXPECT_EQ(yv, id(s, "[0,1]"));
    for (const char* x : {"[0,1]", "[1,0]"}) {
        ElementSet meets(s.size());
        for (ElementId yi : y)
            meets.insert(meet(order, id(s, x), yi).value());
        EXPECT_EQ(meet(order, id(s, x), yv), join(order, meets)) << x;
    }
    EXPECT_EQ(meet(order, id(s, "[1,0]"), yv).witness(), id(s, "[-,-]"));
}

TEST(Theorem, HoldsAcrossCorpus)
{
    for (const auto& [name, s] : corpus()) {
        if (!testing::known_distributive(name) || s.size() > 12)
            continue;
        const auto r = check_theorem(s, NaturalOrder(s), SubsetBudget::exhaustive());
        EXPECT_EQ(r.verdict, Verdict::holds) << name;
    }
}

TEST(Prop17, HoldsAcrossCorpus)
{
    for (const auto& [name, s] : corpus()) {
        const auto budget = budget_for(s);
        const auto r = check_prop17(s, NaturalOrder(s), budget);
        EXPECT_EQ(r.failures, 0U) << name;
        EXPECT_EQ(r.verdict, budget.mode == SubsetBudget::Mode::exhaustive ? Verdict::holds
                                                                           : Verdict::holds_within_budget)
            << name;
    }
}

TEST(Prop17, EmptySetCounted)
{
    const auto s = builtin("b2");
    auto budget = SubsetBudget::exhaustive();
    EXPECT_EQ(check_prop17(s, NaturalOrder(s), budget).empty_set_cases, 1U);
    budget.include_empty_set = false;
    const auto r = check_prop17(s, NaturalOrder(s), budget);
    EXPECT_EQ(r.empty_set_cases, 0U);
    EXPECT_EQ(r.verdict, Verdict::holds_within_budget);
}

TEST(Prop20, NoCounterexampleInCorpus)
{
    std::vector<NamedSemigroup> members;
    for (auto& m : corpus())
        if (m.semigroup.size() <= 12)
            members.push_back(std::move(m));
    const auto r = check_prop20_corpus(members, SubsetBudget::exhaustive());
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(r.failures, 0U);
    ASSERT_EQ(r.corpus.size(), members.size());
    for (const auto& entry : r.corpus) {
        const bool bad = testing::known_distributive(entry.name) ? false : true;
        EXPECT_EQ(entry.idempotents == Verdict::fails, bad) << entry.name;
        EXPECT_EQ(entry.semigroup == Verdict::fails, bad) << entry.name;
    }
}

TEST(Prop20, SingleMemberViaDispatch)
{
    const auto s = builtin("c3");
    const auto r = check_law(Law::prop20, s, NaturalOrder(s), SubsetBudget::exhaustive(), "c3");
    ASSERT_EQ(r.corpus.size(), 1U);
    EXPECT_EQ(r.corpus[0].name, "c3");
    EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(Determinism, RepeatedRunsAgree)
{
    const auto s = builtin("i3");
    const NaturalOrder order(s);
    const auto budget = SubsetBudget::bounded(1, 300, 17);
    EXPECT_EQ(check_theorem(s, order, budget), check_theorem(s, order, budget));
    EXPECT_EQ(check_prop17(s, order, budget), check_prop17(s, order, budget));
}

TEST(Replay, RejectsTamperedWitness)
{
    const auto s = builtin("n5");
    const NaturalOrder order(s);
    Witness w = *is_infinitely_distributive(s, order, SubsetBudget::exhaustive()).witness;
    EXPECT_TRUE(replay(s, order, w));
    w.rhs = w.lhs;
    EXPECT_FALSE(replay(s, order, w));
    w = *is_infinitely_distributive(s, order, SubsetBudget::exhaustive()).witness;
    w.s = id(s, "1");
    EXPECT_FALSE(replay(s, order, w));
}

TEST(Names, RoundTrip)
{
    for (Law l : {Law::distributivity, Law::lemma1, Law::lemma2, Law::theorem, Law::prop17, Law::prop20})
        EXPECT_EQ(parse_law(to_string(l)), l);
    EXPECT_EQ(parse_law("distributivity"), Law::distributivity);
    EXPECT_FALSE(parse_law("lemma3"));
    for (Verdict v : {Verdict::holds, Verdict::fails, Verdict::holds_within_budget,
                      Verdict::hypothesis_not_established})
        EXPECT_EQ(parse_verdict(to_string(v)), v);
    for (int c = 0; c <= static_cast<int>(Clause::prop17_join); ++c)
        EXPECT_EQ(parse_clause(to_string(static_cast<Clause>(c))), static_cast<Clause>(c));
}

}  // namespace
}  // namespace isgkit
