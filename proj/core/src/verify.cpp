#include "isgkit/verify.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace isgkit {

namespace {

using Opt = std::optional<ElementId>;

constexpr std::array kLawNames{"distributive", "lemma1", "lemma2", "theorem", "prop17", "prop20"};
constexpr std::array kVerdictNames{"holds", "fails", "holds-within-budget", "hypothesis-not-established"};
constexpr std::array kClauseNames{
    "left-distributivity",  "right-distributivity",   "lemma1-meet-fx",
    "lemma1-meet-fy",       "lemma1-f-idempotent",    "lemma2-meet",
    "lemma2-fx-fy",         "theorem-distributes",    "theorem-component-f",
    "theorem-component-meet", "theorem-idempotent-join", "prop17-join",
};

template <typename Enum, std::size_t N>
std::optional<Enum> parse_name(const std::array<const char*, N>& names, std::string_view text)
{
    for (std::size_t i = 0; i < N; ++i)
        if (text == names[i])
            return static_cast<Enum>(i);
    return std::nullopt;
}

Verdict settle(std::uint64_t failures, bool complete)
{
    if (failures > 0)
        return Verdict::fails;
    return complete ? Verdict::holds : Verdict::holds_within_budget;
}

// Accumulates failures, keeping the first witness in enumeration order.
struct Tally
{
    std::uint64_t failures = 0;
    std::optional<Witness> first;

    void check(Opt lhs, Opt rhs, Witness w)
    {
        if (lhs == rhs)
            return;
        ++failures;
        if (!first) {
            w.lhs = lhs;
            w.rhs = rhs;
            first = std::move(w);
        }
    }
};

std::vector<ElementSet> all_downsets(const NaturalOrder& order)
{
    std::vector<ElementSet> pools;
    pools.reserve(order.size());
    for (std::size_t t = 0; t < order.size(); ++t)
        pools.push_back(order.downset(element(t)));
    return pools;
}

ElementSet left_idempotents(const InverseSemigroup& s, const ElementSet& xs)
{
    ElementSet out(s.size());
    for (ElementId x : xs)
        out.insert(s.product(x, s.inverse(x)));
    return out;
}

LawReport distributivity_over(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget,
                              const std::vector<ElementId>& domain)
{
    SubsetStream stream(s.size(), domain, budget, all_downsets(order));
    LawReport report;
    report.law = Law::distributivity;
    report.budget = budget;
    Tally left, right;

    const std::uint64_t per_subset = 2 * domain.size();
    ElementSet xs;
    while (stream.next(xs)) {
        report.cases_checked += per_subset;
        const ExtremumResult joined = join(order, xs);
        if (!joined)
            continue;
        report.cases_applicable += per_subset;
        if (xs.empty())
            report.empty_set_cases += per_subset;
        const ElementId w = joined.value();
        for (ElementId m : domain) {
            Witness base;
            base.s = m;
            base.subset = xs;
            base.clause = Clause::left_distributivity;
            left.check(s.product(m, w), join(order, translate_left(s, m, xs)).witness(), base);
            base.clause = Clause::right_distributivity;
            right.check(s.product(w, m), join(order, translate_right(s, xs, m)).witness(), base);
        }
    }

    report.failures = left.failures;
    report.witness = left.first;
    report.verdict = settle(left.failures, stream.complete());
    report.mirror = SideReport{settle(right.failures, stream.complete()), right.first, right.failures};
    return report;
}

// lemma2 and theorem assume infinite distributivity; establish it under the same budget.
std::optional<LawReport> gate(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget,
                              Law law, Verdict& hypothesis)
{
    hypothesis = is_infinitely_distributive(s, order, budget).verdict;
    if (hypothesis != Verdict::fails)
        return std::nullopt;
    LawReport report;
    report.law = law;
    report.verdict = Verdict::hypothesis_not_established;
    report.budget = budget;
    report.hypothesis = hypothesis;
    return report;
}

}  // namespace

const char* to_string(Law law) noexcept { return kLawNames.at(static_cast<std::size_t>(law)); }
const char* to_string(Verdict verdict) noexcept { return kVerdictNames.at(static_cast<std::size_t>(verdict)); }
const char* to_string(Clause clause) noexcept { return kClauseNames.at(static_cast<std::size_t>(clause)); }

std::optional<Law> parse_law(std::string_view text)
{
    if (text == "distributivity")
        return Law::distributivity;
    return parse_name<Law>(kLawNames, text);
}

std::optional<Verdict> parse_verdict(std::string_view text) { return parse_name<Verdict>(kVerdictNames, text); }
std::optional<Clause> parse_clause(std::string_view text) { return parse_name<Clause>(kClauseNames, text); }

bool passed(Verdict v) noexcept
{
    return v == Verdict::holds || v == Verdict::holds_within_budget;
}

LawReport is_infinitely_distributive(const InverseSemigroup& s, const NaturalOrder& order,
                                     const SubsetBudget& budget)
{
    return distributivity_over(s, order, budget, s.elements());
}

LawReport idempotent_distributivity(const InverseSemigroup& s, const NaturalOrder& order,
                                    const SubsetBudget& budget)
{
    return distributivity_over(s, order, budget, idempotents(s).to_vector());
}

ExtremumResult lemma1_f(const InverseSemigroup& s, const NaturalOrder& order, ElementId x, ElementId y)
{
    const ElementId top = s.product(s.product(x, s.inverse(x)), s.product(y, s.inverse(y)));
    ElementSet candidates(s.size());
    for (ElementId g : order.downset(top)) {
        if (s.product(g, x) != s.product(g, y))
            continue;
        if (!s.is_idempotent(g))
            throw std::logic_error("element below an idempotent is not idempotent");
        candidates.insert(g);
    }
    return join(order, candidates);
}

ExtremumResult meet_via_lemma1(const InverseSemigroup& s, const NaturalOrder& order, ElementId x, ElementId y)
{
    ExtremumResult f = lemma1_f(s, order, x, y);
    if (!f)
        return f;
    const ElementId fx = s.product(f.value(), x);
    const ElementId fy = s.product(f.value(), y);
    if (fx != fy)
        return ExtremumResult::missing(ExtremumResult::Reason::no_extremum, ElementSet(s.size(), {fx, fy}));
    return ExtremumResult::found(fx);
}

LawReport check_lemma1(const InverseSemigroup& s, const NaturalOrder& order)
{
    LawReport report;
    report.law = Law::lemma1;
    Tally tally;
    for (ElementId x : s.elements())
        for (ElementId y : s.elements()) {
            ++report.cases_checked;
            const ExtremumResult m = meet(order, x, y);
            if (!m)
                continue;
            ++report.cases_applicable;
            const ElementId mv = m.value();
            const ExtremumResult f = lemma1_f(s, order, x, y);
            Opt fx, fy;
            if (f) {
                fx = s.product(f.value(), x);
                fy = s.product(f.value(), y);
            }
            Witness w;
            w.x = x;
            w.y = y;
            w.clause = Clause::lemma1_f_idempotent;
            tally.check(s.product(mv, s.inverse(mv)), f.witness(), w);
            w.clause = Clause::lemma1_meet_fx;
            tally.check(mv, fx, w);
            w.clause = Clause::lemma1_meet_fy;
            tally.check(mv, fy, w);
        }
    report.failures = tally.failures;
    report.witness = tally.first;
    report.verdict = settle(tally.failures, true);
    return report;
}

LawReport check_lemma2(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget)
{
    Verdict hypothesis{};
    if (auto refused = gate(s, order, budget, Law::lemma2, hypothesis))
        return *refused;

    LawReport report;
    report.law = Law::lemma2;
    report.budget = budget;
    report.hypothesis = hypothesis;
    Tally tally;
    for (ElementId x : s.elements())
        for (ElementId y : s.elements()) {
            ++report.cases_checked;
            const ExtremumResult f = lemma1_f(s, order, x, y);
            if (!f)
                continue;
            ++report.cases_applicable;
            const ElementId fx = s.product(f.value(), x);
            Witness w;
            w.x = x;
            w.y = y;
            w.clause = Clause::lemma2_meet;
            tally.check(fx, meet(order, x, y).witness(), w);
            w.clause = Clause::lemma2_fx_fy;
            tally.check(fx, s.product(f.value(), y), w);
        }
    report.failures = tally.failures;
    report.witness = tally.first;
    report.verdict = settle(tally.failures, hypothesis == Verdict::holds);
    return report;
}

LawReport check_theorem(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget)
{
    Verdict hypothesis{};
    if (auto refused = gate(s, order, budget, Law::theorem, hypothesis))
        return *refused;

    LawReport report;
    report.law = Law::theorem;
    report.budget = budget;
    report.hypothesis = hypothesis;
    Tally tally;

    SubsetStream stream(s.size(), s.elements(), budget, all_downsets(order));
    ElementSet family;
    while (stream.next(family)) {
        report.cases_checked += s.size();
        const ExtremumResult joined = join(order, family);
        if (!joined)
            continue;
        const ElementId yv = joined.value();

        Witness per_family;
        per_family.subset = family;
        per_family.clause = Clause::theorem_idempotent_join;
        tally.check(s.product(yv, s.inverse(yv)), join(order, left_idempotents(s, family)).witness(),
                    per_family);

        for (ElementId x : s.elements()) {
            const ExtremumResult top_meet = meet(order, x, yv);
            if (!top_meet)
                continue;
            ++report.cases_applicable;
            if (family.empty())
                ++report.empty_set_cases;
            const ElementId m = top_meet.value();

            Witness w;
            w.x = x;
            w.subset = family;
            const ExtremumResult f = lemma1_f(s, order, x, yv);
            if (!f) {
                w.y = yv;
                w.clause = Clause::lemma1_f_idempotent;
                tally.check(s.product(m, s.inverse(m)), std::nullopt, w);
                continue;
            }

            ElementSet meets(s.size());
            bool all_meets = true;
            for (ElementId yi : family) {
                const ElementId ei_f = s.product(s.product(yi, s.inverse(yi)), f.value());
                const ExtremumResult mi = meet(order, x, yi);
                w.member = yi;
                w.clause = Clause::theorem_component_f;
                tally.check(ei_f, lemma1_f(s, order, x, yi).witness(), w);
                w.clause = Clause::theorem_component_meet;
                tally.check(s.product(ei_f, x), mi.witness(), w);
                if (mi)
                    meets.insert(mi.value());
                else
                    all_meets = false;
            }
            w.member.reset();
            w.clause = Clause::theorem_distributes;
            tally.check(m, all_meets ? join(order, meets).witness() : std::nullopt, w);
        }
    }
    report.failures = tally.failures;
    report.witness = tally.first;
    report.verdict = settle(tally.failures, stream.complete() && hypothesis == Verdict::holds);
    return report;
}

LawReport check_prop17(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget)
{
    LawReport report;
    report.law = Law::prop17;
    report.budget = budget;
    Tally tally;
    SubsetStream stream(s.size(), s.elements(), budget, all_downsets(order));
    ElementSet xs;
    while (stream.next(xs)) {
        ++report.cases_checked;
        const ExtremumResult joined = join(order, xs);
        if (!joined)
            continue;
        ++report.cases_applicable;
        if (xs.empty())
            ++report.empty_set_cases;
        const ElementId w = joined.value();
        Witness wit;
        wit.clause = Clause::prop17_join;
        wit.subset = xs;
        tally.check(s.product(w, s.inverse(w)), join(order, left_idempotents(s, xs)).witness(), wit);
    }
    report.failures = tally.failures;
    report.witness = tally.first;
    report.verdict = settle(tally.failures, stream.complete());
    return report;
}

LawReport check_prop20_corpus(std::span<const NamedSemigroup> corpus, const SubsetBudget& budget)
{
    LawReport report;
    report.law = Law::prop20;
    report.budget = budget;
    bool complete = true;
    for (const auto& member : corpus) {
        const NaturalOrder order(member.semigroup);
        const LawReport on_e = idempotent_distributivity(member.semigroup, order, budget);
        const LawReport on_s = is_infinitely_distributive(member.semigroup, order, budget);
        report.corpus.push_back(CorpusEntry{member.name, on_e.verdict, on_s.verdict});
        ++report.cases_checked;
        if (!passed(on_e.verdict))
            continue;
        ++report.cases_applicable;
        complete = complete && on_e.verdict == Verdict::holds && on_s.verdict != Verdict::holds_within_budget;
        if (on_s.verdict == Verdict::fails) {
            ++report.failures;
            if (!report.witness) {
                report.witness = on_s.witness;
                report.witness->semigroup = member.name;
            }
        }
    }
    report.verdict = settle(report.failures, complete);
    return report;
}

LawReport check_law(Law law, const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget,
                    std::string_view name)
{
    switch (law) {
        case Law::distributivity:
            return is_infinitely_distributive(s, order, budget);
        case Law::lemma1:
            return check_lemma1(s, order);
        case Law::lemma2:
            return check_lemma2(s, order, budget);
        case Law::theorem:
            return check_theorem(s, order, budget);
        case Law::prop17:
            return check_prop17(s, order, budget);
        case Law::prop20: {
            const std::array corpus{NamedSemigroup{std::string(name), s}};
            return check_prop20_corpus(corpus, budget);
        }
    }
    throw std::invalid_argument("unknown law");
}

}  // namespace isgkit
