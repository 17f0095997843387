#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isgkit/element_set.hpp"
#include "isgkit/order.hpp"
#include "isgkit/semigroup.hpp"
#include "isgkit/subsets.hpp"

namespace isgkit {

enum class Law { distributivity, lemma1, lemma2, theorem, prop17, prop20 };

enum class Verdict { holds, fails, holds_within_budget, hypothesis_not_established };

/**
 * Which identity a witness violates. Each clause fixes the meaning of the
 * witness' two sides; `lhs` is the value the law predicts, `rhs` the value
 * the order engine produced. An absent side means "does not exist".
 *
 *   left_distributivity      s*join(X)            vs join(sX)
 *   right_distributivity     join(X)*s            vs join(Xs)
 *   lemma1_meet_fx           x^y                  vs f*x
 *   lemma1_meet_fy           x^y                  vs f*y
 *   lemma1_f_idempotent      (x^y)(x^y)^-1        vs f
 *   lemma2_meet              f*x                  vs x^y
 *   lemma2_fx_fy             f*x                  vs f*y
 *   theorem_distributes      x^join(Y)            vs join_i(x^y_i)
 *   theorem_component_f      e_i*f                vs f_i
 *   theorem_component_meet   e_i*f*x              vs x^y_i
 *   theorem_idempotent_join  join(Y)join(Y)^-1    vs join_i(e_i)
 *   prop17_join              join(X)join(X)^-1    vs join{x x^-1}
 *
 * with f the lemma1 idempotent of (x, y) (of (x, join(Y)) for the theorem
 * clauses), e_i = y_i y_i^-1 and f_i the lemma1 idempotent of (x, y_i).
 */
enum class Clause {
    left_distributivity,
    right_distributivity,
    lemma1_meet_fx,
    lemma1_meet_fy,
    lemma1_f_idempotent,
    lemma2_meet,
    lemma2_fx_fy,
    theorem_distributes,
    theorem_component_f,
    theorem_component_meet,
    theorem_idempotent_join,
    prop17_join,
};

/// A concrete counterexample, replayable through the order engine.
struct Witness
{
    Clause clause = Clause::left_distributivity;
    std::optional<ElementId> s;       ///< multiplier
    std::optional<ElementId> x;
    std::optional<ElementId> y;
    std::optional<ElementId> member;  ///< the family member y_i
    std::optional<ElementSet> subset; ///< X, or the family Y
    std::optional<ElementId> lhs;
    std::optional<ElementId> rhs;
    std::string semigroup;            ///< corpus member name, prop20 only

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Right-sided distributivity, reported next to the left-sided law.
struct SideReport
{
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;
    std::uint64_t failures = 0;

    friend bool operator==(const SideReport&, const SideReport&) = default;
};

struct CorpusEntry
{
    std::string name;
    Verdict idempotents = Verdict::holds;
    Verdict semigroup = Verdict::holds;

    friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

/**
 * Verdict of one law check.
 *
 * cases_checked counts every enumerated case; cases_applicable those whose
 * premise held (an existing join, an existing meet, ...); empty_set_cases the
 * applicable cases built on the empty subset. `witness` is the first failing
 * case in enumeration order.
 */
struct LawReport
{
    Law law = Law::distributivity;
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;
    std::uint64_t cases_checked = 0;
    std::uint64_t cases_applicable = 0;
    std::uint64_t empty_set_cases = 0;
    std::uint64_t failures = 0;
    std::optional<SubsetBudget> budget;
    std::optional<SideReport> mirror;
    std::optional<Verdict> hypothesis;
    std::vector<CorpusEntry> corpus;

    friend bool operator==(const LawReport&, const LawReport&) = default;
};

const char* to_string(Law law) noexcept;
const char* to_string(Verdict verdict) noexcept;
const char* to_string(Clause clause) noexcept;
std::optional<Law> parse_law(std::string_view text);
std::optional<Verdict> parse_verdict(std::string_view text);
std::optional<Clause> parse_clause(std::string_view text);

/// True for holds and holds-within-budget.
bool passed(Verdict v) noexcept;

struct NamedSemigroup
{
    std::string name;
    InverseSemigroup semigroup;
};

/**
 * Does multiplication distribute over every existing join?
 *
 * For each enumerated X with join w and each s, checks join(sX) = s w (the
 * reported verdict) and join(Xs) = w s (reported in `mirror`).
 */
LawReport is_infinitely_distributive(const InverseSemigroup& s, const NaturalOrder& order,
                                     const SubsetBudget& budget);

/// Same check restricted to idempotent subsets and multipliers; joins are taken in S.
LawReport idempotent_distributivity(const InverseSemigroup& s, const NaturalOrder& order,
                                    const SubsetBudget& budget);

/// join{ g <= x x^-1 y y^-1 : g x = g y }
ExtremumResult lemma1_f(const InverseSemigroup& s, const NaturalOrder& order, ElementId x, ElementId y);

/**
 * x^y computed as f x from the lemma1 idempotent f. When f exists but
 * f x != f y (possible only without distributivity) the result is missing
 * with reason no_extremum and bounds {f x, f y}.
 */
ExtremumResult meet_via_lemma1(const InverseSemigroup& s, const NaturalOrder& order, ElementId x,
                               ElementId y);

LawReport check_lemma1(const InverseSemigroup& s, const NaturalOrder& order);
LawReport check_lemma2(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget);
LawReport check_theorem(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget);
LawReport check_prop17(const InverseSemigroup& s, const NaturalOrder& order, const SubsetBudget& budget);

/// Reports any member whose idempotents distribute while the whole semigroup does not.
LawReport check_prop20_corpus(std::span<const NamedSemigroup> corpus, const SubsetBudget& budget);

/// Dispatch by law; prop20 treats `s` as a one-member corpus named `name`.
LawReport check_law(Law law, const InverseSemigroup& s, const NaturalOrder& order,
                    const SubsetBudget& budget, std::string_view name = "input");

/// Recompute both sides of a witness' clause as (lhs, rhs).
std::pair<std::optional<ElementId>, std::optional<ElementId>>
evaluate_clause(const InverseSemigroup& s, const NaturalOrder& order, const Witness& w);

/// True when the witness re-evaluates to the recorded sides and they differ.
bool replay(const InverseSemigroup& s, const NaturalOrder& order, const Witness& w);

}  // namespace isgkit
