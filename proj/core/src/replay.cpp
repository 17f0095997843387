#include <stdexcept>

#include "isgkit/verify.hpp"

namespace isgkit {

namespace {

using Opt = std::optional<ElementId>;

template <typename T>
const T& need(const std::optional<T>& field, const char* name)
{
    if (!field)
        throw std::invalid_argument(std::string("witness lacks field '") + name + "'");
    return *field;
}

Opt times(const InverseSemigroup& s, Opt a, ElementId b)
{
    return a ? Opt(s.product(*a, b)) : std::nullopt;
}

Opt idempotent_of(const InverseSemigroup& s, Opt a)
{
    return a ? Opt(s.product(*a, s.inverse(*a))) : std::nullopt;
}

}  // namespace

std::pair<Opt, Opt> evaluate_clause(const InverseSemigroup& s, const NaturalOrder& order, const Witness& w)
{
    switch (w.clause) {
        case Clause::left_distributivity: {
            const ElementSet& xs = need(w.subset, "subset");
            const ElementId m = need(w.s, "s");
            const Opt joined = join(order, xs).witness();
            return {joined ? Opt(s.product(m, *joined)) : std::nullopt,
                    join(order, translate_left(s, m, xs)).witness()};
        }
        case Clause::right_distributivity: {
            const ElementSet& xs = need(w.subset, "subset");
            const ElementId m = need(w.s, "s");
            return {times(s, join(order, xs).witness(), m), join(order, translate_right(s, xs, m)).witness()};
        }
        case Clause::lemma1_meet_fx:
        case Clause::lemma1_meet_fy:
        case Clause::lemma1_f_idempotent:
        case Clause::lemma2_meet:
        case Clause::lemma2_fx_fy: {
            const ElementId x = need(w.x, "x");
            const ElementId y = need(w.y, "y");
            const Opt m = meet(order, x, y).witness();
            const Opt f = lemma1_f(s, order, x, y).witness();
            const Opt fx = f ? Opt(s.product(*f, x)) : std::nullopt;
            const Opt fy = f ? Opt(s.product(*f, y)) : std::nullopt;
            switch (w.clause) {
                case Clause::lemma1_meet_fx:
                    return {m, fx};
                case Clause::lemma1_meet_fy:
                    return {m, fy};
                case Clause::lemma1_f_idempotent:
                    return {idempotent_of(s, m), f};
                case Clause::lemma2_meet:
                    return {fx, m};
                default:
                    return {fx, fy};
            }
        }
        case Clause::theorem_distributes: {
            const ElementSet& family = need(w.subset, "subset");
            const ElementId x = need(w.x, "x");
            const Opt yv = join(order, family).witness();
            const Opt lhs = yv ? meet(order, x, *yv).witness() : std::nullopt;
            ElementSet meets(s.size());
            for (ElementId yi : family) {
                const Opt mi = meet(order, x, yi).witness();
                if (!mi)
                    return {lhs, std::nullopt};
                meets.insert(*mi);
            }
            return {lhs, join(order, meets).witness()};
        }
        case Clause::theorem_component_f:
        case Clause::theorem_component_meet: {
            const ElementSet& family = need(w.subset, "subset");
            const ElementId x = need(w.x, "x");
            const ElementId yi = need(w.member, "member");
            const Opt yv = join(order, family).witness();
            const Opt f = yv ? lemma1_f(s, order, x, *yv).witness() : std::nullopt;
            const Opt ei_f = f ? Opt(s.product(s.product(yi, s.inverse(yi)), *f)) : std::nullopt;
            if (w.clause == Clause::theorem_component_f)
                return {ei_f, lemma1_f(s, order, x, yi).witness()};
            return {times(s, ei_f, x), meet(order, x, yi).witness()};
        }
        case Clause::theorem_idempotent_join:
        case Clause::prop17_join: {
            const ElementSet& xs = need(w.subset, "subset");
            ElementSet lifted(s.size());
            for (ElementId x : xs)
                lifted.insert(s.product(x, s.inverse(x)));
            return {idempotent_of(s, join(order, xs).witness()), join(order, lifted).witness()};
        }
    }
    throw std::invalid_argument("unknown clause");
}

bool replay(const InverseSemigroup& s, const NaturalOrder& order, const Witness& w)
{
    const auto [lhs, rhs] = evaluate_clause(s, order, w);
    return lhs != rhs && lhs == w.lhs && rhs == w.rhs;
}

}  // namespace isgkit
