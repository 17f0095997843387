#include "isgkit/order.hpp"

#include <stdexcept>

namespace isgkit {

namespace {

// The member of `candidates` lying below (or above) every other member, if any.
template <typename Cone>
std::optional<ElementId> extremum_of(const ElementSet& candidates, Cone cone)
{
    for (ElementId w : candidates)
        if (candidates.is_subset_of(cone(w)))
            return w;
    return std::nullopt;
}

}  // namespace

NaturalOrder::NaturalOrder(const InverseSemigroup& s)
{
    const std::size_t n = s.size();
    down_.assign(n, ElementSet(n));
    up_.assign(n, ElementSet(n));
    for (ElementId a : s.elements()) {
        const ElementId left = s.product(a, s.inverse(a));
        for (ElementId b : s.elements())
            if (s.product(left, b) == a) {
                down_[index(b)].insert(a);
                up_[index(a)].insert(b);
            }
    }
    const ElementSet all = ElementSet::full(n);
    minimum_ = extremum_of(all, [&](ElementId w) -> const ElementSet& { return up_[index(w)]; });
}

std::size_t NaturalOrder::comparable_pairs() const noexcept
{
    std::size_t total = 0;
    for (const auto& d : down_)
        total += d.count();
    return total;
}

ElementId ExtremumResult::value() const
{
    if (!witness_)
        throw std::logic_error("extremum does not exist");
    return *witness_;
}

const char* to_string(ExtremumResult::Reason reason) noexcept
{
    switch (reason) {
        case ExtremumResult::Reason::no_bounds:
            return "no bounds";
        case ExtremumResult::Reason::no_extremum:
            return "no least/greatest bound";
    }
    return "?";
}

bool natural_leq(const InverseSemigroup& s, ElementId a, ElementId b)
{
    return s.product(a, s.inverse(a), b) == a;
}

ElementSet downsegment(const NaturalOrder& order, ElementId t)
{
    return order.downset(t);
}

ElementSet upper_bounds(const NaturalOrder& order, const ElementSet& xs)
{
    ElementSet bounds = ElementSet::full(order.size());
    for (ElementId x : xs)
        bounds &= order.upset(x);
    return bounds;
}

ElementSet lower_bounds(const NaturalOrder& order, const ElementSet& xs)
{
    ElementSet bounds = ElementSet::full(order.size());
    for (ElementId x : xs)
        bounds &= order.downset(x);
    return bounds;
}

ExtremumResult join(const NaturalOrder& order, const ElementSet& xs)
{
    ElementSet bounds = upper_bounds(order, xs);
    if (bounds.empty())
        return ExtremumResult::missing(ExtremumResult::Reason::no_bounds, std::move(bounds));
    if (auto w = extremum_of(bounds, [&](ElementId u) -> const ElementSet& { return order.upset(u); }))
        return ExtremumResult::found(*w);
    return ExtremumResult::missing(ExtremumResult::Reason::no_extremum, std::move(bounds));
}

ExtremumResult meet(const NaturalOrder& order, ElementId x, ElementId y)
{
    ElementSet bounds = order.downset(x) & order.downset(y);
    if (bounds.empty())
        return ExtremumResult::missing(ExtremumResult::Reason::no_bounds, std::move(bounds));
    if (auto w = extremum_of(bounds, [&](ElementId u) -> const ElementSet& { return order.downset(u); }))
        return ExtremumResult::found(*w);
    return ExtremumResult::missing(ExtremumResult::Reason::no_extremum, std::move(bounds));
}

ElementSet translate_left(const InverseSemigroup& s, ElementId by, const ElementSet& xs)
{
    ElementSet out(s.size());
    for (ElementId x : xs)
        out.insert(s.product(by, x));
    return out;
}

ElementSet translate_right(const InverseSemigroup& s, const ElementSet& xs, ElementId by)
{
    ElementSet out(s.size());
    for (ElementId x : xs)
        out.insert(s.product(x, by));
    return out;
}

}  // namespace isgkit
