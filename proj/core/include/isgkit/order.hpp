#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isgkit/element_set.hpp"
#include "isgkit/semigroup.hpp"

namespace isgkit {

/**
 * The natural partial order of an inverse semigroup, s <= t iff s = s s^-1 t,
 * tabulated once as per-element downsets and upsets.
 */
class NaturalOrder
{
    public:
        explicit NaturalOrder(const InverseSemigroup& s);

        std::size_t size() const noexcept { return down_.size(); }

        bool leq(ElementId s, ElementId t) const { return down_[index(t)].contains(s); }

        /// {s : s <= t}
        const ElementSet& downset(ElementId t) const { return down_.at(index(t)); }
        /// {t : s <= t}
        const ElementSet& upset(ElementId s) const { return up_.at(index(s)); }

        /// Number of pairs (s, t) with s <= t, reflexive pairs included.
        std::size_t comparable_pairs() const noexcept;

        /// Least element of the whole carrier, if there is one.
        std::optional<ElementId> minimum() const noexcept { return minimum_; }

    private:
        std::vector<ElementSet> down_;
        std::vector<ElementSet> up_;
        std::optional<ElementId> minimum_;
};

/**
 * Outcome of a join or meet query. Non-existence is a value: it records why
 * (no bound at all, or bounds without a least/greatest one) together with the
 * bound set that was scanned.
 */
class ExtremumResult
{
    public:
        enum class Reason { no_bounds, no_extremum };

        static ExtremumResult found(ElementId w) { return ExtremumResult(w); }
        static ExtremumResult missing(Reason reason, ElementSet bounds)
        {
            return ExtremumResult(reason, std::move(bounds));
        }

        bool exists() const noexcept { return witness_.has_value(); }
        explicit operator bool() const noexcept { return exists(); }

        /// Throws std::logic_error when the extremum does not exist.
        ElementId value() const;
        const std::optional<ElementId>& witness() const noexcept { return witness_; }

        /// Meaningful only when !exists().
        Reason reason() const noexcept { return reason_; }
        const ElementSet& bounds() const noexcept { return bounds_; }

        /// Same existence and, when present, the same element; diagnostics ignored.
        bool same_outcome(const ExtremumResult& other) const noexcept { return witness_ == other.witness_; }

        friend bool operator==(const ExtremumResult&, const ExtremumResult&) = default;

    private:
        explicit ExtremumResult(ElementId w) : witness_(w) {}
        ExtremumResult(Reason reason, ElementSet bounds) : reason_(reason), bounds_(std::move(bounds)) {}

        std::optional<ElementId> witness_;
        Reason reason_ = Reason::no_bounds;
        ElementSet bounds_;
};

const char* to_string(ExtremumResult::Reason reason) noexcept;

/// Definitional test s = s s^-1 t, straight from the tables.
bool natural_leq(const InverseSemigroup& s, ElementId a, ElementId b);

ElementSet downsegment(const NaturalOrder& order, ElementId t);
ElementSet upper_bounds(const NaturalOrder& order, const ElementSet& xs);
ElementSet lower_bounds(const NaturalOrder& order, const ElementSet& xs);

/// Least upper bound of `xs`; the empty join is the minimum of S when it exists.
ExtremumResult join(const NaturalOrder& order, const ElementSet& xs);

/// Greatest lower bound of {x, y}.
ExtremumResult meet(const NaturalOrder& order, ElementId x, ElementId y);

/// {s x : x in xs}
ElementSet translate_left(const InverseSemigroup& s, ElementId by, const ElementSet& xs);
/// {x s : x in xs}
ElementSet translate_right(const InverseSemigroup& s, const ElementSet& xs, ElementId by);

}  // namespace isgkit
