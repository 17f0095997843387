#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isgkit/element_set.hpp"
#include "isgkit/partial_bijection.hpp"

namespace isgkit {

inline constexpr std::size_t kDefaultElementCap = 100'000;

/**
 * A finite inverse semigroup given by its product and inverse tables.
 *
 * Values are immutable once built and can be shared freely between threads.
 * The only ways to obtain one are the validating factories below, so every
 * instance satisfies associativity, regularity, commuting idempotents and an
 * involutive inverse.
 *
 * Optional element labels are carried for reporting; semigroups built from
 * partial bijections also keep the concrete maps (models), which are not part
 * of equality.
 */
class InverseSemigroup
{
    public:
        std::size_t size() const noexcept { return size_; }

        ElementId product(ElementId a, ElementId b) const noexcept
        {
            return element(product_[static_cast<std::size_t>(index(a)) * size_ + index(b)]);
        }
        ElementId product(ElementId a, ElementId b, ElementId c) const noexcept
        {
            return product(product(a, b), c);
        }
        ElementId inverse(ElementId a) const noexcept { return element(inverse_[index(a)]); }

        bool is_idempotent(ElementId a) const noexcept { return product(a, a) == a; }

        /// Row-major product table, size*size entries.
        std::span<const std::uint32_t> product_table() const noexcept { return product_; }
        std::span<const std::uint32_t> inverse_table() const noexcept { return inverse_; }

        bool has_labels() const noexcept { return !labels_.empty(); }
        std::span<const std::string> labels() const noexcept { return labels_; }
        /// The element's label, or its decimal id when unlabelled.
        std::string label(ElementId a) const;
        std::optional<ElementId> find_label(std::string_view label) const;

        bool has_models() const noexcept { return !models_.empty(); }
        std::span<const PartialBijection> models() const noexcept { return models_; }
        const PartialBijection& model(ElementId a) const { return models_.at(index(a)); }
        std::optional<ElementId> find(const PartialBijection& p) const;

        std::vector<ElementId> elements() const;

        /// Tables and labels only; models are a construction detail.
        friend bool operator==(const InverseSemigroup& a, const InverseSemigroup& b)
        {
            return a.size_ == b.size_ && a.product_ == b.product_ && a.inverse_ == b.inverse_ &&
                   a.labels_ == b.labels_;
        }

    private:
        friend InverseSemigroup from_cayley_table(std::size_t, std::vector<std::uint32_t>,
                                                  std::optional<std::vector<std::uint32_t>>,
                                                  std::vector<std::string>);
        friend InverseSemigroup from_partial_bijections(std::vector<PartialBijection>);
        friend InverseSemigroup with_labels(InverseSemigroup, std::vector<std::string>);

        InverseSemigroup() = default;

        std::size_t size_ = 0;
        std::vector<std::uint32_t> product_;
        std::vector<std::uint32_t> inverse_;
        std::vector<std::string> labels_;
        std::vector<PartialBijection> models_;
};

/**
 * Build and validate a semigroup from a row-major Cayley table.
 *
 * Checks, in order: shape and ranges (InputError), label uniqueness,
 * associativity, commuting idempotents, then inverses. When `inverse` is
 * omitted each element's inverse is derived as the unique t with sts = s and
 * tst = t; no such t, or more than one, is an AxiomError.
 */
InverseSemigroup from_cayley_table(std::size_t size, std::vector<std::uint32_t> product,
                                   std::optional<std::vector<std::uint32_t>> inverse = std::nullopt,
                                   std::vector<std::string> labels = {});

/**
 * Semigroup whose carrier is exactly `elements`, in the given order.
 *
 * The set must be closed under compose and invert (InputError otherwise).
 * Associativity and the inverse axioms hold in the concrete model, so only
 * closure is verified; labels are the maps' text form.
 */
InverseSemigroup from_partial_bijections(std::vector<PartialBijection> elements);

/**
 * Inverse subsemigroup of I_n generated by `generators`.
 *
 * Carrier order: distinct generators in input order, then breadth-first
 * layers, each layer sorted canonically. Throws CapExceeded when the closure
 * outgrows `cap`.
 */
InverseSemigroup close_under_ops(std::span<const PartialBijection> generators,
                                 std::size_t cap = kDefaultElementCap);

/// Replace labels (must be unique, one per element).
InverseSemigroup with_labels(InverseSemigroup s, std::vector<std::string> labels);

/// Re-run every axiom check on an existing value; throws AxiomError.
void validate_axioms(const InverseSemigroup& s);

/// E(S). Throws std::logic_error if the result is not a commutative subsemigroup.
ElementSet idempotents(const InverseSemigroup& s);

}  // namespace isgkit
