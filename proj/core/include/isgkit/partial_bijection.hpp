#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isgkit {

/**
 * An injective partial map from {0, ..., n-1} to itself.
 *
 * Stored as the image sequence, with `undefined` marking points outside the
 * domain. The representation is canonical: two maps are equal exactly when
 * their degrees and image sequences match. Ordering is lexicographic on
 * (degree, images) with `undefined` sorting before every point.
 */
class PartialBijection
{
    public:
        using Point = std::int32_t;
        static constexpr Point undefined = -1;

        /// The empty map of the given degree.
        explicit PartialBijection(std::size_t degree = 0);

        /// Throws InputError unless `images` is injective on its defined entries.
        static PartialBijection from_images(std::vector<Point> images);
        static PartialBijection identity(std::size_t degree);
        static PartialBijection partial_identity(std::size_t degree, std::span<const Point> domain);

        /// Inverse of to_string(): "[1,0,-]" is 0->1, 1->0, 2 undefined.
        static PartialBijection parse(std::string_view text);

        std::size_t degree() const noexcept { return images_.size(); }
        Point operator()(std::size_t point) const { return images_.at(point); }
        bool defined_at(std::size_t point) const { return images_.at(point) != undefined; }
        std::size_t rank() const noexcept;
        std::span<const Point> images() const noexcept { return images_; }

        std::vector<Point> domain() const;
        std::vector<Point> range() const;

        std::string to_string() const;

        friend auto operator<=>(const PartialBijection&, const PartialBijection&) = default;
        friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

    private:
        std::vector<Point> images_;
};

/// (p*q)(i) = p(q(i)): apply q first, then p. Throws InputError on degree mismatch.
PartialBijection compose(const PartialBijection& p, const PartialBijection& q);

/// The converse relation; swaps domain and range.
PartialBijection invert(const PartialBijection& p);

/// Every partial bijection of the given degree, in canonical order.
std::vector<PartialBijection> all_partial_bijections(std::size_t degree);

}  // namespace isgkit
