#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "isgkit/element_set.hpp"

namespace isgkit {

/// 2^20 subsets, i.e. exhaustive enumeration for carriers of at most 20 elements.
inline constexpr std::uint64_t kDefaultSubsetCeiling = std::uint64_t{1} << 20;

/// Environment override for the exhaustive ceiling.
inline constexpr const char* kSubsetCeilingEnv = "ISGKIT_SUBSET_CEILING";

/**
 * How many subsets of a carrier a law check may visit.
 *
 * Bounded mode visits every subset of size <= max_subset_size, then
 * `sample_count` seeded random subsets that are strictly larger. Exhaustive
 * mode visits all 2^n subsets and ignores the other knobs except
 * include_empty_set; it is refused when 2^n exceeds `subset_ceiling`.
 */
struct SubsetBudget
{
    enum class Mode { exhaustive, bounded };

    Mode mode = Mode::bounded;
    std::size_t max_subset_size = 3;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    bool include_empty_set = true;
    std::uint64_t subset_ceiling = kDefaultSubsetCeiling;

    static SubsetBudget exhaustive()
    {
        SubsetBudget b;
        b.mode = Mode::exhaustive;
        return b;
    }

    static SubsetBudget bounded(std::size_t max_size, std::size_t samples = 0, std::uint64_t seed = 0)
    {
        SubsetBudget b;
        b.max_subset_size = max_size;
        b.sample_count = samples;
        b.seed = seed;
        return b;
    }

    friend bool operator==(const SubsetBudget&, const SubsetBudget&) = default;
};

const char* to_string(SubsetBudget::Mode mode) noexcept;

/// Reads kSubsetCeilingEnv; returns `fallback` when unset. Throws BudgetError if unparsable.
std::uint64_t subset_ceiling_from_env(std::uint64_t fallback = kDefaultSubsetCeiling);

/// Stateless 64-bit mixer; sample i of seed w draws from an engine seeded with mix64(w, i).
std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) noexcept;

/**
 * Deterministic stream of subsets of `domain` under a budget.
 *
 * Order: by cardinality, then lexicographically on domain positions; then the
 * random samples. Sample i depends only on (seed, i), so any partition of the
 * sample range reproduces the serial stream. Half the samples (by a coin per
 * sample) are drawn from one of `pools` instead of the whole domain; callers
 * pass downsets so that large samples still tend to have joins.
 */
class SubsetStream
{
    public:
        SubsetStream(std::size_t universe, std::vector<ElementId> domain, const SubsetBudget& budget,
                     std::vector<ElementSet> pools = {});

        /// Writes the next subset into `out`; false when the stream is exhausted.
        bool next(ElementSet& out);

        /// True when the stream covers every subset of the domain, empty set included.
        bool complete() const noexcept { return complete_; }

        std::size_t domain_size() const noexcept { return domain_.size(); }

        /// Materialize the i-th random sample (independent of stream position).
        ElementSet sample(std::size_t i) const;

    private:
        bool advance_combination();

        std::size_t universe_;
        std::vector<ElementId> domain_;
        std::vector<std::vector<ElementId>> pools_;
        std::size_t max_size_;
        std::size_t samples_;
        std::uint64_t seed_;
        bool complete_ = false;

        // Current combination of size k over domain positions.
        std::size_t k_;
        std::vector<std::size_t> positions_;
        bool combinations_done_ = false;
        bool fresh_k_ = true;
        std::size_t next_sample_ = 0;
};

}  // namespace isgkit
