#include "isgkit/subsets.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "isgkit/error.hpp"

namespace isgkit {

namespace {

// Unbiased draw from [0, bound) by rejection.
std::uint64_t below(std::mt19937_64& engine, std::uint64_t bound)
{
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t r;
    do {
        r = engine();
    } while (r >= limit);
    return r % bound;
}

}  // namespace

const char* to_string(SubsetBudget::Mode mode) noexcept
{
    return mode == SubsetBudget::Mode::exhaustive ? "exhaustive" : "bounded";
}

std::uint64_t subset_ceiling_from_env(std::uint64_t fallback)
{
    const char* raw = std::getenv(kSubsetCeilingEnv);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    std::string_view text(raw);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw BudgetError(std::string(kSubsetCeilingEnv) + " must be a positive integer, got '" +
                          std::string(text) + "'");
    return value;
}

std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) noexcept
{
    // splitmix64 finalizer over a Weyl-sequence position.
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SubsetStream::SubsetStream(std::size_t universe, std::vector<ElementId> domain, const SubsetBudget& budget,
                           std::vector<ElementSet> pools)
    : universe_(universe), domain_(std::move(domain)), seed_(budget.seed)
{
    const std::size_t n = domain_.size();
    if (budget.mode == SubsetBudget::Mode::exhaustive) {
        if (n >= 63 || (std::uint64_t{1} << n) > budget.subset_ceiling)
            throw BudgetError("exhaustive enumeration of 2^" + std::to_string(n) +
                              " subsets exceeds the ceiling of " + std::to_string(budget.subset_ceiling) +
                              " subsets");
        max_size_ = n;
        samples_ = 0;
    } else {
        max_size_ = budget.max_subset_size;
        samples_ = n > max_size_ ? budget.sample_count : 0;
    }
    complete_ = budget.include_empty_set && max_size_ >= n;
    k_ = budget.include_empty_set ? 0 : 1;

    ElementSet in_domain = ElementSet::of(universe_, domain_);
    for (auto& pool : pools) {
        pool &= in_domain;
        if (pool.count() > max_size_)
            pools_.push_back(pool.to_vector());
    }
}

bool SubsetStream::advance_combination()
{
    const std::size_t n = domain_.size();
    std::size_t i = k_;
    while (i > 0 && positions_[i - 1] == n - k_ + i - 1)
        --i;
    if (i == 0)
        return false;
    ++positions_[i - 1];
    for (std::size_t j = i; j < k_; ++j)
        positions_[j] = positions_[j - 1] + 1;
    return true;
}

bool SubsetStream::next(ElementSet& out)
{
    while (!combinations_done_) {
        if (fresh_k_) {
            if (k_ > max_size_ || k_ > domain_.size()) {
                combinations_done_ = true;
                break;
            }
            positions_.resize(k_);
            std::iota(positions_.begin(), positions_.end(), std::size_t{0});
            fresh_k_ = false;
        } else if (!advance_combination()) {
            ++k_;
            fresh_k_ = true;
            continue;
        }
        out = ElementSet(universe_);
        for (std::size_t p : positions_)
            out.insert(domain_[p]);
        return true;
    }
    if (next_sample_ < samples_) {
        out = sample(next_sample_++);
        return true;
    }
    return false;
}

ElementSet SubsetStream::sample(std::size_t i) const
{
    if (domain_.size() <= max_size_)
        throw std::logic_error("no subset is larger than the enumerated sizes");
    std::mt19937_64 engine(mix64(seed_, i));
    const bool from_pool = (engine() & 1U) != 0 && !pools_.empty();
    std::vector<ElementId> base = from_pool ? pools_[below(engine, pools_.size())] : domain_;

    const std::size_t extra = base.size() - max_size_;
    const std::size_t m = max_size_ + 1 + static_cast<std::size_t>(below(engine, extra));
    for (std::size_t j = 0; j < m; ++j) {
        auto pick = j + static_cast<std::size_t>(below(engine, base.size() - j));
        std::swap(base[j], base[pick]);
    }
    ElementSet out(universe_);
    for (std::size_t j = 0; j < m; ++j)
        out.insert(base[j]);
    return out;
}

}  // namespace isgkit
