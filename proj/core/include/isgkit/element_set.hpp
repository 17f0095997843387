#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace isgkit {

/// Ordinal of an element in a semigroup's carrier list.
enum class ElementId : std::uint32_t {};

constexpr std::uint32_t index(ElementId e) noexcept { return static_cast<std::uint32_t>(e); }
constexpr ElementId element(std::size_t i) noexcept { return static_cast<ElementId>(i); }

/**
 * A subset of a carrier {0, ..., universe-1}, stored as a packed bitset.
 *
 * All binary operations require both operands to share a universe. Iteration
 * visits members in increasing id order, which is what makes every report and
 * witness deterministic.
 */
class ElementSet
{
    public:
        using Word = std::uint64_t;
        static constexpr std::size_t bits_per_word = 64;

        class const_iterator
        {
            public:
                using iterator_category = std::forward_iterator_tag;
                using value_type = ElementId;
                using difference_type = std::ptrdiff_t;
                using pointer = const ElementId*;
                using reference = ElementId;

                const_iterator() = default;
                const_iterator(const ElementSet* set, std::size_t word_index, Word pending)
                    : set_(set), word_index_(word_index), pending_(pending)
                {
                    skip_empty();
                }

                ElementId operator*() const
                {
                    return element(word_index_ * bits_per_word + std::countr_zero(pending_));
                }

                const_iterator& operator++()
                {
                    pending_ &= pending_ - 1;
                    skip_empty();
                    return *this;
                }

                const_iterator operator++(int)
                {
                    auto copy = *this;
                    ++*this;
                    return copy;
                }

                friend bool operator==(const const_iterator& a, const const_iterator& b)
                {
                    return a.word_index_ == b.word_index_ && a.pending_ == b.pending_;
                }

            private:
                void skip_empty();

                const ElementSet* set_ = nullptr;
                std::size_t word_index_ = 0;
                Word pending_ = 0;
        };

        ElementSet() = default;
        explicit ElementSet(std::size_t universe);
        ElementSet(std::size_t universe, std::initializer_list<ElementId> members);

        static ElementSet full(std::size_t universe);

        template <typename Range>
        static ElementSet of(std::size_t universe, const Range& members)
        {
            ElementSet s(universe);
            for (ElementId e : members)
                s.insert(e);
            return s;
        }

        std::size_t universe() const noexcept { return universe_; }

        void insert(ElementId e);
        void erase(ElementId e);
        bool contains(ElementId e) const noexcept
        {
            auto i = index(e);
            return i < universe_ && ((words_[i / bits_per_word] >> (i % bits_per_word)) & 1U);
        }

        std::size_t count() const noexcept;
        bool empty() const noexcept;
        void clear() noexcept;

        /// Smallest member, if any.
        std::optional<ElementId> first() const noexcept;

        bool is_subset_of(const ElementSet& other) const;
        bool intersects(const ElementSet& other) const;

        ElementSet& operator&=(const ElementSet& other);
        ElementSet& operator|=(const ElementSet& other);
        friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
        friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

        std::vector<ElementId> to_vector() const;

        const_iterator begin() const { return const_iterator(this, 0, words_.empty() ? 0 : words_[0]); }
        const_iterator end() const { return const_iterator(this, words_.size(), 0); }

        friend bool operator==(const ElementSet&, const ElementSet&) = default;

    private:
        friend class const_iterator;

        void check_universe(const ElementSet& other) const;

        std::size_t universe_ = 0;
        std::vector<Word> words_;
};

inline void ElementSet::const_iterator::skip_empty()
{
    while (pending_ == 0 && set_ != nullptr && word_index_ < set_->words_.size()) {
        ++word_index_;
        pending_ = word_index_ < set_->words_.size() ? set_->words_[word_index_] : 0;
    }
}

}  // namespace isgkit
