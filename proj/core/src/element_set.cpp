#include "isgkit/element_set.hpp"

#include <stdexcept>

namespace isgkit {

namespace {

std::size_t words_for(std::size_t universe)
{
    return (universe + ElementSet::bits_per_word - 1) / ElementSet::bits_per_word;
}

}  // namespace

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0)
{
}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<ElementId> members)
    : ElementSet(universe)
{
    for (ElementId e : members)
        insert(e);
}

ElementSet ElementSet::full(std::size_t universe)
{
    ElementSet s(universe);
    for (auto& w : s.words_)
        w = ~Word{0};
    if (auto tail = universe % bits_per_word; tail != 0)
        s.words_.back() = (Word{1} << tail) - 1;
    return s;
}

void ElementSet::insert(ElementId e)
{
    auto i = index(e);
    if (i >= universe_)
        throw std::out_of_range("element " + std::to_string(i) + " outside universe of size " +
                                std::to_string(universe_));
    words_[i / bits_per_word] |= Word{1} << (i % bits_per_word);
}

void ElementSet::erase(ElementId e)
{
    auto i = index(e);
    if (i < universe_)
        words_[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word));
}

std::size_t ElementSet::count() const noexcept
{
    std::size_t n = 0;
    for (Word w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool ElementSet::empty() const noexcept
{
    for (Word w : words_)
        if (w != 0)
            return false;
    return true;
}

void ElementSet::clear() noexcept
{
    for (auto& w : words_)
        w = 0;
}

std::optional<ElementId> ElementSet::first() const noexcept
{
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] != 0)
            return element(k * bits_per_word + std::countr_zero(words_[k]));
    return std::nullopt;
}

void ElementSet::check_universe(const ElementSet& other) const
{
    if (universe_ != other.universe_)
        throw std::invalid_argument("element sets over different universes");
}

bool ElementSet::is_subset_of(const ElementSet& other) const
{
    check_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
        if ((words_[k] & ~other.words_[k]) != 0)
            return false;
    return true;
}

bool ElementSet::intersects(const ElementSet& other) const
{
    check_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
        if ((words_[k] & other.words_[k]) != 0)
            return true;
    return false;
}

ElementSet& ElementSet::operator&=(const ElementSet& other)
{
    check_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] &= other.words_[k];
    return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other)
{
    check_universe(other);
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] |= other.words_[k];
    return *this;
}

std::vector<ElementId> ElementSet::to_vector() const
{
    std::vector<ElementId> out;
    out.reserve(count());
    for (ElementId e : *this)
        out.push_back(e);
    return out;
}

}  // namespace isgkit
