#include "isgkit/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "isgkit/error.hpp"

namespace isgkit {

namespace {

using Table = std::vector<std::uint32_t>;

std::string triple(std::size_t a, std::size_t b, std::size_t c)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string pair(std::size_t a, std::size_t b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

struct TableView
{
    std::size_t n;
    const Table& t;

    std::uint32_t operator()(std::size_t a, std::size_t b) const { return t[a * n + b]; }
};

void check_shape(std::size_t size, const Table& product, const std::optional<Table>& inverse)
{
    if (size == 0)
        throw InputError("a semigroup needs at least one element");
    if (product.size() != size * size)
        throw InputError("product table has " + std::to_string(product.size()) +
                         " entries, expected " + std::to_string(size * size));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
            if (product[r * size + c] >= size)
                throw InputError("index out of range at " + pair(r, c));
    if (inverse) {
        if (inverse->size() != size)
            throw InputError("inverse table has " + std::to_string(inverse->size()) +
                             " entries, expected " + std::to_string(size));
        for (std::size_t i = 0; i < size; ++i)
            if ((*inverse)[i] >= size)
                throw InputError("inverse index out of range at (" + std::to_string(i) + ")");
    }
}

void check_associative(TableView mul)
{
    for (std::size_t a = 0; a < mul.n; ++a)
        for (std::size_t b = 0; b < mul.n; ++b) {
            const std::size_t ab = mul(a, b);
            for (std::size_t c = 0; c < mul.n; ++c) {
                const std::size_t left = mul(ab, c);
                const std::size_t right = mul(a, mul(b, c));
                if (left != right)
                    throw AxiomError(AxiomError::Kind::associativity, {a, b, c},
                                     "associativity fails at " + triple(a, b, c) + ": (ab)c = " +
                                         std::to_string(left) + ", a(bc) = " + std::to_string(right));
            }
        }
}

void check_idempotents_commute(TableView mul)
{
    std::vector<std::size_t> idem;
    for (std::size_t e = 0; e < mul.n; ++e)
        if (mul(e, e) == e)
            idem.push_back(e);
    for (std::size_t i = 0; i < idem.size(); ++i)
        for (std::size_t j = i + 1; j < idem.size(); ++j)
            if (mul(idem[i], idem[j]) != mul(idem[j], idem[i]))
                throw AxiomError(AxiomError::Kind::idempotents_not_commuting, {idem[i], idem[j]},
                                 "idempotents do not commute: " + pair(idem[i], idem[j]));
}

bool is_inverse_pair(TableView mul, std::size_t s, std::size_t t)
{
    return mul(mul(s, t), s) == s && mul(mul(t, s), t) == t;
}

Table derive_inverses(TableView mul)
{
    Table inv(mul.n);
    for (std::size_t s = 0; s < mul.n; ++s) {
        std::optional<std::size_t> found;
        for (std::size_t t = 0; t < mul.n; ++t) {
            if (!is_inverse_pair(mul, s, t))
                continue;
            if (found)
                throw AxiomError(AxiomError::Kind::ambiguous_inverse, {s, *found, t},
                                 "element " + std::to_string(s) + " has several inverses: " +
                                     std::to_string(*found) + " and " + std::to_string(t));
            found = t;
        }
        if (!found)
            throw AxiomError(AxiomError::Kind::non_regular, {s},
                             "element " + std::to_string(s) + " is not regular");
        inv[s] = static_cast<std::uint32_t>(*found);
    }
    return inv;
}

void check_inverse_table(TableView mul, const Table& inv)
{
    for (std::size_t s = 0; s < mul.n; ++s) {
        const std::size_t t = inv[s];
        if (!is_inverse_pair(mul, s, t))
            throw AxiomError(AxiomError::Kind::inverse_table, {s, t},
                             "inverse table entry " + std::to_string(t) + " is not an inverse of " +
                                 std::to_string(s));
        if (inv[t] != s)
            throw AxiomError(AxiomError::Kind::inverse_table, {s, t},
                             "inverse table is not an involution at " + std::to_string(s));
    }
}

void check_labels(std::size_t size, const std::vector<std::string>& labels)
{
    if (labels.empty())
        return;
    if (labels.size() != size)
        throw InputError("expected " + std::to_string(size) + " labels, got " +
                         std::to_string(labels.size()));
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty())
            throw InputError("label " + std::to_string(i) + " is empty");
        if (!seen.insert(labels[i]).second)
            throw InputError("duplicate label '" + labels[i] + "'");
    }
}

}  // namespace

std::string InverseSemigroup::label(ElementId a) const
{
    return labels_.empty() ? std::to_string(index(a)) : labels_.at(index(a));
}

std::optional<ElementId> InverseSemigroup::find_label(std::string_view label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return element(i);
    return std::nullopt;
}

std::optional<ElementId> InverseSemigroup::find(const PartialBijection& p) const
{
    for (std::size_t i = 0; i < models_.size(); ++i)
        if (models_[i] == p)
            return element(i);
    return std::nullopt;
}

std::vector<ElementId> InverseSemigroup::elements() const
{
    std::vector<ElementId> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
        out.push_back(element(i));
    return out;
}

InverseSemigroup from_cayley_table(std::size_t size, std::vector<std::uint32_t> product,
                                   std::optional<std::vector<std::uint32_t>> inverse,
                                   std::vector<std::string> labels)
{
    check_shape(size, product, inverse);
    check_labels(size, labels);
    const TableView mul{size, product};
    check_associative(mul);
    check_idempotents_commute(mul);
    if (inverse)
        check_inverse_table(mul, *inverse);
    else
        inverse = derive_inverses(mul);

    InverseSemigroup s;
    s.size_ = size;
    s.product_ = std::move(product);
    s.inverse_ = std::move(*inverse);
    s.labels_ = std::move(labels);
    return s;
}

InverseSemigroup from_partial_bijections(std::vector<PartialBijection> elements)
{
    if (elements.empty())
        throw InputError("a semigroup needs at least one element");
    const std::size_t n = elements.size();
    const std::size_t degree = elements.front().degree();
    std::map<PartialBijection, std::uint32_t> ids;
    for (std::size_t i = 0; i < n; ++i) {
        if (elements[i].degree() != degree)
            throw InputError("partial bijections of mixed degree");
        if (!ids.emplace(elements[i], static_cast<std::uint32_t>(i)).second)
            throw InputError("duplicate element " + elements[i].to_string());
    }
    auto lookup = [&](const PartialBijection& p) {
        auto it = ids.find(p);
        if (it == ids.end())
            throw InputError("element set not closed: " + p.to_string() + " is missing");
        return it->second;
    };

    InverseSemigroup s;
    s.size_ = n;
    s.product_.resize(n * n);
    s.inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            s.product_[a * n + b] = lookup(compose(elements[a], elements[b]));
        s.inverse_[a] = lookup(invert(elements[a]));
    }
    s.labels_.reserve(n);
    for (const auto& p : elements)
        s.labels_.push_back(p.to_string());
    s.models_ = std::move(elements);
    return s;
}

InverseSemigroup close_under_ops(std::span<const PartialBijection> generators, std::size_t cap)
{
    if (generators.empty())
        throw InputError("closure needs at least one generator");
    const std::size_t degree = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw InputError("generators of mixed degree");

    std::vector<PartialBijection> carrier;
    std::set<PartialBijection> known;
    auto admit = [&](const PartialBijection& p) {
        if (!known.insert(p).second)
            return false;
        if (known.size() > cap)
            throw CapExceeded(cap);
        return true;
    };

    std::size_t frontier_begin = 0;
    for (const auto& g : generators)
        if (admit(g))
            carrier.push_back(g);

    while (frontier_begin < carrier.size()) {
        const std::size_t frontier_end = carrier.size();
        std::set<PartialBijection> layer;
        auto consider = [&](PartialBijection p) {
            if (!known.contains(p))
                layer.insert(std::move(p));
        };
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            consider(invert(carrier[i]));
            for (std::size_t j = 0; j < frontier_end; ++j) {
                consider(compose(carrier[i], carrier[j]));
                consider(compose(carrier[j], carrier[i]));
            }
        }
        for (const auto& p : layer) {
            admit(p);
            carrier.push_back(p);
        }
        frontier_begin = frontier_end;
    }
    return from_partial_bijections(std::move(carrier));
}

InverseSemigroup with_labels(InverseSemigroup s, std::vector<std::string> labels)
{
    check_labels(s.size(), labels);
    if (labels.empty())
        throw InputError("with_labels needs one label per element");
    s.labels_ = std::move(labels);
    return s;
}

void validate_axioms(const InverseSemigroup& s)
{
    const Table product(s.product_table().begin(), s.product_table().end());
    const Table inverse(s.inverse_table().begin(), s.inverse_table().end());
    check_shape(s.size(), product, inverse);
    const TableView mul{s.size(), product};
    check_associative(mul);
    check_idempotents_commute(mul);
    check_inverse_table(mul, inverse);
}

ElementSet idempotents(const InverseSemigroup& s)
{
    ElementSet e(s.size());
    for (ElementId a : s.elements())
        if (s.is_idempotent(a))
            e.insert(a);
    for (ElementId a : e)
        for (ElementId b : e) {
            const ElementId ab = s.product(a, b);
            if (!e.contains(ab) || ab != s.product(b, a))
                throw std::logic_error("idempotents of a validated semigroup are not a semilattice");
        }
    return e;
}

}  // namespace isgkit
