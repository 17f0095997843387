#include "isgkit/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "isgkit/error.hpp"
#include "isgkit/order.hpp"

namespace isgkit {

namespace {

struct LatticeFixture
{
    std::vector<std::string> labels;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> covers;  // (lower, upper)
};

// Meet table of a finite poset given by its covering pairs; the poset must be a meet-semilattice.
std::vector<std::uint32_t> meet_table(const LatticeFixture& fx)
{
    const std::size_t n = fx.labels.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        leq[i][i] = true;
    for (auto [lo, hi] : fx.covers)
        leq[lo][hi] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j])
                    leq[i][j] = true;

    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::optional<std::size_t> glb;
            for (std::size_t c = 0; c < n; ++c) {
                if (!leq[c][a] || !leq[c][b])
                    continue;
                if (!glb || leq[*glb][c])
                    glb = c;
            }
            for (std::size_t c = 0; c < n; ++c)
                if (leq[c][a] && leq[c][b] && !leq[c][*glb])
                    throw std::logic_error("fixture is not a meet-semilattice");
            table[a * n + b] = static_cast<std::uint32_t>(*glb);
        }
    return table;
}

InverseSemigroup lattice(const LatticeFixture& fx)
{
    return semilattice_from_meet_table(fx.labels.size(), meet_table(fx), fx.labels);
}

// 0 < a < c < 1, 0 < b < 1
const LatticeFixture kPentagon{{"0", "a", "b", "c", "1"}, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}};
// 0 < a, b, c < 1
const LatticeFixture kDiamond{{"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}};
// 0 < a < 1 and 0 < b, with b incomparable to a and 1
const LatticeFixture kFork4{{"0", "a", "1", "b"}, {{0, 1}, {1, 2}, {0, 3}}};

// 0 < 1 < ... < n-1, labelled by rank.
LatticeFixture chain(std::size_t n)
{
    LatticeFixture fx;
    for (std::size_t i = 0; i < n; ++i)
        fx.labels.push_back(std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i)
        fx.covers.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1));
    return fx;
}

std::optional<std::size_t> numeric_suffix(std::string_view name, std::string_view prefix)
{
    if (name.size() <= prefix.size() || !name.starts_with(prefix))
        return std::nullopt;
    std::size_t n = 0;
    auto digits = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        return std::nullopt;
    return n;
}

std::size_t require_n(const FamilySpec& spec)
{
    if (!spec.n)
        throw InputError(std::string("family ") + to_string(spec.family) + " needs --n");
    return *spec.n;
}

}  // namespace

InverseSemigroup symmetric_inverse_monoid(std::size_t n)
{
    if (n > kMaxSymmetricDegree)
        throw InputError("symmetric inverse monoid degree " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxSymmetricDegree));
    return from_partial_bijections(all_partial_bijections(n));
}

InverseSemigroup semilattice_from_meet_table(std::size_t size, std::vector<std::uint32_t> table,
                                             std::vector<std::string> labels)
{
    if (size == 0)
        throw InputError("a semilattice needs at least one element");
    if (table.size() != size * size)
        throw InputError("meet table has " + std::to_string(table.size()) + " entries, expected " +
                         std::to_string(size * size));
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
            if (table[r * size + c] >= size)
                throw InputError("index out of range at (" + std::to_string(r) + "," + std::to_string(c) + ")");
    for (std::size_t a = 0; a < size; ++a) {
        if (table[a * size + a] != a)
            throw AxiomError(AxiomError::Kind::semilattice, {a},
                             "meet table is not idempotent at " + std::to_string(a));
        for (std::size_t b = a + 1; b < size; ++b)
            if (table[a * size + b] != table[b * size + a])
                throw AxiomError(AxiomError::Kind::semilattice, {a, b},
                                 "meet table is not commutative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
    }

    std::vector<std::uint32_t> self(size);
    for (std::size_t i = 0; i < size; ++i)
        self[i] = static_cast<std::uint32_t>(i);
    InverseSemigroup s = from_cayley_table(size, std::move(table), std::move(self), std::move(labels));

    const NaturalOrder order(s);
    for (ElementId a : s.elements())
        for (ElementId b : s.elements())
            if (order.leq(a, b) != (s.product(a, b) == a))
                throw std::logic_error("natural order disagrees with the semilattice order");
    return s;
}

InverseSemigroup cyclic_group(std::size_t n)
{
    if (n == 0)
        throw InputError("cyclic group order must be at least 1");
    std::vector<std::uint32_t> product(n * n);
    std::vector<std::uint32_t> inverse(n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            product[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
        inverse[a] = static_cast<std::uint32_t>((n - a) % n);
        labels[a] = a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a);
    }
    return from_cayley_table(n, std::move(product), std::move(inverse), std::move(labels));
}

InverseSemigroup brandt(std::size_t n)
{
    if (n < 2)
        throw InputError("Brandt semigroup index size must be at least 2");
    const std::size_t size = n * n + 1;
    // (i,j) with 0-based i,j lives at id 1 + i*n + j.
    auto id = [n](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(1 + i * n + j); };
    std::vector<std::uint32_t> product(size * size, 0);
    std::vector<std::uint32_t> inverse(size, 0);
    std::vector<std::string> labels(size);
    labels[0] = "0";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels[id(i, j)] = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            inverse[id(i, j)] = id(j, i);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    product[id(i, j) * size + id(k, l)] = j == k ? id(i, l) : 0;
        }
    return from_cayley_table(size, std::move(product), std::move(inverse), std::move(labels));
}

InverseSemigroup adjoin_zero(const InverseSemigroup& s)
{
    const std::size_t n = s.size();
    const std::size_t size = n + 1;
    const auto z = static_cast<std::uint32_t>(n);
    std::vector<std::uint32_t> product(size * size, z);
    std::vector<std::uint32_t> inverse(size, z);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            product[a * size + b] = index(s.product(element(a), element(b)));
        inverse[a] = index(s.inverse(element(a)));
    }
    std::vector<std::string> labels;
    for (ElementId a : s.elements())
        labels.push_back(s.label(a));
    std::string zero = "z";
    while (std::find(labels.begin(), labels.end(), zero) != labels.end())
        zero += '\'';
    labels.push_back(zero);
    return from_cayley_table(size, std::move(product), std::move(inverse), std::move(labels));
}

std::vector<std::string> builtin_names()
{
    return {"n5", "m3", "fork4", "chain<n>", "i<n>", "c<n>", "b<n>"};
}

InverseSemigroup builtin(std::string_view name)
{
    if (name == "n5")
        return lattice(kPentagon);
    if (name == "m3")
        return lattice(kDiamond);
    if (name == "fork4")
        return lattice(kFork4);
    if (auto n = numeric_suffix(name, "chain")) {
        if (*n == 0 || *n > 64)
            throw InputError("chain length must be in 1..64");
        return lattice(chain(*n));
    }
    if (auto n = numeric_suffix(name, "i"))
        return symmetric_inverse_monoid(*n);
    if (auto n = numeric_suffix(name, "c"))
        return cyclic_group(*n);
    if (auto n = numeric_suffix(name, "b"))
        return brandt(*n);
    throw InputError("unknown builtin '" + std::string(name) + "'");
}

std::optional<FamilySpec::Family> parse_family(std::string_view text)
{
    using F = FamilySpec::Family;
    for (F f : {F::symmetric_inverse, F::semilattice, F::cyclic_group, F::brandt, F::adjoin_zero, F::builtin})
        if (text == to_string(f))
            return f;
    return std::nullopt;
}

const char* to_string(FamilySpec::Family family) noexcept
{
    switch (family) {
        case FamilySpec::Family::symmetric_inverse:
            return "symmetric-inverse";
        case FamilySpec::Family::semilattice:
            return "semilattice";
        case FamilySpec::Family::cyclic_group:
            return "cyclic-group";
        case FamilySpec::Family::brandt:
            return "brandt";
        case FamilySpec::Family::adjoin_zero:
            return "adjoin-zero";
        case FamilySpec::Family::builtin:
            return "builtin";
    }
    return "?";
}

InverseSemigroup build(const FamilySpec& spec)
{
    switch (spec.family) {
        case FamilySpec::Family::symmetric_inverse:
            return symmetric_inverse_monoid(require_n(spec));
        case FamilySpec::Family::cyclic_group:
            return cyclic_group(require_n(spec));
        case FamilySpec::Family::brandt:
            return brandt(require_n(spec));
        case FamilySpec::Family::semilattice:
            if (spec.name) {
                InverseSemigroup s = builtin(*spec.name);
                if (idempotents(s).count() != s.size())
                    throw InputError("builtin '" + *spec.name + "' is not a semilattice");
                return s;
            }
            if (!spec.table || !spec.table_size)
                throw InputError("family semilattice needs a meet table or --name");
            return semilattice_from_meet_table(*spec.table_size, *spec.table);
        case FamilySpec::Family::adjoin_zero:
            if (!spec.inner)
                throw InputError("family adjoin-zero needs an inner semigroup");
            return adjoin_zero(*spec.inner);
        case FamilySpec::Family::builtin:
            if (!spec.name)
                throw InputError("family builtin needs --name");
            return builtin(*spec.name);
    }
    throw InputError("unknown family");
}

}  // namespace isgkit
