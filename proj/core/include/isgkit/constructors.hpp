#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isgkit/semigroup.hpp"

namespace isgkit {

inline constexpr std::size_t kMaxSymmetricDegree = 5;

/// I_n, all partial bijections of {0..n-1} in canonical order. Requires n <= 5.
InverseSemigroup symmetric_inverse_monoid(std::size_t n);

/**
 * A meet-semilattice as an inverse semigroup: product = meet, s^-1 = s.
 * The table must be associative, commutative and idempotent (AxiomError with
 * Kind::semilattice otherwise).
 */
InverseSemigroup semilattice_from_meet_table(std::size_t size, std::vector<std::uint32_t> table,
                                             std::vector<std::string> labels = {});

/// C_n, labelled e, g, g^2, ...
InverseSemigroup cyclic_group(std::size_t n);

/// B_n over the trivial group: element 0 is the zero, then (i,j) for 1 <= i,j <= n row by row.
InverseSemigroup brandt(std::size_t n);

/// S with a new absorbing element appended as the last id.
InverseSemigroup adjoin_zero(const InverseSemigroup& s);

/// Names accepted by builtin(): n5, m3, fork4, chain<n>, i<n>, c<n>, b<n>.
std::vector<std::string> builtin_names();

/// Named fixture, e.g. builtin("n5") or builtin("i2"). Throws InputError for unknown names.
InverseSemigroup builtin(std::string_view name);

/**
 * A family plus its parameters, as addressed from the command line.
 * Parameters irrelevant to the family are ignored.
 */
struct FamilySpec
{
    enum class Family { symmetric_inverse, semilattice, cyclic_group, brandt, adjoin_zero, builtin };

    Family family = Family::builtin;
    std::optional<std::size_t> n;
    std::optional<std::string> name;                 ///< builtin fixture
    std::optional<std::vector<std::uint32_t>> table; ///< semilattice meet table, row-major
    std::optional<std::size_t> table_size;
    std::shared_ptr<const InverseSemigroup> inner;   ///< adjoin-zero operand
};

std::optional<FamilySpec::Family> parse_family(std::string_view text);
const char* to_string(FamilySpec::Family family) noexcept;

/// Validate parameters and construct; InputError on a missing or bad parameter.
InverseSemigroup build(const FamilySpec& spec);

}  // namespace isgkit
