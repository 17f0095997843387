#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isgkit {

/// Malformed input: wrong shape, out-of-range entries, unparsable text.
class InputError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// A table that is well formed but violates an inverse-semigroup axiom.
class AxiomError : public std::runtime_error
{
    public:
        enum class Kind {
            associativity,
            non_regular,
            idempotents_not_commuting,
            ambiguous_inverse,
            inverse_table,
            semilattice,
        };

        AxiomError(Kind kind, std::vector<std::size_t> witness, const std::string& what)
            : std::runtime_error(what), kind_(kind), witness_(std::move(witness))
        {
        }

        Kind kind() const noexcept { return kind_; }

        /// Element indices demonstrating the violation (triple, pair or single).
        const std::vector<std::size_t>& witness() const noexcept { return witness_; }

    private:
        Kind kind_;
        std::vector<std::size_t> witness_;
};

/// Closure grew past the configured element cap.
class CapExceeded : public std::runtime_error
{
    public:
        explicit CapExceeded(std::size_t cap)
            : std::runtime_error("element cap exceeded: closure has more than " +
                                 std::to_string(cap) + " elements"),
              cap_(cap)
        {
        }

        std::size_t cap() const noexcept { return cap_; }

    private:
        std::size_t cap_;
};

/// A subset budget that cannot be honoured (e.g. exhaustive over too many subsets).
class BudgetError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

}  // namespace isgkit
