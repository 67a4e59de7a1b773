#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdlib>

namespace domsat {

/// Boolean variable index. Variables are numbered 1..num_vars; 0 is reserved
/// as "no variable".
using Var = int;

/**
 * A literal: a variable together with a polarity.
 *
 * Internally encoded as 2*var for the positive literal and 2*var+1 for the
 * negative one, so literals index densely into watch tables via index().
 * The DIMACS convention (signed nonzero integers) is supported through
 * from_dimacs()/to_dimacs().
 */
class Lit {
  public:
    constexpr Lit() = default;

    static constexpr Lit positive(Var v) { return Lit(2 * v); }
    static constexpr Lit negative(Var v) { return Lit(2 * v + 1); }

    static constexpr Lit from_dimacs(int value) {
        return value > 0 ? positive(value) : negative(-value);
    }

    constexpr int to_dimacs() const { return is_negative() ? -var() : var(); }

    constexpr Var var() const { return code_ >> 1; }
    constexpr bool is_negative() const { return (code_ & 1) != 0; }
    constexpr bool is_valid() const { return code_ >= 2; }

    /// Negation; an involution.
    constexpr Lit operator~() const { return Lit(code_ ^ 1); }

    /// Dense index for literal-indexed tables (watch lists, marks).
    constexpr std::size_t index() const { return static_cast<std::size_t>(code_); }

    friend constexpr auto operator<=>(Lit, Lit) = default;

  private:
    explicit constexpr Lit(int code) : code_(code) {}
    int code_ = 0;
};

constexpr Lit kLitUndef{};

} // namespace domsat
