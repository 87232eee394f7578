#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "adfbn/formula.hpp"
#include "adfbn/kernels/bitset_kernels.hpp"

namespace adfbn {

/// The value of a Boolean function at every state over `atoms` atoms:
/// bit `s` holds the value at the state whose bit mask is `s`.
class TruthTable {
public:
    explicit TruthTable(std::size_t atoms, bool fill = false);

    /// The table of the atom itself (bit s set iff atom is set in s).
    static TruthTable projection(std::size_t atoms, AtomId atom);

    std::size_t atoms() const noexcept { return atoms_; }
    std::uint64_t bit_count() const noexcept { return std::uint64_t{1} << atoms_; }
    bool test(std::uint64_t state) const noexcept { return ((words_[state >> 6] >> (state & 63U)) & 1U) != 0; }

    std::span<kernels::Word> words() noexcept { return words_; }
    std::span<const kernels::Word> words() const noexcept { return words_; }

    /// Clears the unused high bits of a sub-word table.
    void mask_tail() noexcept;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    std::size_t atoms_;
    std::vector<kernels::Word> words_;
};

/// Truth table of `phi` over `atoms` atoms (caller enforces the budget).
TruthTable tabulate(const Formula& phi, std::size_t atoms,
                    const kernels::KernelTable& table = kernels::active_kernels());

/// Number of states where every atom equals its function's value, i.e. the
/// number of fixed points of the map s -> (f_0(s), ..., f_{n-1}(s)).
std::uint64_t count_fixed_points(std::span<const TruthTable> functions,
                                 const kernels::KernelTable& table = kernels::active_kernels());

}  // namespace adfbn
