#include "adfbn/truth_table.hpp"

#include "adfbn/error.hpp"

namespace adfbn {

namespace {

constexpr std::size_t kMaxTableAtoms = 40;

// Word patterns of the first six atoms: bit s is set iff bit `atom` of s is.
constexpr kernels::Word kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

TruthTable::TruthTable(std::size_t atoms, bool fill) : atoms_(atoms) {
    if (atoms > kMaxTableAtoms) {
        throw BudgetExceeded("truth tables over " + std::to_string(atoms) + " atoms are not supported");
    }
    const std::size_t word_count = atoms < 6 ? 1 : (std::size_t{1} << (atoms - 6));
    words_.assign(word_count, fill ? ~kernels::Word{0} : kernels::Word{0});
    mask_tail();
}

TruthTable TruthTable::projection(std::size_t atoms, AtomId atom) {
    if (atom >= atoms) {
        throw ModelMismatch("atom " + std::to_string(atom) + " outside a table over " + std::to_string(atoms) +
                            " atoms");
    }
    TruthTable table(atoms);
    if (atom < 6) {
        for (auto& word : table.words_) word = kLowPatterns[atom];
    } else {
        const std::size_t stride_bit = atom - 6;
        for (std::size_t w = 0; w < table.words_.size(); ++w) {
            table.words_[w] = ((w >> stride_bit) & 1U) != 0 ? ~kernels::Word{0} : kernels::Word{0};
        }
    }
    table.mask_tail();
    return table;
}

void TruthTable::mask_tail() noexcept {
    if (atoms_ < 6) words_[0] &= (kernels::Word{1} << (std::size_t{1} << atoms_)) - 1;
}

TruthTable tabulate(const Formula& phi, std::size_t atoms, const kernels::KernelTable& table) {
    using Kind = Formula::Kind;
    switch (phi.kind()) {
        case Kind::Atom:
            return TruthTable::projection(atoms, phi.atom_id());
        case Kind::True:
            return TruthTable(atoms, true);
        case Kind::False:
            return TruthTable(atoms, false);
        case Kind::Not: {
            TruthTable result = tabulate(phi.children()[0], atoms, table);
            table.bit_not(result.words(), result.words());
            result.mask_tail();
            return result;
        }
        case Kind::And:
        case Kind::Or: {
            const auto op = phi.kind() == Kind::And ? table.bit_and : table.bit_or;
            TruthTable result = tabulate(phi.children()[0], atoms, table);
            for (std::size_t i = 1; i < phi.children().size(); ++i) {
                const TruthTable operand = tabulate(phi.children()[i], atoms, table);
                op(result.words(), result.words(), operand.words());
            }
            return result;
        }
        case Kind::Implies: {
            TruthTable antecedent = tabulate(phi.children()[0], atoms, table);
            const TruthTable consequent = tabulate(phi.children()[1], atoms, table);
            table.bit_not(antecedent.words(), antecedent.words());
            table.bit_or(antecedent.words(), antecedent.words(), consequent.words());
            antecedent.mask_tail();
            return antecedent;
        }
    }
    return TruthTable(atoms);
}

std::uint64_t count_fixed_points(std::span<const TruthTable> functions, const kernels::KernelTable& table) {
    const std::size_t n = functions.size();
    TruthTable agree(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        if (functions[i].atoms() != n) throw ModelMismatch("function table size does not match the variable count");
        const TruthTable own = TruthTable::projection(n, static_cast<AtomId>(i));
        table.and_equal(agree.words(), own.words(), functions[i].words());
    }
    return table.popcount(agree.words());
}

}  // namespace adfbn
