#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adfbn {

/// Three truth values. Undec doubles as the free marker of a subspace.
enum class Truth : std::uint8_t { False = 0, True = 1, Undec = 2 };

inline constexpr Truth to_truth(bool b) noexcept { return b ? Truth::True : Truth::False; }

/// Information order on single values: Undec is below both classical values.
inline constexpr bool leq_info(Truth lhs, Truth rhs) noexcept {
    return lhs == Truth::Undec || lhs == rhs;
}

/// A two-valued assignment over at most 64 atoms, packed as a bit mask
/// where bit i holds atom i. Rendered as a bit string in atom order.
class State {
public:
    static constexpr std::size_t kMaxAtoms = 64;

    State() = default;
    State(std::size_t size, std::uint64_t bits);

    /// Parses a string over {0,1}; character i is atom i.
    static State parse(std::string_view text);

    std::size_t size() const noexcept { return size_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool operator[](std::size_t atom) const noexcept { return ((bits_ >> atom) & 1U) != 0; }
    State with(std::size_t atom, bool value) const noexcept;

    std::string to_string() const;

    friend bool operator==(const State&, const State&) = default;
    /// Lexicographic order of the rendered bit strings.
    friend std::strong_ordering operator<=>(const State& lhs, const State& rhs) noexcept;

private:
    std::size_t size_ = 0;
    std::uint64_t bits_ = 0;
};

/// A total three-valued interpretation; read as a subspace, Undec is the
/// free marker.
class Interp3 {
public:
    enum class Style { Adf, Subspace };

    Interp3() = default;
    explicit Interp3(std::vector<Truth> values) : values_(std::move(values)) {}

    static Interp3 all_undec(std::size_t size) { return Interp3(std::vector<Truth>(size, Truth::Undec)); }
    static Interp3 from_state(const State& state);
    /// Accepts 0, 1 and any of u, U, -, * for the undecided/free value.
    static Interp3 parse(std::string_view text);

    std::size_t size() const noexcept { return values_.size(); }
    Truth operator[](std::size_t atom) const { return values_[atom]; }
    void set(std::size_t atom, Truth value) { values_[atom] = value; }
    const std::vector<Truth>& values() const noexcept { return values_; }

    std::size_t undecided_count() const noexcept;
    bool is_two_valued() const noexcept { return undecided_count() == 0; }
    /// Precondition: is_two_valued() and size() <= State::kMaxAtoms.
    State to_state() const;

    /// `u` marks undecided atoms in Adf style, `-` marks free atoms in
    /// Subspace style.
    std::string to_string(Style style = Style::Adf) const;

    friend bool operator==(const Interp3&, const Interp3&) = default;
    friend auto operator<=>(const Interp3&, const Interp3&) = default;

private:
    std::vector<Truth> values_;
};

/// Pointwise information order. Throws ModelMismatch on differing sizes.
bool leq_i(const Interp3& lhs, const Interp3& rhs);

/// Every interpretation over `size` atoms, in the order of the base-3
/// counter where atom 0 is the most significant digit.
Interp3 interp_from_index(std::size_t size, std::uint64_t index);

}  // namespace adfbn
