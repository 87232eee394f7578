#include "adfbn/interpretation.hpp"

#include <algorithm>

#include "adfbn/error.hpp"

namespace adfbn {

State::State(std::size_t size, std::uint64_t bits) : size_(size), bits_(bits) {
    if (size > kMaxAtoms) {
        throw ModelMismatch("states are limited to " + std::to_string(kMaxAtoms) + " atoms");
    }
    if (size < kMaxAtoms) {
        bits_ &= (std::uint64_t{1} << size) - 1;
    }
}

State State::parse(std::string_view text) {
    if (text.size() > kMaxAtoms) {
        throw ModelMismatch("state string longer than " + std::to_string(kMaxAtoms) + " atoms");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw Error("invalid state character '" + std::string(1, text[i]) + "' in \"" + std::string(text) + "\"");
        }
    }
    return State(text.size(), bits);
}

State State::with(std::size_t atom, bool value) const noexcept {
    State copy = *this;
    const std::uint64_t mask = std::uint64_t{1} << atom;
    copy.bits_ = value ? (bits_ | mask) : (bits_ & ~mask);
    return copy;
}

std::string State::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) out[i] = '1';
    }
    return out;
}

std::strong_ordering operator<=>(const State& lhs, const State& rhs) noexcept {
    const std::size_t common = std::min(lhs.size_, rhs.size_);
    for (std::size_t i = 0; i < common; ++i) {
        if (lhs[i] != rhs[i]) return lhs[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return lhs.size_ <=> rhs.size_;
}

Interp3 Interp3::from_state(const State& state) {
    std::vector<Truth> values(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) values[i] = to_truth(state[i]);
    return Interp3(std::move(values));
}

Interp3 Interp3::parse(std::string_view text) {
    std::vector<Truth> values;
    values.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '0': values.push_back(Truth::False); break;
            case '1': values.push_back(Truth::True); break;
            case 'u':
            case 'U':
            case '-':
            case '*': values.push_back(Truth::Undec); break;
            default:
                throw Error("invalid interpretation character '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
    }
    return Interp3(std::move(values));
}

std::size_t Interp3::undecided_count() const noexcept {
    return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), Truth::Undec));
}

State Interp3::to_state() const {
    if (!is_two_valued()) throw PreconditionError("interpretation " + to_string() + " is not two-valued");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == Truth::True) bits |= std::uint64_t{1} << i;
    }
    return State(values_.size(), bits);
}

std::string Interp3::to_string(Style style) const {
    const char undec = style == Style::Adf ? 'u' : '-';
    std::string out;
    out.reserve(values_.size());
    for (Truth t : values_) {
        out.push_back(t == Truth::True ? '1' : t == Truth::False ? '0' : undec);
    }
    return out;
}

bool leq_i(const Interp3& lhs, const Interp3& rhs) {
    if (lhs.size() != rhs.size()) {
        throw ModelMismatch("interpretations over " + std::to_string(lhs.size()) + " and " +
                            std::to_string(rhs.size()) + " atoms are not comparable");
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!leq_info(lhs[i], rhs[i])) return false;
    }
    return true;
}

Interp3 interp_from_index(std::size_t size, std::uint64_t index) {
    std::vector<Truth> values(size);
    for (std::size_t i = size; i-- > 0;) {
        values[i] = static_cast<Truth>(index % 3);
        index /= 3;
    }
    return Interp3(std::move(values));
}

}  // namespace adfbn
