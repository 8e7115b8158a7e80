#include "scp/sign_vector.hpp"

#include <algorithm>
#include <bit>

#include "bit_util.hpp"
#include "scp/cycle.hpp"
#include "scp/error.hpp"

namespace scp {

SignVector::SignVector(Dimension t) : t_(t) {
    check_dimension(t);
    words_.assign(word_count(t), 0);
}

SignVector SignVector::from_pattern(std::string_view pattern) {
    SignVector v(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        switch (pattern[i]) {
        case '+': break;
        case '-': v.set(i + 1, Sign::minus); break;
        default:
            throw range_error("sign pattern may only contain '+' and '-'");
        }
    }
    return v;
}

SignVector SignVector::from_ints(std::span<const int> signs) {
    SignVector v(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == -1)
            v.set(i + 1, Sign::minus);
        else if (signs[i] != 1)
            throw range_error("sign entries must be +1 or -1");
    }
    return v;
}

void SignVector::throw_bad_coordinate(Dimension e) const {
    throw range_error("coordinate " + std::to_string(e) + " outside 1.." +
                      std::to_string(t_));
}

bool SignVector::is_negative(Dimension e) const {
    check_coordinate(e);
    return (words_[(e - 1) / 64] >> ((e - 1) % 64)) & 1u;
}

Sign SignVector::at(Dimension e) const {
    return is_negative(e) ? Sign::minus : Sign::plus;
}

void SignVector::set(Dimension e, Sign s) {
    check_coordinate(e);
    const std::uint64_t mask = std::uint64_t{1} << ((e - 1) % 64);
    auto& w = words_[(e - 1) / 64];
    w = s == Sign::minus ? (w | mask) : (w & ~mask);
}

void SignVector::set_negative_range(Dimension first, Dimension last) {
    if (first > last)
        return;
    check_coordinate(first);
    check_coordinate(last);
    detail::set_bit_range(words_, first - 1, last);
}

void SignVector::trim() noexcept {
    if (t_ % 64 != 0)
        words_.back() &= (std::uint64_t{1} << (t_ % 64)) - 1;
}

SignVector SignVector::operator-() const {
    SignVector r = *this;
    for (auto& w : r.words_)
        w = ~w;
    r.trim();
    return r;
}

Dimension SignVector::negative_count() const noexcept {
    Dimension n = 0;
    for (auto w : words_)
        n += static_cast<Dimension>(std::popcount(w));
    return n;
}

std::string SignVector::to_pattern() const {
    std::string s(t_, '+');
    for (Dimension e = 1; e <= t_; ++e)
        if (is_negative(e))
            s[e - 1] = '-';
    return s;
}

}  // namespace scp
