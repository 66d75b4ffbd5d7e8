#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace aqtab {

// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t integer) : doubled_(2 * integer) {}

    static constexpr HalfInt from_doubled(std::int64_t doubled)
    {
        HalfInt h;
        h.doubled_ = doubled;
        return h;
    }

    constexpr std::int64_t doubled() const noexcept { return doubled_; }
    constexpr bool is_integral() const noexcept { return doubled_ % 2 == 0; }

    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
    constexpr HalfInt& operator+=(HalfInt o)
    {
        doubled_ += o.doubled_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o)
    {
        doubled_ -= o.doubled_;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr HalfInt operator+(HalfInt a, std::int64_t k) { return a + HalfInt(k); }
    friend constexpr HalfInt operator-(HalfInt a, std::int64_t k) { return a - HalfInt(k); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr bool operator==(HalfInt, HalfInt) = default;

    // "3", "-1/2", "7/2"
    std::string to_string() const;

private:
    std::int64_t doubled_ = 0;
};

} // namespace aqtab

template <>
struct std::hash<aqtab::HalfInt> {
    std::size_t operator()(aqtab::HalfInt h) const noexcept
    {
        return std::hash<std::int64_t>{}(h.doubled());
    }
};
