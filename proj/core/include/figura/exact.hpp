#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "figura/error.hpp"

namespace figura {

using Int = std::int64_t;

/// Signed 64-bit integer whose arithmetic throws OverflowError instead of
/// wrapping. Used wherever a closed form is evaluated, so that a sweep that
/// outgrows 63 bits is reported rather than silently corrupted.
class Exact {
public:
    constexpr Exact() = default;
    constexpr Exact(Int v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    constexpr Int value() const noexcept { return v_; }
    constexpr explicit operator Int() const noexcept { return v_; }

    friend Exact operator+(Exact a, Exact b) {
        Int r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("+", a, b);
        return r;
    }
    friend Exact operator-(Exact a, Exact b) {
        Int r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("-", a, b);
        return r;
    }
    friend Exact operator*(Exact a, Exact b) {
        Int r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("*", a, b);
        return r;
    }
    Exact operator-() const { return Exact(0) - *this; }
    Exact& operator+=(Exact o) { return *this = *this + o; }
    Exact& operator-=(Exact o) { return *this = *this - o; }
    Exact& operator*=(Exact o) { return *this = *this * o; }

    // Exact division; the caller guarantees divisibility.
    friend Exact operator/(Exact a, Exact b) { return a.v_ / b.v_; }

    friend constexpr bool operator==(Exact, Exact) = default;
    friend constexpr auto operator<=>(Exact, Exact) = default;

    friend std::ostream& operator<<(std::ostream& os, Exact e) { return os << e.v_; }

private:
    [[noreturn]] static void overflow(const char* op, Exact a, Exact b) {
        throw OverflowError("integer overflow in " + std::to_string(a.v_) + " " + op + " " +
                            std::to_string(b.v_));
    }

    Int v_ = 0;
};

// Residue in [0, m).
constexpr Int mod_floor(Int a, Int m) {
    const Int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace figura
