#pragma once

#include <cstdint>
#include <stdexcept>

namespace eph {

// EPH signature value: -1 elliptic, 0 parabolic, +1 hyperbolic.
// The same value set serves the point-space sign sigma, the cycle-space
// sign sigma_breve, the FSCc multiplier s and the centre flavour varsigma.
class Sign {
public:
    constexpr Sign() : v_(0) {}
    constexpr explicit Sign(int v) : v_(static_cast<std::int8_t>(v)) {
        if (v < -1 || v > 1) throw std::invalid_argument("Sign must be -1, 0 or +1");
    }

    constexpr int value() const { return v_; }
    constexpr bool is_elliptic() const { return v_ == -1; }
    constexpr bool is_parabolic() const { return v_ == 0; }
    constexpr bool is_hyperbolic() const { return v_ == 1; }

    friend constexpr bool operator==(Sign a, Sign b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Sign a, Sign b) { return a.v_ != b.v_; }

    // chi(t): +1 for t >= 0, -1 for t < 0 (Heaviside-style sign).
    constexpr Sign heaviside() const { return Sign(v_ >= 0 ? 1 : -1); }

    friend constexpr Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
    constexpr Sign operator-() const { return Sign(-v_); }

private:
    std::int8_t v_;
};

inline constexpr Sign elliptic{-1};
inline constexpr Sign parabolic{0};
inline constexpr Sign hyperbolic{1};

inline constexpr Sign all_signs[3] = {elliptic, parabolic, hyperbolic};

}  // namespace eph
