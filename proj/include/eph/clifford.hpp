#pragma once

#include <array>

#include "eph/scalar.hpp"
#include "eph/sign.hpp"

namespace eph {

// Element of the two-generator Clifford algebra Cl(sigma) with
//   e0^2 = -1,  e1^2 = sigma,  e0 e1 = -e1 e0,
// stored on the basis (1, e0, e1, e0e1).
template <ScalarField S>
class CliffNum {
public:
    CliffNum() : c_{S(0), S(0), S(0), S(0)}, sigma_(parabolic) {}
    CliffNum(S c1, S ce0, S ce1, S ce01, Sign sigma)
        : c_{std::move(c1), std::move(ce0), std::move(ce1), std::move(ce01)}, sigma_(sigma) {}

    static CliffNum scalar(S v, Sign sigma) { return CliffNum(std::move(v), S(0), S(0), S(0), sigma); }
    static CliffNum one(Sign sigma) { return scalar(S(1), sigma); }
    static CliffNum e0(Sign sigma) { return CliffNum(S(0), S(1), S(0), S(0), sigma); }
    static CliffNum e1(Sign sigma) { return CliffNum(S(0), S(0), S(1), S(0), sigma); }

    const S& c1() const { return c_[0]; }
    const S& ce0() const { return c_[1]; }
    const S& ce1() const { return c_[2]; }
    const S& ce01() const { return c_[3]; }
    Sign sigma() const { return sigma_; }

    const S& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        return c_[0] == S(0) && c_[1] == S(0) && c_[2] == S(0) && c_[3] == S(0);
    }
    bool is_scalar() const { return c_[1] == S(0) && c_[2] == S(0) && c_[3] == S(0); }

    friend CliffNum operator+(const CliffNum& x, const CliffNum& y) {
        x.check(y);
        return CliffNum(x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3], x.sigma_);
    }
    friend CliffNum operator-(const CliffNum& x, const CliffNum& y) {
        x.check(y);
        return CliffNum(x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3], x.sigma_);
    }
    CliffNum operator-() const { return CliffNum(-c_[0], -c_[1], -c_[2], -c_[3], sigma_); }

    friend CliffNum operator*(const S& s, const CliffNum& x) {
        return CliffNum(s * x.c_[0], s * x.c_[1], s * x.c_[2], s * x.c_[3], x.sigma_);
    }

    friend CliffNum operator*(const CliffNum& x, const CliffNum& y) {
        x.check(y);
        const S sg = scalar_of<S>(x.sigma_);
        const auto& a = x.c_;
        const auto& b = y.c_;
        // basis products: e0e0=-1, e1e1=sg, e0e1=e01, e1e0=-e01,
        // e0e01=-e1, e01e0=e1, e1e01=-sg e0, e01e1=sg e0, e01e01=sg
        return CliffNum(
            a[0] * b[0] - a[1] * b[1] + sg * a[2] * b[2] + sg * a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] - sg * a[2] * b[3] + sg * a[3] * b[2],
            a[0] * b[2] + a[2] * b[0] - a[1] * b[3] + a[3] * b[1],
            a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1],
            x.sigma_);
    }

    friend bool operator==(const CliffNum& x, const CliffNum& y) {
        return x.sigma_ == y.sigma_ && x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] &&
               x.c_[2] == y.c_[2] && x.c_[3] == y.c_[3];
    }

private:
    void check(const CliffNum& other) const {
        if (sigma_ != other.sigma_)
            throw Error(ErrorKind::SignatureMismatch, "CliffNum signature mismatch");
    }

    std::array<S, 4> c_;
    Sign sigma_;
};

template <ScalarField S>
CliffNum<S> vector_to_cliff(const S& u, const S& v, Sign sigma) {
    return CliffNum<S>(S(0), u, v, S(0), sigma);
}

// General inverse through the 4x4 left-regular representation: solves x*y = 1.
template <ScalarField S>
CliffNum<S> cliff_inverse(const CliffNum<S>& x) {
    // Column j of the system matrix is x * basis_j on the basis (1, e0, e1, e01);
    // solving against (1,0,0,0) yields the right-division witness with x*y = 1.
    S M[4][5];
    CliffNum<S> basis[4] = {CliffNum<S>::one(x.sigma()), CliffNum<S>::e0(x.sigma()),
                            CliffNum<S>::e1(x.sigma()),
                            CliffNum<S>(S(0), S(0), S(0), S(1), x.sigma())};
    for (int j = 0; j < 4; ++j) {
        CliffNum<S> col = x * basis[j];
        for (int i = 0; i < 4; ++i) M[i][j] = col[i];
    }
    for (int i = 0; i < 4; ++i) M[i][4] = (i == 0) ? S(1) : S(0);

    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        if constexpr (is_exact_v<S>) {
            for (int r = col; r < 4; ++r)
                if (M[r][col] != S(0)) { piv = r; break; }
        } else {
            double best = 0;
            for (int r = col; r < 4; ++r) {
                double mag = std::abs(scalar_traits<S>::to_double(M[r][col]));
                if (mag > best) { best = mag; piv = r; }
            }
        }
        if (piv < 0) throw Error(ErrorKind::ZeroDivisor, "CliffNum is not invertible");
        if (piv != col) {
            for (int j = 0; j < 5; ++j) std::swap(M[piv][j], M[col][j]);
            std::swap(perm[piv], perm[col]);
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || M[r][col] == S(0)) continue;
            S f = M[r][col] / M[col][col];
            for (int j = col; j < 5; ++j) M[r][j] = M[r][j] - f * M[col][j];
        }
    }
    S y[4];
    for (int i = 0; i < 4; ++i) {
        if (M[i][i] == S(0)) throw Error(ErrorKind::ZeroDivisor, "CliffNum is not invertible");
        y[i] = M[i][4] / M[i][i];
    }
    return CliffNum<S>(y[0], y[1], y[2], y[3], x.sigma());
}

// x * y^{-1}, the quotient convention used by all fraction-linear actions here.
template <ScalarField S>
CliffNum<S> cliff_div(const CliffNum<S>& x, const CliffNum<S>& y) {
    return x * cliff_inverse(y);
}

}  // namespace eph
