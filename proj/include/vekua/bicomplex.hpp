#pragma once

// Bicomplex numbers w = u + v j with complex u, v, elliptic unit i and a
// commuting hyperbolic unit j (j^2 = +1).

#include <complex>
#include <ostream>

namespace vekua {

using Complex = std::complex<double>;

/// Idempotent components of a bicomplex number: w = P+ w+ + P- w-.
struct IdempotentPair {
    Complex plus;
    Complex minus;

    friend bool operator==(const IdempotentPair&, const IdempotentPair&) = default;
};

class Bicomplex {
public:
    constexpr Bicomplex() = default;
    constexpr Bicomplex(Complex u, Complex v = {}) : u_(u), v_(v) {}
    constexpr Bicomplex(double u) : u_(u) {}

    /// Hyperbolic unit j.
    static constexpr Bicomplex j() { return {Complex{0.0}, Complex{1.0}}; }

    /// P+ = (1 + j)/2 for sign > 0, P- = (1 - j)/2 otherwise.
    static constexpr Bicomplex projector(int sign) {
        return {Complex{0.5}, Complex{sign > 0 ? 0.5 : -0.5}};
    }

    static constexpr Bicomplex from_pair(const IdempotentPair& p) {
        return {(p.plus + p.minus) * 0.5, (p.plus - p.minus) * 0.5};
    }

    /// R(w): the j-free part.
    constexpr Complex real_part() const { return u_; }
    /// I(w): the coefficient of j.
    constexpr Complex j_part() const { return v_; }

    constexpr IdempotentPair to_pair() const { return {u_ + v_, u_ - v_}; }

    /// Conjugation with respect to j.
    constexpr Bicomplex conj() const { return {u_, -v_}; }

    constexpr Bicomplex& operator+=(const Bicomplex& o) {
        u_ += o.u_;
        v_ += o.v_;
        return *this;
    }
    constexpr Bicomplex& operator-=(const Bicomplex& o) {
        u_ -= o.u_;
        v_ -= o.v_;
        return *this;
    }
    constexpr Bicomplex& operator*=(const Bicomplex& o) {
        const Complex u = u_ * o.u_ + v_ * o.v_;
        const Complex v = u_ * o.v_ + v_ * o.u_;
        u_ = u;
        v_ = v;
        return *this;
    }
    constexpr Bicomplex& operator*=(Complex s) {
        u_ *= s;
        v_ *= s;
        return *this;
    }

    friend constexpr Bicomplex operator+(Bicomplex a, const Bicomplex& b) { return a += b; }
    friend constexpr Bicomplex operator-(Bicomplex a, const Bicomplex& b) { return a -= b; }
    friend constexpr Bicomplex operator*(Bicomplex a, const Bicomplex& b) { return a *= b; }
    friend constexpr Bicomplex operator*(Bicomplex a, Complex s) { return a *= s; }
    friend constexpr Bicomplex operator*(Complex s, Bicomplex a) { return a *= s; }
    friend constexpr Bicomplex operator-(const Bicomplex& a) { return {-a.u_, -a.v_}; }

    friend constexpr bool operator==(const Bicomplex&, const Bicomplex&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Bicomplex& w) {
        return os << '(' << w.u_ << " + " << w.v_ << "j)";
    }

private:
    Complex u_{};
    Complex v_{};
};

/// P+ a + P- b, the building block of every traveling-wave term.
constexpr Bicomplex combine_idempotent(Complex plus, Complex minus) {
    return Bicomplex::from_pair({plus, minus});
}

} // namespace vekua
