#pragma once

#include "ds/rational.hpp"

#include <cmath>

namespace ds {

// Number of the form u + v*sqrt(d) with rational u, v and squarefree d >= 1.
// d is canonicalized: square parts are pulled into v, and v = 0 forces d = 1,
// so the rational case is Surd{u, 0, 1} and equality is structural.
// Mixed-radical arithmetic (different d on both sides, both v != 0) is not a
// closed operation and throws.
class Surd {
  public:
    Surd() : u_(0), v_(0), d_(1) {}
    Surd(long long n) : u_(n), v_(0), d_(1) {}
    Surd(Rational u) : u_(std::move(u)), v_(0), d_(1) {}
    Surd(Rational u, Rational v, Int d) : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
        canonicalize();
    }

    // sqrt(n) for a nonnegative integer n
    static Surd sqrt_of(const Int& n) {
        if (n < 0) throw std::domain_error("Surd: sqrt of negative integer");
        return Surd(Rational(0), Rational(1), n);
    }

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const Int& d() const { return d_; }
    bool is_rational() const { return v_.sign() == 0; }

    Surd operator-() const { return Surd(-u_, -v_, d_); }
    Surd operator+(const Surd& o) const {
        return Surd(u_ + o.u_, v_ + o.v_, merged_d(o));
    }
    Surd operator-(const Surd& o) const { return *this + (-o); }
    Surd operator*(const Surd& o) const {
        Int d = merged_d(o);
        return Surd(u_ * o.u_ + v_ * o.v_ * Rational(d), u_ * o.v_ + v_ * o.u_, d);
    }
    Surd operator/(const Surd& o) const {
        // multiply by the conjugate; norm is rational and nonzero
        Int d = merged_d(o);
        Rational norm = o.u_ * o.u_ - o.v_ * o.v_ * Rational(d);
        if (norm.sign() == 0) throw std::domain_error("Surd: division by zero");
        Surd conj(o.u_ / norm, -o.v_ / norm, d);
        return *this * conj;
    }

    bool operator==(const Surd& o) const { return u_ == o.u_ && v_ == o.v_ && d_ == o.d_; }
    bool operator!=(const Surd& o) const { return !(*this == o); }

    int sign() const {
        if (v_.sign() == 0) return u_.sign();
        if (u_.sign() == 0) return v_.sign();
        if (u_.sign() > 0 && v_.sign() > 0) return 1;
        if (u_.sign() < 0 && v_.sign() < 0) return -1;
        // compare u^2 with v^2 d; sign follows the dominant term
        Rational lhs = u_ * u_, rhs = v_ * v_ * Rational(d_);
        if (lhs == rhs) return 0;
        return lhs < rhs ? v_.sign() : u_.sign();
    }
    bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
    bool operator>(const Surd& o) const { return (*this - o).sign() > 0; }

    double to_double() const {
        return u_.to_double() + v_.to_double() * std::sqrt(static_cast<double>(d_));
    }

    std::string str() const {
        if (is_rational()) return u_.str();
        std::string s;
        if (u_.sign() != 0) s += u_.str() + (v_.sign() > 0 ? "+" : "");
        s += v_.str() + "*sqrt(" + d_.str() + ")";
        return s;
    }

  private:
    Int merged_d(const Surd& o) const {
        if (is_rational()) return o.d_;
        if (o.is_rational() || d_ == o.d_) return d_;
        throw std::domain_error("Surd: mixed radicands");
    }

    void canonicalize() {
        if (d_ < 0) throw std::domain_error("Surd: negative radicand");
        if (d_ == 0) {
            v_ = Rational(0);
            d_ = 1;
        }
        // pull out the largest square divisor of d
        Int sq = 1, rest = d_;
        for (Int p = 2; p * p <= rest; p++) {
            while (rest % (p * p) == 0) {
                rest /= p * p;
                sq *= p;
            }
        }
        if (sq > 1) {
            v_ = v_ * Rational(sq);
            d_ = rest;
        }
        if (d_ == 1) {
            u_ += v_;
            v_ = Rational(0);
        }
        if (v_.sign() == 0) d_ = 1;
    }

    Rational u_;
    Rational v_;
    Int d_;
};

}  // namespace ds
