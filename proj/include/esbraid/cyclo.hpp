#pragma once

#include <gmp.h>
#include <gmpxx.h>

#include <array>
#include <complex>
#include <string>

namespace esbraid {

namespace detail {

/// Arbitrary-precision rational that materializes GMP state only once a
/// nonzero value is written. Logical zero needs no allocation, which keeps
/// large mostly-zero exact matrices cheap to create and destroy.
class Coeff {
public:
    Coeff() noexcept = default;
    Coeff(const Coeff& o) { if (!o.is_zero()) { init_(); mpq_set(q_, o.q_); } }
    Coeff(Coeff&& o) noexcept : has_(o.has_) {
        if (has_) {
            q_[0] = o.q_[0];
            o.has_ = false;
        }
    }
    Coeff& operator=(const Coeff& o) {
        if (this != &o) {
            if (o.is_zero()) {
                set_zero();
            } else {
                init_();
                mpq_set(q_, o.q_);
            }
        }
        return *this;
    }
    Coeff& operator=(Coeff&& o) noexcept {
        if (this != &o) {
            release_();
            has_ = o.has_;
            if (has_) {
                q_[0] = o.q_[0];
                o.has_ = false;
            }
        }
        return *this;
    }
    ~Coeff() { release_(); }

    bool is_zero() const noexcept { return !has_ || mpq_sgn(q_) == 0; }

    /// Read view; logical zero aliases a shared constant.
    mpq_srcptr view() const noexcept { return has_ ? q_ : shared_zero(); }

    void set(mpq_srcptr v) {
        if (mpq_sgn(v) == 0) {
            set_zero();
        } else {
            init_();
            mpq_set(q_, v);
        }
    }
    void set_si(long v) {
        if (v == 0) {
            set_zero();
        } else {
            init_();
            mpq_set_si(q_, v, 1);
        }
    }
    void set_zero() {
        if (has_) mpq_set_ui(q_, 0, 1);
    }

    void add(mpq_srcptr v) {
        init_();
        mpq_add(q_, q_, v);
    }
    void sub(mpq_srcptr v) {
        init_();
        mpq_sub(q_, q_, v);
    }
    void negate() {
        if (has_) mpq_neg(q_, q_);
    }

    bool equals(const Coeff& o) const noexcept {
        const bool za = is_zero(), zb = o.is_zero();
        if (za || zb) return za == zb;
        return mpq_equal(q_, o.q_) != 0;
    }

    mpq_class value() const { return mpq_class(view()); }

private:
    static mpq_srcptr shared_zero() noexcept {
        static const mpq_class zero;
        return zero.get_mpq_t();
    }
    void init_() {
        if (!has_) {
            mpq_init(q_);
            has_ = true;
        }
    }
    void release_() noexcept {
        if (has_) {
            mpq_clear(q_);
            has_ = false;
        }
    }

    mpq_t q_;
    bool has_ = false;
};

}  // namespace detail

/// Exact element of the degree-4 cyclotomic field generated by
/// z = exp(i*pi/4) = (1 + i)/sqrt(2), stored as
///     c0 + c1*z + c2*z^2 + c3*z^3      with  z^4 = -1.
///
/// Coefficients are arbitrary-precision rationals, so arbitrarily long
/// chains of matrix products with 1/sqrt(2) factors stay exact. The basis
/// representation is canonical: equality is componentwise equality of
/// reduced rationals. The field contains i = z^2 and sqrt(2) = z - z^3.
class Cyclo {
public:
    Cyclo() = default;  // zero
    Cyclo(long value) { c_[0].set_si(value); }
    explicit Cyclo(const mpq_class& value) { c_[0].set(value.get_mpq_t()); }
    Cyclo(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2,
          const mpq_class& c3);

    static Cyclo rational(long num, long den);
    static Cyclo zeta(long power = 1);  // z^power, any integer power
    static Cyclo imag_unit();           // z^2
    static Cyclo sqrt2();               // z - z^3
    static Cyclo sqrt2_pow(long e);     // (sqrt 2)^e, e may be negative

    mpq_class coeff(int k) const { return c_[static_cast<std::size_t>(k)].value(); }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_rational() const {
        return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_real() const;  // fixed by complex conjugation

    /// Complex conjugation: (c0, c1, c2, c3) -> (c0, -c3, -c2, -c1).
    Cyclo conj() const;

    /// Field inverse via the product of Galois conjugates over the rational
    /// norm. Throws std::domain_error on zero.
    Cyclo inverse() const;

    Cyclo pow(long e) const;

    /// Floating evaluation with z = exp(i*pi/4). Diagnostics only; never
    /// feeds back into any exact computation.
    std::complex<double> approx() const;

    /// "c0 + c1*z + c2*z^2 + c3*z^3" with exact rationals.
    std::string str() const;

    /// Appends an unambiguous canonical encoding, usable as a hash key.
    void append_canonical(std::string& out) const;

    /// *this += a * b without materializing the product.
    void add_mul(const Cyclo& a, const Cyclo& b);

    Cyclo& operator+=(const Cyclo& rhs);
    Cyclo& operator-=(const Cyclo& rhs);
    Cyclo& operator*=(const Cyclo& rhs) { *this = *this * rhs; return *this; }
    Cyclo operator-() const;

    friend Cyclo operator+(Cyclo lhs, const Cyclo& rhs) { lhs += rhs; return lhs; }
    friend Cyclo operator-(Cyclo lhs, const Cyclo& rhs) { lhs -= rhs; return lhs; }
    friend Cyclo operator*(const Cyclo& lhs, const Cyclo& rhs) {
        Cyclo out;
        out.add_mul(lhs, rhs);
        return out;
    }
    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        for (std::size_t k = 0; k < 4; ++k)
            if (!a.c_[k].equals(b.c_[k])) return false;
        return true;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

private:
    std::array<detail::Coeff, 4> c_{};
};

}  // namespace esbraid
