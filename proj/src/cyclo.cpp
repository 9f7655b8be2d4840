#include "esbraid/cyclo.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace esbraid {

namespace {

mpq_class two_pow(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
    if (e >= 0) return mpq_class(p);
    mpq_class q(1);
    q /= p;
    return q;
}

}  // namespace

Cyclo::Cyclo(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2,
             const mpq_class& c3) {
    c_[0].set(c0.get_mpq_t());
    c_[1].set(c1.get_mpq_t());
    c_[2].set(c2.get_mpq_t());
    c_[3].set(c3.get_mpq_t());
}

Cyclo Cyclo::rational(long num, long den) {
    if (den == 0) throw std::domain_error("Cyclo::rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Cyclo(q);
}

Cyclo Cyclo::zeta(long power) {
    long k = power % 8;
    if (k < 0) k += 8;
    Cyclo out;
    if (k < 4) {
        out.c_[static_cast<std::size_t>(k)].set_si(1);
    } else {
        out.c_[static_cast<std::size_t>(k - 4)].set_si(-1);
    }
    return out;
}

Cyclo Cyclo::imag_unit() { return zeta(2); }

Cyclo Cyclo::sqrt2() {
    Cyclo out;
    out.c_[1].set_si(1);
    out.c_[3].set_si(-1);
    return out;
}

Cyclo Cyclo::sqrt2_pow(long e) {
    // (sqrt 2)^e = 2^t * (sqrt 2)^r with e = 2t + r, r in {0, 1}
    long r = e & 1L;
    long t = (e - r) / 2;
    Cyclo out{two_pow(t)};
    if (r) out *= sqrt2();
    return out;
}

bool Cyclo::is_real() const {
    // conj fixes the element iff c1 = -c3 and c2 = 0
    if (!c_[2].is_zero()) return false;
    detail::Coeff neg = c_[3];
    neg.negate();
    return c_[1].equals(neg);
}

Cyclo Cyclo::conj() const {
    Cyclo out;
    out.c_[0] = c_[0];
    out.c_[1] = c_[3];
    out.c_[1].negate();
    out.c_[2] = c_[2];
    out.c_[2].negate();
    out.c_[3] = c_[1];
    out.c_[3].negate();
    return out;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo::inverse: zero has no inverse");
    if (is_rational()) {
        mpq_class r = 1 / c_[0].value();
        return Cyclo(r);
    }
    // Galois conjugates: z -> z^3 gives (c0, c3, -c2, c1),
    //                    z -> z^5 gives (c0, -c1, c2, -c3),
    //                    z -> z^7 gives complex conjugation.
    Cyclo g3;
    g3.c_[0] = c_[0];
    g3.c_[1] = c_[3];
    g3.c_[2] = c_[2];
    g3.c_[2].negate();
    g3.c_[3] = c_[1];
    Cyclo g5;
    g5.c_[0] = c_[0];
    g5.c_[1] = c_[1];
    g5.c_[1].negate();
    g5.c_[2] = c_[2];
    g5.c_[3] = c_[3];
    g5.c_[3].negate();
    const Cyclo cofactor = g3 * g5 * conj();
    const Cyclo norm = *this * cofactor;  // rational by Galois invariance
    if (!norm.is_rational() || norm.is_zero())
        throw std::domain_error("Cyclo::inverse: norm computation failed");
    const mpq_class scale = 1 / norm.c_[0].value();
    return cofactor * Cyclo(scale);
}

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo out(1);
    Cyclo base = *this;
    while (e > 0) {
        if (e & 1L) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::complex<double> Cyclo::approx() const {
    static const std::complex<double> zpow[4] = {
        {1.0, 0.0},
        {std::sqrt(0.5), std::sqrt(0.5)},
        {0.0, 1.0},
        {-std::sqrt(0.5), std::sqrt(0.5)},
    };
    std::complex<double> out{0.0, 0.0};
    for (int k = 0; k < 4; ++k) {
        if (!c_[static_cast<std::size_t>(k)].is_zero())
            out += mpq_get_d(c_[static_cast<std::size_t>(k)].view()) * zpow[k];
    }
    return out;
}

namespace {

std::string q_to_string(mpq_srcptr q) {
    char* raw = mpq_get_str(nullptr, 10, q);
    std::string out(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, out.size() + 1);
    return out;
}

}  // namespace

std::string Cyclo::str() const {
    std::ostringstream os;
    os << q_to_string(c_[0].view()) << " + " << q_to_string(c_[1].view()) << "*z + "
       << q_to_string(c_[2].view()) << "*z^2 + " << q_to_string(c_[3].view()) << "*z^3";
    return os.str();
}

void Cyclo::append_canonical(std::string& out) const {
    for (const auto& c : c_) {
        out += q_to_string(c.view());
        out += '|';
    }
}

void Cyclo::add_mul(const Cyclo& a, const Cyclo& b) {
    static thread_local mpq_t scratch;
    static thread_local bool scratch_ready = false;
    if (!scratch_ready) {
        mpq_init(scratch);
        scratch_ready = true;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            if (b.c_[j].is_zero()) continue;
            mpq_mul(scratch, a.c_[i].view(), b.c_[j].view());
            const std::size_t k = i + j;
            if (k >= 4) {
                c_[k - 4].sub(scratch);  // z^4 = -1
            } else {
                c_[k].add(scratch);
            }
        }
    }
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
    for (std::size_t k = 0; k < 4; ++k)
        if (!rhs.c_[k].is_zero()) c_[k].add(rhs.c_[k].view());
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
    for (std::size_t k = 0; k < 4; ++k)
        if (!rhs.c_[k].is_zero()) c_[k].sub(rhs.c_[k].view());
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (std::size_t k = 0; k < 4; ++k) out.c_[k].negate();
    return out;
}

}  // namespace esbraid
