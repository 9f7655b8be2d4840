#include "esbraid/cyclo.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using esbraid::Cyclo;

namespace {

Cyclo random_cyclo(std::mt19937_64& rng, long bound = 20) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    const auto q = [&]() {
        mpq_class v(num(rng), den(rng));
        v.canonicalize();
        return v;
    };
    return Cyclo(q(), q(), q(), q());
}

}  // namespace

TEST_CASE("additive identities") {
    CHECK(Cyclo::zeta() + Cyclo(0) == Cyclo::zeta());
    CHECK(Cyclo::zeta() + Cyclo::zeta().conj() == Cyclo::sqrt2());
    const Cyclo half_sqrt2 = Cyclo::sqrt2() * Cyclo::rational(1, 2);
    CHECK(half_sqrt2 + half_sqrt2 == Cyclo::sqrt2());
}

TEST_CASE("sqrt2 coefficients are (0, 1, 0, -1)") {
    const Cyclo s = Cyclo::sqrt2();
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == 0);
    CHECK(s.coeff(3) == -1);
}

TEST_CASE("multiplication reduces modulo z^4 = -1") {
    CHECK(Cyclo::zeta() * Cyclo::zeta(3) == Cyclo(-1));
    CHECK(Cyclo::sqrt2() * Cyclo::sqrt2() == Cyclo(2));
    CHECK(Cyclo::zeta() * Cyclo::zeta().conj() == Cyclo(1));
    CHECK(Cyclo::imag_unit() * Cyclo::imag_unit() == Cyclo(-1));
}

TEST_CASE("conjugation") {
    CHECK(Cyclo::zeta().conj() == -Cyclo::zeta(3));
    CHECK(Cyclo::imag_unit().conj() == -Cyclo::imag_unit());
    CHECK(Cyclo::rational(3, 2).conj() == Cyclo::rational(3, 2));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        const Cyclo a = random_cyclo(rng);
        const Cyclo b = random_cyclo(rng);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("floating approximation") {
    CHECK(std::abs(Cyclo::sqrt2().approx().real() - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(Cyclo::sqrt2().approx().imag()) < 1e-12);
    const auto z = Cyclo::zeta().approx();
    CHECK(std::abs(z.real() - 0.7071067811865476) < 1e-12);
    CHECK(std::abs(z.imag() - 0.7071067811865476) < 1e-12);
    const auto m1 = Cyclo(-1).approx();
    CHECK(m1.real() == -1.0);
    CHECK(m1.imag() == 0.0);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10000; ++t) {
        const Cyclo a = random_cyclo(rng, 9);
        const Cyclo b = random_cyclo(rng, 9);
        const Cyclo c = random_cyclo(rng, 9);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("approx is multiplicative within 1e-9") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 2000; ++t) {
        const Cyclo a = random_cyclo(rng, 1000000);
        const Cyclo b = random_cyclo(rng, 1000000);
        const auto lhs = (a * b).approx();
        const auto rhs = a.approx() * b.approx();
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("field inversion") {
    CHECK(Cyclo::sqrt2() * Cyclo::sqrt2().inverse() == Cyclo(1));
    CHECK(Cyclo::sqrt2().inverse() == Cyclo::sqrt2_pow(-1));
    CHECK_THROWS_AS((void)Cyclo().inverse(), std::domain_error);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 500; ++t) {
        const Cyclo a = random_cyclo(rng);
        if (a.is_zero()) continue;
        CHECK(a * a.inverse() == Cyclo(1));
    }
}

TEST_CASE("powers of sqrt2") {
    CHECK(Cyclo::sqrt2_pow(0) == Cyclo(1));
    CHECK(Cyclo::sqrt2_pow(2) == Cyclo(2));
    CHECK(Cyclo::sqrt2_pow(-2) == Cyclo::rational(1, 2));
    CHECK(Cyclo::sqrt2_pow(3) == Cyclo(2) * Cyclo::sqrt2());
    CHECK(Cyclo::sqrt2_pow(-1) * Cyclo::sqrt2() == Cyclo(1));
}

TEST_CASE("zeta powers and realness") {
    CHECK(Cyclo::zeta(4) == Cyclo(-1));
    CHECK(Cyclo::zeta(8) == Cyclo(1));
    CHECK(Cyclo::zeta(-1) == Cyclo::zeta().conj());
    CHECK(Cyclo::sqrt2().is_real());
    CHECK(!Cyclo::zeta().is_real());
    CHECK(Cyclo(5).is_rational());
    CHECK(!Cyclo::sqrt2().is_rational());
}

TEST_CASE("text renderings") {
    CHECK(Cyclo::sqrt2().str() == "0 + 1*z + 0*z^2 + -1*z^3");
    CHECK(Cyclo::rational(-1, 2).str() == "-1/2 + 0*z + 0*z^2 + 0*z^3");
}
