#include "esbraid/esgroup.hpp"

#include <doctest.h>

#include <deque>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

using esbraid::CenterKind;
using esbraid::ESElement;
using esbraid::ESGroup;
using esbraid::ExactMatrix;
using esbraid::RepKind;

TEST_CASE("normal-form multiplication") {
    const ESGroup g(3, -1);
    const ESElement x1 = g.generator(1);
    const ESElement x2 = g.generator(2);
    const ESElement x3 = g.generator(3);

    CHECK(g.mul(x2, x1) == ESElement{0b011, -1});   // adjacent swap costs a sign
    CHECK(g.mul(x1, x1) == g.minus_one());          // x^2 = nu = -1
    CHECK(g.mul(x1, x3) == ESElement{0b101, 1});    // distant generators commute

    const ESGroup gp(3, +1);
    CHECK(gp.mul(x1, x1) == gp.one());
    CHECK(gp.mul(x2, x1) == ESElement{0b011, -1});
}

TEST_CASE("associativity") {
    for (int nu : {-1, +1}) {
        const ESGroup g(4, nu);
        const auto elems = g.elements();
        std::mt19937_64 rng(67);
        for (int t = 0; t < 5000; ++t) {
            const ESElement a = elems[rng() % elems.size()];
            const ESElement b = elems[rng() % elems.size()];
            const ESElement c = elems[rng() % elems.size()];
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
}

TEST_CASE("minus one is central of order two") {
    for (int nu : {-1, +1}) {
        const ESGroup g(5, nu);
        CHECK(g.mul(g.minus_one(), g.minus_one()) == g.one());
        for (const ESElement& e : g.elements()) {
            CHECK(g.mul(e, g.minus_one()) == g.mul(g.minus_one(), e));
        }
    }
}

TEST_CASE("group order by closure") {
    // closure under multiplication from the presentation's generators (the
    // x_i and the central -1) must reach exactly 2^{m+1} normal forms
    for (int m = 1; m <= 13; ++m) {
        for (int nu : {-1, +1}) {
            const ESGroup g(m, nu);
            std::vector<ESElement> gens{g.minus_one()};
            for (int i = 1; i <= m; ++i) gens.push_back(g.generator(i));
            std::unordered_set<std::uint32_t> seen{g.one().key()};
            std::deque<ESElement> frontier{g.one()};
            while (!frontier.empty()) {
                const ESElement e = frontier.front();
                frontier.pop_front();
                for (const ESElement& gen : gens) {
                    const ESElement next = g.mul(e, gen);
                    if (seen.insert(next.key()).second) frontier.push_back(next);
                }
            }
            CHECK(seen.size() == g.order());
            CHECK(seen.size() == (std::uint64_t{1} << (m + 1)));
        }
    }
}

TEST_CASE("centers") {
    {
        const auto c = ESGroup(4, -1).center();
        CHECK(c.size() == 2);  // {1, -1}
    }
    {
        const ESGroup g(3, -1);
        const auto c = g.center();
        CHECK(c.size() == 4);
        std::set<std::uint32_t> keys;
        for (const auto& e : c) keys.insert(e.key());
        CHECK(keys.count(g.one().key()) == 1);
        CHECK(keys.count(g.minus_one().key()) == 1);
        CHECK(keys.count(g.central_z().key()) == 1);  // x1 x3
        CHECK(g.central_z().alpha == 0b101);
    }
    {
        const ESGroup g(1, -1);
        CHECK(g.center().size() == 4);  // the whole group is abelian
    }
}

TEST_CASE("center structure follows the order of z") {
    CHECK(ESGroup(1, -1).center_structure() == CenterKind::Z4);
    CHECK(ESGroup(3, -1).center_structure() == CenterKind::Z2xZ2);
    CHECK(ESGroup(1, +1).center_structure() == CenterKind::Z2xZ2);
    CHECK(ESGroup(5, -1).center_structure() == CenterKind::Z4);   // k = 3 odd
    CHECK(ESGroup(7, -1).center_structure() == CenterKind::Z2xZ2);
    CHECK(ESGroup(5, +1).center_structure() == CenterKind::Z2xZ2);
}

TEST_CASE("every non-central element is conjugate to its negative") {
    for (int m = 1; m <= 9; ++m) {
        const ESGroup g(m, -1);
        std::set<std::uint32_t> central;
        for (const auto& e : g.center()) central.insert(e.key());
        for (const auto& cls : g.conjugacy_classes()) {
            if (central.count(cls.rep.key())) {
                CHECK(cls.members.size() == 1);
            } else {
                CHECK(cls.members.size() == 2);
                CHECK(cls.members[0].alpha == cls.members[1].alpha);
                CHECK(cls.members[0].sign == -cls.members[1].sign);
            }
        }
    }
}

TEST_CASE("conjugacy class counts") {
    CHECK(ESGroup(2, -1).conjugacy_classes().size() == 5);
    CHECK(ESGroup(1, -1).conjugacy_classes().size() == 4);
    // brute force decides the odd-m count: 2^m + 2
    CHECK(ESGroup(3, -1).conjugacy_classes().size() == 10);
    for (int m = 1; m <= 13; ++m) {
        for (int nu : {-1, +1}) {
            const std::size_t expected =
                (m % 2 == 0) ? (std::size_t{1} << m) + 1 : (std::size_t{1} << m) + 2;
            CHECK(ESGroup(m, nu).conjugacy_classes().size() == expected);
        }
    }
}

TEST_CASE("phi maps normal forms to the pure-braid image") {
    const int n = 4;
    const ESGroup g(n - 1, -1);
    CHECK(esbraid::phi_matrix(n, g.generator(1)) == esbraid::pure_generator(n, 1));
    CHECK(esbraid::phi_matrix(n, g.minus_one()) ==
          -ExactMatrix::identity(std::size_t{1} << n));

    // z = x1 x3 lands on a traceless non-scalar matrix
    const ExactMatrix z_img = esbraid::phi_matrix(n, g.central_z());
    CHECK(z_img.trace() == esbraid::Cyclo(0));
    CHECK(z_img != ExactMatrix::identity(z_img.dim()));
    CHECK(z_img != -ExactMatrix::identity(z_img.dim()));
}

TEST_CASE("phi is a homomorphism") {
    for (int n = 3; n <= 6; ++n) {  // exhaustive pairs up to m = 5
        const ESGroup g(n - 1, -1);
        std::unordered_map<std::uint32_t, std::string> serial;
        std::vector<std::pair<ESElement, ExactMatrix>> mats;
        for (const auto& [e, s] : esbraid::phi_images(n)) {
            serial.emplace(e.key(), s);
            mats.emplace_back(e, ExactMatrix::deserialize(s));
        }
        for (const auto& [a, ma] : mats)
            for (const auto& [b, mb] : mats) {
                const ESElement ab = g.mul(a, b);
                REQUIRE((ma * mb).serialize() == serial.at(ab.key()));
            }
    }
    for (int n : {7, 8}) {  // randomized pairs at the larger sizes
        const ESGroup g(n - 1, -1);
        std::unordered_map<std::uint32_t, std::string> serial;
        for (const auto& [e, s] : esbraid::phi_images(n)) serial.emplace(e.key(), s);
        std::mt19937_64 rng(71);
        const auto elems = g.elements();
        for (int t = 0; t < 800; ++t) {
            const ESElement a = elems[rng() % elems.size()];
            const ESElement b = elems[rng() % elems.size()];
            const ExactMatrix ma = ExactMatrix::deserialize(serial.at(a.key()));
            const ExactMatrix mb = ExactMatrix::deserialize(serial.at(b.key()));
            REQUIRE((ma * mb).serialize() == serial.at(g.mul(a, b).key()));
        }
    }
}

TEST_CASE("phi is injective") {
    for (int n = 2; n <= 6; ++n) {
        std::unordered_set<std::string> images;
        for (const auto& [e, s] : esbraid::phi_images(n)) images.insert(s);
        CHECK(images.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("factored trace equals the dense trace") {
    for (int n = 2; n <= 6; ++n) {
        const ESGroup g(n - 1, -1);
        for (const ESElement& e : g.elements())
            CHECK(esbraid::phi_trace(n, e) == esbraid::phi_matrix(n, e).trace());
    }
}

TEST_CASE("matrix group enumeration") {
    {
        // powers of the braiding matrix: eigenvalues are primitive 8th roots
        const auto gens = std::vector<ExactMatrix>{esbraid::r_matrix()};
        CHECK(esbraid::enumerate_matrix_group(gens, 100).order == 8);
    }
    CHECK_THROWS_AS((void)esbraid::enumerate_matrix_group(
                        std::vector<ExactMatrix>{esbraid::r_matrix()}, 3),
                    esbraid::CapExceeded);
}

TEST_CASE("braid image analysis") {
    {
        const auto rep = esbraid::analyze_braid_image(RepKind::Pi, 2, true);
        CHECK(rep.order_pure == 4);
        CHECK(rep.order_full == 8);  // forced by the exact sequence: 2! * 2^2
        CHECK(rep.quotient_order == 2);
        CHECK(rep.perm_well_defined);
        CHECK(rep.kernel_matches_pure);
    }
    {
        const auto rep = esbraid::analyze_braid_image(RepKind::Pi, 3, true);
        CHECK(rep.order_pure == 8);
        CHECK(rep.order_full == 48);
        CHECK(rep.quotient_order == 6);
        CHECK(rep.perm_image_size == 6);
        CHECK(rep.perm_well_defined);
        CHECK(rep.kernel_matches_pure);
    }
    {
        const auto rep = esbraid::analyze_braid_image(RepKind::Pi, 4, true);
        CHECK(rep.order_pure == 16);
        CHECK(rep.order_full == 384);
        CHECK(rep.quotient_order == 24);
        CHECK(rep.perm_image_size == 24);
        CHECK(rep.pure_center == CenterKind::Z2xZ2);  // m = 3, k = 2 even
        CHECK(rep.pure_class_count == 10);
    }
    {
        const auto rep = esbraid::analyze_braid_image(RepKind::PiPrime, 4, false);
        CHECK(rep.order_pure == 16);
        CHECK(rep.pure_center == CenterKind::Z2xZ2);
    }
    {
        // the nu = +1 renormalization degenerates on two strands: the squared
        // generator has order 2, so the pure image misses -identity
        const auto rep = esbraid::analyze_braid_image(RepKind::PiPrime, 2, false);
        CHECK(rep.order_pure == 2);
    }
    for (int n = 3; n <= 6; ++n) {
        const auto rep = esbraid::analyze_braid_image(RepKind::PiPrime, n, false);
        CHECK(rep.order_pure == (std::uint64_t{1} << n));
    }
}

TEST_CASE("renormalized pure generators square to plus identity") {
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            const ExactMatrix gp = generator_image(RepKind::PiPrime, n, i, +1);
            const ExactMatrix sq = gp * gp;
            CHECK((sq * sq).is_identity());
            CHECK(sq == esbraid::pure_generator(n, i).scaled(-esbraid::Cyclo::imag_unit()));
        }
    }
}
