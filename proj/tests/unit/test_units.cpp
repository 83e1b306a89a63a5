#include <doctest.h>

#include "kgwell/errors.hpp"
#include "kgwell/units.hpp"
#include "support.hpp"

using namespace kgwell;
using kgwell::test::rel_diff;

TEST_CASE("to_dimensionless: equal quantities give unity") {
    const auto d = to_dimensionless({197.3269804, 10.0, 1.0, 197.3269804});
    CHECK(d.m_bar == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("to_dimensionless: pion in a 2 fm well") {
    // mpmath: 139.57*2/197.3269804, 50*2/197.3269804
    const auto d = to_dimensionless({139.57, 50.0, 2.0, codata_hbar_c});
    CHECK(rel_diff(d.m_bar, 1.4146063525330264) < 1e-15);
    CHECK(rel_diff(d.v_bar, 0.50677307176793955) < 1e-15);
}

TEST_CASE("to_dimensionless: non-positive fields are rejected by name") {
    const auto field_of = [](PhysicalParams p) {
        try {
            to_dimensionless(p);
        } catch (const invalid_parameter& e) {
            return e.field();
        }
        return std::string("none");
    };
    CHECK(field_of({0.0, 1.0, 1.0, 1.0}) == "mass_energy");
    CHECK(field_of({1.0, -2.0, 1.0, 1.0}) == "well_depth");
    CHECK(field_of({1.0, 1.0, 0.0, 1.0}) == "half_range");
    CHECK(field_of({1.0, 1.0, 1.0, 0.0}) == "hbar_c");
}

TEST_CASE("energy_to_dimensionless examples") {
    const PhysicalParams p{139.57, 50.0, 1.0, codata_hbar_c};
    CHECK(energy_to_dimensionless(0.0, p) == 0.0);
    CHECK(energy_to_dimensionless(197.3269804, p) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(energy_to_dimensionless(-98.66349, p) == doctest::Approx(-0.5).epsilon(1e-7));
    CHECK(rel_diff(energy_to_dimensionless(-98.66349, p), -0.49999999898645386) < 1e-15);
}

TEST_CASE("round trip through laboratory units is exact to 1e-14") {
    auto g = kgwell::test::rng(7);
    for (int i = 0; i < 500; ++i) {
        const PhysicalParams p{kgwell::test::uniform(g, 0.1, 2000.0), kgwell::test::uniform(g, 0.1, 500.0),
                               kgwell::test::uniform(g, 0.05, 20.0), kgwell::test::uniform(g, 1.0, 300.0)};
        const auto back = to_physical(to_dimensionless(p), p.half_range, p.hbar_c);
        CHECK(rel_diff(back.mass_energy, p.mass_energy) < 1e-14);
        CHECK(rel_diff(back.well_depth, p.well_depth) < 1e-14);

        const double e = kgwell::test::uniform(g, -p.mass_energy, p.mass_energy);
        CHECK(rel_diff(energy_to_physical(energy_to_dimensionless(e, p), p), e) < 1e-14);
    }
}

TEST_CASE("scaling energies by lambda and range by 1/lambda leaves the parameters unchanged") {
    auto g = kgwell::test::rng(11);
    for (int i = 0; i < 500; ++i) {
        const PhysicalParams p{kgwell::test::uniform(g, 0.1, 2000.0), kgwell::test::uniform(g, 0.1, 500.0),
                               kgwell::test::uniform(g, 0.05, 20.0), codata_hbar_c};
        const double lambda = kgwell::test::uniform(g, 0.01, 100.0);
        const auto a = to_dimensionless(p);
        const auto b = to_dimensionless({p.mass_energy * lambda, p.well_depth * lambda,
                                         p.half_range / lambda, p.hbar_c});
        CHECK(rel_diff(b.m_bar, a.m_bar) < 1e-14);
        CHECK(rel_diff(b.v_bar, a.v_bar) < 1e-14);
    }
}
