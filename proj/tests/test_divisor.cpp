#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "toric/divisor.hpp"
#include "toric/errors.hpp"
#include "toric/fan_io.hpp"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

TDivisor div(std::initializer_list<long> c) { return TDivisor{make_vector(c)}; }

RatVector rat(std::initializer_list<long> c) {
    RatVector v;
    for (long x : c) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("principal divisors") {
    CHECK(principal_divisor(named_fan("P2"), make_vector({1, 0})) == div({1, 0, -1}));
    CHECK(principal_divisor(named_fan("F1"), make_vector({0, 1})) == div({0, 1, 1, -1}));
    CHECK(principal_divisor(named_fan("P3"), make_vector({0, 0, 0})) == div({0, 0, 0, 0}));
    CHECK_THROWS_AS(principal_divisor(named_fan("P2"), make_vector({1})), InputError);
}

TEST_CASE("class groups") {
    CHECK(class_group(named_fan("P2")).presentation.describe() == "Z");
    CHECK(class_group(named_fan("F1")).presentation.describe() == "Z^2");
    CHECK(class_group(named_fan("P112")).presentation.describe() == "Z");
    CHECK(class_group(named_fan("P3")).presentation.describe() == "Z");
    // rays span an index-3 sublattice: all 2x2 minors are +-3
    const Fan quotient(2, {make_vector({1, 0}), make_vector({1, 3}), make_vector({-2, -3})}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(class_group(quotient).presentation.describe() == "Z + Z/3");
    const Fan plane(2, {make_vector({1, 0})}, {{0}});
    CHECK_THROWS_AS(class_group(plane), HypothesisError);
}

TEST_CASE("principal divisors have trivial class") {
    gen::Rng rng(31);
    for (const auto& name : gen::all_named()) {
        const Fan fan = named_fan(name);
        const ClassGroup cl = class_group(fan);
        for (int i = 0; i < 10; ++i)
            CHECK(cl.presentation.is_zero(cl.class_of(principal_divisor(fan, gen::random_vector(rng, fan.rank(), -5, 5)))));
    }
}

TEST_CASE("Cartier criterion") {
    const Fan p112 = named_fan("P112");
    CHECK_FALSE(is_cartier(p112, div({1, 0, 0})).cartier);
    CHECK(is_cartier(p112, div({2, 0, 0})).cartier);
    CHECK(is_cartier(p112, div({0, 0, 1})).cartier == false);
    gen::Rng rng(32);
    for (const auto& name : gen::smooth_named()) {
        const Fan fan = named_fan(name);
        for (int i = 0; i < 10; ++i) {
            const TDivisor d{gen::random_vector(rng, fan.num_rays(), -4, 4)};
            const CartierData data = is_cartier(fan, d);
            REQUIRE(data.cartier);
            for (std::size_t c = 0; c < fan.num_max_cones(); ++c)
                for (auto r : fan.max_cone(c).rays) CHECK(dot(data.witnesses[c], fan.ray(r)) == -d.coeffs[r]);
        }
    }
}

TEST_CASE("Picard groups") {
    CHECK(picard_group(named_fan("P2")).presentation.describe() == "Z");
    CHECK(picard_group(named_fan("P3")).presentation.describe() == "Z");
    CHECK(picard_group(named_fan("P1xP1")).presentation.describe() == "Z^2");
    CHECK(picard_group(named_fan("F1")).presentation.describe() == "Z^2");
    const PicardGroup p112 = picard_group(named_fan("P112"));
    CHECK(p112.presentation.describe() == "Z");
    REQUIRE(p112.index_in_cl);
    CHECK(*p112.index_in_cl == 2);
    CHECK_FALSE(p112.equals_class_group);
    for (const auto& name : gen::smooth_named()) {
        CAPTURE(name);
        const PicardGroup pic = picard_group(named_fan(name));
        CHECK(pic.equals_class_group);
        CHECK(pic.presentation.describe() == class_group(named_fan(name)).presentation.describe());
    }
    CHECK_THROWS_AS(picard_group(Fan(2, {make_vector({1, 0}), make_vector({0, 1})}, {{0, 1}})), HypothesisError);
}

TEST_CASE("Picard classes map injectively into the class group") {
    gen::Rng rng(33);
    for (const auto& name : gen::all_named()) {
        const Fan fan = named_fan(name);
        const PicardGroup pic = picard_group(fan);
        const ClassGroup cl = class_group(fan);
        for (int i = 0; i < 15; ++i) {
            const TDivisor a = gen::random_cartier(rng, fan, pic);
            const TDivisor b = gen::random_cartier(rng, fan, pic);
            CHECK((pic.class_of(a) == pic.class_of(b)) == (cl.class_of(a) == cl.class_of(b)));
            CHECK(pic.class_of(pic.representative(pic.class_of(a))) == pic.class_of(a));
        }
    }
}

TEST_CASE("cocycle of H on P2") {
    const Fan p2 = named_fan("P2");
    const TDivisor h = div({0, 0, 1});
    const CartierData data = is_cartier(p2, h);
    REQUIRE(data.cartier);
    CHECK(data.witnesses[0] == make_vector({0, 0}));
    CHECK(data.witnesses[1] == make_vector({1, 0}));
    CHECK(data.witnesses[2] == make_vector({0, 1}));
    const MonomialCocycle a = divisor_to_cocycle(p2, h);
    CHECK(a(0, 1) == make_vector({-1, 0}));
    CHECK(a(0, 2) == make_vector({0, -1}));
    CHECK(a(1, 2) == make_vector({1, -1}));
    CHECK(is_valid_cocycle(p2, a));
    CHECK(cocycle_class_equal(p2, a, a));
    CHECK_FALSE(cocycle_class_equal(p2, a, divisor_to_cocycle(p2, div({0, 0, 2}))));
    CHECK(cocycle_class_equal(p2, pullback_by_power_map(a, 2), divisor_to_cocycle(p2, div({0, 0, 2}))));
    CHECK(pullback_by_power_map(a, 1) == a);
    const MonomialCocycle zero = divisor_to_cocycle(p2, div({0, 0, 0}));
    CHECK(pullback_by_power_map(zero, 5) == zero);
    CHECK(divisor_to_cocycle(p2, principal_divisor(p2, make_vector({2, -3}))) == zero);
    CHECK_THROWS_AS(divisor_to_cocycle(named_fan("P112"), div({1, 0, 0})), HypothesisError);
}

TEST_CASE("generated cocycles are antisymmetric cocycles with dual-cone entries") {
    gen::Rng rng(34);
    for (const auto& name : gen::all_named()) {
        const Fan fan = named_fan(name);
        const PicardGroup pic = picard_group(fan);
        for (int i = 0; i < 20; ++i) {
            const TDivisor d = gen::random_cartier(rng, fan, pic);
            const MonomialCocycle a = divisor_to_cocycle(fan, d);
            CHECK(is_valid_cocycle(fan, a));
            const std::size_t r = fan.num_max_cones();
            for (std::size_t x = 0; x < r; ++x)
                for (std::size_t y = 0; y < r; ++y) {
                    CHECK(a(x, y) == -a(y, x));
                    for (std::size_t z = 0; z < r; ++z) CHECK(a(x, y) + a(y, z) == a(x, z));
                }
            // translating by a principal divisor keeps the class
            const TDivisor moved = d + principal_divisor(fan, gen::random_vector(rng, fan.rank(), -3, 3));
            CHECK(cocycle_class_equal(fan, a, divisor_to_cocycle(fan, moved)));
        }
    }
}

TEST_CASE("cocycle classes agree with Picard classes") {
    gen::Rng rng(35);
    for (const auto& name : gen::all_named()) {
        const Fan fan = named_fan(name);
        const PicardGroup pic = picard_group(fan);
        for (int i = 0; i < 20; ++i) {
            const TDivisor a = gen::random_cartier(rng, fan, pic, 2);
            const TDivisor b = gen::random_cartier(rng, fan, pic, 2);
            CHECK(cocycle_class_equal(fan, divisor_to_cocycle(fan, a), divisor_to_cocycle(fan, b)) ==
                  (pic.class_of(a) == pic.class_of(b)));
        }
    }
}

TEST_CASE("power-map pullback multiplies classes") {
    gen::Rng rng(36);
    for (const auto& name : gen::all_named()) {
        const Fan fan = named_fan(name);
        const PicardGroup pic = picard_group(fan);
        for (int i = 0; i < 10; ++i) {
            const TDivisor d = gen::random_cartier(rng, fan, pic);
            for (long t : {2L, 3L, 5L}) {
                const MonomialCocycle pulled = pullback_by_power_map(divisor_to_cocycle(fan, d), t);
                CHECK(is_valid_cocycle(fan, pulled));
                CHECK(cocycle_class_equal(fan, pulled, divisor_to_cocycle(fan, Integer(t) * d)));
            }
        }
    }
}

TEST_CASE("divisor polytopes") {
    const Fan p2 = named_fan("P2");
    const DivisorPolytope tri = divisor_polytope(p2, div({0, 0, 3}));
    CHECK(tri.dim == 2);
    CHECK(tri.vertices == std::vector<RatVector>{rat({0, 0}), rat({0, 3}), rat({3, 0})});
    CHECK(lattice_points(tri, false).size() == 10);
    CHECK(lattice_points(tri, true) == std::vector<IntVector>{make_vector({1, 1})});

    const DivisorPolytope point = divisor_polytope(p2, div({0, 0, 0}));
    CHECK(point.dim == 0);
    CHECK(lattice_points(point, true) == std::vector<IntVector>{make_vector({0, 0})});

    const DivisorPolytope empty = divisor_polytope(p2, div({0, 0, -1}));
    CHECK(empty.empty());
    CHECK(lattice_points(empty, false).empty());

    // a segment in P1 x P1: relative interior excludes its endpoints only
    const DivisorPolytope seg = divisor_polytope(named_fan("P1xP1"), div({0, 0, 2, 0}));
    CHECK(seg.dim == 1);
    CHECK(lattice_points(seg, false).size() == 3);
    CHECK(lattice_points(seg, true) == std::vector<IntVector>{make_vector({1, 0})});

    const Fan plane(2, {make_vector({1, 0}), make_vector({0, 1})}, {{0, 1}});
    CHECK_THROWS_AS(divisor_polytope(plane, div({0, 0})), HypothesisError);
}

TEST_CASE("lattice point counts match the box scan and closed simplex counts") {
    const Fan p2 = named_fan("P2");
    for (long d = 0; d <= 6; ++d) {
        const DivisorPolytope p = divisor_polytope(p2, div({0, 0, d}));
        CHECK(lattice_points(p, false).size() == oracle::simplex_points(d, 2, false));
        if (d > 0) CHECK(lattice_points(p, true).size() == oracle::simplex_points(d, 2, true));
    }
    const Fan p3 = named_fan("P3");
    for (long d = 1; d <= 4; ++d)
        CHECK(lattice_points(divisor_polytope(p3, div({0, 0, 0, d})), true).size() == oracle::simplex_points(d, 3, true));

    gen::Rng rng(37);
    for (const auto& name : gen::all_named()) {
        const Fan fan = named_fan(name);
        for (int i = 0; i < 10; ++i) {
            const IntVector a = gen::random_vector(rng, fan.num_rays(), -2, 4);
            const DivisorPolytope p = divisor_polytope(fan, TDivisor{a});
            CHECK(lattice_points(p, false).size() == oracle::box_scan(fan, a, 30, false));
            if (p.dim == static_cast<int>(fan.rank()))
                CHECK(lattice_points(p, true).size() == oracle::box_scan(fan, a, 30, true));
        }
    }
}

TEST_CASE("polytope translation and scaling") {
    gen::Rng rng(38);
    for (const auto& name : gen::all_named()) {
        const Fan fan = named_fan(name);
        for (int i = 0; i < 10; ++i) {
            const TDivisor d{gen::random_vector(rng, fan.num_rays(), -1, 3)};
            const DivisorPolytope p = divisor_polytope(fan, d);
            const IntVector m = gen::random_vector(rng, fan.rank(), -3, 3);
            const DivisorPolytope moved = divisor_polytope(fan, d + principal_divisor(fan, m));
            CHECK(moved.dim == p.dim);
            std::vector<RatVector> shifted;
            for (const auto& v : p.vertices) {
                RatVector w = v;
                for (std::size_t j = 0; j < w.size(); ++j) w[j] -= m[j];
                shifted.push_back(w);
            }
            std::sort(shifted.begin(), shifted.end());
            CHECK(moved.vertices == shifted);
            for (long t : {2L, 3L}) {
                const DivisorPolytope scaled = divisor_polytope(fan, Integer(t) * d);
                CHECK(scaled.dim == p.dim);
                std::vector<RatVector> expected;
                for (const auto& v : p.vertices) {
                    RatVector w = v;
                    for (auto& x : w) x *= t;
                    expected.push_back(w);
                }
                CHECK(scaled.vertices == expected);
            }
        }
    }
}

TEST_CASE("basepoint freeness") {
    const Fan p2 = named_fan("P2");
    for (long d = 0; d <= 4; ++d) CHECK(is_basepoint_free(p2, div({0, 0, d})));
    CHECK_FALSE(is_basepoint_free(p2, div({0, 0, -1})));
    CHECK_THROWS_AS(is_basepoint_free(named_fan("P112"), div({1, 0, 0})), HypothesisError);
    // F1: a fibre and the pullback of H are bpf, the (-1)-curve D1 is not
    const Fan f1 = named_fan("F1");
    CHECK(is_basepoint_free(f1, div({0, 0, 1, 0})));
    CHECK(is_basepoint_free(f1, div({0, 0, 0, 1})));
    CHECK_FALSE(is_basepoint_free(f1, div({0, 1, 0, 0})));
    gen::Rng rng(39);
    for (const auto& name : gen::smooth_named()) {
        const Fan fan = named_fan(name);
        for (int i = 0; i < 10; ++i) {
            const TDivisor d{gen::random_vector(rng, fan.num_rays(), -2, 3)};
            CHECK(is_basepoint_free(fan, d) == is_basepoint_free(fan, Integer(2) * d));
        }
    }
}
