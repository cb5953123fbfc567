#include <doctest.h>

#include <cmath>
#include <random>

#include "kappa/constants.hpp"
#include "kappa/interval.hpp"

using kappa::Interval;

TEST_CASE("interval arithmetic encloses the exact result") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    for (int i = 0; i < 20000; ++i) {
        double a = dist(rng), b = dist(rng);
        Interval ia(a), ib(b);
        CHECK((ia + ib).contains(a + b));
        CHECK((ia - ib).contains(a - b));
        CHECK((ia * ib).contains(a * b));
        if (std::fabs(b) > 1e-6) CHECK((ia / ib).contains(a / b));
    }
}

TEST_CASE("interval transcendentals enclose and stay tight") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(0.001, 1000.0);
    for (int i = 0; i < 20000; ++i) {
        double a = dist(rng);
        Interval ia(a);
        Interval l = log(ia);
        CHECK(l.contains(std::log(a)));
        Interval s = sqrt(ia);
        CHECK(s.contains(std::sqrt(a)));
        double ea = std::fmod(a, 30.0);
        Interval e = exp(Interval(ea));
        CHECK(e.contains(std::exp(ea)));
        CHECK(e.width() <= 1e-14 * std::exp(ea));
    }
}

TEST_CASE("interval composition tracks a chained expression") {
    // (1 - 3 ln x / (8 pi sqrt x)) evaluated two ways.
    for (double x : {59.0, 1000.0, 5e5, 1e7}) {
        Interval xi(x);
        Interval v = 1.0 - 3.0 * log(xi) / (8.0 * kappa::pi_interval() * sqrt(xi));
        double plain = 1.0 - 3.0 * std::log(x) / (8.0 * kappa::kPi * std::sqrt(x));
        CHECK(v.contains(plain));
        CHECK(v.width() < 1e-13);
    }
}

TEST_CASE("degenerate operands are rejected") {
    CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(log(Interval(-2.0, 1.0)), std::domain_error);
    CHECK_THROWS_AS(sqrt(Interval(-1.0)), std::domain_error);
}

TEST_CASE("fabs handles sign-straddling intervals") {
    Interval f = fabs(Interval(-3.0, 2.0));
    CHECK(f.lo == 0.0);
    CHECK(f.hi == 3.0);
    CHECK(fabs(Interval(-5.0, -1.0)).lo == 1.0);
    CHECK(fabs(Interval(1.0, 5.0)).hi == 5.0);
}

TEST_CASE("enclose_constant brackets the decimal literal") {
    Interval g = kappa::gamma_interval();
    CHECK(g.lo < 0.5772156649015329);
    CHECK(g.hi > 0.5772156649015328);
    CHECK(g.width() < 1e-15);
}
