#include "doctest.h"

#include <cmath>
#include <vector>

#include "gft/special.hpp"

using namespace gft;

TEST_CASE("pochhammer basics")
{
    CHECK(pochhammer(2.0, 0) == 1.0);
    CHECK(pochhammer(1.0, 4) == doctest::Approx(24.0)); // 1*2*3*4
    CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75)); // 0.5*1.5
    CHECK(pochhammer(-3.0, 5) == 0.0);                  // hits zero factor
    CHECK_THROWS_AS(pochhammer(1.0, -1), InvalidParams);
}

TEST_CASE("pfq trivial cases")
{
    CHECK(pfq({}, {}, -0.5, 1e-12) ==
          doctest::Approx(std::exp(-0.5)).epsilon(1e-12)); // 0F0 = e^z
    const double one[1] = {1.0};
    CHECK(pfq(one, {}, -0.5, 1e-12) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12)); // 1F0 = 1/(1-z)
}

TEST_CASE("2F1(1,1;2;-1) = ln 2 via the boundary path")
{
    const double num[2] = {1.0, 1.0};
    const double den[1] = {2.0};
    auto r = pfq_full(num, den, -1.0, 1e-10);
    CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(r.accelerated);
}

TEST_CASE("pfq matches exp on a grid")
{
    for (double z : {-1.0, -0.75, -0.5, -0.25, 0.0})
        CHECK(pfq({}, {}, z, 1e-13) ==
              doctest::Approx(std::exp(z)).epsilon(1e-12));
}

TEST_CASE("term recursion equals direct pochhammer products")
{
    // the recursion term_{n+1} = term_n * prod(a+n)/(prod(d+n)(n+1)) z must
    // reproduce the closed product form for the first 20 terms
    const double num[5] = {1.0, 2.0, 1.75, 2.0, 0.5};
    const double den[4] = {1.0, 0.75, 3.0, 1.5};
    const double z = -0.3;
    double term = 1.0;
    for (int n = 0; n < 20; ++n) {
        double direct = std::pow(z, n) / std::tgamma(n + 1.0);
        for (double a : num) direct *= pochhammer(a, n);
        for (double d : den) direct /= pochhammer(d, n);
        CHECK(term == doctest::Approx(direct).epsilon(1e-12));
        double ratio = z / (n + 1.0);
        for (double a : num) ratio *= a + n;
        for (double d : den) ratio /= d + n;
        term *= ratio;
    }
    // and the summed value is stable against a longer independent sum
    // (60 terms: tail < 0.3^60, and the pochhammer products stay in range)
    double full = 0.0;
    for (int n = 0; n < 60; ++n) {
        double t = std::pow(z, n) / std::tgamma(n + 1.0);
        for (double a : num) t *= pochhammer(a, n);
        for (double d : den) t /= pochhammer(d, n);
        full += t;
    }
    CHECK(pfq(num, den, z, 1e-14) == doctest::Approx(full).epsilon(1e-12));
}

TEST_CASE("pfq rejects bad arguments")
{
    const double num[2] = {1.0, 1.0};
    const double den_pole[1] = {-2.0};
    CHECK_THROWS_AS(pfq(num, den_pole, -0.5, 1e-10), InvalidParams);
    const double num3[3] = {1.0, 1.0, 1.0};
    const double den1[1] = {2.0};
    CHECK_THROWS_AS(pfq(num3, den1, -0.5, 1e-10), InvalidParams);
    const double den2[1] = {2.0};
    CHECK_THROWS_AS(pfq(num, den2, 0.5, 1e-10), InvalidParams);
}

TEST_CASE("acceleration breakdown is reported, not silently wrong")
{
    // sum(den) - sum(num) = -24.6 at z = -1: terms grow like n^23, so the
    // averaged tail drowns in cancellation noise and must throw
    const double num[5] = {5.0, 5.0, 5.0, 5.0, 5.0};
    const double den[4] = {0.1, 0.1, 0.1, 0.1};
    CHECK_THROWS_AS(pfq(num, den, -1.0, 1e-10), NonConvergent);
}

TEST_CASE("euler averaging sums Abel-boundary series")
{
    // sum (-1)^n = 1/2, sum (-1)^n (n+1) = 1/4 (Abel values)
    std::vector<double> s1, s2;
    double a = 0.0, b = 0.0;
    for (int n = 0; n < 200; ++n) {
        a += (n % 2 ? -1.0 : 1.0);
        b += (n % 2 ? -1.0 : 1.0) * (n + 1.0);
        s1.push_back(a);
        s2.push_back(b);
    }
    CHECK(euler_tail_average<double>(s1, 48).value ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(euler_tail_average<double>(s2, 48).value ==
          doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("euler averaging on alternating log-2 series")
{
    std::vector<double> s;
    double a = 0.0;
    for (int n = 1; n <= 60; ++n) {
        a += (n % 2 ? 1.0 : -1.0) / n;
        s.push_back(a);
    }
    auto r = euler_tail_average<double>(s, 48);
    CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(std::abs(r.value - std::log(2.0)) <= 100 * r.err + 1e-13);
}
