#include "zariski/cyclotomic.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

using namespace zariski;
using namespace oracle;

namespace {

std::complex<double> approx(const CycNum& a, int root_index)
{
    std::complex<double> s = 0;
    const double t = 2 * M_PI * root_index / a.order();
    for (int j = 0; j < a.degree(); ++j)
        s += a.coeff(j).get_d() * std::polar(1.0, t * j);
    return s;
}

}  // namespace

TEST_CASE("cyclotomic polynomial of order 10")
{
    CHECK(cyclotomic_poly(10) == std::vector<long>{1, -1, 1, -1, 1});
    CHECK(euler_phi(10) == 4);
    CHECK(euler_phi(40) == 16);
}

TEST_CASE("cyclotomic polynomials agree with the Moebius product")
{
    for (int n : {1, 2, 3, 4, 5, 8, 10, 12, 15, 20, 30, 40}) {
        auto p = oracle_phi(n);
        const auto& lib = cyclotomic_poly(n);
        REQUIRE(lib.size() == p.size());
        for (size_t i = 0; i < p.size(); ++i)
            CHECK(p[i] == lib[i]);
    }
}

TEST_CASE("arithmetic matches a naive polynomial-mod oracle on 1000 random pairs")
{
    std::mt19937 rng(20240611);
    int checked = 0;
    for (int n : {10, 20, 40}) {
        int rounds = n == 10 ? 1000 : 200;
        for (int it = 0; it < rounds; ++it) {
            Poly pa = random_poly(rng, 2 * euler_phi(n)), pb = random_poly(rng, euler_phi(n) + 3);
            CycNum a = CycNum::from_poly(n, pa), b = CycNum::from_poly(n, pb);
            CHECK(a.coeffs() == reduce(pa, n));
            Poly sum(std::max(pa.size(), pb.size()), 0), diff = sum;
            for (size_t i = 0; i < sum.size(); ++i) {
                mpq_class x = i < pa.size() ? pa[i] : 0, y = i < pb.size() ? pb[i] : 0;
                sum[i] = x + y;
                diff[i] = x - y;
            }
            CHECK((a + b).coeffs() == reduce(sum, n));
            CHECK((a - b).coeffs() == reduce(diff, n));
            CHECK((a * b).coeffs() == reduce(mul(pa, pb), n));
            if (!b.is_zero())
                CHECK((a / b) * b == a);
            ++checked;
        }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("inverse and exact zero tests")
{
    const int n = 10;
    CycNum z = CycNum::zeta(n);
    CHECK(z.pow(10) == CycNum(n, 1L));
    CHECK(z.pow(5) == CycNum(n, -1L));
    CHECK((z.pow(4) - z.pow(3) + z.pow(2) - z + CycNum(n, 1L)).is_zero());
    CHECK(z.inverse() * z == CycNum(n, 1L));
    CHECK(z.pow(-3) == z.pow(7));
    CHECK_THROWS_AS(CycNum(n, 0L).inverse(), Error);
    CycNum q(n, mpq_class(-3, 7));
    CHECK(q.is_rational());
    CHECK(q.rational() == mpq_class(-3, 7));
    CHECK_FALSE(z.is_rational());
}

TEST_CASE("galois maps are field automorphisms")
{
    std::mt19937 rng(7);
    for (int n : {10, 20}) {
        for (int k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1)
                continue;
            for (int it = 0; it < 20; ++it) {
                CycNum a = CycNum::from_poly(n, random_poly(rng, 6)), b = CycNum::from_poly(n, random_poly(rng, 6));
                CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
                CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
                // composition: (a^k)^l == a^(kl)
                CHECK(a.galois(k).galois(n - 1) == a.galois((k * (n - 1)) % n));
            }
        }
        CHECK_THROWS_AS(CycNum::zeta(n).galois(2), Error);
    }
}

TEST_CASE("lift is a ring homomorphism and keeps the embedded value")
{
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        CycNum a = CycNum::from_poly(10, random_poly(rng, 5)), b = CycNum::from_poly(10, random_poly(rng, 5));
        CHECK((a * b).lift(40) == a.lift(40) * b.lift(40));
        Embedding e{10, 3};
        Embedding f = extend_embedding(e, 8);
        CHECK(f.field_order == 40);
        CHECK(std::abs(approx(a, 3) - approx(a.lift(40), f.root_index)) < 1e-9);
    }
    CHECK(CycNum::zeta(10).lift(20) == CycNum::zeta(20, 2));
}

TEST_CASE("extended embedding sends the new root to exp(2 pi i / q)")
{
    for (int k : {1, 3, 7, 9}) {
        Embedding f = extend_embedding({10, k}, 8);
        auto w = approx(CycNum::zeta(40, 5), f.root_index);
        CHECK(std::abs(w - std::polar(1.0, M_PI / 4)) < 1e-12);
        CHECK(f.root_index % 10 == k);
    }
}

TEST_CASE("embedding balls contain the true value and refine")
{
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        int n = it % 2 ? 10 : 40;
        int k = n == 10 ? 3 : 13;
        CycNum a = CycNum::from_poly(n, random_poly(rng, euler_phi(n)));
        ComplexBall lo = embed(a, {n, k}, 64), hi = embed(a, {n, k}, 256);
        CHECK(lo.contains(hi));
        auto d = approx(a, k);
        CHECK(std::abs(lo.re() - d.real()) < 1e-9 * (1 + std::abs(d)));
        CHECK(std::abs(lo.im() - d.imag()) < 1e-9 * (1 + std::abs(d)));
    }
}

TEST_CASE("the root of index 3 lies near -0.31 + 0.95 i")
{
    ComplexBall b = embed(CycNum::zeta(10), {10, 3}, 64);
    CHECK(b.re() == doctest::Approx(-0.309017).epsilon(1e-5));
    CHECK(b.im() == doctest::Approx(0.951057).epsilon(1e-5));
}

TEST_CASE("certified signs agree with floating point away from zero")
{
    std::mt19937 rng(3);
    for (int it = 0; it < 300; ++it) {
        int n = 20;
        CycNum a = CycNum::from_poly(n, random_poly(rng, 8));
        auto d = approx(a, 13);
        if (std::abs(d.real()) > 1e-6)
            CHECK(certified_sign(a, Part::Real, {n, 13}) == (d.real() > 0 ? 1 : -1));
        if (std::abs(d.imag()) > 1e-6)
            CHECK(certified_sign(a, Part::Imag, {n, 13}) == (d.imag() > 0 ? 1 : -1));
    }
}

TEST_CASE("exact ties are certified as zero")
{
    const int n = 20;
    CycNum i = CycNum::zeta(n, 5);
    CHECK(certified_sign(i, Part::Real, {n, 1}) == 0);
    CHECK(certified_sign(i, Part::Imag, {n, 1}) == 1);
    CHECK(certified_sign(i, Part::Imag, {n, 19}) == -1);
    // zeta + zeta^-1 is real: 2 cos(2 pi / 20)
    CycNum r = CycNum::zeta(n) + CycNum::zeta(n, 19);
    CHECK(certified_sign(r, Part::Imag, {n, 1}) == 0);
    CHECK(certified_sign(r, Part::Real, {n, 1}) == 1);
    // r minus a 300-bit rational approximation: certifying it needs more than 64 bits
    mpq_class approx300 = embed(r, {n, 1}, 300).re_mid;
    CycNum tiny = r - CycNum(n, approx300);
    mpq_class reference = embed(r, {n, 1}, 1200).re_mid - approx300;
    REQUIRE(reference != 0);
    CHECK(certified_sign(tiny, Part::Real, {n, 1}) == sgn(reference));
    CHECK(certified_sign(-tiny, Part::Real, {n, 1}) == -sgn(reference));
}

TEST_CASE("real and imaginary parts")
{
    std::mt19937 rng(17);
    for (int it = 0; it < 50; ++it) {
        CycNum a = CycNum::from_poly(20, random_poly(rng, 8));
        auto d = approx(a, 13);
        CHECK(approx(real_part(a), 13).real() == doctest::Approx(d.real()));
        CHECK(approx(imag_part(a), 13).real() == doctest::Approx(d.imag()));
        CHECK(std::abs(approx(imag_part(a), 13).imag()) < 1e-9);
    }
}

TEST_CASE("textual form round trips")
{
    std::mt19937 rng(19);
    for (int it = 0; it < 200; ++it) {
        CycNum a = CycNum::from_poly(10, random_poly(rng, 4));
        CHECK(parse_cyc(a.str(), 10) == a);
    }
    CycNum z = CycNum::zeta(10);
    CHECK(parse_cyc("-a^3", 10) == -z.pow(3));
    CHECK(parse_cyc("-a(a-1)", 10) == -z * (z - CycNum(10, 1L)));
    CHECK(parse_cyc("1/2*a - 3/4", 10) == mpq_class(1, 2) * z - CycNum(10, mpq_class(3, 4)));
    CHECK(parse_cyc("(a-1)^2", 10) == (z - CycNum(10, 1L)) * (z - CycNum(10, 1L)));
    CHECK(CycNum(10, 0L).str() == "0");
    CHECK_THROWS_AS(parse_cyc("a+", 10), Error);
    CHECK_THROWS_AS(parse_cyc("b", 10), Error);
    CHECK_THROWS_AS(parse_cyc("1/0", 10), Error);
}

TEST_CASE("mixing fields is rejected")
{
    CHECK_THROWS_AS(CycNum::zeta(10) + CycNum::zeta(20), Error);
    CHECK_THROWS_AS(check_embedding({10, 5}), Error);
    CHECK_NOTHROW(check_embedding({10, 7}));
}
