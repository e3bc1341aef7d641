#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "chebwav/dwt.hpp"
#include "chebwav/filterbank.hpp"
#include "chebwav/filters.hpp"
#include "chebwav/signals.hpp"

using namespace chebwav;

namespace {

// Definition-level single-level analysis: periodic extension, convolve,
// keep even-indexed outputs. Independent of the library's index juggling.
std::vector<double> brute_periodic_down(const std::vector<double>& x,
                                        const std::vector<double>& taps) {
    const long long n = static_cast<long long>(x.size());
    std::vector<double> out(static_cast<std::size_t>(n / 2), 0.0);
    for (long long i = 0; i < n / 2; ++i) {
        double acc = 0.0;
        for (long long k = 0; k < static_cast<long long>(taps.size()); ++k) {
            const long long j = ((2 * i - k) % n + n) % n;
            acc += taps[static_cast<std::size_t>(k)] *
                   x[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

std::vector<double> right_extended(std::vector<double> x) {
    if (x.size() % 2 != 0) x.push_back(x.back());
    return x;
}

double sum_sq(const std::vector<double>& v) {
    double acc = 0.0;
    for (double s : v) acc += s * s;
    return acc;
}

}  // namespace

TEST_CASE("single-level analysis equals brute-force circular convolution") {
    GaussianSource rng(2024);
    for (const FilterTaps& p :
         {make_type1(1), make_type1(3), make_type1(5), make_type2(3),
          make_type2(5), make_type2_generalized(3, 1)}) {
        const FilterBank bank = build_bank(p);
        for (int n : {4, 8, 17, 40, 63, 64}) {
            if ((std::size_t)n < 2) continue;
            const Signal x{rng.sample(n), "x"};
            const DecompositionTree t =
                analyze(x, bank, 1, BoundaryMode::Periodic);
            const std::vector<double> ext = right_extended(x.samples);
            const std::vector<double> want_a =
                brute_periodic_down(ext, bank.h_d);
            const std::vector<double> want_d =
                brute_periodic_down(ext, bank.g_d);
            REQUIRE(t.approximation.size() == want_a.size());
            REQUIRE(t.details.size() == 1);
            REQUIRE(t.details[0].size() == want_d.size());
            for (std::size_t i = 0; i < want_a.size(); ++i) {
                CHECK(t.approximation[i] ==
                      doctest::Approx(want_a[i]).epsilon(1e-12));
                CHECK(t.details[0][i] ==
                      doctest::Approx(want_d[i]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("analysis is linear") {
    GaussianSource rng(7);
    const int n = 48;
    const std::vector<double> x = rng.sample(n), y = rng.sample(n);
    const double a = 1.75, b = -0.3;
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i) z[(std::size_t)i] = a * x[(std::size_t)i] + b * y[(std::size_t)i];
    const FilterBank bank = build_bank(make_type2(3));
    const auto tx = analyze({x, ""}, bank, 2, BoundaryMode::Periodic);
    const auto ty = analyze({y, ""}, bank, 2, BoundaryMode::Periodic);
    const auto tz = analyze({z, ""}, bank, 2, BoundaryMode::Periodic);
    for (std::size_t i = 0; i < tz.approximation.size(); ++i)
        CHECK(tz.approximation[i] ==
              doctest::Approx(a * tx.approximation[i] + b * ty.approximation[i])
                  .epsilon(1e-12));
    for (int lvl = 0; lvl < 2; ++lvl)
        for (std::size_t i = 0; i < tz.details[(std::size_t)lvl].size(); ++i)
            CHECK(tz.details[(std::size_t)lvl][i] ==
                  doctest::Approx(a * tx.details[(std::size_t)lvl][i] +
                                  b * ty.details[(std::size_t)lvl][i])
                      .epsilon(1e-12));
}

TEST_CASE("periodic round trip is exact for reconstructing banks") {
    GaussianSource rng(99);
    const Signal x{rng.sample(64), "x"};
    for (int m : {1, 3, 5}) {
        const FilterBank bank = build_bank(make_type1(m));
        CHECK(reconstruction_error(x, bank, 3, BoundaryMode::Periodic) < 1e-12);
    }
    // odd length forces the right-extension path
    const Signal odd{rng.sample(21), "odd"};
    CHECK(reconstruction_error(odd, build_bank(make_type1(3)), 2,
                               BoundaryMode::Periodic) < 1e-12);
}

TEST_CASE("periodic round trip fails for the non-reconstructing bank") {
    GaussianSource rng(5);
    const Signal x{rng.sample(64), "x"};
    const FilterBank bank = build_bank(make_type2(3));
    CHECK(reconstruction_error(x, bank, 3, BoundaryMode::Periodic) > 1e-6);
}

TEST_CASE("orthogonal banks preserve energy") {
    GaussianSource rng(314);
    const Signal x{rng.sample(64), "x"};
    for (int m : {1, 3, 5}) {
        const FilterBank bank = build_bank(make_type1(m));
        const DecompositionTree t = analyze(x, bank, 3, BoundaryMode::Periodic);
        double total = sum_sq(t.approximation);
        for (const auto& d : t.details) total += sum_sq(d);
        CHECK(total == doctest::Approx(sum_sq(x.samples)).epsilon(1e-10));
    }
}

TEST_CASE("zero-padded round trip windows back exactly") {
    GaussianSource rng(11);
    for (int n : {10, 16, 33}) {
        const Signal x{rng.sample(n), "x"};
        for (int m : {1, 3}) {
            const FilterBank bank = build_bank(make_type1(m));
            const DecompositionTree t =
                analyze(x, bank, 3, BoundaryMode::ZeroPad);
            CHECK(t.boundary_mode == BoundaryMode::ZeroPad);
            const Signal y = synthesize(t, bank);
            REQUIRE(y.samples.size() == x.samples.size());
            for (std::size_t i = 0; i < y.samples.size(); ++i)
                CHECK(y.samples[i] ==
                      doctest::Approx(x.samples[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("zero-pad coefficient counts grow by the filter order") {
    const FilterBank bank = build_bank(make_type1(3));
    const Signal x{std::vector<double>(10, 1.0), "x"};
    const DecompositionTree t = analyze(x, bank, 2, BoundaryMode::ZeroPad);
    CHECK(t.details[0].size() == (10 + 3 + 1) / 2);  // 7
    CHECK(t.details[1].size() == (7 + 3 + 1) / 2);   // 5
    CHECK(t.approximation.size() == 5);
}

TEST_CASE("analysis argument validation") {
    const FilterBank bank = build_bank(make_type1(1));
    CHECK_THROWS_AS(analyze({{}, ""}, bank, 1, BoundaryMode::Periodic),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        analyze({{1.0, std::numeric_limits<double>::quiet_NaN()}, ""}, bank, 1,
                BoundaryMode::Periodic),
        std::invalid_argument);
    CHECK_THROWS_AS(analyze({{1.0, 2.0}, ""}, bank, 0, BoundaryMode::Periodic),
                    std::invalid_argument);
    CHECK_THROWS_AS(analyze({{1.0, 2.0, 3.0}, ""}, bank, 2,
                            BoundaryMode::Periodic),
                    std::invalid_argument);
    CHECK_NOTHROW(analyze({{1.0, 2.0, 3.0, 4.0}, ""}, bank, 2,
                          BoundaryMode::Periodic));
}

TEST_CASE("synthesis rejects malformed trees") {
    const FilterBank bank = build_bank(make_type1(1));
    GaussianSource rng(1);
    const Signal x{rng.sample(16), "x"};
    DecompositionTree good = analyze(x, bank, 2, BoundaryMode::Periodic);

    DecompositionTree bad = good;
    bad.approximation.push_back(0.0);
    CHECK_THROWS_AS(synthesize(bad, bank), std::invalid_argument);

    bad = good;
    bad.details[1].pop_back();
    CHECK_THROWS_AS(synthesize(bad, bank), std::invalid_argument);

    bad = good;
    bad.levels = 3;
    CHECK_THROWS_AS(synthesize(bad, bank), std::invalid_argument);

    bad = good;
    bad.original_length = 0;
    CHECK_THROWS_AS(synthesize(bad, bank), std::invalid_argument);
}

TEST_CASE("reconstruction error of the zero signal") {
    const FilterBank bank = build_bank(make_type1(1));
    const Signal zero{std::vector<double>(8, 0.0), "zero"};
    CHECK(reconstruction_error(zero, bank, 2, BoundaryMode::Periodic) ==
          doctest::Approx(0.0));
}
