#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "pctk/indices.hpp"

using namespace pctk;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const PcError& e) {
        return e.code();
    }
    FAIL("expected a PcError");
    return Errc::BadInput;
}

// Oracle for kii: the unrestricted triple loop over all ordered (i, j, k).
double kii_full_loop(const PcMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            for (int k = 0; k < m.order(); ++k) {
                const double q = m.at(i, k) / (m.at(i, j) * m.at(j, k));
                worst = std::max(worst, 1.0 - std::min(q, 1.0 / q));
            }
    return worst;
}

PcMatrix random_reciprocal(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = std::exp(dist(rng));
            rows[i][j] = v;
            rows[j][i] = 1.0 / v;
        }
    return PcMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("ci formula and clamping") {
    CHECK(ci(6.0, 5) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(ci(7.0, 7) == 0.0);
    CHECK(ci(4.0 + 1.0 / 6, 4) == doctest::Approx(1.0 / 18).epsilon(1e-14));
    // Float undershoot on consistent matrices clamps to zero.
    CHECK(ci(5.0 - 1e-10, 5) == 0.0);
    CHECK(code_of([] { ci(4.9, 5); }) == Errc::BadInput);
    CHECK(code_of([] { ci(1.0, 1); }) == Errc::BadOrder);
}

TEST_CASE("kii golden values") {
    CHECK(kii(gen_cc(5)) == 0.0);
    CHECK(kii(gen_cpc(2, 4)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(kii(gen_lpc(2, 3)) == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(kii(gen_fpc(2.25, 4)) == doctest::Approx(1.0 - 1.0 / 2.25).epsilon(1e-14));
    CHECK(kii(PcMatrix::from_rows({{1, 3}, {1.0 / 3, 1}})) == 0.0);  // no triads
}

TEST_CASE("kii ordered-triad scan matches the full loop up to order 6") {
    std::mt19937 rng(41);
    for (int n = 3; n <= 6; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const PcMatrix m = random_reciprocal(n, rng);
            CHECK(kii(m) == doctest::Approx(kii_full_loop(m)).epsilon(1e-14));
        }
    CHECK(kii(gen_cpc(3, 5)) == doctest::Approx(kii_full_loop(gen_cpc(3, 5))));
    CHECK(kii(gen_lpc(2, 6)) == doctest::Approx(kii_full_loop(gen_lpc(2, 6))));
}

TEST_CASE("kii stays in [0, 1) and vanishes exactly on consistent matrices") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const PcMatrix m = random_reciprocal(3 + static_cast<int>(rng() % 5), rng);
        const double v = kii(m);
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        CHECK((v <= 1e-9) == m.is_consistent(1e-9));
    }
    CHECK(kii(PcMatrix::from_weights({3, 1, 4, 1.5, 9})) <= 1e-12);
}

TEST_CASE("ci_upper_bound") {
    CHECK(ci_upper_bound(1.0) == 0.0);
    CHECK(ci_upper_bound(2.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(ci_upper_bound(9.0) == doctest::Approx(64.0 / 18).epsilon(1e-15));
    CHECK(code_of([] { ci_upper_bound(0.5); }) == Errc::BadInput);
}

TEST_CASE("ag_perron_bounds") {
    CHECK(ag_perron_bounds(1.0, 7) == std::pair<double, double>{7.0, 7.0});
    const auto b25 = ag_perron_bounds(2.0, 5);
    CHECK(b25.first == 5.0);
    CHECK(b25.second == doctest::Approx(6.0).epsilon(1e-15));
    const auto b24 = ag_perron_bounds(2.0, 4);
    CHECK(b24.second == doctest::Approx(4.75).epsilon(1e-15));
    CHECK(code_of([] { ag_perron_bounds(2.0, 1); }) == Errc::BadOrder);
}

TEST_CASE("family_ci closed forms") {
    CHECK(*family_ci({Kind::CC, 1.0, 6, 1, {}, {}}).exact == 0.0);
    CHECK(*family_ci({Kind::CkPC, 2.0, 5, 2, {}, {}}).exact ==
          doctest::Approx(0.25).epsilon(1e-15));
    CHECK(*family_ci({Kind::FPC, 3.375, 3, 1, {}, {}}).exact ==
          doctest::Approx(1.0 / 12).epsilon(1e-14));
    CHECK(*family_ci({Kind::LPC, 2.0, 5, 1, {}, {}}).exact ==
          doctest::Approx(0.25).epsilon(1e-15));

    const auto lpc4 = family_ci({Kind::LPC, 2.0, 4, 1, {}, {}});
    REQUIRE(lpc4.bounds.has_value());
    CHECK(lpc4.bounds->first == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(lpc4.bounds->second == doctest::Approx(0.25).epsilon(1e-15));

    const auto cpc = family_ci({Kind::CPC, 2.0, 4, 1, {}, {}});
    REQUIRE(cpc.bounds.has_value());
    CHECK(cpc.bounds->first == 0.0);
    CHECK(cpc.bounds->second == doctest::Approx(1.0 / 48).epsilon(1e-14));
}

TEST_CASE("even LPC bounds straddle the measured CI") {
    // Table-style spot check: x = 2, n = 4 has lambda near 4.644739.
    const double lambda = perron_power(gen_lpc(2, 4)).lambda_max;
    CHECK(ci(lambda, 4) == doctest::Approx(0.214913).epsilon(1e-5));
    const auto bounds = *family_ci({Kind::LPC, 2.0, 4, 1, {}, {}}).bounds;
    CHECK(bounds.first <= ci(lambda, 4));
    CHECK(ci(lambda, 4) < bounds.second);
}

TEST_CASE("fpc_ci_limit") {
    CHECK(fpc_ci_limit(2.0) == doctest::Approx(0.0820212).epsilon(1e-5));
    CHECK(fpc_ci_limit(1.0) == 0.0);
    CHECK(fpc_ci_limit(9.0) ==
          doctest::Approx((81.0 - 1) / (18.0 * std::log(9.0)) - 1).epsilon(1e-15));
    CHECK(code_of([] { fpc_ci_limit(-1.0); }) == Errc::BadInput);
}

TEST_CASE("closed-form FPC CI approaches the limit at n = 10^4") {
    for (const double x : {2.0, 5.0, 9.0}) {
        const double at_n = ci(*closed_form_perron({Kind::FPC, x, 10000, 1, {}, {}}), 10000);
        CHECK(std::abs(at_n - fpc_ci_limit(x)) <= 1e-3);
    }
}

TEST_CASE("analyze on the consistent matrix") {
    const ConsistencyReport rep = analyze(gen_cc(4), FamilySpec{Kind::CC, 1.0, 4, 1, {}, {}});
    CHECK(rep.ci == 0.0);
    CHECK(rep.kii == 0.0);
    CHECK(rep.ci_upper == 0.0);
    CHECK(*rep.closed_form_ci == 0.0);
    for (const auto& e : rep.estimates) CHECK(e.satisfied);
}

TEST_CASE("analyze on the full counterexample matrix") {
    const ConsistencyReport rep = analyze(gen_fpc(2.25, 4), FamilySpec{Kind::FPC, 2.25, 4, 1, {}, {}});
    CHECK(rep.ci == doctest::Approx(1.0 / 18).epsilon(1e-9));
    CHECK(rep.kii == doctest::Approx(1.0 - 1.0 / 2.25).epsilon(1e-12));
    CHECK(*rep.closed_form_ci == doctest::Approx(1.0 / 18).epsilon(1e-13));
    CHECK(rep.x == 2.25);
}

TEST_CASE("analyze cross-fills the corner closed form and its estimates") {
    const ConsistencyReport rep = analyze(gen_cpc(2, 4), FamilySpec{Kind::CPC, 2.0, 4, 1, {}, {}});
    CHECK(rep.ci == doctest::Approx(0.020215675851381).epsilon(1e-9));
    REQUIRE(rep.closed_form_ci.has_value());
    CHECK(*rep.closed_form_ci == doctest::Approx(0.020215675851381).epsilon(1e-12));
    REQUIRE(rep.estimates.size() == 3);
    CHECK(rep.estimates[1].name == "cpc_ci_upper");
    CHECK(rep.estimates[1].value == doctest::Approx(0.125));
    CHECK(rep.estimates[2].name == "cpc_ci_upper_improved");
    CHECK(rep.estimates[2].value == doctest::Approx(1.0 / 48).epsilon(1e-14));
    for (const auto& e : rep.estimates) CHECK(e.satisfied);
}

TEST_CASE("analyze without a spec falls back to the entry ratio") {
    const PcMatrix m = PcMatrix::from_rows({{1, 2, 8}, {0.5, 1, 2}, {0.125, 0.5, 1}});
    const ConsistencyReport rep = analyze(m);
    CHECK(rep.x == 8.0);
    CHECK(rep.ci_upper == doctest::Approx(ci_upper_bound(8.0)));
    CHECK(rep.ci <= rep.ci_upper);
    CHECK_FALSE(rep.closed_form_ci.has_value());
}

TEST_CASE("CI sandwich holds across generated families") {
    for (const double x : {1.25, 2.0, 5.0})
        for (int n = 3; n <= 8; ++n) {
            for (const auto& m : {gen_cpc(x, n), gen_lpc(x, n), gen_fpc(x, n)}) {
                const double v = ci(perron_power(m).lambda_max, n);
                CHECK(v >= 0.0);
                CHECK(v <= ci_upper_bound(m.max_entry_ratio()) + 1e-12);
            }
        }
}

TEST_CASE("corner estimates dominate the exact value and shrink with n") {
    for (const double x : {1.5, 3.0, 6.0, 9.0}) {
        double previous = 1e300;
        for (int n = 3; n <= 30; ++n) {
            const double exact = ci(cpc_spectrum(x, n).roots.real_root, n);
            const double improved = (n - 2.0) / (n * n * (n - 1.0)) * (x - 1) * (x - 1) / x;
            const double coarse = x / (static_cast<double>(n) * n);
            CHECK(exact <= improved + 1e-12);
            CHECK(improved <= coarse + 1e-12);
            CHECK(exact < previous);
            previous = exact;
        }
        CHECK(ci(cpc_spectrum(x, 200).roots.real_root, 200) < 1e-3);
    }
}

TEST_CASE("k = 1 circulant CI increases in x and vanishes in n") {
    for (const int n : {5, 9}) {
        double previous = -1.0;
        for (double x = 1.0; x <= 9.0; x += 0.5) {
            const double value =
                x == 1.0 ? 0.0 : *family_ci({Kind::CkPC, x, n, 1, {}, {}}).exact;
            CHECK(value > previous);
            previous = value;
        }
    }
    double previous = 1e300;
    for (const int n : {5, 10, 20, 40, 80}) {
        const double value = *family_ci({Kind::CkPC, 2.0, n, 1, {}, {}}).exact;
        CHECK(value < previous);
        previous = value;
    }
    CHECK(*family_ci({Kind::CkPC, 2.0, 600, 1, {}, {}}).exact < 1e-3);
}

TEST_CASE("full matrix is strictly less inconsistent than layer-cake at order 3") {
    for (const double x : {1.1, 1.5, 2.0, 3.375, 8.0, 9.0}) {
        const double fpc = *family_ci({Kind::FPC, x, 3, 1, {}, {}}).exact;
        const double lpc = *family_ci({Kind::LPC, x, 3, 1, {}, {}}).exact;
        CHECK(fpc < lpc);
    }
}
