#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ncqm/models.hpp"

using namespace ncqm;

namespace {

const NCParams kSub{1.0, 0.3, 1.0, 1.0};
const NCParams kSup{1.0, 2.0, 1.0, 1.0};
const NCParams kNeg{1.0, -0.5, 1.0, 1.0};

std::vector<double> lattice(const Frequencies& f, int nmax_sum) {
    std::vector<double> v;
    for (int np = 0; np <= nmax_sum; ++np)
        for (int nm = 0; np + nm <= nmax_sum; ++nm)
            v.push_back(f.plus * (np + 0.5) + f.minus * (nm + 0.5));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("oscillator frequencies") {
    SUBCASE("commutative isotropic") {
        const Frequencies f = oscillator_frequencies({0.0, 0.0, 1.0, 1.0}, {1.0});
        CHECK(f.plus == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(f.minus == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("theta=kappa=0.1 splits to 1.1/0.9") {
        const Frequencies f = oscillator_frequencies({0.1, 0.1, 1.0, 1.0}, {1.0});
        CHECK(f.plus == doctest::Approx(1.1).epsilon(1e-12));
        CHECK(f.minus == doctest::Approx(0.9).epsilon(1e-12));
    }
    SUBCASE("super-critical (3 +- sqrt5)/2") {
        const Frequencies f = oscillator_frequencies(kSup, {1.0});
        CHECK(f.plus == doctest::Approx(0.5 * (3.0 + std::sqrt(5.0))).epsilon(1e-14));
        CHECK(f.minus == doctest::Approx(0.5 * (3.0 - std::sqrt(5.0))).epsilon(1e-14));
    }
    SUBCASE("ordering and positivity everywhere") {
        for (const NCParams& p : {kSub, kSup, kNeg}) {
            const Frequencies f = oscillator_frequencies(p, {0.8});
            CHECK(f.plus >= f.minus);
            CHECK(f.minus > 0.0);
        }
    }
    CHECK_THROWS_AS(oscillator_frequencies({1.0, 1.0, 1.0, 1.0}, {1.0}), CriticalRegionError);
}

TEST_CASE("oscillator levels") {
    CHECK(oscillator_level({0.1, 0.1, 1.0, 1.0}, {1.0}, {0, 0}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(oscillator_level({0.0, 0.0, 1.0, 1.0}, {1.0}, {2, 1}) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(oscillator_level(kSup, {1.0}, {1, 0}) ==
          doctest::Approx(3.0 + 0.5 * std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("oscillator spectrum per irrep") {
    SUBCASE("su2 j=0 single level") {
        const auto rows = oscillator_spectrum_irrep(kSup, {1.0}, IrrepLabel::su2(0), 5);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].energy == doctest::Approx(1.5).epsilon(1e-13));
        CHECK(rows[0].quanta == QuantaPair{0, 0});
    }
    SUBCASE("sl2 k=1/2 first level maps to (0,0)") {
        const auto rows = oscillator_spectrum_irrep({0.1, 0.1, 1.0, 1.0}, {1.0}, IrrepLabel::sl2(1, +1), 3);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].energy == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rows[0].quanta == QuantaPair{0, 0});
    }
    SUBCASE("s = +-1 spectra related by swapping the quanta") {
        for (const NCParams& p : {kSub, kNeg}) {
            const auto plus = oscillator_spectrum_irrep(p, {1.0}, IrrepLabel::sl2(4, +1), 6);
            const auto minus = oscillator_spectrum_irrep(p, {1.0}, IrrepLabel::sl2(4, -1), 6);
            for (size_t i = 0; i < plus.size(); ++i) {
                CHECK(plus[i].quanta.n_plus == minus[i].quanta.n_minus);
                CHECK(plus[i].quanta.n_minus == minus[i].quanta.n_plus);
                CHECK(oscillator_level(p, {1.0}, plus[i].quanta) ==
                      doctest::Approx(plus[i].energy).epsilon(1e-12));
            }
        }
    }
    SUBCASE("irrep energies equal the two-oscillator form at the mapped quanta") {
        for (const NCParams& p : {kSub, kSup, kNeg}) {
            for (const IrrepLabel& ir : admissible_irreps(classify_region(p), 2.0)) {
                for (const auto& lv : oscillator_spectrum_irrep(p, {1.3}, ir, 5)) {
                    CHECK(lv.energy ==
                          doctest::Approx(oscillator_level(p, {1.3}, lv.quanta)).epsilon(1e-12));
                }
            }
        }
    }
    CHECK_THROWS_AS(oscillator_spectrum_irrep(kSup, {1.0}, IrrepLabel::sl2(1, +1), 3),
                    IrrepRegionMismatchError);
}

TEST_CASE("spectrum bijection against the two-oscillator lattice") {
    for (const NCParams& p : {kSub, kSup, kNeg, NCParams{0.1, 0.1, 1.0, 1.0}}) {
        const Frequencies f = oscillator_frequencies(p, {1.0});
        const auto expect = lattice(f, 5);
        std::vector<double> got;
        for (const IrrepLabel& ir : admissible_irreps(classify_region(p), 8.0)) {
            for (const auto& lv : oscillator_spectrum_irrep(p, {1.0}, ir, 8)) {
                if (lv.quanta.n_plus + lv.quanta.n_minus <= 5) got.push_back(lv.energy);
            }
        }
        std::sort(got.begin(), got.end());
        REQUIRE(got.size() == expect.size());
        for (size_t i = 0; i < got.size(); ++i)
            CHECK(std::abs(got[i] - expect[i]) < 1e-12 * std::max(1.0, std::abs(expect[i])));
    }
}

TEST_CASE("landau effective field and levels") {
    const LandauSpec commutative{2.0, 1.0};
    CHECK(landau_effective_field({0.0, 0.0, 1.0, 1.0}, commutative) == doctest::Approx(2.0));
    CHECK(landau_effective_field({1.0, 0.0, 1.0, 1.0}, commutative) == doctest::Approx(3.0));
    CHECK(landau_effective_field({0.0, 1.0, 1.0, 1.0}, commutative) == doctest::Approx(3.0));

    SUBCASE("commutative cyclotron ladder") {
        const auto lv = landau_spectrum({0.0, 0.0, 1.0, 1.0}, commutative, 4);
        for (int n = 0; n < 4; ++n) CHECK(lv[n].energy == doctest::Approx(2.0 * (n + 0.5)).epsilon(1e-14));
    }
    SUBCASE("unified gap matches the region forms") {
        CHECK(landau_spectrum(kSup, {1.0, 1.0}, 1)[0].energy == doctest::Approx(3.25 * 0.5).epsilon(1e-14));
        CHECK(landau_spectrum(kSub, {1.0, 1.0}, 1)[0].energy == doctest::Approx(1.55 * 0.5).epsilon(1e-14));
        // kappa < 0 carries the |.|: gap = |4 + 1 - 2|/4
        CHECK(landau_spectrum(kNeg, {1.0, 1.0}, 1)[0].energy == doctest::Approx(0.75 * 0.5).epsilon(1e-14));
    }
    SUBCASE("degeneracy tag") { CHECK(landau_spectrum(kSub, {1.0, 1.0}, 1)[0].degeneracy == "countably-infinite"); }
}

TEST_CASE("landau density of states") {
    CHECK(landau_density_of_states({0.0, 0.0, 1.0, 1.0}, {2.0, 1.0}).value ==
          doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
    CHECK(landau_density_of_states(kSup, {1.0, 1.0}).value ==
          doctest::Approx(13.0 / (8.0 * std::numbers::pi)).epsilon(1e-14));
    SUBCASE("divergence at the critical point is tagged, not thrown") {
        const DensityOfStates d = landau_density_of_states({1.0, 1.0, 1.0, 1.0}, {1.0, 1.0});
        CHECK(d.divergent);
    }
    SUBCASE("grows without bound from both sides") {
        const LandauSpec s{1.0, 1.0};
        const double at = [&](double kappa) {
            return landau_density_of_states({1.0, kappa, 1.0, 1.0}, s).value;
        }(0.99);
        CHECK(at > 5.0 * landau_density_of_states({1.0, 0.9, 1.0, 1.0}, s).value);
        CHECK(landau_density_of_states({1.0, 1.01, 1.0, 1.0}, s).value >
              5.0 * landau_density_of_states({1.0, 1.1, 1.0, 1.0}, s).value);
    }
}

TEST_CASE("landau level values do not depend on the realizing irrep") {
    // region derivations with any admissible label give the same ladder
    const LandauSpec s{1.0, 1.0};
    const auto levels = landau_spectrum(kSub, s, 4);
    const double coef = levels[1].energy - levels[0].energy;
    for (int twice_k : {1, 3, 7}) {  // s=+1, m = k+n per Landau level n
        const double k = 0.5 * twice_k;
        for (int n = 0; n < 4; ++n) {
            const double m = k + n;
            const double e = coef * (m - (k - 0.5));
            CHECK(std::abs(e - levels[size_t(n)].energy) < 1e-12);
        }
    }
}

TEST_CASE("mean square radius closed form") {
    const LandauSpec s{1.0, 1.0};
    SUBCASE("slope in j at fixed landau level (kappa > kappa_c)") {
        // D = B^2e^2 theta + 4Be hbar + 4 kappa = 13 at kappa=2; slope 16(theta kappa - hbar^2)/D
        const int na = 1;  // fixed level: j + m = na
        double prev = 0.0;
        for (int twice_j : {2, 4, 6}) {
            const int twice_m = 2 * na - twice_j;
            const double v = mean_square_radius(kSup, s, IrrepLabel::su2(twice_j), twice_m);
            if (twice_j > 2) {
                const double slope = (v - prev);  // step of j is 1
                CHECK(slope == doctest::Approx(16.0 * (1.0 * 2.0 - 1.0) / 13.0).epsilon(1e-12));
                CHECK(slope > 0.0);
            }
            prev = v;
        }
    }
    SUBCASE("slope in k at fixed landau level (0 < kappa < kappa_c)") {
        const double dd = 1.0 + 4.0 + 4.0 * 0.3;
        double prev = 0.0;
        for (int twice_k : {2, 4, 6}) {  // s=+1, fixed n = m-k
            const int twice_m = twice_k + 2 * 1;
            const double v = mean_square_radius(kSub, s, IrrepLabel::sl2(twice_k, +1), twice_m);
            if (twice_k > 2) CHECK(v - prev == doctest::Approx(16.0 * (1.0 - 0.3) / dd).epsilon(1e-12));
            prev = v;
        }
    }
    SUBCASE("commutative ground level reproduces the magnetic length scale") {
        const NCParams tiny{1e-12, 0.0, 1.0, 1.0};
        const double v = mean_square_radius(tiny, {2.0, 1.0}, IrrepLabel::sl2(1, +1), 1);
        CHECK(v == doctest::Approx(2.0 * 1.0 / 2.0).epsilon(1e-9));  // 2 hbar/(eB)
    }
}
