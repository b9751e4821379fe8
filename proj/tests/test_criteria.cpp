#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qvol/criteria.hpp"
#include "qvol/sampling.hpp"
#include "support/states.hpp"

using namespace qvol;
using namespace qvol::testing;

TEST_CASE("default grid: 120 geometric points in [0.05, 100] plus infinity") {
  const QGrid grid = default_qgrid();
  REQUIRE(grid.points.size() == 120);
  CHECK(grid.points.front() == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(grid.points.back() == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(grid.include_infinity);
  CHECK(grid.tolerance == 1e-10);
  const double ratio = grid.points[1] / grid.points[0];
  for (std::size_t i = 1; i + 1 < grid.points.size(); ++i) {
    CHECK(grid.points[i + 1] / grid.points[i] == doctest::Approx(ratio).epsilon(1e-9));
  }
}

TEST_CASE("grid validation") {
  QGrid grid;
  grid.points = {2.0, 2.0};
  CHECK_THROWS_AS(grid.validate(), InvalidConfig);
  grid.points = {0.0, 2.0};
  CHECK_THROWS_AS(grid.validate(), InvalidConfig);
  grid.points = {1.5, 2.0};
  grid.tolerance = -1.0;
  CHECK_THROWS_AS(grid.validate(), InvalidConfig);
  CHECK_THROWS_AS(QGrid::geometric(1.0, 0.5, 10), InvalidConfig);
}

TEST_CASE("entropic inequalities hold for product states") {
  RngStream rng(40, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix rho =
        product_state(random_single_state(2, rng), random_single_state(3, rng));
    for (const auto q : {EntropyOrder::finite(1), EntropyOrder::finite(2),
                         EntropyOrder::finite(7.5), EntropyOrder::infinity()}) {
      CHECK(entropic_inequalities_hold(rho, q));
    }
  }
}

TEST_CASE("Bell state violates the entropic inequalities at q = 2") {
  CHECK_FALSE(entropic_inequalities_hold(bell_state(), EntropyOrder::finite(2)));
}

TEST_CASE("Werner thresholds for the q = infinity inequality") {
  CHECK_FALSE(entropic_inequalities_hold(werner_state(0.5), EntropyOrder::infinity()));
  CHECK(entropic_inequalities_hold(werner_state(0.3), EntropyOrder::infinity()));
}

TEST_CASE("PPT on the fixtures") {
  RngStream rng(41, 0);
  CHECK(ppt_holds(product_state(random_single_state(2, rng), random_single_state(2, rng))));
  CHECK_FALSE(ppt_holds(bell_state()));
  CHECK(ppt_min_eigenvalue(bell_state()) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(ppt_holds(werner_state(1.0 / 3.0)));  // boundary sits inside the noise band
  CHECK_FALSE(ppt_holds(werner_state(0.34)));
  CHECK(ppt_min_eigenvalue(werner_state(0.34)) ==
        doctest::Approx((1.0 - 3 * 0.34) / 4).epsilon(1e-10));
}

TEST_CASE("PPT verdict does not depend on the transposed subsystem") {
  for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    const BipartiteDims dims(n1, n2);
    for (std::uint64_t index = 0; index < 100; ++index) {
      const DensityMatrix rho = sample_state({dims, dims.n(), 42, index});
      const double via_a = ppt_min_eigenvalue(rho, Subsystem::A);
      const double via_b = ppt_min_eigenvalue(rho, Subsystem::B);
      CHECK(std::abs(via_a - via_b) <= 1e-10);
      CHECK((via_a >= -kEigNoise) == (via_b >= -kEigNoise));
    }
  }
}

TEST_CASE("majorization on the fixtures") {
  CHECK(majorization_holds(maximally_mixed({2, 2})));
  CHECK_FALSE(majorization_holds(bell_state()));
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi[2] = 1.0;  // |10>
  CHECK(majorization_holds(DensityMatrix({2, 2}, ket_density(psi))));
}

TEST_CASE("majorization implies the entropic inequalities (Schur convexity)") {
  const std::vector<EntropyOrder> orders = {EntropyOrder::finite(1.5), EntropyOrder::finite(2),
                                            EntropyOrder::finite(4), EntropyOrder::finite(16),
                                            EntropyOrder::infinity()};
  int majorized = 0;
  for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    const BipartiteDims dims(n1, n2);
    for (std::uint64_t index = 0; index < 3000; ++index) {
      const DensityMatrix rho = sample_state({dims, dims.n(), 43, index});
      if (!majorization_holds(rho)) continue;
      ++majorized;
      for (const EntropyOrder& q : orders) {
        CHECK(entropic_inequalities_hold(rho, q));
      }
    }
  }
  CHECK(majorized > 1000);  // the property must actually get exercised
}

TEST_CASE("ppt_agreement on the fixtures") {
  CHECK(ppt_agreement(bell_state(), EntropyOrder::finite(2)));  // both say entangled
  // PPT says entangled at x > 1/3 while the q = 2 inequality still holds
  CHECK_FALSE(ppt_agreement(werner_state(0.5), EntropyOrder::finite(2)));
  RngStream rng(44, 0);
  const DensityMatrix product =
      product_state(random_single_state(2, rng), random_single_state(2, rng));
  for (const auto q : {EntropyOrder::finite(2), EntropyOrder::infinity()}) {
    CHECK(ppt_agreement(product, q));
  }
}

TEST_CASE("monotonicity scan on closed-form states") {
  const QGrid grid = default_qgrid();
  const DensityMatrix bell = bell_state();
  CHECK(monotonicity_scan(bell, Subsystem::B, EntropyKind::Tsallis, grid));
  CHECK(monotonicity_scan(bell, Subsystem::B, EntropyKind::Renyi, grid));

  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi[0] = 1.0;
  const DensityMatrix pure_product({2, 2}, ket_density(psi));
  CHECK(monotonicity_scan(pure_product, Subsystem::A, EntropyKind::Tsallis, grid));
  CHECK(monotonicity_scan(pure_product, Subsystem::A, EntropyKind::Renyi, grid));

  CHECK_THROWS_AS(monotonicity_scan(bell, Subsystem::A, EntropyKind::VonNeumann, grid),
                  InvalidConfig);
}

TEST_CASE("non-monotone states exist and show an increasing pair on the grid") {
  const QGrid grid = default_qgrid();
  bool found = false;
  for (std::uint64_t index = 0; index < 2000 && !found; ++index) {
    const DensityMatrix rho = sample_state({{2, 2}, 4, 45, index});
    const Spectrum reduced = rho.reduced_spectrum(Subsystem::A);
    if (monotonicity_scan(rho.spectrum(), reduced, EntropyKind::Tsallis, grid)) continue;
    found = true;
    // replay the finite trace; terminal-only violations are possible but rare
    double prev = std::numeric_limits<double>::infinity();
    bool has_increase = false;
    for (const double q : grid.points) {
      const double value =
          conditional_entropy(rho.spectrum(), reduced, EntropyParams::tsallis(q));
      if (value > prev + grid.tolerance) has_increase = true;
      prev = value;
    }
    const double log_ratio = std::log(reduced.lambda_max() / rho.spectrum().lambda_max());
    if (log_ratio >= 0.0 && 0.0 > prev + grid.tolerance) has_increase = true;
    CHECK(has_increase);
  }
  CHECK(found);
}

TEST_CASE("Tsallis monotone fraction dominates the Renyi one") {
  const QGrid grid = default_qgrid();
  for (const auto& [n1, n2, rank] :
       std::vector<std::tuple<int, int, int>>{{2, 2, 4}, {2, 3, 3}}) {
    const BipartiteDims dims(n1, n2);
    const std::uint64_t samples = 4000;
    std::uint64_t tsallis_hits = 0;
    std::uint64_t renyi_hits = 0;
    for (std::uint64_t index = 0; index < samples; ++index) {
      const DensityMatrix rho = sample_state({dims, rank, 46, index});
      const MonotonicityPair pair =
          monotonicity_scan_both(rho.spectrum(), rho.reduced_spectrum(Subsystem::A), grid);
      tsallis_hits += pair.tsallis;
      renyi_hits += pair.renyi;
    }
    const double ft = static_cast<double>(tsallis_hits) / static_cast<double>(samples);
    const double fr = static_cast<double>(renyi_hits) / static_cast<double>(samples);
    const double sigma =
        std::sqrt((ft * (1 - ft) + fr * (1 - fr)) / static_cast<double>(samples));
    CHECK(ft >= fr - 3 * sigma);
  }
}

TEST_CASE("evaluate_verdicts bundles per-state outcomes consistently") {
  const std::vector<EntropyOrder> qs = {EntropyOrder::finite(2), EntropyOrder::infinity()};
  const QGrid grid = default_qgrid();
  const CriterionVerdict bell = evaluate_verdicts(bell_state(), qs, grid);
  CHECK_FALSE(bell.entropic_positive_at[0].second);
  CHECK_FALSE(bell.entropic_positive_at[1].second);
  CHECK_FALSE(bell.ppt);
  CHECK_FALSE(bell.majorization);
  CHECK(bell.monotonic_tsallis);

  const CriterionVerdict mixed = evaluate_verdicts(maximally_mixed({2, 2}), qs, grid);
  CHECK(mixed.entropic_positive_at[0].second);
  CHECK(mixed.entropic_positive_at[1].second);
  CHECK(mixed.ppt);
  CHECK(mixed.majorization);
  CHECK(mixed.monotonic_tsallis);
  CHECK(mixed.monotonic_renyi);

  // conditioning on both subsystems can only shrink the monotone set
  for (std::uint64_t index = 0; index < 200; ++index) {
    const DensityMatrix rho = sample_state({{2, 3}, 6, 47, index});
    const CriterionVerdict one = evaluate_verdicts(rho, qs, grid, Conditioning::BGivenA);
    const CriterionVerdict both = evaluate_verdicts(rho, qs, grid, Conditioning::Both);
    if (both.monotonic_tsallis) CHECK(one.monotonic_tsallis);
    if (both.monotonic_renyi) CHECK(one.monotonic_renyi);
  }
}
