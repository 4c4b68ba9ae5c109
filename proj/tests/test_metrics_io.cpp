#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "helpers.hpp"
#include "sptucker/io.hpp"
#include "sptucker/metrics.hpp"

using namespace sptucker;
using sptucker::testing::random_tensor;

TEST_CASE("frobenius error") {
  Rng rng(70);
  DenseTensor x = random_tensor({3, 3}, rng);
  CHECK(frobenius_error(x, x) == 0.0);
  CHECK(frobenius_error(x, DenseTensor({3, 3})) == doctest::Approx(x.frobenius_norm()));

  DenseTensor y = x;
  y[4] += 0.25;
  CHECK(frobenius_error(x, y) == doctest::Approx(0.25));
  CHECK_THROWS_AS(frobenius_error(x, DenseTensor({3, 4})), std::invalid_argument);
}

TEST_CASE("support scores") {
  SupportSet omega({4, 4});
  omega.insert(1);
  omega.insert(2);

  SUBCASE("exact match") {
    auto s = support_scores(omega, omega);
    CHECK(s.precision == 1.0);
    CHECK(s.recall == 1.0);
    CHECK(s.f1 == 1.0);
  }
  SUBCASE("disjoint") {
    SupportSet other({4, 4});
    other.insert(7);
    auto s = support_scores(omega, other);
    CHECK(s.precision == 0.0);
    CHECK(s.recall == 0.0);
    CHECK(s.f1 == 0.0);
  }
  SUBCASE("partial") {
    SupportSet half({4, 4});
    half.insert(1);
    auto s = support_scores(omega, half);
    CHECK(s.precision == 1.0);
    CHECK(s.recall == 0.5);
    CHECK(s.f1 == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("empty-set conventions") {
    SupportSet none({4, 4});
    CHECK(support_scores(omega, none).precision == 1.0);
    CHECK(support_scores(none, omega).recall == 1.0);
    CHECK(support_scores(none, none).f1 == 1.0);
  }
  SUBCASE("swapping arguments swaps precision and recall") {
    SupportSet other({4, 4});
    other.insert(1);
    other.insert(9);
    other.insert(12);
    auto ab = support_scores(omega, other);
    auto ba = support_scores(other, omega);
    CHECK(ab.precision == ba.recall);
    CHECK(ab.recall == ba.precision);
  }
}

TEST_CASE("DTF-1 round trip") {
  Rng rng(71);
  const auto dir = std::filesystem::temp_directory_path() / "sptucker_io_test";
  std::filesystem::create_directories(dir);

  for (int rep = 0; rep < 10; ++rep) {
    Shape shape;
    const std::size_t order = 1 + rng.below(4);
    for (std::size_t n = 0; n < order; ++n) shape.push_back(1 + rng.below(5));
    DenseTensor x = random_tensor(shape, rng);

    const auto path = dir / "t.dtf";
    write_dtf(path, x);
    DenseTensor back = read_dtf(path);
    REQUIRE(back.shape() == shape);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(back[i] == x[i]);
  }

  // header check
  const auto path = dir / "t.dtf";
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  char magic[4];
  REQUIRE(std::fread(magic, 1, 4, fp) == 4);
  std::fclose(fp);
  CHECK(std::string(magic, 4) == "DTF1");

  std::filesystem::remove_all(dir);
}

TEST_CASE("instance round trip with sidecar") {
  const auto dir = std::filesystem::temp_directory_path() / "sptucker_inst_test";
  ExperimentSpec spec;
  spec.core_dims = {5, 5, 5};
  spec.observed_dims = {4, 4, 4};
  spec.support_size = 4;
  spec.seed = 99;
  Instance inst = make_instance(spec, 0);
  write_instance(dir, inst, spec);

  LoadedInstance loaded = read_instance(dir);
  CHECK(loaded.spec.seed == 99);
  CHECK(loaded.instance.support == inst.support);
  CHECK((loaded.instance.core - inst.core).frobenius_norm() == 0.0);
  CHECK((loaded.instance.observation - inst.observation).frobenius_norm() == 0.0);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK((loaded.instance.factors.factor(n) - inst.factors.factor(n)).norm() == 0.0);
  }
  std::filesystem::remove_all(dir);
}
