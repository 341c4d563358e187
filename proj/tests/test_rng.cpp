#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcmaes/rng.hpp"

#include <cmath>
#include <vector>

using bcmaes::Philox4x64;

// Known-answer blocks cross-checked against an independent
// implementation of the same counter-based generator.
TEST_CASE("round function reproduces known-answer blocks for the zero key") {
  const auto b0 = Philox4x64::block({0, 0}, {0, 0, 0, 0});
  CHECK(b0[0] == 0x16554d9eca36314cULL);
  CHECK(b0[1] == 0xdb20fe9d672d0fdcULL);
  CHECK(b0[2] == 0xd7e772cee186176bULL);
  CHECK(b0[3] == 0x7e68b68aec7ba23bULL);

  const auto b1 = Philox4x64::block({0, 0}, {1, 0, 0, 0});
  CHECK(b1[0] == 0x02f4ba6408e4d89bULL);
  CHECK(b1[1] == 0x3dd62b0b9ca8c5b2ULL);
  CHECK(b1[2] == 0x1c8667a55d902e79ULL);
  CHECK(b1[3] == 0x907d7a052fd5b4dcULL);
}

TEST_CASE("round function reproduces known-answer blocks for a nonzero key") {
  const std::array<std::uint64_t, 2> key = {0xdeadbeef12345678ULL, 0};
  const auto b1 = Philox4x64::block(key, {1, 0, 0, 0});
  CHECK(b1[0] == 0x01e08b9944fc9ce9ULL);
  CHECK(b1[1] == 0x4dd35999ef97e4c4ULL);
  CHECK(b1[2] == 0xfb4385fe6262b926ULL);
  CHECK(b1[3] == 0xe8ca5d2e2ace8c50ULL);

  const auto b2 = Philox4x64::block(key, {2, 0, 0, 0});
  CHECK(b2[0] == 0xff773c94913479e4ULL);
  CHECK(b2[1] == 0xee8e21a3b352f284ULL);
  CHECK(b2[2] == 0x39609748439dfd34ULL);
  CHECK(b2[3] == 0x31051610b3684686ULL);
}

TEST_CASE("stream walks the counter in block order") {
  Philox4x64 rng(0xdeadbeef12345678ULL);
  const auto b0 =
      Philox4x64::block({0xdeadbeef12345678ULL, 0}, {0, 0, 0, 0});
  for (int i = 0; i < 4; ++i) CHECK(rng.next_u64() == b0[i]);
  CHECK(rng.next_u64() == 0x01e08b9944fc9ce9ULL);
  CHECK(rng.next_u64() == 0x4dd35999ef97e4c4ULL);
  CHECK(rng.next_u64() == 0xfb4385fe6262b926ULL);
  CHECK(rng.next_u64() == 0xe8ca5d2e2ace8c50ULL);
  CHECK(rng.next_u64() == 0xff773c94913479e4ULL);
}

TEST_CASE("identical seeds give identical streams, different seeds differ") {
  Philox4x64 a(42), b(42), c(43);
  bool any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const double va = a.next_normal();
    CHECK(va == b.next_normal());
    any_diff |= va != c.next_normal();
  }
  CHECK(any_diff);
}

TEST_CASE("uniforms stay inside the open unit interval") {
  Philox4x64 rng(7);
  double mn = 1.0, mx = 0.0, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    mn = std::min(mn, u);
    mx = std::max(mx, u);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(mn < 0.001);
  CHECK(mx > 0.999);
}

TEST_CASE("normals have standard moments at scale") {
  Philox4x64 rng(8);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.next_normal();
    CHECK(std::isfinite(z));
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}
