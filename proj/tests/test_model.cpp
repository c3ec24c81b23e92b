#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "doctest.h"
#include "morseband/errors.hpp"
#include "morseband/model.hpp"

using namespace morseband;

namespace {

constexpr double kPi = std::numbers::pi;

// Every (l, n) with the given product, by brute force over n (product >= 4n - 1... grows with n).
std::set<QuantumNumbers> brute_force_class(std::int64_t product) {
  std::set<QuantumNumbers> out;
  for (int n = 1; 4 * n - 3 <= product; ++n) {
    for (int l = 0; l < n; ++l) {
      if (QuantumNumbers(l, n).product() == product) out.insert({l, n});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("physical parameters") {
  const PhysParams p;
  CHECK(p.beta() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.wavenumber() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.magnetic_length() == 1.0);
  const PhysParams c = PhysParams::cgs();
  CHECK_NOTHROW(c.validate());
  CHECK(c.beta() == doctest::Approx(-c.e * c.B0 * c.a0 * c.a0 / (2 * kPi * kPi * c.hbar * c.c)));
  PhysParams bad = p;
  bad.e = 1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = p;
  bad.a0 = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("quantum numbers and energies") {
  CHECK_THROWS_AS(QuantumNumbers(1, 1), DomainError);
  CHECK_THROWS_AS(QuantumNumbers(0, 0), DomainError);
  CHECK(QuantumNumbers(0, 1).product() == 3);
  CHECK(QuantumNumbers::from_level(3, 2) == QuantumNumbers(3, 6));
  const PhysParams p;
  // E_{0,1} = 3 pi^2 hbar^2 / (2 mu a0^2)
  CHECK(model::energy({0, 1}, p) == 3.0 * kPi * kPi / (2.0 * p.a0 * p.a0));
  // energy is the positive quadratic pi^2 hbar^2 (2n-2l-1)(2n+2l+1) / (2 mu a0^2)
  for (int n = 1; n <= 8; ++n)
    for (int l = 0; l < n; ++l)
      CHECK(model::energy({l, n}, p) ==
            doctest::Approx(kPi * kPi * (2 * n - 2 * l - 1) * (2 * n + 2 * l + 1) / (2 * p.a0 * p.a0)));
}

TEST_CASE("degeneracy classes against brute force") {
  const auto scan = model::degeneracy_scan(60);
  std::map<std::int64_t, int> brute;
  for (int n = 1; n <= 60; ++n)
    for (int l = 0; l < n; ++l) ++brute[QuantumNumbers(l, n).product()];
  REQUIRE(scan.size() == brute.size());
  for (const auto& d : scan) {
    CHECK(d.multiplicity == brute[d.product]);
    CHECK(d.multiplicity == static_cast<int>(d.states.size()));
    for (const auto& q : d.states) CHECK(q.product() == d.product);
    const auto full = brute_force_class(d.product);
    CHECK(d.total_multiplicity == static_cast<int>(full.size()));
    const auto pairs = model::factor_pair_states(d.product);
    CHECK(std::set<QuantumNumbers>(pairs.begin(), pairs.end()) == full);
  }
}

TEST_CASE("known classes") {
  const auto c15 = model::factor_pair_states(15);
  CHECK(std::set<QuantumNumbers>(c15.begin(), c15.end()) == std::set<QuantumNumbers>{{0, 2}, {3, 4}});
  CHECK(model::factor_pair_states(3).size() == 1);
  const auto c243 = model::factor_pair_states(243);
  CHECK(std::set<QuantumNumbers>(c243.begin(), c243.end()) ==
        std::set<QuantumNumbers>{{4, 9}, {19, 21}, {60, 61}});
  CHECK(brute_force_class(243).size() == 3);
}

TEST_CASE("prime products are nondegenerate") {
  int primes = 0;
  for (const auto& d : model::degeneracy_scan(200)) {
    if (!model::is_prime(d.product)) continue;
    ++primes;
    CHECK(d.total_multiplicity == 1);
  }
  CHECK(primes > 0);
  CHECK(model::is_prime(2));
  CHECK_FALSE(model::is_prime(1));
  CHECK_FALSE(model::is_prime(243));
  CHECK(model::is_prime(1000003));
}

TEST_CASE("multiplicity histogram") {
  const auto scan = model::degeneracy_scan(200);
  const auto hist = model::multiplicity_histogram(scan);
  int total = 0;
  for (const auto& [m, count] : hist) total += count;
  CHECK(total == static_cast<int>(scan.size()));
  CHECK(hist.count(3) == 1);
  CHECK(hist.rbegin()->first >= 3);
}

TEST_CASE("Landau limit") {
  const PhysParams p;
  for (int N = 0; N <= 3; ++N) {
    for (int l : {10, 100, 1000, 10000}) {
      CHECK(std::abs(model::landau_limit_error(N, l, p) - (2.0 * N + 3.0) / (4.0 * l)) <= 1e-12);
    }
  }
  CHECK(model::landau_limit_error(0, 100, p) == doctest::Approx(0.0075).epsilon(1e-12));
  const PhysParams pl = model::landau_limit_params(50, p);
  CHECK(pl.a0 == doctest::Approx(2 * kPi * std::sqrt(50.0)));
  CHECK(model::landau_energy(1, p) == doctest::Approx(1.5));
  CHECK_THROWS_AS(model::landau_limit_params(0, p), DomainError);
}

TEST_CASE("subspaces") {
  const auto oblique = model::enumerate_subspace(model::SubspaceKind::oblique, 2, 4);
  for (std::size_t i = 0; i < oblique.size(); ++i) CHECK(oblique[i] == QuantumNumbers(int(i), int(i) + 3));
  const auto vertical = model::enumerate_subspace(model::SubspaceKind::vertical, 2, 4);
  for (std::size_t i = 0; i < vertical.size(); ++i) CHECK(vertical[i] == QuantumNumbers(2, 3 + int(i)));
}
