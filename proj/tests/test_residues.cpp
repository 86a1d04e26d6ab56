#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "reslab/arith.hpp"
#include "reslab/residues.hpp"

using namespace reslab;

TEST_CASE("classify_a on worked values") {
  const auto check = [](std::int64_t m, bool member, ClassAForm form,
                        std::int64_t p = 0, std::int64_t e = 0) {
    const ClassAVerdict v = classify_a(m);
    CAPTURE(m);
    CHECK(v.member == member);
    CHECK(v.form == form);
    CHECK(v.prime == p);
    CHECK(v.exponent == e);
    CHECK(v.member == (v.form != ClassAForm::NotInA));
  };

  check(7, true, ClassAForm::OddPrimePower, 7, 1);
  check(18, true, ClassAForm::TwiceOddPrimePower, 3, 2);
  check(8, false, ClassAForm::NotInA);
  check(0, true, ClassAForm::Zero);
  check(15, false, ClassAForm::NotInA);
  check(1, true, ClassAForm::PowerOfTwoSmall, 0, 0);
  check(2, true, ClassAForm::PowerOfTwoSmall, 0, 1);
  check(4, true, ClassAForm::PowerOfTwoSmall, 0, 2);
  check(-4, true, ClassAForm::PowerOfTwoSmall, 0, 2);
  check(27, true, ClassAForm::OddPrimePower, 3, 3);
  check(-27, true, ClassAForm::OddPrimePower, 3, 3);
  check(250, true, ClassAForm::TwiceOddPrimePower, 5, 3);
  check(-18, true, ClassAForm::TwiceOddPrimePower, 3, 2);
  check(12, false, ClassAForm::NotInA);   // 4 * 3
  check(16, false, ClassAForm::NotInA);   // 2^4
  check(100, false, ClassAForm::NotInA);  // 4 * 25
  check(45, false, ClassAForm::NotInA);   // 9 * 5
}

TEST_CASE("classify_a agrees with a sieve-built membership table") {
  constexpr std::int64_t kBound = 10'000;

  // Independent construction: sieve the primes, then enumerate every form.
  std::vector<bool> composite(kBound + 1, false);
  for (std::int64_t i = 2; i * i <= kBound; ++i)
    if (!composite[i])
      for (std::int64_t j = i * i; j <= kBound; j += i) composite[j] = true;

  std::set<std::int64_t> members = {1, 2, 4};
  for (std::int64_t p = 3; p <= kBound; p += 2) {
    if (composite[p]) continue;
    for (std::int64_t pw = p; pw <= kBound; pw *= p) {
      members.insert(pw);
      if (2 * pw <= kBound) members.insert(2 * pw);
      if (pw > kBound / p) break;
    }
  }

  for (std::int64_t m = -kBound; m <= kBound; ++m) {
    const bool expect = m == 0 || members.count(m < 0 ? -m : m) > 0;
    CAPTURE(m);
    CHECK(classify_a(m).member == expect);
  }
}

TEST_CASE("gauss_sign on worked values") {
  CHECK(gauss_sign(5) == -1);
  CHECK(gauss_sign(8) == 1);
  CHECK(gauss_sign(4) == -1);
  CHECK(gauss_sign(-9) == -1);
  CHECK(gauss_sign(15) == 1);
  CHECK_THROWS_AS(gauss_sign(0), std::domain_error);
}

TEST_CASE("residue_product on worked values") {
  CHECK(residue_product(5) == 4);
  CHECK(residue_product(9) == 8);
  CHECK(residue_product(12) == 1);
  CHECK(residue_product(1) == 0);
  CHECK(residue_product(-9) == 8);
  CHECK_THROWS_AS(residue_product(0), std::domain_error);
}

TEST_CASE("residue product matches the sign rule across a range") {
  // The full product of a reduced residue system is gauss_sign(m) mod m.
  for (std::int64_t m = 2; m <= 3000; ++m) {
    CAPTURE(m);
    CHECK(residue_product(m) == canonical(gauss_sign(m), m));
  }
}

TEST_CASE("shifted product on worked values") {
  CHECK(shifted_residue_product(0, 5) == 4);
  CHECK(shifted_residue_product(3, 15) == 10);
  CHECK(shifted_residue_product(1, 6) == 0);
  CHECK(shifted_residue_product(0, 9) == residue_product(9));
  CHECK_THROWS_AS(shifted_residue_product(1, 0), std::domain_error);
}

TEST_CASE("shifted product depends only on x mod m") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::int64_t> m_dist(1, 400);
  std::uniform_int_distribution<std::int64_t> x_dist(-5000, 5000);
  for (int i = 0; i < 3000; ++i) {
    const std::int64_t m = m_dist(rng);
    const std::int64_t x = x_dist(rng);
    const std::int64_t v = shifted_residue_product(x, m);
    CHECK(v == shifted_residue_product(canonical(x, m), m));
    CHECK(v == shifted_residue_product(x + m, m));
    CHECK(v == shifted_residue_product(x - 7 * m, m));
  }
}

TEST_CASE("common_divisor_split on worked values") {
  const auto check = [](std::int64_t x, std::int64_t m, std::int64_t d,
                        std::int64_t m_prime) {
    const SplitDm s = common_divisor_split(x, m);
    CAPTURE(x);
    CAPTURE(m);
    CHECK(s.d == d);
    CHECK(s.m_prime == m_prime);
  };
  check(3, 15, 3, 5);
  check(7, 15, 1, 15);
  check(0, 15, 15, 1);
  check(0, -12, 12, 1);
  check(6, 12, 12, 1);   // both primes of 12 divide 6
  check(2, 12, 4, 3);    // full exponent of 2 moves into d
  check(-3, 15, 3, 5);
  CHECK_THROWS_AS(common_divisor_split(3, 0), std::domain_error);
}

TEST_CASE("common_divisor_split structural properties") {
  for (std::int64_t m = 1; m <= 200; ++m)
    for (std::int64_t x = -10; x <= 2 * m; ++x) {
      const SplitDm s = common_divisor_split(x, m);
      CAPTURE(m);
      CAPTURE(x);
      CHECK(s.d * s.m_prime == m);
      CHECK(gcd(s.d, s.m_prime) == 1);
      for (const auto& pp : factorize(m).factors) {
        const bool divides_x = x == 0 || (x < 0 ? -x : x) % pp.prime == 0;
        if (divides_x) {
          CHECK(s.d % pp.prime == 0);
          CHECK(s.m_prime % pp.prime != 0);
        } else {
          CHECK(s.d % pp.prime != 0);
          CHECK(s.m_prime % pp.prime == 0);
        }
      }
    }
}

TEST_CASE("dioph_particular solves its equation") {
  const auto check = [](std::int64_t d, std::int64_t m_prime, int eps) {
    const DiophSolution sol = dioph_particular(d, m_prime, eps);
    CAPTURE(d);
    CAPTURE(m_prime);
    CAPTURE(eps);
    CHECK(sol.k2 * m_prime - sol.k1 * d == eps);
  };

  check(3, 5, 1);
  check(2, 3, -1);
  check(1, 7, 1);
  check(1, 7, -1);
  check(1, 1, 1);

  // The d = 1 family admits (k1, k2) = (-eps, 0).
  for (const int eps : {-1, 1})
    for (std::int64_t n = 1; n <= 10; ++n)
      CHECK(0 * n - (-eps) * 1 == eps);

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> dist(1, 10000);
  for (int i = 0; i < 5000; ++i) {
    const std::int64_t d = dist(rng);
    const std::int64_t m_prime = dist(rng);
    if (gcd(d, m_prime) != 1) continue;
    check(d, m_prime, 1);
    check(d, m_prime, -1);
  }

  CHECK_THROWS_AS(dioph_particular(6, 9, 1), std::domain_error);
  CHECK_THROWS_AS(dioph_particular(0, 9, 1), std::domain_error);
  CHECK_THROWS_AS(dioph_particular(3, 5, 2), std::domain_error);
}

TEST_CASE("predict_shifted_product on worked values") {
  CHECK(predict_shifted_product(3, 15) == 10);
  CHECK(predict_shifted_product(0, 5) == 4);
  CHECK(predict_shifted_product(2, 6) == 3);
  CHECK(predict_shifted_product(7, 15) == 0);  // coprime x: d = 1
  CHECK_THROWS_AS(predict_shifted_product(1, 0), std::domain_error);
}

TEST_CASE("prediction matches the shifted product everywhere") {
  for (std::int64_t m = 2; m <= 300; ++m)
    for (std::int64_t x = 0; x < m; ++x) {
      CAPTURE(m);
      CAPTURE(x);
      CHECK(shifted_residue_product(x, m) == predict_shifted_product(x, m));
    }
}

TEST_CASE("both sub-congruences of the prediction hold") {
  for (std::int64_t m = 2; m <= 150; ++m)
    for (std::int64_t x = 0; x < m; ++x) {
      const std::int64_t value = shifted_residue_product(x, m);
      const SplitDm s = common_divisor_split(x, m);
      CAPTURE(m);
      CAPTURE(x);
      CHECK(canonical(value, s.m_prime) == 0);
      if (s.d > 1) CHECK(canonical(value, s.d) == canonical(gauss_sign(m), s.d));
    }
}

TEST_CASE("combined congruence links the diophantine solution to the sign") {
  for (std::int64_t m = 2; m <= 150; ++m)
    for (std::int64_t x = 0; x < m; ++x) {
      const SplitDm s = common_divisor_split(x, m);
      if (s.d <= 1) continue;
      const int eps = gauss_sign(m);
      const DiophSolution sol = dioph_particular(s.d, s.m_prime, eps);
      CHECK(sol.k2 * s.m_prime - sol.k1 * s.d == eps);
      CHECK(canonical(eps + sol.k1 * s.d, m) == canonical(sol.k2 * s.m_prime, m));
    }
}

TEST_CASE("leibniz product on worked values") {
  CHECK(leibniz_product(7) == 1);
  CHECK(leibniz_product(8) == 7);
  CHECK(leibniz_product(9) == 1);
  CHECK(leibniz_product(2) == 1);  // empty product
  CHECK(leibniz_product(-9) == 1);
  CHECK_THROWS_AS(leibniz_product(1), std::domain_error);
  CHECK_THROWS_AS(leibniz_product(-1), std::domain_error);
  CHECK_THROWS_AS(leibniz_product(0), std::domain_error);
}

TEST_CASE("leibniz product is the negated sign across a range") {
  for (std::int64_t m = 2; m <= 2000; ++m) {
    CAPTURE(m);
    CHECK(leibniz_product(m) == canonical(-gauss_sign(m), m));
  }
}
