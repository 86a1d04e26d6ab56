#include <doctest.h>

#include <stdexcept>

#include "reslab/arith.hpp"
#include "reslab/chain.hpp"
#include "reslab/residues.hpp"
#include "reslab/verify.hpp"

using namespace reslab;

TEST_CASE("theorem names round-trip") {
  for (const TheoremId id :
       {TheoremId::Gauss, TheoremId::LTheorems, TheoremId::EulerGen,
        TheoremId::LagrangeExt, TheoremId::MoserGen, TheoremId::FermatWilson,
        TheoremId::LeibnizGen}) {
    const auto back = theorem_from_name(theorem_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(theorem_from_name("nope").has_value());
}

TEST_CASE("verify_gauss") {
  const CongruenceReport r5 = verify_gauss(5);
  CHECK(r5.lhs == 4);
  CHECK(r5.rhs == 4);
  CHECK(r5.holds);

  CHECK(verify_gauss(8).lhs == 1);
  CHECK(verify_gauss(8).rhs == 1);
  CHECK(verify_gauss(12).lhs == 1);
  CHECK(verify_gauss(12).holds);
  CHECK_THROWS_AS(verify_gauss(0), std::domain_error);
}

TEST_CASE("verify_l_theorems") {
  const CongruenceReport r = verify_l_theorems(3, 15);
  CHECK(r.lhs == 10);
  CHECK(r.rhs == 10);
  CHECK(r.holds);
  CHECK(r.note.find("d=3") != std::string::npos);
  CHECK(r.note.find("m_prime=5") != std::string::npos);
  CHECK(r.note.find("zero_mod_m_prime=true") != std::string::npos);
  CHECK(r.note.find("sign_mod_d=true") != std::string::npos);

  CHECK(verify_l_theorems(0, 5).lhs == 4);
  CHECK(verify_l_theorems(0, 5).holds);
  CHECK(verify_l_theorems(2, 6).lhs == 3);
  CHECK(verify_l_theorems(2, 6).holds);
  CHECK_THROWS_AS(verify_l_theorems(2, 0), std::domain_error);
}

TEST_CASE("verify_lagrange_ext on worked values") {
  const CongruenceReport r1 = verify_lagrange_ext(2, 5);
  CHECK(r1.lhs == 0);
  CHECK(r1.rhs == 0);  // 3*4*5*6 = 360 = 0 (mod 5)
  CHECK(r1.holds);
  CHECK(r1.status == ReportStatus::Checked);

  const CongruenceReport r2 = verify_lagrange_ext(2, 6);
  CHECK(r2.lhs == 0);
  CHECK(r2.rhs == 0);
  CHECK(r2.holds);

  const CongruenceReport r3 = verify_lagrange_ext(3, 9);
  CHECK(r3.lhs == 0);
  CHECK(r3.rhs == 0);
  CHECK(r3.holds);

  CHECK_THROWS_AS(verify_lagrange_ext(1, 0), std::domain_error);
}

TEST_CASE("verify_lagrange_ext hypothesis guard") {
  // m = 4 is excluded; respected by default.
  const CongruenceReport skipped = verify_lagrange_ext(4, 4);
  CHECK(skipped.status == ReportStatus::ExcludedByHypothesis);
  CHECK(skipped.holds);  // vacuous

  // Evaluated on request: the congruence genuinely fails there.
  const CongruenceReport evaluated = verify_lagrange_ext(4, 4, GuardHandling::Include);
  CHECK(evaluated.status == ReportStatus::ExcludedByHypothesis);
  CHECK(evaluated.lhs == 0);
  CHECK(evaluated.rhs == 2);  // 5*6*7 = 210 = 2 (mod 4)
  CHECK_FALSE(evaluated.holds);

  // x = 0 (mod m) is outside the hypothesis; for prime m it even fails.
  const CongruenceReport prime_zero = verify_lagrange_ext(5, 5, GuardHandling::Include);
  CHECK(prime_zero.status == ReportStatus::ExcludedByHypothesis);
  CHECK(prime_zero.lhs == 0);
  CHECK(prime_zero.rhs == 4);  // 6*7*8*9 = (m-1)! = -1 (mod 5)
  CHECK_FALSE(prime_zero.holds);

  // In-hypothesis points at m = +-4 do not exist; negative m is excluded too.
  CHECK(verify_lagrange_ext(3, -4).status == ReportStatus::ExcludedByHypothesis);

  // Composite m at x = 0 (mod m) is excluded but does hold when evaluated.
  const CongruenceReport composite_zero = verify_lagrange_ext(6, 6, GuardHandling::Include);
  CHECK(composite_zero.status == ReportStatus::ExcludedByHypothesis);
  CHECK(composite_zero.holds);
}

TEST_CASE("lagrange extension coincides with the classical prime statement") {
  for (const std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    for (std::int64_t x = 1; x < p; ++x) {
      const CongruenceReport rep = verify_lagrange_ext(x, p);
      CAPTURE(p);
      CAPTURE(x);
      CHECK(rep.status == ReportStatus::Checked);
      CHECK(rep.holds);
      // Classical form: x^(p-1) - 1 on the left.
      CHECK(rep.lhs == canonical(mod_pow(x, p - 1, p) - 1, p));
    }
}

TEST_CASE("verify_moser_gen on worked values") {
  const MoserReports pair = verify_moser_gen(2, 0, 12);
  CHECK(pair.moser.lhs == 4);  // 1 * 2^4 = 16 = 4 (mod 12)
  CHECK(pair.moser.rhs == 4);  // 1 * 2^2
  CHECK(pair.moser.holds);
  CHECK(pair.sierpinski.holds);
  CHECK(pair.moser.note.find("direction=moser") != std::string::npos);
  CHECK(pair.sierpinski.note.find("direction=sierpinski") != std::string::npos);
  CHECK(pair.moser.note.find("variant=chain_phi") != std::string::npos);

  CHECK_THROWS_AS(verify_moser_gen(2, 0, 0), std::domain_error);
}

TEST_CASE("moser and sierpinski specializations at primes") {
  // (p-1)! a^p + a and a^p + (p-1)! a are multiples of p.
  for (const std::int64_t p : {3, 5, 7, 11, 13})
    for (std::int64_t a = -10; a <= 10; ++a) {
      const std::int64_t wilson = residue_product(p);         // (p-1)! mod p
      const std::int64_t ap = mod_pow(a, p, p);
      const std::int64_t moser = canonical(wilson * ap + canonical(a, p), p);
      const std::int64_t sierp = canonical(ap + wilson * canonical(a, p), p);
      CAPTURE(p);
      CAPTURE(a);
      CHECK(moser == 0);
      CHECK(sierp == 0);
      // And the generalized verifier agrees at x = 0.
      const MoserReports pair = verify_moser_gen(a, 0, p);
      CHECK(pair.moser.holds);
      CHECK(pair.sierpinski.holds);
    }
}

TEST_CASE("moser chain_phi reduces to Euler for coprime a at x = 0") {
  for (std::int64_t m = 2; m <= 60; ++m)
    for (std::int64_t a = 1; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      const MoserReports pair = verify_moser_gen(a, 0, m);
      // s = 0, so the two sides are P*a^phi(m) and P; Euler gives a^phi(m) = 1.
      CHECK(pair.moser.lhs == pair.moser.rhs);
      CHECK(mod_pow(a, phi(m), m) == 1 % m);
    }
}

TEST_CASE("both moser variants hold on a rectangle") {
  for (const ExponentVariant variant :
       {ExponentVariant::ChainPhi, ExponentVariant::FullPhi})
    for (std::int64_t m = 2; m <= 40; ++m)
      for (std::int64_t x : {0, 1, 5})
        for (std::int64_t a = -8; a <= 8; ++a) {
          const MoserReports pair = verify_moser_gen(a, x, m, variant);
          CAPTURE(m);
          CAPTURE(x);
          CAPTURE(a);
          CHECK(pair.moser.holds);
          CHECK(pair.sierpinski.holds);
        }
}

TEST_CASE("verify_fermat_wilson") {
  const CongruenceReport r1 = verify_fermat_wilson(2, 6);
  CHECK(r1.lhs == 0);
  CHECK(r1.holds);
  CHECK(r1.status == ReportStatus::Checked);

  const CongruenceReport r2 = verify_fermat_wilson(3, 5);
  CHECK(r2.lhs == 0);
  CHECK(r2.holds);
  CHECK(r2.note.find("fermat_part=0") != std::string::npos);  // 3^5 = 3 (mod 5)

  // m = 4 is excluded by the hypothesis but holds when evaluated.
  const CongruenceReport skipped = verify_fermat_wilson(2, 4);
  CHECK(skipped.status == ReportStatus::ExcludedByHypothesis);
  CHECK(skipped.holds);

  const CongruenceReport evaluated = verify_fermat_wilson(2, 4, GuardHandling::Include);
  CHECK(evaluated.status == ReportStatus::ExcludedByHypothesis);
  CHECK(evaluated.lhs == 0);  // (16-2)*6 = 84 = 0 (mod 4)
  CHECK(evaluated.holds);

  CHECK(verify_fermat_wilson(7, 1).holds);  // everything is 0 mod 1
  CHECK_THROWS_AS(verify_fermat_wilson(2, 0), std::domain_error);
  CHECK_THROWS_AS(verify_fermat_wilson(2, -6), std::domain_error);
}

TEST_CASE("verify_leibniz_gen") {
  CHECK(verify_leibniz_gen(7).lhs == 1);
  CHECK(verify_leibniz_gen(7).holds);
  CHECK(verify_leibniz_gen(8).lhs == 7);
  CHECK(verify_leibniz_gen(8).rhs == 7);
  CHECK(verify_leibniz_gen(9).lhs == 1);
  CHECK(verify_leibniz_gen(9).holds);
  CHECK_THROWS_AS(verify_leibniz_gen(1), std::domain_error);
  CHECK_THROWS_AS(verify_leibniz_gen(0), std::domain_error);
}

TEST_CASE("verifier sides are invariant under parameter shifts by m") {
  for (std::int64_t m : {5, 6, 12, 45}) {
    for (std::int64_t x = 0; x < m; ++x) {
      const CongruenceReport a = verify_l_theorems(x, m);
      const CongruenceReport b = verify_l_theorems(x + m, m);
      CHECK(a.lhs == b.lhs);
      CHECK(a.rhs == b.rhs);

      const CongruenceReport c = verify_euler_gen(x, m);
      const CongruenceReport d = verify_euler_gen(x + m, m);
      CHECK(c.lhs == d.lhs);
      CHECK(c.rhs == d.rhs);
    }
    for (std::int64_t a_val = 0; a_val < m; ++a_val) {
      const MoserReports p = verify_moser_gen(a_val, 1, m);
      const MoserReports q = verify_moser_gen(a_val + m, 1, m);
      CHECK(p.moser.lhs == q.moser.lhs);
      CHECK(p.moser.rhs == q.moser.rhs);

      const CongruenceReport f = verify_fermat_wilson(a_val, m);
      const CongruenceReport g = verify_fermat_wilson(a_val + m, m);
      CHECK(f.lhs == g.lhs);
    }
  }
}

TEST_CASE("scan validates its request") {
  ScanRequest req;
  req.theorem = TheoremId::Gauss;
  req.m_range = {10, 2};
  CHECK_THROWS_AS(scan(req), std::invalid_argument);

  req.m_range = {-3, 10};  // crosses zero
  CHECK_THROWS_AS(scan(req), std::invalid_argument);

  req.m_range = {2, 10};
  req.x_range = Range{0, 5};  // gauss takes no x
  CHECK_THROWS_AS(scan(req), std::invalid_argument);

  req.x_range.reset();
  req.a_range = Range{0, 5};  // gauss takes no a
  CHECK_THROWS_AS(scan(req), std::invalid_argument);

  ScanRequest moser;
  moser.theorem = TheoremId::MoserGen;
  moser.m_range = {2, 10};
  CHECK_THROWS_AS(scan(moser), std::invalid_argument);  // a range required

  ScanRequest fermat;
  fermat.theorem = TheoremId::FermatWilson;
  fermat.m_range = {-5, -2};
  fermat.a_range = Range{0, 3};
  CHECK_THROWS_AS(scan(fermat), std::invalid_argument);  // positive m only

  ScanRequest leibniz;
  leibniz.theorem = TheoremId::LeibnizGen;
  leibniz.m_range = {1, 50};
  CHECK_THROWS_AS(scan(leibniz), std::invalid_argument);  // |m| >= 2
}

TEST_CASE("scan totals on the worked examples") {
  ScanRequest gauss;
  gauss.theorem = TheoremId::Gauss;
  gauss.m_range = {2, 100};
  gauss.workers = 1;
  const ScanResult gr = scan(gauss);
  CHECK(gr.total_cases == 99);
  CHECK(gr.violations.empty());
  CHECK(gr.excluded_cases == 0);
  CHECK(gr.ranges == "m=2..100");

  ScanRequest lt;
  lt.theorem = TheoremId::LTheorems;
  lt.m_range = {2, 50};
  const ScanResult lr = scan(lt);
  CHECK(lr.total_cases == 1274);  // sum of m over 2..50
  CHECK(lr.violations.empty());
}

TEST_CASE("scan separates hypothesis-excluded points") {
  ScanRequest req;
  req.theorem = TheoremId::LagrangeExt;
  req.m_range = {4, 4};
  req.x_range = Range{1, 20};

  const ScanResult respected = scan(req);
  CHECK(respected.total_cases == 0);
  CHECK(respected.excluded_cases == 20);
  CHECK(respected.excluded_failures == 0);
  CHECK(respected.violations.empty());
  CHECK(respected.excluded_fail_reports.empty());

  req.guard = GuardHandling::Include;
  const ScanResult included = scan(req);
  CHECK(included.total_cases == 0);
  CHECK(included.excluded_cases == 20);
  CHECK(included.excluded_failures == 5);
  REQUIRE(included.excluded_fail_reports.size() == 5);
  std::int64_t want_x = 4;
  for (const auto& rep : included.excluded_fail_reports) {
    CHECK(rep.x == want_x);  // exactly the x = 0 (mod 4) points
    CHECK(rep.status == ReportStatus::ExcludedByHypothesis);
    CHECK_FALSE(rep.holds);
    want_x += 4;
  }
}

TEST_CASE("scan orders violations by modulus then parameters") {
  ScanRequest req;
  req.theorem = TheoremId::LagrangeExt;
  req.m_range = {2, 10};
  req.x_range = Range{1, 20};
  req.guard = GuardHandling::Include;
  const ScanResult result = scan(req);

  CHECK(result.violations.empty());  // in-hypothesis points all hold
  REQUIRE(!result.excluded_fail_reports.empty());
  for (std::size_t i = 1; i < result.excluded_fail_reports.size(); ++i) {
    const auto& prev = result.excluded_fail_reports[i - 1];
    const auto& cur = result.excluded_fail_reports[i];
    const bool ordered =
        prev.m < cur.m || (prev.m == cur.m && prev.x.value() < cur.x.value());
    CHECK(ordered);
  }
  // Failures appear exactly at prime m and m = 4, at x = 0 (mod m).
  for (const auto& rep : result.excluded_fail_reports) {
    CHECK((is_prime(rep.m) || rep.m == 4));
    CHECK(canonical(*rep.x, rep.m) == 0);
  }
}

TEST_CASE("scan is deterministic across worker counts") {
  ScanRequest req;
  req.theorem = TheoremId::LTheorems;
  req.m_range = {2, 80};

  req.workers = 1;
  const ScanResult one = scan(req);
  req.workers = 8;
  const ScanResult eight = scan(req);

  CHECK(one.total_cases == eight.total_cases);
  CHECK(one.excluded_cases == eight.excluded_cases);
  CHECK(one.violations.size() == eight.violations.size());
  CHECK(one.ranges == eight.ranges);
}

TEST_CASE("euler_gen scan covers the acceptance rectangle shape") {
  ScanRequest req;
  req.theorem = TheoremId::EulerGen;
  req.m_range = {1, 60};
  const ScanResult result = scan(req);
  // x runs over [0, 2m] for each m.
  std::int64_t expect = 0;
  for (std::int64_t m = 1; m <= 60; ++m) expect += 2 * m + 1;
  CHECK(result.total_cases == expect);
  CHECK(result.violations.empty());
}
