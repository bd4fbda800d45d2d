#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bfa/diagnostics.hpp"
#include "bfa/fourier.hpp"
#include "oracles.hpp"

using namespace bfa;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("amenability constants on S3", "[diag]") {
  auto s3 = make_dual("s3");
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    double expect = (1.0 + std::pow(2.0, 2.0 * a + 1.0)) / 3.0;
    CHECK_THAT(amen_constant(s3, Weight::omega_a(s3, a)), WithinAbs(expect, 1e-12));
  }
  for (const char* g : {"z4", "z6", "s3", "s3xz2", "s3xs3"}) {
    auto dual = make_dual(g);
    CHECK_THAT(amen_constant(dual, Weight::trivial(dual)), WithinAbs(1.0, 1e-15));
  }
  CHECK_THROWS_AS(amen_constant(DualTable::su2(), Weight::trivial(DualTable::su2())),
                  DomainError);
}

TEST_CASE("amenability constant equals the delta_e norm", "[diag]") {
  std::mt19937 rng(99);
  for (const char* g : {"z4", "z6", "s3", "s3xz2", "s3xs3"}) {
    auto dual = make_dual(g);
    auto model = MatrixModel::make(dual);
    auto coeffs = transform(model, model.delta_e());
    for (int it = 0; it < 20; ++it) {
      Weight w = oracles::random_valid_table_weight(dual, rng);
      double lhs = amen_constant(dual, w);
      double rhs = norm_ADelta(model, coeffs, w.symmetrized());
      CHECK_THAT(lhs, WithinAbs(rhs, 1e-12));
    }
  }

  // Explicit table on Z4 against the same oracle.
  auto z4 = make_dual("z4");
  std::map<IrrepLabel, double> vals;
  for (int k = 0; k < 4; ++k)
    vals[IrrepLabel::finite(k)] = std::pow(2.0, std::min(k, 4 - k));
  Weight w = Weight::table(z4, std::move(vals), std::nullopt, 1.0);
  REQUIRE(verify_weight(w, z4->enumerate_first(4)).ok());
  auto model = MatrixModel::make(z4);
  CHECK_THAT(amen_constant(z4, w),
             WithinAbs(norm_ADelta(model, transform(model, model.delta_e()), w.symmetrized()),
                       1e-12));
  CHECK_THAT(amen_constant(z4, w), WithinAbs(25.0 / 4.0, 1e-12));
}

TEST_CASE("product amenability partial products", "[diag]") {
  auto s3 = make_dual("s3");

  std::vector<std::pair<DualPtr, Weight>> flat;
  for (int i = 0; i < 50; ++i) flat.emplace_back(s3, Weight::omega_a(s3, 0.0));
  auto r0 = product_amen(flat, 1e-10, 200);
  CHECK(r0.verdict == ProductAmenVerdict::Convergent);
  CHECK_THAT(r0.constant_estimate, WithinAbs(1.0, 1e-15));

  // a_i = 2^{-i}: the partial products settle; compare the 60-term value
  // against a long-double product of the closed-form factor constants.
  std::vector<std::pair<DualPtr, Weight>> geo;
  for (int i = 1; i <= 60; ++i)
    geo.emplace_back(s3, Weight::omega_a(s3, std::pow(2.0, -i)));
  auto r = product_amen(geo, 0.0, 60);
  REQUIRE(r.partial_products.size() == 60);
  long double oracle = 1.0L;
  for (int i = 1; i <= 60; ++i)
    oracle *= (1.0L + std::exp2l(2.0L * std::pow(2.0L, static_cast<long double>(-i)) + 1.0L)) / 3.0L;
  CHECK_THAT(r.partial_products.back(), WithinRel(static_cast<double>(oracle), 1e-12));

  for (std::size_t k = 1; k < r.partial_products.size(); ++k)
    CHECK(r.partial_products[k] >= r.partial_products[k - 1]);

  // Constant weights give geometric growth and no convergence.
  std::vector<std::pair<DualPtr, Weight>> ones;
  for (int i = 0; i < 30; ++i) ones.emplace_back(s3, Weight::omega_a(s3, 1.0));
  auto r1 = product_amen(ones, 1e-10, 200);
  CHECK(r1.verdict == ProductAmenVerdict::DivergentOrSlow);
  for (std::size_t k = 0; k < r1.partial_products.size(); ++k)
    CHECK_THAT(r1.partial_products[k], WithinRel(std::pow(3.0, k + 1.0), 1e-9));

  // A factor constant below 1 means the weight was never central.
  std::map<IrrepLabel, double> bad{{IrrepLabel::finite(0), 0.5},
                                   {IrrepLabel::finite(1), 0.5},
                                   {IrrepLabel::finite(2), 0.5}};
  std::vector<std::pair<DualPtr, Weight>> invalid;
  invalid.emplace_back(s3, Weight::table(s3, std::move(bad), std::nullopt, 0.5));
  CHECK_THROWS_AS(product_amen(invalid, 1e-10, 10), DomainError);
}

TEST_CASE("classification of the symmetrization", "[diag]") {
  auto su2 = DualTable::su2();
  CHECK(classify_omega(Weight::trivial(su2)).verdict == OmegaClass::BoundedWitness);
  CHECK(classify_omega(Weight::trivial(su2)).witness == 1.0);

  for (double a : {0.5, 1.0, 3.0}) {
    auto r = classify_omega(Weight::omega_a(su2, a));
    CHECK(r.verdict == OmegaClass::DivergenceEvidence);
    CHECK_FALSE(r.heuristic);
    auto rs = classify_omega(Weight::sigma_a(su2, a));
    CHECK(rs.verdict == OmegaClass::DivergenceEvidence);
  }
  CHECK(classify_omega(Weight::omega_a(su2, 0.0)).verdict == OmegaClass::BoundedWitness);
  CHECK(classify_omega(Weight::rho_b(su2, 0.5)).verdict == OmegaClass::DivergenceEvidence);

  // Finite duals are exactly bounded.
  auto s3 = make_dual("s3");
  auto rf = classify_omega(Weight::omega_a(s3, 2.0));
  CHECK(rf.verdict == OmegaClass::BoundedWitness);
  CHECK_FALSE(rf.heuristic);
  CHECK_THAT(rf.witness, WithinRel(16.0, 1e-12));  // Omega(std) = 4^2

  // Growing table on su2: heuristic divergence evidence.
  std::map<IrrepLabel, double> grow;
  for (int t = 0; t <= 70; ++t) grow[IrrepLabel::su2(t)] = std::pow(1.5, t);
  auto rg = classify_omega(Weight::table(su2, std::move(grow), std::nullopt, 1.0));
  CHECK(rg.verdict == OmegaClass::DivergenceEvidence);
  CHECK(rg.heuristic);

  // Flat table: inconclusive.
  std::map<IrrepLabel, double> flat;
  for (int t = 0; t <= 70; ++t) flat[IrrepLabel::su2(t)] = 2.0 + (t % 3);
  auto rfl = classify_omega(Weight::table(su2, std::move(flat), std::nullopt, 2.0));
  CHECK(rfl.verdict == OmegaClass::Inconclusive);
  CHECK(rfl.heuristic);

  // Bounded direction inside an infinite product: neither criterion applies.
  auto prod = make_dual("su2xsu2");
  Weight crossw = Weight::cross(prod, {Weight::omega_a(DualTable::su2(), 1.0),
                                       Weight::trivial(DualTable::su2())});
  CHECK(classify_omega(crossw).verdict == OmegaClass::Inconclusive);
}

TEST_CASE("theta block norms", "[diag]") {
  auto su2 = DualTable::su2();
  Weight w = Weight::omega_a(su2, 1.0);
  auto entry = theta_norm(w, IrrepLabel::su2(2), IrrepLabel::su2(2));
  CHECK_THAT(entry.value, WithinRel(5.0 / 9.0, 1e-15));
  CHECK(entry.argmax == IrrepLabel::su2(4));

  // theta(trivial, pi) = 1 / w(trivial).
  for (const auto& pi : su2->enumerate_first(6))
    CHECK(theta_norm(w, su2->trivial(), pi).value == 1.0 / w.eval(su2->trivial()));

  // Cross pairs in a product dual hit 1 exactly.
  auto ss = make_dual("s3xs3");
  auto s3 = ss->factors()[0];
  for (double a : {0.5, 1.0, 2.0}) {
    Weight cw = Weight::cross(ss, {Weight::omega_a(s3, a), Weight::omega_a(s3, a)});
    auto theta = theta_norm(cw, ss->parse_label("(std,triv)"), ss->parse_label("(triv,std)"));
    CHECK(theta.value == 1.0);
    CHECK(theta.argmax == ss->parse_label("(std,std)"));
  }
}

TEST_CASE("weight validity is equivalent to theta <= 1", "[diag]") {
  std::mt19937 rng(7151);
  auto su2 = DualTable::su2();
  auto trunc = su2->enumerate_first(21);

  std::vector<Weight> valid = {Weight::omega_a(su2, 0.0), Weight::omega_a(su2, 1.0),
                               Weight::omega_a(su2, 2.0), Weight::sigma_a(su2, 1.0),
                               Weight::sigma_a(su2, 2.0), Weight::rho_b(su2, 0.5),
                               Weight::rho_b(su2, 1.0)};
  for (const auto& w : valid) {
    bool verified = verify_weight(w, trunc).ok();
    bool theta_ok = true;
    for (const auto& pi : trunc)
      for (const auto& rho : trunc)
        theta_ok = theta_ok && theta_norm(w, pi, rho).value <= 1.0 + kWeightTolerance;
    CHECK(verified);
    CHECK(theta_ok);
  }

  std::uniform_int_distribution<int> pick(1, 20);
  for (int it = 0; it < 10; ++it) {
    int t1 = pick(rng), t2 = pick(rng);
    Weight bad = oracles::spiked_invalid_weight(Weight::omega_a(su2, 1.0), IrrepLabel::su2(t1),
                                                IrrepLabel::su2(t2), IrrepLabel::su2(t1 + t2));
    bool verified = verify_weight(bad, trunc).ok();
    bool theta_ok = true;
    for (const auto& pi : trunc)
      for (const auto& rho : trunc)
        theta_ok = theta_ok && theta_norm(bad, pi, rho).value <= 1.0 + kWeightTolerance;
    CHECK_FALSE(verified);
    CHECK_FALSE(theta_ok);
  }
}

TEST_CASE("arens scan on su2 with the dimension weight", "[diag]") {
  auto su2 = DualTable::su2();
  auto report = arens_scan(Weight::omega_a(su2, 1.0), 50, 25, 0.05);
  REQUIRE(report.labels.size() == 50);

  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 50; ++j) {
      double expect = (static_cast<double>(i + j) + 1.0) /
                      ((static_cast<double>(i) + 1.0) * (static_cast<double>(j) + 1.0));
      CHECK_THAT(report.theta[i][j], WithinRel(expect, 1e-14));
      // Never above the subadditivity bound for a <= 1.
      CHECK(report.theta[i][j] <= 1.0 / (i + 1.0) + 1.0 / (j + 1.0) + 1e-15);
    }

  // The same bound holds with exponent a = 1/2 applied throughout.
  auto half = arens_scan(Weight::omega_a(su2, 0.5), 50, 25, 0.05);
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 50; ++j)
      CHECK(half.theta[i][j] <=
            std::pow(i + 1.0, -0.5) + std::pow(j + 1.0, -0.5) + 1e-15);

  REQUIRE(report.has_closed_form);
  for (std::size_t i = 0; i < 50; ++i) {
    CHECK_THAT(report.closed_form_row[i], WithinRel(1.0 / (i + 1.0), 1e-15));
    // The scanned tail supremum sits above its limit and decreases toward it.
    CHECK(report.row_tail_sup[i] >= report.closed_form_row[i]);
  }
  CHECK(report.verdict == ScanVerdict::SufficientConditionMet);

  // Trivial weight: theta is identically 1 and the condition fails.
  auto flat = arens_scan(Weight::trivial(su2), 50, 25, 0.05);
  for (const auto& row : flat.theta)
    for (double v : row) CHECK(v == 1.0);
  CHECK(flat.verdict == ScanVerdict::NotMetOnTruncation);
}

TEST_CASE("arens scan on product duals with cross weights", "[diag]") {
  auto ss = make_dual("s3xs3");
  auto s3 = ss->factors()[0];
  Weight cw = Weight::cross(ss, {Weight::omega_a(s3, 1.0), Weight::omega_a(s3, 1.0)});
  auto report = arens_scan(cw, 9, 3, 0.05);
  CHECK(report.verdict == ScanVerdict::NotMetOnTruncation);
  CHECK_FALSE(report.has_closed_form);
  double top = 0.0;
  for (std::size_t i = 0; i < report.labels.size(); ++i)
    top = std::max(top, report.row_tail_sup[i]);
  CHECK(top == 1.0);  // cross pairs keep theta pinned at 1 into the tail
}

TEST_CASE("arens scan verdict is truncation-only for table weights", "[diag]") {
  auto su2 = DualTable::su2();
  std::map<IrrepLabel, double> vals;
  for (int t = 0; t <= 80; ++t) vals[IrrepLabel::su2(t)] = std::pow(t + 1.0, 1.0);
  Weight w = Weight::table(su2, std::move(vals), std::nullopt, 1.0);
  auto report = arens_scan(w, 30, 20, 0.2);
  CHECK_FALSE(report.has_closed_form);
  CHECK(report.verdict == ScanVerdict::Inconclusive);  // passes on the truncation only
}

TEST_CASE("arens scan argument checking", "[diag]") {
  auto su2 = DualTable::su2();
  CHECK_THROWS_AS(arens_scan(Weight::trivial(su2), 10, 10, 0.05), DomainError);
  auto s3 = make_dual("s3");
  CHECK_THROWS_AS(arens_scan(Weight::trivial(s3), 50, 25, 0.05), DomainError);
}

TEST_CASE("point derivation obstruction sequences", "[diag]") {
  auto su2 = DualTable::su2();
  IrrepLabel half = IrrepLabel::su2(1);

  for (double a : {0.5, 1.0, 2.0}) {
    auto seq = point_deriv_obstruction(Weight::omega_a(su2, a), half, 400);
    REQUIRE(seq.values.size() == 400);
    for (std::size_t n = 1; n <= 400; ++n)
      CHECK(seq.values[n - 1] == std::pow(n + 1.0, a) / static_cast<double>(n));
    for (std::size_t n = 1; n < 400; ++n)
      CHECK(seq.running_min[n] <= seq.running_min[n - 1]);
  }

  auto triv = point_deriv_obstruction(Weight::trivial(su2), half, 100);
  for (std::size_t n = 1; n <= 100; ++n)
    CHECK(triv.values[n - 1] == 1.0 / static_cast<double>(n));

  auto sig = point_deriv_obstruction(Weight::sigma_a(su2, 2.0), half, 300);
  for (std::size_t n = 1; n <= 300; ++n)
    CHECK(sig.values[n - 1] ==
          std::pow(1.0 + std::log(n + 1.0), 2.0) / static_cast<double>(n));

  // Closed-form path agrees with supports taken straight from fusion powers.
  Weight w = Weight::omega_a(su2, 1.3);
  for (int t : {1, 2, 3}) {
    auto seq = point_deriv_obstruction(w, IrrepLabel::su2(t), 12);
    for (int n = 1; n <= 12; ++n) {
      double best = 0.0;
      for (const auto& [sigma, m] : su2->fusion_power(IrrepLabel::su2(t), n).entries)
        best = std::max(best, w.eval(sigma));
      CHECK(seq.values[n - 1] == best / static_cast<double>(n));
    }
  }

  // Finite duals run on exact support sets.
  auto s3 = make_dual("s3");
  auto fin = point_deriv_obstruction(Weight::omega_a(s3, 1.0), s3->parse_label("std"), 50);
  for (std::size_t n = 2; n <= 50; ++n)
    CHECK(fin.values[n - 1] == 2.0 / static_cast<double>(n));
  CHECK(fin.values[0] == 2.0);

  // Table weights on su2 use the default for uncovered support labels.
  std::map<IrrepLabel, double> vals{{IrrepLabel::su2(0), 1.0}, {IrrepLabel::su2(2), 7.0}};
  Weight tab = Weight::table(su2, std::move(vals), 1.5, 1.0);
  auto seq = point_deriv_obstruction(tab, half, 6);
  CHECK(seq.values[1] == 7.0 / 2.0);   // supp = {0, 2}
  CHECK(seq.values[2] == 1.5 / 3.0);   // supp = {1, 3}: both fall to the default
  Weight bare = Weight::table(su2, {{IrrepLabel::su2(1), 2.0}}, std::nullopt, 1.0);
  CHECK_THROWS_AS(point_deriv_obstruction(bare, half, 4), DomainError);
}
