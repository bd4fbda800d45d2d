#pragma once
// Central weights on group duals: closed-form families, explicit tables,
// pointwise and cross products, symmetrization, verification, restriction.
//
// A central weight is a function w : dual -> (delta, infinity) with
// w(sigma) <= w(pi) w(rho) whenever sigma occurs in the decomposition of
// pi (x) rho.  The closed-form families evaluate through the size parameter
// s(pi) (the dimension, or 1 + |n| on the circle dual, which is what the
// SU(2) families restrict to):
//
//   trivial        1
//   omega_a        s^a
//   sigma_a        (1 + ln s)^a
//   rho_b          e^(s^b)        (SU(2) and circle duals only)
//   exp_dim_b      e^(d^b)        (any dual; validity checked, not assumed)

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfa/dual.hpp"

namespace bfa {

enum class WeightFamily {
  Trivial,
  OmegaA,
  SigmaA,
  RhoB,
  ExpDimB,
  PointwiseProduct,
  Cross,
  Table,
  Symmetrized,
};

inline const char* family_name(WeightFamily f) {
  switch (f) {
    case WeightFamily::Trivial: return "trivial";
    case WeightFamily::OmegaA: return "omega_a";
    case WeightFamily::SigmaA: return "sigma_a";
    case WeightFamily::RhoB: return "rho_b";
    case WeightFamily::ExpDimB: return "exp_dim_b";
    case WeightFamily::PointwiseProduct: return "product";
    case WeightFamily::Cross: return "cross";
    case WeightFamily::Table: return "table";
    case WeightFamily::Symmetrized: return "symmetrized";
  }
  return "?";
}

class Weight {
public:
  static Weight trivial(DualPtr dual) { return Weight(std::move(dual), WeightFamily::Trivial); }

  static Weight omega_a(DualPtr dual, double a) {
    require_param(a, "omega_a exponent a");
    Weight w(std::move(dual), WeightFamily::OmegaA);
    w.param_ = a;
    return w;
  }

  static Weight sigma_a(DualPtr dual, double a) {
    require_param(a, "sigma_a exponent a");
    Weight w(std::move(dual), WeightFamily::SigmaA);
    w.param_ = a;
    return w;
  }

  static Weight rho_b(DualPtr dual, double b) {
    if (!(b >= 0.0 && b <= 1.0)) throw DomainError("rho_b needs 0 <= b <= 1");
    if (dual->kind() != DualTable::Kind::Su2 && dual->kind() != DualTable::Kind::Torus)
      throw DomainError("rho_b is defined only on the SU(2) and circle duals; "
                        "use exp_dim_b elsewhere");
    Weight w(std::move(dual), WeightFamily::RhoB);
    w.param_ = b;
    return w;
  }

  static Weight exp_dim_b(DualPtr dual, double b) {
    if (!(b >= 0.0 && b <= 1.0)) throw DomainError("exp_dim_b needs 0 <= b <= 1");
    Weight w(std::move(dual), WeightFamily::ExpDimB);
    w.param_ = b;
    return w;
  }

  static Weight pointwise_product(const Weight& w1, const Weight& w2) {
    if (w1.dual_ptr() != w2.dual_ptr() && w1.dual().name() != w2.dual().name())
      throw DomainError("pointwise product needs weights on the same dual");
    Weight w(w1.dual_ptr(), WeightFamily::PointwiseProduct);
    w.children_ = {w1, w2};
    return w;
  }

  static Weight cross(DualPtr product_dual, std::vector<Weight> factors) {
    if (product_dual->kind() != DualTable::Kind::Product)
      throw DomainError("cross weight needs a product dual");
    if (product_dual->factors().size() != factors.size())
      throw DomainError("cross weight arity does not match the product dual");
    Weight w(std::move(product_dual), WeightFamily::Cross);
    w.children_ = std::move(factors);
    return w;
  }

  static Weight table(DualPtr dual, std::map<IrrepLabel, double> values,
                      std::optional<double> fallback, double delta) {
    if (!(delta > 0.0)) throw DomainError("table weight needs a lower bound delta > 0");
    for (const auto& [label, v] : values) {
      dual->require(label);
      if (!(v >= delta))
        throw DomainError("table weight value below the declared lower bound");
    }
    if (fallback && !(*fallback >= delta))
      throw DomainError("table weight default below the declared lower bound");
    Weight w(std::move(dual), WeightFamily::Table);
    w.table_ = std::move(values);
    w.fallback_ = fallback;
    w.delta_ = delta;
    return w;
  }

  // Symmetrization: Omega(pi) = w(pi) w(conj pi), returned lazily.
  Weight symmetrized() const {
    Weight w(dual_, WeightFamily::Symmetrized);
    w.children_ = {*this};
    return w;
  }

  WeightFamily family() const { return family_; }
  double param() const { return param_; }
  const std::vector<Weight>& children() const { return children_; }
  const std::map<IrrepLabel, double>& table_values() const { return table_; }
  std::optional<double> table_default() const { return fallback_; }
  double table_delta() const { return delta_; }
  const DualTable& dual() const { return *dual_; }
  const DualPtr& dual_ptr() const { return dual_; }

  double eval(const IrrepLabel& pi) const {
    dual_->require(pi);
    switch (family_) {
      case WeightFamily::Trivial:
        return 1.0;
      case WeightFamily::OmegaA:
        return std::pow(dual_->size_param(pi), param_);
      case WeightFamily::SigmaA:
        return std::pow(1.0 + std::log(dual_->size_param(pi)), param_);
      case WeightFamily::RhoB:
        return std::exp(std::pow(dual_->size_param(pi), param_));
      case WeightFamily::ExpDimB:
        return std::exp(std::pow(static_cast<double>(dual_->dim(pi)), param_));
      case WeightFamily::PointwiseProduct:
        return children_[0].eval(pi) * children_[1].eval(pi);
      case WeightFamily::Cross: {
        double acc = 1.0;
        for (std::size_t i = 0; i < children_.size(); ++i)
          acc *= children_[i].eval(pi.parts[i]);
        return acc;
      }
      case WeightFamily::Table: {
        auto it = table_.find(pi);
        if (it != table_.end()) return it->second;
        if (fallback_) return *fallback_;
        throw DomainError("label not listed in explicit weight table and no default declared");
      }
      case WeightFamily::Symmetrized:
        return children_[0].eval(pi) * children_[0].eval(dual_->conj(pi));
    }
    throw Error("unreachable weight family");
  }

  // Declared lower bound delta.
  double lower_bound() const {
    switch (family_) {
      case WeightFamily::Trivial:
      case WeightFamily::OmegaA:
      case WeightFamily::SigmaA:
        return 1.0;
      case WeightFamily::RhoB:
      case WeightFamily::ExpDimB:
        return std::exp(1.0);
      case WeightFamily::PointwiseProduct:
        return children_[0].lower_bound() * children_[1].lower_bound();
      case WeightFamily::Cross: {
        double acc = 1.0;
        for (const auto& c : children_) acc *= c.lower_bound();
        return acc;
      }
      case WeightFamily::Table:
        return delta_;
      case WeightFamily::Symmetrized: {
        double d = children_[0].lower_bound();
        return d * d;
      }
    }
    return 1.0;
  }

private:
  Weight(DualPtr dual, WeightFamily family) : dual_(std::move(dual)), family_(family) {
    if (!dual_) throw DomainError("weight needs a dual");
  }
  static void require_param(double a, const char* what) {
    if (!(a >= 0.0)) throw DomainError(std::string(what) + " must be >= 0");
  }

  DualPtr dual_;
  WeightFamily family_;
  double param_ = 0.0;
  std::vector<Weight> children_;
  std::map<IrrepLabel, double> table_;
  std::optional<double> fallback_;
  double delta_ = 1.0;
};

inline Weight symmetrize(const Weight& w) { return w.symmetrized(); }

inline Weight pointwise_product(const Weight& a, const Weight& b) {
  return Weight::pointwise_product(a, b);
}

// Slack allowed before a ratio counts as a violation of the central-weight
// inequality; covers closed-form rounding like (1 + ln d)^a.
inline constexpr double kWeightTolerance = 1e-12;

struct Violation {
  IrrepLabel pi, rho, sigma;
  double ratio = 0.0;  // w(sigma) / (w(pi) w(rho)), > 1 + tolerance
};

struct ViolationReport {
  std::vector<Violation> violations;
  std::size_t checked_pairs = 0;
  std::string truncation;

  bool ok() const { return violations.empty(); }
};

// Checks w(sigma) <= w(pi) w(rho) for every pair in the truncation and every
// sigma in the decomposition of pi (x) rho.  sigma may fall outside the
// truncation; it is still evaluated.
inline ViolationReport verify_weight(const Weight& w,
                                     const std::vector<IrrepLabel>& truncation) {
  if (truncation.empty()) throw DomainError("verify_weight needs a nonempty truncation");
  ViolationReport report;
  report.truncation = std::to_string(truncation.size()) + " labels of " + w.dual().name();
  const DualTable& dual = w.dual();
  for (const auto& pi : truncation) {
    for (const auto& rho : truncation) {
      ++report.checked_pairs;
      double denom = w.eval(pi) * w.eval(rho);
      for (const auto& [sigma, m] : dual.fuse(pi, rho).entries) {
        double ratio = w.eval(sigma) / denom;
        if (ratio > 1.0 + kWeightTolerance)
          report.violations.push_back({pi, rho, sigma, ratio});
      }
    }
  }
  return report;
}

// Weight induced on the dual of a subgroup H <= G: each tau in the dual of H
// gets the minimum of w over the irreps of G whose restriction to H contains
// tau.  `embedding` maps H-class indices to G-class indices; branching
// multiplicities are class-weighted character inner products over H.
inline Weight restrict_finite(const Weight& w, const CharacterTable& g_table,
                              const CharacterTable& h_table,
                              const std::vector<int>& embedding, DualPtr h_dual) {
  if (w.dual().kind() != DualTable::Kind::Finite)
    throw DomainError("restrict_finite needs a weight on a finite dual");
  if (embedding.size() != h_table.num_classes())
    throw DomainError("embedding must map every class of H to a class of G");
  for (int g : embedding)
    if (g < 0 || static_cast<std::size_t>(g) >= g_table.num_classes())
      throw DomainError("embedding refers to a class outside G");

  const double h_order = static_cast<double>(h_table.order());
  std::map<IrrepLabel, double> values;
  for (std::size_t ti = 0; ti < h_table.num_irreps(); ++ti) {
    double best = std::numeric_limits<double>::infinity();
    long long dim_check = 0;
    for (std::size_t pi = 0; pi < g_table.num_irreps(); ++pi) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < h_table.num_classes(); ++c) {
        acc += static_cast<double>(h_table.cls(c).size) *
               g_table.irrep(pi).chars[embedding[c]] *
               std::conj(h_table.irrep(ti).chars[c]);
      }
      acc /= h_order;
      double m = std::round(acc.real());
      if (std::abs(acc.real() - m) > 1e-6 || std::abs(acc.imag()) > 1e-6 || m < -0.5)
        throw DomainError("embedding fails class-function consistency (branching not integral)");
      if (m >= 0.5) {
        best = std::min(best, w.eval(IrrepLabel::finite(static_cast<int>(pi))));
        dim_check += static_cast<long long>(m) * h_table.irrep(ti).dim;
      }
    }
    if (!std::isfinite(best))
      throw DomainError("a character of H extends to no irrep of G; embedding inconsistent");
    values[IrrepLabel::finite(static_cast<int>(ti))] = best;
  }

  // Full-decomposition check: restricting each G-irrep must account for its
  // whole dimension.
  for (std::size_t pi = 0; pi < g_table.num_irreps(); ++pi) {
    long long total = 0;
    for (std::size_t ti = 0; ti < h_table.num_irreps(); ++ti) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < h_table.num_classes(); ++c)
        acc += static_cast<double>(h_table.cls(c).size) *
               g_table.irrep(pi).chars[embedding[c]] *
               std::conj(h_table.irrep(ti).chars[c]);
      total += static_cast<long long>(std::round(acc.real() / h_order)) * h_table.irrep(ti).dim;
    }
    if (total != g_table.irrep(pi).dim)
      throw DomainError("embedding fails class-function consistency (dimension mismatch)");
  }

  double delta = std::numeric_limits<double>::infinity();
  for (const auto& [label, v] : values) delta = std::min(delta, v);
  return Weight::table(std::move(h_dual), std::move(values), std::nullopt, delta);
}

struct RestrictionResult {
  Weight weight;
  bool exact = true;         // closed form; false = upper bound from a truncation
  int truncation_t = 0;      // largest t scanned when not exact
};

namespace detail {

// The built-in families are nondecreasing in t on the SU(2) dual, so the
// infimum over {t >= |n|} is attained at t = |n|; such weights restrict to
// the same family on the circle dual.
inline bool su2_monotone_family(const Weight& w) {
  switch (w.family()) {
    case WeightFamily::Trivial:
    case WeightFamily::OmegaA:
    case WeightFamily::SigmaA:
    case WeightFamily::RhoB:
    case WeightFamily::ExpDimB:
      return true;
    case WeightFamily::PointwiseProduct:
      return su2_monotone_family(w.children()[0]) && su2_monotone_family(w.children()[1]);
    case WeightFamily::Symmetrized:
      return su2_monotone_family(w.children()[0]);
    default:
      return false;
  }
}

inline Weight rebase_su2_family(const Weight& w, const DualPtr& torus) {
  switch (w.family()) {
    case WeightFamily::Trivial: return Weight::trivial(torus);
    case WeightFamily::OmegaA: return Weight::omega_a(torus, w.param());
    case WeightFamily::SigmaA: return Weight::sigma_a(torus, w.param());
    case WeightFamily::RhoB:
    case WeightFamily::ExpDimB:
      // e^(d^b) with d = t + 1 restricts to e^((1+|n|)^b).
      return Weight::rho_b(torus, w.param());
    case WeightFamily::PointwiseProduct:
      return Weight::pointwise_product(rebase_su2_family(w.children()[0], torus),
                                       rebase_su2_family(w.children()[1], torus));
    case WeightFamily::Symmetrized:
      return rebase_su2_family(w.children()[0], torus).symmetrized();
    default:
      throw DomainError("no closed-form restriction for this weight family");
  }
}

}  // namespace detail

// Restriction of an SU(2)-dual weight to the circle dual:
// w_T(n) = inf { w(pi_l) : |n| <= 2l }.  Closed form for the monotone
// built-in families; otherwise minimized over t <= trunc_t for |n| <= max_n,
// reported as an upper bound.
inline RestrictionResult restrict_su2_to_torus(const Weight& w,
                                               std::optional<int> trunc_t = std::nullopt,
                                               int max_n = 100) {
  if (w.dual().kind() != DualTable::Kind::Su2)
    throw DomainError("restrict_su2_to_torus needs a weight on the SU(2) dual");
  auto torus = DualTable::torus();
  if (detail::su2_monotone_family(w))
    return {detail::rebase_su2_family(w, torus), true, 0};
  if (!trunc_t)
    throw DomainError("restriction of a table weight needs a truncation (largest t to scan)");
  if (*trunc_t < max_n)
    throw DomainError("restriction truncation must reach every |n| requested");
  std::map<IrrepLabel, double> values;
  for (int n = -max_n; n <= max_n; ++n) {
    double best = std::numeric_limits<double>::infinity();
    for (int t = std::abs(n); t <= *trunc_t; ++t)
      best = std::min(best, w.eval(IrrepLabel::su2(t)));
    values[IrrepLabel::torus(n)] = best;
  }
  double delta = std::numeric_limits<double>::infinity();
  for (const auto& [label, v] : values) delta = std::min(delta, v);
  return {Weight::table(torus, std::move(values), std::nullopt, delta), false, *trunc_t};
}

}  // namespace bfa
