#pragma once
// Amenability constants, boundedness classification, Theta block norms,
// Arens-regularity scans, and point-derivation obstruction sequences.

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bfa/dual.hpp"
#include "bfa/weight.hpp"

namespace bfa {

// Norm of the (pi, rho) block of Theta = Gamma(W) (W^-1 x W^-1): the largest
// ratio w(sigma) / (w(pi) w(rho)) over the support of pi (x) rho.  At most
// 1 + tolerance exactly when the weight is valid on a covering truncation.
struct ThetaEntry {
  IrrepLabel pi, rho;
  double value = 0.0;
  IrrepLabel argmax;
};

inline ThetaEntry theta_norm(const Weight& w, const IrrepLabel& pi, const IrrepLabel& rho) {
  const DualTable& dual = w.dual();
  ThetaEntry entry{pi, rho, 0.0, pi};
  double denom = w.eval(pi) * w.eval(rho);
  for (const auto& [sigma, m] : dual.fuse(pi, rho).entries) {
    double ratio = w.eval(sigma) / denom;
    if (ratio > entry.value) {
      entry.value = ratio;
      entry.argmax = sigma;
    }
  }
  return entry;
}

enum class ScanVerdict { SufficientConditionMet, NotMetOnTruncation, Inconclusive };

inline const char* verdict_name(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::SufficientConditionMet: return "sufficient-condition-met";
    case ScanVerdict::NotMetOnTruncation: return "not-met-on-truncation";
    case ScanVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ScanReport {
  std::vector<IrrepLabel> labels;            // first L labels, enumeration order
  std::vector<std::vector<double>> theta;    // L x L block norms
  std::vector<double> row_tail_sup;          // max over scanned tail columns
  std::vector<double> col_tail_sup;          // max over scanned tail rows
  std::vector<double> closed_form_row;       // limsup along the tail, when known
  std::vector<double> closed_form_col;
  bool has_closed_form = false;
  std::size_t tail_start = 0;
  double threshold = 0.0;
  ScanVerdict verdict = ScanVerdict::Inconclusive;
};

namespace detail {

// limsup of theta(pi, .) along the enumeration, for weights whose block
// ratios are maximized at the top of the Clebsch-Gordan range.  Known in
// closed form for the built-in families on the SU(2) and circle duals.
inline std::optional<double> theta_tail_limit(const Weight& w, const IrrepLabel& pi) {
  const DualTable& dual = w.dual();
  if (dual.kind() != DualTable::Kind::Su2 && dual.kind() != DualTable::Kind::Torus)
    return std::nullopt;
  double s = dual.size_param(pi);
  switch (w.family()) {
    case WeightFamily::Trivial:
      return 1.0;
    case WeightFamily::OmegaA:
      // (s_pi + s_rho - 1)^a / (s_pi^a s_rho^a) -> 1/s_pi^a
      return std::pow(s, -w.param());
    case WeightFamily::SigmaA:
      return std::pow(1.0 + std::log(s), -w.param());
    case WeightFamily::RhoB: {
      // exp((s_pi + s_rho - 1)^b - s_pi^b - s_rho^b); the cross term dies
      // for b < 1 and contributes exactly s_pi - 1 for b = 1.
      double b = w.param();
      if (b < 1.0) return std::exp(-std::pow(s, b));
      return std::exp(-1.0);
    }
    case WeightFamily::ExpDimB: {
      if (dual.kind() == DualTable::Kind::Torus) return std::exp(-1.0);  // constant weight e
      double b = w.param();
      if (b < 1.0) return std::exp(-std::pow(s, b));
      return std::exp(-1.0);
    }
    case WeightFamily::PointwiseProduct: {
      auto l = theta_tail_limit(w.children()[0], pi);
      auto r = theta_tail_limit(w.children()[1], pi);
      if (l && r) return *l * *r;
      return std::nullopt;
    }
    case WeightFamily::Symmetrized: {
      // Self-conjugate labels on these duals: Omega = w^2 blockwise.
      auto l = theta_tail_limit(w.children()[0], pi);
      if (l) return *l * *l;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace detail

// Fills Theta over the first L x L enumerated pairs and reports directional
// tail suprema (tail = enumeration indices >= tail_start).  The verdict uses
// the closed-form tail limits when the weight family provides them; finite
// duals are judged by the scanned suprema; anything else passing only on the
// truncation stays inconclusive (no silent extrapolation).
inline ScanReport arens_scan(const Weight& w, std::size_t truncation,
                             std::size_t tail_start, double threshold) {
  if (!(truncation > tail_start && tail_start >= 1))
    throw DomainError("arens_scan needs truncation L > tail start R >= 1");
  ScanReport report;
  report.labels = w.dual().enumerate_first(truncation);
  const std::size_t L = report.labels.size();
  if (L <= tail_start)
    throw DomainError("truncation does not reach past the tail start on this dual");
  report.tail_start = tail_start;
  report.threshold = threshold;

  report.theta.assign(L, std::vector<double>(L, 0.0));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      report.theta[i][j] = theta_norm(w, report.labels[i], report.labels[j]).value;

  report.row_tail_sup.assign(L, 0.0);
  report.col_tail_sup.assign(L, 0.0);
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = tail_start; j < L; ++j) {
      report.row_tail_sup[i] = std::max(report.row_tail_sup[i], report.theta[i][j]);
      report.col_tail_sup[i] = std::max(report.col_tail_sup[i], report.theta[j][i]);
    }
  }

  report.has_closed_form = true;
  for (std::size_t i = 0; i < L && report.has_closed_form; ++i) {
    auto cf = detail::theta_tail_limit(w, report.labels[i]);
    if (!cf) {
      report.has_closed_form = false;
      break;
    }
    report.closed_form_row.push_back(*cf);
  }
  if (report.has_closed_form) {
    report.closed_form_col = report.closed_form_row;  // theta is symmetric
  } else {
    report.closed_form_row.clear();
    report.closed_form_col.clear();
  }

  if (report.has_closed_form) {
    bool met = report.closed_form_row.back() < threshold &&
               report.closed_form_col.back() < threshold;
    report.verdict = met ? ScanVerdict::SufficientConditionMet
                         : ScanVerdict::NotMetOnTruncation;
  } else {
    bool below = report.row_tail_sup.back() < threshold &&
                 report.col_tail_sup.back() < threshold;
    if (w.dual().size().has_value())
      report.verdict = below ? ScanVerdict::SufficientConditionMet
                             : ScanVerdict::NotMetOnTruncation;
    else
      report.verdict = below ? ScanVerdict::Inconclusive
                             : ScanVerdict::NotMetOnTruncation;
  }
  return report;
}

// Operator amenability constant of A(G,w) for finite G:
// sum_pi d_pi^2 Omega(pi) / sum_pi d_pi^2.
inline double amen_constant(const DualPtr& dual, const Weight& w) {
  auto n = dual->size();
  if (!n) throw DomainError("amenability constant needs a finite dual");
  Weight omega = w.symmetrized();
  double num = 0.0, den = 0.0;
  for (const auto& pi : dual->enumerate_first(*n)) {
    double d2 = static_cast<double>(dual->dim(pi));
    d2 *= d2;
    num += d2 * omega.eval(pi);
    den += d2;
  }
  return num / den;
}

enum class ProductAmenVerdict { Convergent, DivergentOrSlow };

struct ProductAmenReport {
  std::vector<double> factor_constants;
  std::vector<double> partial_products;  // nondecreasing, each factor >= 1
  double constant_estimate = 1.0;
  ProductAmenVerdict verdict = ProductAmenVerdict::DivergentOrSlow;
  std::size_t terms_used = 0;
};

// Partial products of per-factor amenability constants for a product of
// finite groups.  "Convergent" once the relative increment drops under tol
// before max_terms factors.
inline ProductAmenReport product_amen(const std::vector<std::pair<DualPtr, Weight>>& factors,
                                      double tol, std::size_t max_terms) {
  if (factors.empty()) throw DomainError("product_amen needs at least one factor");
  ProductAmenReport report;
  double p = 1.0;
  for (std::size_t i = 0; i < factors.size() && i < max_terms; ++i) {
    double c = amen_constant(factors[i].first, factors[i].second);
    if (c < 1.0 - kWeightTolerance)
      throw DomainError("factor amenability constant below 1 signals an invalid weight");
    report.factor_constants.push_back(c);
    p *= c;
    report.partial_products.push_back(p);
    report.terms_used = i + 1;
    if (c - 1.0 < tol) {
      report.verdict = ProductAmenVerdict::Convergent;
      break;
    }
  }
  report.constant_estimate = p;
  return report;
}

enum class OmegaClass { BoundedWitness, DivergenceEvidence, Inconclusive };

struct ClassifyResult {
  OmegaClass verdict = OmegaClass::Inconclusive;
  double witness = 0.0;  // sup over truncation, or min over the tail frontier
  bool heuristic = false;
  std::string note;
};

namespace detail {

// Exact boundedness of the symmetrization for closed-form families:
// returns true = bounded, false = Omega -> infinity along the enumeration,
// nullopt = neither derivable structurally.
inline std::optional<bool> omega_bounded(const Weight& w) {
  const DualTable& dual = w.dual();
  if (dual.size()) return true;  // finite dual: any weight is bounded
  switch (w.family()) {
    case WeightFamily::Trivial:
      return true;
    case WeightFamily::OmegaA:
    case WeightFamily::SigmaA:
    case WeightFamily::RhoB:
      // size_param -> infinity along the su2/torus enumeration.
      if (dual.kind() == DualTable::Kind::Su2 || dual.kind() == DualTable::Kind::Torus)
        return w.param() == 0.0;
      return std::nullopt;
    case WeightFamily::ExpDimB:
      if (dual.kind() == DualTable::Kind::Su2) return w.param() == 0.0;
      return std::nullopt;
    case WeightFamily::PointwiseProduct: {
      auto l = omega_bounded(w.children()[0]);
      auto r = omega_bounded(w.children()[1]);
      if (!l || !r) return std::nullopt;
      // Both factors are >= 1 up to their lower bounds, so the product
      // diverges if either side does.
      return *l && *r;
    }
    case WeightFamily::Symmetrized:
      return omega_bounded(w.children()[0]);
    case WeightFamily::Cross: {
      // Divergent only if every factor on an infinite dual diverges; a
      // single bounded infinite direction breaks lim = infinity.
      bool all_bounded = true;
      for (const auto& c : w.children()) {
        auto cb = omega_bounded(c);
        if (!cb) return std::nullopt;
        if (!*cb) all_bounded = false;
      }
      if (all_bounded) return true;
      for (const auto& c : w.children()) {
        auto cb = omega_bounded(c);
        if (*cb && !c.dual().size()) return std::nullopt;  // bounded infinite direction
      }
      return false;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace detail

// Classification for the bounded / divergent criterion on the symmetrization.
// Closed-form families are classified exactly; explicit tables get a
// truncation-based heuristic report.
inline ClassifyResult classify_omega(const Weight& w, std::size_t truncation = 64) {
  Weight omega = w.symmetrized();
  ClassifyResult out;
  auto labels = w.dual().enumerate_first(truncation);
  double sup = 0.0;
  for (const auto& pi : labels) sup = std::max(sup, omega.eval(pi));

  if (auto bounded = detail::omega_bounded(w)) {
    if (*bounded) {
      out.verdict = OmegaClass::BoundedWitness;
      out.witness = sup;
      out.note = w.dual().size() ? "finite dual" : "closed-form family is bounded";
    } else {
      std::size_t frontier = labels.size() - std::max<std::size_t>(1, labels.size() / 4);
      double tail_min = std::numeric_limits<double>::infinity();
      for (std::size_t i = frontier; i < labels.size(); ++i)
        tail_min = std::min(tail_min, omega.eval(labels[i]));
      out.verdict = OmegaClass::DivergenceEvidence;
      out.witness = tail_min;
      out.note = "closed-form family diverges along the enumeration";
    }
    return out;
  }

  // Heuristic for table weights on infinite duals: divergence evidence when
  // the whole tail frontier sits above everything before it.
  out.heuristic = true;
  std::size_t frontier = labels.size() - std::max<std::size_t>(1, labels.size() / 4);
  double tail_min = std::numeric_limits<double>::infinity();
  double head_max = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    double v = omega.eval(labels[i]);
    if (i < frontier)
      head_max = std::max(head_max, v);
    else
      tail_min = std::min(tail_min, v);
  }
  if (tail_min > head_max) {
    out.verdict = OmegaClass::DivergenceEvidence;
    out.witness = tail_min;
    out.note = "heuristic: tail frontier exceeds all earlier values on the truncation";
  } else {
    out.verdict = OmegaClass::Inconclusive;
    out.witness = sup;
    out.note = "heuristic: truncation shows no monotone growth; sup attached";
  }
  return out;
}

struct ObstructionSequence {
  IrrepLabel pi;
  std::vector<double> values;       // v_n = max weight over supp(pi^{(x)n}) / n
  std::vector<double> running_min;  // prefix minima of values
};

namespace detail {

// Support of the n-th tensor power of the SU(2) irrep with label t: all
// labels of the parity of n*t up to n*t (the full Clebsch-Gordan cone) for
// n >= 2; the singleton {t} for n = 1.
inline double su2_power_support_max(const Weight& w, int t, long long n) {
  long long top = static_cast<long long>(t) * n;
  if (top > std::numeric_limits<int>::max())
    throw OverflowError("su2 tensor power label overflow");
  if (n == 1) return w.eval(IrrepLabel::su2(t));
  if (w.family() == WeightFamily::Table) {
    const auto& table = w.table_values();
    double best = 0.0;
    long long listed = 0;
    for (const auto& [label, v] : table) {
      if (label.index <= top && (label.index & 1LL) == (top & 1LL)) {
        best = std::max(best, v);
        ++listed;
      }
    }
    // Support labels outside the table fall back to the default.
    if (listed < top / 2 + 1) {
      if (!w.table_default())
        throw DomainError("table weight does not cover the tensor power support");
      best = std::max(best, *w.table_default());
    }
    return best;
  }
  // Built-in families are nondecreasing in t, so the maximum sits at the top.
  return w.eval(IrrepLabel::su2(static_cast<int>(top)));
}

}  // namespace detail

// Sequence v_n = n(w, pi^{(x)n}) / n whose vanishing infimum rules out
// nonzero continuous point derivations at the identity.  Exact fusion-ring
// supports throughout: closed form on SU(2), set-valued convolution on
// finite duals (multiplicities are irrelevant to the maximum).
inline ObstructionSequence point_deriv_obstruction(const Weight& w, const IrrepLabel& pi,
                                                   std::size_t N) {
  if (N < 1) throw DomainError("obstruction sequence needs N >= 1");
  w.dual().require(pi);
  ObstructionSequence out;
  out.pi = pi;
  out.values.reserve(N);

  const DualTable& dual = w.dual();
  if (dual.kind() == DualTable::Kind::Su2) {
    bool monotone = detail::su2_monotone_family(w) || w.family() == WeightFamily::Table;
    if (!monotone) {
      // Fall through to the generic path below for exotic compositions.
    } else {
      for (std::size_t n = 1; n <= N; ++n) {
        double top = detail::su2_power_support_max(w, pi.index, static_cast<long long>(n));
        out.values.push_back(top / static_cast<double>(n));
      }
    }
  }
  if (out.values.empty()) {
    std::set<IrrepLabel> support{pi};
    for (std::size_t n = 1; n <= N; ++n) {
      if (n > 1) {
        std::set<IrrepLabel> next;
        for (const auto& label : support)
          for (const auto& [sigma, m] : dual.fuse(label, pi).entries) next.insert(sigma);
        support = std::move(next);
      }
      double best = 0.0;
      for (const auto& label : support) best = std::max(best, w.eval(label));
      out.values.push_back(best / static_cast<double>(n));
    }
  }

  out.running_min.reserve(N);
  double m = std::numeric_limits<double>::infinity();
  for (double v : out.values) {
    m = std::min(m, v);
    out.running_min.push_back(m);
  }
  return out;
}

}  // namespace bfa
