#pragma once
// Matrix models of finite groups, the Fourier transform and its inverse,
// and the weighted norms built on trace and Frobenius norms of the Fourier
// coefficients.  Haar measure is normalized to total mass 1, so
// fhat(pi) = (1/|G|) sum_g f(g) conj(pi(g)).

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bfa/dual.hpp"
#include "bfa/weight.hpp"

namespace bfa {

using Matrix = Eigen::MatrixXcd;

struct GroupFunction {
  std::vector<Complex> values;  // one value per group element, model order
};

struct FourierCoefficients {
  std::vector<Matrix> mats;  // one d_pi x d_pi block per irrep, dual order
};

// Sum of singular values.  Dense complex matrices of dimension <= 16.
inline double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

inline double frobenius_norm(const Matrix& m) { return m.norm(); }

// A finite group with explicit unitary matrices for every irrep of its dual.
// Built-ins: cyclic groups, S3, and finite direct products (elements are
// pairs, irreps act by Kronecker products).
class MatrixModel {
public:
  static MatrixModel cyclic(int n);
  static MatrixModel s3();

  // Model for a built-in finite dual ("s3", "z4", "s3xs3", ...).  Product
  // duals get tuple elements and Kronecker-product representations.
  static MatrixModel make(const DualPtr& dual);

  const DualPtr& dual() const { return dual_; }
  std::size_t order() const { return mult_.size(); }
  int identity() const { return identity_; }
  int mult(int g, int h) const { return mult_[g][h]; }
  const std::vector<IrrepLabel>& labels() const { return labels_; }
  const Matrix& rep(std::size_t irrep, int g) const { return reps_[irrep][g]; }
  const std::string& element_name(int g) const { return elem_names_[g]; }

  std::size_t irrep_index(const IrrepLabel& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end())
      throw DomainError("irrep label does not belong to this matrix model");
    return it->second;
  }

  GroupFunction delta_e() const {
    GroupFunction f;
    f.values.assign(order(), 0.0);
    f.values[identity_] = 1.0;
    return f;
  }

  GroupFunction constant(Complex c) const {
    GroupFunction f;
    f.values.assign(order(), c);
    return f;
  }

  // Homomorphism, unitarity, and trace-vs-character checks, all to `tol`.
  void validate(double tol = 1e-9) const {
    for (std::size_t p = 0; p < labels_.size(); ++p) {
      long long d = dual_->dim(labels_[p]);
      for (std::size_t g = 0; g < order(); ++g) {
        const Matrix& mg = reps_[p][g];
        if ((mg * mg.adjoint() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
          throw Error("matrix model fails unitarity");
        Complex tr = mg.trace();
        Complex chi = character(p, static_cast<int>(g));
        if (std::abs(tr - chi) > tol)
          throw Error("matrix model trace does not match the character table");
        for (std::size_t h = 0; h < order(); ++h)
          if ((reps_[p][mult_[g][h]] - mg * reps_[p][h]).cwiseAbs().maxCoeff() > tol)
            throw Error("matrix model fails the homomorphism law");
      }
    }
  }

  // Character value chi_pi(g) straight from the character table(s), not
  // from the matrices; validate() cross-checks the two.
  Complex character(std::size_t irrep, int g) const { return chars_[irrep][g]; }

private:
  MatrixModel(DualPtr dual) : dual_(std::move(dual)) {
    auto n = dual_->size();
    if (!n) throw DomainError("matrix models exist only for finite duals");
    labels_ = dual_->enumerate_first(*n);
    for (std::size_t i = 0; i < labels_.size(); ++i) label_index_[labels_[i]] = i;
  }
  void fill_chars_from_table() {
    const CharacterTable& t = dual_->table();
    chars_.assign(labels_.size(), {});
    for (std::size_t p = 0; p < labels_.size(); ++p) {
      chars_[p].resize(order());
      for (std::size_t g = 0; g < order(); ++g)
        chars_[p][g] = t.irrep(labels_[p].index).chars[class_of_[g]];
    }
  }

  DualPtr dual_;
  std::vector<IrrepLabel> labels_;
  std::map<IrrepLabel, std::size_t> label_index_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> class_of_;
  std::vector<std::string> elem_names_;
  std::vector<std::vector<Matrix>> reps_;   // [irrep][element]
  std::vector<std::vector<Complex>> chars_;  // [irrep][element]
  int identity_ = 0;
};

inline MatrixModel MatrixModel::cyclic(int n) {
  MatrixModel m(DualTable::finite(CharacterTable::cyclic(n), "z" + std::to_string(n)));
  m.mult_.assign(n, std::vector<int>(n));
  m.class_of_.resize(n);
  m.elem_names_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) m.mult_[a][b] = (a + b) % n;
    m.class_of_[a] = a;
    m.elem_names_[a] = "g^" + std::to_string(a);
  }
  m.identity_ = 0;
  const double tau = 2.0 * M_PI / n;
  m.reps_.resize(n);
  for (int k = 0; k < n; ++k) {
    m.reps_[k].resize(n);
    for (int a = 0; a < n; ++a) {
      Matrix mat(1, 1);
      mat(0, 0) = std::polar(1.0, tau * k * a);
      m.reps_[k][a] = mat;
    }
  }
  m.fill_chars_from_table();
  return m;
}

inline MatrixModel MatrixModel::s3() {
  MatrixModel m(DualTable::finite(CharacterTable::s3(), "s3"));
  // Permutations of {0,1,2}: e, (01), (02), (12), (012), (021).
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const char* names[6] = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
  const int classes[6] = {0, 1, 1, 1, 2, 2};
  auto compose = [&](int g, int h) {  // (g h)(x) = g(h(x))
    int out[3];
    for (int x = 0; x < 3; ++x) out[x] = perms[g][perms[h][x]];
    for (int k = 0; k < 6; ++k)
      if (out[0] == perms[k][0] && out[1] == perms[k][1] && out[2] == perms[k][2]) return k;
    throw Error("S3 composition table corrupt");
  };
  m.mult_.assign(6, std::vector<int>(6));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) m.mult_[g][h] = compose(g, h);
  m.class_of_.assign(classes, classes + 6);
  m.elem_names_.assign(names, names + 6);
  m.identity_ = 0;

  // Standard irrep: action of the permutation matrices on the plane
  // orthogonal to (1,1,1), in the orthonormal basis
  // u1 = (1,-1,0)/sqrt(2), u2 = (1,1,-2)/sqrt(6).
  const double u[2][3] = {{1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0},
                          {1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0)}};
  m.reps_.resize(3);
  for (int p = 0; p < 3; ++p) m.reps_[p].resize(6);
  for (int g = 0; g < 6; ++g) {
    Matrix triv(1, 1), sign(1, 1), std2(2, 2);
    triv(0, 0) = 1.0;
    // Parity: transpositions are odd.
    sign(0, 0) = (classes[g] == 1) ? -1.0 : 1.0;
    // inverse permutation of g
    int inv[3];
    for (int x = 0; x < 3; ++x) inv[perms[g][x]] = x;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double acc = 0.0;
        for (int x = 0; x < 3; ++x) acc += u[i][x] * u[j][inv[x]];
        std2(i, j) = acc;
      }
    m.reps_[0][g] = triv;
    m.reps_[1][g] = sign;
    m.reps_[2][g] = std2;
  }
  m.fill_chars_from_table();
  return m;
}

namespace detail {

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

}  // namespace detail

inline MatrixModel MatrixModel::make(const DualPtr& dual) {
  switch (dual->kind()) {
    case DualTable::Kind::Finite: {
      const std::string& n = dual->name();
      if (n == "s3") return s3();
      if (n.size() > 1 && n[0] == 'z') return cyclic(std::stoi(n.substr(1)));
      throw DomainError("no built-in matrix model for group '" + n + "'");
    }
    case DualTable::Kind::Product: {
      const auto& fs = dual->factors();
      std::vector<MatrixModel> leafs;
      leafs.reserve(fs.size());
      for (const auto& f : fs) leafs.push_back(make(f));

      MatrixModel m(dual);
      const std::size_t k = leafs.size();
      std::size_t order = 1;
      for (const auto& l : leafs) order *= l.order();

      // Element id = mixed-radix tuple, last factor fastest.
      std::vector<std::size_t> stride(k, 1);
      for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * leafs[i].order();
      auto decode = [&](std::size_t g, std::vector<std::size_t>& comp) {
        for (std::size_t i = 0; i < k; ++i) {
          comp[i] = g / stride[i];
          g %= stride[i];
        }
      };

      m.mult_.assign(order, std::vector<int>(order));
      m.class_of_.assign(order, 0);
      m.elem_names_.resize(order);
      std::vector<std::size_t> cg(k), ch(k);
      for (std::size_t g = 0; g < order; ++g) {
        decode(g, cg);
        std::string name;
        for (std::size_t i = 0; i < k; ++i) {
          if (i) name += ".";
          name += leafs[i].element_name(static_cast<int>(cg[i]));
        }
        m.elem_names_[g] = std::move(name);
        for (std::size_t h = 0; h < order; ++h) {
          decode(h, ch);
          std::size_t prod = 0;
          for (std::size_t i = 0; i < k; ++i)
            prod += static_cast<std::size_t>(leafs[i].mult(static_cast<int>(cg[i]),
                                                           static_cast<int>(ch[i]))) *
                    stride[i];
          m.mult_[g][h] = static_cast<int>(prod);
        }
      }
      std::size_t ident = 0;
      for (std::size_t i = 0; i < k; ++i)
        ident += static_cast<std::size_t>(leafs[i].identity()) * stride[i];
      m.identity_ = static_cast<int>(ident);

      m.reps_.resize(m.labels_.size());
      m.chars_.assign(m.labels_.size(), {});
      for (std::size_t p = 0; p < m.labels_.size(); ++p) {
        const auto& parts = m.labels_[p].parts;
        std::vector<std::size_t> pidx(k);
        for (std::size_t i = 0; i < k; ++i) pidx[i] = leafs[i].irrep_index(parts[i]);
        m.reps_[p].resize(order);
        m.chars_[p].resize(order);
        for (std::size_t g = 0; g < order; ++g) {
          decode(g, cg);
          Matrix acc = leafs[0].rep(pidx[0], static_cast<int>(cg[0]));
          Complex chi = leafs[0].character(pidx[0], static_cast<int>(cg[0]));
          for (std::size_t i = 1; i < k; ++i) {
            acc = detail::kronecker(acc, leafs[i].rep(pidx[i], static_cast<int>(cg[i])));
            chi *= leafs[i].character(pidx[i], static_cast<int>(cg[i]));
          }
          m.reps_[p][g] = std::move(acc);
          m.chars_[p][g] = chi;
        }
      }
      return m;
    }
    default:
      throw DomainError("matrix models exist only for finite groups");
  }
}

inline FourierCoefficients transform(const MatrixModel& model, const GroupFunction& f) {
  if (f.values.size() != model.order())
    throw DomainError("function length does not match the group order");
  FourierCoefficients out;
  const double inv_order = 1.0 / static_cast<double>(model.order());
  for (std::size_t p = 0; p < model.labels().size(); ++p) {
    long long d = model.dual()->dim(model.labels()[p]);
    Matrix acc = Matrix::Zero(d, d);
    for (std::size_t g = 0; g < model.order(); ++g)
      acc += f.values[g] * model.rep(p, static_cast<int>(g)).conjugate();
    out.mats.push_back(acc * inv_order);
  }
  return out;
}

inline GroupFunction inverse(const MatrixModel& model, const FourierCoefficients& coeffs) {
  if (coeffs.mats.size() != model.labels().size())
    throw DomainError("coefficient count does not match the dual");
  for (std::size_t p = 0; p < coeffs.mats.size(); ++p) {
    long long d = model.dual()->dim(model.labels()[p]);
    if (coeffs.mats[p].rows() != d || coeffs.mats[p].cols() != d)
      throw DomainError("coefficient block shape does not match the irrep dimension");
  }
  GroupFunction f;
  f.values.assign(model.order(), 0.0);
  for (std::size_t g = 0; g < model.order(); ++g) {
    Complex acc = 0.0;
    for (std::size_t p = 0; p < coeffs.mats.size(); ++p) {
      double d = static_cast<double>(model.dual()->dim(model.labels()[p]));
      // The entrywise-conjugate transform pairs with the transposed block
      // here; the Peter-Weyl reproducing kernel forces it.
      acc += d * coeffs.mats[p].cwiseProduct(model.rep(p, static_cast<int>(g))).sum();
    }
    f.values[g] = acc;
  }
  return f;
}

// || f ||_{A(G,w)} = sum_pi d_pi w(pi) || fhat(pi) ||_1.
inline double norm_A(const MatrixModel& model, const FourierCoefficients& coeffs,
                     const Weight& w) {
  double acc = 0.0;
  for (std::size_t p = 0; p < model.labels().size(); ++p) {
    const IrrepLabel& pi = model.labels()[p];
    acc += static_cast<double>(model.dual()->dim(pi)) * w.eval(pi) * trace_norm(coeffs.mats[p]);
  }
  return acc;
}

// || f ||_{A_Delta(G,Omega)} = sum_pi d_pi^{3/2} Omega(pi) || fhat(pi) ||_2.
inline double norm_ADelta(const MatrixModel& model, const FourierCoefficients& coeffs,
                          const Weight& omega_sym) {
  double acc = 0.0;
  for (std::size_t p = 0; p < model.labels().size(); ++p) {
    const IrrepLabel& pi = model.labels()[p];
    double d = static_cast<double>(model.dual()->dim(pi));
    acc += std::pow(d, 1.5) * omega_sym.eval(pi) * frobenius_norm(coeffs.mats[p]);
  }
  return acc;
}

// || f ||_{A_{gamma^n}} = sum_pi d_pi^{2^n + 1} || fhat(pi) ||_1, i.e. the
// A(G,w) norm with w(pi) = d_pi^{2^n}.
inline double norm_Agamma(const MatrixModel& model, const FourierCoefficients& coeffs, int n) {
  if (n < 0) throw DomainError("norm_Agamma needs n >= 0");
  return norm_A(model, coeffs, Weight::omega_a(model.dual(), std::pow(2.0, n)));
}

inline GroupFunction pointwise_mult(const GroupFunction& f, const GroupFunction& g) {
  if (f.values.size() != g.values.size())
    throw DomainError("pointwise product needs functions on the same group");
  GroupFunction out;
  out.values.resize(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.values[i] * g.values[i];
  return out;
}

// Product in the SU(2) character ring: bilinear extension of the
// Clebsch-Gordan series to finitely supported coefficient maps on t = 2l.
inline std::map<int, Complex> character_mult_su2(const std::map<int, Complex>& a,
                                                 const std::map<int, Complex>& b) {
  auto su2 = DualTable::su2();
  std::map<int, Complex> out;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b)
      for (const auto& [sigma, m] : su2->fuse(IrrepLabel::su2(ta), IrrepLabel::su2(tb)).entries)
        out[sigma.index] += ca * cb * static_cast<double>(m);
  return out;
}

}  // namespace bfa
