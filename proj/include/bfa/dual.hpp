#pragma once
// Duals of compact groups as enumerable fusion rings.
//
// A DualTable knows the irreducible representations of one group (or a
// finite product of groups), their dimensions, conjugates, and how tensor
// products decompose.  Supported duals: finite groups given by a character
// table, the circle (dual = Z), SU(2) (dual = {pi_l}), and finite products.
// Everything is immutable after construction and safe to share across
// threads.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bfa {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed files, descriptors, or command lines.
class InputError : public Error {
public:
  using Error::Error;
};

// Arguments outside an operation's domain (label from the wrong dual, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

inline long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("fusion multiplicity overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("fusion multiplicity overflow in multiplication");
  return r;
}

// Label of one irreducible representation.  `index` is the character-table
// row for finite duals, the frequency n for the circle, and t = 2l (twice
// the spin) for SU(2), so dim = t + 1 stays integral.
struct IrrepLabel {
  enum class Kind : std::uint8_t { Finite, Torus, Su2, Product };

  Kind kind = Kind::Finite;
  int index = 0;
  std::vector<IrrepLabel> parts;

  static IrrepLabel finite(int i) { return {Kind::Finite, i, {}}; }
  static IrrepLabel torus(int n) { return {Kind::Torus, n, {}}; }
  static IrrepLabel su2(int twice_spin) {
    if (twice_spin < 0) throw DomainError("su2 label needs t = 2l >= 0");
    return {Kind::Su2, twice_spin, {}};
  }
  static IrrepLabel product(std::vector<IrrepLabel> components) {
    IrrepLabel out{Kind::Product, 0, std::move(components)};
    return out;
  }

  friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
    return a.kind == b.kind && a.index == b.index && a.parts == b.parts;
  }
  friend bool operator!=(const IrrepLabel& a, const IrrepLabel& b) { return !(a == b); }
  friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.index != b.index) return a.index < b.index;
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                        b.parts.begin(), b.parts.end());
  }
};

// Nonnegative-integer multiplicity vector over irrep labels; the result of
// decomposing a tensor product.  Finite support by construction.
struct FusionVector {
  std::map<IrrepLabel, long long> entries;

  void add(const IrrepLabel& label, long long mult) {
    if (mult == 0) return;
    auto it = entries.try_emplace(label, 0).first;
    it->second = checked_add(it->second, mult);
  }
  long long mult(const IrrepLabel& label) const {
    auto it = entries.find(label);
    return it == entries.end() ? 0 : it->second;
  }
  std::vector<IrrepLabel> support() const {
    std::vector<IrrepLabel> out;
    out.reserve(entries.size());
    for (const auto& [label, m] : entries) out.push_back(label);
    return out;
  }
  friend bool operator==(const FusionVector& a, const FusionVector& b) {
    return a.entries == b.entries;
  }
};

struct ConjClass {
  long long size = 1;
  std::string name;
};

struct IrrepRow {
  int dim = 1;
  std::vector<Complex> chars;  // one value per conjugacy class
  std::string name;
};

// Character table of a finite group.  Construction validates the standard
// consistency relations, so a live table can be trusted downstream.
class CharacterTable {
public:
  CharacterTable(long long order, std::vector<ConjClass> classes,
                 std::vector<IrrepRow> irreps, std::vector<int> conj_map)
      : order_(order), classes_(std::move(classes)), irreps_(std::move(irreps)),
        conj_map_(std::move(conj_map)) {
    validate();
  }

  long long order() const { return order_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t num_irreps() const { return irreps_.size(); }
  const ConjClass& cls(std::size_t c) const { return classes_[c]; }
  const IrrepRow& irrep(std::size_t i) const { return irreps_[i]; }
  int conj_index(std::size_t i) const { return conj_map_[i]; }
  int trivial_index() const { return trivial_; }

  // Multiplicity of irrep s in the tensor product of irreps a and b, by the
  // class-weighted character inner product.  Rejects when the rounded value
  // is not an integer to 1e-6, which signals a corrupt table.
  long long tensor_multiplicity(std::size_t a, std::size_t b, std::size_t s) const {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      acc += static_cast<double>(classes_[c].size) * irreps_[a].chars[c] *
             irreps_[b].chars[c] * std::conj(irreps_[s].chars[c]);
    }
    acc /= static_cast<double>(order_);
    double rounded = std::round(acc.real());
    if (std::abs(acc.real() - rounded) > 1e-6 || std::abs(acc.imag()) > 1e-6)
      throw Error("tensor multiplicity not integral; character table inconsistent");
    if (rounded < -0.5) throw Error("negative tensor multiplicity; character table inconsistent");
    return static_cast<long long>(rounded);
  }

  static CharacterTable cyclic(int n);
  static CharacterTable s3();

private:
  void validate() {
    if (order_ <= 0) throw InputError("group order must be positive");
    if (classes_.empty() || irreps_.empty())
      throw InputError("character table needs classes and irreps");
    long long class_sum = 0;
    for (const auto& c : classes_) {
      if (c.size <= 0) throw InputError("class sizes must be positive");
      class_sum += c.size;
    }
    if (class_sum != order_) throw InputError("class sizes do not sum to the group order");
    long long dim_sq = 0;
    for (const auto& r : irreps_) {
      if (r.dim <= 0) throw InputError("irrep dimensions must be positive");
      if (r.chars.size() != classes_.size())
        throw InputError("character row length does not match class count");
      dim_sq += static_cast<long long>(r.dim) * r.dim;
    }
    if (dim_sq != order_) throw InputError("sum of squared dimensions does not equal the group order");
    if (irreps_.size() != classes_.size())
      throw InputError("number of irreps must equal number of classes");

    // Row orthogonality.
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < classes_.size(); ++c)
          acc += static_cast<double>(classes_[c].size) * irreps_[i].chars[c] *
                 std::conj(irreps_[j].chars[c]);
        acc /= static_cast<double>(order_);
        Complex expect = (i == j) ? 1.0 : 0.0;
        if (std::abs(acc - expect) > 1e-9)
          throw InputError("character rows fail Schur orthogonality");
      }
    }

    // Conjugation must be an involution matching complex-conjugate rows.
    if (conj_map_.size() != irreps_.size())
      throw InputError("conjugation map length does not match irrep count");
    for (std::size_t i = 0; i < conj_map_.size(); ++i) {
      int j = conj_map_[i];
      if (j < 0 || static_cast<std::size_t>(j) >= irreps_.size())
        throw InputError("conjugation map index out of range");
      if (conj_map_[j] != static_cast<int>(i))
        throw InputError("conjugation map is not an involution");
      for (std::size_t c = 0; c < classes_.size(); ++c)
        if (std::abs(irreps_[j].chars[c] - std::conj(irreps_[i].chars[c])) > 1e-9)
          throw InputError("conjugate irrep characters do not match");
    }

    trivial_ = -1;
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
      bool all_one = irreps_[i].dim == 1;
      for (const auto& v : irreps_[i].chars)
        all_one = all_one && std::abs(v - Complex(1.0)) <= 1e-9;
      if (all_one) {
        trivial_ = static_cast<int>(i);
        break;
      }
    }
    if (trivial_ < 0) throw InputError("character table has no trivial irrep row");
    for (std::size_t i = 0; i < irreps_.size(); ++i)
      if (irreps_[i].name.empty()) irreps_[i].name = "irrep_" + std::to_string(i);
  }

  long long order_;
  std::vector<ConjClass> classes_;
  std::vector<IrrepRow> irreps_;
  std::vector<int> conj_map_;
  int trivial_ = 0;
};

inline CharacterTable CharacterTable::cyclic(int n) {
  if (n <= 0) throw InputError("cyclic group order must be positive");
  std::vector<ConjClass> classes;
  std::vector<IrrepRow> irreps;
  std::vector<int> conj(n);
  const double tau = 2.0 * M_PI / n;
  for (int c = 0; c < n; ++c) classes.push_back({1, "g^" + std::to_string(c)});
  for (int k = 0; k < n; ++k) {
    IrrepRow row;
    row.dim = 1;
    row.name = "chi_" + std::to_string(k);
    for (int c = 0; c < n; ++c)
      row.chars.push_back(std::polar(1.0, tau * k * c));
    irreps.push_back(std::move(row));
    conj[k] = (n - k) % n;
  }
  return CharacterTable(n, std::move(classes), std::move(irreps), std::move(conj));
}

inline CharacterTable CharacterTable::s3() {
  std::vector<ConjClass> classes = {{1, "e"}, {3, "transpositions"}, {2, "3-cycles"}};
  std::vector<IrrepRow> irreps = {
      {1, {1.0, 1.0, 1.0}, "triv"},
      {1, {1.0, -1.0, 1.0}, "sign"},
      {2, {2.0, 0.0, -1.0}, "std"},
  };
  return CharacterTable(6, std::move(classes), std::move(irreps), {0, 1, 2});
}

// One group dual.  Infinite duals carry a canonical enumeration (torus:
// 0, 1, -1, 2, -2, ...; SU(2): increasing t; products: increasing sum of
// component enumeration indices with lexicographic tie-break), which gives
// truncation scans a concrete cofinal order.
class DualTable {
public:
  enum class Kind { Finite, Torus, Su2, Product };

  static std::shared_ptr<const DualTable> finite(CharacterTable table, std::string name) {
    auto d = std::shared_ptr<DualTable>(new DualTable(Kind::Finite));
    d->table_ = std::make_shared<CharacterTable>(std::move(table));
    d->name_ = std::move(name);
    return d;
  }
  static std::shared_ptr<const DualTable> torus() {
    auto d = std::shared_ptr<DualTable>(new DualTable(Kind::Torus));
    d->name_ = "torus";
    return d;
  }
  static std::shared_ptr<const DualTable> su2() {
    auto d = std::shared_ptr<DualTable>(new DualTable(Kind::Su2));
    d->name_ = "su2";
    return d;
  }
  static std::shared_ptr<const DualTable> product(
      std::vector<std::shared_ptr<const DualTable>> factors) {
    if (factors.empty()) throw DomainError("product dual needs at least one factor");
    if (factors.size() == 1) return factors.front();
    auto d = std::shared_ptr<DualTable>(new DualTable(Kind::Product));
    std::string name;
    for (const auto& f : factors) {
      if (!f) throw DomainError("null factor in product dual");
      if (!name.empty()) name += " x ";
      name += f->name();
    }
    d->factors_ = std::move(factors);
    d->name_ = std::move(name);
    return d;
  }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const CharacterTable& table() const {
    if (kind_ != Kind::Finite) throw DomainError("dual is not backed by a character table");
    return *table_;
  }
  const std::vector<std::shared_ptr<const DualTable>>& factors() const { return factors_; }

  bool contains(const IrrepLabel& label) const {
    switch (kind_) {
      case Kind::Finite:
        return label.kind == IrrepLabel::Kind::Finite && label.index >= 0 &&
               static_cast<std::size_t>(label.index) < table_->num_irreps();
      case Kind::Torus:
        return label.kind == IrrepLabel::Kind::Torus;
      case Kind::Su2:
        return label.kind == IrrepLabel::Kind::Su2 && label.index >= 0;
      case Kind::Product: {
        if (label.kind != IrrepLabel::Kind::Product ||
            label.parts.size() != factors_.size())
          return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
          if (!factors_[i]->contains(label.parts[i])) return false;
        return true;
      }
    }
    return false;
  }

  void require(const IrrepLabel& label) const {
    if (!contains(label))
      throw DomainError("irrep label does not belong to the dual of " + name_);
  }

  long long dim(const IrrepLabel& label) const {
    require(label);
    switch (kind_) {
      case Kind::Finite: return table_->irrep(label.index).dim;
      case Kind::Torus: return 1;
      case Kind::Su2: return label.index + 1;
      case Kind::Product: {
        long long d = 1;
        for (std::size_t i = 0; i < factors_.size(); ++i)
          d = checked_mul(d, factors_[i]->dim(label.parts[i]));
        return d;
      }
    }
    return 1;
  }

  // Size parameter used by the closed-form weight families: the dimension,
  // except on the circle dual where the natural scale is 1 + |n| (the value
  // the SU(2) families restrict to).
  double size_param(const IrrepLabel& label) const {
    if (kind_ == Kind::Torus) return 1.0 + std::abs(label.index);
    return static_cast<double>(dim(label));
  }

  IrrepLabel trivial() const {
    switch (kind_) {
      case Kind::Finite: return IrrepLabel::finite(table_->trivial_index());
      case Kind::Torus: return IrrepLabel::torus(0);
      case Kind::Su2: return IrrepLabel::su2(0);
      case Kind::Product: {
        std::vector<IrrepLabel> parts;
        parts.reserve(factors_.size());
        for (const auto& f : factors_) parts.push_back(f->trivial());
        return IrrepLabel::product(std::move(parts));
      }
    }
    return IrrepLabel::finite(0);
  }

  IrrepLabel conj(const IrrepLabel& label) const {
    require(label);
    switch (kind_) {
      case Kind::Finite: return IrrepLabel::finite(table_->conj_index(label.index));
      case Kind::Torus: return IrrepLabel::torus(-label.index);
      case Kind::Su2: return label;
      case Kind::Product: {
        std::vector<IrrepLabel> parts;
        parts.reserve(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
          parts.push_back(factors_[i]->conj(label.parts[i]));
        return IrrepLabel::product(std::move(parts));
      }
    }
    return label;
  }

  // Decomposition of the tensor product of two irreps.
  FusionVector fuse(const IrrepLabel& a, const IrrepLabel& b) const {
    require(a);
    require(b);
    FusionVector out;
    switch (kind_) {
      case Kind::Finite: {
        for (std::size_t s = 0; s < table_->num_irreps(); ++s) {
          long long m = table_->tensor_multiplicity(a.index, b.index, s);
          if (m > 0) out.add(IrrepLabel::finite(static_cast<int>(s)), m);
        }
        break;
      }
      case Kind::Torus:
        out.add(IrrepLabel::torus(a.index + b.index), 1);
        break;
      case Kind::Su2: {
        // Clebsch-Gordan series: t runs from |ta - tb| to ta + tb in steps of 2.
        for (int t = std::abs(a.index - b.index); t <= a.index + b.index; t += 2)
          out.add(IrrepLabel::su2(t), 1);
        break;
      }
      case Kind::Product: {
        std::vector<FusionVector> comp(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
          comp[i] = factors_[i]->fuse(a.parts[i], b.parts[i]);
        std::vector<IrrepLabel> current(factors_.size());
        cartesian(comp, 0, 1, current, out);
        break;
      }
    }
    return out;
  }

  FusionVector fuse_vector(const FusionVector& v, const IrrepLabel& b) const {
    FusionVector out;
    for (const auto& [label, m] : v.entries)
      for (const auto& [sigma, mu] : fuse(label, b).entries)
        out.add(sigma, checked_mul(m, mu));
    return out;
  }

  FusionVector fusion_power(const IrrepLabel& a, int n) const {
    if (n < 1) throw DomainError("fusion power needs n >= 1");
    require(a);
    FusionVector acc;
    acc.add(a, 1);
    for (int k = 1; k < n; ++k) acc = fuse_vector(acc, a);
    return acc;
  }

  long long total_dim(const FusionVector& v) const {
    long long acc = 0;
    for (const auto& [label, m] : v.entries)
      acc = checked_add(acc, checked_mul(m, dim(label)));
    return acc;
  }

  std::optional<std::size_t> size() const {
    switch (kind_) {
      case Kind::Finite: return table_->num_irreps();
      case Kind::Torus:
      case Kind::Su2: return std::nullopt;
      case Kind::Product: {
        std::size_t total = 1;
        for (const auto& f : factors_) {
          auto s = f->size();
          if (!s) return std::nullopt;
          total *= *s;
        }
        return total;
      }
    }
    return std::nullopt;
  }

  // First `count` labels in enumeration order; shorter if the dual is finite
  // and smaller than requested.
  std::vector<IrrepLabel> enumerate_first(std::size_t count) const {
    std::vector<IrrepLabel> out;
    if (count == 0) return out;
    switch (kind_) {
      case Kind::Finite: {
        std::size_t n = std::min<std::size_t>(count, table_->num_irreps());
        for (std::size_t i = 0; i < n; ++i) out.push_back(IrrepLabel::finite(static_cast<int>(i)));
        break;
      }
      case Kind::Torus: {
        for (std::size_t k = 0; k < count; ++k) {
          int n = static_cast<int>((k + 1) / 2);
          out.push_back(IrrepLabel::torus(k % 2 == 1 ? n : -n));
        }
        break;
      }
      case Kind::Su2: {
        for (std::size_t k = 0; k < count; ++k) out.push_back(IrrepLabel::su2(static_cast<int>(k)));
        break;
      }
      case Kind::Product: {
        auto total = size();
        std::size_t want = total ? std::min(count, *total) : count;
        std::vector<std::optional<std::size_t>> caps;
        caps.reserve(factors_.size());
        for (const auto& f : factors_) caps.push_back(f->size());
        std::vector<std::size_t> idx(factors_.size(), 0);
        // want <= total for all-finite products, so the height walk terminates.
        for (std::size_t h = 0; out.size() < want; ++h)
          emit_height(h, 0, idx, caps, out, want);
        break;
      }
    }
    return out;
  }

  IrrepLabel enumerate(std::size_t k) const {
    auto v = enumerate_first(k + 1);
    if (v.size() <= k) throw DomainError("enumeration index past the end of a finite dual");
    return v[k];
  }

  std::string label_name(const IrrepLabel& label) const {
    require(label);
    switch (kind_) {
      case Kind::Finite: return table_->irrep(label.index).name;
      case Kind::Torus: return "chi_" + std::to_string(label.index);
      case Kind::Su2: {
        int t = label.index;
        if (t % 2 == 0) return "pi_" + std::to_string(t / 2);
        return "pi_" + std::to_string(t) + "/2";
      }
      case Kind::Product: {
        std::string s = "(";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          if (i) s += ",";
          s += factors_[i]->label_name(label.parts[i]);
        }
        return s + ")";
      }
    }
    return {};
  }

  // Inverse of label_name, also accepting bare indices for finite duals and
  // spins like "3/2" or "1.5" for SU(2).
  IrrepLabel parse_label(const std::string& text) const;

private:
  explicit DualTable(Kind k) : kind_(k) {}

  void cartesian(const std::vector<FusionVector>& comp, std::size_t i, long long mult,
                 std::vector<IrrepLabel>& current, FusionVector& out) const {
    if (i == comp.size()) {
      out.add(IrrepLabel::product(current), mult);
      return;
    }
    for (const auto& [label, m] : comp[i].entries) {
      current[i] = label;
      cartesian(comp, i + 1, checked_mul(mult, m), current, out);
    }
  }

  // Appends all index tuples of total height h, in lexicographic order.
  void emit_height(std::size_t h, std::size_t pos, std::vector<std::size_t>& idx,
                   const std::vector<std::optional<std::size_t>>& caps,
                   std::vector<IrrepLabel>& out, std::size_t want) const {
    if (out.size() >= want) return;
    if (pos == factors_.size()) {
      if (h != 0) return;
      std::vector<IrrepLabel> parts;
      parts.reserve(factors_.size());
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->enumerate(idx[i]));
      out.push_back(IrrepLabel::product(std::move(parts)));
      return;
    }
    std::size_t cap = caps[pos] ? *caps[pos] - 1 : h;
    for (std::size_t v = 0; v <= std::min(h, cap); ++v) {
      idx[pos] = v;
      emit_height(h - v, pos + 1, idx, caps, out, want);
      if (out.size() >= want) return;
    }
  }

  Kind kind_;
  std::string name_;
  std::shared_ptr<const CharacterTable> table_;
  std::vector<std::shared_ptr<const DualTable>> factors_;
};

using DualPtr = std::shared_ptr<const DualTable>;

inline IrrepLabel DualTable::parse_label(const std::string& text) const {
  auto fail = [&]() -> IrrepLabel {
    throw InputError("cannot parse irrep label '" + text + "' for " + name_);
  };
  switch (kind_) {
    case Kind::Finite: {
      for (std::size_t i = 0; i < table_->num_irreps(); ++i)
        if (table_->irrep(i).name == text) return IrrepLabel::finite(static_cast<int>(i));
      try {
        std::size_t pos = 0;
        int idx = std::stoi(text, &pos);
        if (pos == text.size() && idx >= 0 &&
            static_cast<std::size_t>(idx) < table_->num_irreps())
          return IrrepLabel::finite(idx);
      } catch (const std::exception&) {
      }
      return fail();
    }
    case Kind::Torus: {
      std::string body = text.rfind("chi_", 0) == 0 ? text.substr(4) : text;
      try {
        std::size_t pos = 0;
        int n = std::stoi(body, &pos);
        if (pos == body.size()) return IrrepLabel::torus(n);
      } catch (const std::exception&) {
      }
      return fail();
    }
    case Kind::Su2: {
      std::string body = text.rfind("pi_", 0) == 0 ? text.substr(3) : text;
      try {
        double l = 0.0;
        if (auto slash = body.find('/'); slash != std::string::npos) {
          l = std::stod(body.substr(0, slash)) / std::stod(body.substr(slash + 1));
        } else {
          l = std::stod(body);
        }
        double t = 2.0 * l;
        if (t >= 0 && std::abs(t - std::round(t)) < 1e-9)
          return IrrepLabel::su2(static_cast<int>(std::round(t)));
      } catch (const std::exception&) {
      }
      return fail();
    }
    case Kind::Product: {
      std::string body = text;
      if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
      std::vector<std::string> pieces;
      int depth = 0;
      std::string cur;
      for (char ch : body) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
          pieces.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      pieces.push_back(cur);
      if (pieces.size() != factors_.size()) return fail();
      std::vector<IrrepLabel> parts;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->parse_label(pieces[i]));
      return IrrepLabel::product(std::move(parts));
    }
  }
  return fail();
}

// Built-in duals addressable by name: "s3", "zN", "torus", "su2", and
// products joined with 'x' (e.g. "s3xz2").
inline DualPtr make_dual(const std::string& spec) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : spec) {
    if (ch == 'x') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  tokens.push_back(cur);
  std::vector<DualPtr> factors;
  for (const auto& t : tokens) {
    if (t == "su2") {
      factors.push_back(DualTable::su2());
    } else if (t == "torus") {
      factors.push_back(DualTable::torus());
    } else if (t == "s3") {
      factors.push_back(DualTable::finite(CharacterTable::s3(), "s3"));
    } else if (t.size() > 1 && t[0] == 'z' &&
               t.find_first_not_of("0123456789", 1) == std::string::npos) {
      factors.push_back(DualTable::finite(CharacterTable::cyclic(std::stoi(t.substr(1))), t));
    } else {
      throw InputError("unknown group spec '" + spec + "'");
    }
  }
  if (factors.empty()) throw InputError("empty group spec");
  return DualTable::product(std::move(factors));
}

}  // namespace bfa
