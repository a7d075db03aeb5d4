#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lindef/field.hpp"
#include "lindef/monomial.hpp"
#include "lindef/sparse_matrix.hpp"

namespace lindef {

/// Chain complex of multigraded free modules F_0 <- F_1 <- ... resolving
/// an ideal. Basis element b of F_i has shift shifts[i][b]; the entry of
/// d_i at (target r, source c) is scalar * x^(shifts[i][c] - shifts[i-1][r]),
/// so only the scalar is stored. d[i] has rows indexed by F_{i-1}.
template <class K>
class GradedFreeComplex {
 public:
  using V = typename K::value_type;

  GradedFreeComplex() = default;
  GradedFreeComplex(int nvars, K field) : nvars_(nvars), field_(std::move(field)) {}

  int nvars() const { return nvars_; }
  const K& field() const { return field_; }

  /// Number of modules F_0..F_{n-1}, trailing zero modules dropped.
  int length() const { return static_cast<int>(shifts_.size()); }
  std::size_t rank(int i) const {
    return i >= 0 && i < length() ? shifts_[static_cast<std::size_t>(i)].size() : 0;
  }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> out;
    for (int i = 0; i < length(); ++i) out.push_back(rank(i));
    return out;
  }

  const std::vector<Multidegree>& shifts(int i) const { return shifts_.at(static_cast<std::size_t>(i)); }
  const Multidegree& shift(int i, std::size_t b) const { return shifts(i).at(b); }

  /// d_i : F_i -> F_{i-1}, i >= 1.
  const SparseMatrix<V>& differential(int i) const { return diffs_.at(static_cast<std::size_t>(i)); }

  bool minimal() const { return minimal_; }
  void set_minimal(bool m) { minimal_ = m; }

  /// Appends F_i with its differential to F_{i-1} (ignored for i = 0).
  void push_module(std::vector<Multidegree> shifts, SparseMatrix<V> d) {
    if (!shifts_.empty() && d.nrows() != shifts_.back().size())
      throw InternalError("differential rows do not match previous module");
    if (!shifts_.empty() && d.ncols() != shifts.size())
      throw InternalError("differential columns do not match module rank");
    shifts_.push_back(std::move(shifts));
    diffs_.push_back(std::move(d));
  }

  void pop_empty_tail() {
    while (!shifts_.empty() && shifts_.back().empty()) {
      shifts_.pop_back();
      diffs_.pop_back();
    }
  }

  /// Entry monomial exponent for (target r in F_{i-1}, source c in F_i).
  Multidegree entry_monomial(int i, std::size_t r, std::size_t c) const {
    return quotient(shift(i, c), shift(i - 1, r));
  }

  /// Checks multihomogeneity and d_{i-1} d_i = 0. With `augmented`, d_1
  /// is also composed with F_0 -> I (each column's scalars sum to zero).
  bool is_complex(bool augmented = true) const {
    for (int i = 1; i < length(); ++i) {
      const auto& d = differential(i);
      bool homogeneous = true;
      d.for_each([&](std::size_t r, std::size_t c, const V&) {
        if (!divides(shift(i - 1, r), shift(i, c))) homogeneous = false;
      });
      if (!homogeneous) return false;
      if (i == 1) {
        if (!augmented) continue;
        std::vector<V> col_sum(d.ncols(), field_.zero());
        d.for_each([&](std::size_t, std::size_t c, const V& v) { col_sum[c] = field_.add(col_sum[c], v); });
        for (const auto& s : col_sum)
          if (!field_.is_zero(s)) return false;
      } else {
        auto cols = d.transpose();
        auto prev_cols = differential(i - 1).transpose();
        for (std::size_t c = 0; c < cols.nrows(); ++c) {
          std::map<std::size_t, V> image;
          for (const auto& [r, v] : cols.row(c))
            for (const auto& [q, w] : prev_cols.row(r)) {
              auto it = image.try_emplace(q, field_.zero()).first;
              it->second = field_.add(it->second, field_.mul(v, w));
            }
          for (const auto& [q, s] : image)
            if (!field_.is_zero(s)) return false;
        }
      }
    }
    return true;
  }

  /// True iff no entry has monomial 1.
  bool has_unit_entries() const {
    for (int i = 1; i < length(); ++i) {
      bool unit = false;
      differential(i).for_each([&](std::size_t r, std::size_t c, const V&) {
        if (shift(i - 1, r) == shift(i, c)) unit = true;
      });
      if (unit) return true;
    }
    return false;
  }

 private:
  int nvars_ = 0;
  K field_{};
  std::vector<std::vector<Multidegree>> shifts_;
  std::vector<SparseMatrix<V>> diffs_;
  bool minimal_ = false;
};

/// Graded and multigraded Betti numbers of an ideal.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(FieldSpec field) : field_(field) {}

  FieldSpec field() const { return field_; }

  void add(int i, const Multidegree& a, long long count) {
    if (count == 0) return;
    if (count < 0) throw InternalError("negative Betti number");
    multigraded_[{i, a}] += count;
    graded_[{i, total_degree(a)}] += count;
  }

  long long get(int i, int j) const {
    auto it = graded_.find({i, j});
    return it == graded_.end() ? 0 : it->second;
  }
  long long get(int i, const Multidegree& a) const {
    auto it = multigraded_.find({i, a});
    return it == multigraded_.end() ? 0 : it->second;
  }
  long long total(int i) const {
    long long s = 0;
    for (const auto& [key, b] : graded_)
      if (key.first == i) s += b;
    return s;
  }

  const std::map<std::pair<int, int>, long long>& graded() const { return graded_; }
  const std::map<std::pair<int, Multidegree>, long long>& multigraded() const { return multigraded_; }
  bool empty() const { return graded_.empty(); }

  /// Undefined (nullopt) for the zero ideal.
  std::optional<int> regularity() const {
    std::optional<int> r;
    for (const auto& [key, b] : graded_) r = std::max(r.value_or(key.second - key.first), key.second - key.first);
    return r;
  }
  std::optional<int> projective_dimension() const {
    std::optional<int> p;
    for (const auto& [key, b] : graded_) p = std::max(p.value_or(key.first), key.first);
    return p;
  }

  /// Tables agree as graded and multigraded maps; the field is not compared.
  bool same_numbers(const BettiTable& o) const {
    return graded_ == o.graded_ && multigraded_ == o.multigraded_;
  }
  bool same_graded(const BettiTable& o) const { return graded_ == o.graded_; }
  bool operator==(const BettiTable& o) const { return field_ == o.field_ && same_numbers(o); }

  /// Rows are homological degrees i, columns j - i; '.' marks zero.
  std::string to_text() const {
    std::ostringstream out;
    out << "field " << field_.name() << "\n";
    if (graded_.empty()) {
      out << "(zero ideal)\n";
      return out.str();
    }
    int lo = *regularity(), hi = lo;
    int top = *projective_dimension();
    for (const auto& [key, b] : graded_) {
      lo = std::min(lo, key.second - key.first);
      hi = std::max(hi, key.second - key.first);
    }
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top + 2));
    cells[0].push_back("i\\j-i");
    for (int c = lo; c <= hi; ++c) cells[0].push_back(std::to_string(c));
    for (int i = 0; i <= top; ++i) {
      auto& row = cells[static_cast<std::size_t>(i + 1)];
      row.push_back(std::to_string(i));
      for (int c = lo; c <= hi; ++c) {
        long long b = get(i, i + c);
        row.push_back(b ? std::to_string(b) : ".");
      }
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
      for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k == 0) {
          line += row[k] + std::string(width[k] - row[k].size(), ' ');
        } else {
          line += "  " + std::string(width[k] - row[k].size(), ' ') + row[k];
        }
      }
      out << line << "\n";
    }
    return out.str();
  }

  /// {"schema":1,"field":p,"entries":[[i,j,beta],...]} sorted by (i, j).
  nlohmann::json to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, b] : graded_) entries.push_back({key.first, key.second, b});
    return {{"schema", 1}, {"field", field_.characteristic()}, {"entries", entries}};
  }

  static BettiTable from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("entries") || !j.contains("field"))
      throw InputError("Betti JSON needs \"field\" and \"entries\"");
    BettiTable t(FieldSpec(j["field"].get<std::uint32_t>()));
    for (const auto& e : j["entries"]) {
      int i = e.at(0).get<int>(), deg = e.at(1).get<int>();
      t.graded_[{i, deg}] += e.at(2).get<long long>();
    }
    return t;
  }

 private:
  FieldSpec field_;
  std::map<std::pair<int, int>, long long> graded_;
  std::map<std::pair<int, Multidegree>, long long> multigraded_;
};

/// Betti numbers read off a minimal complex.
template <class K>
BettiTable betti_table(const GradedFreeComplex<K>& c) {
  if (!c.minimal()) throw PreconditionError("betti_table needs a minimal complex");
  BettiTable t(c.field().spec());
  for (int i = 0; i < c.length(); ++i)
    for (const auto& s : c.shifts(i)) t.add(i, s, 1);
  return t;
}

inline std::optional<int> regularity(const BettiTable& t) { return t.regularity(); }
inline std::optional<int> projective_dimension(const BettiTable& t) { return t.projective_dimension(); }

}  // namespace lindef
