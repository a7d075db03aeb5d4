#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

#include "lindef/errors.hpp"
#include "lindef/field.hpp"

namespace lindef {

/// Sparse matrix stored row-wise, each row sorted by column with no
/// explicit zeros.
template <class V>
class SparseMatrix {
 public:
  using value_type = V;
  using Entry = std::pair<std::size_t, V>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows) {}

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  const Row& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<Row>& rows() const { return rows_; }

  V get(std::size_t r, std::size_t c) const {
    check(r, c);
    const auto& row = rows_[r];
    auto it = lower(row, c);
    return (it != row.end() && it->first == c) ? it->second : V{};
  }

  void set(std::size_t r, std::size_t c, V value) {
    check(r, c);
    auto& row = rows_[r];
    auto it = lower(row, c);
    bool present = it != row.end() && it->first == c;
    if (value == V{}) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(value);
    } else {
      row.insert(it, Entry{c, std::move(value)});
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) fn(r, c, v);
  }

  SparseMatrix transpose() const {
    SparseMatrix t(ncols_, rows_.size());
    for_each([&](std::size_t r, std::size_t c, const V& v) { t.rows_[c].push_back(Entry{r, v}); });
    return t;
  }

  bool operator==(const SparseMatrix&) const = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_.size() || c >= ncols_) throw InputError("sparse matrix index out of range");
  }
  template <class R>
  static auto lower(R& row, std::size_t c) {
    return std::lower_bound(row.begin(), row.end(), c,
                            [](const auto& e, std::size_t col) { return e.first < col; });
  }

  std::size_t ncols_ = 0;
  std::vector<Row> rows_;
};

namespace detail {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

template <class Row>
std::size_t find_col(const Row& row, std::size_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? static_cast<std::size_t>(it - row.begin()) : npos;
}

// Markowitz pivot among active rows: minimizes (row_nnz-1)*(col_nnz-1),
// ties to lowest row, then lowest column. Returns (row, column).
template <class Row>
std::pair<std::size_t, std::size_t> markowitz_pivot(const std::vector<Row>& rows,
                                                    const std::vector<char>& active,
                                                    std::vector<std::size_t>& col_count) {
  std::fill(col_count.begin(), col_count.end(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (active[r])
      for (const auto& e : rows[r]) ++col_count[e.first];
  std::size_t best_cost = npos, best_r = npos, best_c = npos;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!active[r] || rows[r].empty()) continue;
    std::size_t rlen = rows[r].size() - 1;
    for (const auto& e : rows[r]) {
      std::size_t cost = rlen * (col_count[e.first] - 1);
      if (cost < best_cost) {
        best_cost = cost;
        best_r = r;
        best_c = e.first;
      }
    }
    if (best_cost == 0) break;
  }
  return {best_r, best_c};
}

// target <- target - factor * source, over the field k.
template <class K, class Row>
void subtract_multiple(Row& target, const typename K::value_type& factor, const Row& source,
                       const K& k) {
  Row out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, k.neg(k.mul(factor, source[j].second)));
      ++j;
    } else {
      auto v = k.sub(target[i].second, k.mul(factor, source[j].second));
      if (!k.is_zero(v)) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

// Gaussian elimination over a field with Markowitz pivoting. With
// `reduced`, pivot columns are also cleared from earlier pivot rows and
// pivots are normalized to 1 (reduced row echelon form).
template <class K>
struct Echelon {
  using Row = typename SparseMatrix<typename K::value_type>::Row;
  std::vector<Row> rows;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
};

template <class K>
Echelon<K> eliminate(const SparseMatrix<typename K::value_type>& m, const K& k, bool reduced) {
  Echelon<K> e;
  e.rows = m.rows();
  std::vector<char> active(e.rows.size(), 1);
  std::vector<std::size_t> col_count(m.ncols());
  for (;;) {
    auto [r, c] = markowitz_pivot(e.rows, active, col_count);
    if (r == npos) break;
    active[r] = 0;
    auto& prow = e.rows[r];
    auto inv = k.inv(prow[find_col(prow, c)].second);
    for (auto& entry : prow) entry.second = k.mul(entry.second, inv);
    for (std::size_t s = 0; s < e.rows.size(); ++s) {
      if (s == r || (!active[s] && !reduced)) continue;
      std::size_t pos = find_col(e.rows[s], c);
      if (pos == npos) continue;
      auto factor = e.rows[s][pos].second;
      subtract_multiple(e.rows[s], factor, prow, k);
    }
    e.pivots.emplace_back(r, c);
  }
  return e;
}

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

inline void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& e : row) {
    g = gcd(g, e.second);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free rank over QQ of an integer matrix: rows stay integral,
// each updated row is divided by its content.
inline std::size_t rank_fraction_free(std::vector<IntRow> rows, std::size_t ncols) {
  std::vector<char> active(rows.size(), 1);
  std::vector<std::size_t> col_count(ncols);
  std::size_t rank = 0;
  for (auto& r : rows) make_primitive(r);
  for (;;) {
    auto [r, c] = markowitz_pivot(rows, active, col_count);
    if (r == npos) break;
    active[r] = 0;
    ++rank;
    const IntRow& prow = rows[r];
    const mpz_class pivot = prow[find_col(prow, c)].second;
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (!active[s]) continue;
      std::size_t pos = find_col(rows[s], c);
      if (pos == npos) continue;
      mpz_class v = rows[s][pos].second;
      mpz_class g = gcd(pivot, v);
      mpz_class a = pivot / g, b = v / g;
      // rows[s] <- a*rows[s] - b*prow
      IntRow out;
      out.reserve(rows[s].size() + prow.size());
      const IntRow& t = rows[s];
      std::size_t i = 0, j = 0;
      while (i < t.size() || j < prow.size()) {
        if (j == prow.size() || (i < t.size() && t[i].first < prow[j].first)) {
          out.emplace_back(t[i].first, a * t[i].second);
          ++i;
        } else if (i == t.size() || prow[j].first < t[i].first) {
          out.emplace_back(prow[j].first, -b * prow[j].second);
          ++j;
        } else {
          mpz_class x = a * t[i].second - b * prow[j].second;
          if (x != 0) out.emplace_back(t[i].first, std::move(x));
          ++i;
          ++j;
        }
      }
      make_primitive(out);
      rows[s] = std::move(out);
    }
  }
  return rank;
}

}  // namespace detail

/// Exact rank over the field k. In characteristic 0 the elimination is
/// fraction-free on integer rows.
template <class K>
std::size_t rank(const SparseMatrix<typename K::value_type>& m, const K& k) {
  if constexpr (std::is_same_v<K, RationalField>) {
    std::vector<detail::IntRow> rows;
    rows.reserve(m.nrows());
    for (const auto& row : m.rows()) {
      mpz_class denom = 1;
      for (const auto& e : row) denom = lcm(denom, e.second.get_den());
      detail::IntRow irow;
      irow.reserve(row.size());
      for (const auto& e : row) {
        mpq_class scaled = e.second * denom;
        irow.emplace_back(e.first, scaled.get_num());
      }
      rows.push_back(std::move(irow));
    }
    (void)k;
    return detail::rank_fraction_free(std::move(rows), m.ncols());
  } else {
    return detail::eliminate(m, k, false).pivots.size();
  }
}

/// Rank of an integer matrix over the field described by spec.
inline std::size_t rank(const SparseMatrix<long long>& m, FieldSpec spec) {
  if (spec.is_rational()) {
    std::vector<detail::IntRow> rows;
    rows.reserve(m.nrows());
    for (const auto& row : m.rows()) {
      detail::IntRow irow;
      irow.reserve(row.size());
      for (const auto& e : row) irow.emplace_back(e.first, mpz_class(static_cast<long>(e.second)));
      rows.push_back(std::move(irow));
    }
    return detail::rank_fraction_free(std::move(rows), m.ncols());
  }
  PrimeField k(spec.characteristic());
  SparseMatrix<std::uint32_t> reduced(m.nrows(), m.ncols());
  m.for_each([&](std::size_t r, std::size_t c, long long v) { reduced.set(r, c, k.from_int(v)); });
  return rank(reduced, k);
}

/// Basis of the right kernel {v : m v = 0}, one vector per non-pivot
/// column (that coordinate is 1, other free coordinates 0).
template <class K>
std::vector<std::vector<typename K::value_type>> kernel_basis(
    const SparseMatrix<typename K::value_type>& m, const K& k) {
  auto e = detail::eliminate(m, k, true);
  std::vector<char> is_pivot(m.ncols(), 0);
  for (auto [r, c] : e.pivots) is_pivot[c] = 1;
  std::vector<std::vector<typename K::value_type>> basis;
  for (std::size_t f = 0; f < m.ncols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename K::value_type> v(m.ncols(), k.zero());
    v[f] = k.one();
    for (auto [r, c] : e.pivots) {
      std::size_t pos = detail::find_col(e.rows[r], f);
      if (pos != detail::npos) v[c] = k.neg(e.rows[r][pos].second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// m * v for a dense vector v.
template <class K>
std::vector<typename K::value_type> multiply(const SparseMatrix<typename K::value_type>& m,
                                             const std::vector<typename K::value_type>& v,
                                             const K& k) {
  if (v.size() != m.ncols()) throw InputError("dimension mismatch in matrix-vector product");
  std::vector<typename K::value_type> out(m.nrows(), k.zero());
  for (std::size_t r = 0; r < m.nrows(); ++r)
    for (const auto& [c, x] : m.row(r)) out[r] = k.add(out[r], k.mul(x, v[c]));
  return out;
}

/// Incrementally maintained row-echelon basis of a subspace of k^n, used
/// to test membership and extend spanning sets.
template <class K>
class SubspaceBasis {
 public:
  using V = typename K::value_type;

  SubspaceBasis(std::size_t dim, K k) : dim_(dim), k_(std::move(k)) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; returns true and stores it if v was
  /// independent.
  bool insert(std::vector<V> v) {
    reduce(v);
    std::size_t lead = leading(v);
    if (lead == detail::npos) return false;
    auto inv = k_.inv(v[lead]);
    for (auto& x : v) x = k_.mul(x, inv);
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
  }

  bool contains(std::vector<V> v) const {
    reduce(v);
    return leading(v) == detail::npos;
  }

 private:
  void reduce(std::vector<V>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[leads_[i]];
      if (k_.is_zero(c)) continue;
      auto factor = c;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!k_.is_zero(rows_[i][j])) v[j] = k_.sub(v[j], k_.mul(factor, rows_[i][j]));
    }
  }
  std::size_t leading(const std::vector<V>& v) const {
    for (std::size_t j = 0; j < dim_; ++j)
      if (!k_.is_zero(v[j])) return j;
    return detail::npos;
  }

  std::size_t dim_;
  K k_;
  std::vector<std::vector<V>> rows_;
  std::vector<std::size_t> leads_;
};

}  // namespace lindef
