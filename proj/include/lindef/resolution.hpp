#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "lindef/complex.hpp"
#include "lindef/graph.hpp"
#include "lindef/monomial.hpp"
#include "lindef/sparse_matrix.hpp"

namespace lindef {

inline constexpr std::size_t default_taylor_cap = 20;
inline constexpr std::size_t default_lattice_cap = 4096;

/// Taylor resolution: basis of F_i = (i+1)-subsets of the generators with
/// lcm shifts, d(S) = sum_t (-1)^t e_{S minus s_t} with t the position in S.
template <class K>
GradedFreeComplex<K> taylor_complex(const MonomialIdeal& ideal, const K& k,
                                    std::size_t cap = default_taylor_cap) {
  const std::size_t m = ideal.size();
  if (m == 0) throw InputError("the Taylor complex needs at least one generator");
  if (m > cap || m > 30)
    throw ResourceError("Taylor complex on " + std::to_string(m) + " generators exceeds the cap of " +
                        std::to_string(cap) + " (2^m subsets); raise --taylor-cap or use --long-running");
  const auto& gens = ideal.gens();
  const std::uint32_t full = (std::uint32_t{1} << m);
  std::vector<Multidegree> lcm_of(full);
  lcm_of[0] = Multidegree(static_cast<std::size_t>(ideal.nvars()), 0);
  std::vector<std::vector<std::uint32_t>> by_size(m + 1);
  std::vector<std::uint32_t> index_of(full, 0);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    lcm_of[mask] = lcm(lcm_of[mask & (mask - 1)], gens[static_cast<std::size_t>(std::countr_zero(mask))]);
    auto& bucket = by_size[static_cast<std::size_t>(std::popcount(mask))];
    index_of[mask] = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(mask);
  }
  GradedFreeComplex<K> c(ideal.nvars(), k);
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<Multidegree> shifts;
    shifts.reserve(by_size[size].size());
    for (auto mask : by_size[size]) shifts.push_back(lcm_of[mask]);
    SparseMatrix<typename K::value_type> d(size == 1 ? 0 : by_size[size - 1].size(), by_size[size].size());
    if (size > 1) {
      for (std::size_t col = 0; col < by_size[size].size(); ++col) {
        std::uint32_t mask = by_size[size][col];
        int t = 0;
        for_each_vertex(mask, [&](int s) {
          std::uint32_t face = mask & ~(std::uint32_t{1} << s);
          d.set(index_of[face], col, (t % 2 == 0) ? k.one() : k.neg(k.one()));
          ++t;
        });
      }
    }
    c.push_module(std::move(shifts), std::move(d));
  }
  return c;
}

enum class CancellationOrder {
  LowestFirst,   // lowest homological degree, then smallest (row, col)
  HighestFirst,  // highest homological degree, then largest (row, col)
};

/// Repeatedly cancels unit entries (equal source and target shifts) by a
/// change of basis, removing one basis element from each of two adjacent
/// modules. The input must be a resolution; the result is minimal.
template <class K>
GradedFreeComplex<K> minimalize_complex(const GradedFreeComplex<K>& c,
                                        CancellationOrder order = CancellationOrder::LowestFirst) {
  using V = typename K::value_type;
  const K& k = c.field();
  const int n = c.length();
  struct Level {
    std::vector<std::map<std::size_t, V>> cols;  // source -> target -> scalar
    std::vector<std::set<std::size_t>> rows;     // target -> sources
    std::set<std::pair<std::size_t, std::size_t>> units;  // (target, source)
  };
  std::vector<Level> lv(static_cast<std::size_t>(std::max(n, 1)));
  std::vector<std::vector<int>> deg(static_cast<std::size_t>(n));
  std::vector<std::vector<char>> alive(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (const auto& s : c.shifts(i)) deg[static_cast<std::size_t>(i)].push_back(total_degree(s));
    alive[static_cast<std::size_t>(i)].assign(c.rank(i), 1);
  }
  auto is_unit = [&](int i, std::size_t r, std::size_t s) {
    return deg[static_cast<std::size_t>(i - 1)][r] == deg[static_cast<std::size_t>(i)][s];
  };
  for (int i = 1; i < n; ++i) {
    auto& L = lv[static_cast<std::size_t>(i)];
    L.cols.resize(c.rank(i));
    L.rows.resize(c.rank(i - 1));
    c.differential(i).for_each([&](std::size_t r, std::size_t s, const V& v) {
      L.cols[s].emplace(r, v);
      L.rows[r].insert(s);
      if (is_unit(i, r, s)) L.units.emplace(r, s);
    });
  }

  for (;;) {
    int i = -1;
    if (order == CancellationOrder::LowestFirst) {
      for (int j = 1; j < n && i < 0; ++j)
        if (!lv[static_cast<std::size_t>(j)].units.empty()) i = j;
    } else {
      for (int j = n - 1; j >= 1 && i < 0; --j)
        if (!lv[static_cast<std::size_t>(j)].units.empty()) i = j;
    }
    if (i < 0) break;
    auto& L = lv[static_cast<std::size_t>(i)];
    auto [r, s] = order == CancellationOrder::LowestFirst ? *L.units.begin() : *L.units.rbegin();
    const V inv_u = k.inv(L.cols[s].at(r));
    std::vector<std::size_t> others;
    for (auto a : L.rows[r])
      if (a != s) others.push_back(a);
    for (auto a : others) {
      auto& col = L.cols[a];
      const V t = k.mul(col.at(r), inv_u);
      for (const auto& [f, val] : L.cols[s]) {
        auto it = col.find(f);
        V updated = k.sub(it == col.end() ? k.zero() : it->second, k.mul(t, val));
        if (k.is_zero(updated)) {
          if (it != col.end()) col.erase(it);
          L.rows[f].erase(a);
          L.units.erase({f, a});
        } else {
          if (!divides(c.shift(i - 1, f), c.shift(i, a)))
            throw InternalError("cancellation produced a non-homogeneous entry");
          col[f] = updated;
          L.rows[f].insert(a);
          if (is_unit(i, f, a)) L.units.emplace(f, a);
        }
      }
    }
    for (const auto& [f, val] : L.cols[s]) {
      L.rows[f].erase(s);
      L.units.erase({f, s});
    }
    L.cols[s].clear();
    if (!L.rows[r].empty()) throw InternalError("cancellation left entries in the pivot row");
    alive[static_cast<std::size_t>(i)][s] = 0;
    alive[static_cast<std::size_t>(i - 1)][r] = 0;
    if (i - 1 >= 1) {
      auto& P = lv[static_cast<std::size_t>(i - 1)];
      for (const auto& [g, val] : P.cols[r]) {
        P.rows[g].erase(r);
        P.units.erase({g, r});
      }
      P.cols[r].clear();
    }
    if (i + 1 < n) {
      auto& N = lv[static_cast<std::size_t>(i + 1)];
      for (auto src : N.rows[s]) {
        N.cols[src].erase(s);
        N.units.erase({s, src});
      }
      N.rows[s].clear();
    }
  }

  GradedFreeComplex<K> out(c.nvars(), k);
  std::vector<std::size_t> prev_index;
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> index(c.rank(i), detail::npos);
    std::vector<Multidegree> shifts;
    for (std::size_t b = 0; b < c.rank(i); ++b)
      if (alive[static_cast<std::size_t>(i)][b]) {
        index[b] = shifts.size();
        shifts.push_back(c.shift(i, b));
      }
    SparseMatrix<V> d(i == 0 ? 0 : out.rank(i - 1), shifts.size());
    if (i >= 1) {
      const auto& L = lv[static_cast<std::size_t>(i)];
      for (std::size_t s = 0; s < c.rank(i); ++s) {
        if (!alive[static_cast<std::size_t>(i)][s]) continue;
        for (const auto& [f, v] : L.cols[s]) {
          if (prev_index[f] == detail::npos) throw InternalError("entry points at a cancelled basis element");
          d.set(prev_index[f], index[s], v);
        }
      }
    }
    out.push_module(std::move(shifts), std::move(d));
    prev_index = std::move(index);
  }
  out.pop_empty_tail();
  if (out.has_unit_entries()) throw InternalError("minimalization left a unit entry");
  out.set_minimal(true);
  return out;
}

/// All lcms of nonempty sets of generators, ordered by total degree and
/// then lexicographically.
inline std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal,
                                            std::size_t cap = default_lattice_cap) {
  std::set<Multidegree> seen(ideal.gens().begin(), ideal.gens().end());
  std::vector<Multidegree> frontier(ideal.gens().begin(), ideal.gens().end());
  while (!frontier.empty()) {
    std::vector<Multidegree> next;
    for (const auto& l : frontier)
      for (const auto& g : ideal.gens()) {
        auto m = lcm(l, g);
        if (seen.insert(m).second) {
          if (seen.size() > cap)
            throw ResourceError("lcm lattice has more than " + std::to_string(cap) +
                                " elements; raise the lattice cap or use --long-running");
          next.push_back(std::move(m));
        }
      }
    frontier = std::move(next);
  }
  std::vector<Multidegree> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return total_degree(a) < total_degree(b); });
  return out;
}

namespace detail {

// Basis elements whose shift divides a; support masks prefilter.
struct ShiftIndex {
  std::vector<Multidegree> shifts;
  std::vector<VertexSet> masks;

  explicit ShiftIndex(std::vector<Multidegree> s) : shifts(std::move(s)) {
    for (const auto& m : shifts) masks.push_back(support(m));
  }
  std::vector<std::size_t> dividing(const Multidegree& a) const {
    VertexSet am = support(a);
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < shifts.size(); ++b)
      if (!(masks[b] & ~am) && divides(shifts[b], a)) out.push_back(b);
    return out;
  }
};

}  // namespace detail

/// Minimal multigraded free resolution built one lcm-lattice degree at a
/// time. In degree a the kernel of d_i is computed as a scalar kernel; the
/// part coming from lower lattice degrees is the span of the kernels at the
/// projections of a - e_v, and new generators of F_{i+1} extend it.
template <class K>
GradedFreeComplex<K> minimal_resolution(const MonomialIdeal& ideal, const K& k,
                                        std::size_t lattice_cap = default_lattice_cap) {
  using V = typename K::value_type;
  using SparseVec = std::vector<std::pair<std::size_t, V>>;
  GradedFreeComplex<K> out(ideal.nvars(), k);
  out.set_minimal(true);
  if (ideal.is_zero()) return out;

  const auto lattice = lcm_lattice(ideal, lattice_cap);
  std::map<Multidegree, std::size_t> lattice_pos;
  for (std::size_t p = 0; p < lattice.size(); ++p) lattice_pos.emplace(lattice[p], p);
  const auto& gens = ideal.gens();
  // Lattice element generated by the generators dividing d, if any.
  auto project = [&](const Multidegree& d) -> std::optional<std::size_t> {
    Multidegree l(d.size(), 0);
    bool any = false;
    for (const auto& g : gens)
      if (divides(g, d)) {
        l = lcm(l, g);
        any = true;
      }
    if (!any) return std::nullopt;
    return lattice_pos.at(l);
  };

  // Current module F_i: shifts and columns of d_i (targets in F_{i-1}).
  // For i = 0 the target is R itself, one element of shift 0.
  std::vector<Multidegree> shifts(gens.begin(), gens.end());
  std::vector<SparseVec> columns(gens.size(), SparseVec{{0, k.one()}});
  out.push_module(shifts, SparseMatrix<V>(0, shifts.size()));

  for (;;) {
    detail::ShiftIndex index(shifts);
    std::vector<std::vector<SparseVec>> kernel_at(lattice.size());
    std::vector<Multidegree> new_shifts;
    std::vector<SparseVec> new_columns;
    std::vector<std::size_t> local(shifts.size(), detail::npos);

    for (std::size_t p = 0; p < lattice.size(); ++p) {
      const auto& a = lattice[p];
      auto basis = index.dividing(a);
      if (basis.empty()) continue;
      std::map<std::size_t, std::size_t> row_of;
      for (auto b : basis)
        for (const auto& [t, v] : columns[b]) row_of.emplace(t, 0);
      std::size_t nr = 0;
      for (auto& [t, r] : row_of) r = nr++;
      SparseMatrix<V> m(nr, basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [t, v] : columns[basis[j]]) m.set(row_of[t], j, v);
      auto kernel = kernel_basis(m, k);
      if (kernel.empty()) continue;

      for (std::size_t j = 0; j < basis.size(); ++j) local[basis[j]] = j;
      SubspaceBasis<K> span(basis.size(), k);
      for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] == 0) continue;
        Multidegree below = a;
        --below[v];
        auto q = project(below);
        if (!q) continue;
        for (const auto& vec : kernel_at[*q]) {
          std::vector<V> dense(basis.size(), k.zero());
          for (const auto& [b, x] : vec) {
            if (local[b] == detail::npos) throw InternalError("lower kernel outside the degree");
            dense[local[b]] = x;
          }
          span.insert(std::move(dense));
        }
      }
      std::size_t lower_rank = span.rank();
      if (lower_rank > kernel.size()) throw InternalError("lower-degree image exceeds the kernel");
      for (const auto& vec : kernel) {
        if (!span.insert(vec)) continue;
        SparseVec col;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (!k.is_zero(vec[j])) {
            if (shifts[basis[j]] == a) throw InternalError("new syzygy has a unit entry");
            col.emplace_back(basis[j], vec[j]);
          }
        new_shifts.push_back(a);
        new_columns.push_back(std::move(col));
      }
      if (span.rank() != kernel.size()) throw InternalError("kernel dimension mismatch in lattice degree");
      auto& store = kernel_at[p];
      for (const auto& vec : kernel) {
        SparseVec sv;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (!k.is_zero(vec[j])) sv.emplace_back(basis[j], vec[j]);
        store.push_back(std::move(sv));
      }
      for (auto b : basis) local[b] = detail::npos;
    }

    if (new_shifts.empty()) break;
    SparseMatrix<V> d(shifts.size(), new_shifts.size());
    for (std::size_t j = 0; j < new_columns.size(); ++j)
      for (const auto& [b, x] : new_columns[j]) d.set(b, j, x);
    out.push_module(new_shifts, std::move(d));
    shifts = std::move(new_shifts);
    columns = std::move(new_columns);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hochster's formula

namespace detail {

// Reduced homology dimensions of the simplicial complex on `sigma` whose
// faces contain no generator mask. Result index k + 1 holds dim H~_k.
inline std::vector<long long> reduced_homology(VertexSet sigma, const std::vector<VertexSet>& gens,
                                               FieldSpec f) {
  auto is_face = [&](VertexSet s) {
    for (auto g : gens)
      if ((g & s) == g) return false;
    return true;
  };
  std::vector<int> verts = to_vertex_list(sigma);
  // faces[k + 1] = faces of dimension k, sorted
  std::vector<std::vector<VertexSet>> faces(1, std::vector<VertexSet>{0});
  // depth-first growth in increasing vertex order
  std::function<void(VertexSet, std::size_t)> grow = [&](VertexSet face, std::size_t from) {
    for (std::size_t t = from; t < verts.size(); ++t) {
      VertexSet bigger = face | vertex_bit(verts[t]);
      if (!is_face(bigger)) continue;
      std::size_t dim = static_cast<std::size_t>(vertex_count(bigger));
      if (faces.size() <= dim) faces.resize(dim + 1);
      faces[dim].push_back(bigger);
      grow(bigger, t + 1);
    }
  };
  grow(0, 0);
  for (auto& level : faces) std::sort(level.begin(), level.end());

  // ranks[k + 1] = rank of boundary C_k -> C_{k-1}; C_{-1} has no boundary
  std::vector<long long> ranks(faces.size() + 1, 0);
  for (std::size_t dim = 1; dim < faces.size(); ++dim) {
    const auto& src = faces[dim];
    const auto& tgt = faces[dim - 1];
    SparseMatrix<long long> m(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      int t = 0;
      for_each_vertex(src[col], [&](int v) {
        VertexSet face = src[col] & ~vertex_bit(v);
        auto row = static_cast<std::size_t>(std::lower_bound(tgt.begin(), tgt.end(), face) - tgt.begin());
        m.set(row, col, t % 2 == 0 ? 1 : -1);
        ++t;
      });
    }
    ranks[dim] = static_cast<long long>(rank(m, f));
  }
  std::vector<long long> homology(faces.size(), 0);
  for (std::size_t dim = 0; dim < faces.size(); ++dim)
    homology[dim] = static_cast<long long>(faces[dim].size()) - ranks[dim] - ranks[dim + 1];
  return homology;
}

}  // namespace detail

/// Multigraded Betti numbers of a squarefree monomial ideal from reduced
/// homology of restrictions of its Stanley-Reisner complex:
/// beta_{i,sigma} = dim H~_{|sigma|-i-2}(Delta_sigma). Only sigma that
/// are unions of generator supports can contribute.
inline BettiTable hochster_betti(const MonomialIdeal& ideal, FieldSpec f) {
  if (!ideal.is_squarefree()) throw PreconditionError("Hochster's formula needs a squarefree ideal");
  if (ideal.nvars() > 64) throw InputError("Hochster path supports at most 64 variables");
  BettiTable t(f);
  if (ideal.is_zero()) return t;
  if (ideal.is_unit()) {
    t.add(0, Multidegree(static_cast<std::size_t>(ideal.nvars()), 0), 1);
    return t;
  }
  std::vector<VertexSet> gens;
  for (const auto& g : ideal.gens()) gens.push_back(support(g));
  std::set<VertexSet> unions(gens.begin(), gens.end());
  std::vector<VertexSet> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (auto u : frontier)
      for (auto g : gens)
        if (unions.insert(u | g).second) next.push_back(u | g);
    frontier = std::move(next);
  }
  for (VertexSet sigma : unions) {
    auto h = detail::reduced_homology(sigma, gens, f);
    int size = vertex_count(sigma);
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      int kdim = static_cast<int>(idx) - 1;
      int i = size - kdim - 2;
      if (i >= 0 && h[idx] > 0) t.add(i, squarefree_monomial(ideal.nvars(), sigma), h[idx]);
    }
  }
  return t;
}

inline BettiTable hochster_betti(const Graph& g, FieldSpec f) { return hochster_betti(edge_ideal(g), f); }

enum class BettiMethod {
  Auto,      // Hochster for squarefree ideals, lattice resolution otherwise
  Hochster,
  Lattice,
  Taylor,    // Taylor complex followed by cancellation
};

struct BettiOptions {
  BettiMethod method = BettiMethod::Auto;
  std::size_t taylor_cap = default_taylor_cap;
  std::size_t lattice_cap = default_lattice_cap;
};

inline BettiTable compute_betti(const MonomialIdeal& ideal, FieldSpec f, const BettiOptions& opt = {}) {
  BettiMethod method = opt.method;
  if (method == BettiMethod::Auto) method = ideal.is_squarefree() ? BettiMethod::Hochster : BettiMethod::Lattice;
  if (method == BettiMethod::Hochster) return hochster_betti(ideal, f);
  if (ideal.is_zero()) return BettiTable(f);
  return visit_field(f, [&](const auto& k) {
    if (method == BettiMethod::Taylor)
      return betti_table(minimalize_complex(taylor_complex(ideal, k, opt.taylor_cap)));
    return betti_table(minimal_resolution(ideal, k, opt.lattice_cap));
  });
}

// ---------------------------------------------------------------------------
// Graded pieces

struct GradedPieceDims {
  long long free_module = 0;  // dim (F_0)_d
  long long syzygy = 0;       // dim of the first syzygy module in degree d
  long long ideal = 0;        // dim I_d
};

inline long long monomial_count(int nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  // C(d + n - 1, n - 1)
  long long r = 1;
  for (int t = 1; t < nvars; ++t) r = r * (d + t) / t;
  return r;
}

/// Degree-d dimensions of F_0, of the first syzygy module of I, and of I.
/// I_d is counted directly and checked against the rank of (F_0)_d -> R_d;
/// the syzygy count is checked against the alternating sum over F_1, F_2, ...
template <class K>
GradedPieceDims graded_piece_dims(const MonomialIdeal& ideal, const GradedFreeComplex<K>& c, int d) {
  GradedPieceDims out;
  const int n = ideal.nvars();
  for (const auto& g : ideal.gens()) out.free_module += monomial_count(n, d - total_degree(g));

  std::map<Multidegree, std::size_t> row_of;
  for_each_monomial_of_degree(n, d, [&](const Multidegree& m) {
    if (ideal.contains(m)) row_of.emplace(m, row_of.size());
  });
  out.ideal = static_cast<long long>(row_of.size());

  SparseMatrix<long long> map(row_of.size(), static_cast<std::size_t>(out.free_module));
  std::size_t col = 0;
  for (const auto& g : ideal.gens())
    for_each_monomial_of_degree(n, d - total_degree(g), [&](const Multidegree& m) {
      map.set(row_of.at(product(g, m)), col++, 1);
    });
  auto image = static_cast<long long>(rank(map, c.field().spec()));
  if (image != out.ideal) throw InternalError("degree-d ideal count disagrees with the rank of F_0 -> R");
  out.syzygy = out.free_module - image;

  long long alternating = 0;
  for (int i = 1; i < c.length(); ++i) {
    long long dim = 0;
    for (const auto& s : c.shifts(i)) dim += monomial_count(n, d - total_degree(s));
    alternating += (i % 2 == 1) ? dim : -dim;
  }
  if (c.length() > 0 && alternating != out.syzygy)
    throw InternalError("syzygy dimension disagrees with the resolution");
  return out;
}

}  // namespace lindef
