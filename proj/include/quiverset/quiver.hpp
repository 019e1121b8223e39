#pragma once

// Finite quivers (directed multigraphs with loops), dimension vectors and the
// Euler bilinear form, plus the induced-subquiver predicates used by the
// simple-dimension-vector classifier.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quiverset {

using Int = std::int64_t;

/// Dimension vector: one non-negative integer per quiver vertex.
using DimVector = std::vector<Int>;

/// Sorted list of 0-based vertex indices.
using VertexSet = std::vector<std::size_t>;

/// Arrow counts and dimension-vector entries must fit in [0, 2^31].
inline constexpr Int kMaxEntry = Int{1} << 31;

/// Raised when a computation produces a value that contradicts the
/// mathematical guarantees of its inputs (e.g. a negative arrow count in a
/// local quiver). Distinct from std::invalid_argument so callers can map it
/// to a different failure class.
class InconsistencyError : public std::runtime_error {
 public:
  explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in quiver arithmetic");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in quiver arithmetic");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in quiver arithmetic");
  return r;
}

/// acc - a * b with overflow detection.
inline Int checked_sub_mul(Int acc, Int a, Int b) { return checked_sub(acc, checked_mul(a, b)); }

inline void check_entry_range(Int v, const char* what) {
  if (v < 0 || v > kMaxEntry)
    throw std::invalid_argument(std::string(what) + " must lie in [0, 2^31], got " +
                                std::to_string(v));
}

}  // namespace detail

/// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Int at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool operator==(const IntMatrix&) const = default;
};

/// A finite quiver on k vertices stored as a k x k matrix of arrow counts;
/// entry (i, j) is the number of arrows from vertex i to vertex j and the
/// diagonal counts loops. Immutable after construction.
class Quiver {
 public:
  Quiver(std::size_t vertex_count, std::vector<Int> arrow_counts)
      : k_(vertex_count), a_(std::move(arrow_counts)) {
    if (k_ == 0) throw std::invalid_argument("quiver needs at least one vertex");
    if (a_.size() != k_ * k_)
      throw std::invalid_argument("arrow-count matrix must be " + std::to_string(k_) + "x" +
                                  std::to_string(k_) + ", got " + std::to_string(a_.size()) +
                                  " entries");
    for (Int c : a_) detail::check_entry_range(c, "arrow count");
  }

  static Quiver single_vertex(Int loops) { return Quiver(1, {loops}); }

  /// Oriented cycle on `length` vertices (length 1 gives one vertex with one loop).
  static Quiver oriented_cycle(std::size_t length) {
    if (length == 0) throw std::invalid_argument("cycle length must be positive");
    std::vector<Int> a(length * length, 0);
    for (std::size_t i = 0; i < length; ++i) a[i * length + (i + 1) % length] = 1;
    return Quiver(length, std::move(a));
  }

  std::size_t vertex_count() const noexcept { return k_; }

  Int arrows(std::size_t from, std::size_t to) const { return a_[from * k_ + to]; }
  Int loops(std::size_t v) const { return arrows(v, v); }

  Int total_arrows() const {
    Int t = 0;
    for (Int c : a_) t = detail::checked_add(t, c);
    return t;
  }

  const std::vector<Int>& arrow_matrix() const noexcept { return a_; }

  bool operator==(const Quiver&) const = default;

 private:
  std::size_t k_;
  std::vector<Int> a_;  // row-major k_ x k_
};

namespace detail {

inline void check_dimvec(const Quiver& q, const DimVector& e, const char* name) {
  if (e.size() != q.vertex_count())
    throw std::invalid_argument(std::string("dimension vector ") + name + " has length " +
                                std::to_string(e.size()) + ", quiver has " +
                                std::to_string(q.vertex_count()) + " vertices");
  for (Int v : e) check_entry_range(v, "dimension-vector entry");
}

inline bool is_zero(const DimVector& e) {
  for (Int v : e)
    if (v != 0) return false;
  return true;
}

/// Normalizes a vertex set: sorted, duplicates removed, indices validated.
inline VertexSet normalize_vertex_set(const Quiver& q, VertexSet verts) {
  if (verts.empty()) throw std::invalid_argument("vertex set must be non-empty");
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.back() >= q.vertex_count())
    throw std::invalid_argument("vertex index " + std::to_string(verts.back() + 1) +
                                " out of range (quiver has " +
                                std::to_string(q.vertex_count()) + " vertices)");
  return verts;
}

}  // namespace detail

/// Euler matrix c with c[i][j] = delta_ij - #arrows(i -> j).
inline IntMatrix euler_matrix(const Quiver& q) {
  const std::size_t k = q.vertex_count();
  IntMatrix c(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c.at(i, j) = (i == j ? 1 : 0) - q.arrows(i, j);
  return c;
}

/// Euler bilinear form chi(a, b) = sum_ij a[i] * c[i][j] * b[j], computed in
/// checked 64-bit arithmetic.
inline Int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  detail::check_dimvec(q, a, "a");
  detail::check_dimvec(q, b, "b");
  const std::size_t k = q.vertex_count();
  Int total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b[j] == 0) continue;
      const Int c = (i == j ? 1 : 0) - q.arrows(i, j);
      total = detail::checked_add(total, detail::checked_mul(detail::checked_mul(a[i], c), b[j]));
    }
  }
  return total;
}

/// Indices of the nonzero entries, sorted ascending.
inline VertexSet support(const DimVector& e) {
  VertexSet s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) {
      if (e[i] < 0) throw std::invalid_argument("dimension-vector entry must be non-negative");
      s.push_back(i);
    }
  return s;
}

/// True iff the subquiver induced on `verts` (keeping only arrows with both
/// endpoints in the set) has a directed path between every ordered pair of
/// its vertices. A single vertex is strongly connected regardless of loops.
inline bool is_strongly_connected(const Quiver& q, const VertexSet& verts) {
  const VertexSet vs = detail::normalize_vertex_set(q, verts);
  const std::size_t m = vs.size();
  if (m == 1) return true;

  // Forward and backward reachability from vs[0] within the induced subquiver.
  auto reaches_all = [&](bool backward) {
    std::vector<char> seen(m, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < m; ++w) {
        if (seen[w]) continue;
        const Int c = backward ? q.arrows(vs[w], vs[u]) : q.arrows(vs[u], vs[w]);
        if (c > 0) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == m;
  };
  return reaches_all(false) && reaches_all(true);
}

/// True iff the induced subquiver is a single oriented cycle: strongly
/// connected with every vertex of in- and out-degree exactly one (arrow
/// multiplicities counted). One vertex with exactly one loop qualifies; one
/// vertex with no loops does not.
inline bool is_oriented_cycle(const Quiver& q, const VertexSet& verts) {
  const VertexSet vs = detail::normalize_vertex_set(q, verts);
  const std::size_t m = vs.size();
  for (std::size_t i = 0; i < m; ++i) {
    Int out = 0, in = 0;
    for (std::size_t j = 0; j < m; ++j) {
      out += q.arrows(vs[i], vs[j]);
      in += q.arrows(vs[j], vs[i]);
    }
    if (out != 1 || in != 1) return false;
  }
  return is_strongly_connected(q, vs);
}

}  // namespace quiverset
