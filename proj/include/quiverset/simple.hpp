#pragma once

// Classification of simple dimension vectors of a quiver: a dimension vector
// supports a simple representation iff its support is strongly connected and
// either the support is an oriented cycle carrying all-ones entries, or the
// Euler-form inequalities chi(e, delta_v) <= 0 and chi(delta_v, e) <= 0 hold
// at every support vertex. A lone loopless vertex only carries the
// one-dimensional vertex simple.

#include <cstddef>
#include <string>
#include <vector>

#include "quiverset/quiver.hpp"

namespace quiverset {

enum class SimpleCheck {
  Accepted,                      // chi inequalities hold on the support
  AcceptedCycle,                 // support is an oriented cycle, all entries one
  AcceptedVertex,                // single loopless vertex with entry one
  RejectedNotStronglyConnected,  // support not strongly connected
  RejectedCycleEntryExceedsOne,  // oriented-cycle support with an entry >= 2
  RejectedVertexEntryExceedsOne, // loopless single vertex with entry >= 2
  RejectedChiOutgoing,           // chi(e, delta_v) > 0 at `vertex`
  RejectedChiIncoming,           // chi(delta_v, e) > 0 at `vertex`
};

struct SimpleVerdict {
  bool simple = false;
  SimpleCheck check = SimpleCheck::RejectedNotStronglyConnected;
  std::size_t vertex = 0;  // offending vertex for the chi rejections (0-based)
};

/// Human-readable explanation of a verdict (1-based vertex indices).
inline std::string describe(const SimpleVerdict& v) {
  switch (v.check) {
    case SimpleCheck::Accepted:
      return "Euler-form conditions hold at every support vertex";
    case SimpleCheck::AcceptedCycle:
      return "support is an oriented cycle and every entry is 1";
    case SimpleCheck::AcceptedVertex:
      return "vertex simple at a loopless vertex";
    case SimpleCheck::RejectedNotStronglyConnected:
      return "support is not strongly connected";
    case SimpleCheck::RejectedCycleEntryExceedsOne:
      return "support is an oriented cycle but some entry exceeds 1";
    case SimpleCheck::RejectedVertexEntryExceedsOne:
      return "support is a single loopless vertex but its entry exceeds 1";
    case SimpleCheck::RejectedChiOutgoing:
      return "chi(e, delta_" + std::to_string(v.vertex + 1) + ") > 0";
    case SimpleCheck::RejectedChiIncoming:
      return "chi(delta_" + std::to_string(v.vertex + 1) + ", e) > 0";
  }
  return "unknown";
}

/// Full classification of a nonzero dimension vector. Throws
/// std::invalid_argument on the zero vector or a length mismatch.
inline SimpleVerdict classify_simple(const Quiver& q, const DimVector& e) {
  detail::check_dimvec(q, e, "e");
  if (detail::is_zero(e)) throw std::invalid_argument("zero dimension vector has no simple type");

  const VertexSet supp = support(e);
  if (!is_strongly_connected(q, supp))
    return {false, SimpleCheck::RejectedNotStronglyConnected, 0};

  if (supp.size() == 1) {
    const std::size_t v = supp[0];
    const Int l = q.loops(v);
    if (l == 0)
      return e[v] == 1 ? SimpleVerdict{true, SimpleCheck::AcceptedVertex, 0}
                       : SimpleVerdict{false, SimpleCheck::RejectedVertexEntryExceedsOne, v};
    if (l == 1)  // one loop: oriented cycle on a single vertex
      return e[v] == 1 ? SimpleVerdict{true, SimpleCheck::AcceptedCycle, 0}
                       : SimpleVerdict{false, SimpleCheck::RejectedCycleEntryExceedsOne, v};
    // >= 2 loops: fall through to the chi inequalities.
  } else if (is_oriented_cycle(q, supp)) {
    for (std::size_t v : supp)
      if (e[v] != 1) return {false, SimpleCheck::RejectedCycleEntryExceedsOne, v};
    return {true, SimpleCheck::AcceptedCycle, 0};
  }

  for (std::size_t v : supp) {
    // chi(e, delta_v) = e[v] - sum_i e[i] * arrows(i, v), and symmetrically.
    Int out = e[v], in = e[v];
    for (std::size_t i : supp) {
      out = detail::checked_sub_mul(out, e[i], q.arrows(i, v));
      in = detail::checked_sub_mul(in, q.arrows(v, i), e[i]);
    }
    if (out > 0) return {false, SimpleCheck::RejectedChiOutgoing, v};
    if (in > 0) return {false, SimpleCheck::RejectedChiIncoming, v};
  }
  return {true, SimpleCheck::Accepted, 0};
}

/// True iff e is the dimension vector of a simple representation of q.
inline bool is_simple_dimvec(const Quiver& q, const DimVector& e) {
  return classify_simple(q, e).simple;
}

/// All simple dimension vectors with 1 <= sum of entries <= total_bound,
/// in ascending lexicographic order.
inline std::vector<DimVector> enumerate_simple_dimvecs(const Quiver& q, Int total_bound) {
  if (total_bound < 1) throw std::invalid_argument("total_bound must be >= 1");
  const std::size_t k = q.vertex_count();
  std::vector<DimVector> out;
  DimVector e(k, 0);

  auto rec = [&](auto&& self, std::size_t pos, Int remaining) -> void {
    if (pos == k) {
      if (remaining < total_bound && is_simple_dimvec(q, e)) out.push_back(e);
      return;
    }
    for (Int v = 0; v <= remaining; ++v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    e[pos] = 0;
  };
  rec(rec, 0, total_bound);
  return out;
}

}  // namespace quiverset
