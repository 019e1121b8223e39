#pragma once

// Reconstruction of the local quiver setting of a semisimple representation
// type: vertices are the simple summands, arrow counts are the generic Ext
// dimensions delta_ij - chi(eps_i, eps_j), and the dimension vector records
// the multiplicities.

#include <cstddef>
#include <string>
#include <vector>

#include "quiverset/quiver.hpp"
#include "quiverset/semigroup.hpp"
#include "quiverset/simple.hpp"

namespace quiverset {

/// One summand of a semisimple type: a simple dimension vector with its
/// multiplicity. Distinct list positions are distinct simples even when the
/// dimension vectors coincide.
struct SemisimpleComponent {
  DimVector epsilon;
  Int mult = 1;

  bool operator==(const SemisimpleComponent&) const = default;
};

struct SemisimpleType {
  std::vector<SemisimpleComponent> components;

  bool operator==(const SemisimpleType&) const = default;
};

struct LocalQuiverSetting {
  Quiver quiver;
  DimVector dimvec;

  bool operator==(const LocalQuiverSetting&) const = default;
};

/// Checks the type invariants against q: non-empty, multiplicities >= 1 and
/// every component a simple dimension vector of q. Throws std::invalid_argument.
inline void validate_semisimple_type(const Quiver& q, const SemisimpleType& t) {
  if (t.components.empty()) throw std::invalid_argument("semisimple type has no components");
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    const SemisimpleComponent& c = t.components[i];
    if (c.mult < 1 || c.mult > kMaxEntry)
      throw std::invalid_argument("component " + std::to_string(i + 1) +
                                  ": multiplicity must be >= 1");
    const SimpleVerdict v = classify_simple(q, c.epsilon);
    if (!v.simple)
      throw std::invalid_argument("component " + std::to_string(i + 1) +
                                  " is not a simple dimension vector: " + describe(v));
  }
}

/// Generic Ext dimension between two simples with dimension vectors e and f:
/// (1 if same_simple else 0) - chi(e, f). Callers are responsible for passing
/// genuine simple dimension vectors; a negative result means a non-simple
/// input slipped through and raises InconsistencyError.
inline Int ext_between_simples(const Quiver& q, const DimVector& e, const DimVector& f,
                               bool same_simple) {
  detail::check_dimvec(q, e, "e");
  detail::check_dimvec(q, f, "f");
  if (detail::is_zero(e) || detail::is_zero(f))
    throw std::invalid_argument("simple dimension vectors cannot be zero");
  if (same_simple && e != f)
    throw std::invalid_argument("same_simple requires equal dimension vectors");
  const Int ext = detail::checked_sub(same_simple ? 1 : 0, euler_form(q, e, f));
  if (ext < 0)
    throw InconsistencyError("negative Ext dimension " + std::to_string(ext) +
                             ": inputs are not simple dimension vectors");
  return ext;
}

/// Local quiver setting of the semisimple type t over q: one vertex per
/// component, arrows(i, j) = delta_ij - chi(eps_i, eps_j), dimension vector
/// the multiplicities. Validates t first.
inline LocalQuiverSetting local_quiver(const Quiver& q, const SemisimpleType& t) {
  validate_semisimple_type(q, t);
  const std::size_t l = t.components.size();
  std::vector<Int> arrows(l * l, 0);
  DimVector mults;
  mults.reserve(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const Int ext = detail::checked_sub(
          i == j ? 1 : 0, euler_form(q, t.components[i].epsilon, t.components[j].epsilon));
      if (ext < 0)
        throw InconsistencyError("negative arrow count " + std::to_string(ext) +
                                 " between components " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1));
      arrows[i * l + j] = ext;
    }
    mults.push_back(t.components[i].mult);
  }
  return {Quiver(l, std::move(arrows)), std::move(mults)};
}

/// Total dimension of the semisimple module described by t over the setting:
/// sum_i e_i * (sum_j eps_i[j] * |beta_j|).
inline Int total_dimension(const AlgebraSetting& s, const SemisimpleType& t) {
  validate_setting(s);
  validate_semisimple_type(s.quiver, t);
  Int total = 0;
  for (const SemisimpleComponent& c : t.components) {
    Int dim = 0;
    for (std::size_t j = 0; j < c.epsilon.size(); ++j)
      dim = detail::checked_add(dim, detail::checked_mul(c.epsilon[j], s.alpha[j]));
    total = detail::checked_add(total, detail::checked_mul(c.mult, dim));
  }
  return total;
}

}  // namespace quiverset
