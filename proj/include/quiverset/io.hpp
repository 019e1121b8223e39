#pragma once

// File schemas shared with the CLI: quivers, algebra settings, semisimple
// types and local quiver settings as JSON, plus Graphviz DOT export. Writers
// emit a canonical byte-stable layout so parse -> emit round-trips are
// byte-identical; readers accept any JSON field order. Vertex indices are
// 1-based in files and DOT output.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quiverset/local.hpp"
#include "quiverset/quiver.hpp"
#include "quiverset/semigroup.hpp"

namespace quiverset::io {

namespace detail {

using nlohmann::json;

inline Int get_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<Int>();
}

inline std::vector<Int> get_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a list");
  std::vector<Int> v;
  v.reserve(j.size());
  for (const json& e : j) v.push_back(get_int(e, what));
  return v;
}

inline const json& field(const json& j, const char* name, const char* ctx) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(ctx) + " must be a JSON object");
  auto it = j.find(name);
  if (it == j.end())
    throw std::invalid_argument(std::string(ctx) + " is missing the '" + name + "' field");
  return *it;
}

inline void emit_int_list(std::ostringstream& out, const std::vector<Int>& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ']';
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Quiver
// ---------------------------------------------------------------------------

inline Quiver quiver_from_json(const nlohmann::json& j) {
  const Int k = detail::get_int(detail::field(j, "vertices", "quiver"), "vertices");
  if (k < 1 || k > kMaxEntry) throw std::invalid_argument("vertices must be >= 1");
  const nlohmann::json& arrows = detail::field(j, "arrows", "quiver");
  if (!arrows.is_array()) throw std::invalid_argument("arrows must be a list of triples");
  std::vector<Int> counts(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (const nlohmann::json& triple : arrows) {
    const std::vector<Int> t = detail::get_int_list(triple, "arrow triple");
    if (t.size() != 3)
      throw std::invalid_argument("arrow entries must be [from, to, count] triples");
    const Int from = t[0], to = t[1], count = t[2];
    if (from < 1 || from > k || to < 1 || to > k)
      throw std::invalid_argument("arrow endpoints must be vertex indices in 1.." +
                                  std::to_string(k));
    if (count < 0) throw std::invalid_argument("arrow counts must be non-negative");
    std::size_t idx = static_cast<std::size_t>(from - 1) * static_cast<std::size_t>(k) +
                      static_cast<std::size_t>(to - 1);
    counts[idx] = quiverset::detail::checked_add(counts[idx], count);
  }
  return Quiver(static_cast<std::size_t>(k), std::move(counts));
}

inline Quiver read_quiver(const std::string& text) {
  return quiver_from_json(nlohmann::json::parse(text));
}

namespace detail {

inline void emit_quiver_body(std::ostringstream& out, const Quiver& q, const std::string& indent) {
  const std::size_t k = q.vertex_count();
  out << "{\n" << indent << "  \"vertices\": " << k << ",\n" << indent << "  \"arrows\": [";
  bool first = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (q.arrows(i, j) == 0) continue;
      out << (first ? "\n" : ",\n") << indent << "    [" << i + 1 << ", " << j + 1 << ", "
          << q.arrows(i, j) << ']';
      first = false;
    }
  if (!first) out << '\n' << indent << "  ";
  out << "]\n" << indent << '}';
}

}  // namespace detail

inline std::string write_quiver(const Quiver& q) {
  std::ostringstream out;
  detail::emit_quiver_body(out, q, "");
  out << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Algebra setting
// ---------------------------------------------------------------------------

inline AlgebraSetting setting_from_json(const nlohmann::json& j) {
  AlgebraSetting s{std::string(), quiver_from_json(detail::field(j, "quiver", "setting")), {}, {}};
  const nlohmann::json& name = detail::field(j, "name", "setting");
  if (!name.is_string()) throw std::invalid_argument("setting name must be a string");
  s.name = name.get<std::string>();
  s.alpha = detail::get_int_list(detail::field(j, "alpha", "setting"), "alpha");
  const nlohmann::json& gens = detail::field(j, "generators", "setting");
  if (!gens.is_array()) throw std::invalid_argument("generators must be a list");
  for (const nlohmann::json& g : gens) {
    AmbientVector v;
    v.coords = detail::get_int_list(detail::field(g, "coords", "generator"), "coords");
    v.total_dim = detail::get_int(detail::field(g, "total_dim", "generator"), "total_dim");
    s.generators.push_back(std::move(v));
  }
  validate_setting(s);
  return s;
}

inline AlgebraSetting read_setting(const std::string& text) {
  return setting_from_json(nlohmann::json::parse(text));
}

inline std::string write_setting(const AlgebraSetting& s) {
  std::ostringstream out;
  out << "{\n  \"name\": " << nlohmann::json(s.name).dump() << ",\n  \"quiver\": ";
  detail::emit_quiver_body(out, s.quiver, "  ");
  out << ",\n  \"alpha\": ";
  detail::emit_int_list(out, s.alpha);
  out << ",\n  \"generators\": [";
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"coords\": ";
    detail::emit_int_list(out, s.generators[i].coords);
    out << ", \"total_dim\": " << s.generators[i].total_dim << '}';
  }
  out << "\n  ]\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Semisimple type
// ---------------------------------------------------------------------------

inline SemisimpleType type_from_json(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_array() ? j : detail::field(j, "components", "type");
  if (!list.is_array()) throw std::invalid_argument("components must be a list");
  if (list.empty()) throw std::invalid_argument("semisimple type has no components");
  SemisimpleType t;
  for (const nlohmann::json& c : list) {
    SemisimpleComponent sc;
    sc.epsilon = detail::get_int_list(detail::field(c, "epsilon", "component"), "epsilon");
    sc.mult = detail::get_int(detail::field(c, "mult", "component"), "mult");
    t.components.push_back(std::move(sc));
  }
  return t;
}

inline SemisimpleType read_type(const std::string& text) {
  return type_from_json(nlohmann::json::parse(text));
}

inline std::string write_type(const SemisimpleType& t) {
  std::ostringstream out;
  out << "{\n  \"components\": [";
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"epsilon\": ";
    detail::emit_int_list(out, t.components[i].epsilon);
    out << ", \"mult\": " << t.components[i].mult << '}';
  }
  out << "\n  ]\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Local quiver setting
// ---------------------------------------------------------------------------

inline std::string write_local_setting(const LocalQuiverSetting& l) {
  std::ostringstream out;
  out << "{\n  \"quiver\": ";
  detail::emit_quiver_body(out, l.quiver, "  ");
  out << ",\n  \"dimvec\": ";
  detail::emit_int_list(out, l.dimvec);
  out << "\n}\n";
  return out.str();
}

inline LocalQuiverSetting local_setting_from_json(const nlohmann::json& j) {
  LocalQuiverSetting l{quiver_from_json(detail::field(j, "quiver", "local setting")),
                       detail::get_int_list(detail::field(j, "dimvec", "local setting"), "dimvec")};
  if (l.dimvec.size() != l.quiver.vertex_count())
    throw std::invalid_argument("dimvec length does not match quiver vertex count");
  return l;
}

inline LocalQuiverSetting read_local_setting(const std::string& text) {
  return local_setting_from_json(nlohmann::json::parse(text));
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

/// Graphviz digraph; parallel arrows become repeated edges and an optional
/// dimension vector is appended to the vertex labels.
inline std::string export_dot(const Quiver& q, const DimVector* dimvec = nullptr) {
  if (dimvec != nullptr) quiverset::detail::check_dimvec(q, *dimvec, "dimvec");
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out << "  v" << v + 1 << " [label=\"" << v + 1;
    if (dimvec) out << ':' << (*dimvec)[v];
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      for (Int c = 0; c < q.arrows(i, j); ++c)
        out << "  v" << i + 1 << " -> v" << j + 1 << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Small file helpers
// ---------------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << contents;
}

}  // namespace quiverset::io
