// Command-line front end: every library operation behind a subcommand, with
// JSON input files, human-readable tables (default) or --json output, and
// Graphviz DOT export. Exit codes: 0 success, 1 invalid input, 2 internal
// inconsistency.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quiverset/quiverset.hpp"

namespace {

using namespace quiverset;

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t a = item.find_first_not_of(" \t");
    const std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item.substr(a, b - a + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse integer '" + item + "'");
    }
    if (used != b - a + 1) throw std::invalid_argument("cannot parse integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated integer list");
  return out;
}

std::string format_tuple(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string json_list(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

Quiver load_quiver(const std::string& path) { return io::read_quiver(io::read_file(path)); }

AlgebraSetting load_setting(const std::string& arg) {
  if (arg == "curve") return builtin_curve();
  if (arg == "psl2z") return builtin_psl2z();
  if (arg == "path-algebra" || arg == "hereditary-order")
    throw std::invalid_argument("builtin '" + arg +
                                "' needs parameters; generate a file with the builtin subcommand");
  return io::read_setting(io::read_file(arg));
}

/// --setting and --quiver are alternatives for the operations that only need
/// the quiver of a setting.
Quiver resolve_quiver(const std::string& quiver_path, const std::string& setting_arg) {
  if (!quiver_path.empty() && !setting_arg.empty())
    throw std::invalid_argument("give either --quiver or --setting, not both");
  if (!quiver_path.empty()) return load_quiver(quiver_path);
  if (!setting_arg.empty()) return load_setting(setting_arg).quiver;
  throw std::invalid_argument("one of --quiver or --setting is required");
}

void print_quiver_table(std::ostream& out, const Quiver& q) {
  out << "arrows:\n";
  bool any = false;
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    for (std::size_t j = 0; j < q.vertex_count(); ++j)
      if (q.arrows(i, j) > 0) {
        out << "  " << i + 1 << " -> " << j + 1 << ": " << q.arrows(i, j) << "\n";
        any = true;
      }
  if (!any) out << "  (none)\n";
}

int run(int argc, char** argv) {
  CLI::App app{"quiverset - quiver settings of formally smooth algebras: simple dimension "
               "vectors, generic Ext dimensions and local quiver reconstruction"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(30);

  // ---- simple ----
  auto* cmd_simple = app.add_subcommand("simple", "Is a dimension vector simple for a quiver?");
  std::string simple_quiver, simple_dimvec;
  bool simple_json = false;
  cmd_simple->add_option("--quiver", simple_quiver, "quiver JSON file")->required();
  cmd_simple->add_option("--dimvec", simple_dimvec, "comma-separated entries")->required();
  cmd_simple->add_flag("--json", simple_json, "machine-readable output");
  cmd_simple->callback([&] {
    const Quiver q = load_quiver(simple_quiver);
    const SimpleVerdict v = classify_simple(q, parse_int_list(simple_dimvec));
    if (simple_json)
      std::cout << "{\"simple\": " << (v.simple ? "true" : "false") << ", \"condition\": \""
                << describe(v) << "\"}\n";
    else
      std::cout << "simple: " << (v.simple ? "true" : "false") << "\ncondition: " << describe(v)
                << "\n";
  });

  // ---- enumerate-simples ----
  auto* cmd_enum = app.add_subcommand("enumerate-simples",
                                      "All simple dimension vectors up to a total bound");
  std::string enum_quiver;
  Int enum_bound = 0;
  bool enum_json = false;
  cmd_enum->add_option("--quiver", enum_quiver, "quiver JSON file")->required();
  cmd_enum->add_option("--bound", enum_bound, "bound on the sum of entries")->required();
  cmd_enum->add_flag("--json", enum_json, "machine-readable output");
  cmd_enum->callback([&] {
    const Quiver q = load_quiver(enum_quiver);
    const std::vector<DimVector> simples = enumerate_simple_dimvecs(q, enum_bound);
    if (enum_json) {
      std::cout << "{\"bound\": " << enum_bound << ", \"simples\": [";
      for (std::size_t i = 0; i < simples.size(); ++i)
        std::cout << (i ? ", " : "") << json_list(simples[i]);
      std::cout << "]}\n";
    } else {
      std::cout << "simple dimension vectors with total <= " << enum_bound << ": "
                << simples.size() << "\n";
      for (const DimVector& e : simples) std::cout << format_tuple(e) << "\n";
    }
  });

  // ---- ext ----
  auto* cmd_ext = app.add_subcommand("ext", "Generic Ext dimension between two simples");
  std::string ext_quiver, ext_setting, ext_e, ext_f;
  bool ext_same = false, ext_json = false;
  cmd_ext->add_option("--quiver", ext_quiver, "quiver JSON file");
  cmd_ext->add_option("--setting", ext_setting, "builtin name or setting JSON file");
  cmd_ext->add_option("--e", ext_e, "first simple dimension vector")->required();
  cmd_ext->add_option("--f", ext_f, "second simple dimension vector")->required();
  cmd_ext->add_flag("--same-simple", ext_same, "the two vectors name the same simple");
  cmd_ext->add_flag("--json", ext_json, "machine-readable output");
  cmd_ext->callback([&] {
    const Quiver q = resolve_quiver(ext_quiver, ext_setting);
    const DimVector e = parse_int_list(ext_e), f = parse_int_list(ext_f);
    for (const auto& [vec, name] : {std::pair{&e, "--e"}, std::pair{&f, "--f"}}) {
      const SimpleVerdict v = classify_simple(q, *vec);
      if (!v.simple)
        throw std::invalid_argument(std::string(name) + " is not a simple dimension vector: " +
                                    describe(v));
    }
    const Int ext = ext_between_simples(q, e, f, ext_same);
    if (ext_json)
      std::cout << "{\"ext\": " << ext << "}\n";
    else
      std::cout << "ext: " << ext << "\n";
  });

  // ---- local-quiver ----
  auto* cmd_local = app.add_subcommand("local-quiver",
                                       "Local quiver setting of a semisimple type");
  std::string local_quiver_path, local_setting_arg, local_type, local_dot, local_out;
  bool local_json = false;
  cmd_local->add_option("--quiver", local_quiver_path, "quiver JSON file");
  cmd_local->add_option("--setting", local_setting_arg, "builtin name or setting JSON file");
  cmd_local->add_option("--type", local_type, "semisimple type JSON file")->required();
  cmd_local->add_option("--dot", local_dot, "write the local quiver as DOT to this file");
  cmd_local->add_option("--out", local_out, "write the local setting as JSON to this file");
  cmd_local->add_flag("--json", local_json, "machine-readable output");
  cmd_local->callback([&] {
    const Quiver q = resolve_quiver(local_quiver_path, local_setting_arg);
    const SemisimpleType t = io::read_type(io::read_file(local_type));
    const LocalQuiverSetting l = local_quiver(q, t);
    if (!local_dot.empty()) io::write_file(local_dot, io::export_dot(l.quiver, &l.dimvec));
    if (!local_out.empty()) io::write_file(local_out, io::write_local_setting(l));
    if (local_json) {
      std::cout << io::write_local_setting(l);
    } else {
      std::cout << "local quiver on " << l.quiver.vertex_count() << " vertices\n";
      print_quiver_table(std::cout, l.quiver);
      std::cout << "dimvec: " << format_tuple(l.dimvec) << "\n";
    }
  });

  // ---- decompose ----
  auto* cmd_dec = app.add_subcommand("decompose",
                                     "All decompositions of a target over the generators");
  std::string dec_setting, dec_target;
  bool dec_json = false;
  cmd_dec->add_option("--setting", dec_setting, "builtin name or setting JSON file")->required();
  cmd_dec->add_option("--target", dec_target, "ambient coordinates, comma-separated")->required();
  cmd_dec->add_flag("--json", dec_json, "machine-readable output");
  cmd_dec->callback([&] {
    const AlgebraSetting s = load_setting(dec_setting);
    const std::vector<DimVector> decs = decompose(s, parse_int_list(dec_target));
    if (dec_json) {
      std::cout << "{\"decompositions\": [";
      for (std::size_t i = 0; i < decs.size(); ++i)
        std::cout << (i ? ", " : "") << json_list(decs[i]);
      std::cout << "]}\n";
    } else {
      std::cout << "decompositions: " << decs.size() << "\n";
      for (const DimVector& d : decs) std::cout << format_tuple(d) << "\n";
    }
  });

  // ---- is-simp ----
  auto* cmd_simp = app.add_subcommand("is-simp",
                                      "Does a target have a simple decomposition?");
  std::string simp_setting, simp_target;
  bool simp_json = false;
  cmd_simp->add_option("--setting", simp_setting, "builtin name or setting JSON file")->required();
  cmd_simp->add_option("--target", simp_target, "ambient coordinates, comma-separated")->required();
  cmd_simp->add_flag("--json", simp_json, "machine-readable output");
  cmd_simp->callback([&] {
    const AlgebraSetting s = load_setting(simp_setting);
    const IsSimpResult r = is_simp(s, parse_int_list(simp_target));
    if (simp_json) {
      std::cout << "{\"simp\": " << (r.simp ? "true" : "false") << ", \"witness\": "
                << (r.witness ? json_list(*r.witness) : std::string("null")) << "}\n";
    } else {
      std::cout << "simp: " << (r.simp ? "true" : "false") << "\n";
      if (r.witness) std::cout << "witness: " << format_tuple(*r.witness) << "\n";
    }
  });

  // ---- westbury ----
  auto* cmd_west = app.add_subcommand("westbury",
                                      "Inequality check b_j <= a_i for bipartite types");
  std::string west_a, west_b;
  bool west_json = false;
  cmd_west->add_option("--a", west_a, "a1,a2")->required();
  cmd_west->add_option("--b", west_b, "b1,b2,b3")->required();
  cmd_west->add_flag("--json", west_json, "machine-readable output");
  cmd_west->callback([&] {
    const std::vector<Int> a = parse_int_list(west_a), b = parse_int_list(west_b);
    if (a.size() != 2 || b.size() != 3)
      throw std::invalid_argument("--a needs 2 entries and --b needs 3");
    const bool ok = westbury_check(a[0], a[1], b[0], b[1], b[2]);
    if (west_json)
      std::cout << "{\"westbury\": " << (ok ? "true" : "false") << "}\n";
    else
      std::cout << "westbury: " << (ok ? "true" : "false") << "\n";
  });

  // ---- builtin ----
  auto* cmd_builtin = app.add_subcommand("builtin", "Emit a built-in algebra setting");
  std::string builtin_name, builtin_quiver, builtin_partitions, builtin_dot, builtin_out;
  bool builtin_json = false;
  cmd_builtin->add_option("name", builtin_name,
                          "curve | path-algebra | hereditary-order | psl2z")
      ->required();
  cmd_builtin->add_option("--quiver", builtin_quiver, "quiver JSON file (path-algebra)");
  cmd_builtin->add_option("--partitions", builtin_partitions,
                          "semicolon-separated partitions, e.g. '2,1;1,1,1' (hereditary-order)");
  cmd_builtin->add_option("--dot", builtin_dot, "write the setting's quiver as DOT to this file");
  cmd_builtin->add_option("--out", builtin_out, "write the setting as JSON to this file");
  cmd_builtin->add_flag("--json", builtin_json, "emit the setting as JSON on stdout");
  cmd_builtin->callback([&] {
    AlgebraSetting s = [&]() -> AlgebraSetting {
      if (builtin_name == "curve") return builtin_curve();
      if (builtin_name == "psl2z") return builtin_psl2z();
      if (builtin_name == "path-algebra") {
        if (builtin_quiver.empty())
          throw std::invalid_argument("builtin path-algebra needs --quiver");
        return builtin_path_algebra(load_quiver(builtin_quiver));
      }
      if (builtin_name == "hereditary-order") {
        if (builtin_partitions.empty())
          throw std::invalid_argument("builtin hereditary-order needs --partitions");
        std::vector<std::vector<Int>> parts;
        std::stringstream ss(builtin_partitions);
        std::string one;
        while (std::getline(ss, one, ';')) parts.push_back(parse_int_list(one));
        return builtin_hereditary_order(parts);
      }
      throw std::invalid_argument("unknown builtin '" + builtin_name +
                                  "' (expected curve, path-algebra, hereditary-order or psl2z)");
    }();
    if (!builtin_dot.empty()) io::write_file(builtin_dot, io::export_dot(s.quiver, &s.alpha));
    if (!builtin_out.empty()) io::write_file(builtin_out, io::write_setting(s));
    if (builtin_json) {
      std::cout << io::write_setting(s);
    } else {
      std::cout << "setting: " << s.name << "\nvertices: " << s.quiver.vertex_count()
                << "\ntotal arrows: " << s.quiver.total_arrows() << "\n";
      print_quiver_table(std::cout, s.quiver);
      std::cout << "alpha: " << format_tuple(s.alpha) << "\ngenerators:\n";
      for (std::size_t i = 0; i < s.generators.size(); ++i)
        std::cout << "  " << i + 1 << ": coords " << format_tuple(s.generators[i].coords)
                  << ", total_dim " << s.generators[i].total_dim << "\n";
    }
  });

  // ---- describe-b ----
  auto* cmd_desc = app.add_subcommand("describe-b",
                                      "Block structure of the associated path algebra");
  std::string desc_setting;
  Int desc_maxlen = 3;
  bool desc_json = false;
  cmd_desc->add_option("--setting", desc_setting, "builtin name or setting JSON file")->required();
  cmd_desc->add_option("--max-len", desc_maxlen, "maximum path length for the counts");
  cmd_desc->add_flag("--json", desc_json, "machine-readable output");
  cmd_desc->callback([&] {
    const AlgebraSetting s = load_setting(desc_setting);
    const BlockDescriptor d = describe_b(s, desc_maxlen);
    if (desc_json) {
      std::cout << "{\"blocks\": [";
      bool first = true;
      for (std::size_t i = 0; i < d.k; ++i)
        for (std::size_t j = 0; j < d.k; ++j) {
          const BlockInfo& b = d.at(i, j);
          std::cout << (first ? "" : ", ") << "{\"from\": " << i + 1 << ", \"to\": " << j + 1
                    << ", \"rows\": " << b.rows << ", \"cols\": " << b.cols
                    << ", \"reachable\": " << (b.reachable ? "true" : "false")
                    << ", \"path_counts\": " << json_list(b.path_counts) << "}";
          first = false;
        }
      std::cout << "]}\n";
    } else {
      for (std::size_t i = 0; i < d.k; ++i)
        for (std::size_t j = 0; j < d.k; ++j) {
          const BlockInfo& b = d.at(i, j);
          std::cout << "block (" << i + 1 << "," << j + 1 << "): size " << b.rows << "x" << b.cols
                    << ", reachable: " << (b.reachable ? "yes" : "no") << ", path counts "
                    << format_tuple(b.path_counts) << "\n";
        }
    }
  });

  // ---- oracle ----
  auto* cmd_oracle = app.add_subcommand("oracle",
                                        "Exact finite-field verification on random representations");
  cmd_oracle->require_subcommand(1);

  auto* cmd_ois = cmd_oracle->add_subcommand("is-simple",
                                             "Probabilistic simplicity test for a dimension vector");
  std::string ois_quiver, ois_dimvec;
  Int ois_trials = oracle::kDefaultTrials;
  std::uint64_t ois_seed = 0, ois_prime = oracle::kDefaultPrime;
  bool ois_json = false;
  cmd_ois->add_option("--quiver", ois_quiver, "quiver JSON file")->required();
  cmd_ois->add_option("--dimvec", ois_dimvec, "comma-separated entries")->required();
  cmd_ois->add_option("--trials", ois_trials, "number of random representations");
  cmd_ois->add_option("--seed", ois_seed, "random seed");
  cmd_ois->add_option("--prime", ois_prime, "field modulus (prime, 2^20 < p < 2^31)");
  cmd_ois->add_flag("--json", ois_json, "machine-readable output");
  cmd_ois->callback([&] {
    const Quiver q = load_quiver(ois_quiver);
    const bool simple =
        oracle::is_simple(q, parse_int_list(ois_dimvec), ois_trials, ois_seed, ois_prime);
    if (ois_json) {
      std::cout << "{\"simple\": " << (simple ? "true" : "false") << ", \"trials\": " << ois_trials
                << ", \"seed\": " << ois_seed << ", \"prime\": " << ois_prime
                << ", \"probabilistic\": " << (simple ? "false" : "true") << "}\n";
    } else {
      std::cout << "oracle-simple: " << (simple ? "true" : "false") << "\n";
      if (!simple)
        std::cout << "note: 'false' after " << ois_trials
                  << " trials is probabilistic evidence, not a proof\n";
    }
  });

  auto* cmd_oext = cmd_oracle->add_subcommand("ext",
                                              "Hom/Ext dimensions between two random representations");
  std::string oext_quiver, oext_e, oext_f;
  std::uint64_t oext_seed = 0, oext_prime = oracle::kDefaultPrime;
  bool oext_json = false;
  cmd_oext->add_option("--quiver", oext_quiver, "quiver JSON file")->required();
  cmd_oext->add_option("--e", oext_e, "dimension vector of the first representation")->required();
  cmd_oext->add_option("--f", oext_f, "dimension vector of the second representation")->required();
  cmd_oext->add_option("--seed", oext_seed, "random seed");
  cmd_oext->add_option("--prime", oext_prime, "field modulus (prime, 2^20 < p < 2^31)");
  cmd_oext->add_flag("--json", oext_json, "machine-readable output");
  cmd_oext->callback([&] {
    const Quiver q = load_quiver(oext_quiver);
    const oracle::PrimeField F(oext_prime);
    oracle::SplitMix64 seeder(oext_seed);
    const oracle::QuiverRep M = oracle::random_rep(q, parse_int_list(oext_e), seeder.next(), F);
    const oracle::QuiverRep N = oracle::random_rep(q, parse_int_list(oext_f), seeder.next(), F);
    const Int hom = oracle::hom_dim(M, N);
    const Int ext = oracle::ext_dim(M, N);
    if (oext_json)
      std::cout << "{\"hom\": " << hom << ", \"ext\": " << ext << ", \"seed\": " << oext_seed
                << ", \"prime\": " << oext_prime << "}\n";
    else
      std::cout << "hom: " << hom << "\next: " << ext << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const quiverset::InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
