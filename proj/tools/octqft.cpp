#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "octqft/catalog.hpp"
#include "octqft/errors.hpp"
#include "octqft/io.hpp"
#include "octqft/statesum.hpp"

using namespace octqft;

namespace {

/// Exit status when the fuzzer finds a mismatch.
constexpr int kMismatch = 3;

bool g_json = false;

void print_value(std::ostream& os, const Json& v, int indent);

bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!row.is_array() || row.empty() || !row.front().is_string()) return false;
  return true;
}

void print_matrix(std::ostream& os, const Json& m, int indent) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& x : row) width = std::max(width, x.get<std::string>().size());
  for (const auto& row : m) {
    os << std::string(indent, ' ');
    for (const auto& x : row) {
      const auto s = x.get<std::string>();
      os << std::string(width - s.size() + 1, ' ') << s;
    }
    os << "\n";
  }
}

std::string inline_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + inline_value(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (v.is_object()) return false;
  if (v.is_array())
    for (const auto& x : v)
      if (x.is_object() || x.is_array()) return false;
  return true;
}

void print_value(std::ostream& os, const Json& v, int indent) {
  for (const auto& [key, x] : v.items()) {
    os << std::string(indent, ' ') << key << ":";
    if (is_flat(x)) {
      os << " " << inline_value(x) << "\n";
    } else if (is_matrix(x)) {
      os << "\n";
      print_matrix(os, x, indent + 2);
    } else if (x.is_object()) {
      os << "\n";
      print_value(os, x, indent + 2);
    } else {
      os << "\n";
      for (const auto& item : x) {
        if (item.is_object()) {
          os << std::string(indent + 2, ' ') << "-\n";
          print_value(os, item, indent + 4);
        } else {
          os << std::string(indent + 2, ' ') << inline_value(item) << "\n";
        }
      }
    }
  }
}

void emit(const Json& j) {
  if (g_json)
    std::cout << dump(j) << "\n";
  else
    print_value(std::cout, j, 0);
}

Json report_json(const CheckReport& r) {
  Json arr = Json::array();
  for (const auto& it : r.items) {
    Json x{{"name", it.name}, {"ok", it.ok}};
    if (!it.witness.empty()) x["witness"] = it.witness;
    arr.push_back(x);
  }
  return arr;
}

std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

AlgebraFile load_algebra(const std::string& path) { return algebra_file_from_json(read_json_file(path)); }

FrobeniusStructure load_structure(const AlgebraFile& a) {
  if (!is_strongly_separable(a.algebra))
    throw math_error("NotStronglySeparable", "the canonical pairing is degenerate");
  return a.structure();
}

OpenClosedComplex load_complex(const std::string& path, const std::string& builtin_spec) {
  if (!builtin_spec.empty()) {
    std::istringstream in(builtin_spec);
    std::string name;
    in >> name;
    std::vector<std::size_t> params;
    std::size_t x;
    while (in >> x) params.push_back(x);
    return builtin(name, params);
  }
  if (path.empty()) throw input_error("MissingComplex", "pass --complex FILE or --builtin NAME");
  return complex_from_json(read_json_file(path));
}

int cmd_algebra_check(const std::string& path) {
  const AlgebraFile a = load_algebra(path);
  Json j;
  j["dim"] = a.algebra.dim();
  j["field"] = a.algebra.field().to_string();
  j["centre_dim"] = centre_basis(a.algebra).size();
  j["commutative"] = a.algebra.is_commutative();
  const bool sep = is_strongly_separable(a.algebra);
  j["strongly_separable"] = sep;
  if (!sep) throw math_error("NotStronglySeparable", "the canonical pairing is degenerate");
  const FrobeniusStructure F = a.structure();
  j["window"] = strings(F.window());
  j["window_invertible"] = F.has_invertible_window();
  j["special"] = F.is_special();
  emit(j);
  return 0;
}

int cmd_frobenius_show(const std::string& path) {
  const FrobeniusStructure F = load_structure(load_algebra(path));
  Json j;
  j["basis"] = F.algebra().basis_names();
  j["counit"] = strings(F.counit());
  j["pairing"] = matrix_to_json(F.pairing());
  j["copairing"] = matrix_to_json(F.pairing_inverse());
  j["window"] = strings(F.window());
  j["window_inverse"] = strings(F.window_inverse());
  j["comultiplication"] = matrix_to_json(F.comultiplication_matrix());
  j["checks"] = report_json(check_frobenius(F));
  emit(j);
  return 0;
}

int cmd_knowledgeable(const std::string& path) {
  const FrobeniusStructure F = load_structure(load_algebra(path));
  const KnowledgeableFrobenius K = knowledgeable_from_frobenius(F);
  const CheckReport r = check_knowledgeable(K);
  Json j;
  j["dim_A"] = F.dim();
  j["dim_C"] = K.dim_C();
  j["C_basis"] = matrix_to_json(K.iota.transpose());
  j["iota"] = matrix_to_json(K.iota);
  j["iota_star"] = matrix_to_json(K.iota_star);
  j["mu_C"] = matrix_to_json(K.mu_C);
  j["eta_C"] = matrix_to_json(K.eta_C);
  j["delta_C"] = matrix_to_json(K.delta_C);
  j["epsilon_C"] = matrix_to_json(K.epsilon_C);
  j["axioms"] = report_json(r);
  j["all_ok"] = r.all_ok();
  emit(j);
  return r.all_ok() ? 0 : 2;
}

ContractOptions contract_options(bool random_order, std::uint64_t seed, bool serial) {
  ContractOptions o;
  if (random_order) o.order = ContractionOrder::Random;
  o.seed = seed;
  o.parallel = !serial;
  return o;
}

int cmd_eval(const std::string& alg, const std::string& cpx, const std::string& builtin_spec, const std::string& mode,
             const ContractOptions& co) {
  const AlgebraFile a = load_algebra(alg);
  const FrobeniusStructure F = load_structure(a);
  const OpenClosedComplex c = load_complex(cpx, builtin_spec);
  StateSumOptions opts;
  opts.contract = co;
  const Morphism Z = state_sum(F, c, parse_mode(mode), opts);
  Json j;
  j["mode"] = mode;
  j["morphism"] = morphism_to_json(Z);
  emit(j);
  return 0;
}

int cmd_surface(const std::string& alg, std::size_t genus, std::size_t windows, bool oracle) {
  const AlgebraFile a = load_algebra(alg);
  const FrobeniusStructure F = load_structure(a);
  const Scalar value = evaluate_closed(F, closed_surface(genus, windows));
  Json j;
  j["genus"] = genus;
  j["windows"] = windows;
  j["value"] = value.to_string();
  if (oracle) {
    bool match = true;
    const Scalar kf = genus_window_scalar(knowledgeable_from_frobenius(F), genus, windows);
    j["knowledgeable_value"] = kf.to_string();
    match = match && kf == value;
    if (!a.block_sizes.empty()) {
      const Scalar cf = surface_invariant_closed_form(F.field(), a.block_sizes, a.block_windows, genus, windows);
      j["closed_form_value"] = cf.to_string();
      match = match && cf == value;
    }
    j["match"] = match;
    emit(j);
    return match ? 0 : kMismatch;
  }
  emit(j);
  return 0;
}

int cmd_fuzz(const std::string& alg, const std::string& cpx, const std::string& builtin_spec, std::size_t moves,
             std::size_t trials, std::uint64_t seed, bool corrupt) {
  const FrobeniusStructure F = load_structure(load_algebra(alg));
  const OpenClosedComplex c = load_complex(cpx, builtin_spec);
  StateSumOptions opts;
  if (corrupt) {
    Matrix g = F.pairing_inverse();
    g(0, 0) += Scalar::one(F.field());
    opts.copairing = g;
  }
  const Morphism base = state_sum_raw(F, c, opts);
  Json verdicts = Json::array();
  bool all_equal = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const OpenClosedComplex m = random_moves(c, seed + t, moves);
    const bool eq = state_sum_raw(F, m, opts).matrix == base.matrix;
    all_equal = all_equal && eq;
    verdicts.push_back(Json{{"trial", t}, {"seed", seed + t}, {"triangles", m.triangles.size()}, {"equal", eq}});
  }
  Json j;
  j["moves"] = moves;
  j["trials"] = verdicts;
  j["all_equal"] = all_equal;
  emit(j);
  return all_equal ? 0 : kMismatch;
}

int cmd_catalog(const std::string& what, std::vector<std::string> args, const std::string& field_opt) {
  if (what == "list") {
    Json j;
    j["algebras"] = {"matsum SIZES [WINDOWS]", "group_cyclic N [delta|canonical]", "group_symmetric M [delta|canonical]",
                     "groupoid_pair OBJECTS", "groupoid_transitive OBJECTS ORDER"};
    Json names = {"strip K L", "annulus K L", "closed_surface GENUS WINDOWS"};
    for (const auto& n : generator_names()) names.push_back(n);
    j["complexes"] = names;
    emit(j);
    return 0;
  }
  if (args.empty()) throw input_error("BadParams", "catalog " + what + " needs a name");
  const std::string name = args.front();
  args.erase(args.begin());
  if (what == "algebra") {
    FieldSpec field = FieldSpec::rational();
    if (!field_opt.empty()) field = FieldSpec::parse(field_opt);
    if (!args.empty()) {
      const auto& last = args.back();
      const bool textual = last == "rational" || last == "Q" || last.rfind("prime:", 0) == 0 || last.rfind("F_", 0) == 0;
      if (textual) {
        field = FieldSpec::parse(last);
        args.pop_back();
      }
    }
    std::cout << dump(algebra_file_to_json(algebra_file_from_catalog(catalog_algebra(name, args, field)))) << "\n";
    return 0;
  }
  if (what == "complex") {
    std::vector<std::size_t> params;
    for (const auto& s : args) {
      try {
        std::size_t pos = 0;
        params.push_back(std::stoul(s, &pos));
        if (pos != s.size()) throw std::invalid_argument(s);
      } catch (const std::exception&) {
        throw input_error("BadParams", "expected a non-negative integer, got '" + s + "'");
      }
    }
    std::cout << dump(complex_to_json(builtin(name, params))) << "\n";
    return 0;
  }
  throw input_error("BadParams", "catalog expects algebra, complex or list");
}

int report_error(const Error& e) {
  const int code = e.category() == ErrorCategory::Math ? 2 : 1;
  Json j{{"error", e.kind()}, {"detail", e.detail()}, {"exit_code", code}};
  if (g_json)
    std::cout << dump(j) << "\n";
  else
    std::cerr << "error: " << e.kind() << ": " << e.detail() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledgeable Frobenius algebras and state sums on open-closed cobordisms"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Print JSON");

  std::string algebra_path, complex_path, builtin_spec, mode = "full", field_opt, what;
  std::vector<std::string> cat_args;
  std::size_t genus = 0, windows = 0, moves = 30, trials = 20;
  std::uint64_t seed = 1;
  bool oracle = false, corrupt = false, random_order = false, serial = false;

  auto* alg = app.add_subcommand("algebra", "Algebra files");
  alg->require_subcommand(1);
  auto* alg_check = alg->add_subcommand("check", "Dimension, centre, separability, window");
  alg_check->add_option("file", algebra_path)->required();

  auto* frob = app.add_subcommand("frobenius", "Frobenius structure");
  frob->require_subcommand(1);
  auto* frob_show = frob->add_subcommand("show", "Counit, pairing, copairing, window and axioms");
  frob_show->add_option("file", algebra_path)->required();

  auto* know = app.add_subcommand("knowledgeable", "Knowledgeable Frobenius algebra of the split idempotent");
  know->add_option("file", algebra_path)->required();

  auto add_complex = [&](CLI::App* sub) {
    sub->add_option("--complex", complex_path, "Complex file");
    sub->add_option("--builtin", builtin_spec, "Builtin complex, e.g. \"strip 2 3\"");
  };

  auto* ev = app.add_subcommand("eval", "State sum of a triangulated cobordism");
  ev->add_option("--algebra", algebra_path)->required();
  add_complex(ev);
  ev->add_option("--mode", mode)->check(CLI::IsMember({"raw", "reduced", "full"}));
  ev->add_flag("--random-order", random_order, "Contract in a random order");
  ev->add_option("--seed", seed);
  ev->add_flag("--serial", serial, "Disable parallel contraction");

  auto* surf = app.add_subcommand("surface", "Closed surface invariant");
  surf->add_option("--algebra", algebra_path)->required();
  surf->add_option("--genus", genus)->required();
  surf->add_option("--windows", windows)->required();
  surf->add_flag("--oracle", oracle, "Compare with the closed forms");

  auto* fz = app.add_subcommand("fuzz", "Random moves leave the raw state sum unchanged");
  fz->add_option("--algebra", algebra_path)->required();
  add_complex(fz);
  fz->add_option("--moves", moves);
  fz->add_option("--trials", trials);
  fz->add_option("--seed", seed);
  fz->add_flag("--corrupt-delta", corrupt, "Perturb the copairing (negative control)");

  auto* cat = app.add_subcommand("catalog", "Write catalog algebras and builtin complexes");
  cat->add_option("what", what)->required()->check(CLI::IsMember({"algebra", "complex", "list"}));
  cat->add_option("args", cat_args);
  cat->add_option("--field", field_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*alg_check) return cmd_algebra_check(algebra_path);
    if (*frob_show) return cmd_frobenius_show(algebra_path);
    if (*know) return cmd_knowledgeable(algebra_path);
    if (*ev) return cmd_eval(algebra_path, complex_path, builtin_spec, mode, contract_options(random_order, seed, serial));
    if (*surf) return cmd_surface(algebra_path, genus, windows, oracle);
    if (*fz) return cmd_fuzz(algebra_path, complex_path, builtin_spec, moves, trials, seed, corrupt);
    if (*cat) return cmd_catalog(what, cat_args, field_opt);
  } catch (const Error& e) {
    return report_error(e);
  }
  return 1;
}
