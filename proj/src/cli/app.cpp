#include "superpair/cli/app.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "superpair/cli/report_io.hpp"

namespace superpair::cli {

namespace {

struct Settings {
  std::string format = "json";
  unsigned jobs = 1;
  bool all_witnesses = false;
  bool timing = false;

  CheckOptions options() const { return CheckOptions{jobs == 0 ? 1U : jobs, all_witnesses}; }
};

struct Outcome {
  std::string command;
  Report report;
  Json data = Json::object();
};

const char* const kTensorBasis = "x1 (x) x2 at index a * dim(V2) + b on both sides";
const char* const kRightTensor =
    "O1 (x)_right O2 is O2 (x) O1 transported along x (x) y |-> eta_{x,y} y (x) x";

Json ring_element_json(const RingElement& r) { return Json::array({r.a().to_string(), r.b().to_string()}); }

template <class E>
Json any_matrix_json(const BasicMatrix<E>& m) {
  if constexpr (std::is_same_v<E, Scalar>) {
    return matrix_to_json(m);
  } else {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        Json e = Json::array({i, j});
        for (auto& x : ring_element_json(m(i, j))) e.push_back(x);
        entries.push_back(std::move(e));
      }
    }
    Json out = Json::object();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(entries);
    return out;
  }
}

/// Writes the object to `path`, or embeds it under "object" when no path is given.
void attach(Outcome& o, const ObjectFile& file, const std::string& path) {
  if (path.empty()) {
    o.data["object"] = to_json(file);
  } else {
    write_text_file(path, serialize(file));
    o.data["output"] = path;
  }
}

enum class Kind { triple, object };

Kind kind_of(const ObjectFile& f, const std::string& path) {
  if (f.has_triple() && !f.has_object()) return Kind::triple;
  if (f.has_object() && !f.has_triple()) return Kind::object;
  if (f.has_object()) throw SchemaError(path, "file holds both a triple and a pair object; keep one");
  throw SchemaError(path, "file holds neither a complete triple (lie, module, form) nor an object (gjsp, pairing)");
}

const Json& block(const Json& doc, const std::string& where, const std::string& key) {
  if (!doc.is_object() || !doc.contains(key)) throw SchemaError(where, "missing key \"" + key + "\"");
  return doc.at(key);
}

Outcome cmd_check(const std::string& what, const std::string& path, const Settings& s) {
  const ObjectFile f = load_object_file(path);
  Outcome o{"check " + what, {}};
  auto need = [&](bool ok, const char* name) {
    if (!ok) throw SchemaError(path, std::string("missing \"") + name + "\" block");
  };
  if (what == "lie") {
    need(f.lie.has_value(), "lie");
    o.report = check_lie_axioms(*f.lie, s.options());
  } else if (what == "module") {
    need(f.module.has_value(), "module");
    o.report = check_module(*f.module, s.options());
  } else if (what == "form") {
    need(f.form.has_value(), "form");
    o.report = check_form_b(*f.lie, *f.form, s.options());
  } else if (what == "gjsp") {
    need(f.gjsp.has_value(), "gjsp");
    o.report = check_fundamental_identity(*f.gjsp, s.options());
  } else {
    need(f.pairing.has_value(), "pairing");
    o.report = check_pairing_properties(f.object(), s.options());
  }
  return o;
}

Outcome cmd_forward(const std::string& path, const std::string& out, const Settings& s) {
  const MetricModuleTriple t = load_object_file(path).triple();
  Outcome o{"forward", forward_preconditions(t, s.options())};
  if (!o.report.passed()) return o;
  const GjspObject v = faulkner_forward(t, s.options());
  o.report.append(check_object(v, s.options()), "result");
  attach(o, ObjectFile::from(v), out);
  return o;
}

Outcome cmd_backward(const std::string& path, const std::string& out, const Settings& s) {
  const GjspObject v = load_object_file(path).object();
  const BackwardResult b = faulkner_backward(v, s.options());
  Outcome o{"backward", b.audit};
  o.report.append(check_triple(b.triple, s.options()), "result");
  Json gens = Json::array();
  for (const auto& [i, j] : b.inner.basis_generators) gens.push_back(Json::array({i, j}));
  o.data["basis_generators"] = std::move(gens);
  attach(o, ObjectFile::from(b.triple), out);
  return o;
}

Outcome cmd_roundtrip(const std::string& path, const Settings& s) {
  const ObjectFile f = load_object_file(path);
  Outcome o{"roundtrip", {}};
  Json id = Json::object();
  if (kind_of(f, path) == Kind::triple) {
    const CorrespondenceWitness w = roundtrip_check(f.triple(), s.options());
    o.report = w.report;
    id["algebra"] = matrix_to_json(w.algebra_map);
    id["module"] = matrix_to_json(w.module_map);
  } else {
    const CorrespondenceWitness w = roundtrip_check(f.object(), s.options());
    o.report = w.report;
    id["pair_map"] = pair_map_to_json(w.pair_map);
  }
  o.data["identification"] = std::move(id);
  return o;
}

Json tensor_conventions(bool right) {
  Json c = Json::object();
  c["basis"] = kTensorBasis;
  c["product"] = right ? "right" : "left";
  c["right_tensor"] = kRightTensor;
  return c;
}

Outcome cmd_tensor(const std::string& p1, const std::string& p2, bool right, const std::string& out,
                   const Settings& s) {
  const GjspObject a = load_object_file(p1).object();
  const GjspObject b = load_object_file(p2).object();
  const GjspObject t = right ? gjsp_tensor_right(a, b) : gjsp_tensor(a, b);
  Outcome o{right ? "tensor --right" : "tensor", {}};
  o.report.append(check_object(t, s.options()), "result");
  o.data["conventions"] = tensor_conventions(right);
  attach(o, ObjectFile::from(t), out);
  return o;
}

Outcome cmd_dsum(const std::vector<std::string>& paths, const std::string& out, const Settings& s) {
  std::vector<GjspObject> parts;
  for (const auto& p : paths) parts.push_back(load_object_file(p).object());
  const GjspObject sum = gjsp_direct_sum(parts);
  Outcome o{"dsum", {}};
  o.report.append(check_object(sum, s.options()), "result");
  attach(o, ObjectFile::from(sum), out);
  return o;
}

Outcome cmd_shift(const std::string& path, const std::string& lambda, int parity, const std::string& out,
                  const Settings& s) {
  const GjspObject v = load_object_file(path).object();
  Scalar l;
  try {
    l = v.pair.field().parse_scalar(lambda);
  } catch (const std::exception& e) {
    throw SchemaError("--lambda", e.what());
  }
  const ShiftParameter alpha{l, static_cast<Parity>(parity)};
  const GjspObject shifted = tensor_shift(v, alpha);
  Outcome o{"shift", {}};
  o.report.append(check_object(shifted, s.options()), "result");
  o.data["parameter"] = Json::object({{"lambda", l.to_string()}, {"parity", parity}});
  attach(o, ObjectFile::from(shifted), out);
  return o;
}

Outcome cmd_iso(const std::string& p1, const std::string& p2, const std::string& map_path, const Settings& s) {
  const ObjectFile a = load_object_file(p1);
  const ObjectFile b = load_object_file(p2);
  const Json m = load_json(map_path);
  const Field& F = a.field;
  Outcome o{"iso", {}};
  const Kind ka = kind_of(a, p1);
  if (ka != kind_of(b, p2)) throw SchemaError(p2, "both files must hold the same kind of structure");
  if (ka == Kind::object) {
    const PairMap phi{parse_matrix(block(m, map_path, "minus"), map_path + ":/minus", F),
                      parse_matrix(block(m, map_path, "plus"), map_path + ":/plus", F)};
    o.report = check_pair_hom(phi, *a.gjsp, *b.gjsp, &*a.pairing, &*b.pairing, s.options());
  } else {
    const TripleMap<Scalar> phi{parse_matrix(block(m, map_path, "algebra"), map_path + ":/algebra", F),
                                parse_matrix(block(m, map_path, "module"), map_path + ":/module", F)};
    o.report = check_triple_iso(a.triple(), b.triple(), phi, s.options());
  }
  return o;
}

template <class E>
Outcome transfer(const ObjectFile& f, const std::string& path, const Json& m, const std::string& map_path,
                 const std::function<BasicMatrix<E>(const Json&, const std::string&)>& parse, const Settings& s) {
  Outcome o{"aut-transfer", {}};
  if (kind_of(f, path) == Kind::object) {
    const BasicPairMap<E> phi{parse(block(m, map_path, "minus"), map_path + ":/minus"),
                              parse(block(m, map_path, "plus"), map_path + ":/plus")};
    const TransferResult<E> r = transfer_aut(phi, f.object(), s.options());
    o.report = r.report;
    if (r.triple_map) {
      o.data["transferred"] = Json::object(
          {{"algebra", any_matrix_json(r.triple_map->algebra)}, {"module", any_matrix_json(r.triple_map->module)}});
    }
  } else {
    const TripleMap<E> phi{parse(block(m, map_path, "algebra"), map_path + ":/algebra"),
                           parse(block(m, map_path, "module"), map_path + ":/module")};
    const TransferResult<E> r = transfer_aut(phi, f.triple(), s.options());
    o.report = r.report;
    if (r.pair_map) {
      o.data["transferred"] =
          Json::object({{"minus", any_matrix_json(r.pair_map->minus)}, {"plus", any_matrix_json(r.pair_map->plus)}});
    }
  }
  return o;
}

Outcome cmd_aut_transfer(const std::string& path, const std::string& phi_path, const std::string& ring_text,
                         const Settings& s) {
  const ObjectFile f = load_object_file(path);
  const Json m = load_json(phi_path);
  const Field F = f.field;
  if (ring_text.empty()) {
    Outcome o = transfer<Scalar>(
        f, path, m, phi_path, [&](const Json& n, const std::string& w) { return parse_matrix(n, w, F); }, s);
    o.data["ring"] = F.describe();
    return o;
  }
  std::shared_ptr<const QuadraticRing> ring;
  try {
    ring = QuadraticRing::parse(ring_text, F);
  } catch (const std::exception& e) {
    throw SchemaError("--ring", e.what());
  }
  Outcome o = transfer<RingElement>(
      f, path, m, phi_path, [&](const Json& n, const std::string& w) { return parse_ring_matrix(n, w, F, ring); },
      s);
  o.data["ring"] = ring->describe();
  return o;
}

Outcome cmd_catalog(const std::string& name, const std::vector<std::string>& params, const std::string& out,
                    const Settings& s) {
  Outcome o{"catalog " + name, {}};
  if (name == "list") {
    Json names = Json::array();
    for (const auto& [n, p] : catalog_names()) names.push_back(Json::object({{"name", n}, {"parameters", p}}));
    o.data["entries"] = std::move(names);
    return o;
  }
  std::optional<CatalogEntry> entry;
  try {
    entry.emplace(build_catalog_entry(name, params, default_field()));
  } catch (const PreconditionError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw SchemaError("catalog", ex.what());
  }
  const CatalogEntry& e = *entry;
  if (const auto* v = std::get_if<GjspObject>(&e.object)) {
    o.report.append(check_object(*v, s.options()), "result");
    attach(o, ObjectFile::from(*v), out);
  } else {
    const auto& t = std::get<MetricModuleTriple>(e.object);
    o.report.append(check_triple(t, s.options()), "result");
    attach(o, ObjectFile::from(t), out);
  }
  o.data["parameters"] = params;
  o.data["note"] = e.note;
  return o;
}

Outcome cmd_factorize(const std::string& path, const std::string& split_path, const std::string& w_path,
                      const Settings& s) {
  const GjspObject v = load_object_file(path).object();
  const Field& F = v.pair.field();
  const Json split = load_json(split_path);
  const Json wdoc = load_json(w_path);
  const std::size_t k = instr(v.pair).basis.size();
  FactorSplit fs;
  fs.l1 = parse_vectors(block(split, split_path, "l1"), split_path + ":/l1", F, k);
  fs.l2 = parse_vectors(block(split, split_path, "l2"), split_path + ":/l2", F, k);
  fs.w = parse_vectors(block(wdoc, w_path, "w"), w_path + ":/w", F, v.pair.dim(Sign::plus));
  const Factorization fz = tensor_factorize(v, fs, s.options());
  Outcome o{"factorize", fz.report};
  o.data["factors"] = Json::object({{"first", to_json(ObjectFile::from(fz.first))},
                                    {"second", to_json(ObjectFile::from(fz.second))}});
  o.data["iso"] = pair_map_to_json(fz.iso);
  o.data["conventions"] = tensor_conventions(false);
  return o;
}

void emit(std::ostream& out, const Settings& s, const std::string& command, Status status, const Report& report,
          const Json& data) {
  if (s.format == "text") {
    out << report_text(command, status, report, data);
  } else {
    out << dump_canonical(report_document(command, status, report, data));
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier and constructor for metric module triples and pair objects"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--report", s.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", s.jobs, "Worker threads for identity sweeps")->check(CLI::PositiveNumber);
  app.add_flag("--all-witnesses", s.all_witnesses, "List every failing tuple instead of the first");
  app.add_flag("--timing", s.timing, "Add elapsed time to the report");

  std::function<Outcome()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->fallthrough();
    return c;
  };

  std::string kind, file, file2, map_file, out_path, lambda, ring, split_file, w_file, name;
  std::vector<std::string> files, params;
  int parity = 0;
  bool right = false;

  auto* check = sub("check", "Check the axioms of one block of a file");
  check->add_option("kind", kind)->required()->check(CLI::IsMember({"lie", "module", "form", "gjsp", "pairing"}));
  check->add_option("file", file)->required();
  check->callback([&] { action = [&] { return cmd_check(kind, file, s); }; });

  auto* forward = sub("forward", "Pair object of a metric module triple");
  forward->add_option("file", file)->required();
  forward->add_option("-o,--output", out_path);
  forward->callback([&] { action = [&] { return cmd_forward(file, out_path, s); }; });

  auto* backward = sub("backward", "Metric module triple of a pair object");
  backward->add_option("file", file)->required();
  backward->add_option("-o,--output", out_path);
  backward->callback([&] { action = [&] { return cmd_backward(file, out_path, s); }; });

  auto* roundtrip = sub("roundtrip", "Apply both constructions and compare with the start");
  roundtrip->add_option("file", file)->required();
  roundtrip->callback([&] { action = [&] { return cmd_roundtrip(file, s); }; });

  auto* tensor = sub("tensor", "Tensor product of two pair objects");
  tensor->add_option("file1", file)->required();
  tensor->add_option("file2", file2)->required();
  tensor->add_flag("--right", right, "Right tensor product");
  tensor->add_option("-o,--output", out_path);
  tensor->callback([&] { action = [&] { return cmd_tensor(file, file2, right, out_path, s); }; });

  auto* dsum = sub("dsum", "Direct sum of pair objects");
  dsum->add_option("files", files)->required();
  dsum->add_option("-o,--output", out_path);
  dsum->callback([&] { action = [&] { return cmd_dsum(files, out_path, s); }; });

  auto* shift = sub("shift", "Tensor-shift of a pair object");
  shift->add_option("file", file)->required();
  shift->add_option("--lambda", lambda)->required();
  shift->add_option("--parity", parity)->required()->check(CLI::IsMember({0, 1}));
  shift->add_option("-o,--output", out_path);
  shift->callback([&] { action = [&] { return cmd_shift(file, lambda, parity, out_path, s); }; });

  auto* iso = sub("iso", "Check a map between two objects or two triples");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();
  iso->add_option("--map", map_file)->required();
  iso->callback([&] { action = [&] { return cmd_iso(file, file2, map_file, s); }; });

  auto* aut = sub("aut-transfer", "Transfer an automorphism across the correspondence");
  aut->add_option("file", file)->required();
  aut->add_option("--phi", map_file)->required();
  aut->add_option("--ring", ring, "dual or quad:C1,C0 for t^2 + C1 t + C0");
  aut->callback([&] { action = [&] { return cmd_aut_transfer(file, map_file, ring, s); }; });

  auto* catalog = sub("catalog", "Build a catalog fixture (NAME list shows the names)");
  catalog->add_option("name", name)->required();
  catalog->add_option("params", params);
  catalog->add_option("-o,--output", out_path);
  catalog->callback([&] { action = [&] { return cmd_catalog(name, params, out_path, s); }; });

  auto* factorize = sub("factorize", "Factor an object as a tensor product");
  factorize->add_option("file", file)->required();
  factorize->add_option("--split", split_file)->required();
  factorize->add_option("--w", w_file)->required();
  factorize->callback([&] { action = [&] { return cmd_factorize(file, split_file, w_file, s); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  if (command == "check") command += " " + kind;
  if (command == "catalog") command += " " + name;
  auto finish = [&](Status status, const Report& report, Json data) {
    if (s.timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      data["timing"] = Json::object({{"elapsed_ms", ms.count()}, {"jobs", s.jobs}});
    }
    emit(out, s, command, status, report, data);
    return status == Status::pass ? 0 : status == Status::fail ? 1 : 2;
  };
  try {
    Outcome o = action();
    command = o.command;
    return finish(o.report.passed() ? Status::pass : Status::fail, o.report, std::move(o.data));
  } catch (const PreconditionError& e) {
    return finish(Status::fail, e.report(), Json::object({{"error", e.what()}}));
  } catch (const NotClosedError& e) {
    Report r;
    r.add(single_result("closure", false, e.what()));
    return finish(Status::fail, r, Json::object());
  } catch (const SchemaError& e) {
    return finish(Status::input_error, {}, Json::object({{"error", e.what()}}));
  } catch (const IoError& e) {
    return finish(Status::input_error, {}, Json::object({{"error", e.what()}}));
  } catch (const std::invalid_argument& e) {
    return finish(Status::input_error, {}, Json::object({{"error", e.what()}}));
  } catch (const std::out_of_range& e) {
    return finish(Status::input_error, {}, Json::object({{"error", e.what()}}));
  } catch (const std::domain_error& e) {
    return finish(Status::input_error, {}, Json::object({{"error", e.what()}}));
  }
}

}  // namespace superpair::cli
