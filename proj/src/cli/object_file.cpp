#include "superpair/cli/object_file.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace superpair::cli {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t k) { return where + "/" + std::to_string(k); }

const Json& member(const Json& node, const std::string& where, const std::string& key) {
  if (!node.contains(key)) throw SchemaError(where, "missing key \"" + key + "\"");
  return node.at(key);
}

void require_object(const Json& node, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!node.is_object()) throw SchemaError(where, "expected an object");
  for (const auto& [key, value] : node.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw SchemaError(at(where, key), "unexpected key");
  }
}

const Json& require_array(const Json& node, const std::string& where) {
  if (!node.is_array()) throw SchemaError(where, "expected an array");
  return node;
}

std::size_t parse_index(const Json& node, const std::string& where, std::size_t bound) {
  if (!node.is_number_integer()) throw SchemaError(where, "expected a nonnegative integer index");
  if (node.is_number_integer() && !node.is_number_unsigned() && node.get<long long>() < 0) {
    throw SchemaError(where, "negative index");
  }
  const auto v = node.get<unsigned long long>();
  if (v >= bound) {
    throw SchemaError(where, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(v);
}

Scalar parse_scalar(const Json& node, const std::string& where, const Field& field) {
  if (!node.is_string()) throw SchemaError(where, "scalars must be strings such as \"-3/4\"");
  try {
    return field.parse_scalar(node.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(where, e.what());
  }
}

std::vector<Parity> parse_parities(const Json& node, const std::string& where) {
  require_array(node, where);
  std::vector<Parity> out;
  for (std::size_t k = 0; k < node.size(); ++k) {
    const Json& p = node[k];
    if (!p.is_number_integer() || (p.get<long long>() != 0 && p.get<long long>() != 1)) {
      throw SchemaError(at(where, k), "parity must be 0 or 1");
    }
    out.push_back(static_cast<Parity>(p.get<int>()));
  }
  return out;
}

template <std::size_t Order>
SparseTensor<Order> parse_tensor(const Json& node, const std::string& where, const Field& field,
                                 const std::array<std::size_t, Order>& extents) {
  require_array(node, where);
  std::vector<typename SparseTensor<Order>::Entry> entries;
  for (std::size_t k = 0; k < node.size(); ++k) {
    const std::string loc = at(where, k);
    const Json& e = node[k];
    if (!e.is_array() || e.size() != Order + 1) {
      throw SchemaError(loc, "expected [" + std::to_string(Order) + " indices, \"scalar\"]");
    }
    typename SparseTensor<Order>::Index idx{};
    for (std::size_t s = 0; s < Order; ++s) idx[s] = parse_index(e[s], at(loc, s), extents[s]);
    entries.push_back({idx, parse_scalar(e[Order], at(loc, Order), field)});
  }
  return SparseTensor<Order>(extents, std::move(entries));
}

template <std::size_t Order>
Json tensor_to_json(const SparseTensor<Order>& t) {
  Json out = Json::array();
  for (const auto& [idx, v] : t.entries()) {
    Json e = Json::array();
    for (std::size_t i : idx) e.push_back(i);
    e.push_back(v.to_string());
    out.push_back(std::move(e));
  }
  return out;
}

Json parities_to_json(const SuperSpace& s) {
  Json out = Json::array();
  for (Parity p : s.parities()) out.push_back(static_cast<int>(p));
  return out;
}

Json entries_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) out.push_back(Json::array({i, j, m(i, j).to_string()}));
    }
  }
  return out;
}

Matrix parse_entries(const Json& node, const std::string& where, const Field& field, std::size_t rows,
                     std::size_t cols) {
  require_array(node, where);
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < node.size(); ++k) {
    const std::string loc = at(where, k);
    const Json& e = node[k];
    if (!e.is_array() || e.size() != 3) throw SchemaError(loc, "expected [row, column, \"scalar\"]");
    const std::size_t i = parse_index(e[0], at(loc, 0), rows);
    const std::size_t j = parse_index(e[1], at(loc, 1), cols);
    m(i, j) += parse_scalar(e[2], at(loc, 2), field);
  }
  return m;
}

Field parse_field(const Json& node, const std::string& where) {
  require_object(node, where, {"kind", "p"});
  const Json& kind = member(node, where, "kind");
  if (kind == "rational") {
    if (node.contains("p")) throw SchemaError(at(where, "p"), "the rational field takes no characteristic");
    return Field::rationals();
  }
  if (kind != "prime") throw SchemaError(at(where, "kind"), "kind must be \"rational\" or \"prime\"");
  const Json& p = member(node, where, "p");
  if (!p.is_number_unsigned()) throw SchemaError(at(where, "p"), "expected a positive integer");
  try {
    return Field::prime(p.get<std::uint64_t>());
  } catch (const std::exception& e) {
    throw SchemaError(at(where, "p"), e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Locate the byte offset as line/column for the message.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col), "invalid JSON");
  }
}

void dump_into(std::string& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(key).dump() + ": ";
      dump_into(out, value, indent + 1);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && e.is_primitive();
    if (flat) {
      out += "[";
      for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      out += (k ? ",\n" : "") + inner;
      dump_into(out, v[k], indent + 1);
    }
    out += "\n" + pad + "]";
  } else {
    out += v.dump();
  }
}

}  // namespace

MetricModuleTriple ObjectFile::triple() const {
  if (!lie) throw SchemaError("", "a metric module triple needs a \"lie\" block");
  if (!module) throw SchemaError("", "a metric module triple needs a \"module\" block");
  if (!form) throw SchemaError("", "a metric module triple needs a \"form\" block");
  return MetricModuleTriple{*lie, *module, *form};
}

GjspObject ObjectFile::object() const {
  if (!gjsp) throw SchemaError("", "a pair object needs a \"gjsp\" block");
  if (!pairing) throw SchemaError("", "a pair object needs a \"pairing\" block");
  return GjspObject{*gjsp, *pairing};
}

ObjectFile ObjectFile::from(const MetricModuleTriple& t) {
  ObjectFile f;
  f.field = t.field();
  f.lie = t.algebra;
  f.module = t.module;
  f.form = t.form;
  return f;
}

ObjectFile ObjectFile::from(const GjspObject& o) {
  ObjectFile f;
  f.field = o.pair.field();
  f.gjsp = o.pair;
  f.pairing = o.pairing;
  return f;
}

Field default_field() {
  const char* env = std::getenv("SUPERPAIR_FIELD");
  if (env == nullptr || *env == '\0') return Field::rationals();
  try {
    return Field::parse(env);
  } catch (const std::exception& e) {
    throw SchemaError("SUPERPAIR_FIELD", e.what());
  }
}

ObjectFile parse_object(const Json& doc, const Field& fallback) {
  require_object(doc, "", {"field", "lie", "module", "form", "gjsp", "pairing"});
  ObjectFile f;
  f.field = doc.contains("field") ? parse_field(doc.at("field"), "/field") : fallback;
  const Field& F = f.field;
  if (doc.contains("lie")) {
    const Json& n = doc.at("lie");
    require_object(n, "/lie", {"parities", "bracket"});
    const SuperSpace space(parse_parities(member(n, "/lie", "parities"), "/lie/parities"));
    const std::size_t d = space.dim();
    f.lie = make_lie(F, space, parse_tensor<3>(member(n, "/lie", "bracket"), "/lie/bracket", F, {d, d, d}));
  }
  if (doc.contains("module")) {
    if (!f.lie) throw SchemaError("/module", "a module block needs a lie block");
    const Json& n = doc.at("module");
    require_object(n, "/module", {"parities", "action"});
    const SuperSpace space(parse_parities(member(n, "/module", "parities"), "/module/parities"));
    const std::size_t l = (*f.lie)->dim(), m = space.dim();
    f.module = SuperModule(*f.lie, space,
                           parse_tensor<3>(member(n, "/module", "action"), "/module/action", F, {l, m, m}));
  }
  if (doc.contains("form")) {
    if (!f.lie) throw SchemaError("/form", "a form block needs a lie block");
    const Json& n = doc.at("form");
    require_object(n, "/form", {"entries"});
    const std::size_t l = (*f.lie)->dim();
    f.form = parse_entries(member(n, "/form", "entries"), "/form/entries", F, l, l);
  }
  if (doc.contains("gjsp")) {
    const Json& n = doc.at("gjsp");
    require_object(n, "/gjsp", {"minus_parities", "plus_parities", "minus_product", "plus_product"});
    const SuperSpace minus(parse_parities(member(n, "/gjsp", "minus_parities"), "/gjsp/minus_parities"));
    const SuperSpace plus(parse_parities(member(n, "/gjsp", "plus_parities"), "/gjsp/plus_parities"));
    const std::size_t a = minus.dim(), b = plus.dim();
    auto tm = parse_tensor<4>(member(n, "/gjsp", "minus_product"), "/gjsp/minus_product", F, {a, b, a, a});
    auto tp = parse_tensor<4>(member(n, "/gjsp", "plus_product"), "/gjsp/plus_product", F, {b, a, b, b});
    f.gjsp = Gjsp(F, minus, plus, std::move(tm), std::move(tp));
  }
  if (doc.contains("pairing")) {
    if (!f.gjsp) throw SchemaError("/pairing", "a pairing block needs a gjsp block");
    const Json& n = doc.at("pairing");
    require_object(n, "/pairing", {"entries"});
    const SuperSpace& minus = f.gjsp->space(Sign::minus);
    const SuperSpace& plus = f.gjsp->space(Sign::plus);
    f.pairing = PairingForm(minus, plus,
                            parse_entries(member(n, "/pairing", "entries"), "/pairing/entries", F, minus.dim(),
                                          plus.dim()));
  }
  return f;
}

ObjectFile parse_object_text(const std::string& text, const Field& fallback) {
  return parse_object(parse_text(text), fallback);
}

Json load_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_text(text);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.location(), e.message());
  }
}

ObjectFile load_object_file(const std::string& path, const Field& fallback) {
  const Json doc = load_json(path);
  try {
    return parse_object(doc, fallback);
  } catch (const SchemaError& e) {
    throw SchemaError(path + ":" + (e.location().empty() ? "/" : e.location()), e.message());
  }
}

Json field_to_json(const Field& field) {
  Json out = Json::object();
  if (field.is_rational()) {
    out["kind"] = "rational";
  } else {
    out["kind"] = "prime";
    out["p"] = field.characteristic();
  }
  return out;
}

Json to_json(const ObjectFile& f) {
  Json out = Json::object();
  out["field"] = field_to_json(f.field);
  if (f.lie) {
    out["lie"] = Json::object();
    out["lie"]["parities"] = parities_to_json((*f.lie)->space());
    out["lie"]["bracket"] = tensor_to_json((*f.lie)->bracket_tensor());
  }
  if (f.module) {
    out["module"] = Json::object();
    out["module"]["parities"] = parities_to_json(f.module->space());
    out["module"]["action"] = tensor_to_json(f.module->action_tensor());
  }
  if (f.form) out["form"] = Json::object({{"entries", entries_to_json(*f.form)}});
  if (f.gjsp) {
    Json g = Json::object();
    g["minus_parities"] = parities_to_json(f.gjsp->space(Sign::minus));
    g["plus_parities"] = parities_to_json(f.gjsp->space(Sign::plus));
    g["minus_product"] = tensor_to_json(f.gjsp->product(Sign::minus));
    g["plus_product"] = tensor_to_json(f.gjsp->product(Sign::plus));
    out["gjsp"] = std::move(g);
  }
  if (f.pairing) out["pairing"] = Json::object({{"entries", entries_to_json(f.pairing->matrix)}});
  return out;
}

std::string dump_canonical(const Json& value) {
  std::string out;
  dump_into(out, value, 0);
  out += "\n";
  return out;
}

std::string serialize(const ObjectFile& file) { return dump_canonical(to_json(file)); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = entries_to_json(m);
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json pair_map_to_json(const PairMap& phi) {
  Json out = Json::object();
  out["minus"] = matrix_to_json(phi.minus);
  out["plus"] = matrix_to_json(phi.plus);
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> parse_shape(const Json& node, const std::string& where) {
  require_object(node, where, {"rows", "cols", "entries"});
  const Json& r = member(node, where, "rows");
  const Json& c = member(node, where, "cols");
  if (!r.is_number_unsigned()) throw SchemaError(at(where, "rows"), "expected a nonnegative integer");
  if (!c.is_number_unsigned()) throw SchemaError(at(where, "cols"), "expected a nonnegative integer");
  return {r.get<std::size_t>(), c.get<std::size_t>()};
}

}  // namespace

Matrix parse_matrix(const Json& node, const std::string& where, const Field& field) {
  const auto [rows, cols] = parse_shape(node, where);
  return parse_entries(member(node, where, "entries"), at(where, "entries"), field, rows, cols);
}

RingMatrix parse_ring_matrix(const Json& node, const std::string& where, const Field& field,
                             const std::shared_ptr<const QuadraticRing>& ring) {
  const auto [rows, cols] = parse_shape(node, where);
  const Json& entries = require_array(member(node, where, "entries"), at(where, "entries"));
  RingMatrix m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string loc = at(at(where, "entries"), k);
    const Json& e = entries[k];
    if (!e.is_array() || (e.size() != 3 && e.size() != 4)) {
      throw SchemaError(loc, "expected [row, column, \"a\"] or [row, column, \"a\", \"b\"]");
    }
    const std::size_t i = parse_index(e[0], at(loc, 0), rows);
    const std::size_t j = parse_index(e[1], at(loc, 1), cols);
    const Scalar a = parse_scalar(e[2], at(loc, 2), field);
    const Scalar b = e.size() == 4 ? parse_scalar(e[3], at(loc, 3), field) : field.zero();
    m(i, j) += RingElement(a, b, ring);
  }
  // Entries never written still need the ring attached for products.
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = RingElement(m(i, j).a(), m(i, j).b(), ring);
  }
  return m;
}

std::vector<Vector> parse_vectors(const Json& node, const std::string& where, const Field& field,
                                  std::size_t length) {
  require_array(node, where);
  std::vector<Vector> out;
  for (std::size_t k = 0; k < node.size(); ++k) {
    const std::string loc = at(where, k);
    const Json& v = node[k];
    if (!v.is_array() || v.size() != length) {
      throw SchemaError(loc, "expected a vector of " + std::to_string(length) + " scalars");
    }
    Vector x;
    for (std::size_t i = 0; i < length; ++i) x.push_back(parse_scalar(v[i], at(loc, i), field));
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace superpair::cli
