#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superpair/catalog/catalog.hpp"

namespace superpair::cli {

using Json = nlohmann::ordered_json;

/// Malformed input. `location` is a JSON pointer into the document, or
/// "line L, column C" for syntax errors.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string location, const std::string& message)
      : std::runtime_error((location.empty() ? "" : location + ": ") + message),
        location_(std::move(location)),
        message_(message) {}
  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  std::string location_;
  std::string message_;
};

/// Unreadable or missing file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed contents of an object file. Blocks are optional individually; a
/// triple needs lie, module and form, an object needs gjsp and pairing.
struct ObjectFile {
  Field field = Field::rationals();
  std::optional<LieHandle> lie;
  std::optional<SuperModule> module;
  std::optional<Matrix> form;
  std::optional<Gjsp> gjsp;
  std::optional<PairingForm> pairing;

  bool has_triple() const { return lie && module && form; }
  bool has_object() const { return gjsp && pairing; }
  /// Throw SchemaError naming the missing block.
  MetricModuleTriple triple() const;
  GjspObject object() const;

  static ObjectFile from(const MetricModuleTriple& t);
  static ObjectFile from(const GjspObject& o);
};

/// Default field for files without a "field" block and for catalog entries:
/// SUPERPAIR_FIELD ("rational", "prime:7", "F7"), else the rationals.
Field default_field();

ObjectFile parse_object(const Json& doc, const Field& fallback = default_field());
/// Parses text; syntax errors carry a line/column location.
ObjectFile parse_object_text(const std::string& text, const Field& fallback = default_field());
ObjectFile load_object_file(const std::string& path, const Field& fallback = default_field());

Json to_json(const ObjectFile& file);
/// Canonical text: sorted entries, canonical scalars, fixed layout, trailing newline.
std::string serialize(const ObjectFile& file);
void write_text_file(const std::string& path, const std::string& text);

/// Canonical JSON layout used for object files and reports: two-space indent,
/// arrays of scalars on one line.
std::string dump_canonical(const Json& value);

Json field_to_json(const Field& field);
Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
Json pair_map_to_json(const PairMap& phi);

/// Reads and parses a JSON file; I/O failures raise IoError, syntax errors SchemaError.
Json load_json(const std::string& path);

/// {"rows", "cols", "entries": [[i, j, "c"], ...]}. With a ring, entries may be
/// [i, j, "a", "b"] for a + b t.
Matrix parse_matrix(const Json& node, const std::string& where, const Field& field);
RingMatrix parse_ring_matrix(const Json& node, const std::string& where, const Field& field,
                             const std::shared_ptr<const QuadraticRing>& ring);
/// List of dense vectors of scalar strings, each of the given length.
std::vector<Vector> parse_vectors(const Json& node, const std::string& where, const Field& field, std::size_t length);

}  // namespace superpair::cli
