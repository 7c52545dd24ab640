#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "novikov/complexes/chain_complex.hpp"
#include "novikov/conley/conley_index.hpp"
#include "novikov/flows/chain_graph.hpp"
#include "novikov/flows/models.hpp"
#include "novikov/report/morse_report.hpp"
#include "novikov/twisted/novikov.hpp"
#include "novikov/twisted/weighted_cw.hpp"

namespace novikov::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Bad input: unreadable file, malformed JSON or a schema violation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Schema violation at a JSON pointer.
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& pointer, const std::string& what)
      : InputError((pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Parses text; malformed JSON raises InputError naming line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// Throws SchemaError unless "schema_version" is present and supported.
void check_version(const Json& j);

struct ComplexInput {
  twisted::WeightedCWComplex complex;
  std::optional<twisted::LocalSystem> local_system;
};

ComplexInput parse_complex(const Json& j);
std::vector<conley::InvariantSetDescriptor> parse_descriptors(const Json& j);

/// Flow file: registry model plus optional overrides of params, plan and
/// cocycle; "reverse": true runs time backwards.
flows::BuiltinModel parse_flow(const Json& j);

/// "2", "3/2" or "2,-1/3": one nonzero rational per variable.
twisted::Point parse_point(const std::string& text);
/// "1,2,1" -> {1, 2, 1}.
std::vector<std::size_t> parse_counts(const std::string& text);

std::string point_string(const twisted::Point& a);
/// Exact rationals as strings, e.g. ["2", "3/2"].
Json point_json(const twisted::Point& a);

Json to_json(const std::vector<complexes::HomologyGroup>& h);
Json to_json(const twisted::NovikovReport& r);
Json to_json(const flows::CertReport& r);
Json to_json(const flows::Detection& d);
Json to_json(const flows::ComponentReport& r);
Json to_json(const flows::PiMorseReport& r);
Json to_json(const report::MorseVerdict& v);
Json to_json(const complexes::Polynomial& p);

}  // namespace novikov::cli
