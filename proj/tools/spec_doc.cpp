#include "spec_doc.hpp"

#include <fstream>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

namespace jt::cli {

namespace {

[[noreturn]] void invalid(const std::string& source, const std::string& message) {
  throw Error(ErrorCode::InvalidSpec, source + ": " + message);
}

std::string string_value(const toml::node& node, const std::string& source, const std::string& key) {
  auto v = node.value<std::string>();
  if (!v || !node.is_string()) invalid(source, "'" + key + "' must be a string");
  return *v;
}

std::vector<std::string> string_array(const toml::node& node, const std::string& source, const std::string& key) {
  const auto* arr = node.as_array();
  if (!arr) invalid(source, "'" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : *arr) out.push_back(string_value(item, source, key));
  return out;
}

std::vector<int> int_array(const toml::node& node, const std::string& source, const std::string& key) {
  const auto* arr = node.as_array();
  if (!arr) invalid(source, "'" + key + "' must be an array of integers");
  std::vector<int> out;
  for (const auto& item : *arr) {
    if (!item.is_integer()) invalid(source, "'" + key + "' must be an array of integers");
    out.push_back(static_cast<int>(*item.value<std::int64_t>()));
  }
  return out;
}

mpq_class rational_value(const toml::node& node, const std::string& source, const std::string& key) {
  if (node.is_integer()) return mpq_class(static_cast<long>(*node.value<std::int64_t>()));
  if (node.is_string()) {
    try {
      return parse_rational(*node.value<std::string>());
    } catch (const Error& e) {
      invalid(source, "parameter '" + key + "': " + e.what());
    }
  }
  invalid(source, "parameter '" + key + "' must be an integer or a rational string");
}

}  // namespace

AlgebraSpecDoc parse_spec_doc(std::string_view text, const std::string& source) {
  toml::table table;
  try {
    table = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << e.description() << " (line " << e.source().begin.line << ", column " << e.source().begin.column << ")";
    invalid(source, msg.str());
  }
  static const std::set<std::string> known{"field",          "variables",  "weights",  "mode", "generators",
                                           "dual_generator", "parameters", "elements"};
  for (const auto& [key, node] : table)
    if (!known.count(std::string(key.str()))) invalid(source, "unknown key '" + std::string(key.str()) + "'");

  AlgebraSpecDoc doc;
  if (!table.contains("field")) invalid(source, "missing 'field'");
  doc.ring.field = FieldSpec::parse(string_value(*table.get("field"), source, "field"));
  if (!table.contains("variables")) invalid(source, "missing 'variables'");
  doc.ring.variables = string_array(*table.get("variables"), source, "variables");
  if (const auto* w = table.get("weights")) doc.ring.weights = int_array(*w, source, "weights");
  if (const auto* m = table.get("mode")) {
    auto mode = string_value(*m, source, "mode");
    if (mode == "graded")
      doc.ring.mode = RingMode::Graded;
    else if (mode == "local")
      doc.ring.mode = RingMode::Local;
    else
      invalid(source, "mode must be \"graded\" or \"local\"");
  }
  const bool has_gens = table.contains("generators"), has_dual = table.contains("dual_generator");
  if (has_gens == has_dual) invalid(source, "give exactly one of 'generators' and 'dual_generator'");
  if (has_gens) doc.generators = string_array(*table.get("generators"), source, "generators");
  if (has_dual) doc.dual_generator = string_value(*table.get("dual_generator"), source, "dual_generator");
  if (const auto* p = table.get("parameters")) {
    const auto* t = p->as_table();
    if (!t) invalid(source, "'parameters' must be a table");
    for (const auto& [key, node] : *t) doc.parameters[std::string(key.str())] = rational_value(node, source, std::string(key.str()));
  }
  if (const auto* e = table.get("elements")) {
    const auto* t = e->as_table();
    if (!t) invalid(source, "'elements' must be a table");
    for (const auto& [key, node] : *t) doc.elements[std::string(key.str())] = string_value(node, source, std::string(key.str()));
  }
  try {
    doc.ring.validate();
  } catch (const Error& e) {
    invalid(source, e.what());
  }
  return doc;
}

AlgebraSpecDoc load_spec_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidSpec, "cannot open spec file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_doc(buffer.str(), path);
}

}  // namespace jt::cli
