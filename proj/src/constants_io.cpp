#include "octoloop/constants_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace octoloop {

using nlohmann::ordered_json;

StructureConstants<Rational> parse_structure_constants(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("constants file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
    throw input_error("constants file: missing integer \"dim\"");
  const int n = doc["dim"].get<int>();
  if (n <= 0) throw input_error("constants file: \"dim\" must be positive");

  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array())
      throw input_error("constants file: \"basis\" must be an array of names");
    for (const auto& b : doc["basis"]) basis.push_back(b.get<std::string>());
    if (static_cast<int>(basis.size()) != n)
      throw input_error("constants file: \"basis\" length disagrees with \"dim\"");
  }

  std::vector<Rational> dense(static_cast<size_t>(n) * n * n, Rational(0));
  std::vector<char> seen(static_cast<size_t>(n) * n * n, 0);

  if (doc.contains("entries")) {
    if (!doc["entries"].is_array())
      throw input_error("constants file: \"entries\" must be an array");
    int index = 0;
    for (const auto& entry : doc["entries"]) {
      const std::string where = "entry " + std::to_string(index);
      if (!entry.is_array() || entry.size() != 4)
        throw input_error("constants file: " + where + " is not [i, j, k, value]");
      const int i = entry[0].get<int>();
      const int j = entry[1].get<int>();
      const int k = entry[2].get<int>();
      if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
        throw input_error("constants file: " + where + " has an index out of range");
      if (!entry[3].is_string())
        throw input_error("constants file: " + where + " value must be a rational string");
      Rational value;
      try {
        value = parse_rational(entry[3].get<std::string>());
      } catch (const std::exception& e) {
        throw input_error("constants file: " + where + ": " + e.what());
      }
      const size_t pos = static_cast<size_t>((i * n + j) * n + k);
      const size_t mirror = static_cast<size_t>((i * n + k) * n + j);
      if (seen[pos])
        throw input_error("constants file: " + where + " duplicates (" +
                          std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
      if (j != k && seen[mirror])
        throw input_error("constants file: " + where + " names both (" +
                          std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ") and its antisymmetric image");
      if (j == k && !is_zero(value))
        throw input_error("constants file: " + where +
                          " gives a nonzero diagonal (j == k) entry");
      seen[pos] = 1;
      dense[pos] = value;
      if (j != k) {
        seen[mirror] = 1;
        dense[mirror] = -value;
      }
      ++index;
    }
  }

  try {
    return make_structure_constants<Rational>(n, std::move(dense), std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw input_error(std::string("constants file: ") + e.what());
  }
}

StructureConstants<Rational> load_structure_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open constants file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure_constants(buf.str());
}

std::string render_structure_constants(const StructureConstants<Rational>& sc,
                                       const std::vector<std::string>& comment_lines) {
  ordered_json doc;
  if (!comment_lines.empty()) doc["comment"] = comment_lines;
  doc["dim"] = sc.dim;
  if (!sc.basis.empty()) doc["basis"] = sc.basis;
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < sc.dim; ++i)
    for (int j = 0; j < sc.dim; ++j)
      for (int k = j + 1; k < sc.dim; ++k)
        if (!is_zero(sc.at(i, j, k)))
          entries.push_back({i, j, k, to_string(sc.at(i, j, k))});
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

void save_structure_constants(const std::string& path,
                              const StructureConstants<Rational>& sc,
                              const std::vector<std::string>& comment_lines) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file: " + path);
  out << render_structure_constants(sc, comment_lines);
  if (!out) throw input_error("failed writing output file: " + path);
}

}  // namespace octoloop
