#include "nilcoh/algebra_io.hpp"

#include "nilcoh/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace nilcoh {

namespace {

template <class T>
T read_scalar(const YAML::Node& node, const std::string& what) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw Error(ErrorKind::parse, "bad value for '" + what + "'");
  }
}

}  // namespace

AlgebraQ parse_algebra(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed algebra file: ") + e.what());
  }
  if (!root.IsMap()) throw Error(ErrorKind::parse, "algebra file must be a mapping");
  if (!root["dim"]) throw Error(ErrorKind::parse, "missing 'dim'");
  if (!root["layers"] || !root["layers"].IsSequence()) throw Error(ErrorKind::parse, "missing 'layers' list");

  const int dim = read_scalar<int>(root["dim"], "dim");
  std::vector<int> layers;
  for (const auto& n : root["layers"]) layers.push_back(read_scalar<int>(n, "layers"));

  std::vector<std::string> labels;
  if (root["labels"]) {
    for (const auto& n : root["labels"]) labels.push_back(read_scalar<std::string>(n, "labels"));
  }

  std::vector<BracketEntry<Rational>> entries;
  if (root["brackets"]) {
    if (!root["brackets"].IsSequence()) throw Error(ErrorKind::parse, "'brackets' must be a list");
    for (const auto& row : root["brackets"]) {
      if (!row.IsSequence() || row.size() != 4) throw Error(ErrorKind::parse, "bracket entries must be [i, j, l, p/q]");
      const int i = read_scalar<int>(row[0], "brackets");
      const int j = read_scalar<int>(row[1], "brackets");
      const int l = read_scalar<int>(row[2], "brackets");
      const Rational c = parse_rational(read_scalar<std::string>(row[3], "brackets"));
      entries.push_back({i - 1, j - 1, l - 1, c});
    }
  }

  AlgebraQ alg(dim, layers, entries, labels, root["name"] ? read_scalar<std::string>(root["name"], "name") : "");
  if (root["step"] && read_scalar<int>(root["step"], "step") != alg.step())
    throw Error(ErrorKind::validation, "declared step " + root["step"].as<std::string>() +
                                           " differs from the computed step " + std::to_string(alg.step()));
  return alg;
}

AlgebraQ load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open algebra file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

std::string format_algebra(const AlgebraQ& alg) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  if (!alg.name().empty()) out << YAML::Key << "name" << YAML::Value << alg.name();
  out << YAML::Key << "dim" << YAML::Value << alg.dim();
  out << YAML::Key << "step" << YAML::Value << alg.step();
  out << YAML::Key << "layers" << YAML::Value << YAML::Flow << alg.layers();
  out << YAML::Key << "labels" << YAML::Value << YAML::Flow << alg.labels();
  out << YAML::Key << "brackets" << YAML::Value << YAML::BeginSeq;
  for (const auto& e : alg.bracket_entries()) {
    out << YAML::Flow << YAML::BeginSeq << e.i + 1 << e.j + 1 << e.l + 1 << YAML::DoubleQuoted
        << to_string(e.coefficient) << YAML::EndSeq;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace nilcoh
