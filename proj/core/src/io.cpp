#include <lts/io.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace lts {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw InvalidInputError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

int int_field(const json& j, const char* name, int min_value) {
  const json& f = field(j, name);
  if (!f.is_number_integer()) {
    throw InvalidInputError(std::string("field \"") + name +
                            "\" must be an integer");
  }
  long long v = f.get<long long>();
  if (v < min_value || v > 1'000'000) {
    throw InvalidInputError(std::string("field \"") + name +
                            "\" is out of range");
  }
  return static_cast<int>(v);
}

std::string string_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) {
    throw InvalidInputError(std::string("field \"") + name +
                            "\" must be a string");
  }
  return f.get<std::string>();
}

void require_kind(const json& j, const char* expected) {
  if (!j.is_object()) {
    throw InvalidInputError("top-level JSON value must be an object");
  }
  std::string kind = string_field(j, "kind");
  if (kind != expected) {
    throw InvalidInputError("field \"kind\" must be \"" +
                            std::string(expected) + "\", got \"" + kind +
                            "\"");
  }
}

void require_rational_field_tag(const json& j) {
  std::string f = string_field(j, "field");
  if (f != "rational") {
    throw InvalidInputError(
        "field \"field\" must be \"rational\" (the only supported "
        "coefficient field)");
  }
}

Rational rational_entry(const json& j, const char* where) {
  if (!j.is_string()) {
    throw InvalidInputError(std::string(where) +
                            ": coefficients must be rational strings like "
                            "\"-2/3\"");
  }
  try {
    return rational_from_string(j.get<std::string>());
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(std::string(where) + ": " + e.what());
  }
}

int index_entry(const json& j, const char* where, int dim) {
  if (!j.is_number_integer()) {
    throw InvalidInputError(std::string(where) +
                            ": indices must be integers");
  }
  long long v = j.get<long long>();
  if (v < 0 || v >= dim) {
    throw InvalidInputError(std::string(where) + ": index " +
                            std::to_string(v) + " is out of range for "
                            "dimension " + std::to_string(dim));
  }
  return static_cast<int>(v);
}

}  // namespace

TripleSystem parse_algebra_json(const std::string& text) {
  json j = parse_text(text);
  require_kind(j, "triple_system");
  int dim = int_field(j, "dim", 1);
  require_rational_field_tag(j);

  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || static_cast<int>(it->size()) != dim) {
      throw InvalidInputError(
          "field \"basis\" must be an array of dim labels");
    }
    for (const json& b : *it) {
      if (!b.is_string()) {
        throw InvalidInputError("field \"basis\" must contain strings");
      }
    }
  }

  TripleSystem t(dim);
  const json& brackets = field(j, "brackets");
  if (!brackets.is_array()) {
    throw InvalidInputError("field \"brackets\" must be an array");
  }
  std::set<std::array<int, 3>> seen;
  for (const json& entry : brackets) {
    if (!entry.is_object()) {
      throw InvalidInputError("\"brackets\" entries must be objects");
    }
    const json& args = field(entry, "args");
    if (!args.is_array() || args.size() != 3) {
      throw InvalidInputError(
          "\"brackets\" entry: \"args\" must be an array of three indices");
    }
    std::array<int, 3> ijk{};
    for (int s = 0; s < 3; ++s) {
      ijk[s] = index_entry(args[s], "\"brackets\" entry \"args\"", dim);
    }
    if (!seen.insert(ijk).second) {
      throw InvalidInputError(
          "\"brackets\" lists args [" + std::to_string(ijk[0]) + ", " +
          std::to_string(ijk[1]) + ", " + std::to_string(ijk[2]) +
          "] more than once");
    }
    const json& value = field(entry, "value");
    if (!value.is_object()) {
      throw InvalidInputError(
          "\"brackets\" entry: \"value\" must map output indices to "
          "rational strings");
    }
    Vec v = zero_vec(dim);
    for (auto it = value.begin(); it != value.end(); ++it) {
      int out;
      try {
        std::size_t used = 0;
        out = std::stoi(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument(it.key());
      } catch (const std::exception&) {
        throw InvalidInputError(
            "\"value\" keys must be decimal output indices, got \"" +
            it.key() + "\"");
      }
      if (out < 0 || out >= dim) {
        throw InvalidInputError("\"value\" output index " +
                                std::to_string(out) +
                                " is out of range for dimension " +
                                std::to_string(dim));
      }
      v[out] = rational_entry(*it, "\"value\" entry");
    }
    t.set_bracket(ijk[0], ijk[1], ijk[2], v);
  }
  return t;
}

LinearMap parse_map_json(const std::string& text) {
  json j = parse_text(text);
  require_kind(j, "linear_map");
  int rows = int_field(j, "rows", 1);
  int cols = int_field(j, "cols", 1);
  const json& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows) {
    throw InvalidInputError(
        "field \"entries\" must be an array of rows rows");
  }
  LinearMap a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw InvalidInputError("\"entries\" row " + std::to_string(i) +
                              " must have cols entries");
    }
    for (int k = 0; k < cols; ++k) {
      a.at(i, k) = rational_entry(row[k], "\"entries\" coefficient");
    }
  }
  return a;
}

Representation parse_representation_json(const std::string& text) {
  json j = parse_text(text);
  require_kind(j, "representation");
  int base = int_field(j, "base_dim", 1);
  int carrier = int_field(j, "carrier_dim", 1);
  require_rational_field_tag(j);

  Representation r(base, carrier);
  const json& entries = field(j, "entries");
  if (!entries.is_array()) {
    throw InvalidInputError("field \"entries\" must be an array");
  }
  std::set<std::array<int, 2>> seen;
  for (const json& entry : entries) {
    if (!entry.is_object()) {
      throw InvalidInputError("\"entries\" items must be objects");
    }
    const json& args = field(entry, "args");
    if (!args.is_array() || args.size() != 2) {
      throw InvalidInputError(
          "\"entries\" item: \"args\" must be an array of two indices");
    }
    std::array<int, 2> ij{};
    for (int s = 0; s < 2; ++s) {
      ij[s] = index_entry(args[s], "\"entries\" item \"args\"", base);
    }
    if (!seen.insert(ij).second) {
      throw InvalidInputError("\"entries\" lists args [" +
                              std::to_string(ij[0]) + ", " +
                              std::to_string(ij[1]) + "] more than once");
    }
    const json& matrix = field(entry, "matrix");
    if (!matrix.is_array() || static_cast<int>(matrix.size()) != carrier) {
      throw InvalidInputError(
          "\"matrix\" must be an array of carrier_dim rows");
    }
    LinearMap& m = r.rho(ij[0], ij[1]);
    for (int i = 0; i < carrier; ++i) {
      const json& row = matrix[i];
      if (!row.is_array() || static_cast<int>(row.size()) != carrier) {
        throw InvalidInputError("\"matrix\" row " + std::to_string(i) +
                                " must have carrier_dim entries");
      }
      for (int k = 0; k < carrier; ++k) {
        m.at(i, k) = rational_entry(row[k], "\"matrix\" coefficient");
      }
    }
  }
  return r;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInputError("cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TripleSystem load_algebra_file(const std::string& path) {
  return parse_algebra_json(slurp(path));
}

LinearMap load_map_file(const std::string& path) {
  return parse_map_json(slurp(path));
}

Representation load_representation_file(const std::string& path) {
  return parse_representation_json(slurp(path));
}

std::string algebra_to_json(const TripleSystem& t) {
  json j;
  j["kind"] = "triple_system";
  j["dim"] = t.dim();
  j["field"] = "rational";
  json brackets = json::array();
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        const Rational* b = t.bracket_basis(i, k, l);
        json value = json::object();
        for (int o = 0; o < n; ++o) {
          if (!is_zero(b[o])) value[std::to_string(o)] = to_string(b[o]);
        }
        if (!value.empty()) {
          brackets.push_back(json{{"args", {i, k, l}}, {"value", value}});
        }
      }
    }
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2);
}

}  // namespace lts
