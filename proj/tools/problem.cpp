#include "problem.hpp"

#include <json.hpp>

namespace gitfan::io {
namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

Integer integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  fail(where, "expected an integer, got " + j.dump());
}

std::size_t index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) {
    fail(where, "expected a nonnegative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

LatVec vector(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  LatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(integer(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

unsigned multiplicity(const Json& obj, const std::string& where) {
  auto it = obj.find("multiplicity");
  if (it == obj.end()) return 1;
  const std::size_t m = index(*it, where + ".multiplicity");
  if (m == 0) fail(where + ".multiplicity", "must be positive");
  return static_cast<unsigned>(m);
}

Summand summand(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  Summand s;
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) fail(where + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "torus_char") {
    s.kind = SummandKind::torus_char;
    s.weight = vector(field(j, "weight", where), where + ".weight");
  } else if (k == "std" || k == "dual_std") {
    s.kind = k == "std" ? SummandKind::std_rep : SummandKind::dual_std;
    s.block = index(field(j, "block", where), where + ".block");
  } else if (k == "hom") {
    s.kind = SummandKind::hom;
    s.src = index(field(j, "src", where), where + ".src");
    s.dst = index(field(j, "dst", where), where + ".dst");
  } else {
    fail(where + ".kind", "unknown summand kind '" + k + "'");
  }
  if (auto it = j.find("twist"); it != j.end()) {
    s.twist = vector(*it, where + ".twist");
  }
  s.multiplicity = multiplicity(j, where);
  return s;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("problem", "expected an object");
  Problem p;

  const Json& module = field(doc, "module", "problem");
  bool have_group = false;
  if (auto it = doc.find("group"); it != doc.end()) {
    const Json& g = *it;
    if (!g.is_object()) fail("group", "expected an object");
    have_group = true;
    if (auto gl = g.find("gl"); gl != g.end()) {
      if (!gl->is_array()) fail("group.gl", "expected an array");
      for (std::size_t i = 0; i < gl->size(); ++i) {
        const std::size_t n = index((*gl)[i], "group.gl[" + std::to_string(i) + "]");
        if (n == 0) fail("group.gl", "block sizes must be positive");
        p.group.gl_blocks.push_back(static_cast<unsigned>(n));
      }
    }
    if (auto t = g.find("torus"); t != g.end()) {
      p.group.torus_rank = static_cast<unsigned>(index(*t, "group.torus"));
    }
  }

  if (module.is_array()) {
    if (!have_group) fail("problem", "missing field 'group'");
    for (std::size_t i = 0; i < module.size(); ++i) {
      p.module.summands.push_back(
          summand(module[i], "module[" + std::to_string(i) + "]"));
    }
  } else if (module.is_object()) {
    const Json& weights = field(module, "weights", "module");
    if (!weights.is_array() || weights.empty()) {
      fail("module.weights", "expected a nonempty array of weight columns");
    }
    std::vector<LatVec> cols;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      cols.push_back(vector(weights[i], "module.weights[" + std::to_string(i) + "]"));
    }
    std::vector<unsigned> mult(cols.size(), 1);
    if (auto it = module.find("multiplicities"); it != module.end()) {
      if (!it->is_array() || it->size() != cols.size()) {
        fail("module.multiplicities", "expected one entry per weight column");
      }
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::size_t m = index((*it)[i], "module.multiplicities");
        if (m == 0) fail("module.multiplicities", "must be positive");
        mult[i] = static_cast<unsigned>(m);
      }
    }
    if (!have_group) {
      p.group.torus_rank = static_cast<unsigned>(cols.front().size());
    }
    for (std::size_t i = 0; i < cols.size(); ++i) {
      Summand s;
      s.kind = SummandKind::torus_char;
      s.weight = cols[i];
      s.multiplicity = mult[i];
      p.module.summands.push_back(std::move(s));
    }
  } else {
    fail("module", "expected a list of summands or {weights, multiplicities}");
  }

  if (auto it = doc.find("characters"); it != doc.end()) {
    if (!it->is_object()) fail("characters", "expected an object");
    for (const auto& [key, value] : it->items()) {
      p.characters[key] = vector(value, "characters." + key);
    }
  }
  return p;
}

}  // namespace gitfan::io
