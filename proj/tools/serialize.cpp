#include "serialize.hpp"

#include <algorithm>

namespace gitfan::io {
namespace {

Json support_json(const Support& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i);
  return out;
}

Support support_from(const Json& j) {
  Support s;
  for (const auto& x : j) s.push_back(x.get<std::size_t>());
  return s;
}

Json rational_json(const Rational& q) {
  return q.get_str();
}

Tristate tristate_from(const std::string& s) {
  if (s == "yes") return Tristate::yes;
  if (s == "unknown") return Tristate::unknown;
  return Tristate::no;
}

}  // namespace

const char* name(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::unknown: return "unknown";
  }
  return "unknown";
}

const char* name(Variant v) {
  return v == Variant::semistable ? "semistable" : "stable";
}

const char* name(Verdict v) {
  switch (v) {
    case Verdict::unstable: return "unstable";
    case Verdict::semistable: return "semistable";
    case Verdict::properly_stable: return "properly_stable";
  }
  return "unstable";
}

Json to_json(const Integer& v) { return v.get_str(); }

Json to_json(const LatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const std::vector<LatVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(Json::array({e, c.get_num().get_str(), c.get_den().get_str()}));
  }
  return out;
}

Json to_json(const RatCone& c) {
  Json out;
  out["rank"] = c.rank();
  out["dim"] = c.dim();
  out["rays"] = to_json(c.extreme_rays());
  out["lineality"] = to_json(c.lineality_basis());
  out["facets"] = to_json(c.proper_facets());
  out["equations"] = to_json(c.equations());
  return out;
}

Json to_json(const Fan& f) {
  Json out;
  out["rank"] = f.rank;
  Json cones = Json::array();
  for (const auto& c : f.cones) cones.push_back(to_json(c));
  out["cones"] = std::move(cones);
  out["maximal"] = f.maximal_indices();
  Json pairs = Json::array();
  for (const auto& [a, b] : f.face_pairs) pairs.push_back(Json::array({a, b}));
  out["face_pairs"] = std::move(pairs);
  return out;
}

Json to_json(const UnstableComponent& c) {
  Json out;
  out["support"] = support_json(c.support);
  out["vanishing"] = support_json(c.vanishing);
  out["lambda"] = to_json(c.lambda.coords);
  out["class"] = to_json(c.class_t);
  out["class_text"] = c.class_t.to_string();
  out["codim_E"] = c.codim_e;
  out["dim_stab"] = c.dim_stab;
  out["codim_orbit"] = c.codim_orbit;
  out["maximal"] =
      c.maximal_flag == MaximalFlag::certified ? "certified" : "heuristic";
  return out;
}

Json to_json(const Chamber& c) {
  Json out;
  out["cone"] = to_json(c.cone);
  out["representative"] = to_json(c.representative.coords);
  out["representative_t"] = to_json(c.representative.embedded);
  out["properly_stable"] = name(c.properly_stable);
  Json ss = Json::array();
  for (const auto& s : c.semistable_supports) ss.push_back(support_json(s));
  out["semistable_supports"] = std::move(ss);
  Json comps = Json::array();
  for (const auto& k : c.components) comps.push_back(to_json(k));
  out["components"] = std::move(comps);
  return out;
}

Json to_json(const GITFan& f) {
  Json out;
  out["fan"] = to_json(f.fan);
  Json ch = Json::array();
  for (const auto& c : f.chambers) ch.push_back(to_json(c));
  out["chambers"] = std::move(ch);
  out["full_dimensional"] = f.full_dimensional();
  out["effective_cone"] = to_json(f.effective_cone);
  Json walls = Json::array();
  for (const auto& w : f.walls) walls.push_back(to_json(w));
  out["walls"] = std::move(walls);
  out["walls_complete"] = f.walls_complete;
  return out;
}

Json to_json(const InvariantPresentation& p) {
  Json out;
  out["ring"] = p.quotient ? "Chow ring = cohomology ring (char 0)"
                           : "equivariant Chow ring of the semistable locus";
  out["variant"] = name(p.variant);
  out["quotient"] = p.quotient;
  out["symbols"] = p.symbols;
  out["degrees"] = p.degrees;
  Json it = Json::array(), ic = Json::array(), text = Json::array();
  for (const auto& g : p.ideal_t) {
    it.push_back(to_json(g));
    text.push_back(g.to_string());
  }
  for (const auto& g : p.ideal_chern) ic.push_back(to_json(g));
  out["ideal_t"] = std::move(it);
  out["ideal_t_text"] = std::move(text);
  out["ideal_chern"] = std::move(ic);
  out["invariance_certified"] = p.invariance_certified;
  out["dim_quotient"] = p.dim_quotient;
  return out;
}

Json to_json(const PicardPresentation& p) {
  Json out;
  out["rank"] = p.rank;
  out["relations"] = to_json(p.relations);
  out["quotient_basis"] = to_json(p.quotient_basis);
  out["ample_cone_closure"] = to_json(p.ample_cone);
  out["ample_cone_open"] = true;
  out["codim_ok"] = p.codim_ok;
  return out;
}

Json to_json(const HMCertificate& c) {
  Json out;
  out["verdict"] = name(c.verdict);
  out["lambda"] = c.lambda ? to_json(c.lambda->coords) : Json(nullptr);
  out["pairing"] = c.pairing ? to_json(*c.pairing) : Json(nullptr);
  Json comb = Json::array();
  for (const auto& [col, q] : c.combination) {
    comb.push_back(Json::array({col, rational_json(q)}));
  }
  out["combination"] = std::move(comb);
  return out;
}

Json columns_json(const WeightSystem& ws) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ws.num_columns(); ++i) {
    Json c;
    c["index"] = i;
    c["weight"] = to_json(ws.column(i).weight);
    c["multiplicity"] = ws.column(i).multiplicity;
    out.push_back(std::move(c));
  }
  return out;
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  Integer v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) {
    throw InvalidInput("expected an integer, got " + j.dump());
  }
  return v;
}

LatVec latvec_from(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an integer vector");
  LatVec v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

std::vector<LatVec> latvecs_from(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a list of vectors");
  std::vector<LatVec> out;
  for (const auto& x : j) out.push_back(latvec_from(x));
  return out;
}

Poly poly_from(const Json& j, std::size_t nvars) {
  Poly p(nvars);
  for (const auto& term : j) {
    Exponent e = term.at(0).get<Exponent>();
    Rational q(integer_from(term.at(1)), integer_from(term.at(2)));
    q.canonicalize();
    p.add_term(e, q);
  }
  return p;
}

RatCone cone_from(const Json& j) {
  const std::size_t rank = j.at("rank").get<std::size_t>();
  std::vector<LatVec> gens = latvecs_from(j.at("rays"));
  for (const auto& l : latvecs_from(j.at("lineality"))) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return RatCone::from_rays(rank, gens);
}

Fan fan_from(const Json& j) {
  Fan f;
  f.rank = j.at("rank").get<std::size_t>();
  for (const auto& c : j.at("cones")) f.cones.push_back(cone_from(c));
  for (const auto& p : j.at("face_pairs")) {
    f.face_pairs.emplace_back(p.at(0).get<std::size_t>(),
                              p.at(1).get<std::size_t>());
  }
  return f;
}

UnstableComponent component_from(const Json& j, std::size_t rank) {
  UnstableComponent c;
  c.support = support_from(j.at("support"));
  c.vanishing = support_from(j.at("vanishing"));
  c.lambda = Cocharacter{latvec_from(j.at("lambda"))};
  c.class_t = poly_from(j.at("class"), rank);
  c.codim_e = j.at("codim_E").get<std::size_t>();
  c.dim_stab = j.at("dim_stab").get<std::size_t>();
  c.codim_orbit = j.at("codim_orbit").get<std::size_t>();
  c.maximal_flag = j.at("maximal") == "certified" ? MaximalFlag::certified
                                                  : MaximalFlag::heuristic;
  return c;
}

Chamber chamber_from(const Json& j, std::size_t rank) {
  Chamber c;
  c.cone = cone_from(j.at("cone"));
  c.representative.coords = latvec_from(j.at("representative"));
  c.representative.embedded = latvec_from(j.at("representative_t"));
  c.properly_stable = tristate_from(j.at("properly_stable"));
  for (const auto& s : j.at("semistable_supports")) {
    c.semistable_supports.push_back(support_from(s));
  }
  for (const auto& k : j.at("components")) {
    c.components.push_back(component_from(k, rank));
  }
  return c;
}

GITFan gitfan_from(const Json& j, std::size_t rank) {
  GITFan f;
  f.fan = fan_from(j.at("fan"));
  for (const auto& c : j.at("chambers")) f.chambers.push_back(chamber_from(c, rank));
  f.effective_cone = cone_from(j.at("effective_cone"));
  for (const auto& w : j.at("walls")) f.walls.push_back(cone_from(w));
  f.walls_complete = j.at("walls_complete").get<bool>();
  return f;
}

InvariantPresentation presentation_from(const Json& j, std::size_t rank) {
  InvariantPresentation p;
  p.variant = j.at("variant") == "semistable" ? Variant::semistable
                                              : Variant::properly_stable;
  p.quotient = j.at("quotient").get<bool>();
  p.symbols = j.at("symbols").get<std::vector<std::string>>();
  p.degrees = j.at("degrees").get<std::vector<unsigned>>();
  for (const auto& g : j.at("ideal_t")) p.ideal_t.push_back(poly_from(g, rank));
  for (const auto& g : j.at("ideal_chern")) {
    p.ideal_chern.push_back(poly_from(g, rank));
  }
  p.invariance_certified = j.at("invariance_certified").get<bool>();
  p.dim_quotient = j.at("dim_quotient").get<std::size_t>();
  return p;
}

PicardPresentation picard_from(const Json& j) {
  PicardPresentation p;
  p.rank = j.at("rank").get<std::size_t>();
  p.relations = latvecs_from(j.at("relations"));
  p.quotient_basis = latvecs_from(j.at("quotient_basis"));
  p.ample_cone = cone_from(j.at("ample_cone_closure"));
  p.codim_ok = j.at("codim_ok").get<bool>();
  return p;
}

}  // namespace gitfan::io
