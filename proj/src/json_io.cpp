#include "yangian/json_io.hpp"

#include <set>

namespace yangian {

Json cartan_to_json(const LieDatum& datum) {
  Json j;
  j["family"] = datum.type().name();
  j["cartan"] = datum.cartan_matrix();
  j["d"] = datum.symmetrizers();
  j["numbering"] = datum.numbering();
  return j;
}

Json word_to_json(const WeylWord& word) { return Json(word.letters()); }

Json factor_to_json(const SymbolicPoint& root, int mult) {
  Json f;
  f["param"] = root.param() ? Json(*root.param()) : Json(nullptr);
  f["param_coeff"] = to_string(root.param_coeff());
  f["re"] = to_string(root.constant().re);
  f["im"] = to_string(root.constant().im);
  f["mult"] = mult;
  return f;
}

Json tuple_to_json(const RationalTuple& p) {
  Json j;
  j["family"] = p.type().name();
  Json comps = Json::array();
  for (Node i = 1; i <= p.rank(); ++i) {
    if (p[i].is_one()) continue;
    Json factors = Json::array();
    for (const auto& [root, mult] : p[i].factors()) factors.push_back(factor_to_json(root, mult));
    comps.push_back(Json{{"node", i}, {"factors", std::move(factors)}});
  }
  j["components"] = std::move(comps);
  return j;
}

namespace {

std::string text_field(const Json& obj, const char* key, const char* fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_string()) throw Error(std::string("field '") + key + "' must be a \"num/den\" string");
  return v.get<std::string>();
}

}  // namespace

RationalTuple tuple_from_json(const LieDatum& datum, const Json& j) {
  if (!j.is_object()) throw Error("tuple JSON must be an object");
  if (j.contains("family")) {
    const LieType declared = parse_lie_type(j.at("family").get<std::string>(),
                                            j.contains("rank") ? j.at("rank").get<int>() : 0);
    if (declared != datum.type())
      throw Error("tuple is for " + declared.name() + ", expected " + datum.type().name());
  }
  RationalTuple p(datum.type());
  if (!j.contains("components")) return p;
  std::set<Node> seen;
  for (const auto& comp : j.at("components")) {
    const Node node = comp.at("node").get<int>();
    datum.require_node(node);
    if (!seen.insert(node).second) throw Error("node " + std::to_string(node) + " listed twice");
    FactoredRational f;
    for (const auto& fac : comp.at("factors")) {
      std::optional<std::string> param;
      if (fac.contains("param") && !fac.at("param").is_null())
        param = fac.at("param").get<std::string>();
      Rational coeff = parse_rational(text_field(fac, "param_coeff", param ? "1" : "0"));
      GaussianRational c(parse_rational(text_field(fac, "re", "0")),
                         parse_rational(text_field(fac, "im", "0")));
      const int mult = fac.contains("mult") ? fac.at("mult").get<int>() : 1;
      if (mult == 0) throw Error("zero multiplicity in tuple JSON");
      f *= FactoredRational::linear(SymbolicPoint(std::move(param), std::move(coeff), std::move(c)),
                                    mult);
    }
    p[node] = std::move(f);
  }
  return p;
}

Json set_to_json(const CyclicitySet& s, bool with_provenance) {
  Json j;
  Json values = Json::array();
  for (const auto& v : s.values()) values.push_back(to_string(v));
  j["values"] = std::move(values);
  if (with_provenance) {
    Json prov = Json::array();
    for (const auto& [value, ws] : s.entries()) {
      Json wl = Json::array();
      for (const auto& w : ws) {
        Json wj;
        wj["prefix"] = w.prefix;
        wj["root"] = to_string(w.root);
        if (w.first_offset != 0 || w.second_offset != 0) {
          wj["r"] = w.first_offset;
          wj["s"] = w.second_offset;
        }
        wl.push_back(std::move(wj));
      }
      prov.push_back(Json{{"value", to_string(value)}, {"witnesses", std::move(wl)}});
    }
    j["provenance"] = std::move(prov);
  }
  return j;
}

Json certificate_to_json(const CyclicityCertificate& cert, const std::vector<KrFactor>& factors) {
  Json j;
  j["verdict"] = cert.verdict == Verdict::Cyclic ? "Cyclic" : "Unknown";
  Json fs = Json::array();
  for (const auto& f : factors)
    fs.push_back(Json{{"node", f.node}, {"base", to_string(f.base)}, {"length", f.length}});
  j["factors"] = std::move(fs);
  Json pairs = Json::array();
  for (const auto& p : cert.pairs) {
    Json pj;
    pj["m"] = p.first + 1;
    pj["n"] = p.second + 1;
    pj["difference"] = to_string(p.difference);
    pj["set"] = set_to_json(p.tested, false)["values"];
    pj["member"] = p.member;
    pairs.push_back(std::move(pj));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

}  // namespace yangian
