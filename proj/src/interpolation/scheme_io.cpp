#include "oscusec/interpolation/scheme_io.hpp"

#include <string>

#include "oscusec/error.hpp"

namespace oscusec {

namespace {

int require_int(const nlohmann::json& j, const char* key, const char* where) {
  if (!j.contains(key)) {
    throw InputError(std::string(where) + ": missing field \"" + key + "\"");
  }
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw InputError(std::string(where) + ": field \"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

FatPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("points[]: each entry must be an object");
  const int m = require_int(j, "m", "point");
  if (m < 1) throw InputError("point: multiplicity must be >= 1");
  const std::string loc = j.value("loc", std::string("generic"));
  if (loc == "generic") return FatPoint::generic(m);
  if (loc == "hyperplane") return FatPoint::on_hyperplane(m);
  if (loc == "explicit") {
    if (!j.contains("coords") || !j.at("coords").is_array()) {
      throw InputError("point: explicit location needs a \"coords\" array");
    }
    std::vector<std::int64_t> coords;
    for (const auto& c : j.at("coords")) {
      if (!c.is_number_integer()) throw InputError("point: coords must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
    return FatPoint::at(m, std::move(coords));
  }
  throw InputError("point: unknown location \"" + loc + "\"");
}

nlohmann::ordered_json point_to_json(const FatPoint& p) {
  nlohmann::ordered_json j;
  j["m"] = p.multiplicity;
  if (std::holds_alternative<GenericLocation>(p.location)) {
    j["loc"] = "generic";
  } else if (std::holds_alternative<HyperplaneLocation>(p.location)) {
    j["loc"] = "hyperplane";
  } else {
    j["loc"] = "explicit";
    j["coords"] = std::get<ExplicitLocation>(p.location).coords;
  }
  return j;
}

}  // namespace

LinearSystemSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("spec must be an object");
  const std::string type = j.value("type", std::string());
  if (type == "projective") {
    return LinearSystemSpec::projective(require_int(j, "n", "spec"), require_int(j, "d", "spec"));
  }
  if (type == "hirzebruch") {
    return LinearSystemSpec::hirzebruch(require_int(j, "n", "spec"), require_int(j, "a", "spec"),
                                        require_int(j, "b", "spec"));
  }
  throw InputError("spec: \"type\" must be \"projective\" or \"hirzebruch\"");
}

nlohmann::ordered_json spec_to_json(const LinearSystemSpec& spec) {
  nlohmann::ordered_json j;
  if (spec.is_projective()) {
    j["type"] = "projective";
    j["n"] = spec.projective_system().ambient_dim;
    j["d"] = spec.projective_system().degree;
  } else {
    const auto& h = spec.hirzebruch_system();
    j["type"] = "hirzebruch";
    j["n"] = h.twist;
    j["a"] = h.h_coeff;
    j["b"] = h.f_coeff;
  }
  return j;
}

SchemeDocument scheme_document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("scheme document must be a JSON object");
  if (j.contains("version") &&
      (!j.at("version").is_number_integer() || j.at("version").get<int>() != kSchemeFormatVersion)) {
    throw InputError("unsupported scheme document version");
  }
  if (!j.contains("spec")) throw InputError("scheme document: missing \"spec\"");
  SchemeDocument doc{spec_from_json(j.at("spec")), {}};
  if (j.contains("points")) {
    if (!j.at("points").is_array()) throw InputError("scheme document: \"points\" must be an array");
    for (const auto& entry : j.at("points")) {
      const FatPoint p = point_from_json(entry);
      const int count = entry.contains("count") ? require_int(entry, "count", "point") : 1;
      if (count < 0) throw InputError("point: count must be >= 0");
      doc.scheme.add(p, count);
    }
  }
  for (const auto& p : doc.scheme.points) {
    if (std::holds_alternative<HyperplaneLocation>(p.location) && !doc.spec.is_projective()) {
      throw InputError("hyperplane points require a projective spec");
    }
    if (const auto* e = std::get_if<ExplicitLocation>(&p.location);
        e != nullptr && static_cast<int>(e->coords.size()) != doc.spec.chart_dim()) {
      throw InputError("explicit point has the wrong number of chart coordinates");
    }
  }
  return doc;
}

nlohmann::ordered_json scheme_document_to_json(const SchemeDocument& doc) {
  nlohmann::ordered_json j;
  j["version"] = kSchemeFormatVersion;
  j["spec"] = spec_to_json(doc.spec);
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : doc.scheme.points) j["points"].push_back(point_to_json(p));
  return j;
}

}  // namespace oscusec
