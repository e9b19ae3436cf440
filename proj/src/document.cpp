#include "lipfree/document.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "lipfree/error.hpp"

namespace lipfree::doc {

namespace {

// Integers up to 2^53 survive a round trip through any JSON reader that
// stores numbers as doubles; everything else goes out as an "a/b" string.
const BigInt kMaxInlineInt = BigInt(1) << 53;

Json coeff_map(const FiniteMetricSpace& M, const FreeElement& mu) {
  Json out = Json::object();
  for (int x = 0; x < M.size(); ++x) {
    if (x == M.base() || mu.coeff(x) == 0) continue;
    out[M.label(x)] = rational_to_json(mu.coeff(x));
  }
  return out;
}

Json pair_labels(const FiniteMetricSpace& M, PointPair pair) {
  return Json::array({M.label(pair.x), M.label(pair.y)});
}

PointPair pair_from_labels(const FiniteMetricSpace& M, const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorKind::ParseError, "pair must be a two-element array");
  }
  return PointPair{M.index_of(j.at(0).get<std::string>()),
                   M.index_of(j.at(1).get<std::string>())};
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw Error(ErrorKind::ParseError,
                std::string("missing field \"") + name + "\"");
  }
  return *it;
}

}  // namespace

Json rational_to_json(const Rat& q) {
  if (denominator(q) == 1) {
    const BigInt num = numerator(q);
    if (num >= -kMaxInlineInt && num <= kMaxInlineInt) {
      return Json(num.convert_to<std::int64_t>());
    }
  }
  return Json(format_rational(q));
}

Rat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rat(j.get<std::uint64_t>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::ParseError,
              "expected a number or rational string, got " +
                  std::string(j.type_name()));
}

Json space_to_json(const FiniteMetricSpace& M) {
  Json j = envelope("space");
  Json points = Json::array();
  for (int x = 0; x < M.size(); ++x) points.push_back(M.label(x));
  j["points"] = std::move(points);
  j["base"] = M.label(M.base());
  Json rows = Json::array();
  for (int x = 0; x < M.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < M.size(); ++y) row.push_back(rational_to_json(M.dist(x, y)));
    rows.push_back(std::move(row));
  }
  j["d"] = std::move(rows);
  return j;
}

SpacePtr space_from_json(const Json& j) {
  check_envelope(j, "space");
  const Json& points_json = field(j, "points");
  if (!points_json.is_array() || points_json.empty()) {
    throw Error(ErrorKind::ParseError, "\"points\" must be a nonempty array");
  }
  std::vector<std::string> points;
  points.reserve(points_json.size());
  for (const Json& p : points_json) {
    if (!p.is_string()) {
      throw Error(ErrorKind::ParseError, "point labels must be strings");
    }
    points.push_back(p.get<std::string>());
  }

  const std::string base_label = field(j, "base").get<std::string>();
  int base = -1;
  for (int x = 0; x < static_cast<int>(points.size()); ++x) {
    if (points[x] == base_label) {
      base = x;
      break;
    }
  }
  if (base < 0) {
    throw Error(ErrorKind::ParseError,
                "base \"" + base_label + "\" is not among the points");
  }

  const Json& rows = field(j, "d");
  const auto n = points.size();
  if (!rows.is_array() || rows.size() != n) {
    throw Error(ErrorKind::ParseError, "\"d\" must have one row per point");
  }
  std::vector<std::vector<Rat>> dist(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Json& row = rows.at(x);
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorKind::ParseError, "\"d\" rows must have one entry per point");
    }
    dist[x].reserve(n);
    for (std::size_t y = 0; y < n; ++y) {
      dist[x].push_back(rational_from_json(row.at(y)));
    }
  }
  return FiniteMetricSpace::validate(std::move(points), base, std::move(dist));
}

Json function_body(const LipFunction& f) {
  const auto& M = *f.space();
  Json out = Json::object();
  for (int x = 0; x < M.size(); ++x) {
    out[M.label(x)] = rational_to_json(f.value(x));
  }
  return out;
}

LipFunction function_from_body(const SpacePtr& M, const Json& values) {
  if (!values.is_object()) {
    throw Error(ErrorKind::ParseError, "function values must be an object");
  }
  std::vector<Rat> vals(M->size());
  for (int x = 0; x < M->size(); ++x) {
    auto it = values.find(M->label(x));
    if (it == values.end()) {
      throw Error(ErrorKind::ParseError,
                  "function is missing a value for \"" + M->label(x) + "\"");
    }
    vals[x] = rational_from_json(*it);
  }
  if (values.size() != static_cast<std::size_t>(M->size())) {
    throw Error(ErrorKind::ParseError, "function has values for unknown points");
  }
  return LipFunction(M, std::move(vals));
}

Json element_to_json(const FreeElement& mu) {
  Json j = envelope("element");
  j["space"] = space_to_json(*mu.space());
  j["coeffs"] = coeff_map(*mu.space(), mu);
  return j;
}

FreeElement element_from_json(const Json& j) {
  check_envelope(j, "element");
  SpacePtr M = space_from_json(field(j, "space"));
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) {
    throw Error(ErrorKind::ParseError, "\"coeffs\" must be an object");
  }
  std::vector<Rat> vals(M->size());
  for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
    const int x = M->index_of(it.key());
    if (x == M->base()) {
      throw Error(ErrorKind::ParseError,
                  "\"coeffs\" may not assign a value to the base point");
    }
    vals[x] = rational_from_json(it.value());
  }
  return FreeElement(M, std::move(vals));
}

Json representation_body(const FiniteMetricSpace& M, const Representation& r) {
  Json terms = Json::array();
  for (const auto& term : r.terms) {
    terms.push_back(Json::array({rational_to_json(term.weight),
                                 M.label(term.pair.x), M.label(term.pair.y)}));
  }
  return terms;
}

Representation representation_from_body(const FiniteMetricSpace& M,
                                        const Json& terms) {
  if (!terms.is_array()) {
    throw Error(ErrorKind::ParseError, "representation must be an array of terms");
  }
  Representation r;
  for (const Json& term : terms) {
    if (!term.is_array() || term.size() != 3) {
      throw Error(ErrorKind::ParseError,
                  "representation terms must be [weight, x, y] triples");
    }
    RepresentationTerm t;
    t.weight = rational_from_json(term.at(0));
    t.pair.x = M.index_of(term.at(1).get<std::string>());
    t.pair.y = M.index_of(term.at(2).get<std::string>());
    r.terms.push_back(std::move(t));
  }
  return r;
}

Json certificate_to_json(const SpacePtr& M, const ExposureCertificate& cert) {
  Json j = envelope("exposure_certificate");
  j["space"] = space_to_json(*M);
  j["pair"] = pair_labels(*M, cert.pair);
  j["function"] = function_body(cert.function);
  j["margin"] = rational_to_json(cert.margin);
  return j;
}

std::pair<SpacePtr, ExposureCertificate> certificate_from_json(const Json& j) {
  check_envelope(j, "exposure_certificate");
  SpacePtr M = space_from_json(field(j, "space"));
  ExposureCertificate cert{
      pair_from_labels(*M, field(j, "pair")),
      function_from_body(M, field(j, "function")),
      rational_from_json(field(j, "margin")),
  };
  return {std::move(M), std::move(cert)};
}

Json report_body(const FiniteMetricSpace& M, const MoleculeReport& report) {
  Json j = Json::object();
  j["pair"] = pair_labels(M, report.pair);
  Json segment = Json::array();
  for (int z : report.segment_points) segment.push_back(M.label(z));
  j["segment"] = std::move(segment);
  j["trivial_segment"] = report.is_trivial_segment;
  j["extreme"] = report.is_extreme;
  j["exposed"] = report.is_exposed;
  if (report.certificate) {
    Json cert = Json::object();
    cert["function"] = function_body(report.certificate->function);
    cert["margin"] = rational_to_json(report.certificate->margin);
    j["certificate"] = std::move(cert);
  }
  if (report.decomposition) {
    Json dec = Json::object();
    dec["witness"] = M.label(report.witness_point);
    dec["terms"] = representation_body(M, *report.decomposition);
    j["decomposition"] = std::move(dec);
  }
  return j;
}

Json dist_query_to_json(const DistQuery& query) {
  const auto& M = *query.element.space();
  Json j = envelope("dist_query");
  j["space"] = space_to_json(M);
  j["coeffs"] = coeff_map(M, query.element);
  Json subset = Json::array();
  for (int x : query.subset) subset.push_back(M.label(x));
  j["subset"] = std::move(subset);
  return j;
}

DistQuery dist_query_from_json(const Json& j) {
  check_envelope(j, "dist_query");
  Json element = envelope("element");
  element["space"] = field(j, "space");
  element["coeffs"] = field(j, "coeffs");
  DistQuery query{element_from_json(element), {}};
  const Json& subset = field(j, "subset");
  if (!subset.is_array()) {
    throw Error(ErrorKind::ParseError, "\"subset\" must be an array of labels");
  }
  const auto& M = *query.element.space();
  for (const Json& label : subset) {
    query.subset.push_back(M.index_of(label.get<std::string>()));
  }
  return query;
}

Json envelope(const std::string& format) {
  Json j = Json::object();
  j["format"] = format;
  j["version"] = kVersion;
  return j;
}

void check_envelope(const Json& j, const std::string& format) {
  if (!j.is_object()) {
    throw Error(ErrorKind::ParseError, "document must be a JSON object");
  }
  const Json& fmt = field(j, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != format) {
    throw Error(ErrorKind::ParseError,
                "expected a \"" + format + "\" document, got " + fmt.dump());
  }
  const Json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kVersion) {
    throw Error(ErrorKind::ParseError,
                "unsupported document version " + version.dump());
  }
}

Json read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError,
                path.string() + ": " + std::string(e.what()));
  }
}

void write_document(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  }
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lipfree::doc
