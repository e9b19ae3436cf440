#pragma once
// The shared document format: versioned JSON with rationals written as
// integers or "a/b" strings. Writers emit canonical field and point order;
// readers accept fields in any order. Floats are converted to exact
// rationals at parse time.

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "lipfree/extremal.hpp"
#include "lipfree/free_element.hpp"
#include "lipfree/lip_function.hpp"
#include "lipfree/metric_space.hpp"

namespace lipfree::doc {

using Json = nlohmann::ordered_json;

inline constexpr int kVersion = 1;

Json rational_to_json(const Rat& q);
Rat rational_from_json(const Json& j);

Json space_to_json(const FiniteMetricSpace& M);
SpacePtr space_from_json(const Json& j);

// Bodies carry no format envelope or space; standalone docs embed both.
Json function_body(const LipFunction& f);
LipFunction function_from_body(const SpacePtr& M, const Json& values);

Json element_to_json(const FreeElement& mu);
FreeElement element_from_json(const Json& j);

Json representation_body(const FiniteMetricSpace& M, const Representation& r);
Representation representation_from_body(const FiniteMetricSpace& M,
                                        const Json& terms);

Json certificate_to_json(const SpacePtr& M, const ExposureCertificate& cert);
std::pair<SpacePtr, ExposureCertificate> certificate_from_json(const Json& j);

Json report_body(const FiniteMetricSpace& M, const MoleculeReport& report);

struct DistQuery {
  FreeElement element;
  std::vector<int> subset;
};
Json dist_query_to_json(const DistQuery& query);
DistQuery dist_query_from_json(const Json& j);

// Envelope helpers shared by every standalone document.
Json envelope(const std::string& format);
void check_envelope(const Json& j, const std::string& format);

Json read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const Json& j);
std::string dump(const Json& j);  // canonical text, trailing newline

}  // namespace lipfree::doc
