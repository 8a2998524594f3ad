#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "a2d/axioms.hpp"
#include "a2d/catalog.hpp"
#include "a2d/cofibration.hpp"
#include "a2d/descent.hpp"

namespace a2d {

using Json = nlohmann::ordered_json;

enum class Format { Json, Markdown };
Format format_from_string(const std::string& name);

struct CatalogSummary {
  std::size_t max_dim = 0;
  Role role = Role::Torsor;
  std::uint64_t morphism_count = 0;
  std::vector<NormalForm> objects;
  bool operator==(const CatalogSummary&) const = default;
};

CatalogSummary summarize(const Catalog& cat);

// Verdicts of one cofibration method on a catalog, plus pairwise agreement
// of all three methods on every morphism.
struct CofReport {
  std::size_t max_dim = 0;
  std::string method;  // the method whose verdicts are listed
  std::vector<std::string> methods;
  std::uint64_t morphisms = 0;
  std::vector<std::uint64_t> cofibrations;          // per method
  std::vector<std::vector<std::uint64_t>> agree;    // agree[i][j]: morphisms where i and j agree
  // Per (src, dst) object pair: number of cofibrations under `method`.
  std::vector<std::vector<std::uint64_t>> per_pair;
  std::optional<Morphism> disagreement;
  // Cofibrations (by the primary method) that are a single pushout of a map
  // between x-trivial objects, and the first one that is not.
  std::uint64_t single_pushouts = 0;
  std::optional<Morphism> beyond_single_pushout;
  bool operator==(const CofReport&) const = default;

  bool all_agree() const { return !disagreement.has_value(); }
};

// `primary` picks the method whose verdicts are tabulated; the agreement
// matrix always covers ClosedForm, LlpBounded(llp_dim) and
// GenerationBounded(steps, gen_dim).
CofReport cof_report(const Catalog& cat, const std::string& primary, std::size_t llp_dim, std::size_t steps,
                     std::size_t gen_dim);

Json to_json(const Comodule& m);
Json to_json(const Morphism& g);
Json to_json(const TransferResult& r);
Json to_json(const AxiomReport& r);
Json to_json(const CatalogSummary& s);
Json to_json(const CofReport& r);
Json to_json(const DescentReport& r);

Comodule comodule_from_json(const Json& j);
Morphism morphism_from_json(const Json& j);
TransferResult transfer_result_from_json(const Json& j);
AxiomReport axiom_report_from_json(const Json& j);
CatalogSummary catalog_summary_from_json(const Json& j);
CofReport cof_report_from_json(const Json& j);
DescentReport descent_report_from_json(const Json& j);

// JSON is emitted with two-space indentation and a fixed key order, so equal
// reports give identical bytes. Markdown is informational.
std::string render(const CatalogSummary& s, Format format);
std::string render(const AxiomReport& r, Format format);
std::string render(const CofReport& r, Format format);
std::string render(const DescentReport& r, Format format);

}  // namespace a2d
