#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "a2d/axioms.hpp"
#include "a2d/transfer.hpp"

namespace a2d {

// The fixed cover Spec k → Bα₂ and its self-overlap Spec k ×_{Bα₂} Spec k.
enum class SiteNodeId { Base, Cover, Overlap };

struct SiteNode {
  SiteNodeId id;
  Role role;
  std::string label;
};

// Base ↔ comodules, Cover ↔ k-vector spaces, Overlap ↔ k[x]/x²-modules.
std::array<SiteNode, 3> cover_diagram();
std::string to_string(SiteNodeId id);

inline constexpr const char* kDescentFailure = "separated presheaf property fails (bounded certificate)";
inline constexpr const char* kNoDescentFailure = "no failure of the separated presheaf property certified";

struct DistinctnessCertificate {
  bool verdict = false;            // the two structures differ
  std::string predicate;           // "weq", "cof" or "fib"
  std::optional<Morphism> witness;
  bool witness_in_first = false;   // predicate holds for the first structure
  bool witness_in_second = false;
  bool witness_invertible = false;
  bool operator==(const DistinctnessCertificate&) const = default;
};

struct CoverCheck {
  TransferResult a;
  TransferResult b;
  bool operator==(const CoverCheck&) const = default;
};

struct OverlapCheck {
  TransferResult j1;
  TransferResult j2;
  bool units_agree = false;  // the two restriction functors agree elementwise
  bool equal = false;
  bool discrete = false;     // equal to the discrete structure on modules
  bool operator==(const OverlapCheck&) const = default;
};

struct DescentReport {
  std::size_t catalog_bound = 0;
  std::size_t comparison_bound = 0;  // catalog bound on the cover and overlap sites
  TransferBounds transfer_bounds;
  std::string first;   // structure names
  std::string second;
  DistinctnessCertificate a_neq_b;
  CoverCheck i_defined;
  bool i_equal = false;
  bool i_discrete = false;  // both equal to the discrete structure on vector spaces
  OverlapCheck j_defined_equal;
  std::string conclusion;
  bool operator==(const DescentReport&) const = default;
};

// Transfer bounds used by run_theorem at catalog bound D.
TransferBounds default_transfer_bounds(std::size_t max_dim);

// Extensional comparisons on the cover and overlap sites walk every morphism
// of their catalog; Hom(k^5, k^5) alone has 2^25 elements, so those
// catalogs stop at this dimension while the base catalog follows D.
inline constexpr std::size_t kSiteComparisonCap = 4;
std::size_t comparison_bound(std::size_t max_dim);

// Compares structures a and b on comodules, transfers both to vector
// spaces, and transfers i(a) to modules along both units.
DescentReport run_theorem(std::size_t max_dim);
DescentReport run_theorem(std::size_t max_dim, TransferBounds bounds);
// The same pipeline for an arbitrary pair of structures on comodules.
DescentReport run_descent(std::size_t max_dim, const ModelStructure& first, const ModelStructure& second,
                          TransferBounds bounds);

// True iff the report shows two distinct structures on the base with equal,
// defined restrictions to the cover whose restrictions to the overlap are
// defined and agree.
bool equalizer_check(const DescentReport& report);

}  // namespace a2d
