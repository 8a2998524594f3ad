#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "a2d/catalog.hpp"
#include "a2d/model_structure.hpp"

namespace a2d {

struct Witness {
  std::string description;
  std::vector<std::pair<std::string, Morphism>> morphisms;
  bool operator==(const Witness&) const = default;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::size_t bound = 0;
  std::uint64_t cases = 0;  // instances examined
  std::optional<Witness> witness;
  bool operator==(const AxiomCheck&) const = default;
};

// Every verdict is bounded: it quantifies over catalog(bound) only.
struct AxiomReport {
  std::string structure;
  Role role = Role::Torsor;
  std::size_t bound = 0;
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  bool operator==(const AxiomReport&) const = default;
  const AxiomCheck* find(const std::string& axiom) const;
};

// Two-of-three, retract closure of each class, both lifting axioms and both
// factorizations, over all morphisms of the catalog.
AxiomReport verify_axioms(const ModelStructure& ms, const Catalog& cat);

// A section/retraction pair i : X → X', r : X' → X with r ∘ i = id.
struct RetractPair {
  Morphism section;
  Morphism retraction;
};

std::vector<RetractPair> retract_pairs(const Comodule& x, const Comodule& x2);

struct EqualityResult {
  bool equal = true;
  std::string predicate;  // "weq", "cof" or "fib" on disagreement
  std::optional<Morphism> witness;
  std::optional<MorphismId> witness_id;
  std::uint64_t checked = 0;
};

// Compares the weak equivalences on every catalog morphism, then the
// cofibrations, then the fibrations, and stops at the first disagreement.
EqualityResult equal_on_catalog(const ModelStructure& ms1, const ModelStructure& ms2, const Catalog& cat);

}  // namespace a2d
