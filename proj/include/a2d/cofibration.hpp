#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "a2d/catalog.hpp"
#include "a2d/model_structure.hpp"

namespace a2d {

struct ClosedForm {};

// Left lifting property against every weak equivalence of structure a
// between objects of catalog(max_dim).
struct LlpBounded {
  std::size_t max_dim = 4;
};

// Composites of at most `steps` pushouts of maps between x-trivial objects,
// every intermediate object of dimension ≤ max_dim, then one retract step.
struct GenerationBounded {
  std::size_t steps = 3;
  std::size_t max_dim = 4;
};

using CofMethod = std::variant<ClosedForm, LlpBounded, GenerationBounded>;

std::string method_name(const CofMethod& method);

// One generation step: pushout of the zero map T^p → T^q along
// attach : T^p → C, i.e. C ↦ C / image(attach) ⊕ T^q.
//
// Every map between x-trivial objects is, up to isomorphism of arrows,
// id ⊕ (T^p → 0) ⊕ (0 → T^q), and pushing out the identity summand changes
// nothing, so these steps reach every pushout of a map between x-trivial
// objects up to isomorphism.
struct PushoutStep {
  BitMatrix attach;  // columns independent, inside ker d_C
  std::size_t added = 0;
};

struct GenerationRecipe {
  std::vector<PushoutStep> steps;
  // When present the generated arrow is g ⊕ complement and g is recovered
  // as a retract through the block inclusion and projection.
  std::optional<Morphism> complement;
  // Identifies the recipe's final object with the target of g (or of
  // g ⊕ complement) compatibly with the arrows.
  BitMatrix target_iso;
};

struct CofCertificate {
  std::string method;
  std::size_t steps = 0;
  std::size_t max_dim = 0;
  bool verdict = false;
  std::optional<Square> failing_square;      // LlpBounded, verdict false
  std::optional<GenerationRecipe> recipe;    // GenerationBounded, verdict true
};

// Replays the recipe from `source`: the composite of its pushouts.
Morphism replay_recipe(const Comodule& source, const std::vector<PushoutStep>& steps);

// True when the recipe, replayed from g's source, reproduces g as stated.
bool recipe_reproduces(const Morphism& g, const GenerationRecipe& recipe);

// Invertible β : c.dst → c2.dst with β ∘ c = c2, if one exists.
std::optional<BitMatrix> arrow_iso_under_target(const Morphism& c, const Morphism& c2);

// Caches the catalogs, weak-equivalence lists and generation searches the
// bounded methods share, so batches of queries stay cheap.
class CofibrationOracle {
 public:
  CofibrationOracle();
  ~CofibrationOracle();
  CofibrationOracle(const CofibrationOracle&) = delete;
  CofibrationOracle& operator=(const CofibrationOracle&) = delete;

  CofCertificate decide(const Morphism& g, const CofMethod& method);

  // Weak equivalences of structure a in catalog(max_dim) that are not
  // isomorphisms; isomorphisms have the right lifting property against
  // every map, so only these can obstruct a lift.
  const std::vector<Morphism>& noninvertible_weqs(std::size_t max_dim);

  // The unsaturated class: g is isomorphic, as an arrow, to one pushout of a
  // map between x-trivial objects (no composites, no retracts).
  bool is_single_pushout(const Morphism& g, std::size_t max_dim);

 private:
  struct Generated;
  const Generated& generated_from(const Comodule& source, std::size_t steps, std::size_t max_dim);
  std::optional<GenerationRecipe> generation_search(const Morphism& g, std::size_t steps,
                                                    std::size_t max_dim);
  const LiftingBases& bases_for(const Morphism& g, const Morphism& w);

  std::map<std::size_t, std::vector<Morphism>> weqs_;
  std::map<std::string, std::unique_ptr<Generated>> generated_;
  std::map<std::string, LiftingBases> bases_;
  std::map<std::size_t, std::unique_ptr<Catalog>> catalogs_;
};

CofCertificate cof_membership(const Morphism& g, const CofMethod& method = ClosedForm{});
bool is_single_pushout(const Morphism& g, std::size_t max_dim = 4);

// Structure a with the cofibrations read literally, as single pushouts of
// maps between x-trivial objects rather than their saturation. Not a model
// structure; kept to exhibit the difference.
ModelStructure structure_a_literal(std::size_t max_dim = 4);

}  // namespace a2d
