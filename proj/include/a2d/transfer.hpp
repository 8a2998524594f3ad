#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "a2d/catalog.hpp"
#include "a2d/model_structure.hpp"

namespace a2d {

struct Functor {
  std::string name;
  Role from = Role::Point;
  Role to = Role::Torsor;
  std::function<Comodule(const Comodule&)> on_object;
  std::function<Morphism(const Morphism&)> on_morphism;

  Comodule operator()(const Comodule& m) const { return on_object(m); }
  Morphism operator()(const Morphism& g) const { return on_morphism(g); }
};

// f_* for f : Spec k → Bα₂, V ↦ V ⊗ H.
Functor extended_comodule_functor();
// f^*, forgetting the coaction.
Functor forget_functor();
// Restriction of scalars from H-modules to k-modules.
Functor underlying_k_functor();
// Extension of scalars, V ↦ H ⊗ V.
Functor free_module_functor();

// Restriction of scalars along a unit map k → H, given as the 2x1 image of 1.
Functor restriction_of_scalars(const BitMatrix& unit_map, std::string name);

// left ⊣ right with the given unit η_M : M → right(left(M)) and counit
// ε_N : left(right(N)) → N.
struct Adjunction {
  Functor left;
  Functor right;
  std::function<Morphism(const Comodule&)> unit;
  std::function<Morphism(const Comodule&)> counit;
};

Adjunction forget_extended_adjunction();
Adjunction free_underlying_adjunction();

struct AdjunctionReport {
  bool ok = true;
  std::uint64_t object_pairs = 0;
  std::uint64_t elements = 0;
  std::uint64_t naturality_cases = 0;
  std::string failure;
};

// For every M in left_cat and N in right_cat, the maps
//   φ ↦ right(φ) ∘ η_M   and   ψ ↦ ε_N ∘ left(ψ)
// are checked to be mutually inverse bijections Hom(left M, N) ≅ Hom(M, right N),
// element by element; naturality is checked on hom-space bases, which
// suffices because both sides are bilinear in the two slots.
AdjunctionReport check_adjunction(const Adjunction& adj, const Catalog& left_cat, const Catalog& right_cat);

// The structure on the source site of `direct_image` whose weak
// equivalences and fibrations are created by direct_image. Cofibrations are
// the maps with the left lifting property against the transferred acyclic
// fibrations of `cat` (bounded).
ModelStructure transfer(const ModelStructure& ms, const Functor& direct_image, const Catalog& cat);

struct TransferBounds {
  std::size_t steps = 3;
  std::size_t max_dim = 3;
  bool operator==(const TransferBounds&) const = default;
};

struct TransferResult {
  bool exists = false;
  TransferBounds bounds;
  std::string structure_name;
  std::optional<ModelStructure> structure;
  std::optional<Morphism> obstruction;
  std::uint64_t generators = 0;  // distinct inverse images of acyclic cofibrations
  std::uint64_t generated = 0;   // distinct composites examined
};

// Compares everything but the attached structure, which is identified by name.
bool operator==(const TransferResult& x, const TransferResult& y);

// Enumerates composites of ≤ steps pushouts of coproducts of ≤ steps
// inverse_image(h), h an acyclic cofibration of ms between catalog objects,
// with every object of dimension ≤ max_dim, and tests that direct_image
// sends each to a weak equivalence. On success the transferred structure
// over `cat` is attached.
TransferResult transfer_exists(const ModelStructure& ms, const Functor& direct_image, const Functor& inverse_image,
                               const Catalog& cat, TransferBounds bounds = {});

// The two restriction-of-scalars functors induced by the source and target
// units of H. H is a Hopf algebra, so both units coincide; they are still
// built separately so that the coincidence is checked.
std::pair<Functor, Functor> overlap_units();

// Elementwise comparison of two functors on every object and morphism of cat.
bool functors_agree(const Functor& u1, const Functor& u2, const Catalog& cat);

}  // namespace a2d
