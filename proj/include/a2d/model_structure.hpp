#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "a2d/comodule.hpp"

namespace a2d {

using MorphismPredicate = std::function<bool(const Morphism&)>;

// f = second ∘ first
struct Factorization {
  Morphism first;
  Morphism second;
};

enum class FactorKind {
  CofAcyclicFib,  // (cofibration, weak equivalence ∩ fibration)
  AcyclicCofFib,  // (cofibration ∩ weak equivalence, fibration)
};

using Factorizer = std::function<std::optional<Factorization>(const Morphism&, FactorKind)>;

// A model structure given by its three morphism classes. The factorizer is
// optional; without one the axiom verifier falls back to the trivial
// factorizations f = f ∘ id and f = id ∘ f.
struct ModelStructure {
  std::string name;
  Role role = Role::Torsor;
  MorphismPredicate is_weq;
  MorphismPredicate is_cof;
  MorphismPredicate is_fib;
  Factorizer factor;

  bool weq(const Morphism& g) const;
  bool cof(const Morphism& g) const;
  bool fib(const Morphism& g) const;
};

// right ∘ top = bottom ∘ left
//   A --top--> X
//   |          |
//  left      right
//   v          v
//   B -bottom-> Y
struct Square {
  Morphism top;
  Morphism bottom;
  Morphism left;
  Morphism right;

  bool commutes() const;
};

// h : B → X with h ∘ left = top and right ∘ h = bottom; canonical solution.
// Throws InputError when the square does not commute.
std::optional<Morphism> find_lift(const Square& sq);

// Hom-space bases a lifting check needs; precompute them to avoid repeated
// kernel computations in tight loops.
struct LiftingBases {
  std::vector<BitMatrix> top;     // Hom(A, X)
  std::vector<BitMatrix> bottom;  // Hom(B, Y)
  std::vector<BitMatrix> lift;    // Hom(B, X)
};

LiftingBases lifting_bases(const Morphism& left, const Morphism& right);

// A commuting square with the given left and right sides that admits no
// lift, or nullopt when every such square lifts. The squares form a vector
// space and the lifts map linearly onto a subspace of it, so one rank
// comparison decides all squares at once.
std::optional<Square> non_lifting_square(const Morphism& left, const Morphism& right);
std::optional<Square> non_lifting_square(const Morphism& left, const Morphism& right,
                                         const LiftingBases& bases);
bool has_llp(const Morphism& left, const Morphism& right);

// image(d_dst) = image(A · d_src); the default decision procedure for the
// cofibrations of structure a.
bool closed_form_cofibration(const Morphism& g);

// The weak equivalences of structure a: triv(g) is invertible.
bool weq_a(const Morphism& g);

// Cofibrations: pushouts of maps between x-trivial comodules (saturated);
// weak equivalences: isomorphisms on maximal x-trivial subcomodules;
// fibrations: everything.
ModelStructure structure_a();
// The discrete structure on comodules.
ModelStructure structure_b();
// weq = isomorphisms, cof = fib = all maps, on the given role.
ModelStructure discrete_structure(Role role);

// f = w ∘ c with c : M → image(f) ⊕ T^s a closed-form cofibration and
// w a weak equivalence of structure a; T^s complements ker d_N ∩ image(f)
// inside ker d_N.
Factorization factor_cof_weq(const Morphism& f);

}  // namespace a2d
