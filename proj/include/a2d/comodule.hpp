#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a2d/bit_matrix.hpp"
#include "a2d/errors.hpp"

namespace a2d {

// Which category an object belongs to. The three share one carrier: a
// vector space with a square-zero endomorphism d.
//   Torsor  - k[x]/x^2-comodules, d is the x-coefficient of the coaction
//   Point   - plain k-vector spaces, d = 0
//   Overlap - k[x]/x^2-modules, d is the action of x
enum class Role { Torsor, Point, Overlap };

std::string_view to_string(Role role);
Role role_from_string(std::string_view name);

// Structure constants of H = k[x]/x^2 with x primitive, in the basis {1, x}.
// Tensor powers use the kronecker ordering, so 1⊗x has index 1 and x⊗1 index 2.
namespace hopf {
BitMatrix comultiplication();  // 4x2
BitMatrix counit();            // 1x2
BitMatrix unit();              // 2x1
BitMatrix multiplication();    // 2x4
BitMatrix antipode();          // 2x2, S(x) = -x = x
}  // namespace hopf

// psi(m) = psi0(m)⊗1 + psi1(m)⊗x
struct Coaction {
  BitMatrix psi0;
  BitMatrix psi1;
};

class CoactionError : public InputError {
 public:
  enum class Kind { Counit, Coassociativity };
  CoactionError(Kind kind, BitMatrix witness, const std::string& what)
      : InputError(what), kind_(kind), witness_(std::move(witness)) {}
  Kind kind() const { return kind_; }
  // A basis vector on which the failing axiom's two sides differ.
  const BitMatrix& witness() const { return witness_; }

 private:
  Kind kind_;
  BitMatrix witness_;
};

class Comodule {
 public:
  Comodule() : Comodule(0, BitMatrix(0, 0), Role::Torsor) {}
  // Throws InputError unless d is square with d*d = 0, and d = 0 for Point.
  Comodule(std::size_t dim, BitMatrix d, Role role);

  std::size_t dim() const { return dim_; }
  const BitMatrix& d() const { return d_; }
  Role role() const { return role_; }

  bool operator==(const Comodule&) const = default;

 private:
  std::size_t dim_;
  BitMatrix d_;
  Role role_;
};

class Morphism {
 public:
  // Throws InputError on shape or role mismatch or when A does not
  // intertwine the structure endomorphisms.
  Morphism(Comodule src, Comodule dst, BitMatrix a);

  // Skips the intertwining check; for matrices known to be morphisms.
  static Morphism trusted(Comodule src, Comodule dst, BitMatrix a);

  const Comodule& src() const { return src_; }
  const Comodule& dst() const { return dst_; }
  const BitMatrix& matrix() const { return a_; }
  Role role() const { return src_.role(); }

  bool operator==(const Morphism&) const = default;

 private:
  struct Unchecked {};
  Morphism(Comodule src, Comodule dst, BitMatrix a, Unchecked);

  Comodule src_;
  Comodule dst_;
  BitMatrix a_;
};

// M ≅ T^trivial ⊕ F^free
struct NormalForm {
  std::size_t trivial = 0;
  std::size_t free = 0;
  auto operator<=>(const NormalForm&) const = default;
};

Comodule validate_coaction(const Coaction& c);
// The coaction matrix M → M⊗H, rows indexed by (basis vector, {1,x}).
BitMatrix coaction_matrix(const Coaction& c);

Comodule zero_object(Role role = Role::Torsor);
Comodule trivial(std::size_t n, Role role = Role::Torsor);
// F: basis (e0, e1) with d(e1) = e0.
Comodule free_rank_one(Role role = Role::Torsor);
// T^a ⊕ F^b with the trivial summands first.
Comodule canonical(NormalForm nf, Role role = Role::Torsor);
// H coacting on itself through the comultiplication, basis {1, x}.
Comodule regular_comodule();

Comodule direct_sum(const Comodule& a, const Comodule& b);
Morphism direct_sum(const Morphism& f, const Morphism& g);
// g ∘ f
Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity(const Comodule& m);
Morphism zero_morphism(const Comodule& src, const Comodule& dst);
bool is_isomorphism(const Morphism& f);
std::optional<Morphism> inverse(const Morphism& f);

// Columns span the solution space of A d_src = d_dst A, as vectorized
// (row-major) dst.dim x src.dim matrices.
BitMatrix hom_basis_vectors(const Comodule& src, const Comodule& dst);
// The same basis reshaped into matrices.
std::vector<BitMatrix> hom_basis(const Comodule& src, const Comodule& dst);
std::size_t hom_dimension(const Comodule& src, const Comodule& dst);
// Sum of the basis elements selected by the bits of `index`.
BitMatrix combine(const std::vector<BitMatrix>& basis, std::uint64_t index, std::size_t rows,
                  std::size_t cols);
// Every morphism src → dst; the i-th is combine(hom_basis, i).
std::vector<Morphism> hom_space(const Comodule& src, const Comodule& dst);

struct Subobject {
  Comodule object;
  Morphism inclusion;
};

// Subcomodule spanned by the columns of `basis`, which must be independent
// and d-stable.
Subobject subobject(const Comodule& m, const BitMatrix& basis);

struct Quotient {
  Comodule object;
  Morphism projection;
};

// M / span(relations). The complement basis is completed from the standard
// basis, lowest index first.
Quotient quotient(const Comodule& m, const BitMatrix& relations);

// Maximal x-trivial subcomodule: ker d with its inclusion.
Subobject triv(const Comodule& m);
// The restriction of f to the maximal x-trivial subcomodules.
Morphism triv(const Morphism& f);
bool is_x_trivial(const Comodule& m);

NormalForm normal_form(const Comodule& m);
// An isomorphism canonical(normal_form(m)) → m.
Morphism normal_form_iso(const Comodule& m);
bool iso_test(const Comodule& m, const Comodule& n);
// Searches the hom space for an invertible intertwiner; oracle for iso_test.
std::optional<Morphism> find_isomorphism_by_search(const Comodule& m, const Comodule& n);

struct Pushout {
  Comodule object;
  Morphism from_left;   // M → P
  Morphism from_right;  // B → P
};

// Pushout of M ←f– A –g→ B.
Pushout pushout(const Morphism& f, const Morphism& g);

// Functors between the three categories.
Comodule extended_comodule(const Comodule& v);  // V ↦ V⊗H, basis (V⊗1, V⊗x)
Morphism extended_comodule(const Morphism& g);
Comodule forget(const Comodule& m);  // underlying vector space of a comodule
Morphism forget(const Morphism& g);
Comodule underlying_k(const Comodule& m);  // restriction of scalars k → H
Morphism underlying_k(const Morphism& g);
Comodule free_module(const Comodule& v);  // extension of scalars, basis (V⊗1, V⊗x)
Morphism free_module(const Morphism& g);

}  // namespace a2d
