#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "a2d/comodule.hpp"

namespace a2d {

// Hom-space enumeration grows as 2^(n·m); beyond this bound runs stop being
// desk scale.
inline constexpr std::size_t kHardDimensionCap = 6;

struct HomSpace {
  std::vector<BitMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << basis.size(); }
};

// Address of a catalog morphism: source and target object indices plus the
// position in the hom space enumeration.
struct MorphismId {
  std::size_t src = 0;
  std::size_t dst = 0;
  std::uint64_t index = 0;
  auto operator<=>(const MorphismId&) const = default;
};

// All objects of dimension ≤ max_dim up to isomorphism, one canonical
// representative T^a ⊕ F^b each, and every morphism between them.
// Morphisms are enumerated lazily from hom-space bases.
class Catalog {
 public:
  Catalog(std::size_t max_dim, Role role = Role::Torsor, std::size_t hard_cap = kHardDimensionCap);

  std::size_t max_dim() const { return max_dim_; }
  Role role() const { return role_; }
  const std::vector<Comodule>& objects() const { return objects_; }
  const Comodule& object(std::size_t i) const { return objects_.at(i); }
  std::size_t object_count() const { return objects_.size(); }
  const NormalForm& normal_form_of(std::size_t i) const { return forms_.at(i); }
  std::optional<std::size_t> index_of(const NormalForm& nf) const;

  const HomSpace& hom(std::size_t src, std::size_t dst) const;
  std::uint64_t morphism_count() const;
  Morphism morphism(const MorphismId& id) const;
  std::vector<Morphism> morphisms(std::size_t src, std::size_t dst) const;

  // Visits every morphism in the deterministic order (src, dst, index).
  // The visitor returns false to stop; visit returns false if it was stopped.
  template <typename Visitor>
  bool visit(Visitor&& visitor) const {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      for (std::size_t j = 0; j < objects_.size(); ++j) {
        if (!visit_pair(i, j, visitor)) return false;
      }
    }
    return true;
  }

  template <typename Visitor>
  bool visit_pair(std::size_t i, std::size_t j, Visitor&& visitor) const {
    const HomSpace& h = hom(i, j);
    for (std::uint64_t k = 0; k < h.size(); ++k) {
      const MorphismId id{i, j, k};
      if (!visitor(id, morphism(id))) return false;
    }
    return true;
  }

 private:
  std::size_t max_dim_;
  Role role_;
  std::vector<Comodule> objects_;
  std::vector<NormalForm> forms_;
  std::vector<HomSpace> homs_;  // row-major by (src, dst)
};

Catalog catalog(std::size_t max_dim, Role role = Role::Torsor);

// Σ_{n=0..D} (⌊n/2⌋ + 1); the point side has D + 1 objects.
std::size_t expected_object_count(std::size_t max_dim, Role role = Role::Torsor);

}  // namespace a2d
