#include "a2d/catalog.hpp"

#include <string>

namespace a2d {

Catalog::Catalog(std::size_t max_dim, Role role, std::size_t hard_cap) : max_dim_(max_dim), role_(role) {
  if (max_dim > hard_cap) {
    throw ResourceError("catalog: dimension bound " + std::to_string(max_dim) + " exceeds the cap of " +
                        std::to_string(hard_cap) +
                        "; hom spaces grow as 2^(n*m), raise the cap explicitly if you mean it");
  }
  for (std::size_t n = 0; n <= max_dim; ++n) {
    const std::size_t max_free = role == Role::Point ? 0 : n / 2;
    for (std::size_t b = 0; b <= max_free; ++b) {
      const NormalForm nf{n - 2 * b, b};
      forms_.push_back(nf);
      objects_.push_back(canonical(nf, role));
    }
  }
  homs_.reserve(objects_.size() * objects_.size());
  for (const auto& src : objects_) {
    for (const auto& dst : objects_) homs_.push_back(HomSpace{hom_basis(src, dst)});
  }
}

std::optional<std::size_t> Catalog::index_of(const NormalForm& nf) const {
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i] == nf) return i;
  }
  return std::nullopt;
}

const HomSpace& Catalog::hom(std::size_t src, std::size_t dst) const {
  return homs_.at(src * objects_.size() + dst);
}

std::uint64_t Catalog::morphism_count() const {
  std::uint64_t total = 0;
  for (const auto& h : homs_) total += h.size();
  return total;
}

Morphism Catalog::morphism(const MorphismId& id) const {
  const Comodule& s = objects_.at(id.src);
  const Comodule& t = objects_.at(id.dst);
  return Morphism::trusted(s, t, combine(hom(id.src, id.dst).basis, id.index, t.dim(), s.dim()));
}

std::vector<Morphism> Catalog::morphisms(std::size_t src, std::size_t dst) const {
  std::vector<Morphism> out;
  visit_pair(src, dst, [&](const MorphismId&, const Morphism& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Catalog catalog(std::size_t max_dim, Role role) { return Catalog(max_dim, role); }

std::size_t expected_object_count(std::size_t max_dim, Role role) {
  if (role == Role::Point) return max_dim + 1;
  std::size_t total = 0;
  for (std::size_t n = 0; n <= max_dim; ++n) total += n / 2 + 1;
  return total;
}

}  // namespace a2d
