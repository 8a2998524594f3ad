#include "a2d/descent.hpp"

#include <algorithm>

namespace a2d {

std::array<SiteNode, 3> cover_diagram() {
  return {{{SiteNodeId::Base, Role::Torsor, "Bα₂"},
           {SiteNodeId::Cover, Role::Point, "Spec k"},
           {SiteNodeId::Overlap, Role::Overlap, "Spec k ×_{Bα₂} Spec k"}}};
}

std::string to_string(SiteNodeId id) {
  switch (id) {
    case SiteNodeId::Base:
      return "base";
    case SiteNodeId::Cover:
      return "cover";
    case SiteNodeId::Overlap:
      return "overlap";
  }
  return "unknown";
}

TransferBounds default_transfer_bounds(std::size_t max_dim) { return {3, std::min<std::size_t>(max_dim, 3)}; }

std::size_t comparison_bound(std::size_t max_dim) { return std::min(max_dim, kSiteComparisonCap); }

DescentReport run_theorem(std::size_t max_dim) { return run_theorem(max_dim, default_transfer_bounds(max_dim)); }

DescentReport run_theorem(std::size_t max_dim, TransferBounds bounds) {
  return run_descent(max_dim, structure_a(), structure_b(), bounds);
}

DescentReport run_descent(std::size_t max_dim, const ModelStructure& first, const ModelStructure& second,
                          TransferBounds bounds) {
  if (max_dim < 2) throw InputError("run_theorem: the bound must be at least 2, got " + std::to_string(max_dim));
  if (first.role != Role::Torsor || second.role != Role::Torsor) {
    throw InputError("run_theorem: both structures must live on comodules");
  }
  const Catalog base(max_dim, Role::Torsor);
  const Catalog cover(comparison_bound(max_dim), Role::Point);
  const Catalog overlap(comparison_bound(max_dim), Role::Overlap);

  DescentReport r;
  r.catalog_bound = max_dim;
  r.comparison_bound = comparison_bound(max_dim);
  r.transfer_bounds = bounds;
  r.first = first.name;
  r.second = second.name;

  const EqualityResult eq = equal_on_catalog(first, second, base);
  r.a_neq_b.verdict = !eq.equal;
  if (!eq.equal) {
    r.a_neq_b.predicate = eq.predicate;
    r.a_neq_b.witness = eq.witness;
    const Morphism& w = *eq.witness;
    auto holds = [&](const ModelStructure& ms) {
      if (eq.predicate == "weq") return ms.weq(w);
      if (eq.predicate == "cof") return ms.cof(w);
      return ms.fib(w);
    };
    r.a_neq_b.witness_in_first = holds(first);
    r.a_neq_b.witness_in_second = holds(second);
    r.a_neq_b.witness_invertible = is_isomorphism(w);
  }

  const Functor i_direct = extended_comodule_functor();
  const Functor i_inverse = forget_functor();
  r.i_defined.a = transfer_exists(first, i_direct, i_inverse, cover, r.transfer_bounds);
  r.i_defined.b = transfer_exists(second, i_direct, i_inverse, cover, r.transfer_bounds);
  if (r.i_defined.a.exists && r.i_defined.b.exists) {
    const ModelStructure& ia = *r.i_defined.a.structure;
    const ModelStructure& ib = *r.i_defined.b.structure;
    r.i_equal = equal_on_catalog(ia, ib, cover).equal;
    const ModelStructure discrete = discrete_structure(Role::Point);
    r.i_discrete = equal_on_catalog(ia, discrete, cover).equal && equal_on_catalog(ib, discrete, cover).equal;
  }

  OverlapCheck& j = r.j_defined_equal;
  if (r.i_defined.a.exists) {
    const ModelStructure& ia = *r.i_defined.a.structure;
    const auto [u1, u2] = overlap_units();
    const Functor j_inverse = free_module_functor();
    j.j1 = transfer_exists(ia, u1, j_inverse, overlap, r.transfer_bounds);
    j.j2 = transfer_exists(ia, u2, j_inverse, overlap, r.transfer_bounds);
    j.units_agree = functors_agree(u1, u2, overlap);
    if (j.j1.exists && j.j2.exists) {
      j.equal = j.units_agree && equal_on_catalog(*j.j1.structure, *j.j2.structure, overlap).equal;
      const ModelStructure discrete = discrete_structure(Role::Overlap);
      j.discrete = equal_on_catalog(*j.j1.structure, discrete, overlap).equal &&
                   equal_on_catalog(*j.j2.structure, discrete, overlap).equal;
    }
  }

  r.conclusion = (r.a_neq_b.verdict && r.i_equal && j.equal) ? kDescentFailure : kNoDescentFailure;
  return r;
}

bool equalizer_check(const DescentReport& r) {
  return r.a_neq_b.verdict && r.i_defined.a.exists && r.i_defined.b.exists && r.i_equal &&
         r.j_defined_equal.j1.exists && r.j_defined_equal.j2.exists && r.j_defined_equal.equal;
}

}  // namespace a2d
