#include "a2d/transfer.hpp"

#include <map>
#include <memory>
#include <set>
#include <tuple>

namespace a2d {

namespace {

using ObjectKey = std::pair<std::size_t, BitMatrix>;
using ArrowKey = std::tuple<std::size_t, BitMatrix, std::size_t, BitMatrix, BitMatrix>;

ObjectKey key_of(const Comodule& m) { return {m.dim(), m.d()}; }

ArrowKey key_of(const Morphism& g) {
  return {g.src().dim(), g.src().d(), g.dst().dim(), g.dst().d(), g.matrix()};
}

void require_role(const Comodule& m, Role role, const std::string& who) {
  if (m.role() != role) {
    throw InputError(who + ": expected a " + std::string(to_string(role)) + " object, got " +
                     std::string(to_string(m.role())));
  }
}

Functor make_functor(std::string name, Role from, Role to, Comodule (*obj)(const Comodule&),
                     Morphism (*mor)(const Morphism&)) {
  Functor f;
  f.name = std::move(name);
  f.from = from;
  f.to = to;
  f.on_object = obj;
  f.on_morphism = [name = f.name, from, mor](const Morphism& g) {
    require_role(g.src(), from, name);
    return mor(g);
  };
  return f;
}

// The action of u(1) ∈ H on an H-module N.
BitMatrix action_of(const BitMatrix& unit_map, const Comodule& n) {
  BitMatrix a(n.dim(), n.dim());
  if (unit_map.get(0, 0)) a += BitMatrix::identity(n.dim());
  if (unit_map.get(1, 0)) a += n.d();
  return a;
}

// Shared lazily built list of transferred acyclic fibrations that are not
// isomorphisms; isomorphisms never obstruct a lift.
struct TransferredCof {
  ModelStructure base;
  Functor direct;
  Catalog cat;
  std::optional<std::vector<Morphism>> obstructions;

  const std::vector<Morphism>& list() {
    if (!obstructions) {
      std::vector<Morphism> out;
      cat.visit([&](const MorphismId&, const Morphism& w) {
        if (is_isomorphism(w)) return true;
        const Morphism image = direct(w);
        if (base.weq(image) && base.fib(image)) out.push_back(w);
        return true;
      });
      obstructions = std::move(out);
    }
    return *obstructions;
  }
};

// Steps from one object C: p : C → C ⊔_A B for every coproduct k : A → B of
// generators and every attaching map A → C, deduplicated.
class StepTable {
 public:
  StepTable(std::vector<Morphism> coproducts, std::size_t max_dim)
      : coproducts_(std::move(coproducts)), max_dim_(max_dim) {}

  const std::vector<Morphism>& from(const Comodule& c) {
    auto [it, fresh] = table_.try_emplace(key_of(c));
    if (!fresh) return it->second;
    std::set<ArrowKey> seen;
    std::vector<Morphism> steps;
    for (const Morphism& k : coproducts_) {
      const auto basis = hom_basis(k.src(), c);
      if (basis.size() > 24) throw ResourceError("transfer_exists: attaching-map space too large");
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << basis.size()); ++i) {
        const Morphism attach = Morphism::trusted(k.src(), c, combine(basis, i, c.dim(), k.src().dim()));
        Pushout po = pushout(attach, k);
        if (po.object.dim() > max_dim_) continue;
        if (seen.insert(key_of(po.from_left)).second) steps.push_back(std::move(po.from_left));
      }
    }
    it->second = std::move(steps);
    return it->second;
  }

 private:
  std::vector<Morphism> coproducts_;
  std::size_t max_dim_;
  std::map<ObjectKey, std::vector<Morphism>> table_;
};

}  // namespace

Functor extended_comodule_functor() {
  return make_functor("extended_comodule", Role::Point, Role::Torsor, &extended_comodule, &extended_comodule);
}

Functor forget_functor() { return make_functor("forget", Role::Torsor, Role::Point, &forget, &forget); }

Functor underlying_k_functor() {
  return make_functor("underlying_k", Role::Overlap, Role::Point, &underlying_k, &underlying_k);
}

Functor free_module_functor() {
  return make_functor("free_module", Role::Point, Role::Overlap, &free_module, &free_module);
}

Functor restriction_of_scalars(const BitMatrix& unit_map, std::string name) {
  if (unit_map.rows() != 2 || unit_map.cols() != 1) {
    throw InputError("restriction_of_scalars: unit map must be 2x1");
  }
  Functor f;
  f.name = std::move(name);
  f.from = Role::Overlap;
  f.to = Role::Point;
  f.on_object = [unit_map, who = f.name](const Comodule& n) {
    require_role(n, Role::Overlap, who);
    // k acts through u; 1 must act as the identity.
    if (!action_of(unit_map, n).is_identity()) {
      throw InputError(who + ": unit map does not send 1 to a unit acting as the identity");
    }
    return trivial(n.dim(), Role::Point);
  };
  f.on_morphism = [obj = f.on_object](const Morphism& g) {
    return Morphism::trusted(obj(g.src()), obj(g.dst()), g.matrix());
  };
  return f;
}

Adjunction forget_extended_adjunction() {
  Adjunction adj{forget_functor(), extended_comodule_functor(), {}, {}};
  // η_M = ψ_M : M → M⊗H, m ↦ (m, d m)
  adj.unit = [](const Comodule& m) {
    return Morphism::trusted(m, extended_comodule(forget(m)), vconcat(BitMatrix::identity(m.dim()), m.d()));
  };
  // ε_V = id ⊗ counit
  adj.counit = [](const Comodule& v) {
    return Morphism::trusted(forget(extended_comodule(v)), v,
                             hconcat(BitMatrix::identity(v.dim()), BitMatrix(v.dim(), v.dim())));
  };
  return adj;
}

Adjunction free_underlying_adjunction() {
  Adjunction adj{free_module_functor(), underlying_k_functor(), {}, {}};
  // η_V : V → H⊗V, v ↦ 1⊗v
  adj.unit = [](const Comodule& v) {
    return Morphism::trusted(v, underlying_k(free_module(v)),
                             vconcat(BitMatrix::identity(v.dim()), BitMatrix(v.dim(), v.dim())));
  };
  // ε_N : H⊗N → N, h⊗n ↦ h·n
  adj.counit = [](const Comodule& n) {
    return Morphism::trusted(free_module(underlying_k(n)), n, hconcat(BitMatrix::identity(n.dim()), n.d()));
  };
  return adj;
}

AdjunctionReport check_adjunction(const Adjunction& adj, const Catalog& left_cat, const Catalog& right_cat) {
  AdjunctionReport report;
  if (left_cat.role() != adj.left.from || right_cat.role() != adj.left.to || adj.right.from != adj.left.to ||
      adj.right.to != adj.left.from) {
    throw InputError("check_adjunction: catalogs do not match the functors' roles");
  }
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failure = std::move(msg);
    return report;
  };
  // φ : L M → N  ↦  R(φ) ∘ η_M
  auto phi = [&](const Morphism& f, const Comodule& m) { return compose(adj.right(f), adj.unit(m)); };
  // ψ : M → R N  ↦  ε_N ∘ L(ψ)
  auto psi = [&](const Morphism& g, const Comodule& n) { return compose(adj.counit(n), adj.left(g)); };

  for (const Comodule& m : left_cat.objects()) {
    const Morphism eta = adj.unit(m);
    if (!(eta.matrix() * eta.src().d() == eta.dst().d() * eta.matrix())) {
      return fail("unit is not a morphism at an object of dimension " + std::to_string(m.dim()));
    }
    for (const Comodule& n : right_cat.objects()) {
      ++report.object_pairs;
      const Comodule lm = adj.left(m);
      const Comodule rn = adj.right(n);
      const auto left_hom = hom_space(lm, n);
      const auto right_hom = hom_space(m, rn);
      if (left_hom.size() != right_hom.size()) return fail("hom sets have different sizes");
      std::set<BitMatrix> images;
      for (const Morphism& f : left_hom) {
        ++report.elements;
        const Morphism g = phi(f, m);
        if (!(g.matrix() * m.d() == rn.d() * g.matrix())) return fail("transpose is not a morphism");
        if (!(psi(g, n) == f)) return fail("transposition is not invertible");
        images.insert(g.matrix());
      }
      if (images.size() != right_hom.size()) return fail("transposition is not injective");
      for (const Morphism& g : right_hom) {
        ++report.elements;
        if (!(phi(psi(g, n), m) == g)) return fail("transposition is not invertible on the right");
      }
    }
  }

  // Naturality: Φ(v ∘ φ ∘ L(u)) = R(v) ∘ Φ(φ) ∘ u on basis elements.
  for (const Comodule& m : left_cat.objects()) {
    for (const Comodule& n : right_cat.objects()) {
      const Comodule lm = adj.left(m);
      const auto phis = hom_basis(lm, n);
      for (const Comodule& m2 : left_cat.objects()) {
        const auto us = hom_basis(m2, m);
        for (const Comodule& n2 : right_cat.objects()) {
          const auto vs = hom_basis(n, n2);
          for (const auto& ua : us) {
            const Morphism u = Morphism::trusted(m2, m, ua);
            for (const auto& va : vs) {
              const Morphism v = Morphism::trusted(n, n2, va);
              for (const auto& fa : phis) {
                const Morphism f = Morphism::trusted(lm, n, fa);
                ++report.naturality_cases;
                const Morphism lhs = phi(compose(v, compose(f, adj.left(u))), m2);
                const Morphism rhs = compose(adj.right(v), compose(phi(f, m), u));
                if (!(lhs == rhs)) return fail("naturality square does not commute");
              }
            }
          }
        }
      }
    }
  }
  return report;
}

ModelStructure transfer(const ModelStructure& ms, const Functor& direct_image, const Catalog& cat) {
  if (direct_image.to != ms.role) throw InputError("transfer: functor does not land on the structure's site");
  if (cat.role() != direct_image.from) throw InputError("transfer: catalog is on the wrong site");
  auto shared = std::make_shared<TransferredCof>(TransferredCof{ms, direct_image, cat, std::nullopt});
  ModelStructure out;
  out.name = ms.name + " transferred along " + direct_image.name;
  out.role = direct_image.from;
  out.is_weq = [shared](const Morphism& g) { return shared->base.weq(shared->direct(g)); };
  out.is_fib = [shared](const Morphism& g) { return shared->base.fib(shared->direct(g)); };
  out.is_cof = [shared](const Morphism& g) {
    for (const Morphism& w : shared->list()) {
      if (!has_llp(g, w)) return false;
    }
    return true;
  };
  return out;
}

TransferResult transfer_exists(const ModelStructure& ms, const Functor& direct_image, const Functor& inverse_image,
                               const Catalog& cat, TransferBounds bounds) {
  if (inverse_image.from != ms.role || inverse_image.to != direct_image.from || direct_image.to != ms.role) {
    throw InputError("transfer_exists: functors do not form a pair between the structure's site and the catalog's");
  }
  TransferResult result;
  result.bounds = bounds;
  const Role site = direct_image.from;

  // Generators f^*(h), h an acyclic cofibration between catalog objects.
  std::vector<Morphism> generators;
  {
    std::set<ArrowKey> seen;
    const Catalog source(bounds.max_dim, ms.role);
    source.visit([&](const MorphismId&, const Morphism& h) {
      if (!ms.weq(h) || !ms.cof(h)) return true;
      Morphism g = inverse_image(h);
      if (g.src().dim() > bounds.max_dim || g.dst().dim() > bounds.max_dim) return true;
      if (seen.insert(key_of(g)).second) generators.push_back(std::move(g));
      return true;
    });
  }
  result.generators = generators.size();

  // Coproducts of 1..steps generators, nondecreasing indices.
  std::vector<Morphism> coproducts;
  {
    std::set<ArrowKey> seen;
    std::vector<std::pair<Morphism, std::size_t>> layer;
    for (std::size_t i = 0; i < generators.size(); ++i) layer.emplace_back(generators[i], i);
    for (std::size_t summands = 1; summands <= bounds.steps && !layer.empty(); ++summands) {
      std::vector<std::pair<Morphism, std::size_t>> next;
      for (auto& [k, last] : layer) {
        if (seen.insert(key_of(k)).second) coproducts.push_back(k);
        if (summands == bounds.steps) continue;
        for (std::size_t i = last; i < generators.size(); ++i) {
          Morphism sum = direct_sum(k, generators[i]);
          if (sum.src().dim() > bounds.max_dim || sum.dst().dim() > bounds.max_dim) continue;
          next.emplace_back(std::move(sum), i);
        }
      }
      layer = std::move(next);
    }
  }

  StepTable steps(std::move(coproducts), bounds.max_dim);
  std::set<ArrowKey> visited;
  const Catalog starts(bounds.max_dim, site);
  for (const Comodule& c0 : starts.objects()) {
    std::vector<Morphism> frontier{identity(c0)};
    for (std::size_t depth = 1; depth <= bounds.steps; ++depth) {
      std::vector<Morphism> next;
      for (const Morphism& c : frontier) {
        for (const Morphism& p : steps.from(c.dst())) {
          Morphism g = compose(p, c);
          if (!visited.insert(key_of(g)).second) continue;
          ++result.generated;
          if (!ms.weq(direct_image(g))) {
            result.obstruction = std::move(g);
            return result;
          }
          next.push_back(std::move(g));
        }
      }
      frontier = std::move(next);
    }
  }

  result.exists = true;
  result.structure = transfer(ms, direct_image, cat);
  result.structure_name = result.structure->name;
  return result;
}

bool operator==(const TransferResult& x, const TransferResult& y) {
  return x.exists == y.exists && x.bounds == y.bounds && x.structure_name == y.structure_name &&
         x.obstruction == y.obstruction && x.generators == y.generators && x.generated == y.generated;
}

std::pair<Functor, Functor> overlap_units() {
  const BitMatrix left_unit = hopf::unit();
  // η_R = S ∘ η_L
  const BitMatrix right_unit = hopf::antipode() * left_unit;
  return {restriction_of_scalars(left_unit, "j1"), restriction_of_scalars(right_unit, "j2")};
}

bool functors_agree(const Functor& u1, const Functor& u2, const Catalog& cat) {
  for (const Comodule& m : cat.objects()) {
    if (!(u1(m) == u2(m))) return false;
  }
  return cat.visit([&](const MorphismId&, const Morphism& g) { return u1(g) == u2(g); });
}

}  // namespace a2d
