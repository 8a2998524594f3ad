#include "a2d/cofibration.hpp"

#include <unordered_map>

namespace a2d {

namespace {

std::string key_of(const Comodule& m) {
  std::string k = std::to_string(static_cast<int>(m.role())) + ":" + std::to_string(m.dim()) + ":";
  for (int b : m.d().to_bits()) k.push_back(static_cast<char>('0' + b));
  return k;
}

// Invariants of an arrow c : S → C under isomorphisms of C. Arrows with
// different keys are never isomorphic under the target.
std::string arrow_key(const BitMatrix& c, const Comodule& target) {
  const NormalForm nf = normal_form(target);
  std::string k = std::to_string(nf.trivial) + "," + std::to_string(nf.free) + "|";
  const BitMatrix ker = kernel_basis(c);
  for (int b : row_reduce(ker.transpose()).reduced.to_bits()) k.push_back(static_cast<char>('0' + b));
  const BitMatrix im = image_basis(c);
  k += "|" + std::to_string(im.cols());
  k += "|" + std::to_string(intersect_spans(im, image_basis(target.d())).cols());
  k += "|" + std::to_string(intersect_spans(im, kernel_basis(target.d())).cols());
  return k;
}

bool retract_diagram_holds(const Morphism& g, const Morphism& sum) {
  const std::size_t m = g.src().dim();
  const std::size_t n = g.dst().dim();
  const std::size_t m2 = sum.src().dim();
  const std::size_t n2 = sum.dst().dim();
  BitMatrix i0(m2, m), i1(n2, n), r0(m, m2), r1(n, n2);
  i0.set_block(0, 0, BitMatrix::identity(m));
  i1.set_block(0, 0, BitMatrix::identity(n));
  r0.set_block(0, 0, BitMatrix::identity(m));
  r1.set_block(0, 0, BitMatrix::identity(n));
  return i1 * g.matrix() == sum.matrix() * i0 && g.matrix() * r0 == r1 * sum.matrix() &&
         (r0 * i0).is_identity() && (r1 * i1).is_identity() &&
         i0 * g.src().d() == sum.src().d() * i0 && i1 * g.dst().d() == sum.dst().d() * i1 &&
         r0 * sum.src().d() == g.src().d() * r0 && r1 * sum.dst().d() == g.dst().d() * r1;
}

const std::vector<BitMatrix>& subspaces_of(std::size_t n) {
  static std::vector<std::vector<BitMatrix>> cache;
  while (cache.size() <= n) cache.push_back(enumerate_subspaces(cache.size()));
  return cache[n];
}

}  // namespace

std::string method_name(const CofMethod& method) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ClosedForm>) {
          return "closed_form";
        } else if constexpr (std::is_same_v<T, LlpBounded>) {
          return "llp_bounded";
        } else {
          return "generation_bounded";
        }
      },
      method);
}

std::optional<BitMatrix> arrow_iso_under_target(const Morphism& c, const Morphism& c2) {
  if (!(c.src() == c2.src())) throw InputError("arrow_iso_under_target: arrows have different sources");
  const Comodule& t = c.dst();
  const Comodule& t2 = c2.dst();
  if (t.dim() != t2.dim() || normal_form(t) != normal_form(t2)) return std::nullopt;
  const std::size_t n = t.dim();
  const std::size_t m = c.src().dim();
  if (n == 0) return BitMatrix(0, 0);
  const BitMatrix intertwine = kronecker(BitMatrix::identity(n), t.d().transpose()) +
                               kronecker(t2.d(), BitMatrix::identity(n));
  BitMatrix system = intertwine;
  BitMatrix rhs(intertwine.rows(), 1);
  if (m > 0) {
    system = vconcat(system, kronecker(BitMatrix::identity(n), c.matrix().transpose()));
    rhs = vconcat(rhs, vectorize(c2.matrix()));
  }
  auto particular = solve(system, rhs);
  if (!particular) return std::nullopt;
  const BitMatrix homogeneous = kernel_basis(system);
  if (homogeneous.cols() > 26) throw ResourceError("arrow_iso_under_target: search space too large");
  std::vector<BitMatrix> basis;
  for (std::size_t j = 0; j < homogeneous.cols(); ++j) basis.push_back(homogeneous.column(j));
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << basis.size()); ++i) {
    BitMatrix v = *particular + combine(basis, i, n * n, 1);
    BitMatrix beta = unvectorize(v, n, n);
    if (is_invertible(beta)) return beta;
  }
  return std::nullopt;
}

Morphism replay_recipe(const Comodule& source, const std::vector<PushoutStep>& steps) {
  Comodule current = source;
  Morphism arrow = identity(source);
  for (const auto& step : steps) {
    const std::size_t p = step.attach.cols();
    Morphism attach(trivial(p, source.role()), current, step.attach);
    Morphism generator = zero_morphism(trivial(p, source.role()), trivial(step.added, source.role()));
    Pushout po = pushout(attach, generator);
    arrow = compose(po.from_left, arrow);
    current = po.object;
  }
  return arrow;
}

bool recipe_reproduces(const Morphism& g, const GenerationRecipe& recipe) {
  Morphism expected = g;
  if (recipe.complement) {
    expected = direct_sum(g, *recipe.complement);
    if (!retract_diagram_holds(g, expected)) return false;
  }
  const Morphism c = replay_recipe(expected.src(), recipe.steps);
  const BitMatrix& beta = recipe.target_iso;
  if (beta.rows() != expected.dst().dim() || beta.cols() != c.dst().dim()) return false;
  if (!is_invertible(beta)) return false;
  if (!(beta * c.dst().d() == expected.dst().d() * beta)) return false;
  return beta * c.matrix() == expected.matrix();
}

struct CofibrationOracle::Generated {
  struct State {
    Morphism arrow;
    std::vector<PushoutStep> steps;
  };
  std::vector<State> states;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;

  std::optional<std::size_t> find(const Morphism& g) const {
    auto it = buckets.find(arrow_key(g.matrix(), g.dst()));
    if (it == buckets.end()) return std::nullopt;
    for (std::size_t idx : it->second) {
      if (arrow_iso_under_target(states[idx].arrow, g)) return idx;
    }
    return std::nullopt;
  }

  bool insert(State state) {
    const std::string key = arrow_key(state.arrow.matrix(), state.arrow.dst());
    auto& bucket = buckets[key];
    for (std::size_t idx : bucket) {
      if (arrow_iso_under_target(states[idx].arrow, state.arrow)) return false;
    }
    bucket.push_back(states.size());
    states.push_back(std::move(state));
    return true;
  }
};

CofibrationOracle::CofibrationOracle() = default;
CofibrationOracle::~CofibrationOracle() = default;

const CofibrationOracle::Generated& CofibrationOracle::generated_from(const Comodule& source,
                                                                    std::size_t steps,
                                                                    std::size_t max_dim) {
  const std::string key = key_of(source) + "#" + std::to_string(steps) + "#" + std::to_string(max_dim);
  auto it = generated_.find(key);
  if (it != generated_.end()) return *it->second;

  auto gen = std::make_unique<Generated>();
  gen->insert({identity(source), {}});
  std::size_t frontier_begin = 0;
  for (std::size_t depth = 0; depth < steps; ++depth) {
    const std::size_t frontier_end = gen->states.size();
    for (std::size_t s = frontier_begin; s < frontier_end; ++s) {
      const Morphism arrow = gen->states[s].arrow;
      const std::vector<PushoutStep> history = gen->states[s].steps;
      const Comodule& c = arrow.dst();
      const BitMatrix socle = kernel_basis(c.d());
      for (const BitMatrix& sub : subspaces_of(socle.cols())) {
        const std::size_t p = sub.cols();
        const BitMatrix attach = socle.cols() == 0 ? BitMatrix(c.dim(), 0) : socle * sub;
        const Comodule tp = trivial(p, c.role());
        const Morphism attach_map = Morphism::trusted(tp, c, attach);
        for (std::size_t q = 0; c.dim() - p + q <= max_dim; ++q) {
          if (p == 0 && q == 0) continue;
          Pushout po = pushout(attach_map, zero_morphism(tp, trivial(q, c.role())));
          std::vector<PushoutStep> recipe = history;
          recipe.push_back({attach, q});
          gen->insert({compose(po.from_left, arrow), std::move(recipe)});
        }
      }
    }
    frontier_begin = frontier_end;
  }
  auto [pos, inserted] = generated_.emplace(key, std::move(gen));
  return *pos->second;
}

std::optional<GenerationRecipe> CofibrationOracle::generation_search(const Morphism& g, std::size_t steps,
                                                                     std::size_t max_dim) {
  if (g.src().dim() > max_dim || g.dst().dim() > max_dim) return std::nullopt;
  {
    const Generated& gen = generated_from(g.src(), steps, max_dim);
    if (auto idx = gen.find(g)) {
      const auto& state = gen.states[*idx];
      return GenerationRecipe{state.steps, std::nullopt, *arrow_iso_under_target(state.arrow, g)};
    }
  }
  // Retract step: g is a retract of a generated arrow c exactly when
  // c ≅ g ⊕ h for some arrow h, and h may be taken between catalog objects.
  auto cat_it = catalogs_.find(max_dim);
  if (cat_it == catalogs_.end()) {
    cat_it = catalogs_.emplace(max_dim, std::make_unique<Catalog>(max_dim, g.role())).first;
  }
  const Catalog& cat = *cat_it->second;
  if (cat.role() != g.role()) return std::nullopt;
  for (std::size_t i = 0; i < cat.object_count(); ++i) {
    const Comodule& extra_src = cat.object(i);
    if (g.src().dim() + extra_src.dim() > max_dim) continue;
    const Comodule source = direct_sum(g.src(), extra_src);
    for (std::size_t j = 0; j < cat.object_count(); ++j) {
      const Comodule& extra_dst = cat.object(j);
      if (g.dst().dim() + extra_dst.dim() > max_dim) continue;
      if (extra_src.dim() == 0 && extra_dst.dim() == 0) continue;
      const Generated& gen = generated_from(source, steps, max_dim);
      std::optional<GenerationRecipe> found;
      cat.visit_pair(i, j, [&](const MorphismId&, const Morphism& h) {
        const Morphism sum = direct_sum(g, h);
        if (auto idx = gen.find(sum)) {
          const auto& state = gen.states[*idx];
          found = GenerationRecipe{state.steps, h, *arrow_iso_under_target(state.arrow, sum)};
          return false;
        }
        return true;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

bool CofibrationOracle::is_single_pushout(const Morphism& g, std::size_t max_dim) {
  if (g.role() != Role::Torsor) throw InputError("is_single_pushout: expects a comodule morphism");
  if (g.src().dim() > max_dim || g.dst().dim() > max_dim) return false;
  return generated_from(g.src(), 1, max_dim).find(g).has_value();
}

const std::vector<Morphism>& CofibrationOracle::noninvertible_weqs(std::size_t max_dim) {
  auto it = weqs_.find(max_dim);
  if (it != weqs_.end()) return it->second;
  std::vector<Morphism> out;
  Catalog cat(max_dim, Role::Torsor);
  cat.visit([&](const MorphismId&, const Morphism& w) {
    if (weq_a(w) && !is_isomorphism(w)) out.push_back(w);
    return true;
  });
  return weqs_.emplace(max_dim, std::move(out)).first->second;
}

const LiftingBases& CofibrationOracle::bases_for(const Morphism& g, const Morphism& w) {
  const std::string key =
      key_of(g.src()) + "/" + key_of(g.dst()) + "/" + key_of(w.src()) + "/" + key_of(w.dst());
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  return bases_.emplace(key, lifting_bases(g, w)).first->second;
}

CofCertificate CofibrationOracle::decide(const Morphism& g, const CofMethod& method) {
  if (g.role() != Role::Torsor) throw InputError("cof_membership: expects a comodule morphism");
  CofCertificate cert;
  cert.method = method_name(method);
  if (std::holds_alternative<ClosedForm>(method)) {
    cert.verdict = closed_form_cofibration(g);
  } else if (const auto* llp = std::get_if<LlpBounded>(&method)) {
    cert.max_dim = llp->max_dim;
    cert.verdict = true;
    for (const Morphism& w : noninvertible_weqs(llp->max_dim)) {
      if (auto sq = non_lifting_square(g, w, bases_for(g, w))) {
        cert.verdict = false;
        cert.failing_square = std::move(*sq);
        break;
      }
    }
  } else {
    const auto& gen = std::get<GenerationBounded>(method);
    cert.steps = gen.steps;
    cert.max_dim = gen.max_dim;
    cert.recipe = generation_search(g, gen.steps, gen.max_dim);
    cert.verdict = cert.recipe.has_value();
  }
  return cert;
}

CofCertificate cof_membership(const Morphism& g, const CofMethod& method) {
  CofibrationOracle oracle;
  return oracle.decide(g, method);
}

bool is_single_pushout(const Morphism& g, std::size_t max_dim) {
  CofibrationOracle oracle;
  return oracle.is_single_pushout(g, max_dim);
}

ModelStructure structure_a_literal(std::size_t max_dim) {
  ModelStructure ms = structure_a();
  ms.name = "a-literal";
  auto oracle = std::make_shared<CofibrationOracle>();
  ms.is_cof = [oracle, max_dim](const Morphism& g) { return oracle->is_single_pushout(g, max_dim); };
  return ms;
}

}  // namespace a2d
