#include "a2d/axioms.hpp"

#include <array>
#include <map>
#include <tuple>
#include <unordered_map>

namespace a2d {

namespace {

enum Class : std::uint8_t { kWeq = 1, kCof = 2, kFib = 4 };

struct Entry {
  MorphismId id;
  Morphism morphism;
  std::uint8_t classes = 0;
};

std::uint8_t classify(const ModelStructure& ms, const Morphism& g) {
  std::uint8_t bits = 0;
  if (ms.weq(g)) bits |= kWeq;
  if (ms.cof(g)) bits |= kCof;
  if (ms.fib(g)) bits |= kFib;
  return bits;
}

const char* class_name(std::uint8_t c) {
  switch (c) {
    case kWeq:
      return "weak equivalences";
    case kCof:
      return "cofibrations";
    default:
      return "fibrations";
  }
}

struct MatrixKey {
  std::size_t src;
  std::size_t dst;
  BitMatrix a;
  bool operator==(const MatrixKey&) const = default;
};

struct MatrixKeyHash {
  std::size_t operator()(const MatrixKey& k) const { return k.a.hash() ^ (k.src * 31 + k.dst * 17); }
};

class Verifier {
 public:
  Verifier(const ModelStructure& ms, const Catalog& cat) : ms_(ms), cat_(cat) {
    by_src_.resize(cat.object_count());
    by_dst_.resize(cat.object_count());
    cat.visit([&](const MorphismId& id, const Morphism& m) {
      const std::size_t k = entries_.size();
      entries_.push_back({id, m, classify(ms, m)});
      by_src_[id.src].push_back(k);
      by_dst_[id.dst].push_back(k);
      lookup_.emplace(MatrixKey{id.src, id.dst, m.matrix()}, k);
      return true;
    });
  }

  AxiomCheck two_of_three() {
    AxiomCheck check{"two_of_three", true, cat_.max_dim(), 0, std::nullopt};
    for (std::size_t y = 0; y < cat_.object_count() && check.passed; ++y) {
      for (std::size_t fi : by_dst_[y]) {
        const Entry& f = entries_[fi];
        for (std::size_t gi : by_src_[y]) {
          const Entry& g = entries_[gi];
          const Morphism gf = compose(g.morphism, f.morphism);
          const bool wf = f.classes & kWeq;
          const bool wg = g.classes & kWeq;
          const bool wgf = ms_.weq(gf);
          ++check.cases;
          if (wf + wg + wgf == 2) {
            check.passed = false;
            check.witness = Witness{
                "two of f, g, g∘f are weak equivalences but the third is not",
                {{"f", f.morphism}, {"g", g.morphism}, {"g∘f", gf}}};
            break;
          }
        }
        if (!check.passed) break;
      }
    }
    return check;
  }

  AxiomCheck retracts() {
    AxiomCheck check{"retract_closure", true, cat_.max_dim(), 0, std::nullopt};
    const std::size_t n = cat_.object_count();
    std::vector<std::vector<RetractPair>> pairs(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t x2 = 0; x2 < n; ++x2) pairs[x * n + x2] = retract_pairs(cat_.object(x), cat_.object(x2));
    }
    for (const Entry& outer : entries_) {
      const std::size_t m2 = outer.id.src;
      const std::size_t n2 = outer.id.dst;
      const BitMatrix& big = outer.morphism.matrix();
      for (std::size_t m = 0; m < n; ++m) {
        for (const RetractPair& p0 : pairs[m * n + m2]) {
          const BitMatrix big_i0 = big * p0.section.matrix();
          for (std::size_t nn = 0; nn < n; ++nn) {
            for (const RetractPair& p1 : pairs[nn * n + n2]) {
              const BitMatrix& i1 = p1.section.matrix();
              const BitMatrix& r1 = p1.retraction.matrix();
              BitMatrix small = r1 * big_i0;
              if (!(i1 * small == big_i0)) continue;
              if (!(small * p0.retraction.matrix() == r1 * big)) continue;
              ++check.cases;
              const std::uint8_t inner = classes_of(m, nn, small);
              const std::uint8_t lost = outer.classes & static_cast<std::uint8_t>(~inner);
              if (lost == 0) continue;
              const std::uint8_t c = (lost & kWeq) ? kWeq : (lost & kCof) ? kCof : kFib;
              check.passed = false;
              check.witness = Witness{
                  std::string("a retract of a map in the ") + class_name(c) + " is not in the class",
                  {{"retract", Morphism::trusted(cat_.object(m), cat_.object(nn), std::move(small))},
                   {"of", outer.morphism},
                   {"i0", p0.section},
                   {"r0", p0.retraction},
                   {"i1", p1.section},
                   {"r1", p1.retraction}}};
              return check;
            }
          }
        }
      }
    }
    return check;
  }

  AxiomCheck lifting(std::uint8_t left_mask, std::uint8_t right_mask, const std::string& name) {
    AxiomCheck check{name, true, cat_.max_dim(), 0, std::nullopt};
    std::vector<std::size_t> lefts, rights;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if ((entries_[k].classes & left_mask) == left_mask) lefts.push_back(k);
      if ((entries_[k].classes & right_mask) == right_mask) rights.push_back(k);
    }
    for (std::size_t li : lefts) {
      for (std::size_t ri : rights) {
        const Entry& l = entries_[li];
        const Entry& r = entries_[ri];
        ++check.cases;
        if (auto sq = non_lifting_square(l.morphism, r.morphism, bases(l.id, r.id))) {
          check.passed = false;
          check.witness = Witness{"commuting square without a lift",
                                  {{"left", sq->left}, {"right", sq->right}, {"top", sq->top},
                                   {"bottom", sq->bottom}}};
          return check;
        }
      }
    }
    return check;
  }

  AxiomCheck factorization(FactorKind kind) {
    const bool first_kind = kind == FactorKind::CofAcyclicFib;
    AxiomCheck check{first_kind ? "factorization_cof_then_acyclic_fib" : "factorization_acyclic_cof_then_fib",
                     true, cat_.max_dim(), 0, std::nullopt};
    for (const Entry& e : entries_) {
      ++check.cases;
      const Morphism& f = e.morphism;
      std::vector<Factorization> candidates;
      if (ms_.factor) {
        if (auto fac = ms_.factor(f, kind)) candidates.push_back(std::move(*fac));
      }
      candidates.push_back({f, identity(f.dst())});
      candidates.push_back({identity(f.src()), f});
      bool ok = false;
      for (const auto& fac : candidates) {
        if (!(fac.first.src() == f.src()) || !(fac.second.dst() == f.dst()) ||
            !(fac.first.dst() == fac.second.src())) {
          continue;
        }
        if (!(fac.second.matrix() * fac.first.matrix() == f.matrix())) continue;
        const bool left_ok = ms_.cof(fac.first) && (first_kind || ms_.weq(fac.first));
        const bool right_ok = ms_.fib(fac.second) && (!first_kind || ms_.weq(fac.second));
        if (left_ok && right_ok) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        check.passed = false;
        check.witness = Witness{"no valid factorization found", {{"f", f}}};
        return check;
      }
    }
    return check;
  }

 private:
  std::uint8_t classes_of(std::size_t src, std::size_t dst, const BitMatrix& a) {
    auto it = lookup_.find(MatrixKey{src, dst, a});
    if (it != lookup_.end()) return entries_[it->second].classes;
    return classify(ms_, Morphism::trusted(cat_.object(src), cat_.object(dst), a));
  }

  const LiftingBases& bases(const MorphismId& l, const MorphismId& r) {
    const auto key = std::make_tuple(l.src, l.dst, r.src, r.dst);
    auto it = bases_.find(key);
    if (it != bases_.end()) return it->second;
    LiftingBases b{cat_.hom(l.src, r.src).basis, cat_.hom(l.dst, r.dst).basis, cat_.hom(l.dst, r.src).basis};
    return bases_.emplace(key, std::move(b)).first->second;
  }

  const ModelStructure& ms_;
  const Catalog& cat_;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_src_;
  std::vector<std::vector<std::size_t>> by_dst_;
  std::unordered_map<MatrixKey, std::size_t, MatrixKeyHash> lookup_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, LiftingBases> bases_;
};

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (const auto& c : checks) {
    if (c.axiom == axiom) return &c;
  }
  return nullptr;
}

std::vector<RetractPair> retract_pairs(const Comodule& x, const Comodule& x2) {
  std::vector<RetractPair> out;
  if (x.dim() > x2.dim()) return out;
  const std::size_t n = x.dim();
  const std::size_t n2 = x2.dim();
  const BitMatrix id = BitMatrix::identity(n);
  for (const Morphism& i : hom_space(x, x2)) {
    if (rank(i.matrix()) != n) continue;
    if (n == 0) {
      out.push_back({i, zero_morphism(x2, x)});
      continue;
    }
    // r ∘ i = id together with r d_{x2} = d_x r, linear in vec(r).
    const BitMatrix intertwine = kronecker(BitMatrix::identity(n), x2.d().transpose()) +
                                 kronecker(x.d(), BitMatrix::identity(n2));
    const BitMatrix system = vconcat(intertwine, kronecker(BitMatrix::identity(n), i.matrix().transpose()));
    const BitMatrix rhs = vconcat(BitMatrix(intertwine.rows(), 1), vectorize(id));
    auto particular = solve(system, rhs);
    if (!particular) continue;
    const BitMatrix kernel = kernel_basis(system);
    std::vector<BitMatrix> basis;
    for (std::size_t j = 0; j < kernel.cols(); ++j) basis.push_back(kernel.column(j));
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << basis.size()); ++k) {
      BitMatrix r = unvectorize(*particular + combine(basis, k, n * n2, 1), n, n2);
      out.push_back({i, Morphism::trusted(x2, x, std::move(r))});
    }
  }
  return out;
}

AxiomReport verify_axioms(const ModelStructure& ms, const Catalog& cat) {
  if (ms.role != cat.role()) throw InputError("verify_axioms: structure and catalog live on different sites");
  Verifier v(ms, cat);
  AxiomReport report;
  report.structure = ms.name;
  report.role = ms.role;
  report.bound = cat.max_dim();
  report.checks.push_back(v.two_of_three());
  report.checks.push_back(v.retracts());
  report.checks.push_back(v.lifting(kCof, kWeq | kFib, "lifting_cof_vs_acyclic_fib"));
  report.checks.push_back(v.lifting(kCof | kWeq, kFib, "lifting_acyclic_cof_vs_fib"));
  report.checks.push_back(v.factorization(FactorKind::CofAcyclicFib));
  report.checks.push_back(v.factorization(FactorKind::AcyclicCofFib));
  return report;
}

EqualityResult equal_on_catalog(const ModelStructure& ms1, const ModelStructure& ms2, const Catalog& cat) {
  if (ms1.role != ms2.role || ms1.role != cat.role()) {
    throw InputError("equal_on_catalog: structures and catalog must share a role");
  }
  EqualityResult result;
  const std::array<std::pair<const char*, bool (ModelStructure::*)(const Morphism&) const>, 3> preds{{
      {"weq", &ModelStructure::weq},
      {"cof", &ModelStructure::cof},
      {"fib", &ModelStructure::fib},
  }};
  for (const auto& [name, pred] : preds) {
    cat.visit([&](const MorphismId& id, const Morphism& m) {
      ++result.checked;
      if ((ms1.*pred)(m) != (ms2.*pred)(m)) {
        result.equal = false;
        result.predicate = name;
        result.witness = m;
        result.witness_id = id;
        return false;
      }
      return true;
    });
    if (!result.equal) break;
  }
  return result;
}

}  // namespace a2d
