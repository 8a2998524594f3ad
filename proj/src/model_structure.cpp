#include "a2d/model_structure.hpp"

namespace a2d {

namespace {

void require_role(const ModelStructure& ms, const Morphism& g) {
  if (g.role() != ms.role) {
    throw InputError("model structure '" + ms.name + "' lives on " + std::string(to_string(ms.role)) +
                     " but the morphism is " + std::string(to_string(g.role())));
  }
}

// Columns are the vectorizations of the given matrices.
BitMatrix stack_vectors(const std::vector<BitMatrix>& mats, std::size_t len) {
  BitMatrix out(len, mats.size());
  for (std::size_t j = 0; j < mats.size(); ++j) {
    const BitMatrix& m = mats[j];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.get(r, c)) out.set(r * m.cols() + c, j, true);
      }
    }
  }
  return out;
}

ModelStructure discrete_on(Role role, std::string name) {
  ModelStructure ms;
  ms.name = std::move(name);
  ms.role = role;
  ms.is_weq = [](const Morphism& g) { return is_isomorphism(g); };
  ms.is_cof = [](const Morphism&) { return true; };
  ms.is_fib = [](const Morphism&) { return true; };
  ms.factor = [](const Morphism& f, FactorKind kind) -> std::optional<Factorization> {
    if (kind == FactorKind::CofAcyclicFib) return Factorization{f, identity(f.dst())};
    return Factorization{identity(f.src()), f};
  };
  return ms;
}

}  // namespace

bool ModelStructure::weq(const Morphism& g) const {
  require_role(*this, g);
  return is_weq(g);
}

bool ModelStructure::cof(const Morphism& g) const {
  require_role(*this, g);
  return is_cof(g);
}

bool ModelStructure::fib(const Morphism& g) const {
  require_role(*this, g);
  return is_fib(g);
}

bool Square::commutes() const {
  return top.src() == left.src() && top.dst() == right.src() && bottom.src() == left.dst() &&
         bottom.dst() == right.dst() && right.matrix() * top.matrix() == bottom.matrix() * left.matrix();
}

std::optional<Morphism> find_lift(const Square& sq) {
  if (!sq.commutes()) throw InputError("find_lift: square does not commute");
  const Comodule& b = sq.left.dst();
  const Comodule& x = sq.right.src();
  const std::size_t nb = b.dim();
  const std::size_t nx = x.dim();
  if (nb == 0 || nx == 0) {
    // Only the zero map B → X exists.
    Morphism h = zero_morphism(b, x);
    if (compose(h, sq.left) == sq.top && compose(sq.right, h) == sq.bottom) return h;
    return std::nullopt;
  }
  const BitMatrix ix = BitMatrix::identity(nx);
  const BitMatrix ib = BitMatrix::identity(nb);
  // Unknown vec(h), h an nx × nb matrix.
  const BitMatrix intertwine = kronecker(ix, b.d().transpose()) + kronecker(x.d(), ib);
  const BitMatrix upper = kronecker(ix, sq.left.matrix().transpose());
  const BitMatrix lower = kronecker(sq.right.matrix(), ib);
  const BitMatrix system = vconcat(vconcat(intertwine, upper), lower);
  const BitMatrix rhs = vconcat(vconcat(BitMatrix(intertwine.rows(), 1), vectorize(sq.top.matrix())),
                                vectorize(sq.bottom.matrix()));
  auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;
  return Morphism::trusted(b, x, unvectorize(*sol, nx, nb));
}

LiftingBases lifting_bases(const Morphism& left, const Morphism& right) {
  return LiftingBases{hom_basis(left.src(), right.src()), hom_basis(left.dst(), right.dst()),
                      hom_basis(left.dst(), right.src())};
}

std::optional<Square> non_lifting_square(const Morphism& left, const Morphism& right) {
  return non_lifting_square(left, right, lifting_bases(left, right));
}

std::optional<Square> non_lifting_square(const Morphism& left, const Morphism& right,
                                         const LiftingBases& bases) {
  const Comodule& a = left.src();
  const Comodule& b = left.dst();
  const Comodule& x = right.src();
  const Comodule& y = right.dst();
  const BitMatrix& g = left.matrix();
  const BitMatrix& w = right.matrix();

  // Squares: (t, s) in Hom(A,X) × Hom(B,Y) with w t = s g.
  std::vector<BitMatrix> constraint;
  constraint.reserve(bases.top.size() + bases.bottom.size());
  for (const auto& t : bases.top) constraint.push_back(w * t);
  for (const auto& s : bases.bottom) constraint.push_back(s * g);
  const BitMatrix coords = kernel_basis(stack_vectors(constraint, y.dim() * a.dim()));
  const std::size_t square_dim = coords.cols();
  if (square_dim == 0) return std::nullopt;

  const std::size_t top_len = x.dim() * a.dim();
  const std::size_t len = top_len + y.dim() * b.dim();

  // Lifts h give the squares (h g, w h).
  BitMatrix lifted(len, bases.lift.size());
  for (std::size_t i = 0; i < bases.lift.size(); ++i) {
    const BitMatrix& h = bases.lift[i];
    lifted.set_block(0, i, vectorize(h * g));
    lifted.set_block(top_len, i, vectorize(w * h));
  }
  const std::size_t lifted_rank = rank(lifted);
  if (lifted_rank == square_dim) return std::nullopt;

  for (std::size_t k = 0; k < square_dim; ++k) {
    BitMatrix top(x.dim(), a.dim());
    BitMatrix bottom(y.dim(), b.dim());
    for (std::size_t j = 0; j < bases.top.size(); ++j) {
      if (coords.get(j, k)) top += bases.top[j];
    }
    for (std::size_t j = 0; j < bases.bottom.size(); ++j) {
      if (coords.get(bases.top.size() + j, k)) bottom += bases.bottom[j];
    }
    BitMatrix flat(len, 1);
    flat.set_block(0, 0, vectorize(top));
    flat.set_block(top_len, 0, vectorize(bottom));
    if (rank(hconcat(lifted, flat)) > lifted_rank) {
      return Square{Morphism::trusted(a, x, std::move(top)), Morphism::trusted(b, y, std::move(bottom)),
                    left, right};
    }
  }
  // Unreachable: a rank deficit means some basis square lies outside the span.
  throw std::logic_error("non_lifting_square: rank deficit without a witness");
}

bool has_llp(const Morphism& left, const Morphism& right) {
  return !non_lifting_square(left, right).has_value();
}

bool closed_form_cofibration(const Morphism& g) {
  // A d_src = d_dst A, so image(A d_src) ⊆ image(d_dst) always; equality is a
  // rank comparison.
  return rank(g.matrix() * g.src().d()) == rank(g.dst().d());
}

// triv(g) is invertible iff the socles have equal dimension and g is
// injective on the source socle.
bool weq_a(const Morphism& g) {
  const BitMatrix src_socle = kernel_basis(g.src().d());
  if (src_socle.cols() != g.dst().dim() - rank(g.dst().d())) return false;
  return rank(g.matrix() * src_socle) == src_socle.cols();
}

ModelStructure structure_a() {
  ModelStructure ms;
  ms.name = "a";
  ms.role = Role::Torsor;
  ms.is_weq = weq_a;
  ms.is_cof = closed_form_cofibration;
  ms.is_fib = [](const Morphism&) { return true; };
  ms.factor = [](const Morphism& f, FactorKind kind) -> std::optional<Factorization> {
    if (kind == FactorKind::CofAcyclicFib) return factor_cof_weq(f);
    return Factorization{identity(f.src()), f};
  };
  return ms;
}

ModelStructure structure_b() { return discrete_on(Role::Torsor, "b"); }

ModelStructure discrete_structure(Role role) {
  return discrete_on(role, "discrete(" + std::string(to_string(role)) + ")");
}

Factorization factor_cof_weq(const Morphism& f) {
  const Comodule& n = f.dst();
  const BitMatrix image = image_basis(f.matrix());
  const BitMatrix socle = kernel_basis(n.d());
  const BitMatrix complement = complete_basis(intersect_spans(socle, image), socle);

  const Subobject im = subobject(n, image);
  const Comodule q = direct_sum(im.object, trivial(complement.cols(), n.role()));

  BitMatrix c(q.dim(), f.src().dim());
  c.set_block(0, 0, *solve(image, f.matrix()));
  Morphism cof = Morphism::trusted(f.src(), q, std::move(c));
  Morphism weq = Morphism::trusted(q, n, hconcat(image, complement));
  return {std::move(cof), std::move(weq)};
}

}  // namespace a2d
