#include "a2d/comodule.hpp"

#include <bit>

namespace a2d {

namespace {

void require_role(const Comodule& m, Role role, std::string_view op) {
  if (m.role() != role) {
    throw InputError(std::string(op) + ": expected role " + std::string(to_string(role)) + ", got " +
                     std::string(to_string(m.role())));
  }
}

void require_same_role(const Comodule& a, const Comodule& b, std::string_view op) {
  if (a.role() != b.role()) {
    throw InputError(std::string(op) + ": role mismatch " + std::string(to_string(a.role())) +
                     " vs " + std::string(to_string(b.role())));
  }
}

std::optional<std::size_t> first_differing_column(const BitMatrix& a, const BitMatrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!(a.column(j) == b.column(j))) return j;
  }
  return std::nullopt;
}

BitMatrix square_zero_block(std::size_t n, bool upper) {
  BitMatrix d(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (upper) {
      d.set(i, n + i, true);
    } else {
      d.set(n + i, i, true);
    }
  }
  return d;
}

}  // namespace

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Torsor:
      return "torsor";
    case Role::Point:
      return "point";
    case Role::Overlap:
      return "overlap";
  }
  return "unknown";
}

Role role_from_string(std::string_view name) {
  if (name == "torsor") return Role::Torsor;
  if (name == "point") return Role::Point;
  if (name == "overlap") return Role::Overlap;
  throw InputError("unknown role '" + std::string(name) + "'");
}

namespace hopf {

BitMatrix comultiplication() {
  // Δ(1) = 1⊗1, Δ(x) = x⊗1 + 1⊗x; rows are 1⊗1, 1⊗x, x⊗1, x⊗x.
  return BitMatrix::from_rows({{1, 0}, {0, 1}, {0, 1}, {0, 0}});
}

BitMatrix counit() { return BitMatrix::from_rows({{1, 0}}); }

BitMatrix unit() { return BitMatrix::from_rows({{1}, {0}}); }

// 1·1 = 1, 1·x = x·1 = x, x·x = 0
BitMatrix multiplication() { return BitMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 1, 0}}); }

BitMatrix antipode() { return BitMatrix::identity(2); }

}  // namespace hopf

Comodule::Comodule(std::size_t dim, BitMatrix d, Role role) : dim_(dim), d_(std::move(d)), role_(role) {
  if (d_.rows() != dim_ || d_.cols() != dim_) {
    throw InputError("comodule: structure matrix must be " + std::to_string(dim_) + "x" +
                     std::to_string(dim_));
  }
  if (!(d_ * d_).is_zero()) throw InputError("comodule: structure matrix does not square to zero");
  if (role_ == Role::Point && !d_.is_zero()) {
    throw InputError("comodule: point-side objects must have d = 0");
  }
}

Morphism::Morphism(Comodule src, Comodule dst, BitMatrix a, Unchecked)
    : src_(std::move(src)), dst_(std::move(dst)), a_(std::move(a)) {}

Morphism::Morphism(Comodule src, Comodule dst, BitMatrix a)
    : Morphism(std::move(src), std::move(dst), std::move(a), Unchecked{}) {
  require_same_role(src_, dst_, "morphism");
  if (a_.rows() != dst_.dim() || a_.cols() != src_.dim()) {
    throw InputError("morphism: matrix must be " + std::to_string(dst_.dim()) + "x" +
                     std::to_string(src_.dim()));
  }
  if (!(a_ * src_.d() == dst_.d() * a_)) {
    throw InputError("morphism: matrix does not intertwine the structure maps");
  }
}

Morphism Morphism::trusted(Comodule src, Comodule dst, BitMatrix a) {
  return Morphism(std::move(src), std::move(dst), std::move(a), Unchecked{});
}

BitMatrix coaction_matrix(const Coaction& c) {
  const std::size_t n = c.psi0.rows();
  BitMatrix psi(2 * n, c.psi0.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c.psi0.cols(); ++j) {
      psi.set(2 * i, j, c.psi0.get(i, j));
      psi.set(2 * i + 1, j, c.psi1.get(i, j));
    }
  }
  return psi;
}

Comodule validate_coaction(const Coaction& c) {
  const std::size_t n = c.psi0.rows();
  if (!c.psi0.is_square() || c.psi1.rows() != n || c.psi1.cols() != n) {
    throw InputError("coaction: psi0 and psi1 must be square of equal size");
  }
  const BitMatrix psi = coaction_matrix(c);
  const BitMatrix id = BitMatrix::identity(n);

  // (id ⊗ ε) ∘ ψ = id
  const BitMatrix counit_side = kronecker(id, hopf::counit()) * psi;
  if (auto j = first_differing_column(counit_side, id)) {
    throw CoactionError(CoactionError::Kind::Counit, BitMatrix::unit_column(n, *j),
                        "coaction violates the counit axiom on basis vector " + std::to_string(*j));
  }
  // (ψ ⊗ id) ∘ ψ = (id ⊗ Δ) ∘ ψ
  const BitMatrix lhs = kronecker(psi, BitMatrix::identity(2)) * psi;
  const BitMatrix rhs = kronecker(id, hopf::comultiplication()) * psi;
  if (auto j = first_differing_column(lhs, rhs)) {
    throw CoactionError(CoactionError::Kind::Coassociativity, BitMatrix::unit_column(n, *j),
                        "coaction is not coassociative on basis vector " + std::to_string(*j));
  }
  return Comodule(n, c.psi1, Role::Torsor);
}

Comodule zero_object(Role role) { return Comodule(0, BitMatrix(0, 0), role); }

Comodule trivial(std::size_t n, Role role) { return Comodule(n, BitMatrix(n, n), role); }

Comodule free_rank_one(Role role) { return Comodule(2, BitMatrix::from_rows({{0, 1}, {0, 0}}), role); }

Comodule canonical(NormalForm nf, Role role) {
  const std::size_t n = nf.trivial + 2 * nf.free;
  BitMatrix d(n, n);
  for (std::size_t i = 0; i < nf.free; ++i) {
    const std::size_t base = nf.trivial + 2 * i;
    d.set(base, base + 1, true);
  }
  return Comodule(n, std::move(d), role);
}

Comodule regular_comodule() {
  const BitMatrix delta = hopf::comultiplication();
  BitMatrix psi0(2, 2);
  BitMatrix psi1(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t k = 0; k < 2; ++k) {
      psi0.set(k, j, delta.get(2 * k, j));
      psi1.set(k, j, delta.get(2 * k + 1, j));
    }
  }
  return validate_coaction(Coaction{psi0, psi1});
}

Comodule direct_sum(const Comodule& a, const Comodule& b) {
  require_same_role(a, b, "direct_sum");
  return Comodule(a.dim() + b.dim(), direct_sum(a.d(), b.d()), a.role());
}

Morphism direct_sum(const Morphism& f, const Morphism& g) {
  return Morphism::trusted(direct_sum(f.src(), g.src()), direct_sum(f.dst(), g.dst()),
                           direct_sum(f.matrix(), g.matrix()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.dst() == g.src())) throw InputError("compose: target of f is not the source of g");
  return Morphism::trusted(f.src(), g.dst(), g.matrix() * f.matrix());
}

Morphism identity(const Comodule& m) { return Morphism::trusted(m, m, BitMatrix::identity(m.dim())); }

Morphism zero_morphism(const Comodule& src, const Comodule& dst) {
  require_same_role(src, dst, "zero_morphism");
  return Morphism::trusted(src, dst, BitMatrix(dst.dim(), src.dim()));
}

bool is_isomorphism(const Morphism& f) { return is_invertible(f.matrix()); }

std::optional<Morphism> inverse(const Morphism& f) {
  auto inv = inverse(f.matrix());
  if (!inv) return std::nullopt;
  return Morphism::trusted(f.dst(), f.src(), std::move(*inv));
}

BitMatrix hom_basis_vectors(const Comodule& src, const Comodule& dst) {
  require_same_role(src, dst, "hom_space");
  const std::size_t n = src.dim();
  const std::size_t m = dst.dim();
  if (m == 0 || n == 0) return BitMatrix(m * n, 0);
  // vec(A d_src) + vec(d_dst A) = 0
  const BitMatrix system = kronecker(BitMatrix::identity(m), src.d().transpose()) +
                           kronecker(dst.d(), BitMatrix::identity(n));
  return kernel_basis(system);
}

std::vector<BitMatrix> hom_basis(const Comodule& src, const Comodule& dst) {
  const BitMatrix vecs = hom_basis_vectors(src, dst);
  std::vector<BitMatrix> basis;
  basis.reserve(vecs.cols());
  for (std::size_t j = 0; j < vecs.cols(); ++j) {
    basis.push_back(unvectorize(vecs.column(j), dst.dim(), src.dim()));
  }
  return basis;
}

std::size_t hom_dimension(const Comodule& src, const Comodule& dst) {
  return hom_basis_vectors(src, dst).cols();
}

BitMatrix combine(const std::vector<BitMatrix>& basis, std::uint64_t index, std::size_t rows,
                  std::size_t cols) {
  BitMatrix a(rows, cols);
  while (index != 0) {
    a += basis[std::countr_zero(index)];
    index &= index - 1;
  }
  return a;
}

std::vector<Morphism> hom_space(const Comodule& src, const Comodule& dst) {
  const auto basis = hom_basis(src, dst);
  if (basis.size() > 24) {
    throw ResourceError("hom_space: 2^" + std::to_string(basis.size()) +
                        " morphisms is too many to list");
  }
  std::vector<Morphism> out;
  out.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << basis.size()); ++i) {
    out.push_back(Morphism::trusted(src, dst, combine(basis, i, dst.dim(), src.dim())));
  }
  return out;
}

Subobject subobject(const Comodule& m, const BitMatrix& basis) {
  if (basis.rows() != m.dim()) throw InputError("subobject: basis has wrong ambient dimension");
  if (rank(basis) != basis.cols()) throw InputError("subobject: basis columns are dependent");
  auto induced = solve(basis, m.d() * basis);
  if (!induced) throw InputError("subobject: span is not stable under d");
  Comodule sub(basis.cols(), std::move(*induced), m.role());
  Morphism incl = Morphism::trusted(sub, m, basis);
  return {std::move(sub), std::move(incl)};
}

Quotient quotient(const Comodule& m, const BitMatrix& relations) {
  if (relations.rows() != m.dim()) throw InputError("quotient: relations have wrong ambient dimension");
  const BitMatrix rel = image_basis(relations);
  if (!in_span(rel, m.d() * rel)) throw InputError("quotient: relations are not stable under d");
  const BitMatrix comp = complete_basis(rel, BitMatrix::identity(m.dim()));
  const BitMatrix change = *inverse(hconcat(rel, comp));
  const BitMatrix proj = change.block(rel.cols(), 0, comp.cols(), m.dim());
  Comodule q(comp.cols(), proj * m.d() * comp, m.role());
  Morphism p = Morphism::trusted(m, q, proj);
  return {std::move(q), std::move(p)};
}

Subobject triv(const Comodule& m) { return subobject(m, kernel_basis(m.d())); }

Morphism triv(const Morphism& f) {
  const Subobject s = triv(f.src());
  const Subobject t = triv(f.dst());
  auto restricted = solve(t.inclusion.matrix(), f.matrix() * s.inclusion.matrix());
  // f maps ker d_src into ker d_dst, so the system is always consistent.
  return Morphism::trusted(s.object, t.object, std::move(*restricted));
}

bool is_x_trivial(const Comodule& m) { return m.d().is_zero(); }

NormalForm normal_form(const Comodule& m) {
  const std::size_t b = rank(m.d());
  return {m.dim() - 2 * b, b};
}

Morphism normal_form_iso(const Comodule& m) {
  const NormalForm nf = normal_form(m);
  const Echelon e = row_reduce(m.d());
  // d(e_p) for pivot columns p spans im d; e_p are their chosen preimages.
  const BitMatrix lifts = BitMatrix::identity(m.dim()).select_columns(e.pivots);
  const BitMatrix images = m.d() * lifts;
  const BitMatrix socle_complement = complete_basis(images, kernel_basis(m.d()));
  BitMatrix p(m.dim(), m.dim());
  p.set_block(0, 0, socle_complement);
  for (std::size_t i = 0; i < nf.free; ++i) {
    p.set_block(0, nf.trivial + 2 * i, images.column(i));
    p.set_block(0, nf.trivial + 2 * i + 1, lifts.column(i));
  }
  return Morphism(canonical(nf, m.role()), m, std::move(p));
}

bool iso_test(const Comodule& m, const Comodule& n) {
  require_same_role(m, n, "iso_test");
  return normal_form(m) == normal_form(n);
}

std::optional<Morphism> find_isomorphism_by_search(const Comodule& m, const Comodule& n) {
  require_same_role(m, n, "find_isomorphism_by_search");
  if (m.dim() != n.dim()) return std::nullopt;
  const auto basis = hom_basis(m, n);
  if (basis.size() > 30) throw ResourceError("find_isomorphism_by_search: hom space too large");
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << basis.size()); ++i) {
    BitMatrix a = combine(basis, i, n.dim(), m.dim());
    if (is_invertible(a)) return Morphism::trusted(m, n, std::move(a));
  }
  return std::nullopt;
}

Pushout pushout(const Morphism& f, const Morphism& g) {
  if (!(f.src() == g.src())) throw InputError("pushout: the two morphisms have different sources");
  const Comodule sum = direct_sum(f.dst(), g.dst());
  // In characteristic 2, (f(v), -g(v)) = (f(v), g(v)).
  Quotient q = quotient(sum, vconcat(f.matrix(), g.matrix()));
  const std::size_t m = f.dst().dim();
  const std::size_t b = g.dst().dim();
  BitMatrix left(m + b, m);
  left.set_block(0, 0, BitMatrix::identity(m));
  BitMatrix right(m + b, b);
  right.set_block(m, 0, BitMatrix::identity(b));
  Morphism in_left = Morphism::trusted(f.dst(), q.object, q.projection.matrix() * left);
  Morphism in_right = Morphism::trusted(g.dst(), q.object, q.projection.matrix() * right);
  return {std::move(q.object), std::move(in_left), std::move(in_right)};
}

Comodule extended_comodule(const Comodule& v) {
  require_role(v, Role::Point, "extended_comodule");
  return Comodule(2 * v.dim(), square_zero_block(v.dim(), true), Role::Torsor);
}

Morphism extended_comodule(const Morphism& g) {
  return Morphism::trusted(extended_comodule(g.src()), extended_comodule(g.dst()),
                           direct_sum(g.matrix(), g.matrix()));
}

Comodule forget(const Comodule& m) {
  require_role(m, Role::Torsor, "forget");
  return trivial(m.dim(), Role::Point);
}

Morphism forget(const Morphism& g) {
  return Morphism::trusted(forget(g.src()), forget(g.dst()), g.matrix());
}

Comodule underlying_k(const Comodule& m) {
  require_role(m, Role::Overlap, "underlying_k");
  return trivial(m.dim(), Role::Point);
}

Morphism underlying_k(const Morphism& g) {
  return Morphism::trusted(underlying_k(g.src()), underlying_k(g.dst()), g.matrix());
}

Comodule free_module(const Comodule& v) {
  require_role(v, Role::Point, "free_module");
  return Comodule(2 * v.dim(), square_zero_block(v.dim(), false), Role::Overlap);
}

Morphism free_module(const Morphism& g) {
  return Morphism::trusted(free_module(g.src()), free_module(g.dst()),
                           direct_sum(g.matrix(), g.matrix()));
}

}  // namespace a2d
