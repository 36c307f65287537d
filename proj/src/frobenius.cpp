#include "octqft/frobenius.hpp"

#include <map>

#include "octqft/errors.hpp"

namespace octqft {

namespace {

std::string first_difference(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return "shape mismatch";
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != y(i, j))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + x(i, j).to_string() + " vs " +
               y(i, j).to_string();
  return {};
}

void add_matrix_check(CheckReport& r, const std::string& name, const Matrix& x, const Matrix& y) {
  const bool ok = x == y;
  r.add(name, ok, ok ? std::string() : first_difference(x, y));
}

Matrix row_matrix(const Vector& v) {
  Matrix m(v.empty() ? FieldSpec() : v.front().field(), 1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

Matrix column_matrix(const Vector& v) {
  Matrix m(v.empty() ? FieldSpec() : v.front().field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// CheckReport

bool CheckReport::all_ok() const {
  for (const auto& it : items)
    if (!it.ok) return false;
  return true;
}

void CheckReport::add(std::string name, bool ok, std::string witness) {
  items.push_back({std::move(name), ok, std::move(witness)});
}

const CheckReport::Item* CheckReport::find(const std::string& name) const {
  for (const auto& it : items)
    if (it.name == name) return &it;
  return nullptr;
}

// ---------------------------------------------------------------------------
// FrobeniusStructure

const Element& FrobeniusStructure::window_inverse() const {
  if (!window_inverse_) throw math_error("WindowNotInvertible", "window element is not invertible");
  return *window_inverse_;
}

Scalar FrobeniusStructure::apply_counit(const Element& x) const {
  Scalar s(field());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s.add_product(x[i], counit_[i]);
  return s;
}

Vector FrobeniusStructure::comultiply(const Element& x) const {
  const std::size_t n = dim();
  Vector out = zero_vector(field(), n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& t : comul_[i]) out[t.j * n + t.k].add_product(x[i], t.coeff);
  }
  return out;
}

Matrix FrobeniusStructure::unit_matrix() const { return column_matrix(A_.unit()); }
Matrix FrobeniusStructure::counit_matrix() const { return row_matrix(counit_); }

Matrix FrobeniusStructure::comultiplication_matrix() const {
  const std::size_t n = dim();
  Matrix m(field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : comul_[i]) m(t.j * n + t.k, i) = t.coeff;
  return m;
}

Matrix FrobeniusStructure::window_power_matrix(long power) const {
  Element e = A_.unit();
  const Element& base = power < 0 ? window_inverse() : window_;
  for (long i = 0; i < (power < 0 ? -power : power); ++i) e = A_.multiply(e, base);
  return A_.left_regular_matrix(e);
}

bool FrobeniusStructure::is_special() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!A_.unit()[i].is_zero()) {
      const Scalar zeta = window_[i] / A_.unit()[i];
      return !zeta.is_zero() && A_.scalar(zeta) == window_;
    }
  return false;
}

FrobeniusStructure frobenius_structure(const Algebra& A, const Vector& eps, bool require_invertible_window) {
  const std::size_t n = A.dim();
  if (eps.size() != n) throw input_error("DimensionMismatch", "counit length");
  for (const auto& e : eps)
    if (e.field() != A.field()) throw input_error("FieldMismatch", "counit coefficient");
  FrobeniusStructure F;
  F.A_ = A;
  F.counit_ = eps;
  F.g_ = Matrix(A.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j)) F.g_(i, j).add_product(c, eps[k]);
  if (F.g_ != F.g_.transpose()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (F.g_(i, j) != F.g_(j, i))
          throw math_error("NotSymmetric",
                           "eps(e" + std::to_string(i) + " e" + std::to_string(j) + ") != eps(e" + std::to_string(j) +
                               " e" + std::to_string(i) + ")");
  }
  try {
    F.ginv_ = invert_matrix(F.g_);
  } catch (const Error&) {
    throw math_error("DegeneratePairing", "pairing eps o mu has rank " + std::to_string(rank(F.g_)) + " < " +
                                              std::to_string(n));
  }
  F.comul_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : A.product(i, j))
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& gjk = F.ginv_(j, k);
          if (gjk.is_zero()) continue;
          auto [it, fresh] = acc.try_emplace({m, k}, c * gjk);
          if (!fresh) it->second.add_product(c, gjk);
        }
    for (const auto& [jk, c] : acc)
      if (!c.is_zero()) F.comul_[i].push_back({jk.first, jk.second, c});
  }
  F.window_ = A.zero();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& gjk = F.ginv_(j, k);
      if (gjk.is_zero()) continue;
      for (const auto& [m, c] : A.product(j, k)) F.window_[m].add_product(gjk, c);
    }
  F.window_inverse_ = invert_element(A, F.window_);
  if (require_invertible_window && !F.window_inverse_)
    throw math_error("WindowNotInvertible", "window element is not invertible (algebra not strongly separable)");
  const CheckReport laws = check_frobenius(F);
  if (!laws.all_ok())
    for (const auto& it : laws.items)
      if (!it.ok) throw math_error("NotFrobenius", it.name + ": " + it.witness);
  return F;
}

FrobeniusStructure frobenius_from_counit(const Algebra& A, const Vector& eps) {
  return frobenius_structure(A, eps, true);
}

FrobeniusStructure frobenius_from_window(const Algebra& A, const Element& z) {
  if (!is_strongly_separable(A))
    throw math_error("NotStronglySeparable", "canonical pairing is degenerate");
  if (!is_central(A, z)) throw math_error("NotCentral", "window candidate is not central");
  const auto zinv = invert_element(A, z);
  if (!zinv) throw math_error("NotInvertible", "window candidate is not invertible");
  Vector eps = zero_vector(A.field(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Matrix L = A.left_regular_matrix(A.multiply(*zinv, A.basis(i)));
    for (std::size_t r = 0; r < A.dim(); ++r) eps[i] += L(r, r);
  }
  return frobenius_from_counit(A, eps);
}

FrobeniusStructure canonical_frobenius(const Algebra& A) { return frobenius_from_window(A, A.unit()); }

Element window_element(const FrobeniusStructure& F) {
  const Vector d = F.comultiply(F.algebra().unit());
  const std::size_t n = F.dim();
  Element out = F.algebra().zero();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (d[j * n + k].is_zero()) continue;
      for (const auto& [m, c] : F.algebra().product(j, k)) out[m].add_product(d[j * n + k], c);
    }
  return out;
}

std::vector<TrilinearEntry> trilinear_form(const FrobeniusStructure& F) {
  const Algebra& A = F.algebra();
  const std::size_t n = A.dim();
  std::vector<TrilinearEntry> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element eij = A.zero();
      for (const auto& [m, c] : A.product(i, j)) eij[m] = c;
      for (std::size_t k = 0; k < n; ++k) {
        Scalar v(A.field());
        for (std::size_t m = 0; m < n; ++m)
          if (!eij[m].is_zero()) v.add_product(eij[m], F.pairing()(m, k));
        if (!v.is_zero()) out.push_back({i, j, k, v});
      }
    }
  return out;
}

CheckReport check_frobenius(const FrobeniusStructure& F) {
  const Algebra& A = F.algebra();
  const std::size_t n = A.dim();
  const FieldSpec f = A.field();
  CheckReport r;
  r.add("symmetric", F.pairing() == F.pairing().transpose());

  std::string witness;
  for (std::size_t i = 0; i < n && witness.empty(); ++i)
    for (std::size_t j = 0; j < n && witness.empty(); ++j) {
      const Vector lhs = F.comultiply(A.multiply(A.basis(i), A.basis(j)));
      Vector right = zero_vector(f, n * n), left = zero_vector(f, n * n);
      for (const auto& t : F.coproduct(i))
        for (const auto& [m, c] : A.product(t.k, j)) right[t.j * n + m].add_product(t.coeff, c);
      for (const auto& t : F.coproduct(j))
        for (const auto& [m, c] : A.product(i, t.j)) left[m * n + t.k].add_product(t.coeff, c);
      if (lhs != right || lhs != left) witness = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  r.add("frobenius relation", witness.empty(), witness);

  witness.clear();
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    std::map<std::array<std::size_t, 3>, Scalar> lhs, rhs;
    auto put = [](auto& acc, std::array<std::size_t, 3> key, const Scalar& c) {
      auto [it, fresh] = acc.try_emplace(key, c);
      if (!fresh) it->second += c;
    };
    for (const auto& t : F.coproduct(i)) {
      for (const auto& u : F.coproduct(t.j)) put(lhs, {u.j, u.k, t.k}, t.coeff * u.coeff);
      for (const auto& u : F.coproduct(t.k)) put(rhs, {t.j, u.j, u.k}, t.coeff * u.coeff);
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs != rhs) witness = "basis element " + std::to_string(i);
  }
  r.add("coassociative", witness.empty(), witness);

  witness.clear();
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    Vector left = zero_vector(f, n), right = zero_vector(f, n);
    for (const auto& t : F.coproduct(i)) {
      left[t.k].add_product(F.counit()[t.j], t.coeff);
      right[t.j].add_product(F.counit()[t.k], t.coeff);
    }
    if (left != A.basis(i) || right != A.basis(i)) witness = "basis element " + std::to_string(i);
  }
  r.add("counit", witness.empty(), witness);
  return r;
}

bool bubble_holds(const FrobeniusStructure& F) {
  const Algebra& A = F.algebra();
  const Element& ainv = F.window_inverse();
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Element md = A.zero();
    for (const auto& t : F.coproduct(i))
      for (const auto& [m, c] : A.product(t.j, t.k)) md[m].add_product(t.coeff, c);
    if (A.multiply(ainv, md) != A.basis(i)) return false;
  }
  return true;
}

Matrix central_idempotent_p(const FrobeniusStructure& F) {
  const Algebra& A = F.algebra();
  const std::size_t n = A.dim();
  const Matrix Linv = A.left_regular_matrix(F.window_inverse());
  Matrix m(A.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : F.coproduct(i))
      for (const auto& [k, c] : A.product(t.k, t.j)) m(k, i).add_product(t.coeff, c);
  return Linv * m;
}

Matrix swap_matrix(FieldSpec f, std::size_t m, std::size_t n) {
  Matrix s(f, n * m, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s(j * m + i, i * n + j) = Scalar::one(f);
  return s;
}

CheckReport check_idempotent_properties(const FrobeniusStructure& F, const Matrix& p) {
  const Algebra& A = F.algebra();
  const FieldSpec f = A.field();
  const std::size_t n = A.dim();
  const Matrix I = Matrix::identity(f, n);
  const Matrix mu = A.multiplication_matrix();
  const Matrix delta = F.comultiplication_matrix();
  const Matrix eta = F.unit_matrix();
  const Matrix eps = F.counit_matrix();
  CheckReport r;
  add_matrix_check(r, "(1) p o p = p", p * p, p);
  add_matrix_check(r, "(2) p o eta = eta", p * eta, eta);
  add_matrix_check(r, "(3) eps o p = eps", eps * p, eps);

  const Matrix pp = kron(p, p), pI = kron(p, I), Ip = kron(I, p);
  const Matrix m_pp = mu * pp;
  const Matrix lhs4[] = {p * m_pp, p * (mu * pI), p * (mu * Ip)};
  bool ok4 = true;
  std::string w4;
  for (const auto& x : lhs4)
    if (x != m_pp) {
      ok4 = false;
      w4 = first_difference(x, m_pp);
      break;
    }
  r.add("(4) multiplication absorbs p", ok4, w4);

  const Matrix pp_d = pp * delta;
  const Matrix lhs5[] = {pp_d * p, pI * delta * p, Ip * delta * p};
  bool ok5 = true;
  std::string w5;
  for (const auto& x : lhs5)
    if (x != pp_d) {
      ok5 = false;
      w5 = first_difference(x, pp_d);
      break;
    }
  r.add("(5) comultiplication absorbs p", ok5, w5);

  const auto centre = centre_basis(A);
  std::string w6, w7;
  for (std::size_t c = 0; c < centre.size(); ++c) {
    if (w6.empty() && p.apply(centre[c]) != centre[c]) w6 = "centre basis vector " + std::to_string(c);
    const Matrix Lc = A.left_regular_matrix(centre[c]);
    if (w7.empty() && Lc * p != p * Lc) w7 = "centre basis vector " + std::to_string(c);
  }
  r.add("(6) p fixes the centre", w6.empty(), w6);
  r.add("(7) p commutes with central multiplication", w7.empty(), w7);
  add_matrix_check(r, "(8) image of p is central", mu * pI, mu * swap_matrix(f, n, n) * pI);
  return r;
}

Splitting split_idempotent(const Matrix& p) {
  if (!p.is_square() || p * p != p) throw math_error("NotIdempotent", "p o p != p");
  const RowEchelon e = rref(p);
  const FieldSpec f = p.field();
  Matrix im(f, p.rows(), e.rank);
  for (std::size_t c = 0; c < e.rank; ++c) {
    Vector v = p.column(e.pivots[c]);
    Scalar lead(f);
    for (const auto& x : v)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    const Scalar inv = lead.inverse();
    for (auto& x : v) x *= inv;
    im.set_column(c, v);
  }
  if (e.rank == 0) return {im, Matrix(f, 0, p.cols())};
  Matrix coim = left_inverse(im) * p;
  if (im * coim != p) throw math_error("NotIdempotent", "image factorization failed");
  return {im, coim};
}

// ---------------------------------------------------------------------------
// Iterated maps

Morphism iterated_mu(const FrobeniusStructure& F, std::size_t l) {
  if (l == 0) throw input_error("BadParams", "iterated multiplication needs arity >= 1");
  const Algebra& A = F.algebra();
  const std::size_t n = A.dim();
  const std::size_t cols = ipow(n, l);
  Matrix m(A.field(), n, cols);
  std::vector<std::size_t> digits(l, 0);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t rest = col;
    for (std::size_t d = l; d-- > 0;) {
      digits[d] = rest % n;
      rest /= n;
    }
    Element x = A.basis(digits[0]);
    for (std::size_t d = 1; d < l; ++d) {
      Element y = A.zero();
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [k, c] : A.product(i, digits[d])) y[k].add_product(x[i], c);
      }
      x = std::move(y);
    }
    m.set_column(col, x);
  }
  return Morphism(Signature(l, full_algebra(n)), {full_algebra(n)}, std::move(m));
}

Morphism iterated_delta(const FrobeniusStructure& F, std::size_t k) {
  if (k == 0) throw input_error("BadParams", "iterated comultiplication needs arity >= 1");
  const std::size_t n = F.dim();
  // columns[i]: sparse Delta^{(r)}(e_i) as index -> coefficient
  std::vector<std::map<std::size_t, Scalar>> cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i].emplace(i, Scalar::one(F.field()));
  for (std::size_t r = 1; r < k; ++r) {
    std::vector<std::map<std::size_t, Scalar>> next(n);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : F.coproduct(i))
        for (const auto& [idx, c] : cur[t.j]) {
          const std::size_t key = idx * n + t.k;
          auto [it, fresh] = next[i].try_emplace(key, c * t.coeff);
          if (!fresh) it->second.add_product(c, t.coeff);
        }
    cur = std::move(next);
  }
  Matrix m(F.field(), ipow(n, k), n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [idx, c] : cur[i]) m(idx, i) = c;
  return Morphism({full_algebra(n)}, Signature(k, full_algebra(n)), std::move(m));
}

Morphism P_map(const FrobeniusStructure& F, std::size_t k, std::size_t l) {
  const Morphism dk = iterated_delta(F, k), ml = iterated_mu(F, l);
  const Matrix mid = F.window_power_matrix(-static_cast<long>(k - 1));
  return Morphism(ml.domain, dk.codomain, dk.matrix * (mid * ml.matrix));
}

Morphism Q_map(const FrobeniusStructure& F, std::size_t k, std::size_t l) {
  const Morphism dk = iterated_delta(F, k), ml = iterated_mu(F, l);
  const Matrix mid = F.window_power_matrix(-static_cast<long>(k - 1)) * central_idempotent_p(F);
  return Morphism(ml.domain, dk.codomain, dk.matrix * (mid * ml.matrix));
}

IsoPair phi_iso(const FrobeniusStructure& F, std::size_t k) {
  const Morphism Pkk = P_map(F, k, k);
  const Splitting s = split_idempotent(Pkk.matrix);
  const std::size_t n = F.dim();
  const Factor img = reduced_image("P" + std::to_string(k), s.im.cols());
  Morphism fwd({full_algebra(n)}, {img}, s.coim * P_map(F, k, 1).matrix);
  Morphism inv({img}, {full_algebra(n)}, P_map(F, 1, k).matrix * s.im);
  return {std::move(fwd), std::move(inv)};
}

IsoPair psi_iso(const FrobeniusStructure& F, std::size_t k) {
  const Matrix p = central_idempotent_p(F);
  const Splitting sp = split_idempotent(p);
  const Morphism Qkk = Q_map(F, k, k);
  const Splitting s = split_idempotent(Qkk.matrix);
  const Factor c = split_image(sp.im.cols());
  const Factor img = reduced_image("Q" + std::to_string(k), s.im.cols());
  Morphism fwd({c}, {img}, s.coim * (Q_map(F, k, 1).matrix * sp.im));
  Morphism inv({img}, {c}, sp.coim * (Q_map(F, 1, k).matrix * s.im));
  return {std::move(fwd), std::move(inv)};
}

// ---------------------------------------------------------------------------
// Knowledgeable Frobenius algebras

KnowledgeableFrobenius knowledgeable_from_frobenius(const FrobeniusStructure& F) {
  const Algebra& A = F.algebra();
  const Matrix p = central_idempotent_p(F);
  const Splitting s = split_idempotent(p);
  const Matrix La = A.left_regular_matrix(F.window());
  const Matrix Lainv = A.left_regular_matrix(F.window_inverse());
  KnowledgeableFrobenius K;
  K.A = F;
  K.mu_C = s.coim * (A.multiplication_matrix() * kron(s.im, s.im));
  K.eta_C = s.coim * F.unit_matrix();
  K.delta_C = kron(s.coim, s.coim) * (F.comultiplication_matrix() * (La * s.im));
  K.epsilon_C = F.counit_matrix() * (Lainv * s.im);
  K.iota = s.im;
  K.iota_star = s.coim * La;
  attach_centre_structure(K);
  return K;
}

void attach_centre_structure(KnowledgeableFrobenius& K) {
  const std::size_t d = K.dim_C();
  const FieldSpec f = K.A.field();
  std::vector<StructureConstant> mul;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!K.mu_C(k, i * d + j).is_zero()) mul.push_back({i, j, k, K.mu_C(k, i * d + j)});
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("z" + std::to_string(i));
  const Algebra C = make_algebra(f, d, mul, K.eta_C.column(0), names);
  K.C = frobenius_structure(C, K.epsilon_C.row(0), false);
}

CheckReport check_knowledgeable(const KnowledgeableFrobenius& K) {
  const FrobeniusStructure& F = K.A;
  const FieldSpec f = F.field();
  const std::size_t n = F.dim(), d = K.dim_C();
  const Matrix In = Matrix::identity(f, n), Id = Matrix::identity(f, d);
  const Matrix muA = F.multiplication_matrix();
  const Matrix deltaA = F.comultiplication_matrix();
  CheckReport r;

  add_matrix_check(r, "C associative", K.mu_C * kron(K.mu_C, Id), K.mu_C * kron(Id, K.mu_C));
  {
    const Matrix left = K.mu_C * kron(K.eta_C, Id), right = K.mu_C * kron(Id, K.eta_C);
    const bool ok = left == Id && right == Id;
    r.add("C unit", ok, ok ? "" : first_difference(left == Id ? right : left, Id));
  }
  add_matrix_check(r, "C commutative", K.mu_C * swap_matrix(f, d, d), K.mu_C);
  add_matrix_check(r, "C coassociative", kron(K.delta_C, Id) * K.delta_C, kron(Id, K.delta_C) * K.delta_C);
  {
    const Matrix left = kron(K.epsilon_C, Id) * K.delta_C, right = kron(Id, K.epsilon_C) * K.delta_C;
    const bool ok = left == Id && right == Id;
    r.add("C counit", ok, ok ? "" : first_difference(left == Id ? right : left, Id));
  }
  {
    const Matrix dm = K.delta_C * K.mu_C;
    const Matrix a = kron(Id, K.mu_C) * kron(K.delta_C, Id);
    const Matrix b = kron(K.mu_C, Id) * kron(Id, K.delta_C);
    const bool ok = dm == a && dm == b;
    r.add("C frobenius relation", ok, ok ? "" : first_difference(dm, dm == a ? b : a));
  }
  {
    const CheckReport fa = check_frobenius(F);
    std::string w;
    for (const auto& it : fa.items)
      if (!it.ok) w = it.name + " " + it.witness;
    r.add("A symmetric frobenius", fa.all_ok(), w);
  }
  {
    const Matrix left = K.iota * K.mu_C, right = muA * kron(K.iota, K.iota);
    const Matrix ul = K.iota * K.eta_C, ur = F.unit_matrix();
    const bool ok = left == right && ul == ur;
    r.add("iota algebra map", ok, ok ? "" : (left != right ? first_difference(left, right) : "unit"));
  }
  add_matrix_check(r, "knowledge", muA * kron(K.iota, In), muA * swap_matrix(f, n, n) * kron(K.iota, In));
  add_matrix_check(r, "duality", K.epsilon_C * (K.mu_C * kron(Id, K.iota_star)),
                   F.counit_matrix() * (muA * kron(K.iota, In)));
  add_matrix_check(r, "Cardy", muA * swap_matrix(f, n, n) * deltaA, K.iota * K.iota_star);
  return r;
}

}  // namespace octqft
