#include "octqft/morphism.hpp"

#include "octqft/errors.hpp"

namespace octqft {

std::size_t signature_size(const Signature& s) {
  std::size_t n = 1;
  for (const auto& f : s) n *= f.dim;
  return n;
}

std::string to_string(const Factor& f) {
  std::string base;
  switch (f.kind) {
    case FactorKind::FullAlgebra: base = "A"; break;
    case FactorKind::SplitImage: base = f.label.empty() ? std::string("C") : f.label; break;
    case FactorKind::Block: base = "A_" + f.label; break;
  }
  return base + "(" + std::to_string(f.dim) + ")";
}

std::string to_string(const Signature& s) {
  if (s.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " x " : "") + to_string(s[i]);
  return out;
}

Morphism::Morphism(Signature dom, Signature cod, Matrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)) {
  if (matrix.rows() != signature_size(codomain) || matrix.cols() != signature_size(domain))
    throw input_error("DimensionMismatch", "matrix " + std::to_string(matrix.rows()) + "x" +
                                               std::to_string(matrix.cols()) + " for " + to_string(domain) +
                                               " -> " + to_string(codomain));
}

Scalar Morphism::scalar() const {
  if (matrix.rows() != 1 || matrix.cols() != 1) throw input_error("DimensionMismatch", "not a scalar morphism");
  return matrix(0, 0);
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!(g.codomain == f.domain))
    throw input_error("SignatureMismatch", to_string(g.codomain) + " vs " + to_string(f.domain));
  return Morphism(g.domain, f.codomain, f.matrix * g.matrix);
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Signature dom = f.domain, cod = f.codomain;
  dom.insert(dom.end(), g.domain.begin(), g.domain.end());
  cod.insert(cod.end(), g.codomain.begin(), g.codomain.end());
  return Morphism(std::move(dom), std::move(cod), kron(f.matrix, g.matrix));
}

bool equal(const Morphism& f, const Morphism& g) {
  return f.domain == g.domain && f.codomain == g.codomain && f.matrix == g.matrix;
}

Morphism identity_morphism(FieldSpec field, const Signature& s) {
  return Morphism(s, s, Matrix::identity(field, signature_size(s)));
}

}  // namespace octqft
