#pragma once

#include <map>
#include <optional>
#include <string>

#include "eliahou/field.hpp"
#include "eliahou/monomial.hpp"
#include "eliahou/semigroup.hpp"

namespace eliahou {

// Sparse polynomial in k[x_1..x_r]; never stores zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial term(const Monomial& x, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Field& k, const Monomial& x, const Scalar& c);
  // this += c * x^shift * p
  void add_scaled(const Field& k, const Polynomial& p, const Scalar& c, const Monomial& shift);
  Polynomial times(const Field& k, const Polynomial& other) const;
  // Divides every term by x (precondition: x divides every monomial).
  Polynomial divided_by(const Monomial& x) const;

  bool has_constant_term() const;
  // Greatest common monomial divisor of the support; nullopt for the zero polynomial.
  std::optional<Monomial> monomial_content() const;
  // All monomials divisible by x.
  bool divisible_by(const Monomial& x) const;

  // Terms listed decreasing under the order, e.g. "x2*x3 - x1*x4".
  std::string to_string(const TermOrder& order) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Scalar> terms_;
};

// Basis element of a free module in the resolution. Level -1 is the ring R itself
// (a single generator of degree 0); level j >= 0 is a minimal generator of the j-th
// syzygy module, identified by its degree and its position in the fixed homology basis.
struct GeneratorId {
  int level = -1;
  mpq_class weight = 0;  // w . degree, leading sort key within a level
  SDegree degree;
  std::size_t index = 0;

  static GeneratorId ring(std::size_t dim) { return {-1, 0, zero_degree(dim), 0}; }
  bool is_ring() const { return level < 0; }
  std::string to_string() const;

  friend bool operator<(const GeneratorId& a, const GeneratorId& b);
  friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
    return a.level == b.level && a.degree == b.degree && a.index == b.index;
  }
};

// Element of the free module over the generators of one level: generator -> coefficient.
// Level-0 elements (polynomials in R) use the single key GeneratorId::ring.
using ModuleElement = std::map<GeneratorId, Polynomial>;

// x^lead - x^trail.
struct Binomial {
  Monomial lead;
  Monomial trail;
  Polynomial to_polynomial(const Field& k) const;
};

// acc += c * x^shift * v
void add_scaled(const Field& k, ModuleElement& acc, const ModuleElement& v, const Scalar& c, const Monomial& shift);
void add_scaled(const Field& k, ModuleElement& acc, const ModuleElement& v, const Scalar& c);
bool is_zero(const ModuleElement& v);
std::optional<Monomial> monomial_content(const ModuleElement& v);
ModuleElement divided_by(const ModuleElement& v, const Monomial& x);
// Common S-degree of all terms; throws NotHomogeneous. nullopt for the zero element.
std::optional<SDegree> homogeneous_degree(const Semigroup& s, const ModuleElement& v);

}  // namespace eliahou
