#include "eliahou/module.hpp"

#include <algorithm>
#include <vector>

#include "eliahou/error.hpp"

namespace eliahou {

Polynomial Polynomial::term(const Monomial& x, const Scalar& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.emplace(x, c);
  return p;
}

void Polynomial::add_term(const Field& k, const Monomial& x, const Scalar& c) {
  Scalar r = k.reduce(c);
  if (k.is_zero(r)) return;
  auto [it, inserted] = terms_.try_emplace(x, r);
  if (inserted) return;
  it->second = k.add(it->second, r);
  if (k.is_zero(it->second)) terms_.erase(it);
}

void Polynomial::add_scaled(const Field& k, const Polynomial& p, const Scalar& c, const Monomial& shift) {
  if (k.is_zero(c)) return;
  for (const auto& [x, v] : p.terms_) add_term(k, x * shift, k.mul(c, v));
}

Polynomial Polynomial::times(const Field& k, const Polynomial& other) const {
  Polynomial out;
  for (const auto& [x, v] : terms_) out.add_scaled(k, other, v, x);
  return out;
}

Polynomial Polynomial::divided_by(const Monomial& x) const {
  Polynomial out;
  for (const auto& [y, v] : terms_) out.terms_.emplace(y / x, v);
  return out;
}

bool Polynomial::has_constant_term() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_unit(); });
}

std::optional<Monomial> Polynomial::monomial_content() const {
  if (terms_.empty()) return std::nullopt;
  Monomial g = terms_.begin()->first;
  for (const auto& [x, v] : terms_) g = gcd(g, x);
  return g;
}

bool Polynomial::divisible_by(const Monomial& x) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return x.divides(t.first); });
}

std::string Polynomial::to_string(const TermOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [x, c] : sorted) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = x.is_unit();
    if (mag != 1 || unit) {
      out += mag.get_str();
      if (!unit) out += "*";
    }
    if (!unit) out += x.to_string();
  }
  return out;
}

Polynomial Binomial::to_polynomial(const Field& k) const {
  Polynomial p;
  p.add_term(k, lead, 1);
  p.add_term(k, trail, -1);
  return p;
}

std::string GeneratorId::to_string() const {
  if (is_ring()) return "R";
  return "b" + std::to_string(level) + degree_to_string(degree) + "#" + std::to_string(index);
}

bool operator<(const GeneratorId& a, const GeneratorId& b) {
  if (a.level != b.level) return a.level < b.level;
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.index < b.index;
}

void add_scaled(const Field& k, ModuleElement& acc, const ModuleElement& v, const Scalar& c, const Monomial& shift) {
  if (k.is_zero(c)) return;
  for (const auto& [id, p] : v) {
    Polynomial& slot = acc[id];
    slot.add_scaled(k, p, c, shift);
    if (slot.is_zero()) acc.erase(id);
  }
}

void add_scaled(const Field& k, ModuleElement& acc, const ModuleElement& v, const Scalar& c) {
  if (v.empty()) return;
  const std::size_t nvars = v.begin()->second.terms().begin()->first.nvars();
  add_scaled(k, acc, v, c, Monomial::unit(nvars));
}

bool is_zero(const ModuleElement& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& e) { return e.second.is_zero(); });
}

std::optional<Monomial> monomial_content(const ModuleElement& v) {
  std::optional<Monomial> g;
  for (const auto& [id, p] : v) {
    auto c = p.monomial_content();
    if (!c) continue;
    g = g ? gcd(*g, *c) : *c;
  }
  return g;
}

ModuleElement divided_by(const ModuleElement& v, const Monomial& x) {
  ModuleElement out;
  for (const auto& [id, p] : v) {
    if (!p.is_zero()) out.emplace(id, p.divided_by(x));
  }
  return out;
}

std::optional<SDegree> homogeneous_degree(const Semigroup& s, const ModuleElement& v) {
  std::optional<SDegree> deg;
  for (const auto& [id, p] : v) {
    for (const auto& [x, c] : p.terms()) {
      SDegree d = s.degree_of(x) + id.degree;
      if (!deg) {
        deg = std::move(d);
      } else if (*deg != d) {
        throw Error(ErrorKind::NotHomogeneous,
                    "terms of degrees " + degree_to_string(*deg) + " and " + degree_to_string(d));
      }
    }
  }
  return deg;
}

}  // namespace eliahou
