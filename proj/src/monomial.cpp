#include "eliahou/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eliahou/error.hpp"

namespace eliahou {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e < 0) throw Error(ErrorKind::InvalidInput, "negative exponent in monomial");
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<Exponent> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

Exponent Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), Exponent{0}); }

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << (i + 1);
    if (exps_[i] > 1) out << '^' << exps_[i];
  }
  return first ? "1" : out.str();
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

TermOrder TermOrder::parse(const std::string& text) {
  if (text == "degrevlex") return TermOrder(Kind::DegRevLex);
  if (text == "lex") return TermOrder(Kind::Lex);
  throw Error(ErrorKind::InvalidInput, "unknown term order '" + text + "'");
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  if (kind_ == Kind::Lex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

SDegree zero_degree(std::size_t dim) { return SDegree(dim, mpz_class(0)); }

SDegree operator+(const SDegree& a, const SDegree& b) {
  SDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

SDegree operator-(const SDegree& a, const SDegree& b) {
  SDegree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string degree_to_string(const SDegree& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += m[i].get_str();
  }
  return s + ")";
}

SDegree parse_degree(const std::string& text) {
  SDegree m;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    mpz_class v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw Error(ErrorKind::InvalidInput, "bad degree '" + text + "'");
    }
    m.push_back(v);
  }
  if (m.empty()) throw Error(ErrorKind::InvalidInput, "empty degree");
  return m;
}

}  // namespace eliahou
