#include "eliahou/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "eliahou/error.hpp"

namespace eliahou {

namespace {

// sum_k coeff[k] * w_k >= rhs
struct Inequality {
  std::vector<mpq_class> coeff;
  mpq_class rhs;

  bool operator<(const Inequality& o) const {
    if (coeff != o.coeff) return coeff < o.coeff;
    return rhs < o.rhs;
  }
  bool operator==(const Inequality& o) const { return coeff == o.coeff && rhs == o.rhs; }
};

// Scale so the first nonzero coefficient is +-1; keeps the system small under FM.
Inequality normalized(Inequality q) {
  for (const auto& c : q.coeff) {
    if (sgn(c) != 0) {
      mpq_class s = abs(c);
      for (auto& x : q.coeff) x /= s;
      q.rhs /= s;
      break;
    }
  }
  return q;
}

std::vector<Inequality> eliminate(const std::vector<Inequality>& sys, std::size_t var) {
  std::vector<Inequality> lower, upper, out;
  for (const auto& q : sys) {
    int s = sgn(q.coeff[var]);
    if (s > 0) lower.push_back(q);
    else if (s < 0) upper.push_back(q);
    else out.push_back(q);
  }
  for (const auto& lo : lower) {
    for (const auto& up : upper) {
      mpq_class a = lo.coeff[var];
      mpq_class b = -up.coeff[var];
      Inequality q;
      q.coeff.resize(lo.coeff.size());
      for (std::size_t k = 0; k < q.coeff.size(); ++k) q.coeff[k] = lo.coeff[k] * b + up.coeff[k] * a;
      q.coeff[var] = 0;
      q.rhs = lo.rhs * b + up.rhs * a;
      out.push_back(normalized(q));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

mpq_class ceil_q(const mpq_class& x) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return mpq_class(r);
}

// Smallest-denominator point of [lo, hi], closest to zero among those.
mpq_class simplest_in(const std::optional<mpq_class>& lo, const std::optional<mpq_class>& hi) {
  if ((!lo || *lo <= 0) && (!hi || *hi >= 0)) return 0;
  if (lo && *lo > 0) {
    for (mpz_class q = 1;; ++q) {
      mpq_class p = ceil_q(*lo * q);
      mpq_class cand = p / mpq_class(q);
      if (!hi || cand <= *hi) return cand;
    }
  }
  return -simplest_in(-*hi, lo ? std::optional<mpq_class>(-*lo) : std::nullopt);
}

}  // namespace

std::size_t GeneratorMatrix::lattice_rank() const {
  std::vector<std::vector<mpq_class>> rows(dim, std::vector<mpq_class>(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t k = 0; k < dim; ++k) rows[k][i] = generators[i][k];
  std::size_t rank = 0;
  for (std::size_t col = 0; col < generators.size() && rank < dim; ++col) {
    std::size_t piv = rank;
    while (piv < dim && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == dim) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < dim; ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      mpq_class f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < generators.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

mpq_class PositiveGrading::evaluate(const SDegree& m) const {
  mpq_class s = 0;
  for (std::size_t k = 0; k < weight.size(); ++k) s += weight[k] * m[k];
  return s;
}

PositiveGrading validate_presentation(const GeneratorMatrix& a) {
  if (a.dim == 0 || a.generators.empty()) {
    throw Error(ErrorKind::InvalidInput, "need d >= 1 and r >= 1");
  }
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    const auto& n = a.generators[i];
    if (n.size() != a.dim) throw Error(ErrorKind::InvalidInput, "generator column of wrong length");
    if (std::all_of(n.begin(), n.end(), [](const mpz_class& v) { return v == 0; })) {
      throw Error(ErrorKind::ZeroGenerator, "generator n_" + std::to_string(i + 1) + " is zero");
    }
  }

  // Fourier-Motzkin on w . n_i >= 1, eliminating the last coordinate first.
  std::vector<std::vector<Inequality>> stages(a.dim + 1);
  for (const auto& n : a.generators) {
    Inequality q;
    q.coeff.assign(n.begin(), n.end());
    q.rhs = 1;
    stages[a.dim].push_back(q);
  }
  for (std::size_t v = a.dim; v-- > 0;) stages[v] = eliminate(stages[v + 1], v);
  for (const auto& q : stages[0]) {
    if (q.rhs > 0) {
      throw Error(ErrorKind::NotCombinatoriallyFinite,
                  "a nonzero nonnegative combination of the generators vanishes");
    }
  }

  std::vector<mpq_class> w(a.dim, 0);
  for (std::size_t v = 0; v < a.dim; ++v) {
    std::optional<mpq_class> lo, hi;
    for (const auto& q : stages[v + 1]) {
      int s = sgn(q.coeff[v]);
      if (s == 0) continue;
      mpq_class rest = q.rhs;
      for (std::size_t k = 0; k < v; ++k) rest -= q.coeff[k] * w[k];
      mpq_class bound = rest / q.coeff[v];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    w[v] = simplest_in(lo, hi);
  }

  PositiveGrading g{w};
  mpq_class least = g.evaluate(a.generators.front());
  for (const auto& n : a.generators) least = std::min(least, g.evaluate(n));
  for (auto& x : g.weight) x /= least;
  return g;
}

Semigroup::Semigroup(GeneratorMatrix a) : a_(std::move(a)), w_(validate_presentation(a_)) {
  for (const auto& n : a_.generators) generator_weight_.push_back(w_.evaluate(n));
}

mpq_class Semigroup::weight(const Monomial& x) const {
  mpq_class s = 0;
  for (std::size_t i = 0; i < x.nvars(); ++i) s += generator_weight_[i] * x[i];
  return s;
}

void Semigroup::check_degree(const SDegree& m) const {
  if (m.size() != dim()) {
    throw Error(ErrorKind::InvalidInput, "degree " + degree_to_string(m) + " has length " +
                                             std::to_string(m.size()) + ", expected " + std::to_string(dim()));
  }
}

void Semigroup::check_monomial(const Monomial& x) const {
  if (x.nvars() != nvars()) {
    throw Error(ErrorKind::InvalidInput, "monomial has " + std::to_string(x.nvars()) + " exponents, expected " +
                                             std::to_string(nvars()));
  }
}

SDegree Semigroup::degree_of(const Monomial& x) const {
  check_monomial(x);
  SDegree m = zero_degree(dim());
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (x[i] == 0) continue;
    mpz_class e(static_cast<long>(x[i]));
    for (std::size_t k = 0; k < dim(); ++k) m[k] += e * a_.generators[i][k];
  }
  return m;
}

template <class Visit>
void Semigroup::enumerate(const SDegree& m, Visit&& visit) const {
  check_degree(m);
  const std::size_t r = nvars();
  std::vector<Exponent> a(r, 0);
  bool stop = false;

  // Depth-first over a_0, ..., a_{r-1}; the residual must stay in the half-space w . res >= 0.
  auto rec = [&](auto&& self, std::size_t i, const SDegree& res, const mpq_class& res_weight) -> void {
    if (stop) return;
    if (i + 1 == r) {
      // Last variable is forced: res = a * n_last.
      const SDegree& n = a_.generators[i];
      std::optional<mpz_class> q;
      for (std::size_t k = 0; k < dim(); ++k) {
        if (n[k] == 0) {
          if (res[k] != 0) return;
          continue;
        }
        if (res[k] % n[k] != 0) return;
        mpz_class t = res[k] / n[k];
        if (q && *q != t) return;
        q = t;
      }
      if (!q || *q < 0 || !q->fits_slong_p()) return;
      a[i] = q->get_si();
      if (!visit(a)) stop = true;
      a[i] = 0;
      return;
    }
    mpq_class cap_q = res_weight / generator_weight_[i];
    mpz_class cap;
    mpz_fdiv_q(cap.get_mpz_t(), cap_q.get_num_mpz_t(), cap_q.get_den_mpz_t());
    if (!cap.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "fiber enumeration bound too large");
    const long top = cap.get_si();
    SDegree next = res;
    mpq_class next_weight = res_weight;
    for (long e = 0; e <= top && !stop; ++e) {
      a[i] = e;
      self(self, i + 1, next, next_weight);
      for (std::size_t k = 0; k < dim(); ++k) next[k] -= a_.generators[i][k];
      next_weight -= generator_weight_[i];
    }
    a[i] = 0;
  };

  mpq_class wm = weight(m);
  if (wm < 0) return;
  rec(rec, 0, m, wm);
}

bool Semigroup::member(const SDegree& m) const {
  bool found = false;
  enumerate(m, [&](const std::vector<Exponent>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<Monomial> Semigroup::fiber(const SDegree& m, const TermOrder& order) const {
  std::vector<Monomial> out;
  enumerate(m, [&](const std::vector<Exponent>& a) {
    out.emplace_back(a);
    return true;
  });
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return order.greater(x, y); });
  return out;
}

}  // namespace eliahou
