#include "eliahou/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "eliahou/error.hpp"

namespace eliahou {

namespace {

bool subset_of(const Face& f, const std::vector<std::size_t>& sorted_set) {
  return std::includes(sorted_set.begin(), sorted_set.end(), f.begin(), f.end());
}

void for_each_subset(const std::vector<std::size_t>& items, std::size_t k, const auto& visit) {
  if (k > items.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  Face f(k);
  while (true) {
    for (std::size_t t = 0; t < k; ++t) f[t] = items[idx[t]];
    visit(f);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == items.size() - k + t - 1) --t;
    if (t == 0) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

std::vector<Face> maximal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      dominated = j != i && sets[j].size() > sets[i].size() && subset_of(sets[i], sets[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace

NablaComplex::NablaComplex(SDegree degree, TermOrder order, std::vector<Monomial> vertices)
    : degree_(std::move(degree)), order_(order), vertices_(std::move(vertices)) {
  const std::size_t r = vertices_.empty() ? 0 : vertices_.front().nvars();
  cover_.assign(r, {});
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (std::size_t i = 0; i < r; ++i) {
      if (vertices_[v][i] > 0) cover_[i].push_back(v);
    }
  }
}

std::optional<std::size_t> NablaComplex::vertex_index(const Monomial& x) const {
  // Vertices are sorted decreasing under the term order.
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                             [&](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
  if (it == vertices_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Monomial NablaComplex::gcd_of(const Face& f) const {
  Monomial g = vertices_.at(f.front());
  for (std::size_t v : f) g = gcd(g, vertices_.at(v));
  return g;
}

bool NablaComplex::is_face(const Face& f) const {
  if (f.empty()) return false;
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (f[t] >= vertices_.size() || (t > 0 && f[t] <= f[t - 1])) {
      throw Error(ErrorKind::InvalidInput, "face indices must be strictly increasing vertex indices");
    }
  }
  return std::any_of(cover_.begin(), cover_.end(), [&](const auto& d) { return subset_of(f, d); });
}

std::vector<Face> NablaComplex::faces_of_dim(int j) const {
  if (j < 0) return {};
  std::set<Face> found;
  for (const auto& d : cover_) {
    for_each_subset(d, static_cast<std::size_t>(j) + 1, [&](const Face& f) { found.insert(f); });
  }
  struct Keyed {
    Monomial g;
    Face f;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(found.size());
  for (const auto& f : found) keyed.push_back({gcd_of(f), f});
  std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
    auto c = order_.compare(a.g, b.g);
    if (c != 0) return c > 0;
    return a.f < b.f;
  });
  std::vector<Face> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.f));
  return out;
}

std::vector<Face> NablaComplex::facets() const { return maximal_sets(cover_); }

std::vector<std::size_t> NablaComplex::component_labels() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& d : cover_) {
    for (std::size_t t = 1; t < d.size(); ++t) {
      std::size_t a = find(d[0]), b = find(d[t]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> label(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) label[v] = find(v);
  return label;
}

std::size_t NablaComplex::num_components() const {
  auto label = component_labels();
  std::sort(label.begin(), label.end());
  return static_cast<std::size_t>(std::unique(label.begin(), label.end()) - label.begin());
}

NablaComplex build_nabla(const Semigroup& s, const SDegree& m, const TermOrder& order) {
  return NablaComplex(m, order, s.fiber(m, order));
}

NablaComplex restrict_nabla(const Semigroup& s, const NablaComplex& k, const Monomial& beta) {
  s.check_monomial(beta);
  SDegree target = k.degree() - s.degree_of(beta);
  if (!s.member(target)) {
    throw Error(ErrorKind::DegreeMismatch,
                "deg(" + beta.to_string() + ") is not below " + degree_to_string(k.degree()) + " in S");
  }
  std::vector<Monomial> vertices;
  for (const auto& x : k.vertices()) {
    if (beta.divides(x) && x != beta) vertices.push_back(x / beta);
  }
  // Division by a common monomial preserves a multiplicative order, so the list stays sorted.
  return NablaComplex(std::move(target), k.order(), std::move(vertices));
}

DeltaComplex::DeltaComplex(SDegree degree, std::size_t nvars, std::vector<Face> faces)
    : degree_(std::move(degree)), nvars_(nvars) {
  for (auto& f : faces) {
    if (f.empty()) has_empty_ = true;
    else faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

bool DeltaComplex::contains(const Face& f) const {
  if (f.empty()) return has_empty_;
  return std::binary_search(faces_.begin(), faces_.end(), f, [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

std::vector<Face> DeltaComplex::faces_of_dim(int j) const {
  std::vector<Face> out;
  for (const auto& f : faces_) {
    if (static_cast<int>(f.size()) == j + 1) out.push_back(f);
  }
  return out;
}

std::vector<Face> DeltaComplex::facets() const { return maximal_sets(faces_); }

DeltaComplex build_delta(const Semigroup& s, const SDegree& m) {
  s.check_degree(m);
  const std::size_t r = s.nvars();
  std::vector<Face> faces;
  if (s.member(m)) {
    // Closed under subsets: grow faces one vertex at a time from the empty face.
    std::vector<std::pair<Face, SDegree>> layer{{Face{}, m}};
    faces.push_back(Face{});
    while (!layer.empty()) {
      std::vector<std::pair<Face, SDegree>> next;
      for (const auto& [f, rest] : layer) {
        std::size_t start = f.empty() ? 0 : f.back() + 1;
        for (std::size_t i = start; i < r; ++i) {
          SDegree smaller = rest - s.generator(i);
          if (!s.member(smaller)) continue;
          Face g = f;
          g.push_back(i);
          faces.push_back(g);
          next.emplace_back(std::move(g), std::move(smaller));
        }
      }
      layer = std::move(next);
    }
  }
  return DeltaComplex(m, r, std::move(faces));
}

}  // namespace eliahou
