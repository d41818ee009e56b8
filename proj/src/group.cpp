#include "covgpd/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "covgpd/error.hpp"

namespace covgpd {

namespace {

std::string cycle_name(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace

FiniteGroup::FiniteGroup() : order_(1), table_{0}, inverse_{0}, names_{"e"}, identity_(0) {}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ == 0) throw InputError("group must have at least one element");
  if (table_.size() != order_ * order_) throw InputError("group table has wrong size");
  for (Elem v : table_) {
    if (v >= order_) throw InputError("group table entry out of range");
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < order_; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != order_) throw InputError("group element names have wrong size");

  bool found = false;
  for (Elem e = 0; e < order_ && !found; ++e) {
    bool neutral = true;
    for (Elem a = 0; a < order_ && neutral; ++a) neutral = mul(e, a) == a && mul(a, e) == a;
    if (neutral) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no identity");

  inverse_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    bool has = false;
    for (Elem b = 0; b < order_ && !has; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        has = true;
      }
    }
    if (!has) throw InputError("group element " + names_[a] + " has no inverse");
  }
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      for (Elem c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw InputError("group table not associative at (" + names_[a] + "," + names_[b] + "," +
                           names_[c] + ")");
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup(n, std::move(table));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t order = perms.size();
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> prod(n);
      for (std::size_t i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      auto it = std::find(perms.begin(), perms.end(), prod);
      table[a * order + b] = static_cast<Elem>(it - perms.begin());
    }
  }
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back(cycle_name(q));
  return FiniteGroup(order, std::move(table), std::move(names));
}

std::optional<Elem> FiniteGroup::find(const std::string& name) const {
  for (Elem e = 0; e < order_; ++e)
    if (names_[e] == name) return e;
  return std::nullopt;
}

std::size_t FiniteGroup::element_order(Elem e) const {
  std::size_t k = 1;
  for (Elem x = e; x != identity_; x = mul(x, e)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(Elem e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements) {
  std::vector<bool> in(g.order(), false);
  for (Elem e : elements) {
    if (e >= g.order()) return false;
    in[e] = true;
  }
  if (!in[g.identity()]) return false;
  for (Elem a : elements) {
    if (!in[g.inv(a)]) return false;
    for (Elem b : elements)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!is_subgroup(g, elements)) throw InputError("element set is not a subgroup");
  return Subgroup{std::move(elements)};
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.elements.resize(g.order());
  std::iota(s.elements.begin(), s.elements.end(), Elem{0});
  return s;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> frontier{g.identity()};
  in[g.identity()] = true;
  // In a finite group the closure under right multiplication by generators
  // already contains all inverses.
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem s : generators) {
      if (s >= g.order()) throw InputError("generator out of range");
      Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        frontier.push_back(y);
      }
    }
  }
  Subgroup out;
  for (Elem e = 0; e < g.order(); ++e)
    if (in[e]) out.elements.push_back(e);
  return out;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  Subgroup out;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out.elements));
  return out;
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.elements;
  gens.insert(gens.end(), b.elements.begin(), b.elements.end());
  return generated_subgroup(g, gens);
}

bool is_contained(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound) {
    throw BoundExceeded("group of order " + std::to_string(g.order()) +
                        " exceeds subgroup enumeration bound " + std::to_string(bound));
  }
  // Every subgroup is a join of cyclic subgroups; close the cyclic ones
  // under pairwise joins.
  std::set<std::vector<Elem>> found;
  std::vector<Subgroup> cyclic;
  for (Elem e = 0; e < g.order(); ++e) {
    Elem gen[1] = {e};
    Subgroup c = generated_subgroup(g, gen);
    if (found.insert(c.elements).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      Subgroup j = join(g, all[i], c);
      if (found.insert(j.elements).second) all.push_back(std::move(j));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem by) {
  std::vector<Elem> out;
  for (Elem x : h.elements) out.push_back(g.conj(by, x));
  std::sort(out.begin(), out.end());
  return Subgroup{std::move(out)};
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup out;
  for (Elem x = 0; x < g.order(); ++x)
    if (conjugate(g, h, x) == h) out.elements.push_back(x);
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  return normalizer(g, h).size() == g.order();
}

std::vector<std::vector<Elem>> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Elem> coset;
    for (Elem k : h.elements) coset.push_back(g.mul(k, x));
    std::sort(coset.begin(), coset.end());
    for (Elem y : coset) seen[y] = true;
    out.push_back(std::move(coset));
  }
  return out;
}

std::size_t index(const FiniteGroup& g, const Subgroup& h) { return g.order() / h.size(); }

Quotient quotient(const FiniteGroup& g, const Subgroup& h) {
  if (!is_normal(g, h)) throw InputError("quotient by a non-normal subgroup");
  Quotient q{FiniteGroup{}, right_cosets(g, h), std::vector<Elem>(g.order(), 0)};
  const std::size_t n = q.cosets.size();
  for (std::size_t i = 0; i < n; ++i)
    for (Elem x : q.cosets[i]) q.coset_of[x] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = q.coset_of[g.mul(q.cosets[i].front(), q.cosets[j].front())];
    names.push_back("[" + g.name(q.cosets[i].front()) + "]");
  }
  // Well-definedness: every pair of representatives lands in the same coset.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (Elem a : q.cosets[i])
        for (Elem b : q.cosets[j])
          if (q.coset_of[g.mul(a, b)] != table[i * n + j])
            throw VerificationFailure("coset product not well defined");
  q.group = FiniteGroup(n, std::move(table), std::move(names));
  return q;
}

SubgroupGroup as_group(const FiniteGroup& g, const Subgroup& h) {
  SubgroupGroup out;
  out.embedding = h.elements;
  out.local.assign(g.order(), std::nullopt);
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) out.local[h.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(g.name(h.elements[i]));
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = out.local[g.mul(h.elements[i], h.elements[j])];
      if (!prod) throw InputError("subgroup not closed");
      table[i * n + j] = *prod;
    }
  }
  out.group = FiniteGroup(n, std::move(table), std::move(names));
  return out;
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup span = trivial_subgroup(g);
  for (Elem e = 0; e < g.order() && span.size() < g.order(); ++e) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const Elem> map) {
  if (map.size() != from.order()) return false;
  for (Elem a = 0; a < from.order(); ++a)
    for (Elem b = 0; b < from.order(); ++b)
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
  return true;
}

bool is_isomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const Elem> map) {
  if (from.order() != to.order() || !is_homomorphism(from, to, map)) return false;
  std::vector<bool> hit(to.order(), false);
  for (Elem v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace {

// Extends generator images to a full map by walking the Cayley graph; empty
// result when the images are inconsistent.
std::vector<Elem> extend(const FiniteGroup& from, const FiniteGroup& to, std::span<const Elem> gens,
                         std::span<const Elem> images) {
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> map(from.order(), kUnset);
  map[from.identity()] = to.identity();
  std::vector<Elem> frontier{from.identity()};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = from.mul(x, gens[k]);
      Elem img = to.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = img;
        frontier.push_back(y);
      } else if (map[y] != img) {
        return {};
      }
    }
  }
  return map;
}

}  // namespace

std::vector<std::vector<Elem>> homomorphisms(const FiniteGroup& from, const FiniteGroup& to) {
  const std::vector<Elem> gens = generating_set(from);
  std::vector<std::vector<Elem>> candidates;
  for (Elem s : gens) {
    std::vector<Elem> c;
    const std::size_t ord = from.element_order(s);
    for (Elem t = 0; t < to.order(); ++t)
      if (ord % to.element_order(t) == 0) c.push_back(t);
    candidates.push_back(std::move(c));
  }
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> images(gens.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      auto map = extend(from, to, gens, images);
      if (!map.empty() && is_homomorphism(from, to, map)) out.push_back(std::move(map));
      return;
    }
    for (Elem t : candidates[k]) {
      images[k] = t;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::vector<Elem> gens = generating_set(a);
  std::vector<Elem> images(gens.size());
  std::optional<std::vector<Elem>> found;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == gens.size()) {
      auto map = extend(a, b, gens, images);
      if (!map.empty() && is_isomorphism(a, b, map)) found = std::move(map);
      return;
    }
    for (Elem t = 0; t < b.order(); ++t) {
      if (b.element_order(t) != a.element_order(gens[k])) continue;
      images[k] = t;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return found;
}

}  // namespace covgpd
