#include "eta/finite_group.hpp"

#include <algorithm>
#include <unordered_map>

#include "eta/error.hpp"

namespace eta {

FiniteGroup::FiniteGroup() : FiniteGroup("1", {"e"}, {{0}}) {}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> element_names,
                         std::vector<std::vector<Element>> table)
    : name_(std::move(name)), order_(table.size()), names_(std::move(element_names)) {
  const std::size_t n = order_;
  if (n == 0) throw Error("group '" + name_ + "' has no elements");
  if (names_.size() != n) throw Error("group '" + name_ + "': element names do not match table size");
  table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw Error("group '" + name_ + "': Cayley table is not square");
    for (Element x : row) {
      if (x >= n) throw Error("group '" + name_ + "': table entry out of range");
      table_.push_back(x);
    }
  }
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error("group '" + name_ + "': no identity element");
  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    // Latin-square rows guarantee a unique solution when it exists.
    std::vector<bool> seen(n, false);
    bool has_inverse = false;
    for (Element b = 0; b < n; ++b) {
      if (seen[mul(a, b)]) throw Error("group '" + name_ + "': table row is not a permutation");
      seen[mul(a, b)] = true;
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        has_inverse = true;
      }
    }
    if (!has_inverse) throw Error("group '" + name_ + "': element without inverse");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw Error("group '" + name_ + "': multiplication is not associative at (" +
                      names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::from_perm_group(std::string name, const PermGroup& group,
                                         std::size_t limit) {
  if (group.order() > limit) {
    throw CapacityError("group of order " + std::to_string(group.order()) +
                        " is too large for a Cayley table");
  }
  std::vector<Perm> elems{Perm(group.degree())};
  std::unordered_map<Perm, Element, PermHash> index{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Perm& g : group.generators()) {
      Perm y = elems[head] * g;
      if (index.try_emplace(y, static_cast<Element>(elems.size())).second) elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(elems[a] * elems[b]);
  }
  std::vector<std::string> names;
  for (const Perm& p : elems) names.push_back(p.to_cycle_string());
  return FiniteGroup(std::move(name), std::move(names), std::move(table));
}

Element FiniteGroup::pow(Element a, long long n) const {
  Element base = n < 0 ? inv(a) : a;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  Element r = identity_;
  while (e > 0) {
    if (e & 1ULL) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t FiniteGroup::element_order(Element a) const {
  std::uint64_t k = 1;
  Element x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<Element> FiniteGroup::all_elements() const {
  std::vector<Element> v(order_);
  for (Element a = 0; a < order_; ++a) v[a] = a;
  return v;
}

std::vector<Element> FiniteGroup::subgroup_generated(std::span<const Element> gens) const {
  std::vector<bool> in(order_, false);
  std::vector<Element> out{identity_};
  in[identity_] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Element g : gens) {
      const Element y = mul(out[head], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_subgroup(std::span<const Element> subset) const {
  if (subset.empty()) return false;
  std::vector<bool> in(order_, false);
  for (Element x : subset) {
    if (x >= order_) return false;
    in[x] = true;
  }
  if (!in[identity_]) return false;
  for (Element a : subset) {
    if (!in[inv(a)]) return false;
    for (Element b : subset) {
      if (!in[mul(a, b)]) return false;
    }
  }
  return true;
}

std::vector<Element> FiniteGroup::derived_subgroup() const {
  std::vector<Element> comms;
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) comms.push_back(commutator(a, b));
  }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_generated(comms);
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> z;
  for (Element a = 0; a < order_; ++a) {
    bool central = true;
    for (Element b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

Perm FiniteGroup::regular_perm(Element g) const {
  std::vector<Point> img(order_);
  for (Element x = 0; x < order_; ++x) img[x] = mul(x, g);
  return Perm(std::move(img));
}

PermGroup FiniteGroup::regular_perm_group() const {
  std::vector<Perm> gens;
  for (Element g = 0; g < order_; ++g) {
    if (g != identity_) gens.push_back(regular_perm(g));
  }
  GroupOptions options;
  options.semiregular = true;
  return PermGroup(order_, std::move(gens), options);
}

FiniteGroup FiniteGroup::subgroup(std::string name, std::span<const Element> elements) const {
  if (!is_subgroup(elements)) throw Error("'" + name + "' is not a subgroup of " + name_);
  std::vector<Element> local(order_, 0);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(elements.size(), std::vector<Element>(elements.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(names_[elements[i]]);
    for (std::size_t j = 0; j < elements.size(); ++j) {
      table[i][j] = local[mul(elements[i], elements[j])];
    }
  }
  return FiniteGroup(std::move(name), std::move(names), std::move(table));
}

const std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Element>> rows(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  }
  return rows;
}

}  // namespace eta
