#include "eta/action.hpp"

#include <algorithm>

#include "eta/error.hpp"

namespace eta {

ActionTable::ActionTable(std::size_t acted_order, std::size_t acting_order, std::vector<Element> images)
    : acted_(acted_order), acting_(acting_order), images_(std::move(images)) {
  if (acted_ == 0 || acting_ == 0) throw InvalidAction("action on or by an empty group");
  if (images_.size() != acted_ * acting_) {
    throw InvalidAction("action table has " + std::to_string(images_.size()) + " entries, expected " +
                        std::to_string(acted_ * acting_));
  }
  for (Element x : images_) {
    if (x >= acted_) throw InvalidAction("action table entry " + std::to_string(x) + " out of range");
  }
}

ActionTable ActionTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  if (rows.empty()) throw InvalidAction("action table has no rows");
  const std::size_t n = rows[0].size();
  std::vector<Element> images;
  for (const auto& r : rows) {
    if (r.size() != n) throw InvalidAction("action table rows differ in length");
    images.insert(images.end(), r.begin(), r.end());
  }
  return ActionTable(n, rows.size(), std::move(images));
}

std::vector<std::vector<Element>> ActionTable::rows() const {
  std::vector<std::vector<Element>> out(acting_);
  for (std::size_t h = 0; h < acting_; ++h) {
    out[h].assign(images_.begin() + h * acted_, images_.begin() + (h + 1) * acted_);
  }
  return out;
}

ActionTable trivial_action(std::size_t acted_order, std::size_t acting_order) {
  std::vector<Element> images(acted_order * acting_order);
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Element>(i % acted_order);
  return ActionTable(acted_order, acting_order, std::move(images));
}

ActionTable conjugation_action(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<Element> images(n * n);
  for (Element h = 0; h < n; ++h) {
    for (Element g = 0; g < n; ++g) images[h * n + g] = group.conj(g, h);
  }
  return ActionTable(n, n, std::move(images));
}

ActionPair trivial_pair(const FiniteGroup& G, const FiniteGroup& H) {
  return {G.name() + "," + H.name() + " trivial", G, H, trivial_action(G.order(), H.order()),
          trivial_action(H.order(), G.order())};
}

ActionPair conjugation_pair(const FiniteGroup& G) {
  ActionTable conj = conjugation_action(G);
  return {G.name() + " conjugation", G, G, conj, conj};
}

ActionPair subgroup_conjugation_pair(const FiniteGroup& ambient, std::span<const Element> N,
                                     std::span<const Element> K, std::string name) {
  FiniteGroup G = ambient.subgroup("N", N);
  FiniteGroup H = ambient.subgroup("K", K);
  auto local = [&](std::span<const Element> sub, Element x) -> Element {
    auto it = std::find(sub.begin(), sub.end(), x);
    if (it == sub.end()) throw InvalidAction("subgroups do not normalize each other");
    return static_cast<Element>(it - sub.begin());
  };
  std::vector<Element> on_G(N.size() * K.size()), on_H(K.size() * N.size());
  for (std::size_t h = 0; h < K.size(); ++h) {
    for (std::size_t g = 0; g < N.size(); ++g) {
      on_G[h * N.size() + g] = local(N, ambient.conj(N[g], K[h]));
      on_H[g * K.size() + h] = local(K, ambient.conj(K[h], N[g]));
    }
  }
  if (name.empty()) name = ambient.name() + " subgroups";
  return {std::move(name), std::move(G), std::move(H), ActionTable(N.size(), K.size(), std::move(on_G)),
          ActionTable(K.size(), N.size(), std::move(on_H))};
}

ActionPair swapped(const ActionPair& pair) {
  return {pair.name + " swapped", pair.H, pair.G, pair.on_H, pair.on_G};
}

ActionReport validate_action(const ActionTable& table, const FiniteGroup& acted,
                             const FiniteGroup& acting) {
  if (table.acted_order() != acted.order() || table.acting_order() != acting.order()) {
    throw InvalidAction("action table is " + std::to_string(table.acting_order()) + "x" +
                        std::to_string(table.acted_order()) + " but the groups have orders " +
                        std::to_string(acting.order()) + " and " + std::to_string(acted.order()));
  }
  const std::size_t n = acted.order(), m = acting.order();
  ActionReport report;
  for (Element h = 0; h < m; ++h) {
    std::vector<Element> seen_from(n, static_cast<Element>(n));
    for (Element g = 0; g < n; ++g) {
      ++report.instances_checked;
      const Element img = table.apply(g, h);
      if (seen_from[img] != n) {
        report.violations.push_back({"bijection", {h, seen_from[img], g},
                                     "row " + std::to_string(h) + " sends two elements to " + std::to_string(img)});
      } else {
        seen_from[img] = g;
      }
    }
    for (Element g1 = 0; g1 < n; ++g1) {
      for (Element g2 = 0; g2 < n; ++g2) {
        ++report.instances_checked;
        const Element lhs = table.apply(acted.mul(g1, g2), h);
        const Element rhs = acted.mul(table.apply(g1, h), table.apply(g2, h));
        if (lhs != rhs) {
          report.violations.push_back({"product", {h, g1, g2},
                                       "(g1 g2)^h = " + std::to_string(lhs) + " but g1^h g2^h = " +
                                           std::to_string(rhs)});
        }
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    ++report.instances_checked;
    if (table.apply(g, acting.identity()) != g) {
      report.violations.push_back({"identity", {g}, "identity of the acting group moves this element"});
    }
  }
  for (Element h1 = 0; h1 < m; ++h1) {
    for (Element h2 = 0; h2 < m; ++h2) {
      const Element h12 = acting.mul(h1, h2);
      for (Element g = 0; g < n; ++g) {
        ++report.instances_checked;
        const Element lhs = table.apply(g, h12);
        const Element rhs = table.apply(table.apply(g, h1), h2);
        if (lhs != rhs) {
          report.violations.push_back({"composition", {g, h1, h2},
                                       "g^(h1 h2) = " + std::to_string(lhs) + " but (g^h1)^h2 = " +
                                           std::to_string(rhs)});
        }
      }
    }
  }
  return report;
}

namespace {

// One family: x, y in A, z in B. `on_A` is B acting on A, `on_B` is A acting on B.
void check_family(int family, const FiniteGroup& A, const FiniteGroup& B, const ActionTable& on_A,
                  const ActionTable& on_B, CompatibilityReport& report) {
  for (Element x = 0; x < A.order(); ++x) {
    for (Element y = 0; y < A.order(); ++y) {
      const Element x_by_yinv = A.conj(x, A.inv(y));
      for (Element z = 0; z < B.order(); ++z) {
        ++report.triples_checked;
        const Element lhs = on_A.apply(x, on_B.apply(z, y));
        const Element rhs = A.conj(on_A.apply(x_by_yinv, z), y);
        if (lhs != rhs) report.failures.push_back({family, x, y, z, lhs, rhs});
      }
    }
  }
}

}  // namespace

CompatibilityReport check_compatibility(const ActionPair& pair) {
  const ActionReport a = validate_action(pair.on_G, pair.G, pair.H);
  const ActionReport b = validate_action(pair.on_H, pair.H, pair.G);
  if (!a.valid() || !b.valid()) {
    const ActionViolation& v = a.valid() ? b.violations.front() : a.violations.front();
    throw InvalidAction(std::string(a.valid() ? "action of G on H" : "action of H on G") +
                        " is not an action: " + v.axiom + " violated, " + v.detail);
  }
  CompatibilityReport report;
  check_family(1, pair.G, pair.H, pair.on_G, pair.on_H, report);
  check_family(2, pair.H, pair.G, pair.on_H, pair.on_G, report);
  return report;
}

}  // namespace eta
