#include "eta/coset_enum.hpp"

#include <algorithm>
#include <set>

#include "eta/error.hpp"

namespace eta {

namespace {

using Column = std::int32_t;
constexpr std::int32_t kUndefined = -1;

struct TableFull {};

class Enumerator {
 public:
  Enumerator(std::size_t num_generators, std::size_t max_cosets)
      : ncols_(2 * num_generators), max_cosets_(std::max<std::size_t>(max_cosets, 1)) {
    add_row();
  }

  void run(const std::vector<std::vector<Column>>& relators,
           const std::vector<std::vector<Column>>& subgroup) {
    relators_ = &relators;
    while (true) {
      try {
        for (const auto& w : subgroup) scan_and_fill(0, w);
        break;
      } catch (const TableFull&) {
        if (!make_room(relators)) throw;
      }
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      if (parent_.size() > 2 * live_ + 1024) c = compact_keeping(c);
      try {
        for (const auto& r : relators) {
          if (!live(c)) break;
          scan_and_fill(static_cast<std::int32_t>(c), r);
        }
        if (!live(c)) continue;
        for (std::size_t x = 0; x < ncols_; ++x) {
          if (entry(c, x) == kUndefined) define(static_cast<std::int32_t>(c), static_cast<Column>(x));
        }
      } catch (const TableFull&) {
        const std::size_t before = c;
        if (!make_room(relators)) throw;
        c = map_after_compaction(before);
        // Revisit this coset (or its successor if it died).
        --c;
      }
    }
    relators_ = nullptr;
  }

  // Live cosets renumbered breadth-first from coset 0.
  std::vector<std::uint32_t> standardized(std::size_t& count) {
    std::vector<std::int32_t> number(parent_.size(), kUndefined);
    std::vector<std::size_t> order{0};
    number[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::size_t c = order[head];
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t d = entry(c, x);
        if (d == kUndefined) throw InternalError("incomplete coset table after enumeration");
        if (number[static_cast<std::size_t>(d)] == kUndefined) {
          number[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(order.size());
          order.push_back(static_cast<std::size_t>(d));
        }
      }
    }
    count = order.size();
    std::vector<std::uint32_t> rows(count * ncols_);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t x = 0; x < ncols_; ++x) {
        rows[i * ncols_ + x] =
            static_cast<std::uint32_t>(number[static_cast<std::size_t>(entry(order[i], x))]);
      }
    }
    return rows;
  }

  std::size_t defined() const { return defined_; }
  std::size_t max_live() const { return max_live_; }
  std::size_t live_count() const { return live_; }

 private:
  std::int32_t& entry(std::size_t c, std::size_t x) { return table_[c * ncols_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t add_row() {
    const auto n = static_cast<std::int32_t>(parent_.size());
    table_.resize(table_.size() + ncols_, kUndefined);
    parent_.push_back(n);
    ++live_;
    max_live_ = std::max(max_live_, live_);
    return n;
  }

  void define(std::int32_t c, Column x) {
    if (live_ >= max_cosets_) throw TableFull{};
    const std::int32_t n = add_row();
    ++defined_;
    entry(static_cast<std::size_t>(c), static_cast<std::size_t>(x)) = n;
    entry(static_cast<std::size_t>(n), static_cast<std::size_t>(x ^ 1)) = c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto g = static_cast<std::size_t>(queue_[head]);
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t d = entry(g, x);
        if (d == kUndefined) continue;
        const std::size_t xi = x ^ 1U;
        entry(static_cast<std::size_t>(d), xi) = kUndefined;
        const std::int32_t mu = rep(static_cast<std::int32_t>(g));
        const std::int32_t nu = rep(d);
        if (entry(static_cast<std::size_t>(mu), x) != kUndefined) {
          merge(nu, entry(static_cast<std::size_t>(mu), x));
        } else if (entry(static_cast<std::size_t>(nu), xi) != kUndefined) {
          merge(mu, entry(static_cast<std::size_t>(nu), xi));
        } else {
          entry(static_cast<std::size_t>(mu), x) = nu;
          entry(static_cast<std::size_t>(nu), xi) = mu;
        }
      }
    }
  }

  // Traces w from c forwards and backwards; fills gaps by defining cosets
  // when `fill` is set, otherwise only records deductions and coincidences.
  void scan(std::int32_t c, const std::vector<Column>& w, bool fill) {
    std::int32_t f = c;
    std::int32_t b = c;
    long i = 0;
    long j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j) {
        const std::int32_t next = entry(static_cast<std::size_t>(f), static_cast<std::size_t>(w[static_cast<std::size_t>(i)]));
        if (next == kUndefined) break;
        f = next;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        const std::int32_t next = entry(static_cast<std::size_t>(b), static_cast<std::size_t>(w[static_cast<std::size_t>(j)] ^ 1));
        if (next == kUndefined) break;
        b = next;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const Column x = w[static_cast<std::size_t>(i)];
        entry(static_cast<std::size_t>(f), static_cast<std::size_t>(x)) = b;
        entry(static_cast<std::size_t>(b), static_cast<std::size_t>(x ^ 1)) = f;
        return;
      }
      if (!fill) return;
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void scan_and_fill(std::int32_t c, const std::vector<Column>& w) { scan(c, w, true); }

  void lookahead(const std::vector<std::vector<Column>>& relators) {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& r : relators) {
        if (!live(c)) break;
        scan(static_cast<std::int32_t>(c), r, false);
      }
    }
  }

  // Returns false when the table is still full after lookahead.
  bool make_room(const std::vector<std::vector<Column>>& relators) {
    const std::size_t before = live_;
    lookahead(relators);
    pending_map_ = compact();
    return live_ < max_cosets_ && before - live_ >= std::max<std::size_t>(1, max_cosets_ / 100);
  }

  // Renumbers live cosets in order; returns old -> new (or -1 for dead).
  std::vector<std::int32_t> compact() {
    std::vector<std::int32_t> map(parent_.size(), kUndefined);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (live(c)) map[c] = next++;
    }
    std::vector<std::int32_t> table(static_cast<std::size_t>(next) * ncols_, kUndefined);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (map[c] == kUndefined) continue;
      for (std::size_t x = 0; x < ncols_; ++x) {
        const std::int32_t d = entry(c, x);
        table[static_cast<std::size_t>(map[c]) * ncols_ + x] =
            d == kUndefined ? kUndefined : map[static_cast<std::size_t>(rep(d))];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (std::int32_t c = 0; c < next; ++c) parent_[static_cast<std::size_t>(c)] = c;
    return map;
  }

  // First live coset at or after old index `c`, in new numbering.
  std::size_t map_after_compaction(std::size_t c) const {
    for (std::size_t k = c; k < pending_map_.size(); ++k) {
      if (pending_map_[k] != kUndefined) return static_cast<std::size_t>(pending_map_[k]);
    }
    return parent_.size();
  }

  std::size_t compact_keeping(std::size_t c) {
    pending_map_ = compact();
    return map_after_compaction(c);
  }

  std::size_t ncols_;
  std::size_t max_cosets_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::vector<std::int32_t> pending_map_;
  const std::vector<std::vector<Column>>* relators_ = nullptr;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
  std::size_t defined_ = 0;
};

std::vector<Column> to_columns(const Word& w) {
  std::vector<Column> cols;
  cols.reserve(w.size());
  for (const Letter& l : w) cols.push_back(static_cast<Column>(2 * l.generator + (l.inverse ? 1 : 0)));
  return cols;
}

}  // namespace

std::uint32_t CosetTable::act(std::size_t coset, const Word& w) const {
  auto c = static_cast<std::uint32_t>(coset);
  for (const Letter& l : w) c = act(c, l);
  return c;
}

CosetTable todd_coxeter(const Presentation& presentation, std::span<const Word> subgroup,
                        std::size_t max_cosets) {
  validate(presentation);
  const std::size_t ngens = presentation.generators.size();

  // Cyclically reduced, deduplicated, shortest first (stable).
  std::vector<Word> reduced;
  std::set<Word> seen;
  for (const Word& r : presentation.relators) {
    Word w = cyclic_reduce(r);
    if (w.empty() || !seen.insert(w).second) continue;
    reduced.push_back(std::move(w));
  }
  std::stable_sort(reduced.begin(), reduced.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  std::vector<std::vector<Column>> relators;
  for (const Word& w : reduced) relators.push_back(to_columns(w));

  CosetTable table;
  table.num_generators_ = ngens;
  std::vector<std::vector<Column>> subgroup_cols;
  for (const Word& w : subgroup) {
    for (const Letter& l : w) {
      if (l.generator >= ngens) throw Error("subgroup word mentions an undeclared generator");
    }
    Word r = free_reduce(w);
    if (r.empty()) continue;
    table.subgroup_trivial_ = false;
    subgroup_cols.push_back(to_columns(r));
  }

  Enumerator e(ngens, max_cosets);
  try {
    e.run(relators, subgroup_cols);
  } catch (const TableFull&) {
    table.status_ = TableStatus::capacity_exceeded;
    table.cosets_defined_ = e.defined() + 1;
    table.max_live_ = e.max_live();
    return table;
  }
  table.rows_ = e.standardized(table.num_cosets_);
  table.cosets_defined_ = e.defined() + 1;
  table.max_live_ = e.max_live();
  if (!relators_close(table, presentation, subgroup)) {
    throw InternalError("completed coset table fails the relator audit");
  }
  return table;
}

bool relators_close(const CosetTable& table, const Presentation& presentation,
                    std::span<const Word> subgroup) {
  if (!table.complete()) return false;
  for (const Word& w : subgroup) {
    if (table.act(0, w) != 0) return false;
  }
  for (const Word& r : presentation.relators) {
    for (std::size_t c = 0; c < table.num_cosets(); ++c) {
      if (table.act(c, r) != c) return false;
    }
  }
  return true;
}

RegularRepresentation regular_representation(const CosetTable& table) {
  if (!table.complete()) throw Error("regular representation of an incomplete coset table");
  const std::size_t n = table.num_cosets();
  std::vector<Perm> images;
  for (std::size_t g = 0; g < table.num_generators(); ++g) {
    std::vector<Point> img(n);
    for (std::size_t c = 0; c < n; ++c) img[c] = table.act(c, Letter{static_cast<std::uint32_t>(g), false});
    images.emplace_back(std::move(img));
  }
  GroupOptions options;
  options.semiregular = table.subgroup_trivial();
  options.max_order = std::max<std::uint64_t>(kDefaultMaxGroupOrder, n);
  PermGroup group(n, images, options);
  if (table.subgroup_trivial() && group.order() != n) {
    throw InternalError("regular representation is not transitive");
  }
  return {std::move(group), std::move(images)};
}

}  // namespace eta
