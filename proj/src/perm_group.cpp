#include "eta/perm_group.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "eta/error.hpp"

namespace eta {

namespace {

constexpr std::int32_t kRoot = -1;
constexpr std::int32_t kOutside = -2;

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    s += 'x' + std::to_string(l.generator);
    if (l.inverse) s += "^-1";
  }
  return s;
}

}  // namespace

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, GroupOptions options)
    : degree_(degree == 0 ? 1 : degree), generators_(std::move(generators)), options_(options) {
  for (const Perm& g : generators_) {
    if (g.degree() != degree_) {
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree_));
    }
  }
  generator_inverses_.reserve(generators_.size());
  strong_.reserve(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    generator_inverses_.push_back(generators_[i].inverse());
    strong_.push_back({generators_[i], generator_inverses_.back(),
                       Word{Letter{static_cast<std::uint32_t>(i), false}}});
  }
  if (options_.semiregular) {
    build_semiregular();
  } else {
    build();
  }
}

void PermGroup::compute_orbit(Level& level) const {
  level.label.assign(degree_, kOutside);
  level.orbit.clear();
  level.orbit.push_back(level.base);
  level.label[level.base] = kRoot;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const Point p = level.orbit[head];
    for (std::uint32_t s : level.gens) {
      const Point q = strong_[s].perm[p];
      if (level.label[q] == kOutside) {
        level.label[q] = static_cast<std::int32_t>(s);
        level.orbit.push_back(q);
      }
    }
  }
}

void PermGroup::check_capacity() const {
  std::uint64_t order = 1;
  for (const Level& level : levels_) {
    const std::uint64_t size = level.orbit.size();
    if (order > options_.max_order / size) {
      throw CapacityError("group order exceeds the limit of " +
                          std::to_string(options_.max_order));
    }
    order *= size;
  }
}

void PermGroup::build_semiregular() {
  Level level;
  level.base = 0;
  for (std::size_t i = 0; i < strong_.size(); ++i) {
    if (!strong_[i].perm.is_identity()) level.gens.push_back(static_cast<std::uint32_t>(i));
  }
  compute_orbit(level);
  levels_.push_back(std::move(level));
  check_capacity();
  order_ = levels_[0].orbit.size();
}

void PermGroup::build() {
  // Initial base: every non-identity generator moves some base point.
  std::vector<Point> base;
  for (const Strong& s : strong_) {
    if (s.perm.is_identity()) continue;
    const bool fixes_base =
        std::all_of(base.begin(), base.end(), [&](Point b) { return s.perm[b] == b; });
    if (fixes_base) base.push_back(s.perm.first_moved());
  }
  for (std::size_t l = 0; l < base.size(); ++l) {
    Level level;
    level.base = base[l];
    for (std::size_t i = 0; i < strong_.size(); ++i) {
      const Perm& p = strong_[i].perm;
      if (p.is_identity()) continue;
      bool fixes = true;
      for (std::size_t k = 0; k < l && fixes; ++k) fixes = p[base[k]] == base[k];
      if (fixes) level.gens.push_back(static_cast<std::uint32_t>(i));
    }
    compute_orbit(level);
    levels_.push_back(std::move(level));
  }
  check_capacity();

  // Deterministic Schreier-Sims: every Schreier generator at level i must
  // sift through the levels below it.
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !extended; ++oi) {
      const Point p = levels_[li].orbit[oi];
      const std::vector<std::uint32_t> gens = levels_[li].gens;
      for (std::uint32_t s : gens) {
        const Point q = strong_[s].perm[p];
        Perm h = transversal(li, p) * strong_[s].perm;
        h = apply_transversal_inverse(std::move(h), li, q);
        if (h.is_identity()) continue;
        SiftResult r = sift(h, li + 1, true);
        if (r.residue.is_identity()) continue;

        Word w = transversal_word(li, p);
        append(w, strong_[s].word);
        append(w, inverse(transversal_word(li, q)));
        for (const Word& tw : r.transversal_words) append(w, inverse(tw));
        const auto idx = static_cast<std::uint32_t>(strong_.size());
        Perm residue_inverse = r.residue.inverse();
        strong_.push_back({std::move(r.residue), std::move(residue_inverse), free_reduce(w)});

        std::size_t j = r.level;
        if (j == levels_.size()) {
          Level level;
          level.base = strong_[idx].perm.first_moved();
          levels_.push_back(std::move(level));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(idx);
          compute_orbit(levels_[l]);
        }
        check_capacity();
        i = static_cast<long>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const Level& level : levels_) order_ *= level.orbit.size();
}

bool PermGroup::in_orbit(std::size_t level, Point p) const {
  if (level >= levels_.size()) return false;
  return p < degree_ && levels_[level].label[p] != kOutside;
}

Perm PermGroup::apply_transversal_inverse(Perm x, std::size_t level, Point p) const {
  const Level& lv = levels_[level];
  while (lv.label[p] != kRoot) {
    const Strong& s = strong_[static_cast<std::size_t>(lv.label[p])];
    x = x * s.inverse;
    p = s.inverse[p];
  }
  return x;
}

Perm PermGroup::transversal(std::size_t level, Point p) const {
  const Level& lv = levels_[level];
  if (lv.label[p] == kOutside) throw NotInGroup("point outside the basic orbit");
  std::vector<std::uint32_t> path;
  while (lv.label[p] != kRoot) {
    const auto s = static_cast<std::uint32_t>(lv.label[p]);
    path.push_back(s);
    p = strong_[s].inverse[p];
  }
  Perm u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * strong_[*it].perm;
  return u;
}

Word PermGroup::transversal_word(std::size_t level, Point p) const {
  const Level& lv = levels_[level];
  if (lv.label[p] == kOutside) throw NotInGroup("point outside the basic orbit");
  std::vector<std::uint32_t> path;
  while (lv.label[p] != kRoot) {
    const auto s = static_cast<std::uint32_t>(lv.label[p]);
    path.push_back(s);
    p = strong_[s].inverse[p];
  }
  Word w;
  for (auto it = path.rbegin(); it != path.rend(); ++it) append(w, strong_[*it].word);
  return w;
}

PermGroup::SiftResult PermGroup::sift(Perm x, std::size_t from_level, bool track_words) const {
  SiftResult result{std::move(x), levels_.size(), {}};
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Point p = result.residue[levels_[l].base];
    if (levels_[l].label[p] == kOutside) {
      result.level = l;
      return result;
    }
    if (track_words) result.transversal_words.push_back(transversal_word(l, p));
    result.residue = apply_transversal_inverse(std::move(result.residue), l, p);
  }
  return result;
}

bool PermGroup::contains(const Perm& x) const {
  if (x.degree() != degree_) {
    throw DegreeMismatch("element of degree " + std::to_string(x.degree()) +
                         " tested against a group of degree " + std::to_string(degree_));
  }
  return sift(x, 0, false).residue.is_identity();
}

std::optional<Word> PermGroup::word_of(const Perm& x) const {
  if (x.degree() != degree_) throw DegreeMismatch("element degree differs from group degree");
  SiftResult r = sift(x, 0, true);
  if (!r.residue.is_identity()) return std::nullopt;
  Word w;
  for (auto it = r.transversal_words.rbegin(); it != r.transversal_words.rend(); ++it) {
    append(w, *it);
  }
  return free_reduce(w);
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const Level& level : levels_) b.push_back(level.base);
  return b;
}

std::vector<Word> PermGroup::relators() const {
  std::vector<Word> out;
  std::set<Word> seen;
  auto add = [&](Word w) {
    w = free_reduce(w);
    if (w.empty()) return;
    if (seen.insert(w).second) out.push_back(std::move(w));
  };
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].is_identity()) add(Word{Letter{static_cast<std::uint32_t>(i), false}});
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const bool last = l + 1 == levels_.size();
    for (Point p : lv.orbit) {
      const Word up = transversal_word(l, p);
      for (std::uint32_t s : lv.gens) {
        const Point q = strong_[s].perm[p];
        Word w = up;
        append(w, strong_[s].word);
        append(w, inverse(transversal_word(l, q)));
        if (!last && !options_.semiregular) {
          Perm h = apply_transversal_inverse(transversal(l, p) * strong_[s].perm, l, q);
          SiftResult r = sift(std::move(h), l + 1, true);
          if (!r.residue.is_identity()) throw InternalError("incomplete stabilizer chain");
          Word hw;
          for (auto it = r.transversal_words.rbegin(); it != r.transversal_words.rend(); ++it) {
            append(hw, *it);
          }
          append(w, inverse(hw));
        }
        add(std::move(w));
      }
    }
  }
  return out;
}

std::vector<Perm> PermGroup::elements(std::uint64_t limit) const {
  if (order_ > limit) {
    throw CapacityError("refusing to enumerate " + std::to_string(order_) + " elements");
  }
  std::vector<Perm> out{Perm(degree_)};
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::vector<Perm> reps;
    for (Point p : levels_[l].orbit) reps.push_back(transversal(l, p));
    std::vector<Perm> next;
    next.reserve(out.size() * reps.size());
    for (const Perm& e : out) {
      for (const Perm& u : reps) next.push_back(e * u);
    }
    out = std::move(next);
  }
  return out;
}

PermGroup PermGroup::reduced() const {
  return generate_within(*this, generators_);
}

PermGroup PermGroup::with_generator(const Perm& extra) const {
  std::vector<Perm> gens = generators_;
  gens.push_back(extra);
  return PermGroup(degree_, std::move(gens), options_);
}

PermGroup group_from_generators(std::vector<Perm> generators, GroupOptions options) {
  const std::size_t degree = generators.empty() ? 1 : generators.front().degree();
  return PermGroup(degree, std::move(generators), options);
}

PermGroup generate_within(const PermGroup& ambient, std::span<const Perm> candidates) {
  GroupOptions options = ambient.options();
  std::vector<Perm> kept;
  PermGroup current(ambient.degree(), {}, options);
  for (const Perm& c : candidates) {
    if (c.is_identity()) continue;
    const bool member =
        options.semiregular ? current.base_orbit_contains(c[0]) : current.contains(c);
    if (member) continue;
    kept.push_back(c);
    current = PermGroup(ambient.degree(), kept, options);
  }
  return current;
}

bool is_subgroup(const PermGroup& small, const PermGroup& big) {
  if (small.degree() != big.degree()) return false;
  for (const Perm& g : small.generators()) {
    if (!big.contains(g)) return false;
  }
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

PermGroup normal_closure(const PermGroup& group, std::span<const Perm> subset) {
  for (const Perm& s : subset) {
    if (!group.contains(s)) {
      throw NotInGroup("normal closure: " + s.to_cycle_string() + " is not in the group");
    }
  }
  PermGroup closure = generate_within(group, subset);
  const bool fast = group.semiregular();
  std::vector<Perm> gens = closure.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < group.generators().size(); ++j) {
      const Perm c = group.generator_inverse(j) * gens[i] * group.generators()[j];
      const bool member = fast ? closure.base_orbit_contains(c[0]) : closure.contains(c);
      if (member) continue;
      gens.push_back(c);
      closure = PermGroup(group.degree(), gens, group.options());
    }
  }
  return closure;
}

PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Perm> commutators;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = group.generator_inverse(i) * group.generator_inverse(j) * gens[i] * gens[j];
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure(group, commutators);
}

bool is_normal(const PermGroup& sub, const PermGroup& group) {
  if (!is_subgroup(sub, group)) return false;
  const bool fast = group.semiregular() && sub.semiregular();
  for (const Perm& s : sub.generators()) {
    for (std::size_t j = 0; j < group.generators().size(); ++j) {
      const Perm c = group.generator_inverse(j) * s * group.generators()[j];
      if (!(fast ? sub.base_orbit_contains(c[0]) : sub.contains(c))) return false;
    }
  }
  return true;
}

std::uint64_t centralizer_index(const PermGroup& group, const Perm& x) {
  if (!group.contains(x)) {
    throw NotInGroup("centralizer index: " + x.to_cycle_string() + " is not in the group");
  }
  std::unordered_set<Perm, PermHash> seen{x};
  std::vector<Perm> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t j = 0; j < group.generators().size(); ++j) {
      Perm c = group.generator_inverse(j) * queue[head] * group.generators()[j];
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return queue.size();
}

AbelianInvariants abelian_invariants_of(const PermGroup& group) {
  if (group.is_trivial()) return AbelianInvariants{};
  const PermGroup small = group.reduced();
  const std::size_t k = small.generators().size();
  std::vector<std::vector<long long>> rows;
  for (const Word& r : small.relators()) rows.push_back(exponent_sums(r, k));
  return invariants_from_relations(rows, k, group.order());
}

GroupHom::GroupHom(std::shared_ptr<const PermGroup> source, std::shared_ptr<const PermGroup> target,
                   std::vector<Perm> images, std::optional<std::vector<Word>> relators)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      relators_(std::move(relators)) {
  if (images_.size() != source_->generators().size()) {
    throw Error("homomorphism needs one image per source generator");
  }
  for (const Perm& img : images_) {
    if (img.degree() != target_->degree()) throw DegreeMismatch("image degree differs from target");
    if (!target_->contains(img)) throw NotInGroup("generator image outside the target group");
    image_inverses_.push_back(img.inverse());
  }
}

const std::vector<Word>& GroupHom::relators() const {
  if (!relators_) relators_ = source_->relators();
  return *relators_;
}

std::optional<std::size_t> GroupHom::first_failing_relator() const {
  const auto& rels = relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (!evaluate(rels[i], images_, image_inverses_, target_->degree()).is_identity()) return i;
  }
  return std::nullopt;
}

void GroupHom::check_well_defined() const {
  if (auto bad = first_failing_relator()) {
    const Word& r = relators()[*bad];
    throw IllDefinedHom("relator " + word_text(r) + " maps to " +
                        evaluate(r, images_, image_inverses_, target_->degree()).to_cycle_string());
  }
}

Perm GroupHom::image_of(const Perm& x) const {
  auto w = source_->word_of(x);
  if (!w) throw NotInGroup("element outside the homomorphism's source");
  return evaluate(*w, images_, image_inverses_, target_->degree());
}

PermGroup GroupHom::image() const {
  GroupOptions options;
  options.max_order = target_->options().max_order;
  return PermGroup(target_->degree(), images_, options);
}

PermGroup hom_kernel(const GroupHom& f) {
  f.check_well_defined();
  const PermGroup& source = f.source();
  const auto& images = f.generator_images();
  const auto& gens = source.generators();

  // Schreier's lemma with the cosets of the kernel indexed by image elements.
  std::vector<Perm> ys{Perm(f.target().degree())};
  std::vector<Perm> sigma{Perm(source.degree())};
  std::unordered_map<Perm, std::size_t, PermHash> index{{ys[0], 0}};
  std::vector<std::size_t> step;  // step[a * gens + i] = index of ys[a] * images[i]
  for (std::size_t a = 0; a < ys.size(); ++a) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Perm y = ys[a] * images[i];
      auto [it, inserted] = index.try_emplace(y, ys.size());
      if (inserted) {
        if (ys.size() >= source.options().max_order) {
          throw CapacityError("homomorphic image too large");
        }
        ys.push_back(std::move(y));
        sigma.push_back(sigma[a] * gens[i]);
      }
      step.push_back(it->second);
    }
  }
  std::vector<Perm> candidates;
  for (std::size_t a = 0; a < ys.size(); ++a) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::size_t b = step[a * gens.size() + i];
      Perm k = sigma[a] * gens[i] * sigma[b].inverse();
      if (!k.is_identity()) candidates.push_back(std::move(k));
    }
  }
  PermGroup kernel = generate_within(source, candidates);
  if (kernel.order() * ys.size() != source.order()) {
    throw InternalError("kernel order times image order differs from source order");
  }
  return kernel;
}

}  // namespace eta
