#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "eta/abelian.hpp"
#include "eta/perm.hpp"
#include "eta/word.hpp"

namespace eta {

inline constexpr std::uint64_t kDefaultMaxGroupOrder = 1'000'000;

struct GroupOptions {
  // The caller guarantees the group acts semiregularly (only the identity
  // fixes a point). Subgroups of a regular representation qualify. The
  // stabilizer chain is then a single orbit of point 0.
  bool semiregular = false;
  std::uint64_t max_order = kDefaultMaxGroupOrder;
};

// Permutation group with a stabilizer chain. Schreier trees carry generator
// labels, and every strong generator remembers a word in the original
// generators, so any member can be written as a word in generators().
class PermGroup {
 public:
  PermGroup();  // trivial group on one point
  PermGroup(std::size_t degree, std::vector<Perm> generators, GroupOptions options = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& generator_inverse(std::size_t i) const { return strong_[i].inverse; }
  std::span<const Perm> generator_inverses() const { return generator_inverses_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool semiregular() const { return options_.semiregular; }
  const GroupOptions& options() const { return options_; }

  bool contains(const Perm& x) const;
  // Word over generators() evaluating to x, or nullopt when x is not a member.
  std::optional<Word> word_of(const Perm& x) const;

  std::vector<Point> base() const;
  std::size_t chain_length() const { return levels_.size(); }
  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, Point p) const;
  // For groups built with semiregular = true and an element x known to lie in
  // an enclosing semiregular group: x is a member iff its image of the base
  // point is in the base orbit.
  bool base_orbit_contains(Point p) const { return in_orbit(0, p); }
  Point base_point() const { return levels_.empty() ? 0 : levels_[0].base; }

  // Coset representative u with base(level)^u = p.
  Perm transversal(std::size_t level, Point p) const;
  Word transversal_word(std::size_t level, Point p) const;

  // Defining relators over generators() read off the stabilizer chain.
  std::vector<Word> relators() const;

  // All elements; refuses groups larger than `limit`.
  std::vector<Perm> elements(std::uint64_t limit = 100'000) const;

  // Same group on a non-redundant subset of the generators.
  PermGroup reduced() const;
  PermGroup with_generator(const Perm& extra) const;

 private:
  struct Strong {
    Perm perm;
    Perm inverse;
    Word word;
  };
  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> gens;  // indices into strong_
    std::vector<Point> orbit;
    std::vector<std::int32_t> label;  // -1 root, -2 outside orbit, else strong index
  };
  struct SiftResult {
    Perm residue;
    std::size_t level;  // first level where sifting stopped; == levels_.size() when through
    std::vector<Word> transversal_words;
  };

  void build();
  void build_semiregular();
  void compute_orbit(Level& level) const;
  SiftResult sift(Perm x, std::size_t from_level, bool track_words) const;
  Perm apply_transversal_inverse(Perm x, std::size_t level, Point p) const;
  void check_capacity() const;

  std::size_t degree_ = 1;
  std::vector<Perm> generators_;
  std::vector<Perm> generator_inverses_;
  GroupOptions options_;
  std::vector<Strong> strong_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

PermGroup group_from_generators(std::vector<Perm> generators, GroupOptions options = {});

// Subgroup of `ambient` generated by `candidates`, which must lie in ambient
// (not checked here). Redundant candidates are dropped.
PermGroup generate_within(const PermGroup& ambient, std::span<const Perm> candidates);

bool is_subgroup(const PermGroup& small, const PermGroup& big);
bool same_group(const PermGroup& a, const PermGroup& b);

PermGroup normal_closure(const PermGroup& group, std::span<const Perm> subset);
PermGroup derived_subgroup(const PermGroup& group);
bool is_normal(const PermGroup& sub, const PermGroup& group);
// Size of the conjugacy class of x in group, i.e. [group : C(x)].
std::uint64_t centralizer_index(const PermGroup& group, const Perm& x);

AbelianInvariants abelian_invariants_of(const PermGroup& group);

// Homomorphism given by generator images. When `relators` is supplied they
// are taken as a presentation of the source on its generators; otherwise the
// relators read from the source's stabilizer chain are used.
class GroupHom {
 public:
  GroupHom(std::shared_ptr<const PermGroup> source, std::shared_ptr<const PermGroup> target,
           std::vector<Perm> images, std::optional<std::vector<Word>> relators = std::nullopt);

  const PermGroup& source() const { return *source_; }
  const PermGroup& target() const { return *target_; }
  const std::vector<Perm>& generator_images() const { return images_; }

  // Index of the first relator that does not map to the identity.
  std::optional<std::size_t> first_failing_relator() const;
  const std::vector<Word>& relators() const;
  void check_well_defined() const;

  Perm image_of(const Perm& x) const;
  PermGroup image() const;

 private:
  std::shared_ptr<const PermGroup> source_;
  std::shared_ptr<const PermGroup> target_;
  std::vector<Perm> images_;
  std::vector<Perm> image_inverses_;
  mutable std::optional<std::vector<Word>> relators_;
};

PermGroup hom_kernel(const GroupHom& f);

}  // namespace eta
