#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eta/perm_group.hpp"
#include "eta/presentation.hpp"

namespace eta {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

enum class TableStatus { complete, capacity_exceeded };

// Coset table with columns ordered x0, x0^-1, x1, x1^-1, ... Row 0 is the
// subgroup coset. Complete tables are renumbered breadth-first from coset 0.
class CosetTable {
 public:
  TableStatus status() const { return status_; }
  bool complete() const { return status_ == TableStatus::complete; }
  std::size_t num_generators() const { return num_generators_; }
  std::size_t num_cosets() const { return num_cosets_; }
  // Total coset definitions made while enumerating.
  std::size_t cosets_defined() const { return cosets_defined_; }
  std::size_t max_live_cosets() const { return max_live_; }
  bool subgroup_trivial() const { return subgroup_trivial_; }

  std::uint32_t act(std::size_t coset, Letter l) const {
    return rows_[coset * 2 * num_generators_ + 2 * l.generator + (l.inverse ? 1 : 0)];
  }
  std::uint32_t act(std::size_t coset, const Word& w) const;
  std::span<const std::uint32_t> row(std::size_t coset) const {
    return std::span(rows_).subspan(coset * 2 * num_generators_, 2 * num_generators_);
  }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  friend CosetTable todd_coxeter(const Presentation&, std::span<const Word>, std::size_t);

  TableStatus status_ = TableStatus::complete;
  std::size_t num_generators_ = 0;
  std::size_t num_cosets_ = 0;
  std::size_t cosets_defined_ = 0;
  std::size_t max_live_ = 0;
  bool subgroup_trivial_ = true;
  std::vector<std::uint32_t> rows_;
};

// HLT coset enumeration with lookahead when the table fills. On overflow the
// returned table has status capacity_exceeded and no rows.
CosetTable todd_coxeter(const Presentation& presentation, std::span<const Word> subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

// Every relator traced from every coset returns to it, and every subgroup
// word fixes coset 0.
bool relators_close(const CosetTable& table, const Presentation& presentation,
                    std::span<const Word> subgroup = {});

struct RegularRepresentation {
  PermGroup group;
  std::vector<Perm> generator_images;  // one per presentation generator
};

// Permutation action of the generators on the cosets. When the subgroup is
// trivial the action is regular and the group is built as semiregular.
RegularRepresentation regular_representation(const CosetTable& table);

}  // namespace eta
