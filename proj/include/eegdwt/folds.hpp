#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eegdwt/signal.hpp"

namespace eegdwt {

struct FoldPlan {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> assignment;  // sample index -> fold id

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
};

// Seeded shuffle, then round-robin per class so every fold holds each class
// in proportion (off by at most one sample). Each class needs >= k samples.
FoldPlan stratified_kfold(std::span<const BinaryLabel> labels, std::size_t k, std::uint64_t seed);

// Stratified folds over groups: all samples sharing a group id land in the
// same fold. `labels` is per sample and must be constant within a group.
FoldPlan stratified_group_kfold(std::span<const BinaryLabel> labels, std::span<const std::size_t> groups,
                                std::size_t k, std::uint64_t seed);

// Seeded subsample of round(fraction * n) indices keeping class proportions.
std::vector<std::size_t> stratified_subsample(std::span<const BinaryLabel> labels, double fraction,
                                              std::uint64_t seed);

// Fraction of positions where pred == truth.
double accuracy(std::span<const BinaryLabel> pred, std::span<const BinaryLabel> truth);

}  // namespace eegdwt
