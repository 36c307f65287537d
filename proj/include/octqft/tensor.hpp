#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "octqft/linalg.hpp"

namespace octqft {

struct Leg {
  std::size_t id;
  std::size_t dim;
  friend bool operator==(const Leg& a, const Leg& b) { return a.id == b.id && a.dim == b.dim; }
};

/// Sparse exact tensor. Keys are mixed-radix packings of the leg indices with
/// the first leg most significant; entries are sorted by key and never zero.
class SparseTensor {
 public:
  using Entry = std::pair<std::uint64_t, Scalar>;

  SparseTensor() = default;
  SparseTensor(FieldSpec field, std::vector<Leg> legs);

  FieldSpec field() const noexcept { return field_; }
  const std::vector<Leg>& legs() const noexcept { return legs_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  /// Product of leg dimensions.
  std::uint64_t volume() const noexcept { return volume_; }

  std::uint64_t encode(const std::vector<std::size_t>& idx) const;
  std::vector<std::size_t> decode(std::uint64_t key) const;

  /// Adds c at the given multi-index; call normalize() once afterwards.
  void add(std::uint64_t key, const Scalar& c);
  void add(const std::vector<std::size_t>& idx, const Scalar& c) { add(encode(idx), c); }
  /// Sorts, merges duplicate keys and drops zeros.
  void normalize();

  Scalar at(const std::vector<std::size_t>& idx) const;

  /// Reorders legs to the given id order.
  SparseTensor permuted(const std::vector<std::size_t>& leg_ids) const;
  /// Renames one leg.
  void rename_leg(std::size_t from, std::size_t to);

  /// Dense matrix whose rows pack the first `row_legs` legs.
  Matrix to_matrix(std::size_t row_legs) const;
  static SparseTensor from_matrix(const Matrix& m, std::vector<Leg> row_legs, std::vector<Leg> col_legs);

  friend bool operator==(const SparseTensor& a, const SparseTensor& b) {
    return a.field_ == b.field_ && a.legs_ == b.legs_ && a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  std::vector<Leg> legs_;
  std::vector<Entry> entries_;
  std::uint64_t volume_ = 1;
};

/// Contracts every leg id shared by a and b. Result legs: free legs of a,
/// then free legs of b, each in original order.
SparseTensor contract_pair(const SparseTensor& a, const SparseTensor& b);
/// Serial nested-loop kernel kept as the reference for contract_pair.
SparseTensor contract_pair_reference(const SparseTensor& a, const SparseTensor& b);

enum class ContractionOrder { Greedy, Random };

struct ContractOptions {
  ContractionOrder order = ContractionOrder::Greedy;
  std::uint64_t seed = 0;
  bool parallel = true;
};

/// Contracts a network in which each leg id occurs once (open) or twice
/// (bonded). The result is permuted to `open_legs`.
SparseTensor contract_network(std::vector<SparseTensor> tensors, const std::vector<std::size_t>& open_legs,
                              const ContractOptions& options = {});

}  // namespace octqft
