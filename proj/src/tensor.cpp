#include "octqft/tensor.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <unordered_map>

#include <omp.h>

#include "octqft/errors.hpp"

namespace octqft {

SparseTensor::SparseTensor(FieldSpec field, std::vector<Leg> legs) : field_(field), legs_(std::move(legs)) {
  for (const auto& l : legs_) {
    if (l.dim == 0) throw input_error("BadParams", "zero-dimensional leg");
    if (volume_ > std::numeric_limits<std::uint64_t>::max() / l.dim)
      throw input_error("TensorTooLarge", "leg dimensions overflow 64-bit keys");
    volume_ *= l.dim;
  }
}

std::uint64_t SparseTensor::encode(const std::vector<std::size_t>& idx) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < legs_.size(); ++i) key = key * legs_[i].dim + idx[i];
  return key;
}

std::vector<std::size_t> SparseTensor::decode(std::uint64_t key) const {
  std::vector<std::size_t> idx(legs_.size());
  for (std::size_t i = legs_.size(); i-- > 0;) {
    idx[i] = static_cast<std::size_t>(key % legs_[i].dim);
    key /= legs_[i].dim;
  }
  return idx;
}

void SparseTensor::add(std::uint64_t key, const Scalar& c) {
  if (!c.is_zero()) entries_.emplace_back(key, c);
}

void SparseTensor::normalize() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const Entry& x, const Entry& y) { return x.first < y.first; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
  entries_ = std::move(merged);
}

Scalar SparseTensor::at(const std::vector<std::size_t>& idx) const {
  const std::uint64_t key = encode(idx);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                             [](const Entry& e, std::uint64_t k) { return e.first < k; });
  return (it != entries_.end() && it->first == key) ? it->second : Scalar(field_);
}

SparseTensor SparseTensor::permuted(const std::vector<std::size_t>& leg_ids) const {
  if (leg_ids.size() != legs_.size()) throw input_error("DimensionMismatch", "permutation length");
  std::vector<std::size_t> src(leg_ids.size());
  std::vector<Leg> new_legs;
  for (std::size_t i = 0; i < leg_ids.size(); ++i) {
    auto it = std::find_if(legs_.begin(), legs_.end(), [&](const Leg& l) { return l.id == leg_ids[i]; });
    if (it == legs_.end()) throw input_error("UnknownLeg", "leg " + std::to_string(leg_ids[i]));
    src[i] = static_cast<std::size_t>(it - legs_.begin());
    new_legs.push_back(*it);
  }
  SparseTensor out(field_, new_legs);
  out.entries_.reserve(entries_.size());
  std::vector<std::size_t> idx(legs_.size());
  for (const auto& [key, c] : entries_) {
    const auto old = decode(key);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = old[src[i]];
    out.entries_.emplace_back(out.encode(idx), c);
  }
  std::sort(out.entries_.begin(), out.entries_.end(),
            [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return out;
}

void SparseTensor::rename_leg(std::size_t from, std::size_t to) {
  for (auto& l : legs_)
    if (l.id == from) {
      l.id = to;
      return;
    }
  throw input_error("UnknownLeg", "leg " + std::to_string(from));
}

Matrix SparseTensor::to_matrix(std::size_t row_legs) const {
  std::uint64_t rows = 1;
  for (std::size_t i = 0; i < row_legs; ++i) rows *= legs_[i].dim;
  const std::uint64_t cols = volume_ / rows;
  Matrix m(field_, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (const auto& [key, c] : entries_) m(static_cast<std::size_t>(key / cols), static_cast<std::size_t>(key % cols)) = c;
  return m;
}

SparseTensor SparseTensor::from_matrix(const Matrix& m, std::vector<Leg> row_legs, std::vector<Leg> col_legs) {
  std::vector<Leg> legs = row_legs;
  legs.insert(legs.end(), col_legs.begin(), col_legs.end());
  SparseTensor t(m.field(), legs);
  std::uint64_t rows = 1;
  for (const auto& l : row_legs) rows *= l.dim;
  if (rows != m.rows() || t.volume_ / rows != m.cols()) throw input_error("DimensionMismatch", "matrix vs legs");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) t.entries_.emplace_back(std::uint64_t(i) * m.cols() + j, m(i, j));
  return t;
}

namespace {

/// Split of each tensor's legs into shared and free positions, plus radices.
struct PairLayout {
  std::vector<std::size_t> a_shared, a_free, b_shared, b_free;
  std::vector<Leg> result_legs;
  std::uint64_t b_free_volume = 1;
};

PairLayout layout(const SparseTensor& a, const SparseTensor& b) {
  if (a.field() != b.field()) throw input_error("FieldMismatch", "tensor contraction");
  PairLayout L;
  for (std::size_t i = 0; i < a.legs().size(); ++i) {
    const auto& la = a.legs()[i];
    auto it = std::find_if(b.legs().begin(), b.legs().end(), [&](const Leg& l) { return l.id == la.id; });
    if (it == b.legs().end()) {
      L.a_free.push_back(i);
      L.result_legs.push_back(la);
    } else {
      if (it->dim != la.dim) throw input_error("DimensionMismatch", "leg " + std::to_string(la.id));
      L.a_shared.push_back(i);
      L.b_shared.push_back(static_cast<std::size_t>(it - b.legs().begin()));
    }
  }
  for (std::size_t j = 0; j < b.legs().size(); ++j) {
    if (std::find(L.b_shared.begin(), L.b_shared.end(), j) != L.b_shared.end()) continue;
    L.b_free.push_back(j);
    L.result_legs.push_back(b.legs()[j]);
    L.b_free_volume *= b.legs()[j].dim;
  }
  return L;
}

std::uint64_t pack(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& pos,
                   const std::vector<Leg>& legs) {
  std::uint64_t key = 0;
  for (auto p : pos) key = key * legs[p].dim + idx[p];
  return key;
}

}  // namespace

SparseTensor contract_pair_reference(const SparseTensor& a, const SparseTensor& b) {
  const PairLayout L = layout(a, b);
  std::map<std::uint64_t, Scalar> acc;
  for (const auto& [ka, va] : a.entries()) {
    const auto ia = a.decode(ka);
    for (const auto& [kb, vb] : b.entries()) {
      const auto ib = b.decode(kb);
      bool match = true;
      for (std::size_t s = 0; s < L.a_shared.size() && match; ++s)
        match = ia[L.a_shared[s]] == ib[L.b_shared[s]];
      if (!match) continue;
      const std::uint64_t key =
          pack(ia, L.a_free, a.legs()) * L.b_free_volume + pack(ib, L.b_free, b.legs());
      auto [it, fresh] = acc.try_emplace(key, va * vb);
      if (!fresh) it->second.add_product(va, vb);
    }
  }
  SparseTensor out(a.field(), L.result_legs);
  for (const auto& [k, v] : acc) out.add(k, v);
  return out;
}

SparseTensor contract_pair(const SparseTensor& a, const SparseTensor& b) {
  const PairLayout L = layout(a, b);
  // Hash join on the shared index: bucket b's entries by shared key.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Scalar*>>> buckets;
  buckets.reserve(b.nnz());
  for (const auto& [kb, vb] : b.entries()) {
    const auto ib = b.decode(kb);
    buckets[pack(ib, L.b_shared, b.legs())].emplace_back(pack(ib, L.b_free, b.legs()), &vb);
  }
  const auto& ea = a.entries();
  const long na = static_cast<long>(ea.size());
  std::vector<std::unordered_map<std::uint64_t, Scalar>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel if (na > 256)
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (long i = 0; i < na; ++i) {
      const auto ia = a.decode(ea[static_cast<std::size_t>(i)].first);
      const Scalar& va = ea[static_cast<std::size_t>(i)].second;
      auto it = buckets.find(pack(ia, L.a_shared, a.legs()));
      if (it == buckets.end()) continue;
      const std::uint64_t base = pack(ia, L.a_free, a.legs()) * L.b_free_volume;
      for (const auto& [free_b, vb] : it->second) {
        auto [slot, fresh] = local.try_emplace(base + free_b, va * *vb);
        if (!fresh) slot->second.add_product(va, *vb);
      }
    }
  }
  // Exact sums do not depend on the order of accumulation.
  std::unordered_map<std::uint64_t, Scalar> merged;
  for (auto& part : partial)
    for (auto& [k, v] : part) {
      auto [slot, fresh] = merged.try_emplace(k, std::move(v));
      if (!fresh) slot->second += v;
    }
  SparseTensor out(a.field(), L.result_legs);
  for (const auto& [k, v] : merged) out.add(k, v);
  out.normalize();
  return out;
}

namespace {

using Wide = unsigned __int128;

Wide saturating_volume(const std::vector<Leg>& legs) {
  Wide v = 1;
  const Wide cap = Wide(1) << 100;
  for (const auto& l : legs) {
    v *= l.dim;
    if (v > cap) return cap;
  }
  return v;
}

}  // namespace

SparseTensor contract_network(std::vector<SparseTensor> tensors, const std::vector<std::size_t>& open_legs,
                              const ContractOptions& options) {
  if (tensors.empty()) throw input_error("BadParams", "empty tensor network");
  const FieldSpec field = tensors.front().field();
  std::mt19937_64 rng(options.seed);
  auto kernel = options.parallel ? contract_pair : contract_pair_reference;
  std::vector<bool> alive(tensors.size(), true);
  std::size_t remaining = tensors.size();

  auto shared_min = [&](std::size_t x, std::size_t y) -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (const auto& lx : tensors[x].legs())
      for (const auto& ly : tensors[y].legs())
        if (lx.id == ly.id && (!best || lx.id < *best)) best = lx.id;
    return best;
  };
  auto result_volume = [&](std::size_t x, std::size_t y) {
    std::vector<Leg> free;
    for (const auto& lx : tensors[x].legs())
      if (std::none_of(tensors[y].legs().begin(), tensors[y].legs().end(),
                       [&](const Leg& l) { return l.id == lx.id; }))
        free.push_back(lx);
    for (const auto& ly : tensors[y].legs())
      if (std::none_of(tensors[x].legs().begin(), tensors[x].legs().end(),
                       [&](const Leg& l) { return l.id == ly.id; }))
        free.push_back(ly);
    return saturating_volume(free);
  };

  while (remaining > 1) {
    struct Candidate {
      std::size_t x, y;
      Wide volume;
      std::size_t leg;
    };
    std::vector<Candidate> cands;
    for (std::size_t x = 0; x < tensors.size(); ++x) {
      if (!alive[x]) continue;
      for (std::size_t y = x + 1; y < tensors.size(); ++y) {
        if (!alive[y]) continue;
        if (auto leg = shared_min(x, y)) cands.push_back({x, y, result_volume(x, y), *leg});
      }
    }
    std::size_t x, y;
    if (cands.empty()) {
      // Only disconnected pieces remain: outer products in index order.
      x = static_cast<std::size_t>(std::find(alive.begin(), alive.end(), true) - alive.begin());
      y = static_cast<std::size_t>(std::find(alive.begin() + static_cast<long>(x) + 1, alive.end(), true) -
                                   alive.begin());
    } else if (options.order == ContractionOrder::Random) {
      const auto& c = cands[rng() % cands.size()];
      x = c.x;
      y = c.y;
    } else {
      const auto best = std::min_element(cands.begin(), cands.end(), [](const Candidate& p, const Candidate& q) {
        if (p.volume != q.volume) return p.volume < q.volume;
        if (p.leg != q.leg) return p.leg < q.leg;
        return std::pair(p.x, p.y) < std::pair(q.x, q.y);
      });
      x = best->x;
      y = best->y;
    }
    tensors[x] = kernel(tensors[x], tensors[y]);
    alive[y] = false;
    tensors[y] = SparseTensor();
    --remaining;
  }
  const std::size_t last = static_cast<std::size_t>(std::find(alive.begin(), alive.end(), true) - alive.begin());
  SparseTensor result = std::move(tensors[last]);
  if (result.legs().size() != open_legs.size())
    throw input_error("BadNetwork", "network has " + std::to_string(result.legs().size()) +
                                        " dangling legs, expected " + std::to_string(open_legs.size()));
  (void)field;
  return result.permuted(open_legs);
}

}  // namespace octqft
