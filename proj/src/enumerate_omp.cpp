#include <omp.h>

#include <algorithm>
#include <utility>

#include "icosa/enumerate.hpp"

namespace ico {

namespace {

// (M1, M2, M3) packed so that integer order is scan order.
std::uint32_t pack(int a, int b, int c) {
  return static_cast<std::uint32_t>((a * kGroupOrder + b) * kGroupOrder + c);
}

MatTuple4 unpack(const GroupTable& G, std::uint32_t p) {
  auto c = static_cast<Elem>(p % kGroupOrder);
  p /= kGroupOrder;
  auto b = static_cast<Elem>(p % kGroupOrder);
  auto a = static_cast<Elem>(p / kGroupOrder);
  return complete_tuple(G, a, b, c);
}

}  // namespace

TripleSet enumerate_omp(const GroupTable& G, int threads) {
  using Hit = std::pair<std::uint32_t, std::uint32_t>;  // (tuple key, packed triple)
  if (threads <= 0) threads = omp_get_max_threads();

  std::vector<std::vector<Hit>> per_thread(threads);
  std::uint64_t generating = 0;

#pragma omp parallel num_threads(threads) reduction(+ : generating)
  {
    std::vector<Hit>& local = per_thread[omp_get_thread_num()];
    // Outer slices are uneven (closure cost depends on M1), hence dynamic.
#pragma omp for schedule(dynamic, 1)
    for (int a = 0; a < kGroupOrder; ++a) {
      std::vector<Hit> slice;
      for (int b = 0; b < kGroupOrder; ++b)
        for (int c = 0; c < kGroupOrder; ++c) {
          Elem m1 = static_cast<Elem>(a), m2 = static_cast<Elem>(b), m3 = static_cast<Elem>(c);
          if (!generates(G, m1, m2, m3)) continue;
          ++generating;
          slice.emplace_back(seven_tuple(G, complete_tuple(G, m1, m2, m3)).key(), pack(a, b, c));
        }
      // Keep only the first triple per key within the slice before it is stored.
      std::sort(slice.begin(), slice.end());
      auto last = std::unique(slice.begin(), slice.end(),
                              [](const Hit& x, const Hit& y) { return x.first == y.first; });
      local.insert(local.end(), slice.begin(), last);
    }
  }

  // Order-independent merge: the minimum packed triple per key survives, so
  // the result does not depend on how slices were scheduled.
  std::vector<Hit> all;
  for (auto& v : per_thread) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  auto last = std::unique(all.begin(), all.end(),
                          [](const Hit& x, const Hit& y) { return x.first == y.first; });
  all.erase(last, all.end());

  std::vector<MTuple> tuples;
  std::vector<MatTuple4> reps;
  tuples.reserve(all.size());
  reps.reserve(all.size());
  for (const auto& [key, p] : all) {
    tuples.push_back(MTuple::from_key(key));
    reps.push_back(unpack(G, p));
  }
  return TripleSet(std::move(tuples), std::move(reps), generating);
}

}  // namespace ico
