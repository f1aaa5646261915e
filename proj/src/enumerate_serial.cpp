// Reference scan: one thread, an ordered map, first hit wins. Kept simple on
// purpose so the parallel kernel has something obvious to agree with.
#include <map>

#include "icosa/enumerate.hpp"

namespace ico {

TripleSet enumerate_serial(const GroupTable& G) {
  std::map<std::uint32_t, MatTuple4> found;
  std::uint64_t generating = 0;
  for (int a = 0; a < kGroupOrder; ++a)
    for (int b = 0; b < kGroupOrder; ++b)
      for (int c = 0; c < kGroupOrder; ++c) {
        Elem m1 = static_cast<Elem>(a), m2 = static_cast<Elem>(b), m3 = static_cast<Elem>(c);
        if (!generates(G, m1, m2, m3)) continue;
        ++generating;
        MatTuple4 T = complete_tuple(G, m1, m2, m3);
        found.try_emplace(seven_tuple(G, T).key(), T);
      }
  std::vector<MTuple> tuples;
  std::vector<MatTuple4> reps;
  for (const auto& [key, T] : found) {
    tuples.push_back(MTuple::from_key(key));
    reps.push_back(T);
  }
  return TripleSet(std::move(tuples), std::move(reps), generating);
}

}  // namespace ico
