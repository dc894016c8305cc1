#include "esp/collision.hpp"

#include "esp/text_format.hpp"

#include <stdexcept>

namespace esp {

CollisionPair CollisionPair::make(Partition first, Partition second) {
  if (first == second) throw std::invalid_argument("collision pair needs two distinct partitions");
  auto image = pre2(first);
  if (pre2(second) != image)
    throw std::invalid_argument("pre2 images of " + to_text(first) + " and " + to_text(second) +
                                " differ");
  return CollisionPair(std::move(first), std::move(second), std::move(image));
}

bool collision_less(const CollisionPair& a, const CollisionPair& b) {
  if (a.first() != b.first()) return enumerates_before(a.first(), b.first());
  return enumerates_before(a.second(), b.second());
}

}  // namespace esp
