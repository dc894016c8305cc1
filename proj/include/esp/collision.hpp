#pragma once

#include "esp/partition.hpp"
#include "esp/product_multiset.hpp"

namespace esp {

/// Two distinct partitions with identical pre2 images, rechecked exactly
/// when built.
class CollisionPair {
 public:
  /// Throws std::invalid_argument if first == second or the images differ.
  static CollisionPair make(Partition first, Partition second);

  const Partition& first() const { return first_; }
  const Partition& second() const { return second_; }
  const ProductMultiset& shared_image() const { return image_; }

  friend bool operator==(const CollisionPair&, const CollisionPair&) = default;

 private:
  CollisionPair(Partition first, Partition second, ProductMultiset image)
      : first_(std::move(first)), second_(std::move(second)), image_(std::move(image)) {}

  Partition first_;
  Partition second_;
  ProductMultiset image_;
};

/// Orders collision pairs by (first, second) in enumeration order.
bool collision_less(const CollisionPair& a, const CollisionPair& b);

}  // namespace esp
