#pragma once

#include <optional>
#include <vector>

#include "compa/perm_group.hpp"

namespace compa {

/// An orbit of the stabilizer of `base_point`, with its paired suborbit.
struct Suborbit {
  Point base_point = 0;
  std::vector<Point> points;  // sorted
  Point representative = 0;   // minimum point
  std::size_t paired_index = 0;
  bool self_paired = false;

  std::size_t size() const { return points.size(); }
  bool is_trivial() const { return points.size() == 1 && points.front() == base_point; }
};

/// Suborbits of (G, x), sorted by their minimum point, with pairing filled
/// in. Throws InvalidArgument on intransitive input.
std::vector<Suborbit> suborbits(const PermGroup& group, Point x);

/// The suborbit paired with `delta`: for g with y^g = x (y the
/// representative of delta) it is the suborbit containing x^g. Returns an
/// index into `all`.
std::size_t paired_suborbit(const PermGroup& group, Point x, const std::vector<Suborbit>& all,
                            std::size_t delta);

/// Minimal-size self-paired suborbit with at least two points, ties broken
/// by smallest minimum point.
std::optional<Suborbit> smallest_self_paired_nontrivial(const PermGroup& group, Point x);

/// The groups compared by Wielandt's lemma for one suborbit.
struct WielandtData {
  Point base_point = 0;
  Point y = 0;             // representative of the suborbit
  Point y_paired = 0;      // representative of the paired suborbit
  PermGroup stabilizer;    // G_x
  PermGroup kernel;        // T(x): kernel of G_x on the suborbit
  PermGroup image;         // G_x induced on the suborbit
  PermGroup two_point_image;         // G_{x,y} induced on the suborbit
  PermGroup two_point_paired_image;  // G_{x,y'} induced on the paired suborbit
};

/// Throws InvalidArgument if the group is not primitive, is regular, or the
/// suborbit is {x}.
WielandtData wielandt_data(const PermGroup& group, Point x, const Suborbit& delta);

}  // namespace compa
