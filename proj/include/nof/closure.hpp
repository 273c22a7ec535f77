#pragma once

#include <vector>

#include "nof/types.hpp"

namespace nof {

// True when the three-or-more points {pts} form a star with the given center:
// pts[i] differs from center exactly in coordinate i.
bool is_star_of(const Coords& center, const std::vector<Coords>& pts);

// All stars whose k displaced points lie in S. Empty result iff S is star-free.
std::vector<Star> find_stars(const PointSet& S);

bool is_star_free(const PointSet& S);

// Would adding p to pts complete a star? Checks every (k-1)-subset of pts
// together with p. Intended for incremental search.
bool completes_star(const Dims& dims, const std::vector<Coords>& pts, const Coords& p);

// The smallest cylinder intersection containing S: the intersection over all
// axes i of the cylinder generated by S in dimension i.
PointSet closure_min(const PointSet& S);

// Same set computed the dual way: repeatedly add every star center whose star
// lies in the current set, until stable.
PointSet closure_fixpoint(const PointSet& S);

bool is_cylinder_intersection(const PointSet& S);

// At most one point of S on every line of the ambient box.
bool meets_lines_at_most_once(const PointSet& S);

}  // namespace nof
