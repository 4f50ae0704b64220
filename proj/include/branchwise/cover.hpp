#pragma once

#include <vector>

#include "branchwise/graph.hpp"

namespace branchwise {

// A path (ordered, first() = f, last = s) or a spider (center plus legs, each
// leg ordered from the center outward; f = s = center).
struct PathPiece {
  enum class Kind { Path, Spider };

  Kind kind = Kind::Path;
  std::vector<VertexId> path;
  VertexId center = -1;
  std::vector<std::vector<VertexId>> legs;

  static PathPiece make_path(std::vector<VertexId> vs);
  static PathPiece make_spider(VertexId center, std::vector<std::vector<VertexId>> legs);

  bool is_spider() const { return kind == Kind::Spider; }
  VertexId first() const { return is_spider() ? center : path.front(); }
  VertexId second() const { return is_spider() ? center : path.back(); }
  int size() const;
  std::vector<VertexId> vertices() const;
  // Tree edges of the piece as (parent, child), oriented away from first().
  std::vector<Edge> edges() const;

  friend bool operator==(const PathPiece&, const PathPiece&) = default;
};

using Cover = std::vector<PathPiece>;

int cover_vertex_count(const Cover& cover);

// Cuts edges until the cover has exactly alpha pieces. Each cut removes the
// last edge of the largest piece (for a spider, the end of its longest leg;
// ties go to the earlier piece) and appends the detached vertex as a new
// one-vertex path. Throws Errc::TooFewVertices when alpha exceeds the vertex
// count and Errc::OutOfRange when alpha is below the current piece count.
Cover trim_cover(Cover cover, int alpha);

}  // namespace branchwise
