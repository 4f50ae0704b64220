#include "branchwise/cover.hpp"

#include <string>

#include "branchwise/error.hpp"

namespace branchwise {

PathPiece PathPiece::make_path(std::vector<VertexId> vs) {
  if (vs.empty()) throw Error(Errc::OutOfRange, "empty path piece");
  PathPiece p;
  p.kind = Kind::Path;
  p.path = std::move(vs);
  return p;
}

PathPiece PathPiece::make_spider(VertexId center, std::vector<std::vector<VertexId>> legs) {
  PathPiece p;
  p.kind = Kind::Spider;
  p.center = center;
  for (auto& leg : legs) {
    if (!leg.empty()) p.legs.push_back(std::move(leg));
  }
  return p;
}

int PathPiece::size() const {
  if (!is_spider()) return static_cast<int>(path.size());
  int total = 1;
  for (const auto& leg : legs) total += static_cast<int>(leg.size());
  return total;
}

std::vector<VertexId> PathPiece::vertices() const {
  if (!is_spider()) return path;
  std::vector<VertexId> out{center};
  for (const auto& leg : legs) out.insert(out.end(), leg.begin(), leg.end());
  return out;
}

std::vector<Edge> PathPiece::edges() const {
  std::vector<Edge> out;
  if (!is_spider()) {
    for (std::size_t i = 1; i < path.size(); ++i) out.emplace_back(path[i - 1], path[i]);
    return out;
  }
  for (const auto& leg : legs) {
    VertexId prev = center;
    for (VertexId v : leg) {
      out.emplace_back(prev, v);
      prev = v;
    }
  }
  return out;
}

int cover_vertex_count(const Cover& cover) {
  int total = 0;
  for (const auto& p : cover) total += p.size();
  return total;
}

Cover trim_cover(Cover cover, int alpha) {
  const int total = cover_vertex_count(cover);
  if (alpha > total) {
    throw Error(Errc::TooFewVertices, "cannot cut " + std::to_string(total) + " vertices into " +
                                          std::to_string(alpha) + " pieces");
  }
  if (alpha < static_cast<int>(cover.size())) {
    throw Error(Errc::OutOfRange, "cover already has more than " + std::to_string(alpha) + " pieces");
  }
  while (static_cast<int>(cover.size()) < alpha) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < cover.size(); ++i) {
      if (cover[i].size() > cover[best].size()) best = i;
    }
    PathPiece& piece = cover[best];
    VertexId cut;
    if (piece.is_spider()) {
      std::size_t leg = 0;
      for (std::size_t i = 1; i < piece.legs.size(); ++i) {
        if (piece.legs[i].size() > piece.legs[leg].size()) leg = i;
      }
      cut = piece.legs[leg].back();
      piece.legs[leg].pop_back();
      if (piece.legs[leg].empty()) piece.legs.erase(piece.legs.begin() + static_cast<std::ptrdiff_t>(leg));
    } else {
      cut = piece.path.back();
      piece.path.pop_back();
    }
    cover.push_back(PathPiece::make_path({cut}));
  }
  return cover;
}

}  // namespace branchwise
