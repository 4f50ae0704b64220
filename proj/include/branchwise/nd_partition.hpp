#pragma once

#include <vector>

#include "branchwise/graph.hpp"

namespace branchwise {

enum class ClassKind { Clique, Independent };

const char* class_kind_name(ClassKind kind);

// Neighborhood-diversity type partition. Two vertices share a type when
// N(u) \ {v} = N(v) \ {u}; each class is then a clique or an independent set.
struct TypePartition {
  std::vector<std::vector<VertexId>> classes;  // sorted, ordered by minimum id
  std::vector<ClassKind> kind;                 // singletons are tagged Clique
  Graph type_graph;                            // on class indices
  std::vector<VertexId> representative;        // minimum id per class
  std::vector<int> class_of;                   // vertex -> class index

  int size() const { return static_cast<int>(classes.size()); }
};

// Coarsest same-type partition. Requires g.vertex_count() >= 1.
TypePartition type_partition(const Graph& g);

// Per class, the vertex of minimum cost; ties go to the smaller id.
std::vector<VertexId> min_cost_representatives(const TypePartition& tp, const WeightedGraph& w);

}  // namespace branchwise
