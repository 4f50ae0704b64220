#pragma once

#include <optional>
#include <span>
#include <vector>

#include "branchwise/cover.hpp"
#include "branchwise/graph.hpp"
#include "branchwise/ilp.hpp"
#include "branchwise/mod_decomp.hpp"

namespace branchwise {

// (ham, spi, size) of a parse-tree node with witnesses in original ids.
// ham_cover holds ham paths; spi_cover holds the spider first, then spi - 1
// paths.
struct CoverRecord {
  int size = 0;
  int ham = 0;
  int spi = 0;
  Cover ham_cover;
  Cover spi_cover;
};

struct CoverResult {
  int value = 0;
  Cover cover;
};

CoverRecord leaf_record(VertexId v);

// Partition into exactly `pieces` paths obtained from the quotient with one
// extra universal module of `pieces` isolated vertices acting as the root, or
// nothing when that instance is infeasible. Paths are split further when the
// construction yields fewer pieces.
std::optional<Cover> ham_cover_with(const Graph& quotient, std::span<const CoverRecord> children, int pieces,
                                    const SolveOptions& opts = {});

// Smallest feasible piece count and its witness. Throws Errc::NoCover if no
// count up to the vertex total works.
CoverResult compute_ham(const Graph& quotient, std::span<const CoverRecord> children, const SolveOptions& opts = {});
CoverResult compute_spi(const Graph& quotient, std::span<const CoverRecord> children, const SolveOptions& opts = {});

// Bottom-up over the subtree; each node is solved once.
CoverRecord compute_record(const ParseNode& node, const SolveOptions& opts = {});

// Records of the node's children in order.
std::vector<CoverRecord> child_records(const ParseNode& node, const SolveOptions& opts = {});

}  // namespace branchwise
