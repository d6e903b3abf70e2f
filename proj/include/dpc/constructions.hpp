#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "dpc/cover.hpp"
#include "dpc/graph.hpp"

namespace dpc {

enum class Family { ZeroJ, Large, Mid, IPlusOne, Equal };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

// A generated critical multigraph together with the cover that has no
// coloring and the closed-form vertex/edge counts for its parameters.
struct FamilyInstance {
  Family family;
  int i = 0;
  int j = 0;
  int m = 0;
  Multigraph graph;
  Cover bad_cover;
  std::int64_t predicted_n = 0;
  std::int64_t predicted_e = 0;

  DefectParams params() const { return {i, j}; }
};

// Adds a flag at base: a new vertex joined to base by two parallel edges.
// Returns the new graph and the flag vertex id.
std::pair<Multigraph, Vertex> attach_flag(const Multigraph& g, Vertex base);

// Adds a weak flag of the given weight at base. New vertices are numbered
// hub x, link y, then the flag vertices at x; the edges are y-base, x-y,
// then two per flag.
Multigraph attach_weak_flag(const Multigraph& g, Vertex base, int weight);

// The (0,j) family: cycle v_0..v_m plus j triangles hanging off v_0.
// Simple whenever m >= 2; m = 1 closes the cycle as a digon.
FamilyInstance build_zeroj(int j, int m);
// i >= 1, j >= 2i+1, m >= 0: path v_0..v_m v with flags.
FamilyInstance build_large(int i, int j, int m);
// i+2 <= j <= 2i, m >= 1: path v_0..v_{2m} with flags at even vertices.
FamilyInstance build_mid(int i, int j, int m);
// j = i+1, i >= 1, m >= 0: path v_0..v_{m+1} with weak flags and flags.
FamilyInstance build_iplusone(int i, int m);
// j = i >= 1, m >= 1: 2m-cycle with i flags at each even vertex.
FamilyInstance build_equal(int i, int m);

// Dispatches on family; j is ignored for iplusone and equal.
FamilyInstance build_family(Family f, int i, int j, int m);

// Closed-form counts for each family, computed independently of the builders.
std::int64_t family_vertex_count(Family f, int i, int j, int m);
std::int64_t family_edge_count(Family f, int i, int j, int m);

}  // namespace dpc
