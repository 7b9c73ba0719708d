#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma {

// Vertex i of the pattern maps to host vertex map[i]; adjacency matches exactly.
struct PatternEmbedding {
  std::vector<int> map;
};

// Generator output with the values the construction is known to satisfy.
struct GeneratedDigraph {
  Digraph digraph;
  std::string family;
  std::map<std::string, int> params;
  std::optional<int> expected_chi;
  std::vector<std::string> forbidden_patterns;  // names accepted by named_pattern
};

inline constexpr int kDefaultSizeCap = 4096;

// C⃗_l(D_1, ..., D_l): disjoint union plus all arcs D_i -> D_{i+1 mod l}. Throws TooFewParts.
Digraph compose_circular(const std::vector<Digraph>& parts);

// D_1 => D_2: disjoint union plus all arcs from D_1 to D_2.
Digraph compose_domination(const Digraph& d1, const Digraph& d2);

// Replace u by h1. Vertex 0 of h1 takes index u, the others follow the vertices
// of g1. Throws BadVertex.
Digraph substitute(const Digraph& g1, int u, const Digraph& h1);

// Line digraph: one vertex per arc, ab -> bc.
Digraph line_digraph(const Digraph& d);

// F_1 = K_1, F_k = C⃗_l(K_1, F_{k-1}, ..., F_{k-1}).
GeneratedDigraph gen_fk(int l, int k, int size_cap = kDefaultSizeCap);

// Vertices are triples i<j<k of 1..s in lexicographic order.
GeneratedDigraph gen_ds(int s, int size_cap = kDefaultSizeCap);
// Triple of 1..s for each vertex of gen_ds(s).
std::vector<std::array<int, 3>> ds_triples(int s);

GeneratedDigraph gen_chordal_c122(int k, int size_cap = kDefaultSizeCap);
GeneratedDigraph gen_chordal_hero_free(int k, int size_cap = kDefaultSizeCap);

// Sorted vertex sets inducing a transitive tournament of the given order
// (order 0 means any order >= 1). The digraph must be oriented.
std::vector<std::vector<int>> transitive_subtournaments(const Digraph& d, int order = 0);

// Lexicographically least induced embedding, or nullopt. Throws BudgetExceeded.
std::optional<PatternEmbedding> contains_induced(const Digraph& host, const Digraph& pattern,
                                                 Budget* budget = nullptr);
bool verify_embedding(const Digraph& host, const Digraph& pattern, const PatternEmbedding& e);

// Small patterns by name: "C3", "TT<n>", "C3(1,2,2)", "C3(1,2,3)", "C3(1,2,C3)",
// "C3=>K1", "K1=>C3". Throws InvalidInput.
Digraph named_pattern(const std::string& name);

// Generator by family name: "fk" (l, k), "ds" (s), "chordal-c122" (k),
// "chordal-hero-free" (k). Throws InvalidInput on unknown names or missing parameters.
GeneratedDigraph generate(const std::string& family, const std::map<std::string, int>& params);

}  // namespace dichroma
