#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma {

// ---------------------------------------------------------------- connectivity

struct LocalConnectivity {
  int value = 0;
  // Source side X of a minimum dicut: u in X, v not in X, |∂+(X)| = value.
  std::vector<int> source_side;
};

// Maximum number of arc-disjoint u->v dipaths, with a minimum dicut.
LocalConnectivity local_arc_connectivity(const Digraph& d, int u, int v);

struct LambdaProfile {
  int lambda = 0;                      // maximum over ordered pairs
  std::vector<std::vector<int>> pair;  // pair[u][v], 0 on the diagonal
  std::vector<std::vector<std::vector<int>>> cut;  // cut[u][v] = source side
};

LambdaProfile lambda_profile(const Digraph& d, bool with_cuts = true);
int lambda(const Digraph& d);
int dicut_size(const Digraph& d, const std::vector<int>& source_side);

// ---------------------------------------------------------------- joins

// D1 keeps its labels; D2's vertices follow, v2 merged into v1. Throws MissingArc.
Digraph directed_hajos_join(const Digraph& d1, Arc uv1, const Digraph& d2, Arc v2w);

struct BijoinResult {
  Digraph digraph;
  bool bidirected = false;  // t = w and u = v
  bool degenerate = false;  // exactly one of t = w, u = v
};

// Bijoin w.r.t. ((t, a1, w), (v, a2, u)). D1 keeps its labels; D2's vertices
// follow with a2 merged into a1. Throws PreconditionViolated.
BijoinResult hajos_bijoin(const Digraph& d1, int t, int a1, int w, const Digraph& d2, int v, int a2, int u);

struct TreeJoinSpec {
  int tree_vertices = 0;
  std::vector<std::pair<int, int>> tree_edges;  // edge i is {u_i, v_i}
  std::vector<Digraph> parts;                   // part i carries the digon of edge i
  std::vector<std::pair<int, int>> part_ends;   // indices of u_i, v_i inside part i
  std::vector<int> cycle;                       // peripheral cycle over tree vertices
  bool extended = false;         // cycle is a partial Eulerian list
  bool allow_any_order = false;  // skip the embedding check
};

struct TreeJoinResult {
  Digraph digraph;
  // Tree vertex j is vertex j of the result; part i, local vertex y maps to part_map[i][y].
  std::vector<std::vector<int>> part_map;
};

// Throws BadEmbeddingOrder, MissingDigon or InvalidInput.
TreeJoinResult hajos_tree_join(const TreeJoinSpec& spec);

// True when, for every tree edge, the cycle entries on each side are
// cyclically contiguous.
bool respects_embedding(int tree_vertices, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& cycle);

// D_AC with shared vertex x and crossing arcs tu, vw; D_B with digon [a, b].
// D_B keeps its labels, D_AC - x follows. Throws PreconditionViolated.
Digraph parallel_hajos_join(const Digraph& d_ac, int x, int t, int u, int v, int w, const Digraph& d_b, int a,
                            int b);

// ---------------------------------------------------------------- recognition

enum class CertKind {
  BaseSymmetricComplete,
  BaseSymmetricOddWheel,
  BaseDirectedCycle,
  DirectedHajosJoin,
  ParallelHajosJoin,
  HajosStarJoin,
};

const char* cert_kind_name(CertKind k);

// Vertices carry labels of the digraph handed to the recognizer; labels at or
// above its order denote the contracted vertex x of a parallel join.
struct DecompositionCertificate {
  CertKind kind = CertKind::BaseSymmetricComplete;
  std::vector<int> labels;  // vertex labels of this node's digraph, ascending
  std::vector<Arc> arcs;    // arcs in labels
  // DirectedHajosJoin: (u, v, w). ParallelHajosJoin: (t, u, v, w, a, b, x).
  // HajosStarJoin: (x, v_1, ..., v_l).
  std::vector<int> joint;
  // ParallelHajosJoin: labels on the A side of D_AC (x excluded).
  std::vector<int> a_side;
  std::vector<DecompositionCertificate> children;
};

struct NecessaryReport {
  bool eulerian = false;
  bool lambda_all_k = false;
  bool strong = false;
  bool biconnected = false;
  bool all() const { return eulerian && lambda_all_k && strong && biconnected; }
};

NecessaryReport check_extremal_necessary(const Digraph& d, int k);

struct RecognitionResult {
  bool extremal = false;
  std::optional<DecompositionCertificate> certificate;
  std::string reason;  // refutation reason when not extremal
};

// k = 1 or k >= 3. Throws UnsupportedK for k = 2 or k < 1, BudgetExceeded on exhaustion.
RecognitionResult recognize_k_extremal(const Digraph& d, int k, Budget* budget = nullptr);

// Rebuild the arc set described by a certificate node from its children.
std::vector<Arc> replay_certificate(const DecompositionCertificate& c);

bool is_symmetric_complete(const Digraph& d, int order);
bool is_symmetric_odd_wheel(const Digraph& d);
bool is_directed_cycle(const Digraph& d);

// ---------------------------------------------------------------- side artifacts

struct InducedCycleHypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;  // vertex sets of induced dicycles, sorted
  bool pairwise_small = true;           // |e ∩ e'| <= 1 for all pairs
  std::optional<std::pair<int, int>> violating_pair;
};

InducedCycleHypergraph induced_cycle_hypergraph(const Digraph& d, Budget* budget = nullptr);

// Rooted tree as children lists in embedding order, root 0. Tree edges become
// digons and a dicycle runs over the leaves in DFS order. Throws ParityViolated.
Digraph generalized_wheel(const std::vector<std::vector<int>>& children);

// Exact χ⃗ = 3, λ = 2, strong and biconnected.
bool check_2_extremal(const Digraph& d, Budget* budget = nullptr);

}  // namespace dichroma
