#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dichroma/error.hpp"
#include "dichroma/multigraph.hpp"

namespace dichroma {

// Colour per edge, in edge order, using colours 1..k.
struct EdgeColouring {
  std::vector<int> colour;
  int k = 0;
  static EdgeColouring from(std::vector<int> colours);
};

struct Overload {
  int vertex = -1;
  int colour = 0;
  int count = 0;
};

struct EdgeColouringCheck {
  bool valid = false;
  std::optional<Overload> witness;
};

// Throws PartialColouring when c does not give every edge a colour >= 1.
EdgeColouringCheck verify_edge_colouring(const Multigraph& g, const EdgeColouring& c, int d);

// max over X of ceil(|E(G[X])| / floor(d|X|/2)). Exhaustive for n <= subset_cap,
// otherwise small subsets, components and seeded random subsets.
int gamma_d(const Multigraph& g, int d, int subset_cap = 16, std::uint64_t seed = 1);

// A (k, d)-edge colouring by backtracking, or nullopt. Throws BudgetExceeded.
std::optional<EdgeColouring> find_defective_colouring(const Multigraph& g, int d, int k, Budget* budget = nullptr);

struct DefectiveIndex {
  int index = 0;
  EdgeColouring colouring;
  int lower = 0;  // max(ceil(Δ/d), Γ_d)
};

// Exact χ'_d. With seed_upper the constructive colouring bounds the search from
// above. Throws BudgetExceeded with the bounds reached.
DefectiveIndex exact_defective_index(const Multigraph& g, int d, Budget* budget = nullptr, bool seed_upper = true);

// Block colouring of shannon_multigraph(k) along a triangle-consecutive edge order.
// Throws EvenD or BadParameters.
EdgeColouring colour_shannon_multigraph(int k, int d);
// The triangle-consecutive edge order used above.
std::vector<int> shannon_edge_order(int k);

struct EulerSplit {
  std::vector<int> a, b;      // edge indices
  std::optional<int> spare;   // set when the edge count is odd
};

// g connected and 2k-regular. Throws NotRegular or Disconnected.
EulerSplit split_euler(const Multigraph& g);

struct FactorWitness {
  std::vector<int> edges;
  int k = 0;
};

// k-factor via a perfect matching in the Tutte gadget. Throws OddK.
std::optional<FactorWitness> extract_factor(const Multigraph& g, int k);
// Any f-factor with per-vertex targets; nullopt when none exists.
std::optional<std::vector<int>> extract_f_factor(const Multigraph& g, const std::vector<int>& f);

// Two copies of g; edge i of g is edge i of the result, its second copy is edge m + i,
// and target - deg(v) parallel edges join the copies of v. Throws BadParameters.
Multigraph regularize(const Multigraph& g, int target);

// Proper edge colouring of a simple graph with at most Δ + 1 colours (Misra–Gries).
EdgeColouring misra_gries(const Multigraph& g);

struct DefectiveColouring {
  EdgeColouring colouring;
  std::string route;       // "trivial", "even", "odd-ladder", "vizing", "parity", "exact"
  int bound = 0;           // the bound the route guarantees
  bool fell_back = false;  // exact search replaced the constructive route
};

// Throws BadParameters for d < 1, FallbackToExact when the constructive
// route fails on a graph too large for exact search.
DefectiveColouring defective_colour(const Multigraph& g, int d, bool simple_hint = false);

// Least special integer >= delta for odd d: (i+1)d - ceil(i/3).
int next_special(int delta, int d);

struct NpGadget {
  Multigraph graph;         // G'; edges of g come first with the same indices
  int base_n = 0;           // vertices 0..base_n-1 are those of g
  int k = 0, d = 0;
  Multigraph h;             // subdivided tower; vertex h.n()-1 is v, a = 0, b = 1
  EdgeColouring h_colouring;  // (k, d)-colouring of h with av, bv coloured 1
  // copies[u * per_vertex + (i-1)]: vertex of G' for each vertex of h (v maps to u).
  std::vector<std::vector<int>> copies;
  std::vector<int> copy_edge_offset;  // first G' edge index of each copy
  int per_vertex = 0;                 // k(d-1)/2
};

// G_{kd,d} tower: K_{d+1}, then two copies joined by a d-regular circulant bipartite graph.
Multigraph defective_tower(int k, int d);

// Throws BadParameters unless g is k-regular simple, k >= 3, d >= 3 odd.
NpGadget np_gadget_defective(const Multigraph& g, int k, int d);

// Extend a proper k-edge-colouring of g to a (k, d)-colouring of G'.
EdgeColouring extend_gadget_colouring(const NpGadget& gadget, const EdgeColouring& proper);

}  // namespace dichroma
