#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dichroma/dicolour.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

// Cyclic vertex order, rotated so that the least vertex comes first.
struct CyclicOrder {
  std::vector<int> order;
  static CyclicOrder canonical(std::vector<int> order);
  // position[v] = index of v in order
  std::vector<int> positions() const;
};

// xy in A and z in ]x, y[ imply zy in A.
bool is_inround_order(const Digraph& d, const CyclicOrder& c);
// Additionally xz in A.
bool is_round_order(const Digraph& d, const CyclicOrder& c);

struct LocalFlag {
  bool holds = true;
  std::optional<int> witness;  // first vertex where the local condition fails
};

struct LocalClassReport {
  LocalFlag locally_out_semicomplete;
  LocalFlag locally_out_transitive;  // x+ induces a transitive tournament
  LocalFlag locally_in_tournament;   // x- induces a tournament
  LocalFlag locally_semicomplete;
  LocalFlag inround_condition;       // oriented, x+ tournament, x- acyclic
  LocalFlag round_condition;         // oriented, x+ and x- transitive tournaments
};

LocalClassReport check_local_class(const Digraph& d);

struct InroundResult {
  std::optional<CyclicOrder> order;
  std::string refutation;       // set when order is empty
  std::optional<int> witness;   // vertex where the local condition fails
};

// d must be a strong oriented graph (NotStrong, NotOriented).
InroundResult inround_order(const Digraph& d);

struct HubPartition {
  VertexSetPartition parts;  // sorted by least vertex
  Digraph quotient;          // part i is vertex i
  CyclicOrder order;         // in-round order of the quotient
};

// d must be a strong locally out-transitive oriented graph (PreconditionViolated).
HubPartition hub_decomposition(const Digraph& d);

// Inclusion-maximal hubs by subset enumeration; for cross-checking, n <= 20.
VertexSetPartition maximal_hubs_bruteforce(const Digraph& d);

// Colours 1 and 2 with every vertex of t coloured 1. d must be a locally
// out-transitive oriented graph and t must induce a transitive tournament.
Dicolouring two_dicolour_lot(const Digraph& d, const std::vector<int>& t);

enum class StructureCase { UniversalVertex, RoundBlowup, FourSetPartition };
const char* structure_case_name(StructureCase c);

struct SemicompleteStructure {
  StructureCase kind = StructureCase::UniversalVertex;
  int universal = -1;                       // UniversalVertex
  VertexSetPartition parts;                 // RoundBlowup: maximal weak hubs
  CyclicOrder order;                        // RoundBlowup: round order of the quotient
  std::vector<int> e, f, g, h;              // FourSetPartition
  // Non-emptiness patterns of the two formulations of the four-set case.
  bool fh_nonempty_and_e_or_g = false;
  bool eg_nonempty_and_f_or_h = false;
};

// d must be connected and locally semicomplete (PreconditionViolated).
SemicompleteStructure semicomplete_structure(const Digraph& d);

// Maximal weak hubs: strong sets strictly in- or out-dominated by an outside vertex.
VertexSetPartition maximal_weak_hubs(const Digraph& d);
bool is_mixed(const Digraph& d, const std::vector<int>& x);

struct FourSetCheck {
  bool semicomplete_parts = false;
  bool e_strictly_f = false;
  bool f_dominates_g = false;
  bool g_dominates_h = false;
  bool h_strictly_e = false;
  bool g_touches_e = false;
  bool partition = false;
  bool all() const {
    return semicomplete_parts && e_strictly_f && f_dominates_g && g_dominates_h && h_strictly_e && g_touches_e &&
           partition;
  }
};

FourSetCheck check_four_set(const Digraph& d, const std::vector<int>& e, const std::vector<int>& f,
                            const std::vector<int>& g, const std::vector<int>& h);

// Least vertex reaching every vertex by a dipath of length <= 2.
std::optional<int> find_2king(const Digraph& d);

struct ChWitness {
  int vertex = -1;
  int out_degree = 0;
  bool verdict = false;  // out_degree * k < n
};

// d must be a locally in-tournament oriented graph with no dicycle of length <= k.
ChWitness ch_witness(const Digraph& d, int k);

struct WeightedCheck {
  bool out_round = false;
  std::optional<CyclicOrder> order;
  // First u with k * w(u+) < W - w(u); failing that, the first with <=.
  std::optional<int> vertex;
  bool strict = false;
};

// Weighted out-degree inequality on a strong out-round oriented graph without C3.
WeightedCheck weighted_out_round_check(const Digraph& d, const std::vector<long long>& w, int k);

// Out-round order: xy in A and z in ]x, y[ imply xz in A.
std::optional<CyclicOrder> out_round_order(const Digraph& d);

}  // namespace dichroma
