#pragma once

#include <optional>
#include <vector>

#include "dichroma/digraph.hpp"

namespace dichroma {

// Total assignment vertex -> colour in 1..k.
struct Dicolouring {
  std::vector<int> colour;
  int k = 0;

  // k is taken as the largest colour present.
  static Dicolouring from(std::vector<int> colours);
  int operator[](int v) const { return colour[v]; }
};

struct DicolouringCheck {
  bool valid = false;
  // A monochromatic directed cycle when invalid.
  std::vector<int> cycle;
};

// Throws PartialColouring when the colouring is not total or uses colours < 1.
DicolouringCheck verify_dicolouring(const Digraph& d, const Dicolouring& c);

struct ExactResult {
  int chi = 0;
  Dicolouring colouring;
};

// Exact dichromatic number with an optimal colouring. Deterministic.
// Throws BudgetExceededError carrying (lower, upper) when the budget runs out.
ExactResult exact_dichromatic(const Digraph& d, Budget* budget = nullptr);

// A k-dicolouring, or nullopt when none exists.
std::optional<Dicolouring> find_k_dicolouring(const Digraph& d, int k, Budget* budget = nullptr);

// Cheap lower bound: largest digon clique found greedily, at least 2 when a cycle exists.
int dichromatic_lower_bound(const Digraph& d);

// Each vertex takes the smaller of the least colour missing among coloured
// out-neighbours and the least colour missing among coloured in-neighbours.
Dicolouring greedy_dicolour(const Digraph& d, const std::vector<int>& order);

// f(x) = vertex count of the longest backward-arc-only dipath ending at x.
Dicolouring gallai_roy_colour(const Digraph& d, const std::vector<int>& order);

struct BackwardPathCertificate {
  std::vector<int> ordering;
  int max_backward_path = 0;  // vertices on the longest backward-only dipath
};

// Ordering by colour class, each class in topological order.
BackwardPathCertificate backward_certificate(const Digraph& d, const Dicolouring& c);
int longest_backward_path(const Digraph& d, const std::vector<int>& order);

struct OddFreeResult {
  bool coloured = false;
  Dicolouring colouring;
  std::vector<int> odd_cycle;
};

// 2-dicolouring via a bipartition of each strong component, or an odd dicycle.
OddFreeResult two_colour_odd_free(const Digraph& d);

// Combine a c-colouring of d[s] and a 2c-colouring of d - s into a
// 2c-colouring of d. Both inner and outer index their induced subdigraph
// with vertices in ascending order. Throws NotDipolar or InvalidInput.
Dicolouring dipolar_combine(const Digraph& d, const std::vector<int>& s, const Dicolouring& inner,
                            const Dicolouring& outer);

bool is_dipolar(const Digraph& d, const std::vector<int>& s);

}  // namespace dichroma
