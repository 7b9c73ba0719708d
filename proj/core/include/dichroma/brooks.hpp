#pragma once

#include <vector>

#include "dichroma/dicolour.hpp"
#include "dichroma/digraph.hpp"

namespace dichroma {

enum class BrooksException { None, DirectedCycle, SymmetricOddCycle, SymmetricComplete };

const char* brooks_exception_name(BrooksException e);

struct BrooksComponent {
  std::vector<int> vertices;
  int k = 0;  // Δ_max of the component
  BrooksException tag = BrooksException::None;
};

struct BrooksVerdict {
  std::vector<BrooksComponent> components;  // weak components, by least vertex
  int delta_max = 0;
  // χ⃗ = Δ_max + 1 for the whole digraph.
  bool tight = false;
};

BrooksVerdict classify_brooks(const Digraph& d);

// Exception tag of a connected digraph with respect to its own Δ_max.
BrooksException brooks_exception(const Digraph& connected);

struct BrooksColouring {
  Dicolouring colouring;
  // Set when the constructive search found no split and the exact solver was used.
  bool used_exact_fallback = false;
};

// Valid dicolouring with at most Δ_max colours on every non-exceptional
// component and Δ_max + 1 on the exceptional ones.
BrooksColouring brooks_colour(const Digraph& d);

// Vertex u becomes u*(k+1) + {0: u-, 1: u+, 1+i: u_i}. Throws BadK for k < 2.
Digraph deltamin_gadget(const Digraph& d, int k);

}  // namespace dichroma
