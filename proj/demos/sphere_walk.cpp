// Walks the Fan path on octahedral S^2 and then finds an approximate zero of
// a linear odd map with the Tucker solver.

#include <iostream>

#include "tucker/tucker.hpp"

int main() {
  using namespace tucker;

  const Triangulation t = octahedral(2);
  // labels(+e_i) = i, labels(-e_i) = -i
  const Labeling l(3, {1, 2, 3, -1, -2, -3});
  const PathTrace trace = run(t.complex, t.flag, l, Mode::Fan);

  std::cout << "Fan path on the octahedron:\n";
  for (const Node& v : trace.nodes) {
    std::cout << "  " << v.simplex << "  labels";
    for (int x : v.labels) std::cout << ' ' << x;
    std::cout << "  carrier " << (v.carrier.sign > 0 ? "+" : "-") << "H_" << v.carrier.dim << '\n';
  }
  const auto counts = count_alternating(t.complex, l);
  std::cout << "alternating triangles: " << counts.positive << " positive, " << counts.negative
            << " negative\n\n";

  const LinearMap a{{{1.0, 0.0, 0.3}, {0.0, 1.0, 0.3}}};
  for (int r = 0; r <= 3; ++r) {
    const BorsukWitness w = solve(t, a, r);
    std::cout << "refinements " << r << ": residual " << w.residual << " (mesh bound " << *w.mesh_bound
              << ")\n";
  }
}
