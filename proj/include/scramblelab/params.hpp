#pragma once

#include <optional>

#include "scramblelab/flow.hpp"
#include "scramblelab/multigraph.hpp"

namespace scramblelab {

struct GraphParams {
  int n = 0;
  long long edge_count = 0;  // with multiplicity
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> girth;  // nullopt = acyclic
  int kappa = 0;
  long long lambda = 0;
};

inline GraphParams connectivity_params(const MultiGraph& g) {
  GraphParams p;
  p.n = g.n();
  p.edge_count = g.edge_count();
  p.min_degree = g.min_degree();
  p.max_degree = g.max_degree();
  p.girth = g.girth();
  p.kappa = g.n() >= 2 ? vertex_connectivity(g) : 0;
  p.lambda = g.n() >= 2 ? edge_connectivity(g) : 0;
  return p;
}

}  // namespace scramblelab
