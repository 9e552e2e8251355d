#pragma once

#include <stdexcept>
#include <string>

namespace scramblelab {

// Stable error identifiers; the CLI prints these names verbatim.
enum class errc {
  self_loop,
  disconnected,
  bad_index,
  bad_params,
  no_such_edge,
  not_degree_two,
  neighbors_not_distinct,
  infeasible_size,
  feasibility_cap_exceeded,
  empty_collection,
  empty_egg,
  disconnected_egg,
  bad_vertex,
  bad_set,
  negative_outside_source,
  cap_exceeded,
  precondition_violated,
  order_too_small,
  invalid_decomposition,
  invalid_embedding,
  too_small,
  missing_invariant,
  not_a_bridge,
  set_too_large,
  not_simple,
  no_case_matches,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::self_loop: return "SelfLoop";
    case errc::disconnected: return "Disconnected";
    case errc::bad_index: return "BadIndex";
    case errc::bad_params: return "BadParams";
    case errc::no_such_edge: return "NoSuchEdge";
    case errc::not_degree_two: return "NotDegreeTwo";
    case errc::neighbors_not_distinct: return "NeighborsNotDistinct";
    case errc::infeasible_size: return "InfeasibleSize";
    case errc::feasibility_cap_exceeded: return "FeasibilityCapExceeded";
    case errc::empty_collection: return "EmptyCollection";
    case errc::empty_egg: return "EmptyEgg";
    case errc::disconnected_egg: return "DisconnectedEgg";
    case errc::bad_vertex: return "BadVertex";
    case errc::bad_set: return "BadSet";
    case errc::negative_outside_source: return "NegativeOutsideSource";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::order_too_small: return "OrderTooSmall";
    case errc::invalid_decomposition: return "InvalidDecomposition";
    case errc::invalid_embedding: return "InvalidEmbedding";
    case errc::too_small: return "TooSmall";
    case errc::missing_invariant: return "MissingInvariant";
    case errc::not_a_bridge: return "NotABridge";
    case errc::set_too_large: return "SetTooLarge";
    case errc::not_simple: return "NotSimple";
    case errc::no_case_matches: return "NoCaseMatches";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace scramblelab
