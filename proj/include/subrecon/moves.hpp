#pragma once

#include <string>
#include <vector>

#include "subrecon/graph.hpp"
#include "subrecon/types.hpp"

namespace subrecon {

/// All feasible solutions reachable from sol by one legal move, sorted in
/// canonical order. An infeasible sol has no neighbors. Under TJ the moved
/// token may land on any unoccupied element; under TS it may only land on an
/// element adjacent to the one it left (vertices: joined by an edge; edges:
/// sharing an endpoint).
std::vector<Solution> neighbors(const Graph& g, const Solution& sol,
                                Variant variant, Rule rule,
                                const PropertySpec& prop);

/// True iff `to` is reachable from `from` in exactly one legal move: both
/// feasible, symmetric difference one element each way, and the swapped pair
/// adjacent under TS. Throws input_error on solution-kind mismatch.
bool is_feasible_move(const Graph& g, const Solution& from, const Solution& to,
                      Variant variant, Rule rule, const PropertySpec& prop);

struct VerifyResult {
  bool ok = false;
  std::size_t index = 0;  // first violating step when !ok
  std::string reason;

  static VerifyResult accept() { return {true, 0, ""}; }
  static VerifyResult reject(std::size_t index, std::string reason) {
    return {false, index, std::move(reason)};
  }
};

/// Checks a claimed witness sequence against the instance: endpoints match,
/// every step is well-formed and feasible, and consecutive steps are single
/// legal moves. Reports the first violating step.
VerifyResult verify_sequence(const Instance& inst,
                             const std::vector<Solution>& steps);

inline VerifyResult verify_sequence(const Instance& inst,
                                    const ReconfigSequence& seq) {
  return verify_sequence(inst, seq.steps);
}

}  // namespace subrecon
