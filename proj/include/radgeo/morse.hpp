#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "radgeo/complex.hpp"

namespace radgeo {

struct CollapseStep {
  enum class Kind { collapse, star };
  Kind kind = Kind::collapse;
  Simplex big;    // Sigma
  Simplex small;  // sigma
  VertexId vertex = 0;
  std::string label;  // optional orbit/step tag, not part of the hash
};

struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  std::uint64_t initial_hash = 0;
  std::uint64_t terminal_hash = 0;
  std::size_t terminal_size = 0;
};

class CollapseError : public ComplexError {
 public:
  CollapseError(std::size_t step, const std::string& why)
      : ComplexError("step " + std::to_string(step + 1) + ": " + why), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// True iff sigma is a proper face of Sigma, both alive, and the simplices
/// strictly containing sigma are exactly the faces of Sigma containing it
/// (so Sigma is maximal).
bool is_free_pair(const TypedComplex& c, const Simplex& big, const Simplex& small);

/// Removes every simplex tau with sigma <= tau <= Sigma; for a codimension-one
/// pair that is exactly {sigma, Sigma}. Returns the number removed.
std::size_t apply_collapse(TypedComplex& c, const Simplex& big, const Simplex& small);

/// Deletes Star(v) when Res(v) is a cone; refuses otherwise. Returns the
/// apex of the residue.
VertexId remove_star_if_cone(TypedComplex& c, VertexId v);

struct GreedyResult {
  CollapseCertificate certificate;
  bool reached_point = false;
};

/// Elementary codimension-one collapses, always taking the free face sigma
/// smallest in (dim, vertex ids), until one vertex remains or none is free.
/// The complex is left at the terminal state (the core when stuck).
GreedyResult greedy_collapse(TypedComplex& c);

/// Applies a schedule step by step with full freeness checks; throws
/// CollapseError naming the first failing step.
CollapseCertificate replay_schedule(TypedComplex& c, const std::vector<CollapseStep>& steps);

/// `collapse <Sigma ids> over <sigma ids>` / `star <vertex>` / `hash <hex>`.
std::vector<CollapseStep> parse_schedule(std::istream& in, std::optional<std::uint64_t>* hash = nullptr);
void write_certificate(std::ostream& out, const CollapseCertificate& cert);

}  // namespace radgeo
