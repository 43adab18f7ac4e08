#pragma once

#include <vector>

#include "wszeged/exact.hpp"

namespace wsz {

// Children sizes of a branch or tree root, ascending.
using Structure = std::vector<std::size_t>;

struct EnvelopePiece {
  Rational start;                 // piece is active on [start, next start]
  AffineCost line;
  std::vector<Structure> argmin;  // structures attaining the line, sorted
};

// Concave piecewise-linear function of the tree order n on [domain_start, inf),
// stored as the lower envelope of tagged lines. Breakpoints are exact.
class CostEnvelope {
public:
  struct TaggedLine {
    AffineCost line;
    std::vector<Structure> tags;
  };

  CostEnvelope() = default;

  // Lower envelope of the given lines restricted to [domain_start, inf).
  // Identical lines merge their tags; a line that only touches the envelope
  // at a single point is dropped.
  static CostEnvelope lower_envelope(std::vector<TaggedLine> lines, Int domain_start);
  static CostEnvelope single(AffineCost line, Structure tag, Int domain_start);

  Int domain_start() const noexcept { return domain_start_; }
  const std::vector<EnvelopePiece>& pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }

  // Value at an integer n >= domain_start.
  Int at(Int n) const;
  // Index of the piece containing n (the later piece at a breakpoint).
  std::size_t piece_index(const Rational& n) const;
  // Structures optimal at n: union of both neighbours at a breakpoint.
  std::vector<Structure> argmin_at(Int n) const;

  // Restriction to [start, inf) for start >= domain_start.
  CostEnvelope restricted(Int start) const;

  // f + line. Tags are kept.
  CostEnvelope plus(const AffineCost& line) const;
  // f + g on the common domain. Tags come from *this, each extended with
  // `appended_part` (then re-sorted) when non-zero.
  CostEnvelope plus(const CostEnvelope& g, std::size_t appended_part) const;

  // All lines with their tags, for feeding into lower_envelope.
  void collect(std::vector<TaggedLine>& out) const;

  // True when f(x) < line(x) for every x >= domain_start.
  bool under_line(const AffineCost& line) const;

private:
  Int domain_start_ = 0;
  std::vector<EnvelopePiece> pieces_;
};

} // namespace wsz
