#pragma once

/**
 * @file schutzenberger.hpp
 * @brief The Schützenberger involution on words (reverse + complement) and
 *        on content tables via the staircase minor table.
 */

#include "trsk/insertion.hpp"
#include "trsk/lattice_paths.hpp"

namespace trsk {

/// w* = reversed word with every letter k replaced by n-k+1.
Word word_star(const Word& w, int n);

/**
 * Evacuation by the explicit formula: sigma = Schutz minor table of U,
 * entries of the image by Laplacian ratios. Requires rows(U) <= n; larger
 * shapes are rejected with UnsupportedShape.
 */
TableauContent evacuate(const TableauContent& u);

/// The sigma table itself (exposed for reports and tests).
MinorTable evacuation_sigma(const TableauContent& u);

struct EvacuationReport {
  bool pass = false;
  TableauContent inserted_star;   // P(w*)
  TableauContent evacuated;       // evacuate(P(w))
};

/// Checks P(w*) == evacuate(P(w)) and returns both tables.
EvacuationReport evacuation_consistency(const Word& w, int n);

}  // namespace trsk
