#include "trsk/schutzenberger.hpp"

#include "trsk/lattice_paths.hpp"

#include <algorithm>

namespace trsk {

Word word_star(const Word& w, int n) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 1 || *it > n) fail(Errc::BoundsError, "letter outside 1.." + std::to_string(n));
    out.push_back(n - *it + 1);
  }
  return out;
}

MinorTable evacuation_sigma(const TableauContent& u) {
  if (u.rows() > u.n())
    fail(Errc::UnsupportedShape, "evacuation needs rows <= n (got " + std::to_string(u.rows()) +
                                     " rows over alphabet " + std::to_string(u.n()) + ")");
  return rect_minor_table(u.to_matrix(), Orientation::Schutz);
}

TableauContent evacuate(const TableauContent& u) {
  MinorTable sigma = evacuation_sigma(u);
  TableauContent out(u.algebra(), u.n());
  for (int i = 1; i <= u.rows(); ++i) {
    RowVector row(u.n(), Scalar::one(u.algebra()));
    row[i - 1] = sigma.at(i, i).div(sigma.at(i - 1, i));
    for (int j = i + 1; j <= u.n(); ++j) row[j - 1] = sigma.ratio(i, j);
    out.push_row(std::move(row));
  }
  return out;
}

EvacuationReport evacuation_consistency(const Word& w, int n) {
  TableauContent p = insert_word(word_to_matrix(w, n), RowOrder::TopDown);
  TableauContent star = insert_word(word_to_matrix(word_star(w, n), n), RowOrder::TopDown);
  TableauContent evac = evacuate(p);
  EvacuationReport report{star == evac, std::move(star), std::move(evac)};
  return report;
}

}  // namespace trsk
