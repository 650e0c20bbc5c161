// Temporary development harness: checks the worked examples by hand before
// the real test suites exist.
#include "trsk/insertion.hpp"
#include "trsk/lattice_paths.hpp"
#include "trsk/rsk.hpp"
#include "trsk/schutzenberger.hpp"
#include "trsk/structured_matrices.hpp"
#include "trsk/weyl.hpp"

#include <iostream>

using namespace trsk;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "ok    " : "FAIL  ") << what << "\n";
  if (!ok) ++failures;
}

Scalar mp(long v) { return Scalar::max_plus(v); }
Scalar rq(long n, long d = 1) { return Scalar::from_rational(Rat(n, d)); }

Matrix mp_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix m(Algebra::MaxPlus, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i + 1, j + 1) = mp(rows[i][j]);
  return m;
}

Matrix rq_matrix(const std::vector<std::vector<Rat>>& rows) {
  Matrix m(Algebra::Rational, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i + 1, j + 1) = Scalar::from_rational(rows[i][j]);
  return m;
}

std::string dump_tableau(const TableauContent& t) {
  std::string s;
  for (int i = 1; i <= t.rows(); ++i) {
    for (int j = i; j <= t.n(); ++j) s += t.entry(i, j).str() + " ";
    s += "| ";
  }
  return s;
}

}  // namespace

int main() {
  // --- Section 2.1 row insertion example.
  RowVector x, a;
  for (long v : {0, 2, 1, 1, 1}) x.push_back(mp(v));
  for (long v : {1, 1, 0, 1, 1}) a.push_back(mp(v));
  auto etas = insertion_eta(x, a);
  std::vector<long> eta_expect{1, 3, 3, 5, 6};
  bool eta_ok = true;
  for (size_t j = 0; j < etas.size(); ++j) eta_ok &= etas[j] == mp(eta_expect[j]);
  check(eta_ok, "eta = (1,3,3,5,6)");
  InsertionResult r = row_insert(x, a);
  std::vector<long> y_expect{1, 2, 0, 2, 1}, b_expect{0, 1, 1, 0, 1};
  bool yb_ok = true;
  for (size_t j = 0; j < 5; ++j)
    yb_ok &= r.y[j] == mp(y_expect[j]) && r.b[j] == mp(b_expect[j]);
  check(yb_ok, "y,b of the 2.1 example");

  // --- classical bump oracle.
  auto [row2, bumped2] = classical_bump_oracle({2, 2, 3, 4, 5}, {1, 2, 4, 5});
  check(row2 == Word({1, 2, 2, 4, 4, 5}) && bumped2 == Word({2, 3, 5}), "bump 1245 into 22345");

  // --- Section 2.3 word example.
  Word w = parse_word("2234134411224");
  Matrix X = word_to_matrix(w, 4, std::nullopt);
  Matrix X_expect = mp_matrix({{0, 2, 1, 1}, {1, 0, 1, 2}, {2, 2, 0, 1}});
  check(X == X_expect, "word -> X blocks");

  MinorTable tau = rect_minor_table(X, Orientation::Insertion);
  std::vector<std::vector<long>> tau_expect{{3, 5, 5, 7}, {0, 7, 9, 12}, {0, 0, 9, 13}};
  bool tau_ok = true;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 4; ++j) tau_ok &= tau.at(i, j) == mp(tau_expect[i - 1][j - 1]);
  check(tau_ok, "tau table of the 2.3 example");

  TableauContent p_bump = insert_word(X, RowOrder::TopDown);
  TableauContent p_minor = tableau_via_minors(X);
  std::vector<std::vector<long>> p_expect{{3, 2, 0, 2}, {0, 2, 2, 1}, {0, 0, 0, 1}};
  bool p_ok = p_bump == p_minor;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 4; ++j) p_ok &= p_bump.entry(i, j) == mp(p_expect[i - 1][j - 1]);
  check(p_ok, "p table via both routes: " + dump_tableau(p_bump));

  // --- Schutzenberger example (KZ).
  Word ws = parse_word("42213132");
  check(word_star(ws, 4) == parse_word("32424331"), "w* of 42213132");
  TableauContent P = insert_word(word_to_matrix(ws, 4, std::nullopt), RowOrder::TopDown);
  std::vector<std::vector<long>> P_expect{{2, 1, 1, 0}, {0, 2, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
  bool P_ok = P.rows() == 4;
  for (int i = 1; i <= P.rows(); ++i)
    for (int j = i; j <= 4; ++j) P_ok &= P.entry(i, j) == mp(P_expect[i - 1][j - 1]);
  check(P_ok, "P of 42213132: " + dump_tableau(P));

  MinorTable sigma = evacuation_sigma(P);
  std::vector<std::vector<long>> sigma_expect{
      {1, 2, 4, 4}, {0, 3, 5, 7}, {0, 0, 6, 8}, {0, 0, 0, 8}};
  bool sigma_ok = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) sigma_ok &= sigma.at(i, j) == mp(sigma_expect[i - 1][j - 1]);
  check(sigma_ok, "sigma table of the KZ example");

  TableauContent Pt = evacuate(P);
  std::vector<std::vector<long>> Pt_expect{{1, 1, 2, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}, {0, 0, 0, 0}};
  bool Pt_ok = true;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) Pt_ok &= Pt.entry(i, j) == mp(Pt_expect[i - 1][j - 1]);
  check(Pt_ok, "evacuated P: " + dump_tableau(Pt));
  check(evacuation_consistency(ws, 4).pass, "P(w*) == evacuate(P(w))");

  // --- Section 3.1 example: the four variants.
  Matrix A = mp_matrix({{0, 2, 1, 1}, {1, 0, 1, 2}, {2, 2, 0, 1}});
  auto tbl = [&](const std::vector<std::vector<long>>& rows) {
    TableauContent t(Algebra::MaxPlus, static_cast<int>(rows[0].size()) == 3 ? 3 : 4);
    for (const auto& rr : rows) {
      RowVector v;
      for (long e : rr) v.push_back(mp(e));
      t.push_row(v);
    }
    return t;
  };
  TableauContent q_tab = tbl({{4, 2, 1}, {0, 2, 3}, {0, 0, 1}});
  TableauContent pt_tab = tbl({{4, 1, 2, 0}, {0, 1, 1, 3}, {0, 0, 1, 0}});
  TableauContent qt_tab = tbl({{5, 1, 1}, {0, 3, 2}, {0, 0, 1}});
  TableauContent p_tab = tbl({{3, 2, 0, 2}, {0, 2, 2, 1}, {0, 0, 0, 1}});

  TableauPair pq = rsk_variants(A, RskVariant::PQ);
  check(pq.U == p_tab && pq.V == q_tab, "variant PQ");
  TableauPair pqt = rsk_variants(A, RskVariant::PQt);
  check(pqt.U == p_tab && pqt.V == qt_tab, "variant PQt");
  TableauPair ptq = rsk_variants(A, RskVariant::PtQ);
  check(ptq.U == pt_tab && ptq.V == q_tab, "variant PtQ");
  TableauPair ptqt = rsk_variants(A, RskVariant::PtQt);
  check(ptqt.U == pt_tab && ptqt.V == qt_tab, "variant PtQt");

  // --- phi / phi_inverse on a 2x2.
  Matrix X22 = rq_matrix({{1, 2}, {3, 4}});
  Matrix Phi = phi(X22);
  check(Phi.at(2, 2) == rq(30) && Phi.at(2, 1) == rq(3) && Phi.at(1, 2) == rq(2),
        "phi entries of [[1,2],[3,4]]");
  check(phi_inverse(Phi) == X22, "phi_inverse . phi = id");

  // --- iota: phi(iota(X)) == J phi(X) J.
  Matrix Y = iota(X22);
  check(phi(Y) == conjugate_J(Phi), "phi(iota(X)) == J phi(X) J");
  check(iota(Y) == X22, "iota is an involution (2x2 rational)");

  // --- rsk_star roundtrip on the 3x4 example (maxplus).
  Matrix XJ(Algebra::MaxPlus, 3, 4);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j) XJ.at(i, j) = A.at(4 - i, j);
  TableauPair star = rsk_star(XJ);
  check(star.U == p_tab && star.V == qt_tab, "rsk_star(J_3 A) = (p, q~)");
  Matrix back = inverse_rsk_star(star.U, star.V);
  check(back == XJ, "inverse_rsk_star . rsk_star = id on the example");

  // --- gauss decomposition route.
  Matrix X34(Algebra::Rational, 3, 4);
  long seed_vals[3][4] = {{1, 2, 1, 3}, {2, 1, 4, 1}, {1, 3, 2, 2}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 4; ++j) X34.at(i, j) = rq(seed_vals[i - 1][j - 1]);
  TableauPair pr = rsk_star(X34);
  GaussFactors gf = gauss_decompose(pr.U, pr.V);
  Matrix psi = gf.lower.mul(gf.diag).mul(gf.upper);
  check(psi == conjugate_J(phi(X34)), "Psi_- Psi_0 Psi_+ == J phi(X) J");
  check(inverse_rsk_star(pr.U, pr.V) == X34, "rational rsk_star roundtrip 3x4");

  // --- Weyl worked example.
  WeylParams ones = WeylParams::ones(Algebra::Rational);
  check(P_poly(X22, ones, 1, 0) == rq(30) && P_poly(X22, ones, 1, 1) == rq(20) &&
            P_poly(X22, ones, 1, 2) == rq(30),
        "P polys of the 2x2 example");
  Matrix R1 = apply_generator(WeylGenerator::r(1), X22, ones);
  check(R1 == rq_matrix({{2, 6}, {Rat(3, 2), Rat(4, 3)}}), "r_1([[1,2],[3,4]]) worked example");
  check(apply_generator(WeylGenerator::r(1), R1, ones) == X22, "r_1 involution");
  check(toda_residual(X22, R1, ones, TodaKind::RowAction, 1).all_pass(), "row Toda residuals");

  std::vector<Scalar> zs{rq(1, 7), rq(3, 5)};
  check(spectral_check_r_invariance(X22, ones, 1, zs).all_pass(), "H(X;z) r-invariance");

  Matrix X23 = rq_matrix({{1, 2, 1}, {3, 1, 2}});
  WeylParams pq2{rq(2), rq(3)};
  Matrix S1 = apply_generator(WeylGenerator::s(1), X23, pq2);
  check(toda_residual(X23, S1, pq2, TodaKind::ColumnAction, 1).all_pass(), "column Toda residuals");
  check(spectral_check_s_conjugation(X23, pq2, 1, zs).all_pass(), "G conjugation for s_1");
  check(apply_generator(WeylGenerator::s(1), S1, pq2) == X23, "s_1 involution");

  // equivariance: rsk_star(s_l(X)).U == s_on_tableau(l, U), and r_k fixes U.
  TableauPair pr23 = rsk_star(X23);
  TableauPair pr23s = rsk_star(S1);
  TableauContent su = s_on_tableau(1, pr23.U, pq2.q);
  check(pr23s.U == su, "equivariance of s_1 on U");
  Matrix R1X23 = apply_generator(WeylGenerator::r(1), X23, pq2);
  check(rsk_star(R1X23).U == pr23.U, "r_1 fixes U");
  check(toda_residual(pr23.U, su, pq2.q, TodaKind::TableauLo, 1).all_pass(),
        "tableau Toda residuals (lo)");
  check(toda_residual(pr23.U, s_on_tableau(2, pr23.U, pq2.q), pq2.q, TodaKind::TableauHi, 2)
            .all_pass(),
        "tableau Toda residuals (hi)");
  check(g0_from_matrix(X23, pq2, 1) == g0_from_tableau(pr23.U, pq2.q, 1), "g_0 dual routes l=1");
  check(g0_from_matrix(X23, pq2, 2) == g0_from_tableau(pr23.U, pq2.q, 2), "g_0 dual routes l=2");

  // evacuate . s_l^q == s_{n-l}^{1/q} . evacuate
  TableauContent evs = evacuate(s_on_tableau(1, pr23.U, pq2.q));
  TableauContent sev = s_on_tableau(2, evacuate(pr23.U), pq2.q.inv());
  check(evs == sev, "Schutzenberger conjugation of the tableau action");

  std::cout << (failures ? "FAILURES: " : "all ok: ") << failures << "\n";
  return failures ? 1 : 0;
}
