#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liemc/field_tower.hpp"
#include "liemc/fsubspace.hpp"

namespace liemc {

/// The line E(a x + b y) of M_1, normalized so that its first nonzero
/// coordinate is 1.
struct CentraliserLine {
  EElement a;
  EElement b;

  static CentraliserLine canonical(const FieldTower& tower, EElement a, EElement b);
  static CentraliserLine y_line(const FieldTower& tower);
  static CentraliserLine x_line(const FieldTower& tower);

  /// Flattened (a, b); lines are ordered by this encoding.
  FVec encoding() const;

  bool operator==(const CentraliserLine&) const = default;
  auto operator<=>(const CentraliserLine&) const = default;
};

/// A homogeneous element. Degree 1: coords = (a, b) meaning a x + b y.
/// Degree i >= 2: coords = (c) meaning c e_i.
struct HomElement {
  int degree = 1;
  EPoint coords;

  bool operator==(const HomElement&) const = default;
};

/// Basis element ordinals used in validation witnesses: 0 = y, 1 = x, i = e_i.
std::string basis_label(int ordinal);
int basis_ordinal(const std::string& label);

enum class AlgebraStatus { Unvalidated, Validated, Invalid };

enum class FailureKind { Antisymmetry, Jacobi, Alternating, MaximalClass, CentraliserMismatch, Window };
std::string to_string(FailureKind kind);

struct ValidationFailure {
  FailureKind kind;
  std::vector<int> triple;  // basis ordinals, for antisymmetry/alternating/jacobi
  int degree = 0;           // for maximalclass/centraliser_mismatch/window

  bool operator==(const ValidationFailure&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationFailure> failures;
};

struct ValidateOptions {
  bool window = true;
  bool stop_at_first = false;
};

/// A graded Lie algebra of maximal class over E truncated at degree N, with
/// basis x, y of M_1 (C_2 = Ey) and e_i spanning M_i, e_2 = [y, x].
///
/// The adjoint constants [e_i, x] = lambda_i e_{i+1}, [e_i, y] = mu_i e_{i+1}
/// come from the centraliser lines; the products [e_i, e_j] are derived from
/// them once, at construction. Brackets landing beyond degree N are zero.
class MaxClassAlgebra {
 public:
  const FieldTower& tower() const noexcept { return tower_; }
  int depth() const noexcept { return depth_; }
  /// C_2 ... C_{N-1}; lines()[0] is C_2.
  const std::vector<CentraliserLine>& lines() const noexcept { return lines_; }
  const CentraliserLine& line(int degree) const;
  const EElement& lambda(int degree) const;
  const EElement& mu(int degree) const;
  /// c with [e_i, e_j] = c e_{i+j}; zero when i + j > N. The diagonal is
  /// zero by definition.
  const EElement& product(int i, int j) const;
  /// [e_i, e_i] as the recursion derives it, before being set to zero.
  const EElement& derived_square(int i) const;

  AlgebraStatus status() const noexcept { return status_; }
  const ValidationReport& last_report() const noexcept { return report_; }
  bool is_metabelian() const;

  /// A copy whose adjoint constants at one degree are replaced (the declared
  /// line is kept). The copy is unvalidated.
  MaxClassAlgebra with_adjoint(int degree, EElement lambda, EElement mu) const;

  HomElement x() const;
  HomElement y() const;
  HomElement e(int degree) const;
  HomElement basis(int ordinal) const;
  HomElement zero(int degree) const;

  friend MaxClassAlgebra build_from_centralisers(FieldTower tower, std::vector<CentraliserLine> lines, int depth);
  friend ValidationReport validate(MaxClassAlgebra& m, ValidateOptions options);

 private:
  MaxClassAlgebra(FieldTower tower, int depth) : tower_(std::move(tower)), depth_(depth) {}
  void derive_products();

  FieldTower tower_;
  int depth_;
  std::vector<CentraliserLine> lines_;
  std::vector<EElement> lambda_, mu_;             // indexed by degree
  std::vector<std::vector<EElement>> products_;  // [i][j] for i, j >= 2
  std::vector<EElement> squares_;
  AlgebraStatus status_ = AlgebraStatus::Unvalidated;
  ValidationReport report_;
};

/// All centralisers equal Ey and [M_i, M_j] = 0 for i, j >= 2. Validated.
MaxClassAlgebra build_metabelian(FieldTower tower, int depth);
MaxClassAlgebra build_from_centralisers(FieldTower tower, std::vector<CentraliserLine> lines, int depth);

/// Throws DegreeOverflow when deg(u) + deg(v) > N.
HomElement bracket(const MaxClassAlgebra& m, const HomElement& u, const HomElement& v);

HomElement add(const MaxClassAlgebra& m, const HomElement& u, const HomElement& v);
HomElement scale(const MaxClassAlgebra& m, const EElement& c, const HomElement& u);
bool is_zero(const MaxClassAlgebra& m, const HomElement& u);

/// Runs every structural check without touching the algebra's status.
ValidationReport check(const MaxClassAlgebra& m, ValidateOptions options = {});
/// check() and record the outcome as the algebra's status.
ValidationReport validate(MaxClassAlgebra& m, ValidateOptions options = {});

/// Kernel line of v -> [e_i, v], for 2 <= i <= N-1.
CentraliserLine two_step_centraliser(const MaxClassAlgebra& m, int degree);

struct WindowCheck {
  bool ok = true;
  int first_occurrence = 0;  // t of the offending line
  int window_start = 0;      // the window [start, start + t - 1] missing it
};

/// For every distinct line first seen at degree t, each run of t consecutive
/// degrees inside [2, N-1] must contain the line. lines[0] is degree 2.
WindowCheck check_window(const std::vector<CentraliserLine>& lines);
WindowCheck check_window(const MaxClassAlgebra& m);

/// The |E| + 1 points of the projective line over E, sorted by encoding.
std::vector<CentraliserLine> projective_points(const FieldTower& tower);

struct SearchResult {
  std::vector<std::vector<CentraliserLine>> sequences;
  bool exhausted = false;
  std::uint64_t examined = 0;
};

/// Depth-first enumeration of centraliser sequences C_2..C_{N-1} with C_2 = Ey
/// and at most max_distinct distinct lines, pruning prefixes that already
/// fail validation. Results come out in lexicographic order of encodings.
SearchResult search_sequences(const FieldTower& tower, int depth, int max_distinct, std::uint64_t budget);

}  // namespace liemc
