#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liemc/fsubspace.hpp"
#include "liemc/maxclass.hpp"
#include "liemc/subfield.hpp"

namespace liemc {

// Degree-1 subspaces live in M_1 = E^2 (coordinates of x and y); degree-i
// subspaces for i >= 2 live in M_i = E (the coefficient of e_i).

/// The line C as an F-subspace of M_1.
FSubspace line_space(const FieldTower& tower, const CentraliserLine& line);

/// E L_1 = M_1.
bool spans_m1(const FSubspace& l1);

/// Flat vector <-> homogeneous element of the given degree.
HomElement to_hom(const FieldTower& tower, const FVec& v, int degree);
FVec from_hom(const HomElement& h);

/// F-span of [u, v] over basis vectors u of U (degree du) and v of V (degree dv).
FSubspace bracket_spaces(const MaxClassAlgebra& m, const FSubspace& u, int du, const FSubspace& v, int dv);

/// The F-algebra generated by L_1, degree by degree.
struct LChain {
  int depth = 0;
  std::vector<FSubspace> spaces;  // spaces[i] = L_i for 1 <= i <= N; spaces[0] unused
  std::vector<int> dims;          // dims[i] = dim_F L_i
  std::vector<int> d_seq;         // d_seq[i] = dim_F(L_1 cap C_i), 2 <= i <= N-1

  const FSubspace& at(int degree) const { return spaces.at(degree); }
};

LChain chain(const MaxClassAlgebra& m, const FSubspace& l1);
LChain chain(const MaxClassAlgebra& m, const FSubspace& l1, int depth);

struct TwoStepEntry {
  int degree = 0;
  FVec x_choice;  // the element of L_1 \ C_i with phi_i = 1 on it
  FSubspace image;
  Subfield field;
};

struct TwoStepFieldReport {
  std::vector<TwoStepEntry> entries;  // degrees 2..N-1 in order
  Subfield k;                         // compositum of all F_i
  int t = 0;                          // [K:F]
  int r_gen = 0;                      // least u with K = F_2 ... F_u
  bool stabilized = false;
  int stable_window = 0;              // max(t, 5)

  const TwoStepEntry& at(int degree) const { return entries.at(degree - 2); }
};

/// F_i computed from a caller-chosen x in L_1 \ C_i. The image phi_i(L_1) is
/// written to image_out when given.
Subfield two_step_field_at(const MaxClassAlgebra& m, const FSubspace& l1, int degree, const FVec& x_choice,
                           FSubspace* image_out = nullptr);

TwoStepFieldReport two_step_fields(const MaxClassAlgebra& m, const FSubspace& l1);

struct KChainReport {
  std::vector<int> k_dims;  // k_dims[i] = dim_K T_i, 1 <= i <= N
  std::vector<int> f_dims;  // dim_F T_i
  bool holds = true;        // dim_K T_i = dim_K T_1 - 1 for every i >= 2
};

/// The K-algebra T generated by L_1, where K contains every F_i.
KChainReport k_chain_check(const MaxClassAlgebra& m, const FSubspace& l1, const Subfield& k);

/// Smallest k >= 1 with [z, _k L_1] = L_{i+k}, or nullopt when not reached
/// within r_max steps. z is a flat vector of degree i.
std::optional<int> covering_degree(const MaxClassAlgebra& m, const LChain& l, const FVec& z, int degree, int r_max);
std::optional<int> covering_degree(const MaxClassAlgebra& m, const LChain& l, const HomElement& z, int r_max);

enum class DichotomyKind { Constrained, NotJustInfinite, Inconclusive };
std::string to_string(DichotomyKind kind);

struct DichotomyResult {
  DichotomyKind kind = DichotomyKind::Inconclusive;
  int k_dim_l1 = 0;  // dim_K (K L_1)
  std::string reason;

  // Constrained
  int r_empirical = 0;
  int r_bound = 0;
  int checked_up_to = 0;        // z of degree 1..checked_up_to were enumerated
  std::vector<int> max_kappa;   // max_kappa[i] over z in L_i, 1 <= i <= N-1; past
                                // checked_up_to a lower bound when unreached
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t elements_checked = 0;

  // NotJustInfinite
  int witness_degree = 0;
  std::optional<FSubspace> witness_space;
  std::vector<int> ideal_dims;  // dim_F(I cap L_j) for witness_degree <= j <= N
};

struct ClassifyOptions {
  std::uint64_t seed = 0;
  std::optional<int> r_max;
};

DichotomyResult classify(const MaxClassAlgebra& m, const FSubspace& l1, const LChain& l, const TwoStepFieldReport& f,
                         const ClassifyOptions& options = {});
DichotomyResult classify(const MaxClassAlgebra& m, const FSubspace& l1, const ClassifyOptions& options = {});

struct ConstituentStats {
  bool applicable = false;
  std::string reason;
  int d = 0;
  std::vector<bool> occurrences;            // occurrences[i]: C_i = C, 2 <= i <= N-1
  std::vector<std::vector<int>> m_ik;       // m_ik[i][k]
  std::vector<std::optional<int>> m_i;      // m_i[i]
  int m2 = 0;
  int max_m = 0;
  int predicted_r = 0;
};

/// Occurrence statistics for a designated line and the resulting r.
/// occurrences[i] for 2 <= i < occurrences.size(); entries 0, 1 unused.
ConstituentStats predicted_r_from_pattern(const std::vector<bool>& occurrences, int d);

/// Checks for at most two distinct lines and an L_1 of the form
/// F{v, alpha v, y} with y spanning C_2 and v on the other line (or v = x).
ConstituentStats predicted_r(const MaxClassAlgebra& m, const FSubspace& l1);

struct ExpandingTrace {
  int start_degree = 0;
  std::vector<int> f_dims;  // dim_F X_j
  std::vector<int> k_dims;  // dim_K (K X_j)
  int j_star = -1;          // first j with X_j a K-space
  int bound = 0;            // (t - 1) * r_gen
  bool within_bound = false;
  bool k_dims_constant = false;
};

ExpandingTrace expanding_check(const MaxClassAlgebra& m, const FSubspace& l1, const FSubspace& x0, int degree,
                               const TwoStepFieldReport& fields);

/// Dimension of the degree-n component of the free metabelian Lie algebra on
/// two generators, counted by enumerating left-normed basic brackets.
int free_metabelian_dims(int n);

}  // namespace liemc
