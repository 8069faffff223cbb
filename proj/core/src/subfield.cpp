#include "liemc/subfield.hpp"

#include <string>

namespace liemc {

namespace {

void require_finite(const FieldTower& tower, const char* what) {
  if (!tower.is_finite()) throw Error(Errc::UnsupportedInTranscendentalMode, what);
}

EElement as_element(const FVec& v) { return EElement{v}; }

}  // namespace

bool is_subfield(const FSubspace& s) {
  if (s.ambient_k() != 1) return false;
  const auto& tower = s.tower();
  if (!s.member(tower.one().coeffs)) return false;
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i; j < b.size(); ++j) {
      if (!s.member(tower.mul(as_element(b[i]), as_element(b[j])).coeffs)) return false;
    }
  }
  return true;
}

Subfield Subfield::prime(const FieldTower& tower) {
  require_finite(tower, "subfields need a finite tower");
  return Subfield(FSubspace::span(tower, 1, {tower.one().coeffs}));
}

Subfield Subfield::whole(const FieldTower& tower) {
  require_finite(tower, "subfields need a finite tower");
  return Subfield(FSubspace::full(tower, 1));
}

Subfield Subfield::from_space(FSubspace space) {
  require_finite(space.tower(), "subfields need a finite tower");
  if (!is_subfield(space)) throw Error(Errc::InvalidInput, "space is not a subfield of E");
  return Subfield(std::move(space));
}

std::vector<EElement> Subfield::basis_elements() const {
  std::vector<EElement> out;
  for (const auto& v : space_.basis()) out.push_back(as_element(v));
  return out;
}

Subfield subfield_generated(const FieldTower& tower, const std::vector<EElement>& generators) {
  require_finite(tower, "subfields need a finite tower");
  std::vector<FVec> rows{tower.one().coeffs};
  for (const auto& g : generators) {
    tower.check(g);
    rows.push_back(g.coeffs);
  }
  FSubspace s = FSubspace::span(tower, 1, rows);
  for (;;) {
    std::vector<FVec> grown = s.basis();
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i; j < b.size(); ++j) grown.push_back(tower.mul(as_element(b[i]), as_element(b[j])).coeffs);
    }
    FSubspace next = FSubspace::span(tower, 1, grown);
    if (next.rank() == s.rank()) break;
    s = std::move(next);
  }
  return Subfield::from_space(std::move(s));
}

Subfield compositum(const Subfield& a, const Subfield& b) {
  if (!(a.tower() == b.tower())) throw Error(Errc::TowerMismatch, "compositum of subfields of different towers");
  std::vector<EElement> gens = a.basis_elements();
  const auto more = b.basis_elements();
  gens.insert(gens.end(), more.begin(), more.end());
  return subfield_generated(a.tower(), gens);
}

StabilizerReport stabilizer(const FSubspace& u) {
  const auto& tower = u.tower();
  require_finite(tower, "stabilizer needs a finite tower");
  const int d = tower.degree();
  // Row l holds the residues of alpha^l * u_j modulo U, concatenated over j;
  // beta = sum b_l alpha^l stabilizes U iff b is in the left kernel.
  std::vector<FVec> rows;
  EElement power = tower.one();
  for (int l = 0; l < d; ++l) {
    FVec row;
    for (const auto& v : u.basis()) {
      const FVec r = u.reduce(scale_point(tower, power, v, u.ambient_k()));
      row.insert(row.end(), r.begin(), r.end());
    }
    rows.push_back(std::move(row));
    power = tower.mul(power, tower.alpha());
  }
  const std::size_t ncols = static_cast<std::size_t>(u.rank()) * u.ambient_dim();
  FSubspace ring = FSubspace::span(tower, 1, left_kernel(rows, ncols, tower.gf()));
  const bool field = is_subfield(ring);
  return StabilizerReport{std::move(ring), field};
}

KClosure k_closure(const Subfield& k, const FSubspace& u) {
  if (!(k.tower() == u.tower())) throw Error(Errc::TowerMismatch, "closure under a subfield of another tower");
  std::vector<FVec> rows;
  for (const auto& beta : k.basis_elements()) {
    for (const auto& v : u.basis()) rows.push_back(scale_point(u.tower(), beta, v, u.ambient_k()));
  }
  FSubspace closure = FSubspace::span(u.tower(), u.ambient_k(), rows);
  const bool same = closure == u;
  return KClosure{std::move(closure), same};
}

int dim_over(const Subfield& k, const FSubspace& u) {
  if (!k_closure(k, u).is_k_space) {
    throw Error(Errc::NotKInvariant, "subspace of F-rank " + std::to_string(u.rank()) + " is not a K-space for [K:F] = " +
                                         std::to_string(k.degree()));
  }
  return u.rank() / k.degree();
}

}  // namespace liemc
