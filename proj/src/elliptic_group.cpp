#include "ellsurf/elliptic_group.hpp"

#include <sstream>

namespace ellsurf {

CyclotomicAction cyclotomic_action(int r) {
  // Companion matrix of the r-th cyclotomic polynomial on the basis {1, x}
  // (for r=2 the order is Z itself; -I is the action on Z^2 used throughout).
  std::vector<std::vector<Int>> m;
  switch (r) {
    case 2: m = {{Int(-1), Int(0)}, {Int(0), Int(-1)}}; break;
    case 3: m = {{Int(0), Int(-1)}, {Int(1), Int(-1)}}; break;   // x^2=-1-x
    case 4: m = {{Int(0), Int(-1)}, {Int(1), Int(0)}}; break;    // x^2=-1
    case 6: m = {{Int(0), Int(-1)}, {Int(1), Int(1)}}; break;    // x^2=x-1
    default:
      fail(ErrorCode::InvalidParams,
           "rotation order must be one of 2, 3, 4, 6");
  }
  return CyclotomicAction{r, IntMatrix::from_rows(m)};
}

EllipticGroupSpec make_spec(int r, const IntMatrix& lattice) {
  CyclotomicAction action = cyclotomic_action(r);
  if (lattice.rows() != 2 || lattice.cols() != 2)
    fail(ErrorCode::InvalidParams, "lattice must be a 2x2 basis matrix");
  if (lattice.det() == 0)
    fail(ErrorCode::DegenerateLattice,
         "lattice columns do not span a finite-index sublattice");
  EllipticGroupSpec spec{action, hermite_normal_form(lattice)};
  // Invariance: both columns of M*L must lie in the column span; since
  // det M = 1 the inclusion is automatically an equality.
  const Int& a = spec.L.at(0, 0);
  const Int& b = spec.L.at(1, 0);
  const Int& c = spec.L.at(1, 1);
  IntMatrix ml = action.M * spec.L;
  for (std::size_t j = 0; j < 2; ++j) {
    Int x = ml.at(0, j), y = ml.at(1, j);
    Int k1 = floor_div(x, a);
    x -= k1 * a;
    y -= k1 * b;
    if (x != 0 || y % c != 0)
      fail(ErrorCode::LatticeNotInvariant,
           "lattice is not preserved by the rotation");
  }
  return spec;
}

Int index_m(int r, const Int& ap, const Int& bp) {
  if (ap == 0 && bp == 0)
    fail(ErrorCode::InvalidParams, "eta = a' + b'x must be nonzero");
  switch (r) {
    case 3: return ap * ap + bp * bp - ap * bp;
    case 4: return ap * ap + bp * bp;
    case 6: return ap * ap + bp * bp + ap * bp;
    case 2:
      fail(ErrorCode::UnsupportedR,
           "r=2 places no constraint on m1/m2; choose the lattice directly");
    default:
      fail(ErrorCode::InvalidParams,
           "rotation order must be one of 2, 3, 4, 6");
  }
}

EllipticGroupSpec from_lemma43(int r, const Int& m1, const Int& m2,
                               const Int& ap, const Int& bp) {
  if (m1 < 1 || m2 < 1)
    fail(ErrorCode::InvalidParams, "m1 and m2 must be positive");
  EllipticGroupSpec spec;
  if (r == 2) {
    if (m1 % m2 != 0)
      fail(ErrorCode::InconsistentIndex, "r=2 requires m2 | m1");
    spec = make_spec(
        2, IntMatrix::from_rows({{m1, Int(0)}, {Int(0), m2}}));
  } else {
    Int m = index_m(r, ap, bp);
    if (m1 != m * m2)
      fail(ErrorCode::InconsistentIndex,
           "m1/m2 must equal the norm of a' + b'x, which is " +
               m.get_str());
    CyclotomicAction action = cyclotomic_action(r);
    std::vector<Int> eta = {ap, bp};
    std::vector<Int> xeta = mat_vec(action.M, eta);
    spec = make_spec(r, IntMatrix::from_rows({{m2 * eta[0], m2 * xeta[0]},
                                              {m2 * eta[1], m2 * xeta[1]}}));
  }
  IntMatrix d = smith_normal_form(spec.L).D;
  if (d.at(0, 0) != m2 || d.at(1, 1) != m1)
    fail(ErrorCode::InconsistentIndex,
         "lattice realizes T = Z/" + d.at(1, 1).get_str() + " + Z/" +
             d.at(0, 0).get_str() + ", not Z/" + m1.get_str() + " + Z/" +
             m2.get_str() + " (is a' + b'x primitive?)");
  return spec;
}

AbelianInvariants gcal_ab(int r) {
  CyclotomicAction action = cyclotomic_action(r);
  IntMatrix rel(3, 3);
  for (std::size_t j = 0; j < 2; ++j) {
    rel.at(j, 0) = action.M.at(0, j) - (j == 0 ? 1 : 0);
    rel.at(j, 1) = action.M.at(1, j) - (j == 1 ? 1 : 0);
  }
  rel.at(2, 2) = r;
  return abelian_invariants(3, rel);
}

bool abelian_criterion(const EllipticGroupSpec& spec) {
  EllipticGroup g(spec);
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<Int> col = {spec.action.M.at(0, j) - (j == 0 ? 1 : 0),
                            spec.action.M.at(1, j) - (j == 1 ? 1 : 0)};
    if (!g.in_lattice(col)) return false;
  }
  return true;
}

EllipticGroup::EllipticGroup(EllipticGroupSpec spec)
    : spec_(std::move(spec)) {
  a_ = spec_.L.at(0, 0);
  b_ = spec_.L.at(1, 0);
  c_ = spec_.L.at(1, 1);
  if (a_ < 1 || c_ < 1 || spec_.L.at(0, 1) != 0)
    fail(ErrorCode::InvalidParams,
         "spec lattice must be in column Hermite form; use make_spec");
  Int t_count = a_ * c_;
  if (t_count > 1000000)
    fail(ErrorCode::InvalidParams, "translation group too large to enumerate");
  t_count_ = t_count.get_ui();
  mpow_.push_back(IntMatrix::identity(2));
  for (int k = 1; k < spec_.action.r; ++k)
    mpow_.push_back(spec_.action.M * mpow_.back());
}

std::vector<Int> EllipticGroup::reduce_mod_lattice(
    const std::vector<Int>& v) const {
  if (v.size() != 2)
    fail(ErrorCode::InvalidParams, "translation vectors have two entries");
  Int x = v[0], y = v[1];
  Int k1 = floor_div(x, a_);
  x -= k1 * a_;
  y -= k1 * b_;
  y = floor_mod(y, c_);
  return {x, y};
}

bool EllipticGroup::in_lattice(const std::vector<Int>& v) const {
  std::vector<Int> red = reduce_mod_lattice(v);
  return red[0] == 0 && red[1] == 0;
}

std::size_t EllipticGroup::element(const std::vector<Int>& t, long k) const {
  std::vector<Int> red = reduce_mod_lattice(t);
  Int rank = red[0] * c_ + red[1];
  long kk = static_cast<long>(((k % spec_.action.r) + spec_.action.r) %
                              spec_.action.r);
  return rank.get_ui() * r() + static_cast<std::size_t>(kk);
}

std::vector<Int> EllipticGroup::translation_part(std::size_t p) const {
  std::size_t rank = p / r();
  Int c = c_;
  std::size_t cu = c.get_ui();
  return {Int(static_cast<unsigned long>(rank / cu)),
          Int(static_cast<unsigned long>(rank % cu))};
}

std::size_t EllipticGroup::mul(std::size_t p, std::size_t q) const {
  std::vector<Int> t1 = translation_part(p), t2 = translation_part(q);
  long k1 = rotation_exponent(p), k2 = rotation_exponent(q);
  std::vector<Int> moved = mat_vec(mpow_[static_cast<std::size_t>(k1)], t2);
  return element({t1[0] + moved[0], t1[1] + moved[1]}, k1 + k2);
}

std::size_t EllipticGroup::inv(std::size_t p) const {
  long k = rotation_exponent(p);
  long kinv = static_cast<long>((r() - static_cast<std::size_t>(k)) % r());
  std::vector<Int> t = translation_part(p);
  std::vector<Int> moved = mat_vec(mpow_[static_cast<std::size_t>(kinv)], t);
  return element({-moved[0], -moved[1]}, kinv);
}

std::string EllipticGroup::element_name(std::size_t p) const {
  std::vector<Int> t = translation_part(p);
  long k = rotation_exponent(p);
  std::ostringstream os;
  if (t[0] == 0 && t[1] == 0 && k == 0) return "1";
  if (!(t[0] == 0 && t[1] == 0)) {
    os << "t(" << t[0] << "," << t[1] << ")";
    if (k != 0) os << "*";
  }
  if (k != 0) {
    os << "e";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

EllipticGroup make_group(const EllipticGroupSpec& spec) {
  return EllipticGroup(spec);
}

std::vector<std::size_t> translations(const EllipticGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < g.order(); p += g.r()) out.push_back(p);
  return out;
}

}  // namespace ellsurf
