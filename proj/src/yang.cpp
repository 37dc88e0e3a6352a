#include "yangdex/yang.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "yangdex/cohomology.hpp"
#include "yangdex/constructions.hpp"
#include "yangdex/errors.hpp"

namespace yangdex {

namespace {

std::vector<Vertex> orbit_minimum(const EquivariantComplex& e) {
  std::vector<Vertex> rep(static_cast<size_t>(e.complex.vertex_count()));
  for (Vertex v = 0; v < e.complex.vertex_count(); ++v)
    rep[static_cast<size_t>(v)] = std::min(v, e.involution(v));
  return rep;
}

/* Since A pairs every simplex with its distinct image, projected images are
 * hit exactly twice when the action is regular; any image hit more often is
 * shared by simplices from different orbits. */
bool is_regular(const SimplicialComplex& c, const std::vector<Vertex>& rep) {
  for (int k = 0; k <= c.dim(); ++k) {
    std::map<Simplex, int> seen;
    for (const Simplex& s : c.faces(k)) {
      Simplex image;
      image.reserve(s.size());
      for (Vertex v : s) image.push_back(rep[static_cast<size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
      if (++seen[image] > 2) return false;
    }
  }
  return true;
}

}  // namespace

QuotientData quotient(const SimplicialComplex& x, const FreeInvolution& a) {
  check_free_involution(x, a.action);
  QuotientData out;
  out.cover = EquivariantComplex{x, a, {}};
  std::vector<Vertex> rep = orbit_minimum(out.cover);
  if (!is_regular(out.cover.complex, rep)) {
    /* One barycentric subdivision restores regularity: flags sharing a
     * projected image would have to end in a simplex s with As = s, and the
     * action is free.  Re-check all the same. */
    out.cover = barycentric_subdivision(out.cover);
    out.subdivided = true;
    rep = orbit_minimum(out.cover);
    require_internal(is_regular(out.cover.complex, rep),
                     "quotient still irregular after one subdivision");
  }

  const SimplicialComplex& c = out.cover.complex;
  std::set<std::vector<std::string>> projected;
  for (const Simplex& f : c.facet_list()) {
    std::set<std::string> names;
    for (Vertex v : f) names.insert(c.vertex_name(rep[static_cast<size_t>(v)]));
    projected.emplace(names.begin(), names.end());
  }
  out.quotient = SimplicialComplex::from_facets(
      c.name() + "/T", {projected.begin(), projected.end()});
  require_internal(out.quotient.warnings().empty(), "projected facets were not maximal");

  out.projection.assign(static_cast<size_t>(c.vertex_count()), 0);
  out.section.assign(static_cast<size_t>(out.quotient.vertex_count()), 0);
  for (Vertex v = 0; v < c.vertex_count(); ++v) {
    Vertex r = rep[static_cast<size_t>(v)];
    auto qv = out.quotient.find_vertex(c.vertex_name(r));
    require_internal(qv.has_value(), "projected vertex missing from the quotient");
    out.projection[static_cast<size_t>(v)] = *qv;
    if (r == v) out.section[static_cast<size_t>(*qv)] = v;
  }

  /* Each orbit pair of k-simplices contributes exactly one image. */
  auto cf = c.f_vector();
  auto qf = out.quotient.f_vector();
  require_internal(cf.size() == qf.size(), "quotient changed dimension");
  for (size_t k = 0; k < cf.size(); ++k)
    require_internal(cf[k] == 2 * qf[k], "quotient face counts are off");
  return out;
}

CharacteristicCocycle characteristic_cocycle(const SimplicialComplex& x,
                                             const FreeInvolution& a) {
  CharacteristicCocycle out;
  out.data = quotient(x, a);
  const SimplicialComplex& q = out.data.quotient;
  const SimplicialComplex& c = out.data.cover.complex;
  const auto& edges = q.faces(1);
  out.w.assign(edges.size(), 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    Vertex lu = out.data.section[static_cast<size_t>(edges[i][0])];
    Vertex lv = out.data.section[static_cast<size_t>(edges[i][1])];
    out.w[i] = c.contains(sorted_simplex({lu, lv})) ? 0 : 1;
  }
  require_internal(is_cocycle_gf2(q, 1, out.w), "characteristic cochain is not closed");
  return out;
}

IndexReport hind2(const SimplicialComplex& x, const FreeInvolution& a) {
  IndexReport report;
  report.characteristic = characteristic_cocycle(x, a);
  const SimplicialComplex& q = report.characteristic.data.quotient;
  const std::vector<uint8_t>& w = report.characteristic.w;
  std::vector<uint8_t> power = w;
  int h = 0;
  for (int n = 1; n <= q.dim(); ++n) {
    if (n > 1) power = cup_gf2(q, n - 1, power, 1, w);
    /* Once a power bounds, all higher cup powers bound as well. */
    if (is_coboundary_gf2(q, n, power)) break;
    report.witnesses.push_back(power);
    h = n;
  }
  report.hind2 = h;
  report.first_vanishing_power = h + 1;
  require_internal(h <= x.dim(), "index exceeds the dimension");
  return report;
}

std::string to_string(ButVerdict v) {
  switch (v) {
    case ButVerdict::Yes: return "yes";
    case ButVerdict::No: return "no";
    case ButVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::None: return "none";
    case Equivalence::Manifold: return "manifold";
    case Equivalence::AlmostPseudomanifold: return "almost_pseudomanifold";
    case Equivalence::TwoPrimary: return "two_primary";
  }
  return "none";
}

ButCertificate but_certificate(const SimplicialComplex& x, const FreeInvolution& a) {
  ButCertificate cert;
  cert.index = hind2(x, a);
  cert.hind2 = cert.index.hind2;
  cert.dim = x.dim();
  cert.tind_lower = cert.hind2;
  cert.tind_upper = cert.dim;
  cert.but_n.assign(static_cast<size_t>(cert.dim) + 1, ButVerdict::Unknown);
  for (int n = 0; n <= cert.hind2; ++n) cert.but_n[static_cast<size_t>(n)] = ButVerdict::Yes;

  auto pm = classify_pseudomanifold(x);
  cert.closed_almost_pseudomanifold = pm.is_almost_pseudomanifold && pm.is_closed;

  /* Two-primary hypothesis: the top integer cohomology of the orbit space
   * (of the suspension in odd dimension) has elementary 2-primary part, so a
   * nonzero top power with twisted integer coefficients survives reduction
   * mod 2. */
  if (cert.dim % 2 == 0) {
    cert.two_primary_ok = two_primary_elementary(
        integer_cohomology(cert.index.characteristic.data.quotient, cert.dim).torsion);
  } else {
    auto sx = suspension(EquivariantComplex{x, a, {}});
    auto sq = quotient(sx.complex, sx.involution);
    cert.two_primary_ok =
        two_primary_elementary(integer_cohomology(sq.quotient, cert.dim + 1).torsion);
  }

  if (cert.hind2 == cert.dim) {
    /* hind2 <= tind <= dim pins tind exactly. */
    cert.notes.push_back("hind2 equals dim, so tind = dim and the top verdict is yes");
    if (cert.closed_almost_pseudomanifold)
      cert.equivalence_applied = Equivalence::AlmostPseudomanifold;
    else if (cert.two_primary_ok)
      cert.equivalence_applied = Equivalence::TwoPrimary;
  } else if (cert.closed_almost_pseudomanifold) {
    cert.equivalence_applied = Equivalence::AlmostPseudomanifold;
    cert.tind_upper = cert.dim - 1;
    cert.but_n[static_cast<size_t>(cert.dim)] = ButVerdict::No;
    cert.notes.push_back(
        "closed almost pseudomanifold: tind = dim would force hind2 = dim, so the top "
        "verdict is no");
  } else if (cert.two_primary_ok) {
    cert.equivalence_applied = Equivalence::TwoPrimary;
    cert.tind_upper = cert.dim - 1;
    cert.but_n[static_cast<size_t>(cert.dim)] = ButVerdict::No;
    cert.notes.push_back(
        "two-primary hypothesis: tind = dim would force hind2 = dim, so the top verdict "
        "is no");
  } else {
    cert.notes.push_back("no equivalence applies, the verdicts above hind2 stay open");
  }
  return cert;
}

RelativeReport relative_hypothesis(const SimplicialComplex& z, const SimplicialComplex& x,
                                   const FreeInvolution& a, int d, Coefficients coeff) {
  if (d < 1) fail(ErrorCode::BadInput, "the relative hypothesis needs d >= 1");
  RelativeReport report;
  report.d = d;
  report.coefficients = coeff;
  SimplicialMap inclusion = inclusion_map(x, z);
  report.hind2_x = hind2(x, a).hind2;
  report.index_ok = report.hind2_x >= d - 1;

  int k = d - 1;
  bool zero = true;
  if (coeff == Coefficients::GF2) {
    const Gf2Cohomology& hz = gf2_cohomology(z, k);
    for (const auto& b : hz.basis()) {
      if (!is_coboundary_gf2(x, k, pullback_gf2(inclusion, k, b))) {
        zero = false;
        break;
      }
    }
  } else {
    const IntCohomologyModel& hz = int_cohomology_model(z, k);
    const IntCohomologyModel& hx = int_cohomology_model(x, k);
    for (const auto& g : hz.generator_cocycles()) {
      if (!hx.class_is_zero(pullback_int(inclusion, k, g))) {
        zero = false;
        break;
      }
    }
  }
  report.restriction_zero = zero;
  report.holds = report.index_ok && report.restriction_zero;
  return report;
}

}  // namespace yangdex
