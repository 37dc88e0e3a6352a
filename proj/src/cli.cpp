#include "yangdex/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "yangdex/cohomology.hpp"
#include "yangdex/constructions.hpp"
#include "yangdex/degree.hpp"
#include "yangdex/errors.hpp"
#include "yangdex/io.hpp"
#include "yangdex/lemmas.hpp"
#include "yangdex/yang.hpp"

namespace yangdex {

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NoWitness:
    case ErrorCode::HasComplementaryEdge:
    case ErrorCode::IllDefined:
    case ErrorCode::NotTransversal:
      return 1;
    default:
      return 2;
  }
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(ErrorCode::BadInput, out_path + ": cannot write");
  out << text;
}

const FreeInvolution& need_involution(const ParsedComplex& p, const std::string& origin) {
  if (!p.involution)
    fail(ErrorCode::BadInput, origin + ": an \"involution\" entry is required here");
  return *p.involution;
}

std::vector<int> parse_pattern(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::BadInput, "pattern entry \"" + token + "\" is not an integer");
    }
    if (used != token.size())
      fail(ErrorCode::BadInput, "pattern entry \"" + token + "\" is not an integer");
    out.push_back(value);
  }
  if (out.empty()) fail(ErrorCode::BadInput, "empty pattern");
  return out;
}

int inferred_m(const LabelsFile& lf) {
  if (lf.m) return *lf.m;
  int m = 0;
  for (const auto& [vertex, label] : lf.labels) {
    (void)vertex;
    m = std::max(m, std::abs(label));
  }
  return m;
}

Json rational_array(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(rational_string(r));
  return out;
}

Json labeling_echo(const Labeling& l) {
  Json out;
  out["m"] = l.m;
  out["region_vertices"] = static_cast<int>(l.region.size());
  return out;
}

/* Options shared by the subcommand handlers; one instance covers the whole
 * invocation since exactly one leaf command runs. */
struct Opts {
  std::string complex_file, labels_file, region_file, points_file, selection_file;
  std::string coords_file, sub_file, map_file, pattern, kind;
  std::string coeff = "z2";
  std::string north = "N", south = "S";
  std::string out;
  std::vector<std::string> set_files;
  int n = 0, j = -1, dim = 0, facet = 0;
  bool same_sign = false, include_negation = false, want_int = false;
  bool reject = false, fast = false, verify_flag = false;
  std::chrono::steady_clock::time_point start;

  bool verify() const { return !fast; }
};

long long elapsed_ms(const Opts& o) {
  auto elapsed = std::chrono::steady_clock::now() - o.start;
  return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
}

int finish(Json& report, const Opts& o, int code = 0) {
  report["timing_ms"] = elapsed_ms(o);
  emit(report, o.out);
  return code;
}

Labeling load_labeling(const Opts& o) {
  ParsedComplex x = load_complex(o.complex_file);
  LabelsFile lf = labels_from_json(load_json(o.labels_file), o.labels_file);
  int m = inferred_m(lf);
  if (!o.region_file.empty()) {
    ParsedComplex region = load_complex(o.region_file);
    std::vector<int> labels(static_cast<size_t>(x.complex.vertex_count()));
    for (Vertex v = 0; v < x.complex.vertex_count(); ++v) {
      auto it = lf.labels.find(x.complex.vertex_name(v));
      if (it == lf.labels.end())
        fail(ErrorCode::BadInput,
             o.labels_file + ": no label for vertex " + x.complex.vertex_name(v));
      labels[static_cast<size_t>(v)] = it->second;
    }
    if (lf.labels.size() != static_cast<size_t>(x.complex.vertex_count()))
      fail(ErrorCode::BadInput,
           o.labels_file + ": labels name vertices the complex does not have");
    return check_labeling_on(x.complex, labels, m, region.complex,
                             need_involution(region, o.region_file));
  }
  return check_labeling(x.complex, lf.labels, m, need_involution(x, o.complex_file));
}

Json index_checks(const ButCertificate& cert) {
  const IndexReport& ir = cert.index;
  const SimplicialComplex& q = ir.characteristic.data.quotient;
  Json checks;
  checks["w_is_cocycle"] = q.dim() < 1 || is_cocycle_gf2(q, 1, ir.characteristic.w);
  bool powers_nonzero = true;
  for (int n = 1; n <= ir.hind2; ++n)
    powers_nonzero =
        powers_nonzero &&
        !gf2_cohomology(q, n).class_is_zero(ir.witnesses[static_cast<size_t>(n - 1)]);
  checks["powers_nonzero"] = powers_nonzero;
  int next = ir.hind2 + 1;
  if (next <= q.dim()) {
    std::vector<uint8_t> hi =
        ir.hind2 == 0 ? ir.characteristic.w
                      : cup_gf2(q, ir.hind2, ir.witnesses[static_cast<size_t>(ir.hind2 - 1)],
                                1, ir.characteristic.w);
    checks["next_power_vanishes"] = gf2_cohomology(q, next).class_is_zero(hi);
  }
  return checks;
}

Json certificate_json(const ButCertificate& cert, bool verify) {
  Json payload;
  payload["hind2"] = cert.hind2;
  payload["dim"] = cert.dim;
  payload["tind_lower"] = cert.tind_lower;
  payload["tind_upper"] = cert.tind_upper;
  Json but = Json::array();
  for (ButVerdict v : cert.but_n) but.push_back(to_string(v));
  payload["but"] = std::move(but);
  payload["equivalence"] = to_string(cert.equivalence_applied);
  payload["closed_almost_pseudomanifold"] = cert.closed_almost_pseudomanifold;
  payload["two_primary_ok"] = cert.two_primary_ok;
  payload["notes"] = cert.notes;

  const QuotientData& qd = cert.index.characteristic.data;
  Json orbit;
  orbit["name"] = qd.quotient.name();
  orbit["subdivided"] = qd.subdivided;
  orbit["f_vector"] = qd.quotient.f_vector();
  payload["quotient"] = std::move(orbit);

  Json witnesses;
  witnesses["w"] = qd.quotient.dim() >= 1
                       ? cochain_support(qd.quotient, 1, cert.index.characteristic.w)
                       : Json::array();
  Json powers = Json::array();
  for (int n = 1; n <= cert.hind2; ++n)
    powers.push_back(
        cochain_support(qd.quotient, n, cert.index.witnesses[static_cast<size_t>(n - 1)]));
  witnesses["powers"] = std::move(powers);
  payload["witnesses"] = std::move(witnesses);

  if (verify) payload["checks"] = index_checks(cert);
  return payload;
}

int write_artifact(const ParsedComplex& artifact, const Opts& o) {
  emit(complex_to_json(artifact), o.out);
  return 0;
}

int cmd_validate(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  Json payload;
  payload["input"] = o.complex_file;
  payload["name"] = p.complex.name();
  payload["dim"] = p.complex.dim();
  payload["f_vector"] = p.complex.f_vector();
  payload["warnings"] = p.complex.warnings();
  PseudomanifoldReport r = classify_pseudomanifold(p.complex);
  Json pm;
  pm["pure"] = r.pure;
  pm["almost_pseudomanifold"] = r.is_almost_pseudomanifold;
  pm["strongly_connected"] = r.is_strongly_connected;
  pm["pseudomanifold"] = r.is_pseudomanifold;
  pm["closed"] = r.is_closed;
  pm["boundary_facets"] = r.boundary.valid() && !r.boundary.empty()
                              ? static_cast<int>(r.boundary.facet_list().size())
                              : 0;
  payload["pseudomanifold"] = std::move(pm);
  if (p.involution) {
    Json inv;
    inv["free"] = true;
    inv["orbits"] = static_cast<int>(p.involution->orbit_representatives().size());
    payload["involution"] = std::move(inv);
  }
  if (p.coordinates)
    payload["coordinates"] = {{"dimension", static_cast<int>((*p.coordinates)[0].size())}};
  Json report;
  report["command"] = "validate";
  report["ok"] = true;
  report["result"] = std::move(payload);
  return finish(report, o);
}

int cmd_index(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  const FreeInvolution& a = need_involution(p, o.complex_file);
  ButCertificate cert = but_certificate(p.complex, a);
  Json report;
  report["command"] = "index";
  report["ok"] = true;
  report["input"] = o.complex_file;
  report["complex"] = p.complex.name();
  report["result"] = certificate_json(cert, o.verify());
  return finish(report, o);
}

int cmd_betti(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  Json payload;
  payload["name"] = p.complex.name();
  payload["euler"] = euler_characteristic(p.complex);
  if (o.coeff == "z2") {
    payload["betti2"] = betti_gf2(p.complex);
  } else {
    Json groups = Json::array();
    for (int k = 0; k <= p.complex.dim(); ++k) {
      IntCohomology h = integer_cohomology(p.complex, k);
      Json g;
      g["free_rank"] = h.free_rank;
      Json torsion = Json::array();
      for (const Int& t : h.torsion) torsion.push_back(t.str());
      g["torsion"] = std::move(torsion);
      groups.push_back(std::move(g));
    }
    payload["integer"] = std::move(groups);
  }
  Json report;
  report["command"] = "betti";
  report["ok"] = true;
  report["input"] = o.complex_file;
  report["coefficients"] = o.coeff;
  report["result"] = std::move(payload);
  return finish(report, o);
}

int cmd_quotient(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  QuotientData qd = quotient(p.complex, need_involution(p, o.complex_file));
  return write_artifact(ParsedComplex{qd.quotient, {}, {}}, o);
}

int cmd_crosspoly(const Opts& o) {
  EquivariantComplex e = cross_polytope_sphere(o.n);
  return write_artifact(ParsedComplex{e.complex, e.involution, e.coordinates}, o);
}

int cmd_barycentric(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  if (p.involution) {
    EquivariantComplex e =
        barycentric_subdivision(EquivariantComplex{p.complex, *p.involution, p.coordinates});
    return write_artifact(ParsedComplex{e.complex, e.involution, e.coordinates}, o);
  }
  return write_artifact(ParsedComplex{barycentric_subdivision(p.complex), {}, {}}, o);
}

int cmd_suspend(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  if (p.involution) {
    EquivariantComplex e =
        suspension(EquivariantComplex{p.complex, *p.involution, p.coordinates});
    return write_artifact(ParsedComplex{e.complex, e.involution, e.coordinates}, o);
  }
  return write_artifact(ParsedComplex{suspension(p.complex, o.north, o.south), {}, {}}, o);
}

int cmd_camomile(const Opts& o) {
  ParsedComplex z = load_complex(o.complex_file);
  ParsedComplex x = load_complex(o.sub_file);
  CamomileResult r = camomile(z.complex, need_involution(x, o.sub_file),
                              o.reject ? FullnessPolicy::Reject : FullnessPolicy::Repair);
  return write_artifact(
      ParsedComplex{r.doubled.complex, r.doubled.involution, r.doubled.coordinates}, o);
}

int cmd_connsum(const Opts& o) {
  ParsedComplex m = load_complex(o.complex_file);
  const auto& facets = m.complex.facet_list();
  if (o.facet < 0 || o.facet >= static_cast<int>(facets.size()))
    fail(ErrorCode::BadInput, "facet index out of range");
  CamomileResult r = connected_sum_double(m.complex, facets[static_cast<size_t>(o.facet)]);
  return write_artifact(
      ParsedComplex{r.doubled.complex, r.doubled.involution, r.doubled.coordinates}, o);
}

int cmd_tucker(const Opts& o) {
  Labeling l = load_labeling(o);
  std::vector<Simplex> edges = complementary_edges(l);
  Json report;
  report["command"] = "tucker";
  report["ok"] = true;
  report["labeling"] = labeling_echo(l);
  Json list = Json::array();
  for (const Simplex& e : edges) list.push_back(simplex_names(l.complex, e));
  report["result"] = {{"complementary_edges", std::move(list)},
                      {"count", static_cast<int>(edges.size())}};
  return finish(report, o, edges.empty() ? 1 : 0);
}

int cmd_fan(const Opts& o) {
  Labeling l = load_labeling(o);
  std::vector<Simplex> alternating = fan_simplices(l, o.same_sign);
  Json report;
  report["command"] = "fan";
  report["ok"] = true;
  report["labeling"] = labeling_echo(l);
  report["same_sign_variant"] = o.same_sign;
  Json list = Json::array();
  for (const Simplex& s : alternating) list.push_back(simplex_names(l.complex, s));
  report["result"] = {{"alternating_simplices", std::move(list)},
                      {"count", static_cast<int>(alternating.size())},
                      {"odd", alternating.size() % 2 == 1}};
  return finish(report, o, alternating.empty() ? 1 : 0);
}

int cmd_shashkin(const Opts& o) {
  Labeling l = load_labeling(o);
  LabelPattern pattern = check_pattern(parse_pattern(o.pattern));
  ShashkinCount c = shashkin_count(l, pattern, o.include_negation);
  Json report;
  report["command"] = "shashkin";
  report["ok"] = true;
  report["labeling"] = labeling_echo(l);
  report["pattern"] = pattern.labels;
  report["include_negation"] = o.include_negation;
  report["result"] = {{"count", c.count}, {"odd", c.odd}};
  return finish(report, o);
}

int cmd_pn(const Opts& o) {
  Labeling l = load_labeling(o);
  PointsFile pf = points_from_json(load_json(o.points_file), o.points_file);
  PointConfiguration pc = check_points(pf.n, pf.points);
  PnWitness w = pn_witness(l, pc);
  Json report;
  report["command"] = "pn";
  report["ok"] = true;
  report["labeling"] = labeling_echo(l);
  report["result"] = {{"simplex", simplex_names(l.complex, w.simplex)},
                      {"labels", w.labels},
                      {"lambda", rational_array(w.lambda)}};
  return finish(report, o);
}

int cmd_cover(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  const FreeInvolution& a = need_involution(p, o.complex_file);
  CoverFamily family;
  std::optional<int> j;
  if (o.kind == "ls") {
    family.kind = CoverKind::LS;
  } else if (o.kind == "t") {
    family.kind = CoverKind::T;
  } else {
    family.kind = CoverKind::TB;
    if (o.j >= 0) j = o.j;
  }
  std::vector<SimplicialComplex> sets;
  for (const std::string& f : o.set_files) sets.push_back(load_complex(f).complex);
  if (family.kind == CoverKind::T) {
    if (sets.size() % 2 != 0)
      fail(ErrorCode::BadInput, "a paired cover needs an even number of set files");
    for (size_t i = 0; i < sets.size(); i += 2)
      family.pairs.emplace_back(sets[i], sets[i + 1]);
  } else {
    family.sets = sets;
  }
  CoverWitness w = cover_check(p.complex, a, family, j);
  Json report;
  report["command"] = "cover";
  report["ok"] = true;
  report["kind"] = o.kind;
  report["sets"] = static_cast<int>(sets.size());
  report["result"] = {{"index", w.index}, {"simplex", simplex_names(p.complex, w.simplex)}};
  return finish(report, o);
}

int cmd_kakutani(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  const FreeInvolution& a = need_involution(p, o.complex_file);
  SelectionFile sf = selection_from_json(load_json(o.selection_file), o.selection_file);
  std::vector<std::vector<Rat>> y(static_cast<size_t>(p.complex.vertex_count()));
  for (Vertex v = 0; v < p.complex.vertex_count(); ++v) {
    auto it = sf.y.find(p.complex.vertex_name(v));
    if (it == sf.y.end())
      fail(ErrorCode::BadInput,
           o.selection_file + ": no point for vertex " + p.complex.vertex_name(v));
    y[static_cast<size_t>(v)] = it->second;
  }
  EquivariantComplex e{p.complex, a, p.coordinates};
  SetValuedSelection sel = check_selection(e, sf.n, y);
  KakutaniWitness w = kakutani_pl_zero(e, sel);
  Json report;
  report["command"] = "kakutani";
  report["ok"] = true;
  report["result"] = {{"simplex", simplex_names(p.complex, w.simplex)},
                      {"lambda", rational_array(w.lambda)}};
  return finish(report, o);
}

int cmd_degree(const Opts& o) {
  MapFile mf = map_from_json(load_json(o.map_file), o.map_file);
  SimplicialMap f =
      check_simplicial_map(mf.source.complex, mf.target.complex, mf.vertex_map);
  DegreeResult d2 = degree_mod2(f, o.verify());
  Json result;
  result["mod2"] = d2.mod2;
  result["well_defined_verified"] = d2.well_defined_verified;
  result["facet_used"] =
      simplex_names(mf.target.complex,
                    mf.target.complex.facet_list()[static_cast<size_t>(d2.facet_used)]);
  if (o.want_int) {
    DegreeResult di = degree_int(f, o.verify());
    result["integer"] = *di.integer;
  }
  if (mf.source.involution && mf.target.involution) {
    OddDegreeReport odd = odd_degree_check(f, *mf.source.involution, *mf.target.involution);
    Json oj;
    oj["dim"] = odd.dim;
    oj["source_hind2"] = odd.source_hind2;
    oj["target_hind2"] = odd.target_hind2;
    oj["both_full_index"] = odd.both_full_index;
    oj["sphere_like_target"] = odd.sphere_like_target;
    if (odd.source_top_but) oj["source_top_but"] = *odd.source_top_but;
    oj["certificate_consistent"] = odd.certificate_consistent;
    result["odd_degree"] = std::move(oj);
  }
  Json report;
  report["command"] = "degree";
  report["ok"] = true;
  report["input"] = o.map_file;
  report["result"] = std::move(result);
  return finish(report, o);
}

int cmd_zeros(const Opts& o) {
  ParsedComplex p = load_complex(o.complex_file);
  CoordsFile cf = coords_from_json(load_json(o.coords_file), o.coords_file);
  PLMap h = check_pl_map(p.complex, cf.d, cf.coords);
  ZeroReport r = pl_zeros(h, p.involution);
  Json zeros = Json::array();
  for (const Zero& z : r.zeros)
    zeros.push_back({{"facet", simplex_names(p.complex, z.facet)},
                     {"barycentric", rational_array(z.barycentric)}});
  Json result;
  result["transversal"] = r.transversal;
  result["count"] = r.count;
  result["zeros"] = std::move(zeros);
  if (r.count_mod4) result["count_mod4"] = *r.count_mod4;
  if (r.is_4k_plus_2) result["is_4k_plus_2"] = *r.is_4k_plus_2;
  Json report;
  report["command"] = "zeros";
  report["ok"] = true;
  report["input"] = o.complex_file;
  report["result"] = std::move(result);
  return finish(report, o);
}

int cmd_relhyp(const Opts& o) {
  ParsedComplex z = load_complex(o.complex_file);
  ParsedComplex x = load_complex(o.sub_file);
  Coefficients coeff = o.coeff == "z2" ? Coefficients::GF2 : Coefficients::Integer;
  RelativeReport r = relative_hypothesis(z.complex, x.complex,
                                         need_involution(x, o.sub_file), o.dim, coeff);
  Json report;
  report["command"] = "relhyp";
  report["ok"] = true;
  report["result"] = {{"d", r.d},
                      {"coefficients", o.coeff},
                      {"hind2_x", r.hind2_x},
                      {"index_ok", r.index_ok},
                      {"restriction_zero", r.restriction_zero},
                      {"holds", r.holds}};
  return finish(report, o, r.holds ? 0 : 1);
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  Opts o;
  CLI::App app{"Borsuk-Ulam certificates for free simplicial involutions", "yangdex"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;
  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.out, "write the result to a file instead of stdout");
    CLI::Option* fast = sub->add_flag("--fast", o.fast, "skip independent re-verification");
    sub->add_flag("--verify", o.verify_flag, "re-run independent validations (default)")
        ->excludes(fast);
    return sub;
  };
  auto with_complex = [&](CLI::App* sub) {
    sub->add_option("complex", o.complex_file, "complex file")->required();
    return common(sub);
  };
  auto with_labels = [&](CLI::App* sub) {
    with_complex(sub);
    sub->add_option("labels", o.labels_file, "labeling file")->required();
    sub->add_option("--region", o.region_file,
                    "subcomplex (with involution) the labeling is antipodal on");
    return sub;
  };

  handlers.emplace_back(with_complex(app.add_subcommand("validate", "parse and classify")),
                        [&] { return cmd_validate(o); });
  handlers.emplace_back(
      with_complex(app.add_subcommand("index", "Yang index and Borsuk-Ulam certificate")),
      [&] { return cmd_index(o); });
  CLI::App* betti = with_complex(app.add_subcommand("betti", "cohomology ranks"));
  betti->add_option("--coeff", o.coeff, "z2 or z")->check(CLI::IsMember({"z2", "z"}));
  handlers.emplace_back(betti, [&] { return cmd_betti(o); });
  handlers.emplace_back(
      with_complex(app.add_subcommand("quotient", "orbit complex of the involution")),
      [&] { return cmd_quotient(o); });

  CLI::App* construct = app.add_subcommand("construct", "built-in constructions");
  construct->require_subcommand(1);
  CLI::App* crosspoly = common(construct->add_subcommand("crosspoly", "octahedral sphere"));
  crosspoly->add_option("n", o.n, "sphere dimension")->required();
  handlers.emplace_back(crosspoly, [&] { return cmd_crosspoly(o); });
  handlers.emplace_back(
      with_complex(construct->add_subcommand("barycentric", "barycentric subdivision")),
      [&] { return cmd_barycentric(o); });
  CLI::App* suspend = with_complex(construct->add_subcommand("suspend", "suspension"));
  suspend->add_option("--north", o.north, "north pole name (non-equivariant input)");
  suspend->add_option("--south", o.south, "south pole name (non-equivariant input)");
  handlers.emplace_back(suspend, [&] { return cmd_suspend(o); });
  CLI::App* camomile_cmd =
      with_complex(construct->add_subcommand("camomile", "double along a subcomplex"));
  camomile_cmd->add_option("sub", o.sub_file, "invariant subcomplex file (with involution)")
      ->required();
  camomile_cmd->add_flag("--reject", o.reject, "fail instead of repairing fullness");
  handlers.emplace_back(camomile_cmd, [&] { return cmd_camomile(o); });
  CLI::App* connsum =
      with_complex(construct->add_subcommand("connsum", "connected sum with itself"));
  connsum->add_option("--facet", o.facet, "index of the facet to open up");
  handlers.emplace_back(connsum, [&] { return cmd_connsum(o); });

  handlers.emplace_back(
      with_labels(app.add_subcommand("tucker", "complementary edge search")),
      [&] { return cmd_tucker(o); });
  CLI::App* fan = with_labels(app.add_subcommand("fan", "alternating simplices"));
  fan->add_flag("--same-sign", o.same_sign, "accept either leading sign");
  handlers.emplace_back(fan, [&] { return cmd_fan(o); });
  CLI::App* shashkin = with_labels(app.add_subcommand("shashkin", "pattern facet count"));
  shashkin->add_option("--pattern", o.pattern, "labels like 1,-2,3")->required();
  shashkin->add_flag("--include-negation", o.include_negation, "count -pattern too");
  handlers.emplace_back(shashkin, [&] { return cmd_shashkin(o); });
  CLI::App* pn = with_labels(app.add_subcommand("pn", "origin-capturing simplex"));
  pn->add_option("--points", o.points_file, "point configuration file")->required();
  handlers.emplace_back(pn, [&] { return cmd_pn(o); });

  CLI::App* cover = with_complex(app.add_subcommand("cover", "covering family witnesses"));
  cover->add_option("--kind", o.kind, "ls, t, or tb")
      ->required()
      ->check(CLI::IsMember({"ls", "t", "tb"}));
  cover->add_option("--j", o.j, "split position for tb");
  cover->add_option("sets", o.set_files, "member subcomplex files")->expected(-1);
  handlers.emplace_back(cover, [&] { return cmd_cover(o); });

  CLI::App* kakutani =
      with_complex(app.add_subcommand("kakutani", "zero of an antipodal selection"));
  kakutani->add_option("--selection", o.selection_file, "selection file")->required();
  handlers.emplace_back(kakutani, [&] { return cmd_kakutani(o); });

  CLI::App* degree = common(app.add_subcommand("degree", "degree of a simplicial map"));
  degree->add_option("map", o.map_file, "map file (source, target, map)")->required();
  degree->add_flag("--int", o.want_int, "also compute the integer degree");
  handlers.emplace_back(degree, [&] { return cmd_degree(o); });

  CLI::App* zeros = with_complex(app.add_subcommand("zeros", "zero set of a PL map"));
  zeros->add_option("--coords", o.coords_file, "vertex image file")->required();
  handlers.emplace_back(zeros, [&] { return cmd_zeros(o); });

  CLI::App* relhyp =
      with_complex(app.add_subcommand("relhyp", "relative intersection hypothesis"));
  relhyp->add_option("--sub", o.sub_file, "invariant subcomplex file (with involution)")
      ->required();
  relhyp->add_option("--dim", o.dim, "intersection dimension d")->required();
  relhyp->add_option("--coeff", o.coeff, "z2 or z")->check(CLI::IsMember({"z2", "z"}));
  handlers.emplace_back(relhyp, [&] { return cmd_relhyp(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    o.start = std::chrono::steady_clock::now();
    try {
      return handler();
    } catch (const Error& e) {
      Json report;
      report["command"] = sub->get_name();
      report["ok"] = false;
      report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
      report["timing_ms"] = elapsed_ms(o);
      std::cout << report.dump(2) << "\n";
      return exit_code_for(e.code());
    }
  }
  return 2;
}

}  // namespace yangdex
