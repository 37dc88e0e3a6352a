#include <algorithm>
#include <optional>

#include "corpus.hpp"
#include "doctest.h"
#include "yangdex/constructions.hpp"
#include "yangdex/errors.hpp"
#include "yangdex/lemmas.hpp"

using namespace yangdex;
using namespace corpus;

namespace {

template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

SimplicialComplex cone_disk() {
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 6; ++i)
    facets.push_back({padded("p", i), padded("p", (i + 1) % 6), "q"});
  return SimplicialComplex::from_facets("disk", facets);
}

/* Antipodal labeling of the octahedron from the labels of x+, y+, z+. */
std::vector<int> oct_labels(int a, int b, int c) { return {a, -a, b, -b, c, -c}; }

Simplex by_names(const SimplicialComplex& k, const std::vector<std::string>& names) {
  Simplex s;
  for (const auto& n : names) s.push_back(*k.find_vertex(n));
  std::sort(s.begin(), s.end());
  return s;
}

SimplicialComplex sub(const SimplicialComplex&, const std::string& name,
                      const std::vector<std::vector<std::string>>& facets) {
  return SimplicialComplex::from_facets(name, facets);
}

}  // namespace

TEST_CASE("labeling validation") {
  SimplicialComplex hex = cycle(6);
  FreeInvolution inv = cycle_antipode(hex, 6);

  std::vector<int> good = {1, 2, 1, -1, -2, -1};
  Labeling l = check_labeling(hex, good, 2, inv);
  CHECK(l.m == 2);
  CHECK(l.region.size() == 6);
  CHECK(l.partner == inv.action);
  CHECK(l(*hex.find_vertex("p01")) == 2);

  std::map<std::string, int> by_name;
  for (int i = 0; i < 6; ++i) by_name[padded("p", i)] = good[static_cast<size_t>(i)];
  Labeling lm = check_labeling(hex, by_name, 2, inv);
  CHECK(lm.labels == l.labels);

  CHECK(thrown_code([&] { check_labeling(hex, {1, 2, 1, -1, -2}, 2, inv); }) ==
        ErrorCode::BadInput);
  CHECK(thrown_code([&] { check_labeling(hex, {1, 3, 1, -1, -3, -1}, 2, inv); }) ==
        ErrorCode::WrongAlphabet);
  CHECK(thrown_code([&] { check_labeling(hex, {1, 0, 1, -1, 0, -1}, 2, inv); }) ==
        ErrorCode::WrongAlphabet);
  CHECK(thrown_code([&] { check_labeling(hex, {1, 2, 1, 1, -2, -1}, 2, inv); }) ==
        ErrorCode::NotAntipodal);

  SUBCASE("labeling antipodal on a region only") {
    SimplicialComplex disk = cone_disk();
    std::vector<int> labels(7, 0);
    std::vector<int> boundary = {1, 2, 1, -1, -2, -1};
    for (int i = 0; i < 6; ++i)
      labels[static_cast<size_t>(*disk.find_vertex(padded("p", i)))] =
          boundary[static_cast<size_t>(i)];
    labels[static_cast<size_t>(*disk.find_vertex("q"))] = 1;

    Labeling on = check_labeling_on(disk, labels, 2, hex, inv);
    CHECK(on.region.size() == 6);
    CHECK(on.partner[static_cast<size_t>(*disk.find_vertex("q"))] == kNoVertex);
    Vertex p0 = *disk.find_vertex("p00");
    CHECK(on.partner[static_cast<size_t>(p0)] == *disk.find_vertex("p03"));
    /* Tucker for the disk: antipodal on the boundary with m = 2 forces a
     * complementary edge somewhere. */
    CHECK(!complementary_edges(on).empty());

    std::vector<int> broken = labels;
    broken[static_cast<size_t>(*disk.find_vertex("p03"))] = 1;
    CHECK(thrown_code([&] { check_labeling_on(disk, broken, 2, hex, inv); }) ==
          ErrorCode::NotAntipodal);
    CHECK(thrown_code([&] {
            SimplicialComplex big = cycle(8);
            check_labeling_on(disk, labels, 2, big, cycle_antipode(big, 8));
          }) == ErrorCode::BadInput);
  }
}

TEST_CASE("tucker: small alphabets force complementary edges") {
  SimplicialComplex hex = cycle(6);
  FreeInvolution inv = cycle_antipode(hex, 6);

  /* m = 1 on S^1: all 8 antipodal labelings. */
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> labels(6);
    for (int i = 0; i < 3; ++i) {
      labels[static_cast<size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
      labels[static_cast<size_t>(i + 3)] = -labels[static_cast<size_t>(i)];
    }
    Labeling l = check_labeling(hex, labels, 1, inv);
    CHECK(!complementary_edges(l).empty());
  }

  SimplicialComplex oct = octahedron();
  FreeInvolution a = octahedron_antipode(oct);

  /* The coordinate labeling: complementary pairs are exactly antipodal and
   * those are never edges. */
  Labeling id3 = check_labeling(oct, oct_labels(1, 2, 3), 3, a);
  CHECK(complementary_edges(id3).empty());

  /* m = 2 on S^2: every one of the 4^3 antipodal labelings fails. */
  const int vals[4] = {1, -1, 2, -2};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Labeling l = check_labeling(oct, oct_labels(vals[i], vals[j], vals[k]), 2, a);
        CHECK(!complementary_edges(l).empty());
      }
}

TEST_CASE("fan: alternating simplices") {
  SimplicialComplex square = cycle(4);
  FreeInvolution sq_inv = cycle_antipode(square, 4);
  Labeling sq = check_labeling(square, {1, -2, -1, 2}, 2, sq_inv);
  CHECK(complementary_edges(sq).empty());

  std::vector<Simplex> alt = fan_simplices(sq);
  REQUIRE(alt.size() == 1);
  CHECK(alt[0] == by_names(square, {"p00", "p01"}));

  std::vector<Simplex> both = fan_simplices(sq, true);
  CHECK(both.size() == 2);
  CHECK(std::find(both.begin(), both.end(), by_names(square, {"p02", "p03"})) != both.end());

  SimplicialComplex oct = octahedron();
  FreeInvolution a = octahedron_antipode(oct);

  SUBCASE("complementary-free labelings of the octahedron") {
    /* Exactly the labelings with three distinct absolute values; each has one
     * standard alternating triangle and its negation. */
    int free_count = 0;
    const int vals[6] = {1, -1, 2, -2, 3, -3};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) {
          Labeling l = check_labeling(oct, oct_labels(vals[i], vals[j], vals[k]), 3, a);
          if (!complementary_edges(l).empty()) continue;
          ++free_count;
          std::vector<Simplex> standard = fan_simplices(l);
          CHECK(standard.size() == 1);
          CHECK(fan_simplices(l, true).size() == 2);
        }
    CHECK(free_count == 48);
  }

  SUBCASE("count parity on the hexagon") {
    SimplicialComplex hex = cycle(6);
    FreeInvolution inv = cycle_antipode(hex, 6);
    const int vals[4] = {1, -1, 2, -2};
    int seen = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          std::vector<int> labels = {vals[i], vals[j], vals[k],
                                     -vals[i], -vals[j], -vals[k]};
          Labeling l = check_labeling(hex, labels, 2, inv);
          if (!complementary_edges(l).empty()) continue;
          ++seen;
          CHECK(fan_simplices(l).size() % 2 == 1);
        }
    CHECK(seen > 0);
  }

  Labeling bad = check_labeling(oct, oct_labels(1, 1, 2), 2, a);
  CHECK(thrown_code([&] { fan_simplices(bad); }) == ErrorCode::HasComplementaryEdge);
}

TEST_CASE("shashkin pattern counts") {
  LabelPattern p = check_pattern({-2, 1, 3});
  CHECK(p.labels == std::vector<int>{1, -2, 3});
  CHECK(thrown_code([&] { check_pattern({1, 1, 2}); }) == ErrorCode::BadInput);
  CHECK(thrown_code([&] { check_pattern({2, -3, 4}); }) == ErrorCode::BadInput);

  SimplicialComplex oct = octahedron();
  FreeInvolution a = octahedron_antipode(oct);
  Labeling id3 = check_labeling(oct, oct_labels(1, 2, 3), 3, a);

  /* Each sign pattern is realized by exactly one facet. */
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> pat;
    for (int i = 0; i < 3; ++i) pat.push_back((mask >> i) & 1 ? -(i + 1) : i + 1);
    ShashkinCount c = shashkin_count(id3, check_pattern(pat));
    CHECK(c.count == 1);
    CHECK(c.odd);
    CHECK(shashkin_count(id3, check_pattern(pat), true).count == 2);
  }

  SUBCASE("rejections") {
    Labeling wide = check_labeling(oct, oct_labels(1, 2, 3), 4, a);
    CHECK(thrown_code([&] { shashkin_count(wide, check_pattern({1, 2, 3})); }) ==
          ErrorCode::WrongAlphabet);
    CHECK(thrown_code([&] { shashkin_count(id3, check_pattern({1, -2})); }) ==
          ErrorCode::BadInput);
    Labeling comp = check_labeling(oct, oct_labels(1, -2, 2), 3, a);
    CHECK(thrown_code([&] { shashkin_count(comp, check_pattern({1, 2, 3})); }) ==
          ErrorCode::HasComplementaryEdge);

    /* A vertex in three edges is not an almost pseudomanifold. */
    SimplicialComplex tripods = SimplicialComplex::from_facets(
        "tripods", {{"t0", "t1"}, {"t0", "t2"}, {"t0", "t3"},
                    {"t4", "t5"}, {"t4", "t6"}, {"t4", "t7"}});
    std::map<std::string, std::string> swap;
    for (int i = 0; i < 4; ++i) {
      swap["t" + std::to_string(i)] = "t" + std::to_string(i + 4);
      swap["t" + std::to_string(i + 4)] = "t" + std::to_string(i);
    }
    FreeInvolution ti = check_free_involution(tripods, swap);
    Labeling tl = check_labeling(tripods, {1, 2, 2, 2, -1, -2, -2, -2}, 2, ti);
    CHECK(thrown_code([&] { shashkin_count(tl, check_pattern({1, -2})); }) ==
          ErrorCode::BadInput);
  }
}

TEST_CASE("point configurations and pn witnesses") {
  PointConfiguration pc = check_points(1, {{Rat(1)}, {Rat(2)}});
  CHECK(pc.m == 2);
  CHECK(pc.at(-2) == std::vector<Rat>{Rat(-2)});
  CHECK(thrown_code([&] { pc.at(0); }) == ErrorCode::WrongAlphabet);
  CHECK(thrown_code([&] { pc.at(3); }) == ErrorCode::WrongAlphabet);
  CHECK(thrown_code([&] { check_points(2, {{Rat(1)}}); }) == ErrorCode::BadInput);

  SUBCASE("origin in hull certificates") {
    CHECK(!origin_in_hull({{Rat(1)}, {Rat(2)}}, 1));
    auto single = origin_in_hull({{Rat(0)}}, 1);
    REQUIRE(single);
    CHECK((*single)[0] == 1);
    auto seg = origin_in_hull({{Rat(1)}, {Rat(-2)}}, 1);
    REQUIRE(seg);
    CHECK((*seg)[0] == Rat(2, 3));
    CHECK((*seg)[1] == Rat(1, 3));
    auto tri = origin_in_hull({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}}, 2);
    REQUIRE(tri);
    for (const Rat& x : *tri) CHECK(x == Rat(1, 3));
  }

  SUBCASE("witness on the square mapped to a line") {
    SimplicialComplex square = cycle(4);
    Labeling l = check_labeling(square, {1, -2, -1, 2}, 2, cycle_antipode(square, 4));
    PnWitness w = pn_witness(l, pc);
    CHECK(w.simplex == by_names(square, {"p00", "p01"}));
    CHECK(w.labels == std::vector<int>{1, -2});
    CHECK(w.lambda == std::vector<Rat>{Rat(2, 3), Rat(1, 3)});
  }

  SUBCASE("no witness without the topology") {
    SimplicialComplex pair = SimplicialComplex::from_facets("pair", {{"a"}, {"b"}});
    FreeInvolution swap = check_free_involution(pair, {{"a", "b"}, {"b", "a"}});
    Labeling l = check_labeling(pair, std::vector<int>{1, -1}, 1, swap);
    CHECK(thrown_code([&] { pn_witness(l, check_points(1, {{Rat(5)}})); }) ==
          ErrorCode::NoWitness);
    Labeling wide = check_labeling(pair, std::vector<int>{1, -1}, 3, swap);
    CHECK(thrown_code([&] { pn_witness(wide, pc); }) == ErrorCode::WrongAlphabet);
  }
}

TEST_CASE("cover families") {
  SimplicialComplex hex = cycle(6);
  FreeInvolution inv = cycle_antipode(hex, 6);

  SimplicialComplex front =
      sub(hex, "front", {{"p00", "p01"}, {"p01", "p02"}, {"p02", "p03"}});
  SimplicialComplex back =
      sub(hex, "back", {{"p03", "p04"}, {"p04", "p05"}, {"p05", "p00"}});

  SUBCASE("lusternik-schnirelmann") {
    CoverFamily f{CoverKind::LS, {front, back}, {}};
    CoverWitness w = cover_check(hex, inv, f);
    CHECK(w.index == 1);
    CHECK(w.simplex == by_names(hex, {"p00"}));

    CoverFamily partial{CoverKind::LS, {front}, {}};
    CHECK(thrown_code([&] { cover_check(hex, inv, partial); }) == ErrorCode::NotACover);

    SimplicialComplex pair2 =
        SimplicialComplex::from_facets("pair2", {{"a", "b"}, {"c", "d"}});
    FreeInvolution swap = check_free_involution(
        pair2, {{"a", "c"}, {"c", "a"}, {"b", "d"}, {"d", "b"}});
    CoverFamily disjoint{CoverKind::LS,
                         {sub(pair2, "e1", {{"a", "b"}}), sub(pair2, "e2", {{"c", "d"}})},
                         {}};
    CHECK(thrown_code([&] { cover_check(pair2, swap, disjoint); }) == ErrorCode::NoWitness);
  }

  SUBCASE("tucker pairs") {
    CoverFamily f{CoverKind::T, {}, {{front, back}}};
    CoverWitness w = cover_check(hex, inv, f);
    CHECK(w.index == 1);
    CHECK(w.simplex == by_names(hex, {"p00"}));

    CoverFamily bad{CoverKind::T,
                    {},
                    {{front, back},
                     {sub(hex, "v0", {{"p00"}}), sub(hex, "v1", {{"p01"}})}}};
    CHECK(thrown_code([&] { cover_check(hex, inv, bad); }) == ErrorCode::BadPairing);
  }

  SUBCASE("tucker-bacon") {
    SimplicialComplex c1 = sub(hex, "c1", {{"p00", "p01"}, {"p01", "p02"}});
    SimplicialComplex c2 = sub(hex, "c2", {{"p02", "p03"}, {"p03", "p04"}});
    SimplicialComplex c3 = sub(hex, "c3", {{"p04", "p05"}, {"p05", "p00"}});
    CoverFamily f{CoverKind::TB, {c1, c2, c3}, {}};

    CoverWitness w1 = cover_check(hex, inv, f, 1);
    CHECK(w1.index == 1);
    CHECK(w1.simplex == by_names(hex, {"p01"}));
    CoverWitness w2 = cover_check(hex, inv, f, 2);
    CHECK(w2.simplex == by_names(hex, {"p02"}));

    CHECK(thrown_code([&] { cover_check(hex, inv, f); }) == ErrorCode::BadInput);
    CHECK(thrown_code([&] { cover_check(hex, inv, f, 3); }) == ErrorCode::BadInput);

    SimplicialComplex wide =
        sub(hex, "c3wide", {{"p03", "p04"}, {"p04", "p05"}, {"p05", "p00"}});
    CoverFamily paired{CoverKind::TB, {c1, c2, wide}, {}};
    CHECK(thrown_code([&] { cover_check(hex, inv, paired, 1); }) == ErrorCode::BadPairing);

    /* Free action on two hexagon components: the cover exists but no point
     * splits across the j-cut. */
    std::vector<std::vector<std::string>> two;
    for (int i = 0; i < 6; ++i) {
      two.push_back({padded("p", i), padded("p", (i + 1) % 6)});
      two.push_back({padded("q", i), padded("q", (i + 1) % 6)});
    }
    SimplicialComplex dbl = SimplicialComplex::from_facets("double", two);
    std::map<std::string, std::string> act;
    for (int i = 0; i < 6; ++i) {
      act[padded("p", i)] = padded("q", i);
      act[padded("q", i)] = padded("p", i);
    }
    FreeInvolution dinv = check_free_involution(dbl, act);
    std::vector<std::vector<std::string>> pf, qf;
    for (int i = 0; i < 6; ++i) {
      pf.push_back({padded("p", i), padded("p", (i + 1) % 6)});
      qf.push_back({padded("q", i), padded("q", (i + 1) % 6)});
    }
    CoverFamily split{CoverKind::TB,
                      {SimplicialComplex::from_facets("ph", pf),
                       SimplicialComplex::from_facets("qh", qf),
                       sub(dbl, "pt", {{"p00"}})},
                      {}};
    CHECK(thrown_code([&] { cover_check(dbl, dinv, split, 1); }) == ErrorCode::NoWitness);
  }
}

TEST_CASE("kakutani selections") {
  SimplicialComplex oct = octahedron();
  FreeInvolution a = octahedron_antipode(oct);
  EquivariantComplex e{oct, a, {}};

  auto pt = [&](const std::string& n) { return static_cast<size_t>(*oct.find_vertex(n)); };
  std::vector<std::vector<Rat>> flat(6, std::vector<Rat>(2, Rat(0)));
  flat[pt("x+")] = {Rat(1), Rat(0)};
  flat[pt("x-")] = {Rat(-1), Rat(0)};
  flat[pt("y+")] = {Rat(0), Rat(1)};
  flat[pt("y-")] = {Rat(0), Rat(-1)};

  SUBCASE("a vertex already selects zero") {
    SetValuedSelection sel = check_selection(e, 2, flat);
    KakutaniWitness w = kakutani_pl_zero(e, sel);
    CHECK(w.simplex == by_names(oct, {"z+"}));
    CHECK(w.lambda == std::vector<Rat>{Rat(1)});
  }

  SUBCASE("zero inside a triangle") {
    std::vector<std::vector<Rat>> y = flat;
    y[pt("z+")] = {Rat(1), Rat(1)};
    y[pt("z-")] = {Rat(-1), Rat(-1)};
    SetValuedSelection sel = check_selection(e, 2, y);
    KakutaniWitness w = kakutani_pl_zero(e, sel);
    CHECK(w.simplex == by_names(oct, {"x+", "y+", "z-"}));
    for (const Rat& x : w.lambda) CHECK(x == Rat(1, 3));
  }

  SUBCASE("validation") {
    std::vector<std::vector<Rat>> y = flat;
    y[pt("x-")] = {Rat(1), Rat(0)};
    CHECK(thrown_code([&] { check_selection(e, 2, y); }) == ErrorCode::NotAntipodal);
    CHECK(thrown_code([&] { check_selection(e, 2, {{Rat(0)}}); }) == ErrorCode::BadInput);

    SimplicialComplex pair = SimplicialComplex::from_facets("pair", {{"a"}, {"b"}});
    FreeInvolution swap = check_free_involution(pair, {{"a", "b"}, {"b", "a"}});
    EquivariantComplex ep{pair, swap, {}};
    SetValuedSelection far = check_selection(ep, 1, {{Rat(1)}, {Rat(-1)}});
    CHECK(thrown_code([&] { kakutani_pl_zero(ep, far); }) == ErrorCode::NoWitness);
  }
}
