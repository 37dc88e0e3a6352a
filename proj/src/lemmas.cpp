#include "yangdex/lemmas.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "yangdex/errors.hpp"

namespace yangdex {

namespace {

void check_label_values(const std::vector<int>& labels, int m) {
  if (m < 1) fail(ErrorCode::BadInput, "label alphabet needs m >= 1");
  for (int l : labels)
    if (l == 0 || std::abs(l) > m)
      fail(ErrorCode::WrongAlphabet,
           "label " + std::to_string(l) + " outside {+-1..+-" + std::to_string(m) + "}");
}

void check_region_antipodality(const Labeling& l) {
  for (Vertex v : l.region) {
    Vertex w = l.partner[static_cast<size_t>(v)];
    if (l.labels[static_cast<size_t>(v)] != -l.labels[static_cast<size_t>(w)])
      fail(ErrorCode::NotAntipodal,
           "labels of " + l.complex.vertex_name(v) + " and " + l.complex.vertex_name(w) +
               " do not negate each other");
  }
}

std::vector<int> labels_from_map(const SimplicialComplex& k,
                                 const std::map<std::string, int>& by_name) {
  std::vector<int> labels(static_cast<size_t>(k.vertex_count()));
  for (Vertex v = 0; v < k.vertex_count(); ++v) {
    auto it = by_name.find(k.vertex_name(v));
    if (it == by_name.end())
      fail(ErrorCode::BadInput, "no label for vertex " + k.vertex_name(v));
    labels[static_cast<size_t>(v)] = it->second;
  }
  if (by_name.size() != static_cast<size_t>(k.vertex_count()))
    fail(ErrorCode::BadInput, "labeling names vertices the complex does not have");
  return labels;
}

/* Members of a cover family reduced to x's vertex ids. */
struct Member {
  std::set<Simplex> simplices;
};

Member resolve_member(const SimplicialComplex& x, const SimplicialComplex& sub) {
  SimplicialMap inc = inclusion_map(sub, x);
  Member m;
  for (int k = 0; k <= sub.dim(); ++k)
    for (const Simplex& s : sub.faces(k)) m.simplices.insert(inc.image(s));
  return m;
}

Simplex apply_involution(const FreeInvolution& a, const Simplex& s) {
  Simplex t;
  t.reserve(s.size());
  for (Vertex v : s) t.push_back(a(v));
  std::sort(t.begin(), t.end());
  return t;
}

/* Deterministic scan order: low dimension first, then lexicographic. */
std::vector<Simplex> ordered(const Member& m) {
  std::vector<Simplex> out(m.simplices.begin(), m.simplices.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return out;
}

void check_covers(const SimplicialComplex& x, const std::vector<const Member*>& members) {
  for (const Simplex& f : x.facet_list()) {
    bool found = false;
    for (const Member* m : members)
      if (m->simplices.count(f)) {
        found = true;
        break;
      }
    if (!found)
      fail(ErrorCode::NotACover, "facet " + x.simplex_label(f) + " is in no member");
  }
}

}  // namespace

Labeling check_labeling(const SimplicialComplex& k, const std::vector<int>& labels, int m,
                        const FreeInvolution& a) {
  if (labels.size() != static_cast<size_t>(k.vertex_count()))
    fail(ErrorCode::BadInput, "one label per vertex required");
  check_label_values(labels, m);
  Labeling l;
  l.complex = k;
  l.labels = labels;
  l.m = m;
  l.region.resize(static_cast<size_t>(k.vertex_count()));
  for (Vertex v = 0; v < k.vertex_count(); ++v) l.region[static_cast<size_t>(v)] = v;
  l.partner = a.action;
  check_region_antipodality(l);
  return l;
}

Labeling check_labeling(const SimplicialComplex& k,
                        const std::map<std::string, int>& labels, int m,
                        const FreeInvolution& a) {
  return check_labeling(k, labels_from_map(k, labels), m, a);
}

Labeling check_labeling_on(const SimplicialComplex& k, const std::vector<int>& labels,
                           int m, const SimplicialComplex& region,
                           const FreeInvolution& region_involution) {
  if (labels.size() != static_cast<size_t>(k.vertex_count()))
    fail(ErrorCode::BadInput, "one label per vertex required");
  check_label_values(labels, m);
  check_free_involution(region, region_involution.action);
  SimplicialMap inc = inclusion_map(region, k);
  Labeling l;
  l.complex = k;
  l.labels = labels;
  l.m = m;
  l.partner.assign(static_cast<size_t>(k.vertex_count()), kNoVertex);
  for (Vertex v = 0; v < region.vertex_count(); ++v) {
    l.region.push_back(inc(v));
    l.partner[static_cast<size_t>(inc(v))] = inc(region_involution(v));
  }
  std::sort(l.region.begin(), l.region.end());
  check_region_antipodality(l);
  return l;
}

std::vector<Simplex> complementary_edges(const Labeling& l) {
  std::vector<Simplex> out;
  for (const Simplex& e : l.complex.faces(1))
    if (l(e[0]) == -l(e[1])) out.push_back(e);
  return out;
}

namespace {

bool alternating(std::vector<int> labs, bool allow_negated) {
  std::sort(labs.begin(), labs.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (size_t i = 1; i < labs.size(); ++i)
    if (std::abs(labs[i]) == std::abs(labs[i - 1])) return false;
  int expect = labs[0] > 0 ? 1 : -1;
  if (expect < 0 && !allow_negated) return false;
  for (int l : labs) {
    if ((l > 0 ? 1 : -1) != expect) return false;
    expect = -expect;
  }
  return true;
}

}  // namespace

std::vector<Simplex> fan_simplices(const Labeling& l, bool same_sign_variant) {
  if (!complementary_edges(l).empty())
    fail(ErrorCode::HasComplementaryEdge, "the labeling has a complementary edge");
  std::vector<Simplex> out;
  for (const Simplex& s : l.complex.faces(l.complex.dim())) {
    std::vector<int> labs;
    labs.reserve(s.size());
    for (Vertex v : s) labs.push_back(l(v));
    if (alternating(std::move(labs), same_sign_variant)) out.push_back(s);
  }
  return out;
}

LabelPattern check_pattern(const std::vector<int>& labels) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end(),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (size_t i = 0; i < sorted.size(); ++i)
    if (std::abs(sorted[i]) != static_cast<int>(i) + 1)
      fail(ErrorCode::BadInput, "pattern needs exactly one label per absolute value 1..d+1");
  return LabelPattern{sorted};
}

ShashkinCount shashkin_count(const Labeling& l, const LabelPattern& pattern,
                             bool include_negation) {
  const SimplicialComplex& k = l.complex;
  int d = k.dim();
  if (static_cast<int>(pattern.labels.size()) != d + 1)
    fail(ErrorCode::BadInput, "pattern size must match the dimension plus one");
  if (l.m > d + 1)
    fail(ErrorCode::WrongAlphabet, "labels must range in the d+1 alphabet");
  if (!classify_pseudomanifold(k).is_almost_pseudomanifold)
    fail(ErrorCode::BadInput, "label counting needs an almost pseudomanifold");
  if (!complementary_edges(l).empty())
    fail(ErrorCode::HasComplementaryEdge, "the labeling has a complementary edge");

  std::vector<int> target = pattern.labels;
  std::sort(target.begin(), target.end());
  std::vector<int> negated;
  for (int x : target) negated.push_back(-x);
  std::sort(negated.begin(), negated.end());

  ShashkinCount out;
  for (const Simplex& s : k.faces(d)) {
    std::vector<int> labs;
    for (Vertex v : s) labs.push_back(l(v));
    std::sort(labs.begin(), labs.end());
    labs.erase(std::unique(labs.begin(), labs.end()), labs.end());
    if (labs == target || (include_negation && labs == negated)) ++out.count;
  }
  out.odd = out.count % 2 == 1;
  return out;
}

std::vector<Rat> PointConfiguration::at(int label) const {
  if (label == 0 || std::abs(label) > m)
    fail(ErrorCode::WrongAlphabet, "no point for label " + std::to_string(label));
  std::vector<Rat> p = positive[static_cast<size_t>(std::abs(label)) - 1];
  if (label < 0)
    for (Rat& c : p) c = -c;
  return p;
}

PointConfiguration check_points(int n, const std::vector<std::vector<Rat>>& positive) {
  if (n < 1 || positive.empty()) fail(ErrorCode::BadInput, "need points in Q^n, n >= 1");
  for (const auto& p : positive)
    if (static_cast<int>(p.size()) != n)
      fail(ErrorCode::BadInput, "every point needs exactly n coordinates");
  PointConfiguration c;
  c.m = static_cast<int>(positive.size());
  c.n = n;
  c.positive = positive;
  return c;
}

std::optional<std::vector<Rat>> origin_in_hull(const std::vector<std::vector<Rat>>& points,
                                               int n) {
  int count = static_cast<int>(points.size());
  require_internal(count <= 30, "hull query with too many points");
  for (uint32_t mask = 1; mask < (1u << count); ++mask) {
    int size = __builtin_popcount(mask);
    if (size > n + 1) continue;
    RatMatrix m(n + 1, size);
    std::vector<int> chosen;
    for (int i = 0; i < count; ++i)
      if (mask & (1u << i)) chosen.push_back(i);
    for (int c = 0; c < size; ++c) {
      for (int r = 0; r < n; ++r) m.at(r, c) = points[static_cast<size_t>(chosen[c])][r];
      m.at(n, c) = 1;
    }
    std::vector<Rat> rhs(static_cast<size_t>(n) + 1, Rat(0));
    rhs.back() = 1;
    auto solved = rational_solve(m, rhs);
    if (!solved) continue;
    bool nonneg = true;
    for (const Rat& x : solved->solution)
      if (x < 0) nonneg = false;
    if (!nonneg) continue;
    std::vector<Rat> lambda(points.size(), Rat(0));
    for (int c = 0; c < size; ++c)
      lambda[static_cast<size_t>(chosen[c])] = solved->solution[static_cast<size_t>(c)];
    return lambda;
  }
  return std::nullopt;
}

PnWitness pn_witness(const Labeling& l, const PointConfiguration& p) {
  if (l.m > p.m)
    fail(ErrorCode::WrongAlphabet, "labels exceed the point configuration");
  for (int k = 0; k <= l.complex.dim(); ++k) {
    for (const Simplex& s : l.complex.faces(k)) {
      std::vector<std::vector<Rat>> pts;
      pts.reserve(s.size());
      for (Vertex v : s) pts.push_back(p.at(l(v)));
      if (auto lambda = origin_in_hull(pts, p.n)) {
        PnWitness w;
        w.simplex = s;
        for (Vertex v : s) w.labels.push_back(l(v));
        w.lambda = *lambda;
        return w;
      }
    }
  }
  fail(ErrorCode::NoWitness, "no simplex captures the origin");
}

CoverWitness cover_check(const SimplicialComplex& x, const FreeInvolution& a,
                         const CoverFamily& cover, std::optional<int> j) {
  check_free_involution(x, a.action);
  switch (cover.kind) {
    case CoverKind::LS: {
      if (cover.sets.empty()) fail(ErrorCode::BadInput, "empty cover");
      std::vector<Member> members;
      for (const auto& s : cover.sets) members.push_back(resolve_member(x, s));
      std::vector<const Member*> all;
      for (const auto& m : members) all.push_back(&m);
      check_covers(x, all);
      for (size_t i = 0; i < members.size(); ++i)
        for (const Simplex& s : ordered(members[i]))
          if (members[i].simplices.count(apply_involution(a, s)))
            return CoverWitness{static_cast<int>(i) + 1, s};
      fail(ErrorCode::NoWitness, "no member meets its own image");
    }
    case CoverKind::T: {
      if (cover.pairs.empty()) fail(ErrorCode::BadInput, "empty cover");
      std::vector<std::pair<Member, Member>> members;
      for (const auto& [pos, neg] : cover.pairs)
        members.emplace_back(resolve_member(x, pos), resolve_member(x, neg));
      std::vector<const Member*> all;
      for (const auto& [pos, neg] : members) {
        all.push_back(&pos);
        all.push_back(&neg);
      }
      check_covers(x, all);
      for (size_t k = 0; k < members.size(); ++k) {
        std::set<Simplex> image;
        for (const Simplex& s : members[k].first.simplices)
          image.insert(apply_involution(a, s));
        if (image != members[k].second.simplices)
          fail(ErrorCode::BadPairing,
               "pair " + std::to_string(k + 1) + " is not antipodal");
      }
      for (size_t k = 0; k < members.size(); ++k)
        for (const Simplex& s : ordered(members[k].first))
          if (members[k].second.simplices.count(s))
            return CoverWitness{static_cast<int>(k) + 1, s};
      fail(ErrorCode::NoWitness, "no pair intersects");
    }
    case CoverKind::TB: {
      int n = static_cast<int>(cover.sets.size()) - 2;
      if (n < 0) fail(ErrorCode::BadInput, "a Tucker-Bacon cover needs n + 2 sets");
      if (!j || *j < 1 || *j > n + 1)
        fail(ErrorCode::BadInput, "j must lie in 1..n+1");
      std::vector<Member> members;
      for (const auto& s : cover.sets) members.push_back(resolve_member(x, s));
      std::vector<const Member*> all;
      for (const auto& m : members) all.push_back(&m);
      check_covers(x, all);
      for (size_t i = 0; i < members.size(); ++i)
        for (const Simplex& s : members[i].simplices)
          if (members[i].simplices.count(apply_involution(a, s)))
            fail(ErrorCode::BadPairing,
                 "set " + std::to_string(i + 1) + " contains an antipodal pair");
      auto intersect = [&](size_t from, size_t to) {
        std::set<Simplex> acc = members[from].simplices;
        for (size_t i = from + 1; i < to; ++i) {
          std::set<Simplex> next;
          for (const Simplex& s : acc)
            if (members[i].simplices.count(s)) next.insert(s);
          acc = std::move(next);
        }
        return acc;
      };
      std::set<Simplex> front = intersect(0, static_cast<size_t>(*j));
      std::set<Simplex> back = intersect(static_cast<size_t>(*j), members.size());
      Member front_member{front};
      for (const Simplex& s : ordered(front_member))
        if (back.count(apply_involution(a, s))) return CoverWitness{*j, s};
      fail(ErrorCode::NoWitness, "the split intersections share no antipodal simplex");
    }
  }
  fail(ErrorCode::BadInput, "unknown cover kind");
}

SetValuedSelection check_selection(const EquivariantComplex& e, int n,
                                   const std::vector<std::vector<Rat>>& y) {
  if (n < 1) fail(ErrorCode::BadInput, "selection target dimension must be positive");
  if (y.size() != static_cast<size_t>(e.complex.vertex_count()))
    fail(ErrorCode::BadInput, "one selected point per vertex required");
  for (const auto& p : y)
    if (static_cast<int>(p.size()) != n)
      fail(ErrorCode::BadInput, "every selected point needs exactly n coordinates");
  for (Vertex v = 0; v < e.complex.vertex_count(); ++v) {
    const auto& a = y[static_cast<size_t>(v)];
    const auto& b = y[static_cast<size_t>(e.involution(v))];
    for (int i = 0; i < n; ++i)
      if (a[static_cast<size_t>(i)] != -b[static_cast<size_t>(i)])
        fail(ErrorCode::NotAntipodal,
             "selection at " + e.complex.vertex_name(v) + " is not negated at its image");
  }
  return SetValuedSelection{n, y};
}

KakutaniWitness kakutani_pl_zero(const EquivariantComplex& e,
                                 const SetValuedSelection& sel) {
  for (int k = 0; k <= e.complex.dim(); ++k) {
    for (const Simplex& s : e.complex.faces(k)) {
      std::vector<std::vector<Rat>> pts;
      pts.reserve(s.size());
      for (Vertex v : s) pts.push_back(sel.y[static_cast<size_t>(v)]);
      if (auto lambda = origin_in_hull(pts, sel.n))
        return KakutaniWitness{s, *lambda};
    }
  }
  fail(ErrorCode::NoWitness, "no simplex hull captures the origin");
}

}  // namespace yangdex
