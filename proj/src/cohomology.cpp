#include "yangdex/cohomology.hpp"

#include <algorithm>
#include <mutex>

#include "yangdex/errors.hpp"

namespace yangdex {

namespace {

/* Build-once storage on the complex, keyed by derived-data name.  The
 * factory runs outside the lock because factories call back into cached()
 * for their own inputs; a lost insertion race only wastes the rebuild. */
template <typename T, typename F>
const T& cached(const SimplicialComplex& k, const std::string& key, F&& make) {
  auto& cache = k.cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return *static_cast<const T*>(it->second.get());
  }
  std::shared_ptr<const T> value = std::make_shared<T>(make());
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto it = cache.entries.emplace(key, std::static_pointer_cast<const void>(value)).first;
  return *static_cast<const T*>(it->second.get());
}

int face_count(const SimplicialComplex& k, int deg) {
  return static_cast<int>(k.faces(deg).size());
}

GF2Matrix build_coboundary_gf2(const SimplicialComplex& k, int deg) {
  GF2Matrix m(face_count(k, deg + 1), face_count(k, deg));
  if (deg < 0) return m;
  const auto& tops = k.faces(deg + 1);
  for (size_t t = 0; t < tops.size(); ++t) {
    const Simplex& s = tops[t];
    Simplex face(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face[w++] = s[i];
      int fi = k.face_index(face);
      require_internal(fi >= 0, "face lattice not closed");
      m.set(static_cast<int>(t), fi, true);
    }
  }
  return m;
}

IntMatrix build_coboundary_int(const SimplicialComplex& k, int deg) {
  IntMatrix m(face_count(k, deg + 1), face_count(k, deg));
  if (deg < 0) return m;
  const auto& tops = k.faces(deg + 1);
  for (size_t t = 0; t < tops.size(); ++t) {
    const Simplex& s = tops[t];
    Simplex face(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face[w++] = s[i];
      int fi = k.face_index(face);
      require_internal(fi >= 0, "face lattice not closed");
      m.at(static_cast<int>(t), fi) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace

const GF2Matrix& coboundary_gf2(const SimplicialComplex& k, int deg) {
  return cached<GF2Matrix>(k, "cob2:" + std::to_string(deg),
                           [&] { return build_coboundary_gf2(k, deg); });
}

const IntMatrix& coboundary_int(const SimplicialComplex& k, int deg) {
  return cached<IntMatrix>(k, "cobz:" + std::to_string(deg),
                           [&] { return build_coboundary_int(k, deg); });
}

bool is_cocycle_gf2(const SimplicialComplex& k, int deg, const std::vector<uint8_t>& c) {
  require_internal(static_cast<int>(c.size()) == face_count(k, deg), "cochain has wrong length");
  return gf2_is_zero(coboundary_gf2(k, deg).apply(c));
}

bool is_coboundary_gf2(const SimplicialComplex& k, int deg, const std::vector<uint8_t>& c) {
  require_internal(static_cast<int>(c.size()) == face_count(k, deg), "cochain has wrong length");
  return coboundary_gf2(k, deg - 1).solve(c).has_value();
}

std::vector<int> betti_gf2(const SimplicialComplex& k) {
  std::vector<int> betti;
  int rank_below = 0;  // rank of the coboundary entering the current degree
  for (int deg = 0; deg <= k.dim(); ++deg) {
    int rank_here = coboundary_gf2(k, deg).rank();
    betti.push_back(face_count(k, deg) - rank_here - rank_below);
    rank_below = rank_here;
  }
  return betti;
}

int euler_characteristic(const SimplicialComplex& k) {
  int chi = 0;
  int sign = 1;
  for (int f : k.f_vector()) {
    chi += sign * f;
    sign = -sign;
  }
  return chi;
}

std::vector<uint8_t> Gf2Cohomology::coordinates(const std::vector<uint8_t>& cocycle) const {
  require_internal(static_cast<int>(cocycle.size()) == delta_.cols(),
                   "cochain has wrong length");
  if (!gf2_is_zero(delta_.apply(cocycle)))
    fail(ErrorCode::NotCocycle, "cochain is not closed in degree " + std::to_string(deg_));
  if (basis_.empty() && prev_cols_ == 0) return {};
  auto x = decompose_.solve(cocycle);
  require_internal(x.has_value(), "cocycle escapes kernel decomposition");
  return std::vector<uint8_t>(x->begin() + prev_cols_, x->end());
}

bool Gf2Cohomology::class_is_zero(const std::vector<uint8_t>& cocycle) const {
  return gf2_is_zero(coordinates(cocycle));
}

namespace {

/* Incremental GF(2) span: insert returns true when the vector enlarges it. */
class EchelonSpan {
 public:
  bool insert(std::vector<uint8_t> v) {
    for (const auto& [pivot, row] : rows_)
      if (v[pivot]) gf2_add_into(v, row);
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i]) {
        rows_.push_back({i, std::move(v)});
        return true;
      }
    return false;
  }

 private:
  std::vector<std::pair<size_t, std::vector<uint8_t>>> rows_;
};

}  // namespace

const Gf2Cohomology& gf2_cohomology(const SimplicialComplex& k, int deg) {
  return cached<Gf2Cohomology>(k, "coh2:" + std::to_string(deg), [&] {
    Gf2Cohomology h;
    h.deg_ = deg;
    h.delta_ = coboundary_gf2(k, deg);
    const GF2Matrix& prev = coboundary_gf2(k, deg - 1);
    h.prev_cols_ = prev.cols();
    const int n = face_count(k, deg);

    /* Kernel vectors outside the coboundary image span become the basis. */
    EchelonSpan span;
    GF2Matrix prev_t = prev.transposed();
    for (int c = 0; c < prev_t.rows(); ++c) span.insert(prev_t.row(c));
    for (const auto& z : h.delta_.nullspace())
      if (span.insert(z)) h.basis_.push_back(z);

    GF2Matrix decompose(n, prev.cols() + static_cast<int>(h.basis_.size()));
    for (int r = 0; r < prev.rows(); ++r)
      for (int c = 0; c < prev.cols(); ++c)
        if (prev.get(r, c)) decompose.set(r, c, true);
    for (size_t b = 0; b < h.basis_.size(); ++b)
      for (int r = 0; r < n; ++r)
        if (h.basis_[b][static_cast<size_t>(r)])
          decompose.set(r, prev.cols() + static_cast<int>(b), true);
    h.decompose_ = std::move(decompose);
    return h;
  });
}

IntCohomology integer_cohomology(const SimplicialComplex& k, int deg) {
  return cached<IntCohomology>(k, "cohz:" + std::to_string(deg), [&] {
    IntCohomology h;
    if (deg < 0 || deg > k.dim()) return h;
    auto out_snf = smith_normal_form(coboundary_int(k, deg));
    auto in_snf = smith_normal_form(coboundary_int(k, deg - 1));
    h.free_rank = face_count(k, deg) - out_snf.rank - in_snf.rank;
    for (const Int& d : in_snf.diagonal)
      if (d > 1) h.torsion.push_back(d);
    return h;
  });
}

std::vector<Int> IntCohomologyModel::coordinates(const std::vector<Int>& cocycle) const {
  require_internal(static_cast<int>(cocycle.size()) == delta_.cols,
                   "cochain has wrong length");
  for (const Int& v : delta_.apply(cocycle))
    if (v != 0)
      fail(ErrorCode::NotCocycle, "cochain is not closed in degree " + std::to_string(deg_));
  std::vector<Int> frame = uprime_.apply(kernel_coords_.apply(cocycle));
  std::vector<Int> out;
  out.reserve(kept_.size());
  for (size_t g = 0; g < kept_.size(); ++g) {
    Int value = frame[static_cast<size_t>(kept_[g])];
    const Int& order = orders_[g];
    if (order > 1) {
      value %= order;
      if (value < 0) value += order;
    }
    out.push_back(value);
  }
  return out;
}

bool IntCohomologyModel::class_is_zero(const std::vector<Int>& cocycle) const {
  for (const Int& v : coordinates(cocycle))
    if (v != 0) return false;
  return true;
}

const IntCohomologyModel& int_cohomology_model(const SimplicialComplex& k, int deg) {
  return cached<IntCohomologyModel>(k, "cohzm:" + std::to_string(deg), [&] {
    IntCohomologyModel model;
    model.deg_ = deg;
    model.delta_ = coboundary_int(k, deg);
    const int n = face_count(k, deg);

    auto out_snf = smith_normal_form(model.delta_, true);
    const int m = n - out_snf.rank;  // kernel rank

    /* Kernel coordinates: bottom m rows of V^-1 restrict to the kernel as
     * the inverse of the basis given by the last m columns of V. */
    model.kernel_coords_ = IntMatrix(m, n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c)
        model.kernel_coords_.at(r, c) = out_snf.v_inv->at(out_snf.rank + r, c);
    IntMatrix kernel_basis(n, m);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) kernel_basis.at(r, c) = out_snf.v->at(r, out_snf.rank + c);

    /* Relation matrix: coboundary image expressed in kernel coordinates. */
    const IntMatrix& prev = coboundary_int(k, deg - 1);
    IntMatrix relations = model.kernel_coords_.multiplied(prev);
    {
      /* The top rank(delta) rows of V^-1 * prev must vanish. */
      IntMatrix full = out_snf.v_inv->multiplied(prev);
      for (int r = 0; r < out_snf.rank; ++r)
        for (int c = 0; c < full.cols; ++c)
          require_internal(full.at(r, c) == 0, "coboundary image escapes the kernel");
    }

    auto rel_snf = smith_normal_form(relations, true);
    model.uprime_ = *rel_snf.u;
    model.frame_orders_.assign(static_cast<size_t>(m), Int(0));
    for (int i = 0; i < rel_snf.rank; ++i) model.frame_orders_[static_cast<size_t>(i)] = rel_snf.diagonal[static_cast<size_t>(i)];

    for (int i = 0; i < m; ++i) {
      const Int& d = model.frame_orders_[static_cast<size_t>(i)];
      if (d == 1) continue;  // trivial generator
      model.kept_.push_back(i);
      model.orders_.push_back(d);
    }

    /* Generator cocycles: columns of kernel_basis * U'^{-1} at kept rows. */
    IntMatrix gen = kernel_basis.multiplied(*rel_snf.u_inv);
    for (int idx : model.kept_) {
      std::vector<Int> g(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r) g[static_cast<size_t>(r)] = gen.at(r, idx);
      model.generators_.push_back(std::move(g));
    }

    /* Cross-check against the rank-counting route. */
    IntCohomology direct = integer_cohomology(k, deg);
    int free_here = 0;
    std::vector<Int> torsion_here;
    for (const Int& d : model.orders_) {
      if (d == 0)
        ++free_here;
      else
        torsion_here.push_back(d);
    }
    require_internal(free_here == direct.free_rank, "free rank mismatch between models");
    require_internal(torsion_here == direct.torsion, "torsion mismatch between models");
    return model;
  });
}

std::vector<uint8_t> cup_gf2(const SimplicialComplex& k, int p, const std::vector<uint8_t>& a,
                             int q, const std::vector<uint8_t>& b) {
  require_internal(static_cast<int>(a.size()) == face_count(k, p), "cochain has wrong length");
  require_internal(static_cast<int>(b.size()) == face_count(k, q), "cochain has wrong length");
  const auto& tops = k.faces(p + q);
  std::vector<uint8_t> out(tops.size(), 0);
  for (size_t t = 0; t < tops.size(); ++t) {
    const Simplex& s = tops[t];
    Simplex front(s.begin(), s.begin() + p + 1);
    Simplex back(s.begin() + p, s.end());
    int fi = k.face_index(front);
    int bi = k.face_index(back);
    require_internal(fi >= 0 && bi >= 0, "face lattice not closed");
    out[t] = static_cast<uint8_t>(a[static_cast<size_t>(fi)] & b[static_cast<size_t>(bi)]);
  }
  return out;
}

std::vector<uint8_t> pullback_gf2(const SimplicialMap& f, int deg, const std::vector<uint8_t>& c) {
  require_internal(static_cast<int>(c.size()) == face_count(f.target, deg),
                   "cochain has wrong length");
  const auto& sources = f.source.faces(deg);
  std::vector<uint8_t> out(sources.size(), 0);
  for (size_t i = 0; i < sources.size(); ++i) {
    Simplex img = f.image(sources[i]);
    if (img.size() != sources[i].size()) continue;  // collapsed
    int ti = f.target.face_index(img);
    require_internal(ti >= 0, "map image is not a face");
    out[i] = c[static_cast<size_t>(ti)];
  }
  return out;
}

std::vector<Int> pullback_int(const SimplicialMap& f, int deg, const std::vector<Int>& c) {
  require_internal(static_cast<int>(c.size()) == face_count(f.target, deg),
                   "cochain has wrong length");
  const auto& sources = f.source.faces(deg);
  std::vector<Int> out(sources.size());
  for (size_t i = 0; i < sources.size(); ++i) {
    const Simplex& s = sources[i];
    std::vector<Vertex> image_in_order;
    image_in_order.reserve(s.size());
    for (Vertex v : s) image_in_order.push_back(f.vertex_map[static_cast<size_t>(v)]);
    int inversions = 0;
    bool collapsed = false;
    for (size_t x = 0; x < image_in_order.size() && !collapsed; ++x)
      for (size_t y = x + 1; y < image_in_order.size(); ++y) {
        if (image_in_order[x] == image_in_order[y]) {
          collapsed = true;
          break;
        }
        if (image_in_order[x] > image_in_order[y]) ++inversions;
      }
    if (collapsed) continue;
    Simplex img = f.image(s);
    int ti = f.target.face_index(img);
    require_internal(ti >= 0, "map image is not a face");
    out[i] = (inversions % 2 == 0) ? c[static_cast<size_t>(ti)] : -c[static_cast<size_t>(ti)];
  }
  return out;
}

}  // namespace yangdex
