#include "omt/geometry.hpp"

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "omt/combinat.hpp"
#include "omt/error.hpp"
#include "omt/matrix.hpp"
#include "omt/symmetry.hpp"

namespace omt {

namespace {

using nlohmann::json;

NumField deduced_field(const std::vector<std::vector<QuadExt>>& points) {
  for (const auto& p : points)
    for (const auto& c : p)
      if (!c.is_rational()) return NumField::QSqrt5;
  return NumField::Q;
}

void validate_shape(const PointConfig& cfg, const char* who) {
  if (cfg.dim < 1)
    throw std::invalid_argument(std::string(who) + ": dimension must be positive");
  for (const auto& p : cfg.points)
    if (static_cast<int>(p.size()) != cfg.dim)
      throw std::invalid_argument(std::string(who) + ": point arity mismatch");
}

}  // namespace

std::string PointConfig::to_json() const {
  json j;
  j["dim"] = dim;
  j["field"] = field == NumField::Q ? "Q" : "Q(sqrt5)";
  json rows = json::array();
  for (const auto& p : points) {
    json row = json::array();
    for (const auto& c : p) row.push_back(to_string(c));
    rows.push_back(std::move(row));
  }
  j["points"] = std::move(rows);
  return j.dump(2) + "\n";
}

PointConfig PointConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("point file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("field") || !j.contains("points"))
    throw std::invalid_argument("point file needs dim, field and points");
  if (!j["dim"].is_number_integer())
    throw std::invalid_argument("dim must be an integer");
  PointConfig cfg;
  cfg.dim = j["dim"].get<int>();
  if (!j["field"].is_string())
    throw std::invalid_argument("field must be \"Q\" or \"Q(sqrt5)\"");
  std::string field = j["field"].get<std::string>();
  if (field == "Q") cfg.field = NumField::Q;
  else if (field == "Q(sqrt5)") cfg.field = NumField::QSqrt5;
  else throw std::invalid_argument("field must be \"Q\" or \"Q(sqrt5)\"");
  if (!j["points"].is_array())
    throw std::invalid_argument("points must be an array");
  for (const auto& row : j["points"]) {
    if (!row.is_array())
      throw std::invalid_argument("each point must be an array of coordinates");
    std::vector<QuadExt> p;
    for (const auto& c : row) {
      std::string lit;
      if (c.is_string()) lit = c.get<std::string>();
      else if (c.is_number_integer()) lit = std::to_string(c.get<long long>());
      else
        throw std::invalid_argument(
            "coordinates must be exact (strings or integers), got " + c.dump());
      p.push_back(cfg.field == NumField::Q ? QuadExt(parse_rational(lit))
                                           : parse_quadext(lit));
    }
    cfg.points.push_back(std::move(p));
  }
  validate_shape(cfg, "point file");
  return cfg;
}

Chirotope chirotope_from_points(const PointConfig& cfg) {
  validate_shape(cfg, "chirotope_from_points");
  int d = cfg.dim, n = cfg.size();
  if (n < d + 1)
    throw std::invalid_argument("chirotope_from_points: need at least dim+1 points");
  if (n > kMaxGroundSize)
    throw std::invalid_argument("chirotope_from_points: too many points");
  int r = d + 1;
  std::vector<Sign> signs(binom(n, r));
  std::vector<int> s = first_subset(r);
  std::size_t idx = 0;
  do {
    Matrix<QuadExt> m(r, std::vector<QuadExt>(r));
    for (int i = 0; i < r; ++i) {
      const auto& p = cfg.points[s[i] - 1];
      for (int c = 0; c < d; ++c) m[i][c] = p[c];
      m[i][d] = 1;
    }
    signs[idx++] = det_sign(std::move(m));
  } while (next_subset(s, n));
  return Chirotope(r, n, std::move(signs));
}

namespace {

// Exact convex polygons, counterclockwise, centroid at the origin, carrying
// an order-n linear rotation (and a linear reflection, hence the full
// dihedral action). 3, 4, 6 come from lattices; 5 is the orbit of (1,0)
// under [[0,-1],[1,t]] with t = (sqrt5-1)/2.
PointConfig polygon_config(int n) {
  PointConfig cfg;
  cfg.dim = 2;
  switch (n) {
    case 3:
      cfg.points = {{1, 0}, {0, 1}, {-1, -1}};
      break;
    case 4:
      cfg.points = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      break;
    case 5: {
      QuadExt t(Rational(-1) / 2, Rational(1) / 2);
      cfg.points = {{1, 0}, {0, 1}, {QuadExt(-1), t}, {-t, -t}, {t, QuadExt(-1)}};
      break;
    }
    case 6:
      cfg.points = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
      break;
    default:
      throw std::invalid_argument("no exact polygon with " + std::to_string(n) +
                                  " vertices (supported: 3, 4, 5, 6)");
  }
  cfg.field = deduced_field(cfg.points);
  return cfg;
}

PointConfig lift_to_z(const PointConfig& flat, const QuadExt& z) {
  PointConfig out;
  out.dim = 3;
  for (const auto& p : flat.points) out.points.push_back({p[0], p[1], z});
  out.field = flat.field;
  return out;
}

void append_points(PointConfig& dst, const PointConfig& src) {
  dst.points.insert(dst.points.end(), src.points.begin(), src.points.end());
}

}  // namespace

PointConfig example_config(const std::string& name, int param) {
  auto no_param = [&] {
    if (param != 0)
      throw std::invalid_argument("example '" + name + "' does not take a parameter");
  };
  PointConfig cfg;
  cfg.dim = 3;

  if (name == "paper8") {
    no_param();
    // Triangular prism plus two points on a skew transversal. The two extra
    // points must avoid every plane spanned by three prism vertices (and
    // every line through two of them), so that the only degenerate
    // quadruples are the three rectangular faces; in particular they must
    // stay off the x = y plane, which carries the vertical edge at the
    // origin.
    Rational x7 = Rational(1) / 4, y7 = Rational(1) / 3;
    Rational x8 = Rational(1) / 5, y8 = Rational(1) / 7;
    cfg.points = {{0, 0, 0}, {0, 0, 1}, {1, 0, 0},      {1, 0, 1},
                  {0, 1, 0}, {0, 1, 1}, {x7, y7, -1},   {x8, y8, 2}};
  } else if (name == "P2") {
    no_param();
    cfg.points = {{-1, 1, 0}, {0, 1, 0},  {1, 1, 0}, {-1, -1, 0},
                  {0, -1, 0}, {1, -1, 0}, {0, 0, 1}};
  } else if (name == "P3") {
    no_param();
    cfg = lift_to_z(polygon_config(3), QuadExt(-2));
    append_points(cfg, lift_to_z(polygon_config(3), QuadExt(2)));
  } else if (name == "pyramid") {
    if (param < 4 || param > 6)
      throw std::invalid_argument("pyramid takes a vertex count in {4,5,6}");
    cfg = lift_to_z(polygon_config(param), QuadExt(0));
    cfg.points.push_back({0, 0, 1});
  } else if (name == "bipyramid") {
    if (param < 3 || param > 6)
      throw std::invalid_argument("bipyramid takes a vertex count in {3,4,5,6}");
    cfg = lift_to_z(polygon_config(param), QuadExt(0));
    cfg.points.push_back({0, 0, -1});
    cfg.points.push_back({0, 0, 1});
  } else if (name == "simplex") {
    no_param();
    cfg.points = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  } else if (name == "cube") {
    no_param();
    for (int x = 0; x <= 1; ++x)
      for (int y = 0; y <= 1; ++y)
        for (int z = 0; z <= 1; ++z) cfg.points.push_back({x, y, z});
  } else if (name == "icosahedron") {
    no_param();
    QuadExt phi(Rational(1) / 2, Rational(1) / 2);
    for (int axis = 0; axis < 3; ++axis) {
      for (int s1 = 1; s1 >= -1; s1 -= 2) {
        for (int s2 = 1; s2 >= -1; s2 -= 2) {
          QuadExt one(s1), gold = s2 == 1 ? phi : -phi;
          std::vector<QuadExt> p(3, QuadExt(0));
          p[(axis + 1) % 3] = one;
          p[(axis + 2) % 3] = gold;
          cfg.points.push_back(std::move(p));
        }
      }
    }
  } else if (name == "polygon") {
    if (param < 3 || param > 6)
      throw std::invalid_argument("polygon takes a vertex count in {3,4,5,6}");
    return polygon_config(param);
  } else {
    throw std::invalid_argument("unknown example '" + name + "'");
  }
  cfg.field = deduced_field(cfg.points);
  return cfg;
}

namespace {

int matrix_rank(Matrix<QuadExt> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == QuadExt(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == QuadExt(0)) continue;
      QuadExt f = m[i][c] / m[rank][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[i][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<QuadExt> homogenized(const PointConfig& cfg, int i) {
  std::vector<QuadExt> v = cfg.points[i - 1];
  v.push_back(QuadExt(1));
  return v;
}

}  // namespace

bool is_generic_point(const PointConfig& cfg, int i) {
  validate_shape(cfg, "is_generic_point");
  int n = cfg.size();
  if (i < 1 || i > n)
    throw std::invalid_argument("is_generic_point: index out of range");
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    for (int k = j + 1; k <= n; ++k) {
      if (k == i) continue;
      Matrix<QuadExt> m{homogenized(cfg, i), homogenized(cfg, j), homogenized(cfg, k)};
      if (matrix_rank(std::move(m)) <= 2) return false;
    }
  }
  return true;
}

GapResult gap_construction(const PointConfig& base, const Permutation& sigma,
                           const GapOptions& options) {
  validate_shape(base, "gap_construction");
  int n = base.size();
  if (base.dim != 2)
    throw std::invalid_argument("gap_construction: base must be planar");
  if (n < 3)
    throw std::invalid_argument("gap_construction: need at least 3 base points");
  if (2 * n + 2 > kMaxGroundSize)
    throw std::invalid_argument("gap_construction: base too large");
  if (sigma.size() != n)
    throw std::invalid_argument("gap_construction: sigma size mismatch");
  if (sigma.order() <= 2)
    throw std::invalid_argument("gap_construction: sigma must have order greater than 2");

  // sigma must be realized by an exact orientation-preserving affine map:
  // solve for it on an affinely independent triple, then check every point.
  {
    std::vector<int> supp;
    for (int i = 1; i <= n && supp.size() < 3; ++i) {
      Matrix<QuadExt> trial;
      for (int s : supp) trial.push_back(homogenized(base, s));
      trial.push_back(homogenized(base, i));
      if (matrix_rank(trial) == static_cast<int>(supp.size()) + 1) supp.push_back(i);
    }
    if (supp.size() < 3)
      throw std::invalid_argument("gap_construction: base points are collinear");
    Matrix<QuadExt> v(3, std::vector<QuadExt>(3)), w(3, std::vector<QuadExt>(3));
    for (int c = 0; c < 3; ++c) {
      auto src = homogenized(base, supp[c]);
      auto dst = homogenized(base, sigma(supp[c]));
      for (int r = 0; r < 3; ++r) {
        v[r][c] = src[r];
        w[r][c] = dst[r];
      }
    }
    auto vinv = inverse(std::move(v));
    Matrix<QuadExt> m = multiply(w, *vinv);
    for (int i = 1; i <= n; ++i) {
      auto src = homogenized(base, i);
      auto dst = homogenized(base, sigma(i));
      for (int r = 0; r < 3; ++r) {
        QuadExt acc(0);
        for (int c = 0; c < 3; ++c) acc += m[r][c] * src[c];
        if (acc != dst[r])
          throw std::invalid_argument(
              "gap_construction: sigma is not an exact affine symmetry of the base");
      }
    }
    if (det_sign(std::move(m)) != Sign::Plus)
      throw std::invalid_argument("gap_construction: sigma reverses orientation");
  }

  std::vector<int> timg(static_cast<std::size_t>(2 * n + 2));
  for (int i = 1; i <= n; ++i) {
    timg[i - 1] = sigma(i);
    timg[n + i - 1] = n + sigma(i);
  }
  timg[2 * n] = 2 * n + 1;
  timg[2 * n + 1] = 2 * n + 2;
  Permutation tau(std::move(timg));

  PointConfig stacked = lift_to_z(base, QuadExt(0));
  append_points(stacked, lift_to_z(base, QuadExt(1)));

  // Runs every requirement on a fully assembled configuration. `reason`
  // stays empty on success.
  auto attempt = [&](const std::vector<QuadExt>& q1, const std::vector<QuadExt>& q2,
                     GapResult& out) -> std::string {
    PointConfig cfg = stacked;
    cfg.points.push_back(q1);
    cfg.points.push_back(q2);
    cfg.field = deduced_field(cfg.points);
    if (q1[0] == q2[0] && q1[1] == q2[1])
      return "the joint line is parallel to the stacking direction";
    if (!is_generic_point(cfg, 2 * n + 1))
      return "joint point " + std::to_string(2 * n + 1) + " is not generic";
    if (!is_generic_point(cfg, 2 * n + 2))
      return "joint point " + std::to_string(2 * n + 2) + " is not generic";
    Chirotope chi = chirotope_from_points(cfg);
    for (int i = 1; i <= n; ++i) {
      std::array<int, 4> quad{i, n + i, 2 * n + 1, 2 * n + 2};
      if (chi.value(std::span<const int>(quad.data(), 4)) == Sign::Zero)
        return "joint points are coplanar with stacked pair " + std::to_string(i);
    }
    if (!verify_m_symmetry(chi, tau))
      return "tau does not preserve the basis structure";
    out = GapResult{std::move(cfg), tau, std::move(chi)};
    return {};
  };

  if (options.q1.has_value() != options.q2.has_value())
    throw std::invalid_argument("gap_construction: provide both joint points or neither");

  GapResult result{PointConfig{}, tau, Chirotope(0, 0, {Sign::Plus})};
  if (options.q1) {
    if (options.q1->size() != 3 || options.q2->size() != 3)
      throw std::invalid_argument("gap_construction: joint points must be 3-dimensional");
    std::string reason = attempt(*options.q1, *options.q2, result);
    if (!reason.empty()) throw ValidationError("gap_construction: " + reason);
    return result;
  }

  // Deterministic search: walk a square spiral of integer offsets around a
  // small-denominator anchor for each joint point. Every rejection comes
  // from finitely many degenerate planes and lines, and the spiral is not
  // contained in any of them, so the walk always escapes.
  std::vector<std::pair<int, int>> spiral{{0, 0}};
  {
    int x = 0, y = 0, dx = 1, dy = 0, leg = 1;
    while (spiral.size() < 64) {
      for (int rep = 0; rep < 2 && spiral.size() < 64; ++rep) {
        for (int s = 0; s < leg && spiral.size() < 64; ++s) {
          x += dx;
          y += dy;
          spiral.emplace_back(x, y);
        }
        std::swap(dx, dy);
        dx = -dx;
      }
      ++leg;
    }
  }
  auto low = [&](int j) -> std::vector<QuadExt> {
    return {QuadExt(Rational(1) / 4 + spiral[j].first),
            QuadExt(Rational(1) / 3 + spiral[j].second), QuadExt(-1)};
  };
  auto high = [&](int j) -> std::vector<QuadExt> {
    return {QuadExt(Rational(1) / 5 + spiral[j].first),
            QuadExt(Rational(1) / 7 + spiral[j].second), QuadExt(2)};
  };
  for (int total = 0; total < 64; ++total)
    for (int j1 = 0; j1 <= total; ++j1)
      if (attempt(low(j1), high(total - j1), result).empty()) return result;
  throw ValidationError("gap_construction: joint point search exhausted");
}

}  // namespace omt
