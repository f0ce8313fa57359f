#include "hda/cube.hpp"

#include "hda/errors.hpp"

namespace hda {

namespace {

std::string word_label(const Site& site, const Site::Morphism& m) {
  int n = site.object(m.target).degree;
  if (n == 0) return "()";
  int lo = m.eval.front(), hi = m.eval.back();
  std::string w;
  for (int j = 0; j < n; ++j) {
    int a = (lo >> j) & 1, b = (hi >> j) & 1;
    w += a == b ? static_cast<char>('0' + a) : '*';
  }
  return w;
}

// insert eps at coordinate i (1-based) of a mask with n-1 coordinates
int insert_bit(int p, int i, int eps) {
  int low = p & ((1 << (i - 1)) - 1);
  int high = p >> (i - 1);
  return low | (eps << (i - 1)) | (high << i);
}

std::shared_ptr<Site> build_cube_site() {
  auto site = std::make_shared<Site>("cube");
  for (int n = 0; n <= kCubeMaxDim; ++n) {
    int pts = 1 << n;
    std::vector<std::vector<bool>> leq(pts, std::vector<bool>(pts));
    for (int p = 0; p < pts; ++p)
      for (int q = 0; q < pts; ++q) leq[p][q] = (p & ~q) == 0;
    site->add_object("[" + std::to_string(n) + "]", n, std::move(leq));
  }
  for (int n = 1; n <= kCubeMaxDim; ++n)
    for (int i = 1; i <= n; ++i)
      for (int eps = 0; eps <= 1; ++eps) {
        std::vector<int> eval(1 << (n - 1));
        for (int p = 0; p < static_cast<int>(eval.size()); ++p) eval[p] = insert_bit(p, i, eps);
        site->add_generator("d(" + std::to_string(i) + "," + std::to_string(eps) + ")@" + std::to_string(n), n - 1, n,
                            std::move(eval));
      }
  site->set_labeler(word_label);
  return site;
}

void check_dim(int n) {
  if (n < 0 || n > kCubeMaxDim)
    throw InvalidInput("cube dimension " + std::to_string(n) + " outside 0.." + std::to_string(kCubeMaxDim));
}

}  // namespace

SitePtr cube_site() {
  static const SitePtr site = build_cube_site();
  return site;
}

int face_generator(int n, int i, int eps) {
  check_dim(n);
  if (i < 1 || i > n || eps < 0 || eps > 1) throw InvalidInput("face index out of range");
  int before = 0;
  for (int m = 1; m < n; ++m) before += 2 * m;
  return before + 2 * (i - 1) + eps;
}

PrecubicalSet empty_precubical() { return PrecubicalSet(cube_site()); }

PrecubicalSet standard_cube(int n) {
  check_dim(n);
  return representable(cube_site(), n);
}

PrecubicalSet boundary_cube(int n) {
  check_dim(n);
  return boundary(cube_site(), n);
}

int cube_dim(const PrecubicalSet& k) {
  for (int n = kCubeMaxDim; n >= 0; --n)
    if (k.count(n) > 0) return n;
  return -1;
}

std::vector<int> cube_counts(const PrecubicalSet& k) {
  std::vector<int> out;
  for (int n = 0; n <= cube_dim(k); ++n) out.push_back(k.count(n));
  return out;
}

int face(const PrecubicalSet& k, int n, int i, int eps, int x) { return k.map(face_generator(n, i, eps), x); }

void set_face(PrecubicalSet& k, int n, int i, int eps, int x, int y) { k.set_map(face_generator(n, i, eps), x, y); }

std::vector<std::string> validate_precubical(const PrecubicalSet& k) {
  std::vector<std::string> bad;
  auto d = [](int i, int e) { return "d(" + std::to_string(i) + "," + std::to_string(e) + ")"; };
  for (int n = 1; n <= kCubeMaxDim; ++n)
    for (int x = 0; x < k.count(n); ++x)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e)
          if (face(k, n, i, e, x) < 0) bad.push_back(d(i, e) + " unset at " + k.name(n, x));
  if (!bad.empty()) return bad;
  for (int n = 2; n <= kCubeMaxDim; ++n)
    for (int x = 0; x < k.count(n); ++x)
      for (int i = 1; i < n; ++i)
        for (int j = 1; j <= i; ++j)
          for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
              int lhs = face(k, n - 1, i, a, face(k, n, j, b, x));
              int rhs = face(k, n - 1, j, b, face(k, n, i + 1, a, x));
              if (lhs != rhs)
                bad.push_back(d(i, a) + d(j, b) + " != " + d(j, b) + d(i + 1, a) + " at " + k.name(n, x));
            }
  return bad;
}

PrecubicalSet attach_cubes(const PrecubicalSet& k, int n, const std::vector<PresheafMap>& along,
                           const std::vector<std::string>& names) {
  check_dim(n);
  return attach_cells(k, n, along, names);
}

PrecubicalSet reconstruct(const PrecubicalSet& k) {
  PrecubicalSet out = empty_precubical();
  for (int n = 0; n <= cube_dim(k); ++n) {
    std::vector<PresheafMap> along;
    std::vector<std::string> names;
    for (int x = 0; x < k.count(n); ++x) {
      along.push_back(boundary_map(k, n, x));
      names.push_back(k.name(n, x));
    }
    out = attach_cubes(out, n, along, names);
  }
  return out;
}

std::vector<GeneratingCofibration> generating_cofibrations(int max_n) {
  check_dim(max_n);
  std::vector<GeneratingCofibration> out;
  for (int n = 0; n <= max_n; ++n)
    out.push_back({"boundary[" + std::to_string(n) + "]", boundary_cube(n), standard_cube(n),
                   boundary_inclusion(*cube_site(), n), false});
  auto point = standard_cube(0);
  PresheafMap fold;
  fold.at.resize(kCubeMaxDim + 1);
  fold.at[0] = {0, 0};
  out.push_back({"fold", coproduct(point, point), point, fold, true});
  return out;
}

}  // namespace hda
