#include "indefmass/rootscan.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include <fmt/format.h>

#include "indefmass/errors.hpp"

namespace indefmass {
namespace {

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

class Isolator {
 public:
  Isolator(const ScalarFunction& f, const ScanSettings& s, std::vector<Bracket>& out)
      : f_(f), s_(s), out_(out) {}

  // [l, r] has a strict sign change.
  void refine_crossing(double l, double fl, double r, double fr, int depth) {
    std::vector<double> xs, fs;
    subsample(l, fl, r, fr, xs, fs);
    const std::size_t found = count_changes(xs, fs);
    if (found == 1) {
      emit_changes(xs, fs, depth, /*recurse=*/false);
      return;
    }
    if (depth >= s_.max_depth) {
      throw RefinementError(fmt::format(
          "window too coarse: {} sign changes inside [{}, {}] at maximum refinement", found, l,
          r));
    }
    emit_changes(xs, fs, depth, /*recurse=*/true);
  }

  // Sign-free cell next to a sampled minimum of |f|.
  void refine_suspect(double l, double fl, double r, double fr, int depth) {
    std::vector<double> xs, fs;
    subsample(l, fl, r, fr, xs, fs);
    if (count_changes(xs, fs) > 0) {
      if (depth >= s_.max_depth && count_changes(xs, fs) > 1) {
        throw RefinementError(fmt::format(
            "window too coarse: root pair inside [{}, {}] at maximum refinement", l, r));
      }
      emit_changes(xs, fs, depth, /*recurse=*/depth < s_.max_depth);
      return;
    }
    if (depth >= s_.max_depth) return;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
      if (local_min(fs, i)) {
        refine_suspect(xs[i - 1], fs[i - 1], xs[i], fs[i], depth + 1);
        refine_suspect(xs[i], fs[i], xs[i + 1], fs[i + 1], depth + 1);
      }
    }
  }

  static bool local_min(const std::vector<double>& fs, std::size_t i) {
    return std::fabs(fs[i]) < std::fabs(fs[i - 1]) && std::fabs(fs[i]) < std::fabs(fs[i + 1]) &&
           !opposite(fs[i - 1], fs[i]) && !opposite(fs[i], fs[i + 1]);
  }

 private:
  void subsample(double l, double fl, double r, double fr, std::vector<double>& xs,
                 std::vector<double>& fs) const {
    const int n = s_.refine_factor;
    xs.resize(n + 1);
    fs.resize(n + 1);
    xs[0] = l;
    fs[0] = fl;
    xs[n] = r;
    fs[n] = fr;
    for (int k = 1; k < n; ++k) {
      xs[k] = l + (r - l) * k / n;
      fs[k] = f_(xs[k]);
    }
  }

  // Strict sign changes between neighbours plus exact interior zeros.
  static std::size_t count_changes(const std::vector<double>& xs, const std::vector<double>& fs) {
    std::size_t c = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      if (opposite(fs[i], fs[i + 1])) ++c;
    for (std::size_t i = 1; i + 1 < xs.size(); ++i)
      if (fs[i] == 0.0) ++c;
    return c;
  }

  void emit_changes(const std::vector<double>& xs, const std::vector<double>& fs, int depth,
                    bool recurse) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (i > 0 && fs[i] == 0.0) out_.push_back({xs[i], xs[i]});
      if (!opposite(fs[i], fs[i + 1])) continue;
      if (recurse)
        refine_crossing(xs[i], fs[i], xs[i + 1], fs[i + 1], depth + 1);
      else
        out_.push_back({xs[i], xs[i + 1]});
    }
  }

  const ScalarFunction& f_;
  const ScanSettings& s_;
  std::vector<Bracket>& out_;
};

}  // namespace

std::vector<Bracket> isolate_sign_changes(const ScalarFunction& f, double lo, double hi,
                                          const ScanSettings& settings) {
  if (!(lo < hi)) throw InvalidArgument(fmt::format("scan interval [{}, {}] is empty", lo, hi));
  if (settings.samples < 2 || settings.refine_factor < 2 || settings.max_depth < 0)
    throw InvalidArgument("scan settings must have samples >= 2 and refine_factor >= 2");

  const int n = settings.samples;
  std::vector<double> xs(n), fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
    fs[i] = f(xs[i]);
  }

  std::vector<Bracket> out;
  Isolator iso(f, settings, out);
  for (int i = 0; i < n; ++i) {
    if (fs[i] == 0.0) out.push_back({xs[i], xs[i]});
    if (i + 1 == n) break;
    if (opposite(fs[i], fs[i + 1])) {
      iso.refine_crossing(xs[i], fs[i], xs[i + 1], fs[i + 1], 1);
    } else if (i > 0 && i + 1 < n && fs[i] != 0.0 && Isolator::local_min(fs, i)) {
      iso.refine_suspect(xs[i - 1], fs[i - 1], xs[i], fs[i], 1);
      iso.refine_suspect(xs[i], fs[i], xs[i + 1], fs[i + 1], 1);
    }
  }

  std::sort(out.begin(), out.end(), [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
  return out;
}

double bisect(const ScalarFunction& f, Bracket bracket, double tol) {
  double lo = bracket.lo, hi = bracket.hi;
  if (lo == hi) return lo;
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (opposite(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace indefmass
