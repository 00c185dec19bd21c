#include "jd/correlations.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "jd/errors.hpp"

namespace jd {

namespace {

using std::numbers::pi;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double entropy_of_eigenvalues(const std::vector<double>& eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < -kNegativeEigenvalueClamp) {
      throw NotAState("state has eigenvalue " + std::to_string(l));
    }
    s -= xlog2x(std::max(l, 0.0));
  }
  return s;
}

double entropy_of(const ComplexMatrix& rho) {
  return entropy_of_eigenvalues(hermitian_eigen(rho).eigenvalues);
}

// Unnormalized 2x2 Hermitian block [[a, b], [conj(b), d]].
struct Block {
  double a = 0.0;
  double d = 0.0;
  Complex b = 0.0;
};

// p S(block / p) = -sum l log2 l + p log2 p, where p = tr(block).
double weighted_entropy(const Block& blk) {
  const double p = blk.a + blk.d;
  if (p <= 1e-14) return 0.0;
  const double half_gap = std::sqrt(0.25 * (blk.a - blk.d) * (blk.a - blk.d) + std::norm(blk.b));
  const double hi = 0.5 * p + half_gap;
  const double lo = std::max(0.5 * p - half_gap, 0.0);
  return -xlog2x(hi) - xlog2x(lo) + xlog2x(p);
}

// Conditional entropy after a projective measurement on one side, as a
// function of the Bloch angles of Pi_1.
class MeasuredEntropy {
 public:
  MeasuredEntropy(const ComplexMatrix& rho, Subsystem side) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        ComplexMatrix& blk = blocks_[2 * i + j];
        for (int x = 0; x < 2; ++x) {
          for (int y = 0; y < 2; ++y) {
            blk(x, y) = side == Subsystem::first ? rho(2 * i + x, 2 * j + y)
                                                 : rho(2 * x + i, 2 * y + j);
          }
        }
      }
    }
    const ComplexMatrix& r00 = blocks_[0];
    const ComplexMatrix& r11 = blocks_[3];
    other_ = {r00(0, 0).real() + r11(0, 0).real(), r00(1, 1).real() + r11(1, 1).real(),
              r00(0, 1) + r11(0, 1)};
  }

  double operator()(double theta, double phi) const {
    return evaluate(std::cos(0.5 * theta), std::sin(0.5 * theta), std::polar(1.0, phi));
  }

  // c = cos(theta/2), s = sin(theta/2), phase = e^{i phi}.
  double evaluate(double c, double s, Complex phase) const {
    const ComplexMatrix& r00 = blocks_[0];
    const ComplexMatrix& r01 = blocks_[1];
    const ComplexMatrix& r10 = blocks_[2];
    const ComplexMatrix& r11 = blocks_[3];
    const double cc = c * c;
    const double ss = s * s;
    const double cs = c * s;
    const Complex ph_conj = std::conj(phase);
    Block first;
    first.a = cc * r00(0, 0).real() + ss * r11(0, 0).real() +
              2.0 * cs * (phase * r01(0, 0)).real();
    first.d = cc * r00(1, 1).real() + ss * r11(1, 1).real() +
              2.0 * cs * (phase * r01(1, 1)).real();
    first.b = cc * r00(0, 1) + ss * r11(0, 1) + cs * (phase * r01(0, 1) + ph_conj * r10(0, 1));
    const Block second{other_.a - first.a, other_.d - first.d, other_.b - first.b};
    return weighted_entropy(first) + weighted_entropy(second);
  }

  double other_entropy() const {
    return -xlog2x(std::max(0.0, eigen_hi(other_))) - xlog2x(std::max(0.0, eigen_lo(other_)));
  }

 private:
  static double eigen_hi(const Block& b) {
    return 0.5 * (b.a + b.d) + std::sqrt(0.25 * (b.a - b.d) * (b.a - b.d) + std::norm(b.b));
  }
  static double eigen_lo(const Block& b) {
    return 0.5 * (b.a + b.d) - std::sqrt(0.25 * (b.a - b.d) * (b.a - b.d) + std::norm(b.b));
  }

  std::array<ComplexMatrix, 4> blocks_;
  Block other_;
};

struct Point {
  double theta;
  double phi;
};

struct Minimum {
  Point at;
  double value;
  int evaluations;
};

// Nelder-Mead on the (theta, phi) chart; the chart is unconstrained since
// any angle pair names a valid Bloch direction.
template <class F>
Minimum nelder_mead(const F& f, Point start, double radius, double tolerance, int max_evals) {
  std::array<Point, 3> x{start, Point{start.theta + radius, start.phi},
                         Point{start.theta, start.phi + radius}};
  std::array<double, 3> fx{};
  int evals = 0;
  auto eval = [&](Point p) {
    ++evals;
    return f(p.theta, p.phi);
  };
  for (int i = 0; i < 3; ++i) fx[i] = eval(x[i]);

  auto lerp = [](Point a, Point b, double t) {
    return Point{a.theta + t * (b.theta - a.theta), a.phi + t * (b.phi - a.phi)};
  };

  while (evals < max_evals) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const Point best = x[idx[0]];
    double diameter = 0.0;
    for (int k = 1; k < 3; ++k) {
      diameter = std::max(diameter, std::hypot(x[idx[k]].theta - best.theta,
                                               x[idx[k]].phi - best.phi));
    }
    if (diameter < tolerance) break;

    const int worst = idx[2];
    const Point centroid = lerp(x[idx[0]], x[idx[1]], 0.5);
    const Point reflected = lerp(centroid, x[worst], -1.0);
    const double f_reflected = eval(reflected);
    if (f_reflected < fx[idx[0]]) {
      const Point expanded = lerp(centroid, x[worst], -2.0);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        x[worst] = expanded;
        fx[worst] = f_expanded;
      } else {
        x[worst] = reflected;
        fx[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < fx[idx[1]]) {
      x[worst] = reflected;
      fx[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < fx[worst];
    const Point contracted = outside ? lerp(centroid, reflected, 0.5) : lerp(centroid, x[worst], 0.5);
    const double f_contracted = eval(contracted);
    if (f_contracted < (outside ? f_reflected : fx[worst])) {
      x[worst] = contracted;
      fx[worst] = f_contracted;
      continue;
    }
    for (int k = 1; k < 3; ++k) {
      const int i = idx[k];
      x[i] = lerp(best, x[i], 0.5);
      fx[i] = eval(x[i]);
    }
  }
  const int arg = int(std::min_element(fx.begin(), fx.end()) - fx.begin());
  return {x[arg], fx[arg], evals};
}

std::array<double, 3> bloch(Point p) {
  return {std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi),
          std::cos(p.theta)};
}

constexpr int kSeedTheta = 33;
constexpr int kSeedPhi = 64;
constexpr int kMaxPolishedSeeds = 3;
constexpr double kSimplexRadius = pi / 64.0;
constexpr double kSimplexTolerance = 1e-9;
constexpr int kMaxSimplexEvaluations = 500;

}  // namespace

Measurement Measurement::normalized() const {
  const auto n = bloch({theta, phi});
  double t = std::acos(std::clamp(n[2], -1.0, 1.0));
  double p = std::atan2(n[1], n[0]);
  if (p < 0.0) p += 2.0 * pi;
  if (p >= 2.0 * pi) p = 0.0;
  if (t == 0.0 || t == pi) p = 0.0;
  return {t, p, side};
}

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of(rho.matrix()); }

double mutual_information(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidDimension("mutual_information expects a two-qubit state");
  const double value = entropy_of(partial_trace(rho.matrix(), Subsystem::first)) +
                       entropy_of(partial_trace(rho.matrix(), Subsystem::second)) -
                       entropy_of(rho.matrix());
  if (value < 0.0 && value > -1e-10) return 0.0;
  return value;
}

double conditional_entropy(const DensityMatrix& rho, const Measurement& m) {
  if (rho.dim() != 4) throw InvalidDimension("conditional_entropy expects a two-qubit state");
  return MeasuredEntropy(rho.matrix(), m.side)(m.theta, m.phi);
}

ClassicalCorrelation classical_correlation(const DensityMatrix& rho, Subsystem side) {
  if (rho.dim() != 4) throw InvalidDimension("classical_correlation expects a two-qubit state");
  const MeasuredEntropy objective(rho.matrix(), side);

  std::vector<Minimum> grid;
  grid.reserve(kSeedTheta * kSeedPhi);
  for (int i = 0; i < kSeedTheta; ++i) {
    const double theta = i * pi / (kSeedTheta - 1);
    for (int j = 0; j < kSeedPhi; ++j) {
      const double phi = 2.0 * pi * j / kSeedPhi;
      grid.push_back({{theta, phi}, objective(theta, phi), 1});
    }
  }
  int evaluations = int(grid.size());
  std::stable_sort(grid.begin(), grid.end(),
                   [](const Minimum& a, const Minimum& b) { return a.value < b.value; });

  // Seeds must name distinct projector pairs; n and -n are the same measurement.
  std::vector<Point> seeds;
  const double min_separation = std::cos(0.3);
  for (const Minimum& g : grid) {
    const auto n = bloch(g.at);
    bool distinct = true;
    for (const Point& s : seeds) {
      const auto ns = bloch(s);
      if (std::abs(n[0] * ns[0] + n[1] * ns[1] + n[2] * ns[2]) > min_separation) {
        distinct = false;
        break;
      }
    }
    if (distinct) seeds.push_back(g.at);
    if (int(seeds.size()) == kMaxPolishedSeeds) break;
  }

  Minimum best = grid.front();
  for (const Point& s : seeds) {
    const Minimum m =
        nelder_mead(objective, s, kSimplexRadius, kSimplexTolerance, kMaxSimplexEvaluations);
    evaluations += m.evaluations;
    if (m.value < best.value) best = m;
  }

  double value = objective.other_entropy() - best.value;
  if (value < 0.0 && value > -1e-12) value = 0.0;
  return {value, Measurement{best.at.theta, best.at.phi, side}.normalized(), evaluations};
}

CorrelationReport quantum_discord(const DensityMatrix& rho, Subsystem side) {
  CorrelationReport report;
  report.mutual_information = mutual_information(rho);
  const ClassicalCorrelation cc = classical_correlation(rho, side);
  report.classical_correlation = cc.value;
  report.optimal_measurement = cc.measurement;
  report.optimizer_evaluations = cc.evaluations;
  report.discord = report.mutual_information - report.classical_correlation;
  if (report.discord < 0.0) {
    if (report.discord < -1e-9) {
      throw ConsistencyError("discord is negative beyond round-off: " +
                             std::to_string(report.discord));
    }
    report.discord = 0.0;
    report.classical_correlation = report.mutual_information;
  }
  report.concurrence = concurrence(rho);
  report.eof = eof_from_concurrence(report.concurrence);
  return report;
}

double discord_grid_oracle(const DensityMatrix& rho, Subsystem side, int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) throw InvalidParameter("grid oracle needs n_theta, n_phi >= 2");
  const MeasuredEntropy objective(rho.matrix(), side);
  std::vector<Complex> phases(n_phi);
  for (int j = 0; j < n_phi; ++j) phases[j] = std::polar(1.0, 2.0 * pi * j / n_phi);
  double best = INFINITY;
  for (int i = 0; i < n_theta; ++i) {
    const double half = 0.5 * i * pi / (n_theta - 1);
    const double c = std::cos(half);
    const double s = std::sin(half);
    for (int j = 0; j < n_phi; ++j) best = std::min(best, objective.evaluate(c, s, phases[j]));
  }
  const double classical = objective.other_entropy() - best;
  return mutual_information(rho) - classical;
}

double concurrence_x_state(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidDimension("concurrence expects a two-qubit state");
  const double r11 = std::max(rho(0, 0).real(), 0.0);
  const double r22 = std::max(rho(1, 1).real(), 0.0);
  const double r33 = std::max(rho(2, 2).real(), 0.0);
  const double r44 = std::max(rho(3, 3).real(), 0.0);
  const double c = 2.0 * std::max({0.0, std::abs(rho(0, 3)) - std::sqrt(r22 * r33),
                                   std::abs(rho(1, 2)) - std::sqrt(r11 * r44)});
  return std::min(c, 1.0);
}

double concurrence_general(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw InvalidDimension("concurrence expects a two-qubit state");
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  ComplexMatrix product = root * flipped * root;
  product = (product + product.adjoint()) * 0.5;
  std::vector<double> mu = hermitian_eigen(product).eigenvalues;
  std::vector<double> l(4);
  for (int i = 0; i < 4; ++i) l[i] = std::sqrt(clamp_nonnegative(mu[i]));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double concurrence(const DensityMatrix& rho) {
  if (!rho.is_x_shaped()) return concurrence_general(rho);
  const double closed = concurrence_x_state(rho);
  const double general = concurrence_general(rho);
  // The general route takes square roots of eigenvalues, so eigenvalue
  // round-off near zero grows to O(sqrt(eps)) there.
  const double tolerance = 1e-10 + 4.0 * std::sqrt(64.0 * DBL_EPSILON);
  if (std::abs(closed - general) > tolerance) {
    throw ConsistencyError("concurrence routes disagree: " + std::to_string(closed) + " vs " +
                           std::to_string(general));
  }
  return closed;
}

double binary_entropy(double t) {
  if (t < 0.0 || t > 1.0) throw DomainError("binary_entropy argument outside [0, 1]");
  return -xlog2x(t) - xlog2x(1.0 - t);
}

double eof_from_concurrence(double c) {
  if (c < 0.0 || c > 1.0) throw DomainError("concurrence outside [0, 1]");
  if (c == 0.0) return 0.0;
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double eof(const DensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

double ground_state_discord_analytic(double eps, double j) {
  if (eps == 0.0 && j == 0.0) throw InvalidParameter("ground-state discord needs eps or J nonzero");
  if (j == 0.0) return 0.0;
  const double lambda = std::hypot(2.0 * eps, j);
  // 2 eps + lambda without cancellation for eps < 0.
  const double shifted = eps >= 0.0 ? 2.0 * eps + lambda : j * j / (lambda - 2.0 * eps);
  const double zeta = j * j + shifted * shifted;
  const double u = shifted * shifted / zeta;
  const double v = j * j / zeta;
  return -xlog2x(u) - xlog2x(v);
}

}  // namespace jd
