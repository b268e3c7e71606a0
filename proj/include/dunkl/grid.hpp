#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dunkl/special.hpp"

namespace dunkl {

using Complex = std::complex<double>;

/// Cell-centred symmetric grid on [-L, L]: N nodes at +-(j + 1/2) dx with
/// dx = 2L/N, and quadrature masses for integrals against mu.
///
/// The mass of node j is the pointwise density c |x_j|^{2k+1} dx, with the
/// innermost few nodes on each side corrected for the non-smooth factor
/// |x|^{2k+1} at the origin (exact for smooth even integrands up to high
/// order in dx). The exact cell masses (antiderivative differences) are kept
/// separately; windowed integrals use them.
class Grid {
 public:
  static std::shared_ptr<const Grid> make(const DunklParams& params, double half_width, int node_count);

  const DunklParams& params() const noexcept { return params_; }
  double half_width() const noexcept { return half_width_; }
  double spacing() const noexcept { return spacing_; }
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  int half_size() const noexcept { return size() / 2; }

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> cell_masses() const noexcept { return cell_masses_; }
  double node(int j) const { return nodes_[static_cast<std::size_t>(j)]; }
  double weight(int j) const { return weights_[static_cast<std::size_t>(j)]; }

  /// Index of -x_j.
  int mirror(int j) const noexcept { return size() - 1 - j; }
  /// Index of the k-th positive node (|x| = (k + 1/2) dx).
  int positive(int k) const noexcept { return half_size() + k; }
  /// Index of the k-th negative node (x = -(k + 1/2) dx).
  int negative(int k) const noexcept { return half_size() - 1 - k; }

  /// Same kappa, half-width and node count.
  bool same_as(const Grid& other) const noexcept;

 private:
  Grid(const DunklParams& params, double half_width, int node_count);

  DunklParams params_;
  double half_width_;
  double spacing_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> cell_masses_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Free-function spelling of Grid::make.
GridPtr make_grid(const DunklParams& params, double half_width, int node_count);

/// Complex samples bound to a grid. Immutable value type apart from the
/// explicit mutable accessor used while building results.
class GridFunction {
 public:
  GridFunction(GridPtr grid, std::vector<Complex> values);
  GridFunction(GridPtr grid, const std::vector<double>& real_values);

  static GridFunction zeros(GridPtr grid);

  const Grid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
  Complex value(int j) const { return values_[static_cast<std::size_t>(j)]; }

  std::vector<double> real_part() const;
  std::vector<double> imag_part() const;
  std::vector<double> abs() const;
  /// max_j |Im f_j|
  double max_imag() const;
  double sup_norm() const;

  /// |f|^power as a real grid function.
  GridFunction abs_pow(double power) const;
  GridFunction real() const;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(Complex scale);

  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(GridFunction a, Complex s) { return a *= s; }
  friend GridFunction operator*(Complex s, GridFunction a) { return a *= s; }
  /// Pointwise product.
  friend GridFunction operator*(const GridFunction& a, const GridFunction& b);

 private:
  GridPtr grid_;
  std::vector<Complex> values_;
};

void require_same_grid(const GridFunction& a, const GridFunction& b);

/// Sum of weight_j * f_j. Mirror pairs (x, -x) are folded first, then the N/2
/// folded terms are reduced by pairwise summation, so odd functions integrate
/// to exactly zero and the result does not depend on evaluation order.
Complex integrate(const GridFunction& f);

/// Deterministic pairwise summation of a span.
double pairwise_sum(std::span<const double> terms);

// --- test families -------------------------------------------------------

enum class Family { gaussian, indicator_ball, bump, power_tail, trig_gauss };

/// A named closed-form function with its parameters:
///   gaussian(a)                 exp(-a x^2), a > 0
///   indicator_ball(r)           chi_{(-r, r)}, r > 0
///   bump(center, width)         exp(1 - 1/(1 - ((x-c)/w)^2)) on |x - c| < w, width > 0
///   power_tail(beta, cutoff)    |x|^{-beta} chi_{|x| > cutoff}, beta >= 0, cutoff > 0
///   trig_gauss(seed)            exp(-x^2/8) [cos(w1 x + p1) + sin(w2 x + p2)/2], seeded
struct FamilyMember {
  Family family;
  std::vector<double> params;

  std::string label() const;
  /// Parses "gaussian(0.5)", "bump(1,2)", ...
  static FamilyMember parse(const std::string& text);
  double evaluate(double x) const;
};

std::string family_name(Family family);

GridFunction sample_family(const FamilyMember& member, const GridPtr& grid);
GridFunction sample_family(const std::string& name, const std::vector<double>& params, const GridPtr& grid);

/// gaussians (1/4, 1/2, 2), indicator balls (1/2, 1, 2), bump(1, 2),
/// power_tail(1.5, 1), trig_gauss(1..3).
std::vector<FamilyMember> default_family();

// --- CSV ------------------------------------------------------------------

/// One raw CSV sample.
struct CsvSample {
  double x;
  Complex value;
};

/// Parses rows "x,value" or "x,re,im". Blank lines and lines starting with '#'
/// are skipped; a non-numeric first row is treated as a header. Throws
/// ParseError with the line number on malformed input or when no rows exist.
std::vector<CsvSample> read_csv_samples(std::istream& in);

/// Linear interpolation of the samples onto the grid nodes (samples sorted by
/// x first). Nodes outside [min x, max x] receive 0.
GridFunction interpolate_onto(const std::vector<CsvSample>& samples, const GridPtr& grid);

GridFunction read_csv(std::istream& in, const GridPtr& grid);

/// Writes "x,value" when f is real (exactly zero imaginary part) and
/// "x,re,im" otherwise, with 17 significant digits.
void write_csv(std::ostream& out, const GridFunction& f);

}  // namespace dunkl
