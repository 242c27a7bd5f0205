#ifndef QDSIM_GRID_HPP
#define QDSIM_GRID_HPP

#include <cstddef>

namespace qdsim {

// Uniform node-centered 2D mesh covering
// [-half_width_x, +half_width_x] x [-half_width_y, +half_width_y].
// Node counts are odd so the symmetry axes x=0 and y=0 lie on nodes.
// Lengths are stored in meters; construction takes nanometers.
class Grid {
 public:
  static Grid from_nm(double half_width_x_nm, double half_width_y_nm,
                      double step_nm);

  double half_width_x() const { return half_width_x_; }  // m
  double half_width_y() const { return half_width_y_; }  // m
  double step() const { return step_; }                  // m
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }

  // Node coordinates, symmetric about the origin by construction.
  double x(int i) const { return (i - (nx_ - 1) / 2) * step_; }
  double y(int j) const { return (j - (ny_ - 1) / 2) * step_; }

  // Row-major by y then x.
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * nx_ + i;
  }
  bool is_boundary(int i, int j) const {
    return i == 0 || j == 0 || i == nx_ - 1 || j == ny_ - 1;
  }

  bool operator==(const Grid& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && step_ == o.step_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

 private:
  Grid(double hwx, double hwy, double step, int nx, int ny)
      : half_width_x_(hwx), half_width_y_(hwy), step_(step), nx_(nx), ny_(ny) {}

  double half_width_x_;
  double half_width_y_;
  double step_;
  int nx_;
  int ny_;
};

}  // namespace qdsim

#endif
