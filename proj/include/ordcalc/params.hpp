#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace ordcalc {

/// Parameters (m, n) of G_{m,n} = <x, y | x^m = y^n> with m >= n >= 2.
class GroupParams {
public:
  GroupParams(int m, int n) : m_(m), n_(n) {
    if (n < 2 || m < 2)
      throw std::invalid_argument("group parameters must satisfy m, n >= 2");
    if (m < n)
      throw std::invalid_argument("group parameters must satisfy m >= n (got m=" +
                                  std::to_string(m) + ", n=" + std::to_string(n) + ")");
    gcd_ = std::gcd(m, n);
  }

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int gcd() const noexcept { return gcd_; }

  /// (2,2) is the Klein bottle group; most ordering statements exclude it.
  bool klein() const noexcept { return m_ == 2 && n_ == 2; }

  /// Images of x and y under the abelianizing weight G -> Z.
  long weight_x() const noexcept { return n_ / gcd_; }
  long weight_y() const noexcept { return m_ / gcd_; }
  long weight_z() const noexcept { return static_cast<long>(m_) * n_ / gcd_; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;

private:
  int m_;
  int n_;
  int gcd_;
};

}  // namespace ordcalc
