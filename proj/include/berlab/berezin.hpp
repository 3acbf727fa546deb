#pragma once

#include <cstddef>
#include <vector>

#include "berlab/operator.hpp"
#include "berlab/rkhs.hpp"

namespace berlab {

/// Point of the Davis-Wielandt-Berezin shell: (<A k, k>, ||A k||^2).
struct DwPoint {
  Complex symbol;
  double image_norm_sq = 0.0;
};

/// Per-point trace of an operator over Omega. symbols() is the Berezin set
/// as a multiset, in the order of the space's points.
class BerezinProfile {
 public:
  BerezinProfile(std::vector<Complex> symbols, std::vector<double> image_norm_sq);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<Complex>& symbols() const noexcept { return symbols_; }
  const std::vector<double>& image_norm_sq() const noexcept { return image_norm_sq_; }
  DwPoint point(std::size_t j) const { return {symbols_.at(j), image_norm_sq_.at(j)}; }

 private:
  std::vector<Complex> symbols_;
  std::vector<double> image_norm_sq_;
};

/// Max or min of a per-point quantity; ties go to the lowest index.
struct Extremum {
  double value = 0.0;
  std::size_t index = 0;
};

BerezinProfile berezin_profile(const Operator& a, const KernelSpace& space);

Extremum ber_extremum(const BerezinProfile& profile);
Extremum least_ber_extremum(const BerezinProfile& profile);
Extremum eta_extremum(const BerezinProfile& profile);

/// Berezin number: max over Omega of |<A k, k>|.
double ber(const Operator& a, const KernelSpace& space);
/// Least Berezin number c(A): min over Omega of |<A k, k>|.
double least_ber(const Operator& a, const KernelSpace& space);
/// Berezin norm: max over all ordered pairs of |<A k_lambda, k_mu>|.
double berezin_norm(const Operator& a, const KernelSpace& space);
/// Davis-Wielandt-Berezin radius: max over Omega of sqrt(|<A k,k>|^2 + ||A k||^4).
double eta(const Operator& a, const KernelSpace& space);

struct ShellPoint {
  Complex label;
  Complex symbol;
  double image_norm_sq = 0.0;
};

std::vector<ShellPoint> dwber_shell(const Operator& a, const KernelSpace& space);

}  // namespace berlab
