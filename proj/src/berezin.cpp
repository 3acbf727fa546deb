#include "berlab/berezin.hpp"

#include <cmath>
#include <string>

namespace berlab {

namespace {

void require_compatible(const Operator& a, const KernelSpace& space) {
  if (a.dim() != space.dim())
    throw Error(ErrorCode::DimensionMismatch, "operator dim " + std::to_string(a.dim()) +
                                                  " vs space dim " + std::to_string(space.dim()));
}

template <class Value, class Better>
Extremum pick(std::size_t n, Value value, Better better) {
  Extremum e{value(0), 0};
  for (std::size_t j = 1; j < n; ++j) {
    const double v = value(j);
    if (better(v, e.value)) e = {v, j};
  }
  return e;
}

}  // namespace

BerezinProfile::BerezinProfile(std::vector<Complex> symbols, std::vector<double> image_norm_sq)
    : symbols_(std::move(symbols)), image_norm_sq_(std::move(image_norm_sq)) {
  if (symbols_.size() != image_norm_sq_.size() || symbols_.empty())
    throw Error(ErrorCode::InvalidInput, "profile arrays must be non-empty and equal length");
}

BerezinProfile berezin_profile(const Operator& a, const KernelSpace& space) {
  require_compatible(a, space);
  const Matrix& k = space.kernels();
  const Matrix ak = a.matrix() * k;
  const auto m = static_cast<std::size_t>(space.size());
  std::vector<Complex> symbols(m);
  std::vector<double> norms(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto c = static_cast<Index>(j);
    symbols[j] = inner(ak.col(c), k.col(c));
    norms[j] = ak.col(c).squaredNorm();
  }
  return BerezinProfile(std::move(symbols), std::move(norms));
}

Extremum ber_extremum(const BerezinProfile& p) {
  return pick(p.size(), [&](std::size_t j) { return std::abs(p.symbols()[j]); },
              [](double v, double cur) { return v > cur; });
}

Extremum least_ber_extremum(const BerezinProfile& p) {
  return pick(p.size(), [&](std::size_t j) { return std::abs(p.symbols()[j]); },
              [](double v, double cur) { return v < cur; });
}

Extremum eta_extremum(const BerezinProfile& p) {
  return pick(p.size(),
              [&](std::size_t j) {
                const double s = std::abs(p.symbols()[j]);
                const double b = p.image_norm_sq()[j];
                return std::sqrt(s * s + b * b);
              },
              [](double v, double cur) { return v > cur; });
}

double ber(const Operator& a, const KernelSpace& space) {
  return ber_extremum(berezin_profile(a, space)).value;
}

double least_ber(const Operator& a, const KernelSpace& space) {
  return least_ber_extremum(berezin_profile(a, space)).value;
}

double berezin_norm(const Operator& a, const KernelSpace& space) {
  require_compatible(a, space);
  const Matrix& k = space.kernels();
  // entry (mu, lambda) = <A k_lambda, k_mu>
  return (k.adjoint() * a.matrix() * k).cwiseAbs().maxCoeff();
}

double eta(const Operator& a, const KernelSpace& space) {
  return eta_extremum(berezin_profile(a, space)).value;
}

std::vector<ShellPoint> dwber_shell(const Operator& a, const KernelSpace& space) {
  const BerezinProfile p = berezin_profile(a, space);
  std::vector<ShellPoint> shell;
  shell.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    shell.push_back({space.labels()[j], p.symbols()[j], p.image_norm_sq()[j]});
  return shell;
}

}  // namespace berlab
