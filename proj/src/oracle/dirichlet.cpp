#include "ifl/oracle/dirichlet.hpp"

#include "ifl/dynamics/rates.hpp"
#include "ifl/measures/exact_measure.hpp"

namespace ifl {

DirichletResult dirichlet_identity(int n, double gamma, const std::function<double(const HeightConfig&)>& f) {
  if (n > 10) throw ValidationError("dirichlet_identity: N must be at most 10");
  const ExactMeasure measure(n, gamma);
  const auto rates = RateParams::make(n, gamma);
  DirichletResult out;
  std::vector<std::uint8_t> xi(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < measure.num_sequences(); ++i) {
    for (int x = 0; x < n; ++x) xi[static_cast<std::size_t>(x)] = (measure.mask(i) >> x) & 1U;
    const auto h = HeightConfig::from_site_slopes(0, xi);
    const double fh = f(h);
    const auto shifted = HeightConfig::from_site_slopes(1, xi);
    if (f(shifted) != fh) throw ValidationError("dirichlet_identity: f depends on the anchor");
    const auto& w = measure.weights(i);
    for (int s : {1, -1, 0}) {
      const double mass = (s > 0 ? w.plus : s < 0 ? w.minus : w.zero) / measure.z();
      if (mass == 0.0) continue;
      for (Site x : h.maxima()) {
        const double diff = f(apply_flip(h, x)) - fh;
        out.dirichlet -= mass * fh * rates.p_down(s) * diff;
        out.carre += 0.5 * mass * rates.p_down(s) * diff * diff;
      }
      for (Site x : h.minima()) {
        const double diff = f(apply_flip(h, x)) - fh;
        out.dirichlet -= mass * fh * rates.p_up(s) * diff;
        out.carre += 0.5 * mass * rates.p_up(s) * diff * diff;
      }
    }
  }
  return out;
}

}  // namespace ifl
