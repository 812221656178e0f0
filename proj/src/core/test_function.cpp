#include "ifl/core/test_function.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ifl/core/height_config.hpp"

namespace ifl {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TestFunction TestFunction::constant(double value) {
  TestFunction f;
  f.kind_ = Kind::constant;
  f.amp_ = value;
  f.id_ = value == 1.0 ? "one" : "const";
  return f;
}

TestFunction TestFunction::cosine(int k, double amplitude) {
  if (k < 1) throw ValidationError("test function: Fourier mode must be >= 1");
  TestFunction f;
  f.kind_ = Kind::cosine;
  f.k_ = k;
  f.amp_ = amplitude;
  f.id_ = "cos" + std::to_string(k);
  return f;
}

TestFunction TestFunction::sine(int k, double amplitude) {
  if (k < 1) throw ValidationError("test function: Fourier mode must be >= 1");
  TestFunction f;
  f.kind_ = Kind::sine;
  f.k_ = k;
  f.amp_ = amplitude;
  f.id_ = "sin" + std::to_string(k);
  return f;
}

TestFunction TestFunction::tabulated(std::vector<double> values) {
  if (values.empty()) throw ValidationError("test function: empty table");
  TestFunction f;
  f.kind_ = Kind::tabulated;
  f.table_ = std::move(values);
  f.id_ = "table";
  return f;
}

TestFunction TestFunction::from_id(const std::string& id) {
  if (id == "one") return constant(1.0);
  auto parse_mode = [&](std::size_t from) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(id.substr(from), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || from + used != id.size()) throw ValidationError("unknown test function id '" + id + "'");
    return k;
  };
  if (id.rfind("cos", 0) == 0) return cosine(parse_mode(3), std::numbers::sqrt2);
  if (id.rfind("sin", 0) == 0) return sine(parse_mode(3), std::numbers::sqrt2);
  throw ValidationError("unknown test function id '" + id + "'");
}

double TestFunction::operator()(double u) const {
  switch (kind_) {
    case Kind::constant:
      return amp_;
    case Kind::cosine:
      return amp_ * std::cos(two_pi * k_ * u);
    case Kind::sine:
      return amp_ * std::sin(two_pi * k_ * u);
    case Kind::tabulated: {
      const auto m = static_cast<double>(table_.size());
      double pos = (u - std::floor(u)) * m;
      auto i = static_cast<std::size_t>(pos);
      if (i >= table_.size()) i = table_.size() - 1;
      const double w = pos - static_cast<double>(i);
      return (1.0 - w) * table_[i] + w * table_[(i + 1) % table_.size()];
    }
  }
  return 0.0;
}

double TestFunction::grad(int x, int n) const {
  const double dn = n;
  return dn * ((*this)((x + 1) / dn) - (*this)(x / dn));
}

double TestFunction::laplacian(int x, int n) const {
  const double dn = n;
  return dn * dn * ((*this)((x + 1) / dn) - 2.0 * (*this)(x / dn) + (*this)((x - 1) / dn));
}

double TestFunction::l2_norm_sq() const {
  switch (kind_) {
    case Kind::constant:
      return amp_ * amp_;
    case Kind::cosine:
    case Kind::sine:
      return 0.5 * amp_ * amp_;
    case Kind::tabulated:
      return discrete_l2_sq(*this, static_cast<int>(table_.size()));
  }
  return 0.0;
}

double TestFunction::mean() const {
  switch (kind_) {
    case Kind::constant:
      return amp_;
    case Kind::cosine:
    case Kind::sine:
      return 0.0;
    case Kind::tabulated:
      return discrete_mean(*this, static_cast<int>(table_.size()));
  }
  return 0.0;
}

double TestFunction::grad_norm_sq() const {
  switch (kind_) {
    case Kind::constant:
      return 0.0;
    case Kind::cosine:
    case Kind::sine:
      return 0.5 * amp_ * amp_ * (two_pi * k_) * (two_pi * k_);
    case Kind::tabulated: {
      const int m = static_cast<int>(table_.size());
      double acc = 0.0;
      for (int x = 0; x < m; ++x) acc += grad(x, m) * grad(x, m);
      return acc / m;
    }
  }
  return 0.0;
}

double discrete_l2_sq(const TestFunction& phi, int n) {
  double acc = 0.0;
  for (int x = 0; x < n; ++x) {
    const double v = phi(static_cast<double>(x) / n);
    acc += v * v;
  }
  return acc / n;
}

double discrete_mean(const TestFunction& phi, int n) {
  double acc = 0.0;
  for (int x = 0; x < n; ++x) acc += phi(static_cast<double>(x) / n);
  return acc / n;
}

}  // namespace ifl
