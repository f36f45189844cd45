#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gentropy/simplex.hpp"

namespace gentropy {

using RealFn = std::function<double(double)>;
using Params = std::vector<std::pair<std::string, double>>;

inline constexpr double kBoundaryTolerance = 1e-14;

/// One-variable generator f of a trace-form entropy S(p) = sum_i f(p_i),
/// together with its first two derivatives. `smooth_at_zero` records whether
/// f'(0) is finite.
struct TraceGenerator {
  std::string name;
  Params params;
  RealFn f;
  RealFn df;
  RealFn d2f;
  bool smooth_at_zero = false;
};

/// Non-trace entropy S(p) = g(sum_i h(p_i)). The trace part `h` reuses the
/// generator type; `beta` is h(1) and g is defined for arguments strictly
/// above `g_domain_lower`.
struct NonTraceSpec {
  std::string name;
  Params params;
  TraceGenerator h;
  RealFn g;
  RealFn g_inv;
  double beta = 1.0;
  double g_domain_lower = -std::numeric_limits<double>::infinity();
};

using Entropy = std::variant<TraceGenerator, NonTraceSpec>;

double eval_trace(const TraceGenerator& gen, const Distribution& p);
double eval_nontrace(const NonTraceSpec& spec, const Distribution& p);
double evaluate(const Entropy& s, const Distribution& p);

/// The generator whose trace the composition law acts on: f itself for
/// trace-form entropies, h for non-trace ones.
const TraceGenerator& trace_part(const Entropy& s);
double trace_beta(const Entropy& s);

const std::string& entropy_name(const Entropy& s);
const Params& entropy_params(const Entropy& s);

TraceGenerator tsallis_generator(double q, double c = 1.0);
TraceGenerator bg_generator(double c = 1.0);
TraceGenerator two_power_generator(double q1, double q2);

struct PowerH {
  TraceGenerator h;
  double beta;
  /// Set for 0 < q < 1, outside the range where h is C^1 at zero.
  bool irregular = false;
};

/// h(t) = a t + b t^q.
PowerH power_h(double a, double b, double q);

NonTraceSpec renyi_spec(double alpha);

/// h(t) = a t + b t^q wrapped by g(u) = ln(u / (a + b)).
NonTraceSpec log_spec(double a, double b, double q);

struct BoundaryReport {
  double at_zero = 0.0;  ///< |f(0)| or |h(0)|
  double at_one = 0.0;   ///< |f(1)| or |g(h(1))|
  bool pass = false;
};

BoundaryReport check_boundary(const TraceGenerator& gen);
BoundaryReport check_boundary(const NonTraceSpec& spec);
BoundaryReport check_boundary(const Entropy& s);

/// max |g(g_inv(x)) - x| over `xs`.
double conjugation_residual(const NonTraceSpec& spec, std::span<const double> xs);

/// True when g is strictly monotone along the increasing grid `us`.
bool g_strictly_monotone(const NonTraceSpec& spec, std::span<const double> us);

}  // namespace gentropy
