#include <cmath>
#include <limits>

#include "monopath/engine.hpp"

namespace monopath {

namespace {

long ceil_long(double x) { return static_cast<long>(std::ceil(x - 1e-9)); }
long floor_long(double x) { return static_cast<long>(std::floor(x + 1e-9)); }

double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v))
    throw PreconditionError("override " + key + ": not a number: '" + text + "'");
  return v;
}

long parse_count(const std::string& key, const std::string& text) {
  const double v = parse_number(key, text);
  if (v != std::floor(v) || v < 0) throw PreconditionError("override " + key + " must be a non-negative integer");
  return static_cast<long>(v);
}

}  // namespace

bool EngineOverrides::any() const {
  return a || b || d || k_block || x_target || y_target || medium_lo || medium_hi || aux_threshold || redred_size ||
         order_threshold || k0 || sender_guarantee;
}

void EngineOverrides::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw PreconditionError("override must look like key=value: '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string val = assignment.substr(eq + 1);
  if (key == "a") a = parse_number(key, val);
  else if (key == "b") b = parse_number(key, val);
  else if (key == "d") d = parse_number(key, val);
  else if (key == "k_block") k_block = parse_count(key, val);
  else if (key == "x_target") x_target = parse_count(key, val);
  else if (key == "y_target") y_target = parse_count(key, val);
  else if (key == "medium_lo") medium_lo = parse_count(key, val);
  else if (key == "medium_hi") medium_hi = parse_count(key, val);
  else if (key == "aux_threshold") aux_threshold = parse_count(key, val);
  else if (key == "redred_size") redred_size = parse_count(key, val);
  else if (key == "order_threshold") order_threshold = parse_count(key, val);
  else if (key == "k0") k0 = parse_count(key, val);
  else if (key == "sender_guarantee") sender_guarantee = parse_count(key, val);
  else throw PreconditionError("unknown override key '" + key + "'");
}

EngineConstants derive_constants(double epsilon, double sigma, int n, long r, long s, const EngineOverrides& o) {
  if (!(epsilon > 0 && epsilon < 0.5)) throw PreconditionError("epsilon must lie in (0, 1/2)");
  if (!(sigma >= 1)) throw PreconditionError("sigma must be >= 1");
  if (n < 1 || r < 1 || s < 1) throw PreconditionError("n, r, s must be >= 1");
  EngineConstants k;
  k.epsilon = epsilon;
  k.sigma = sigma;
  k.n = n;
  k.r = r;
  k.s = s;
  k.log2n = std::log2(static_cast<double>(n));
  const double lg = k.log2n;

  auto note = [&](bool set, const char* name) {
    if (set) k.overridden.emplace_back(name);
  };
  // each value uses its override, and later defaults build on the result
  k.a = o.a.value_or(24.0 * sigma / epsilon);
  note(o.a.has_value(), "a");
  k.b = o.b.value_or(12.0 * k.a / epsilon);
  note(o.b.has_value(), "b");
  k.d = o.d.value_or(120.0 * sigma / (epsilon * epsilon));
  note(o.d.has_value(), "d");

  k.medium_lo = o.medium_lo.value_or(ceil_long(k.a * lg));
  note(o.medium_lo.has_value(), "medium_lo");
  k.medium_hi = o.medium_hi.value_or(floor_long(k.b * lg));
  note(o.medium_hi.has_value(), "medium_hi");

  k.k_block = o.k_block.value_or(ceil_long(10.0 * k.d * lg));
  note(o.k_block.has_value(), "k_block");
  const double kb = static_cast<double>(k.k_block);
  k.x_target = o.x_target.value_or(ceil_long(4.0 * static_cast<double>(r) * kb / n));
  note(o.x_target.has_value(), "x_target");
  k.y_target = o.y_target.value_or(ceil_long(4.0 * static_cast<double>(s) * kb / n));
  note(o.y_target.has_value(), "y_target");

  k.c_path = epsilon * epsilon / (4800.0 * sigma);
  k.c_general = k.c_path * k.c_path;

  // a log n, or the overridden band floor standing in for it
  const double alog = o.medium_lo ? static_cast<double>(k.medium_lo) : k.a * lg;
  k.aux_threshold = o.aux_threshold.value_or(ceil_long(alog / 4.0));
  note(o.aux_threshold.has_value(), "aux_threshold");
  k.redred_size = o.redred_size.value_or(ceil_long(3.0 * alog / 4.0));
  note(o.redred_size.has_value(), "redred_size");
  k.order_threshold = o.order_threshold.value_or(ceil_long(alog));
  note(o.order_threshold.has_value(), "order_threshold");
  k.k0 = o.k0.value_or(ceil_long(sigma * lg));
  note(o.k0.has_value(), "k0");
  k.sender_guarantee = o.sender_guarantee.value_or(ceil_long(sigma / 2.0 * lg));
  note(o.sender_guarantee.has_value(), "sender_guarantee");

  const double c = k.c_general;
  const double nn = static_cast<double>(n);
  k.flags.r_within = static_cast<double>(r) <= c * nn;
  k.flags.s_within = static_cast<double>(s) <= c * nn;
  k.flags.rs_within =
      lg <= 0 ? true : static_cast<double>(r) * static_cast<double>(s) <= c * nn * nn / lg;
  k.flags.k_block_exceeds_n = k.k_block > n;
  k.flags.overridden_regime = o.any();
  return k;
}

}  // namespace monopath
