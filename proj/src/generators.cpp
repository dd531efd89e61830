#include "ashg/generators.hpp"

#include <numeric>
#include <string>

#include "ashg/error.hpp"
#include "ashg/rng.hpp"

namespace ashg {

namespace {

ValuationMatrix sample(std::size_t n, double p, const std::vector<std::size_t>& class_of,
                       InstanceMeta meta, const UniformDraw& draw) {
  const auto enemy = -static_cast<std::int64_t>(n);
  std::vector<std::int64_t> upper;
  upper.reserve(n * (n - 1) / 2);
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = i + 1; j < n; ++j) {
      const double u = draw();
      const bool same_class = !class_of.empty() && class_of[i] == class_of[j];
      upper.push_back(same_class || u < p ? enemy : 1);
    }
  }
  return ValuationMatrix::symmetric_int(n, std::move(upper), 1, std::move(meta));
}

UniformDraw splitmix_draw(std::uint64_t seed) {
  return [rng = SplitMix64(seed)]() mutable { return rng.uniform01(); };
}

void check_closed_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
}

ValuationMatrix multipartite(ModelKind kind, const std::vector<std::size_t>& class_sizes,
                             double p, std::optional<double> q, std::uint64_t seed) {
  InstanceMeta meta;
  meta.kind = kind;
  meta.n = std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
  meta.p = p;
  meta.k = class_sizes.size();
  meta.q = q;
  meta.class_sizes = class_sizes;
  meta.seed = seed;
  const auto class_of = meta.class_of_agents();
  const std::size_t n = meta.n;
  return sample(n, p, class_of, std::move(meta), splitmix_draw(seed));
}

}  // namespace

ValuationMatrix gen_er(std::size_t n, double p, std::uint64_t seed) {
  return gen_er(n, p, seed, splitmix_draw(seed));
}

ValuationMatrix gen_er(std::size_t n, double p, std::uint64_t seed, const UniformDraw& draw) {
  if (n == 0) throw ParameterError("gen_er: n must be at least 1");
  if (!(p > 0.0 && p < 1.0)) throw ParameterError("gen_er: p must lie in (0, 1)");
  InstanceMeta meta;
  meta.kind = ModelKind::er;
  meta.n = n;
  meta.p = p;
  meta.seed = seed;
  return sample(n, p, {}, std::move(meta), draw);
}

ValuationMatrix gen_turan(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  if (k < 2) throw ParameterError("gen_turan: k must be at least 2");
  if (n == 0 || n % k != 0)
    throw ParameterError("gen_turan: k = " + std::to_string(k) + " does not divide n = " +
                         std::to_string(n));
  check_closed_probability(p);
  return multipartite(ModelKind::turan, std::vector<std::size_t>(k, n / k), p, std::nullopt,
                      seed);
}

ValuationMatrix gen_balanced(const std::vector<std::size_t>& class_sizes, double p, double q,
                             std::uint64_t seed) {
  if (class_sizes.size() < 2) throw ParameterError("gen_balanced: need at least two classes");
  if (!(q > 0.0 && q <= 1.0)) throw ParameterError("gen_balanced: q must lie in (0, 1]");
  check_closed_probability(p);
  for (std::size_t c = 0; c < class_sizes.size(); ++c) {
    if (class_sizes[c] == 0) throw ParameterError("gen_balanced: empty color class");
    if (c > 0 && class_sizes[c] > class_sizes[c - 1])
      throw ParameterError("gen_balanced: class sizes must be nonincreasing");
  }
  if (static_cast<double>(class_sizes.back()) <
      q * static_cast<double>(class_sizes.front()) - 1e-9)
    throw ParameterError("gen_balanced: smallest class is below q times the largest");
  return multipartite(ModelKind::balanced, class_sizes, p, q, seed);
}

}  // namespace ashg
