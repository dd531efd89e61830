#include "ashg/game.hpp"

#include <string>

#include "ashg/error.hpp"

namespace ashg {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::er: return "er";
    case ModelKind::turan: return "turan";
    case ModelKind::balanced: return "balanced";
    case ModelKind::manual: return "manual";
    case ModelKind::reduced: return "reduced";
  }
  return "manual";
}

ModelKind model_kind_from_string(std::string_view name) {
  if (name == "er") return ModelKind::er;
  if (name == "turan") return ModelKind::turan;
  if (name == "balanced") return ModelKind::balanced;
  if (name == "manual") return ModelKind::manual;
  if (name == "reduced") return ModelKind::reduced;
  throw ParseError("unknown model kind '" + std::string(name) + "'");
}

std::vector<std::size_t> InstanceMeta::class_of_agents() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < class_sizes.size(); ++c) out.insert(out.end(), class_sizes[c], c);
  return out;
}

std::vector<std::pair<Agent, std::size_t>> InstanceMeta::class_ranges() const {
  std::vector<std::pair<Agent, std::size_t>> out;
  Agent first = 0;
  for (std::size_t size : class_sizes) {
    out.emplace_back(first, size);
    first += size;
  }
  return out;
}

namespace {

std::size_t upper_len(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::size_t full_len(std::size_t n) { return n < 2 ? 0 : n * (n - 1); }

void check_len(std::size_t got, std::size_t want, std::string_view what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected " + std::to_string(want) +
                         " weights, got " + std::to_string(got));
  }
}

}  // namespace

ValuationMatrix ValuationMatrix::symmetric_int(std::size_t n, std::vector<std::int64_t> upper,
                                               std::int64_t unit, InstanceMeta meta) {
  if (n == 0) throw DimensionError("a game needs at least one agent");
  if (unit <= 0) throw ParameterError("weight unit must be positive");
  check_len(upper.size(), upper_len(n), "symmetric weights");
  ValuationMatrix g;
  g.n_ = n;
  g.mode_ = WeightMode::integer;
  g.symmetric_ = true;
  g.unit_ = unit;
  g.ints_ = std::move(upper);
  g.meta_ = std::move(meta);
  g.meta_.n = n;
  return g;
}

ValuationMatrix ValuationMatrix::asymmetric_int(std::size_t n,
                                                std::vector<std::int64_t> off_diagonal,
                                                std::int64_t unit, InstanceMeta meta) {
  if (n == 0) throw DimensionError("a game needs at least one agent");
  if (unit <= 0) throw ParameterError("weight unit must be positive");
  check_len(off_diagonal.size(), full_len(n), "asymmetric weights");
  ValuationMatrix g;
  g.n_ = n;
  g.mode_ = WeightMode::integer;
  g.symmetric_ = false;
  g.unit_ = unit;
  g.ints_ = std::move(off_diagonal);
  g.meta_ = std::move(meta);
  g.meta_.n = n;
  return g;
}

ValuationMatrix ValuationMatrix::symmetric_real(std::size_t n, std::vector<double> upper,
                                                InstanceMeta meta) {
  if (n == 0) throw DimensionError("a game needs at least one agent");
  check_len(upper.size(), upper_len(n), "symmetric weights");
  ValuationMatrix g;
  g.n_ = n;
  g.mode_ = WeightMode::real;
  g.symmetric_ = true;
  g.reals_ = std::move(upper);
  g.meta_ = std::move(meta);
  g.meta_.n = n;
  return g;
}

ValuationMatrix ValuationMatrix::asymmetric_real(std::size_t n, std::vector<double> off_diagonal,
                                                 InstanceMeta meta) {
  if (n == 0) throw DimensionError("a game needs at least one agent");
  check_len(off_diagonal.size(), full_len(n), "asymmetric weights");
  ValuationMatrix g;
  g.n_ = n;
  g.mode_ = WeightMode::real;
  g.symmetric_ = false;
  g.reals_ = std::move(off_diagonal);
  g.meta_ = std::move(meta);
  g.meta_.n = n;
  return g;
}

ValuationMatrix ValuationMatrix::symmetric_int_from(
    std::size_t n, const std::function<std::int64_t(Agent, Agent)>& weight, std::int64_t unit,
    InstanceMeta meta) {
  std::vector<std::int64_t> upper;
  upper.reserve(upper_len(n));
  for (Agent i = 0; i < n; ++i)
    for (Agent j = i + 1; j < n; ++j) upper.push_back(weight(i, j));
  return symmetric_int(n, std::move(upper), unit, std::move(meta));
}

ValuationMatrix ValuationMatrix::asymmetric_int_from(
    std::size_t n, const std::function<std::int64_t(Agent, Agent)>& weight, std::int64_t unit,
    InstanceMeta meta) {
  std::vector<std::int64_t> full;
  full.reserve(full_len(n));
  for (Agent i = 0; i < n; ++i)
    for (Agent j = 0; j < n; ++j)
      if (i != j) full.push_back(weight(i, j));
  return asymmetric_int(n, std::move(full), unit, std::move(meta));
}

std::size_t ValuationMatrix::index(Agent i, Agent j) const {
  if (symmetric_) {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }
  return i * (n_ - 1) + (j < i ? j : j - 1);
}

std::int64_t ValuationMatrix::scaled(Agent i, Agent j) const {
  if (mode_ != WeightMode::integer) throw ModeError("scaled weights need an integer-mode game");
  if (i == j) return 0;
  return ints_[index(i, j)];
}

double ValuationMatrix::value(Agent i, Agent j) const {
  if (i == j) return 0.0;
  if (mode_ == WeightMode::integer)
    return static_cast<double>(ints_[index(i, j)]) / static_cast<double>(unit_);
  return reals_[index(i, j)];
}

bool ValuationMatrix::is_aversion() const {
  if (mode_ != WeightMode::integer || unit_ != 1) return false;
  const auto neg = -static_cast<std::int64_t>(n_);
  for (std::int64_t w : ints_)
    if (w != 1 && w != neg) return false;
  return true;
}

ValuationMatrix ValuationMatrix::with_meta(InstanceMeta meta) const {
  ValuationMatrix g = *this;
  g.meta_ = std::move(meta);
  g.meta_.n = n_;
  return g;
}

void require_symmetric_aversion(const ValuationMatrix& game, std::string_view who) {
  if (!game.symmetric())
    throw ModeError(std::string(who) + " requires a symmetric game");
  if (!game.is_aversion())
    throw ModeError(std::string(who) + " requires an aversion-to-enemies game (weights in {-n, 1})");
}

}  // namespace ashg
