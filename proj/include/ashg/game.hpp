#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ashg {

using Agent = std::size_t;

enum class ModelKind { er, turan, balanced, manual, reduced };

std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view name);

/// Where an instance came from. Multipartite models store their color
/// classes as contiguous agent ranges: class c holds agents
/// [sum(class_sizes[0..c)), sum(class_sizes[0..c])).
struct InstanceMeta {
  ModelKind kind = ModelKind::manual;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::size_t> k;
  std::optional<double> q;
  std::vector<std::size_t> class_sizes;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> v_minus;

  bool is_multipartite() const {
    return (kind == ModelKind::turan || kind == ModelKind::balanced) && !class_sizes.empty();
  }
  /// Color class index of every agent; empty when there is no class structure.
  std::vector<std::size_t> class_of_agents() const;
  /// Agent index ranges of each class as (first, size).
  std::vector<std::pair<Agent, std::size_t>> class_ranges() const;

  friend bool operator==(const InstanceMeta&, const InstanceMeta&) = default;
};

enum class WeightMode { integer, real };

/// The valuations v_i(j) of an additively separable hedonic game.
///
/// Integer mode stores `v_i(j) * unit` as exact int64 values; real mode
/// stores doubles. Symmetric games keep the strict upper triangle in
/// row-major order, asymmetric games the full off-diagonal matrix in
/// row-major order. The diagonal is implicitly zero.
class ValuationMatrix {
 public:
  ValuationMatrix() = default;

  static ValuationMatrix symmetric_int(std::size_t n, std::vector<std::int64_t> upper,
                                       std::int64_t unit = 1, InstanceMeta meta = {});
  static ValuationMatrix asymmetric_int(std::size_t n, std::vector<std::int64_t> off_diagonal,
                                        std::int64_t unit = 1, InstanceMeta meta = {});
  static ValuationMatrix symmetric_real(std::size_t n, std::vector<double> upper,
                                        InstanceMeta meta = {});
  static ValuationMatrix asymmetric_real(std::size_t n, std::vector<double> off_diagonal,
                                         InstanceMeta meta = {});

  /// Symmetric integer game with v(i,j) = weight(i,j) for i < j.
  static ValuationMatrix symmetric_int_from(
      std::size_t n, const std::function<std::int64_t(Agent, Agent)>& weight,
      std::int64_t unit = 1, InstanceMeta meta = {});
  /// Asymmetric integer game with v_i(j) = weight(i,j) for i != j.
  static ValuationMatrix asymmetric_int_from(
      std::size_t n, const std::function<std::int64_t(Agent, Agent)>& weight,
      std::int64_t unit = 1, InstanceMeta meta = {});

  std::size_t n() const { return n_; }
  WeightMode mode() const { return mode_; }
  bool is_integer() const { return mode_ == WeightMode::integer; }
  bool symmetric() const { return symmetric_; }
  std::int64_t unit() const { return unit_; }
  const InstanceMeta& meta() const { return meta_; }

  /// v_i(j) in scaled integer units. Integer mode only.
  std::int64_t scaled(Agent i, Agent j) const;
  /// v_i(j) as a double in natural units.
  double value(Agent i, Agent j) const;

  /// v_i(j) + v_j(i): the contribution of the unordered pair {i,j} to the
  /// welfare of a coalition containing both.
  std::int64_t pair_scaled(Agent i, Agent j) const { return scaled(i, j) + scaled(j, i); }
  double pair_value(Agent i, Agent j) const { return value(i, j) + value(j, i); }

  /// True for an integer game with unit 1 whose weights are all in {-n, 1}.
  bool is_aversion() const;
  /// v_i(j) > 0.
  bool positive(Agent i, Agent j) const { return value(i, j) > 0.0; }

  const std::vector<std::int64_t>& int_weights() const { return ints_; }
  const std::vector<double>& real_weights() const { return reals_; }

  ValuationMatrix with_meta(InstanceMeta meta) const;

  friend bool operator==(const ValuationMatrix&, const ValuationMatrix&) = default;

 private:
  std::size_t index(Agent i, Agent j) const;

  std::size_t n_ = 0;
  WeightMode mode_ = WeightMode::integer;
  bool symmetric_ = true;
  std::int64_t unit_ = 1;
  std::vector<std::int64_t> ints_;
  std::vector<double> reals_;
  InstanceMeta meta_;
};

/// Throws ModeError unless the game is a symmetric aversion-to-enemies game.
void require_symmetric_aversion(const ValuationMatrix& game, std::string_view who);

}  // namespace ashg
