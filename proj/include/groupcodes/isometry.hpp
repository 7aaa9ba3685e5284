#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "groupcodes/code.hpp"

namespace groupcodes {

/// A coordinate permutation sigma of I_n, stored 0-based: sigma[j] = sigma(j).
struct Equivalence {
  std::vector<std::size_t> sigma;

  static Equivalence identity(std::size_t n);
  /// From the 1-based array form used in witness files and formulas.
  static Equivalence from_one_based(const std::vector<std::size_t>& images);
  std::vector<std::size_t> one_based() const;

  std::size_t size() const noexcept { return sigma.size(); }
  Equivalence inverse() const;
  bool is_permutation() const;

  friend bool operator==(const Equivalence&, const Equivalence&) = default;
  friend auto operator<=>(const Equivalence&, const Equivalence&) = default;
};

/// One alphabet bijection per coordinate.
struct Configuration {
  std::vector<std::vector<Element>> maps;

  static Configuration identity(std::size_t q, std::size_t n);
  std::size_t size() const noexcept { return maps.size(); }
  /// f_sigma: coordinate i uses the map f_{sigma(i)}.
  Configuration reindexed(const Equivalence& sigma) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// phi = f o sigma-bar, acting by the pull convention
///   phi(x)_j = f_j(x_{sigma(j)}).
/// Stored extensionally: equal isometries compare equal.
class Isometry {
 public:
  Isometry(Configuration config, Equivalence equiv);

  static Isometry identity(std::size_t q, std::size_t n);
  static Isometry from_equivalence(std::size_t q, Equivalence equiv);

  std::size_t length() const noexcept { return equiv_.size(); }
  std::size_t q() const noexcept { return q_; }
  const Configuration& config() const noexcept { return config_; }
  const Equivalence& equiv() const noexcept { return equiv_; }

  Word operator()(const Word& x) const;
  Isometry inverse() const;

  friend bool operator==(const Isometry&, const Isometry&) = default;
  friend auto operator<=>(const Isometry&, const Isometry&) = default;

 private:
  std::size_t q_ = 0;
  Configuration config_;
  Equivalence equiv_;
};

/// y_j = f_j(x_{sigma(j)}).
Word apply_pull(const Isometry& iso, const Word& x);
/// y_{sigma(t)} = x_t. Equals the pull action of sigma^{-1}.
Word apply_push(const Equivalence& equiv, const Word& x);

/// a o b, renormalised to f o sigma-bar form.
Isometry compose(const Isometry& a, const Isometry& b);

/// Image code under the pull action. Group-code status is not carried over;
/// use GroupCode::from_code on the result when the isometry is known to be a
/// homomorphism.
Code apply_to_code(const Isometry& iso, const Code& c);
Code apply_push_to_code(const Equivalence& equiv, const Code& c);

/// |Iso(A^n)| = (q!)^n * n!.
BigInt isometry_group_order(std::size_t q, std::size_t n);

inline constexpr std::uint64_t kDefaultIsometryCap = 10'000'000;

/// Yields every isometry of A^n exactly once, lexicographically over
/// (sigma, f_1, ..., f_n).
class IsometryEnumerator {
 public:
  /// Throws Errc::resource_limit when (q!)^n * n! exceeds `cap`.
  IsometryEnumerator(std::size_t q, std::size_t n, std::uint64_t cap = kDefaultIsometryCap);

  std::optional<Isometry> next();

 private:
  bool advance();

  std::size_t q_;
  std::size_t n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::size_t> sigma_;
  std::vector<std::vector<Element>> maps_;
};

}  // namespace groupcodes
