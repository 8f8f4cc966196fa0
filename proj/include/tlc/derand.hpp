#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tlc/execution.hpp"

namespace tlc {

enum class FamilyKind { splitter, universal, perfect_hash };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view text);

/// An explicit list of functions [n] -> [q]. Elements and values are 0-based
/// here; the text format shifts both to 1-based.
class FunctionFamily {
 public:
  /// Throws InputError unless n >= 1 and 1 <= q <= 65536.
  FunctionFamily(int n, int q, FamilyKind kind, int k, std::string meta = {});

  int n() const { return n_; }
  int q() const { return q_; }
  int k() const { return k_; }
  FamilyKind kind() const { return kind_; }
  const std::string& meta() const { return meta_; }
  void set_meta(std::string meta) { meta_ = std::move(meta); }

  std::size_t size() const { return values_.size() / static_cast<std::size_t>(n_); }
  int at(std::size_t f, int x) const { return values_[f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x)]; }
  std::span<const std::uint16_t> function(std::size_t f) const {
    return {values_.data() + f * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }

  /// Appends one function; throws InputError on wrong length or a value >= q.
  void add(std::span<const std::uint16_t> f);
  void add(std::span<const int> f);
  /// Drops repeated functions, keeping first occurrences in order.
  void dedupe();

 private:
  int n_;
  int q_;
  FamilyKind kind_;
  int k_;
  std::string meta_;
  std::vector<std::uint16_t> values_;
};

/// Work caps for the brute-force constructions and checks.
struct FamilyLimits {
  static constexpr std::uint64_t kMaxConstraints = 20'000'000;
  static constexpr std::uint64_t kMaxFunctions = 4'000'000;
};

std::uint64_t binomial(int n, int k);
/// q^e saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, int e);

/// All C(n, q-1) threshold functions: the values step up by one after each
/// chosen split point. An (n,k,q)-splitter for every k.
FunctionFamily build_interval_splitter(int n, int k, int q);

/// h_a(x) = ((a * x) mod p) mod k^2 over a in [1, p-1], x in [1, n], with p
/// the smallest prime >= max(n, k^2 + 1). An (n,k,k^2)-splitter of size O(n).
FunctionFamily build_hash_splitter(int n, int k);

/// (n,k,q)-universal family built one function at a time by the method of
/// conditional expectations. Each new function covers at least a 1/q^k share
/// of the still uncovered (S, phi) pairs, which gives greedy_size_bound.
FunctionFamily build_universal_greedy(int n, int k, int q);

/// ceil((k ln n + k ln q) / ln(q^k / (q^k - 1))) + 1.
std::uint64_t greedy_size_bound(int n, int k, int q);

/// Three-level composition f(x) = g_r(f_a(x)), r = f_b(f_a(x)), over a hash
/// splitter, an interval splitter and greedy families on [k^2].
FunctionFamily compose_universal(int n, int k, int q);

/// All q^n functions, declared (n,k,q)-universal.
FunctionFamily build_complete_family(int n, int k, int q);

/// Universal family sized for family-mode solving on n vertices:
/// (n, 6k + 8 ell, 2 ceil(sqrt ell) + 2). The complete family is used when
/// 6k + 8 ell >= n, the greedy one when it fits the caps, else composition.
FunctionFamily build_solver_family(int n, int k, int ell);

/// Exhaustive check of the declared property against every k-subset (and,
/// for universal kind, every assignment). Throws SizeError past the caps.
bool verify_family(const FunctionFamily& fam, Execution exec = Execution::parallel);

}  // namespace tlc
