#include "tlc/derand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "tlc/graph.hpp"

namespace tlc {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::splitter:
      return "splitter";
    case FamilyKind::universal:
      return "universal";
    case FamilyKind::perfect_hash:
      return "perfect-hash";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "splitter") return FamilyKind::splitter;
  if (text == "universal") return FamilyKind::universal;
  if (text == "perfect-hash") return FamilyKind::perfect_hash;
  throw InputError("unknown family kind '" + std::string(text) + "'");
}

FunctionFamily::FunctionFamily(int n, int q, FamilyKind kind, int k, std::string meta)
    : n_(n), q_(q), kind_(kind), k_(k), meta_(std::move(meta)) {
  if (n < 1) throw InputError("function family needs n >= 1");
  if (q < 1 || q > 65536) throw InputError("function family needs 1 <= q <= 65536");
  if (k < 0) throw InputError("function family needs k >= 0");
}

void FunctionFamily::add(std::span<const std::uint16_t> f) {
  if (static_cast<int>(f.size()) != n_) throw InputError("function has the wrong length");
  for (auto v : f) {
    if (v >= q_) throw InputError("function value out of range");
  }
  values_.insert(values_.end(), f.begin(), f.end());
}

void FunctionFamily::add(std::span<const int> f) {
  std::vector<std::uint16_t> tmp;
  tmp.reserve(f.size());
  for (int v : f) {
    if (v < 0 || v >= q_) throw InputError("function value out of range");
    tmp.push_back(static_cast<std::uint16_t>(v));
  }
  add(std::span<const std::uint16_t>(tmp));
}

void FunctionFamily::dedupe() {
  struct Hash {
    const FunctionFamily* fam;
    std::size_t operator()(std::size_t i) const {
      std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
      for (auto v : fam->function(i)) {
        h ^= v;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };
  struct Eq {
    const FunctionFamily* fam;
    bool operator()(std::size_t a, std::size_t b) const {
      auto fa = fam->function(a);
      auto fb = fam->function(b);
      return std::equal(fa.begin(), fa.end(), fb.begin());
    }
  };
  std::unordered_set<std::size_t, Hash, Eq> seen(size() * 2 + 1, Hash{this}, Eq{this});
  std::vector<std::uint16_t> kept;
  kept.reserve(values_.size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen.insert(i).second) {
      auto f = function(i);
      kept.insert(kept.end(), f.begin(), f.end());
    }
  }
  values_ = std::move(kept);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_pow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

namespace {

// All k-subsets of [0, n) in lexicographic order, flattened.
std::vector<int> all_subsets(int n, int k) {
  std::vector<int> out;
  if (k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.insert(out.end(), c.begin(), c.end());
    int pos = k - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return out;
    ++c[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_constraints(std::uint64_t count, const char* what) {
  if (count > FamilyLimits::kMaxConstraints) {
    throw SizeError(std::string(what) + ": " + std::to_string(count) + " constraints exceed the cap");
  }
}

}  // namespace

FunctionFamily build_interval_splitter(int n, int k, int q) {
  if (k < 1 || q < 1 || q > n || k > n) {
    throw InputError("interval splitter needs 1 <= k <= n and 1 <= q <= n");
  }
  if (binomial(n, q - 1) > FamilyLimits::kMaxFunctions) throw SizeError("interval splitter too large");
  FunctionFamily fam(n, q, FamilyKind::splitter, k, "interval");
  std::vector<std::uint16_t> f(static_cast<std::size_t>(n));
  // Split points are elements 1..n (1-based); value j for x_{j-1} < x <= x_j.
  std::vector<int> splits = all_subsets(n, q - 1);
  std::size_t count = q == 1 ? 1 : splits.size() / static_cast<std::size_t>(q - 1);
  for (std::size_t s = 0; s < count; ++s) {
    int j = 0;
    for (int x = 0; x < n; ++x) {
      // 0-based split point p means "1-based x_j = p + 1"; x (0-based) moves past it when x > p.
      while (j < q - 1 && x > splits[s * static_cast<std::size_t>(q - 1) + static_cast<std::size_t>(j)]) ++j;
      f[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(j);
    }
    fam.add(std::span<const std::uint16_t>(f));
  }
  fam.dedupe();
  return fam;
}

FunctionFamily build_hash_splitter(int n, int k) {
  if (n < 1 || k < 1) throw InputError("hash splitter needs n, k >= 1");
  if (k > 255) throw SizeError("hash splitter range k^2 too large");
  int range = k * k;
  int p = std::max(n, range + 1);
  while (!is_prime(p)) ++p;
  FunctionFamily fam(n, range, FamilyKind::splitter, k, "hash p=" + std::to_string(p));
  std::vector<std::uint16_t> f(static_cast<std::size_t>(n));
  for (long long a = 1; a < p; ++a) {
    for (int x = 1; x <= n; ++x) {
      f[static_cast<std::size_t>(x - 1)] = static_cast<std::uint16_t>((a * x) % p % range);
    }
    fam.add(std::span<const std::uint16_t>(f));
  }
  fam.dedupe();
  return fam;
}

std::uint64_t greedy_size_bound(int n, int k, int q) {
  if (q == 1 || k == 0) return 1;
  double qk = std::pow(static_cast<double>(q), k);
  double num = k * std::log(static_cast<double>(n)) + k * std::log(static_cast<double>(q));
  double den = std::log(qk / (qk - 1.0));
  return static_cast<std::uint64_t>(std::ceil(num / den)) + 1;
}

FunctionFamily build_universal_greedy(int n, int k, int q) {
  if (n < 1 || k < 0 || q < 1) throw InputError("greedy universal family needs n >= 1, k >= 0, q >= 1");
  FunctionFamily fam(n, q, FamilyKind::universal, k, "greedy");
  std::vector<std::uint16_t> f(static_cast<std::size_t>(n), 0);
  if (q == 1 || k == 0 || k > n) {
    fam.add(std::span<const std::uint16_t>(f));
    return fam;
  }
  std::uint64_t assignments = saturating_pow(static_cast<std::uint64_t>(q), k);
  std::uint64_t subsets_count = binomial(n, k);
  require_constraints(subsets_count > 0 && assignments > FamilyLimits::kMaxConstraints / subsets_count
                          ? FamilyLimits::kMaxConstraints + 1
                          : subsets_count * assignments,
                      "greedy universal family");

  const std::size_t Q = assignments;
  const std::vector<int> subsets = all_subsets(n, k);
  const std::size_t S = subsets.size() / static_cast<std::size_t>(k);
  std::vector<std::size_t> place(static_cast<std::size_t>(k) + 1, 1);  // q^pos
  for (int i = 1; i <= k; ++i) place[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(i - 1)] * static_cast<std::size_t>(q);

  // For each element x: (subset, position of x in it). Elements of a subset
  // are increasing, so when x is assigned, exactly `pos` of its subset
  // members are already fixed.
  std::vector<std::vector<std::pair<std::size_t, int>>> containing(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < S; ++s) {
    for (int pos = 0; pos < k; ++pos) {
      containing[static_cast<std::size_t>(subsets[s * static_cast<std::size_t>(k) + static_cast<std::size_t>(pos)])].emplace_back(s, pos);
    }
  }
  // Assignment phi is read in base q with digit `pos` belonging to the pos-th element.
  auto digit = [&](std::size_t phi, int pos) { return static_cast<int>(phi / place[static_cast<std::size_t>(pos)] % static_cast<std::size_t>(q)); };

  std::vector<char> covered(S * Q, 0);
  std::size_t uncovered = S * Q;
  std::vector<char> alive;
  std::vector<std::uint64_t> score(static_cast<std::size_t>(q));
  while (uncovered > 0) {
    alive.assign(covered.size(), 0);
    for (std::size_t i = 0; i < covered.size(); ++i) alive[i] = !covered[i];
    for (int x = 0; x < n; ++x) {
      std::fill(score.begin(), score.end(), 0);
      for (auto [s, pos] : containing[static_cast<std::size_t>(x)]) {
        std::uint64_t w = place[static_cast<std::size_t>(pos)];
        const char* a = alive.data() + s * Q;
        for (std::size_t phi = 0; phi < Q; ++phi) {
          if (a[phi]) score[static_cast<std::size_t>(digit(phi, pos))] += w;
        }
      }
      int best = static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
      f[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(best);
      for (auto [s, pos] : containing[static_cast<std::size_t>(x)]) {
        char* a = alive.data() + s * Q;
        for (std::size_t phi = 0; phi < Q; ++phi) {
          if (a[phi] && digit(phi, pos) != best) a[phi] = 0;
        }
      }
    }
    std::size_t gained = 0;
    for (std::size_t i = 0; i < covered.size(); ++i) {
      if (alive[i]) {
        covered[i] = 1;
        ++gained;
      }
    }
    if (gained == 0) throw std::logic_error("greedy universal family made no progress");
    uncovered -= gained;
    fam.add(std::span<const std::uint16_t>(f));
  }
  return fam;
}

FunctionFamily build_complete_family(int n, int k, int q) {
  std::uint64_t count = saturating_pow(static_cast<std::uint64_t>(q), n);
  if (count > FamilyLimits::kMaxFunctions) throw SizeError("complete family q^n exceeds the cap");
  FunctionFamily fam(n, q, FamilyKind::universal, k, "complete");
  std::vector<std::uint16_t> f(static_cast<std::size_t>(n), 0);
  for (std::uint64_t i = 0; i < count; ++i) {
    fam.add(std::span<const std::uint16_t>(f));
    for (int x = n - 1; x >= 0; --x) {  // odometer, last element fastest
      if (++f[static_cast<std::size_t>(x)] < q) break;
      f[static_cast<std::size_t>(x)] = 0;
    }
  }
  return fam;
}

FunctionFamily compose_universal(int n, int k, int q) {
  if (n < 1 || k < 1 || q < 1) throw InputError("composition needs n, k, q >= 1");
  int b = 1;
  while ((1 << b) < k) ++b;  // max(1, ceil(log2 k))
  int domain = k * k;
  FunctionFamily a = build_hash_splitter(n, k);
  FunctionFamily split = build_interval_splitter(domain, k, b);
  int block = (k + b - 1) / b;
  FunctionFamily d = build_universal_greedy(domain, block, q);

  std::uint64_t total = a.size() * split.size();
  total = total > FamilyLimits::kMaxFunctions ? total : total * saturating_pow(d.size(), b);
  if (total > FamilyLimits::kMaxFunctions) throw SizeError("composed family exceeds the function cap");

  FunctionFamily fam(n, q, FamilyKind::universal, k,
                     "compose hash=" + std::to_string(a.size()) + " interval=" + std::to_string(split.size()) +
                         " greedy=" + std::to_string(d.size()) + " blocks=" + std::to_string(b));
  std::vector<std::size_t> g(static_cast<std::size_t>(b), 0);  // index into d per block
  std::vector<std::uint16_t> f(static_cast<std::size_t>(n));
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    for (std::size_t ib = 0; ib < split.size(); ++ib) {
      std::fill(g.begin(), g.end(), 0);
      for (;;) {
        for (int x = 0; x < n; ++x) {
          int y = a.at(ia, x);
          int r = split.at(ib, y);
          f[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(d.at(g[static_cast<std::size_t>(r)], y));
        }
        fam.add(std::span<const std::uint16_t>(f));
        int pos = b - 1;
        while (pos >= 0 && ++g[static_cast<std::size_t>(pos)] == d.size()) g[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
      }
    }
  }
  fam.dedupe();
  return fam;
}

FunctionFamily build_solver_family(int n, int k, int ell) {
  if (n < 1 || k < 0 || ell < 0) throw InputError("solver family needs n >= 1, k >= 0, ell >= 0");
  int target = 6 * k + 8 * ell;
  int q = t_ell_color_bound(ell);
  FunctionFamily fam = [&] {
    if (target >= n) return build_complete_family(n, n, q);
    if (target == 0) return build_universal_greedy(n, 0, q);
    std::uint64_t constraints = binomial(n, target);
    std::uint64_t per = saturating_pow(static_cast<std::uint64_t>(q), target);
    if (per <= FamilyLimits::kMaxConstraints && constraints <= FamilyLimits::kMaxConstraints / per) {
      return build_universal_greedy(n, target, q);
    }
    return compose_universal(n, target, q);
  }();
  fam.set_meta(fam.meta() + " solver k=" + std::to_string(k) + " ell=" + std::to_string(ell));
  return fam;
}

namespace {

bool splits_evenly(std::span<const std::uint16_t> f, const int* subset, int k, std::vector<int>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  for (int i = 0; i < k; ++i) ++counts[f[static_cast<std::size_t>(subset[i])]];
  auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  return *hi - *lo <= 1;
}

bool injective(std::span<const std::uint16_t> f, const int* subset, int k) {
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (f[static_cast<std::size_t>(subset[i])] == f[static_cast<std::size_t>(subset[j])]) return false;
    }
  }
  return true;
}

bool subset_ok(const FunctionFamily& fam, const int* subset) {
  int k = fam.k();
  if (fam.kind() == FamilyKind::universal) {
    std::size_t Q = saturating_pow(static_cast<std::uint64_t>(fam.q()), k);
    std::vector<char> seen(Q, 0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < fam.size() && count < Q; ++i) {
      auto f = fam.function(i);
      std::size_t code = 0;
      for (int j = 0; j < k; ++j) code = code * static_cast<std::size_t>(fam.q()) + f[static_cast<std::size_t>(subset[j])];
      if (!seen[code]) {
        seen[code] = 1;
        ++count;
      }
    }
    return count == Q;
  }
  std::vector<int> counts(static_cast<std::size_t>(fam.q()));
  for (std::size_t i = 0; i < fam.size(); ++i) {
    bool ok = fam.kind() == FamilyKind::splitter ? splits_evenly(fam.function(i), subset, k, counts)
                                                 : injective(fam.function(i), subset, k);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool verify_family(const FunctionFamily& fam, Execution exec) {
  int k = fam.k();
  if (k > fam.n()) return fam.size() > 0;
  std::uint64_t subsets = binomial(fam.n(), k);
  std::uint64_t per = fam.kind() == FamilyKind::universal ? saturating_pow(static_cast<std::uint64_t>(fam.q()), k) : 1;
  require_constraints(per > FamilyLimits::kMaxConstraints || subsets > FamilyLimits::kMaxConstraints / per
                          ? FamilyLimits::kMaxConstraints + 1
                          : subsets * per,
                      "verify_family");
  if (fam.size() == 0) return false;
  if (k == 0) return true;
  const std::vector<int> all = all_subsets(fam.n(), k);
  const long long count = static_cast<long long>(all.size() / static_cast<std::size_t>(k));
  bool ok = true;
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
    for (long long s = 0; s < count; ++s) {
      ok = ok && subset_ok(fam, all.data() + s * k);
    }
  } else {
    for (long long s = 0; s < count && ok; ++s) ok = subset_ok(fam, all.data() + s * k);
  }
  return ok;
}

}  // namespace tlc
