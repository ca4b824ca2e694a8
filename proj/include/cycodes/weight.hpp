/*
 * Copyright 2026 The cycodes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycodes/codes.hpp"

namespace cycodes {

/// Tuning knobs shared by the weight-search entry points.  All searches
/// are deterministic for any thread count: enumeration is split into
/// first-index bands whose partial results merge by (weight, message key),
/// and weight levels always finish completely before a stop is honored.
struct WeightOptions {
  /// Max codeword evaluations for the exhaustive engine (q^k must fit).
  uint64_t exhaustive_budget = uint64_t(1) << 26;
  int threads = 1;
  /// Stop the search once the best found weight is <= stop_at (the
  /// current weight level still completes).  The report is then an
  /// attained upper bound, not a certified minimum.
  std::optional<uint64_t> stop_at;
  /// Stop after this enumeration level even without certification.
  std::optional<uint64_t> max_level;
  /// Keep searching until the minimum odd-like weight is certified too
  /// (it usually needs deeper levels than the plain minimum).
  bool need_odd_exact = false;
  /// When nonempty, finished results and per-level checkpoints are stored
  /// here and picked up by later runs.
  std::string cache_dir;
};

enum class WeightMethod { kExhaustive, kBz, kUpperOnly };

const char* weight_method_name(WeightMethod m);

/// Outcome of a weight search.  min_weight / min_odd_weight are exact
/// when the matching flag says so, otherwise best-found upper bounds.
/// The certificate is a full coordinate-value vector re-checked to be a
/// codeword of the reported weight.
struct WeightReport {
  std::string label;
  uint64_t n = 0, k = 0, q = 0;
  uint64_t min_weight = 0;
  /// Minimum weight over codewords with nonzero coordinate sum; 0 when no
  /// such codeword exists (exactly when x - 1 divides the generator).
  uint64_t min_odd_weight = 0;
  std::vector<uint8_t> certificate;
  WeightMethod method = WeightMethod::kBz;
  bool exact = false;
  bool odd_exact = false;
  std::vector<uint64_t> bz_rank_profile;  ///< fresh-pivot ranks per window
  uint64_t levels_done = 0;
  uint64_t lower_bound = 0;  ///< certified lower bound reached by the search
  double elapsed_seconds = 0.0;
  bool from_cache = false;
};

/// Exact minimum weight / odd-like minimum by enumerating all q^k - 1
/// nonzero codewords in message-increment order.  Throws
/// std::invalid_argument when q^k exceeds the budget.
WeightReport min_weight_exhaustive(const CyclicCode& code, const WeightOptions& opt = {});

/// Brouwer-Zimmermann search over systematic generator matrices on
/// consecutive column windows, enumerating messages of weight 1, 2, ...
/// per matrix and maintaining the lower bound
///   sum_i max(0, w + 1 - (k - gamma_i)).
/// Returns an exact minimum when the bound meets the best upper bound,
/// otherwise (stop_at / max_level) an attained upper bound.
WeightReport min_weight_bz(const CyclicCode& code, const WeightOptions& opt = {});

/// Full weight enumerator A_0..A_n by exhaustive enumeration; same
/// budget rule as min_weight_exhaustive.
std::vector<uint64_t> weight_distribution(const CyclicCode& code, const WeightOptions& opt = {});

/// True iff the coordinate-value vector encodes a codeword: its
/// polynomial must be divisible by the generator.
bool is_codeword(const CyclicCode& code, const std::vector<uint8_t>& values);

/// Verdict of one bound assertion, with the slack (lhs - rhs) of the
/// binding inequality.
struct BoundCheck {
  bool applicable = true;
  bool ok = true;
  int64_t slack = 0;
};

/// Square-root bounds on the minimum odd-like weight of the D/V family
/// codes: d_odd^2 >= n always, and d_odd^2 - d_odd + 1 >= n when both
/// primes are congruent to -1 mod 8.  `enhanced` reports whether the
/// stronger form applied.
struct SqrtBoundCheck {
  BoundCheck base;
  BoundCheck enhanced;  ///< applicable only when n1 = n2 = -1 (mod 8)
  uint64_t d_odd = 0;
};
SqrtBoundCheck verify_square_root_bounds(uint64_t d_odd, uint64_t n1, uint64_t n2);

/// The two covering-code odd-like minima that bound the U-family (0,0,0)
/// code from below: omega_side[j] is the exact minimum odd-like weight of
/// the [n, (n_j+1)/2] code generated by (x^n-1)/((x-1) d_1^{(n_j)}(x)),
/// computed exhaustively; the assertion is
///   omega_000^2 >= max(omega_side[0], omega_side[1]).
struct OddSqrtBoundCheck {
  uint64_t omega_side[2] = {0, 0};
  uint64_t omega_000 = 0;
  BoundCheck check;
};
OddSqrtBoundCheck verify_odd_weight_sqrt_bound(const CodeContext& ctx, uint64_t omega_000,
                                               const WeightOptions& opt = {});

/// The helper behind verify_odd_weight_sqrt_bound, exposed for tests:
/// the [n, (n_j+1)/2] covering code for side j in {0, 1} (j = 0 uses n1).
CyclicCode covering_side_code(const CodeContext& ctx, int side);

}  // namespace cycodes
