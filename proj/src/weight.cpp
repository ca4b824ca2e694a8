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

#include "cycodes/weight.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"

namespace cycodes {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr uint64_t kInf = std::numeric_limits<uint64_t>::max();
constexpr int kMaxWords = 3;       // packed rows cover lengths up to 192
constexpr int kMaxDepth = 192;     // enumeration depth never exceeds n
constexpr int kReportVersion = 1;
constexpr int kCheckpointVersion = 1;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Packed coordinate planes.  A codeword lives in one (GF(2)) or two
// (GF(3), GF(4)) planes of W 64-bit words, so adding a row or taking a
// Hamming weight costs a handful of word operations for 64 coordinates
// at a time.

template <int W>
struct Bits {
  uint64_t v[W];
};

template <int W>
inline Bits<W> operator^(const Bits<W>& a, const Bits<W>& b) {
  Bits<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = a.v[i] ^ b.v[i];
  return r;
}
template <int W>
inline Bits<W> operator&(const Bits<W>& a, const Bits<W>& b) {
  Bits<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = a.v[i] & b.v[i];
  return r;
}
template <int W>
inline Bits<W> operator|(const Bits<W>& a, const Bits<W>& b) {
  Bits<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = a.v[i] | b.v[i];
  return r;
}
template <int W>
inline Bits<W> andnot(const Bits<W>& a, const Bits<W>& b) {  // a & ~b
  Bits<W> r;
  for (int i = 0; i < W; ++i) r.v[i] = a.v[i] & ~b.v[i];
  return r;
}
template <int W>
inline uint64_t popcnt(const Bits<W>& a) {
  uint64_t s = 0;
  for (int i = 0; i < W; ++i) s += std::popcount(a.v[i]);
  return s;
}
template <int W>
inline void set_bit(Bits<W>& a, int pos) {
  a.v[pos >> 6] |= uint64_t(1) << (pos & 63);
}
template <int W>
inline uint8_t get_bit(const Bits<W>& a, int pos) {
  return (a.v[pos >> 6] >> (pos & 63)) & 1;
}

// GF(2): one plane, addition is XOR.
template <int W>
struct KernelGF2 {
  struct Row {
    Bits<W> a;
  };
  static void add_into(Row& x, const Row& y) { x.a = x.a ^ y.a; }
  static uint64_t weight(const Row& x) { return popcnt(x.a); }
  static void set(Row& x, int pos, uint8_t val) {
    if (val) set_bit(x.a, pos);
  }
  static uint8_t get(const Row& x, int pos) { return get_bit(x.a, pos); }
};

// GF(3): value 1 lives in plane lo, value 2 in plane hi.  Addition mod 3
// is eight bit operations on the planes; negation would just swap them.
template <int W>
struct KernelGF3 {
  struct Row {
    Bits<W> lo, hi;
  };
  static void add_into(Row& x, const Row& y) {
    Bits<W> s = x.lo ^ y.lo;
    Bits<W> h = x.hi ^ y.hi;
    Bits<W> nlo = andnot(s, h) | (x.hi & y.hi);
    Bits<W> nhi = andnot(h, s) | (x.lo & y.lo);
    x.lo = nlo;
    x.hi = nhi;
  }
  static uint64_t weight(const Row& x) { return popcnt(x.lo | x.hi); }
  static void set(Row& x, int pos, uint8_t val) {
    if (val == 1) set_bit(x.lo, pos);
    if (val == 2) set_bit(x.hi, pos);
  }
  static uint8_t get(const Row& x, int pos) {
    return static_cast<uint8_t>(get_bit(x.lo, pos) | (get_bit(x.hi, pos) << 1));
  }
};

// GF(4) with element values 0, 1, w = 2, w^2 = 3: plane b0 keeps the low
// value bit, plane b1 the high one; addition is plane-wise XOR.
template <int W>
struct KernelGF4 {
  struct Row {
    Bits<W> b0, b1;
  };
  static void add_into(Row& x, const Row& y) {
    x.b0 = x.b0 ^ y.b0;
    x.b1 = x.b1 ^ y.b1;
  }
  static uint64_t weight(const Row& x) { return popcnt(x.b0 | x.b1); }
  static void set(Row& x, int pos, uint8_t val) {
    if (val & 1) set_bit(x.b0, pos);
    if (val & 2) set_bit(x.b1, pos);
  }
  static uint8_t get(const Row& x, int pos) {
    return static_cast<uint8_t>(get_bit(x.b0, pos) | (get_bit(x.b1, pos) << 1));
  }
};

template <class K>
struct KernelTag {
  using type = K;
};

/// Calls fn with the kernel matching the field and length; the packed
/// engines cover GF(2), GF(3) and GF(4) up to 192 coordinates.
template <class F>
decltype(auto) with_kernel(const FieldCtx& f, uint64_t n, F&& fn) {
  int words = static_cast<int>((n + 63) / 64);
  if (n == 0 || words > kMaxWords)
    throw std::invalid_argument("weight search: lengths above 192 are not supported");
  if (f.p == 2 && f.m == 1) {
    if (words == 1) return fn(KernelTag<KernelGF2<1>>{});
    if (words == 2) return fn(KernelTag<KernelGF2<2>>{});
    return fn(KernelTag<KernelGF2<3>>{});
  }
  if (f.p == 3 && f.m == 1) {
    if (words == 1) return fn(KernelTag<KernelGF3<1>>{});
    if (words == 2) return fn(KernelTag<KernelGF3<2>>{});
    return fn(KernelTag<KernelGF3<3>>{});
  }
  if (f.p == 2 && f.m == 2) {
    if (words == 1) return fn(KernelTag<KernelGF4<1>>{});
    if (words == 2) return fn(KernelTag<KernelGF4<2>>{});
    return fn(KernelTag<KernelGF4<3>>{});
  }
  throw std::invalid_argument(
      "weight search: packed arithmetic covers GF(2), GF(3) and GF(4) only");
}

template <class K>
std::vector<uint8_t> unpack_row(const typename K::Row& r, int n) {
  std::vector<uint8_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = K::get(r, i);
  return out;
}

// ---------------------------------------------------------------------------
// Exact-arithmetic generator matrices.

using ERow = std::vector<FieldElem>;

// k rows placing the generator coefficients at offsets 0..k-1; no
// wrap-around since deg g = n - k.
std::vector<ERow> shift_rows(const CyclicCode& code) {
  const FieldCtx& f = *code.field;
  std::vector<ERow> rows(code.k, ERow(code.n, f.zero()));
  for (uint64_t i = 0; i < code.k; ++i)
    for (size_t j = 0; j < code.gen.c.size(); ++j) rows[i][i + j] = code.gen.c[j];
  return rows;
}

// Reduced row echelon form restricted to columns [c0, c1): pivot rows
// move to the top and every non-pivot row ends with zeros across the
// whole window.  Returns the number of pivots (the window rank).
uint64_t rref_window(const FieldCtx& f, std::vector<ERow>& rows, uint64_t c0, uint64_t c1) {
  uint64_t k = rows.size(), piv = 0;
  for (uint64_t c = c0; c < c1 && piv < k; ++c) {
    uint64_t r = piv;
    while (r < k && f.is_zero(rows[r][c])) ++r;
    if (r == k) continue;
    std::swap(rows[piv], rows[r]);
    FieldElem inv = f.inv(rows[piv][c]);
    for (FieldElem& e : rows[piv]) e = f.mul(e, inv);
    for (uint64_t r2 = 0; r2 < k; ++r2) {
      if (r2 == piv || f.is_zero(rows[r2][c])) continue;
      FieldElem m = rows[r2][c];
      for (uint64_t cc = 0; cc < rows[r2].size(); ++cc)
        rows[r2][cc] = f.sub(rows[r2][cc], f.mul(m, rows[piv][cc]));
    }
    ++piv;
  }
  return piv;
}

using AddTab = std::array<std::array<uint8_t, 4>, 4>;

AddTab value_add_table(const FieldCtx& f) {
  AddTab t{};
  for (uint64_t a = 0; a < f.order; ++a)
    for (uint64_t b = 0; b < f.order; ++b)
      t[a][b] = static_cast<uint8_t>(f.value(f.add(f.from_value(a), f.from_value(b))));
  return t;
}

// One generator matrix with its rows pre-scaled by every nonzero field
// value (value s at slot s-1) and the matching coordinate sums.
template <class K>
struct PackedMat {
  int k = 0, n = 0, qm1 = 1;
  uint64_t gamma = 0;  ///< window rank
  std::vector<typename K::Row> scaled;
  std::vector<uint8_t> sigma;
};

template <class K>
PackedMat<K> pack_rows(const FieldCtx& f, const std::vector<ERow>& rows, uint64_t n,
                       uint64_t gamma) {
  PackedMat<K> M;
  M.k = static_cast<int>(rows.size());
  M.n = static_cast<int>(n);
  M.qm1 = static_cast<int>(f.order - 1);
  M.gamma = gamma;
  for (const ERow& row : rows) {
    for (uint64_t s = 1; s < f.order; ++s) {
      FieldElem sc = f.from_value(s);
      typename K::Row packed{};
      FieldElem sum = f.zero();
      for (uint64_t c = 0; c < n; ++c) {
        FieldElem e = f.mul(row[c], sc);
        K::set(packed, static_cast<int>(c), static_cast<uint8_t>(f.value(e)));
        sum = f.add(sum, e);
      }
      M.scaled.push_back(packed);
      M.sigma.push_back(static_cast<uint8_t>(f.value(sum)));
    }
  }
  return M;
}

// ---------------------------------------------------------------------------
// Level enumeration.  One level w of one matrix runs over all messages
// with exactly w nonzero entries, first nonzero entry fixed to 1 (scalar
// multiples share their weight).  Bands split the first row index
// round-robin; each band keeps its first-found improvements, and bands
// merge by (weight, message key) so the outcome is identical for every
// thread count.

struct BandBest {
  uint64_t w = kInf;
  uint64_t odd_w = kInf;
  std::vector<uint32_t> key;  ///< (row, scalar-slot) pairs, flattened
  std::vector<uint8_t> cert;
};

template <class K>
struct LevelRun {
  const PackedMat<K>* M = nullptr;
  uint64_t w = 0;
  const AddTab* add = nullptr;
  uint64_t best_w = kInf, odd_w = kInf;  // thresholds seeded from global bests
  bool improved = false, odd_improved = false;
  BandBest out;
  uint32_t rows_[kMaxDepth], scal_[kMaxDepth];

  LevelRun(const PackedMat<K>* m, uint64_t lvl, const AddTab* tab, uint64_t seed_w,
           uint64_t seed_odd)
      : M(m), w(lvl), add(tab), best_w(seed_w), odd_w(seed_odd) {}

  void leaf(const typename K::Row& row, uint64_t wt, uint8_t sum) {
    if (wt < best_w) {
      best_w = wt;
      improved = true;
      out.w = wt;
      out.key.clear();
      for (uint64_t t = 0; t < w; ++t) {
        out.key.push_back(rows_[t]);
        out.key.push_back(scal_[t]);
      }
      out.cert = unpack_row<K>(row, M->n);
    }
    if (sum != 0 && wt < odd_w) {
      odd_w = wt;
      odd_improved = true;
      out.odd_w = wt;
    }
  }

  void rec(uint64_t depth, int start, const typename K::Row& acc, uint8_t sum) {
    const int qm1 = M->qm1;
    if (depth + 1 == w) {
      for (int r = start; r < M->k; ++r) {
        const typename K::Row* sr = &M->scaled[size_t(r) * qm1];
        const uint8_t* ss = &M->sigma[size_t(r) * qm1];
        for (int si = 0; si < qm1; ++si) {
          typename K::Row leafrow = acc;
          K::add_into(leafrow, sr[si]);
          uint64_t wt = K::weight(leafrow);
          uint8_t s = (*add)[sum][ss[si]];
          if (wt < best_w || (s != 0 && wt < odd_w)) {
            rows_[depth] = r;
            scal_[depth] = si;
            leaf(leafrow, wt, s);
          }
        }
      }
      return;
    }
    for (int r = start; r < M->k; ++r) {
      rows_[depth] = r;
      for (int si = 0; si < qm1; ++si) {
        scal_[depth] = si;
        typename K::Row nxt = acc;
        K::add_into(nxt, M->scaled[size_t(r) * qm1 + si]);
        rec(depth + 1, r + 1, nxt, (*add)[sum][M->sigma[size_t(r) * qm1 + si]]);
      }
    }
  }

  void run(int band, int nbands) {
    const int qm1 = M->qm1;
    for (int i1 = band; i1 < M->k; i1 += nbands) {
      rows_[0] = i1;
      scal_[0] = 0;  // first nonzero scalar pinned to 1
      const typename K::Row& r0 = M->scaled[size_t(i1) * qm1];
      uint8_t s0 = M->sigma[size_t(i1) * qm1];
      if (w == 1)
        leaf(r0, K::weight(r0), s0);
      else
        rec(1, i1 + 1, r0, s0);
    }
  }
};

template <class K>
void run_level(const PackedMat<K>& M, uint64_t w, int threads, const AddTab& add,
               uint64_t& best_w, uint64_t& odd_w, std::vector<uint8_t>& cert) {
  int nb = std::max(1, std::min(threads, M.k));
  std::vector<LevelRun<K>> runs;
  runs.reserve(nb);
  for (int b = 0; b < nb; ++b) runs.emplace_back(&M, w, &add, best_w, odd_w);
  if (nb == 1) {
    runs[0].run(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nb);
    for (int b = 0; b < nb; ++b)
      pool.emplace_back([&runs, b, nb] { runs[size_t(b)].run(b, nb); });
    for (std::thread& t : pool) t.join();
  }
  int pick = -1;
  for (int b = 0; b < nb; ++b) {
    if (!runs[b].improved) continue;
    if (pick < 0 || runs[b].out.w < runs[pick].out.w ||
        (runs[b].out.w == runs[pick].out.w && runs[b].out.key < runs[pick].out.key))
      pick = b;
  }
  if (pick >= 0) {
    best_w = runs[pick].out.w;
    cert = runs[pick].out.cert;
  }
  for (int b = 0; b < nb; ++b)
    if (runs[b].odd_improved) odd_w = std::min(odd_w, runs[b].out.odd_w);
}

// ---------------------------------------------------------------------------
// Cache and checkpoint plumbing.

uint64_t fnv1a_u64(uint64_t h, uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t generator_hash(const CyclicCode& code) {
  uint64_t h = 14695981039346656037ull;
  h = fnv1a_u64(h, code.q);
  h = fnv1a_u64(h, code.n);
  for (const FieldElem& e : code.gen.c) h = fnv1a_u64(h, code.field->value(e));
  return h;
}

std::string hex64(uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

void atomic_write(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    out << text;
  }
  fs::rename(tmp, path);
}

json report_to_json(const WeightReport& r) {
  return json{{"version", kReportVersion},
              {"label", r.label},
              {"n", r.n},
              {"k", r.k},
              {"q", r.q},
              {"min_weight", r.min_weight},
              {"min_odd_weight", r.min_odd_weight},
              {"certificate", r.certificate},
              {"method", weight_method_name(r.method)},
              {"exact", r.exact},
              {"odd_exact", r.odd_exact},
              {"rank_profile", r.bz_rank_profile},
              {"levels_done", r.levels_done},
              {"lower_bound", r.lower_bound},
              {"elapsed_seconds", r.elapsed_seconds}};
}

bool report_from_json(const json& j, WeightReport* r) {
  if (!j.is_object() || j.value("version", 0) != kReportVersion) return false;
  r->label = j.value("label", std::string());
  r->n = j.value("n", uint64_t{0});
  r->k = j.value("k", uint64_t{0});
  r->q = j.value("q", uint64_t{0});
  r->min_weight = j.value("min_weight", uint64_t{0});
  r->min_odd_weight = j.value("min_odd_weight", uint64_t{0});
  r->certificate = j.value("certificate", std::vector<uint8_t>{});
  std::string m = j.value("method", std::string("bz"));
  r->method = m == "exhaustive" ? WeightMethod::kExhaustive
              : m == "bz"       ? WeightMethod::kBz
                                : WeightMethod::kUpperOnly;
  r->exact = j.value("exact", false);
  r->odd_exact = j.value("odd_exact", false);
  r->bz_rank_profile = j.value("rank_profile", std::vector<uint64_t>{});
  r->levels_done = j.value("levels_done", uint64_t{0});
  r->lower_bound = j.value("lower_bound", uint64_t{0});
  r->elapsed_seconds = j.value("elapsed_seconds", 0.0);
  return true;
}

// Mid-search snapshot: everything needed to resume at a (level, matrix)
// boundary.  Checkpoints are independent of stop options, so a deeper run
// can pick up where a capped one left off.
struct BzMeta {
  uint64_t level = 1;         ///< level currently being processed
  uint64_t matrix_done = 0;   ///< matrices finished at that level
  uint64_t levels_complete = 0;
  uint64_t best_w = kInf, odd_w = kInf;
  std::vector<uint8_t> cert;
  double elapsed_prior = 0.0;
};

void save_checkpoint(const std::string& path, uint64_t q, uint64_t n, uint64_t hash,
                     const BzMeta& meta, double elapsed_now) {
  json j{{"version", kCheckpointVersion},
         {"q", q},
         {"n", n},
         {"generator_hash", hex64(hash)},
         {"level", meta.level},
         {"matrix_done", meta.matrix_done},
         {"levels_complete", meta.levels_complete},
         {"best_weight", meta.best_w},
         {"odd_weight", meta.odd_w},
         {"certificate", meta.cert},
         {"elapsed_seconds", meta.elapsed_prior + elapsed_now}};
  atomic_write(path, j.dump(2) + "\n");
}

bool load_checkpoint(const std::string& path, uint64_t q, uint64_t n, uint64_t hash,
                     BzMeta* meta) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return false;
  if (j.value("version", 0) != kCheckpointVersion) return false;
  if (j.value("q", uint64_t{0}) != q || j.value("n", uint64_t{0}) != n) return false;
  if (j.value("generator_hash", std::string()) != hex64(hash)) return false;
  meta->level = j.value("level", uint64_t{1});
  meta->matrix_done = j.value("matrix_done", uint64_t{0});
  meta->levels_complete = j.value("levels_complete", uint64_t{0});
  meta->best_w = j.value("best_weight", kInf);
  meta->odd_w = j.value("odd_weight", kInf);
  meta->cert = j.value("certificate", std::vector<uint8_t>{});
  meta->elapsed_prior = j.value("elapsed_seconds", 0.0);
  return true;
}

void check_certificate(const CyclicCode& code, const WeightReport& rep) {
  if (rep.certificate.empty() || !is_codeword(code, rep.certificate))
    throw std::logic_error("weight search: certificate failed re-encoding");
  uint64_t wt = 0;
  for (uint8_t v : rep.certificate) wt += v != 0;
  if (wt != rep.min_weight)
    throw std::logic_error("weight search: certificate weight mismatch");
}

void validate_code(const CyclicCode& code, const char* who) {
  if (code.field == nullptr || code.gen.is_zero())
    throw std::invalid_argument(std::string(who) + ": code has no generator");
  if (code.k == 0 || code.k != code.n - (code.gen.c.size() - 1))
    throw std::invalid_argument(std::string(who) + ": dimension does not match the generator");
}

// ---------------------------------------------------------------------------
// The level-by-level search.

template <class K>
WeightReport bz_impl(const CyclicCode& code, const WeightOptions& opt,
                     const std::string& ck_path, uint64_t hash) {
  const FieldCtx& f = *code.field;
  auto t0 = Clock::now();
  const uint64_t n = code.n, k = code.k;
  AddTab add = value_add_table(f);

  std::vector<PackedMat<K>> mats;
  std::vector<uint64_t> gammas;
  std::vector<ERow> base = shift_rows(code);
  for (uint64_t c0 = 0; c0 < n; c0 += k) {
    std::vector<ERow> rows = base;
    uint64_t gamma = rref_window(f, rows, c0, std::min(n, c0 + k));
    gammas.push_back(gamma);
    mats.push_back(pack_rows<K>(f, rows, n, gamma));
  }

  // Odd-like words exist iff x - 1 does not divide the generator.
  bool odd_possible = !f.is_zero(poly_eval(code.gen, f.one()));

  BzMeta meta;
  if (!ck_path.empty()) load_checkpoint(ck_path, f.order, n, hash, &meta);
  if (meta.level > k || meta.matrix_done > mats.size()) meta = BzMeta{};  // stale snapshot

  // After finishing level w on every matrix, a codeword never seen has,
  // in window i, at least w + 1 - (k - gamma_i) nonzero coordinates; the
  // windows are disjoint, so the sum bounds its total weight.
  auto lower_at = [&](uint64_t wl) -> uint64_t {
    if (wl == 0) return 1;
    uint64_t L = 0;
    for (uint64_t g : gammas) L += (wl + 1 > k - g) ? wl + 1 - (k - g) : 0;
    return std::max<uint64_t>(L, 1);
  };

  uint64_t last_lower = lower_at(meta.levels_complete);
  bool exact = false, odd_exact = false;
  uint64_t w = meta.level;
  uint64_t mstart = meta.matrix_done;
  for (; w <= k; ++w, mstart = 0) {
    for (uint64_t m = mstart; m < mats.size(); ++m) {
      run_level(mats[m], w, opt.threads, add, meta.best_w, meta.odd_w, meta.cert);
      meta.level = w;
      meta.matrix_done = m + 1;
      if (!ck_path.empty()) save_checkpoint(ck_path, f.order, n, hash, meta, seconds_since(t0));
    }
    meta.levels_complete = w;
    last_lower = lower_at(w);
    exact = last_lower >= meta.best_w;
    odd_exact = odd_possible ? (meta.odd_w != kInf && last_lower >= meta.odd_w) : true;
    if (w >= k) {  // every message enumerated on the full-rank first matrix
      exact = true;
      odd_exact = true;
      break;
    }
    if (exact && (odd_exact || !opt.need_odd_exact)) break;
    if (opt.stop_at && meta.best_w <= *opt.stop_at) break;
    if (opt.max_level && w >= *opt.max_level) break;
  }

  WeightReport rep;
  rep.label = code.label;
  rep.n = n;
  rep.k = k;
  rep.q = f.order;
  rep.min_weight = meta.best_w;
  rep.min_odd_weight = meta.odd_w == kInf ? 0 : meta.odd_w;
  rep.certificate = meta.cert;
  rep.method = exact ? WeightMethod::kBz : WeightMethod::kUpperOnly;
  rep.exact = exact;
  rep.odd_exact = odd_exact;
  rep.bz_rank_profile = gammas;
  rep.levels_done = meta.levels_complete;
  rep.lower_bound = std::min(last_lower, meta.best_w);
  rep.elapsed_seconds = meta.elapsed_prior + seconds_since(t0);
  check_certificate(code, rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration: all q^k messages depth-first in value order,
// prefix sums shared, the zero message excluded at the leaves.

template <class K, class Sink>
struct ExhRun {
  const PackedMat<K>* M;
  const AddTab* add;
  Sink* sink;

  void rec(int digit, const typename K::Row& acc, uint8_t sum, bool any) {
    const int qm1 = M->qm1;
    const typename K::Row* sr = &M->scaled[size_t(digit) * qm1];
    const uint8_t* ss = &M->sigma[size_t(digit) * qm1];
    if (digit + 1 == M->k) {
      if (any) sink->leaf(acc, K::weight(acc), sum);
      for (int si = 0; si < qm1; ++si) {
        typename K::Row leafrow = acc;
        K::add_into(leafrow, sr[si]);
        sink->leaf(leafrow, K::weight(leafrow), (*add)[sum][ss[si]]);
      }
      return;
    }
    rec(digit + 1, acc, sum, any);
    for (int si = 0; si < qm1; ++si) {
      typename K::Row nxt = acc;
      K::add_into(nxt, sr[si]);
      rec(digit + 1, nxt, (*add)[sum][ss[si]], true);
    }
  }

  void run() {
    typename K::Row zero{};
    rec(0, zero, 0, false);
  }
};

template <class K>
struct MinSink {
  int n = 0;
  uint64_t best = kInf, odd = kInf;
  std::vector<uint8_t> cert;
  void leaf(const typename K::Row& row, uint64_t wt, uint8_t sum) {
    if (wt < best) {
      best = wt;
      cert = unpack_row<K>(row, n);
    }
    if (sum != 0 && wt < odd) odd = wt;
  }
};

template <class K>
struct HistSink {
  std::vector<uint64_t> counts;
  void leaf(const typename K::Row&, uint64_t wt, uint8_t) { ++counts[wt]; }
};

/// q^k saturated at cap + 1.
uint64_t message_count(uint64_t q, uint64_t k, uint64_t cap) {
  unsigned __int128 c = 1;
  for (uint64_t i = 0; i < k; ++i) {
    c *= q;
    if (c > cap) return cap + 1;
  }
  return static_cast<uint64_t>(c);
}

void check_budget(const CyclicCode& code, const WeightOptions& opt, const char* who) {
  if (message_count(code.q, code.k, opt.exhaustive_budget) > opt.exhaustive_budget)
    throw std::invalid_argument(std::string(who) +
                                ": q^k message count exceeds the enumeration budget");
}

}  // namespace

const char* weight_method_name(WeightMethod m) {
  switch (m) {
    case WeightMethod::kExhaustive:
      return "exhaustive";
    case WeightMethod::kBz:
      return "bz";
    default:
      return "upper_only";
  }
}

WeightReport min_weight_exhaustive(const CyclicCode& code, const WeightOptions& opt) {
  validate_code(code, "min_weight_exhaustive");
  check_budget(code, opt, "min_weight_exhaustive");
  const FieldCtx& f = *code.field;
  auto t0 = Clock::now();
  WeightReport rep = with_kernel(f, code.n, [&](auto tag) {
    using K = typename decltype(tag)::type;
    AddTab add = value_add_table(f);
    PackedMat<K> M = pack_rows<K>(f, shift_rows(code), code.n, code.k);
    MinSink<K> sink;
    sink.n = static_cast<int>(code.n);
    ExhRun<K, MinSink<K>> run{&M, &add, &sink};
    run.run();
    WeightReport r;
    r.min_weight = sink.best;
    r.min_odd_weight = sink.odd == kInf ? 0 : sink.odd;
    r.certificate = sink.cert;
    return r;
  });
  rep.label = code.label;
  rep.n = code.n;
  rep.k = code.k;
  rep.q = f.order;
  rep.method = WeightMethod::kExhaustive;
  rep.exact = true;
  rep.odd_exact = true;
  rep.lower_bound = rep.min_weight;
  rep.elapsed_seconds = seconds_since(t0);
  check_certificate(code, rep);
  return rep;
}

WeightReport min_weight_bz(const CyclicCode& code, const WeightOptions& opt) {
  validate_code(code, "min_weight_bz");
  const FieldCtx& f = *code.field;
  uint64_t hash = generator_hash(code);
  std::string cache_file, ck_file;
  if (!opt.cache_dir.empty()) {
    // Stop options change the outcome, so they join the result key; the
    // checkpoint key deliberately ignores them.
    uint64_t mode = fnv1a_u64(fnv1a_u64(fnv1a_u64(14695981039346656037ull,
                                                  opt.stop_at ? *opt.stop_at : kInf),
                                        opt.max_level ? *opt.max_level : kInf),
                              opt.need_odd_exact ? 1 : 0);
    cache_file = opt.cache_dir + "/bz-" + hex64(hash) + "-" + hex64(mode) + ".json";
    ck_file = opt.cache_dir + "/bzck-" + hex64(hash) + ".json";
    std::ifstream in(cache_file, std::ios::binary);
    if (in) {
      json j = json::parse(in, nullptr, false);
      WeightReport cached;
      if (!j.is_discarded() && report_from_json(j, &cached) && cached.n == code.n &&
          cached.q == f.order) {
        cached.from_cache = true;
        return cached;
      }
    }
  }
  WeightReport rep = with_kernel(f, code.n, [&](auto tag) {
    using K = typename decltype(tag)::type;
    return bz_impl<K>(code, opt, ck_file, hash);
  });
  if (!cache_file.empty()) {
    atomic_write(cache_file, report_to_json(rep).dump(2) + "\n");
    if (rep.exact && (rep.odd_exact || !opt.need_odd_exact)) {
      std::error_code ec;
      std::filesystem::remove(ck_file, ec);  // finished: nothing left to resume
    }
  }
  return rep;
}

std::vector<uint64_t> weight_distribution(const CyclicCode& code, const WeightOptions& opt) {
  validate_code(code, "weight_distribution");
  check_budget(code, opt, "weight_distribution");
  const FieldCtx& f = *code.field;
  return with_kernel(f, code.n, [&](auto tag) {
    using K = typename decltype(tag)::type;
    AddTab add = value_add_table(f);
    PackedMat<K> M = pack_rows<K>(f, shift_rows(code), code.n, code.k);
    HistSink<K> sink;
    sink.counts.assign(code.n + 1, 0);
    ExhRun<K, HistSink<K>> run{&M, &add, &sink};
    run.run();
    sink.counts[0] += 1;  // the zero word skipped by the enumeration
    return sink.counts;
  });
}

bool is_codeword(const CyclicCode& code, const std::vector<uint8_t>& values) {
  if (code.field == nullptr || values.size() != code.n) return false;
  const FieldCtx& f = *code.field;
  std::vector<uint64_t> vals;
  vals.reserve(values.size());
  for (uint8_t v : values) {
    if (v >= f.order) return false;
    vals.push_back(v);
  }
  Poly p = poly_from_values(f, vals);
  if (p.is_zero()) return true;
  return poly_divmod(p, code.gen).second.is_zero();
}

SqrtBoundCheck verify_square_root_bounds(uint64_t d_odd, uint64_t n1, uint64_t n2) {
  SqrtBoundCheck r;
  r.d_odd = d_odd;
  int64_t n = static_cast<int64_t>(n1 * n2);
  r.base.applicable = true;
  r.base.slack = static_cast<int64_t>(d_odd * d_odd) - n;
  r.base.ok = r.base.slack >= 0;
  bool both = (n1 % 8 == 7) && (n2 % 8 == 7);
  r.enhanced.applicable = both;
  if (both) {
    r.enhanced.slack = static_cast<int64_t>(d_odd * d_odd - d_odd + 1) - n;
    r.enhanced.ok = r.enhanced.slack >= 0;
  }
  return r;
}

CyclicCode covering_side_code(const CodeContext& ctx, int side) {
  if (side != 0 && side != 1)
    throw std::invalid_argument("covering_side_code: side must be 0 or 1");
  uint64_t nj = side == 0 ? ctx.n1() : ctx.n2();
  uint64_t mult = ctx.n() / nj;
  std::vector<char> drop(ctx.n(), 0);
  drop[0] = 1;
  for (uint64_t r : residue_class(nj, 1)) drop[mult * r % ctx.n()] = 1;
  std::vector<uint64_t> T;
  for (uint64_t t = 0; t < ctx.n(); ++t)
    if (!drop[t]) T.push_back(t);
  return code_from_defining_set(ctx.roots(), T,
                                "omega(" + std::to_string(ctx.n()) + "/" + std::to_string(nj) + ")");
}

OddSqrtBoundCheck verify_odd_weight_sqrt_bound(const CodeContext& ctx, uint64_t omega_000,
                                               const WeightOptions& opt) {
  OddSqrtBoundCheck out;
  for (int side = 0; side < 2; ++side) {
    WeightReport rep = min_weight_exhaustive(covering_side_code(ctx, side), opt);
    out.omega_side[side] = rep.min_odd_weight;
  }
  out.omega_000 = omega_000;
  uint64_t rhs = std::max(out.omega_side[0], out.omega_side[1]);
  out.check.applicable = true;
  out.check.slack = static_cast<int64_t>(omega_000 * omega_000) - static_cast<int64_t>(rhs);
  out.check.ok = out.check.slack >= 0;
  return out;
}

}  // namespace cycodes
