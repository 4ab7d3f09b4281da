#include "aw/character.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

namespace aw {

namespace {

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// All norms run through the doubled shifted coordinates 2x_i + c_i with
// c_i = N+1-2i (1-indexed), i.e. 4*(x+rho, x+rho) up to the constant
// sum c_i^2; differences of the doubled norm are exactly 4 times the
// differences of (x+rho, x+rho), which is all the recursion needs.
Int row_const(Int n, std::size_t i) { return n - 1 - 2 * static_cast<Int>(i); }

Int shifted_norm4(const Vec& x) {
  Int n = static_cast<Int>(x.size());
  Int t = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Int v = 2 * x[i] + row_const(n, i);
    t += v * v;
  }
  return t;
}

Int isqrt(Int x) {
  if (x < 0) return -1;
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_dominant_at_level(const Vec& x, Int level) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (x[i] < x[i + 1]) return false;
  if (!x.empty() && x.front() - x.back() > level) return false;
  return true;
}

// One highest-weight module: multiplicities by the Freudenthal recursion.
// Dependencies of (x, d) have smaller depth, or equal depth and finite part
// higher in the dominance order, so the memoized recursion is well founded.
struct FreudenthalEngine {
  Int level;
  Vec lam;
  Int n;
  Int t_top;
  std::map<std::pair<Int, Vec>, Int> memo;

  FreudenthalEngine(Int level_, Vec lam_)
      : level(level_), lam(std::move(lam_)), n(static_cast<Int>(lam.size())),
        t_top(shifted_norm4(lam)) {}

  Int bound4(Int d) const { return t_top + 8 * (level + n) * d; }

  Int mult(const Vec& x, Int d) {
    if (d < 0) return 0;
    if (d == 0 && x == lam) return 1;
    Int c4 = bound4(d) - shifted_norm4(x);
    if (c4 <= 0) return 0;
    auto key = std::make_pair(d, x);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Int s = 0;
    // depth-preserving real roots: e_a - e_b with a < b
    for (std::size_t a = 0; a + 1 < static_cast<std::size_t>(n); ++a)
      for (std::size_t b = a + 1; b < static_cast<std::size_t>(n); ++b) {
        Vec y = x;
        Int t_prev = shifted_norm4(y);
        for (;;) {
          ++y[a];
          --y[b];
          Int t_cur = shifted_norm4(y);
          // the norm is convex along the ray, so once it leaves the depth-d
          // ball while nondecreasing it never returns
          if (t_cur > bound4(d) && t_cur >= t_prev) break;
          t_prev = t_cur;
          Int m = mult(y, d);
          if (m != 0) s += m * (y[a] - y[b]);
        }
      }
    // depth-dropping real roots: (e_a - e_b, nd) for every ordered pair
    for (Int nd = 1; nd <= d; ++nd)
      for (std::size_t a = 0; a < static_cast<std::size_t>(n); ++a)
        for (std::size_t b = 0; b < static_cast<std::size_t>(n); ++b) {
          if (a == b) continue;
          Vec y = x;
          for (Int j = 1; j * nd <= d; ++j) {
            ++y[a];
            --y[b];
            Int m = mult(y, d - j * nd);
            if (m != 0) s += m * ((y[a] - y[b]) + level * nd);
          }
        }
    // imaginary roots (0, nd), multiplicity n-1, pairing level*nd
    for (Int nd = 1; nd <= d; ++nd)
      for (Int j = 1; j * nd <= d; ++j) {
        Int m = mult(x, d - j * nd);
        if (m != 0) s += m * (n - 1) * level * nd;
      }

    Int num = 8 * s;
    if (num % c4 != 0) throw std::logic_error("multiplicity recursion lost integrality");
    Int m = num / c4;
    if (m < 0) throw std::logic_error("negative multiplicity from recursion");
    memo[key] = m;
    return m;
  }
};

// sum-zero integer tuples inside the doubled-norm ball
void enumerate_ball(Int n, Int bound, Vec& cur, std::size_t idx, Int partial_t, Int partial_sum,
                    std::vector<Vec>& out) {
  if (idx + 1 == static_cast<std::size_t>(n)) {
    Int last = -partial_sum;
    Int v = 2 * last + row_const(n, idx);
    if (partial_t + v * v <= bound) {
      cur[idx] = last;
      out.push_back(cur);
    }
    return;
  }
  Int rem = bound - partial_t;
  if (rem < 0) return;
  Int s = isqrt(rem);
  Int c = row_const(n, idx);
  Int lo = -floor_div(s + c, 2);
  Int hi = floor_div(s - c, 2);
  for (Int x = lo; x <= hi; ++x) {
    Int v = 2 * x + c;
    cur[idx] = x;
    enumerate_ball(n, bound, cur, idx + 1, partial_t + v * v, partial_sum + x, out);
  }
}

std::mutex g_cache_mutex;
std::map<std::tuple<Int, Vec, Int>, std::map<std::pair<Int, Vec>, Int>> g_char_cache;

std::map<std::pair<Int, Vec>, Int> character_entries(Int level, const Vec& lam, Int depth_bound) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_char_cache.find(std::make_tuple(level, lam, depth_bound));
    if (it != g_char_cache.end()) return it->second;
  }
  FreudenthalEngine engine(level, lam);
  Int n = engine.n;
  std::vector<Vec> candidates;
  Vec cur(static_cast<std::size_t>(n));
  enumerate_ball(n, engine.bound4(depth_bound), cur, 0, 0, 0, candidates);
  std::map<std::pair<Int, Vec>, Int> entries;
  for (const Vec& x : candidates) {
    Int t = shifted_norm4(x);
    for (Int d = 0; d <= depth_bound; ++d) {
      if (t > engine.bound4(d)) continue;
      Int m = engine.mult(x, d);
      if (m > 0) entries[{d, x}] = m;
    }
  }
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_char_cache.emplace(std::make_tuple(level, lam, depth_bound), entries);
  }
  return entries;
}

WeightCharacter convolve(const WeightCharacter& a, const WeightCharacter& b, Int depth_bound,
                         int threads) {
  WeightCharacter out;
  out.level = a.level + b.level;
  out.depth_bound = depth_bound;
  out.top_degree = a.top_degree + b.top_degree;

  std::vector<const std::pair<const std::pair<Int, Vec>, Int>*> left;
  left.reserve(a.entries.size());
  for (const auto& e : a.entries) left.push_back(&e);

  std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), left.size());
  if (nthreads <= 1) {
    for (const auto* ea : left)
      for (const auto& eb : b.entries) {
        Int d = ea->first.first + eb.first.first;
        if (d > depth_bound) continue;
        Vec w = ea->first.second;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += eb.first.second[i];
        out.entries[{d, std::move(w)}] += ea->second * eb.second;
      }
    return out;
  }

  std::vector<std::map<std::pair<Int, Vec>, Int>> partial(nthreads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t]() {
      auto& local = partial[t];
      for (std::size_t i = t; i < left.size(); i += nthreads) {
        const auto* ea = left[i];
        for (const auto& eb : b.entries) {
          Int d = ea->first.first + eb.first.first;
          if (d > depth_bound) continue;
          Vec w = ea->first.second;
          for (std::size_t j = 0; j < w.size(); ++j) w[j] += eb.first.second[j];
          local[{d, std::move(w)}] += ea->second * eb.second;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& local : partial)
    for (const auto& e : local) out.entries[e.first] += e.second;
  return out;
}

}  // namespace

WeightCharacter weight_multiplicities(const AffineWeight& lam, Int depth_bound) {
  if (depth_bound < 0) throw std::invalid_argument("depth bound must be nonnegative");
  if (lam.level < 1) throw std::invalid_argument("level must be a positive integer");
  if (lam.finite.parts.empty()) throw std::invalid_argument("finite part must be nonempty");
  if (vec_sum(lam.finite.parts) != 0 || !is_dominant_at_level(lam.finite.parts, lam.level))
    throw domain_error("NotDominant",
                       "finite part " + vec_to_string(lam.finite.parts) +
                           " is not a weakly decreasing sum-zero tuple of width at most " +
                           std::to_string(lam.level));
  WeightCharacter ch;
  ch.level = lam.level;
  ch.depth_bound = depth_bound;
  ch.top_degree = lam.degree;
  ch.entries = character_entries(lam.level, lam.finite.parts, depth_bound);
  return ch;
}

WeightCharacter tensor_character(const std::vector<AffineWeight>& lams, Int depth_bound,
                                 int threads) {
  if (lams.empty()) throw std::invalid_argument("factor list must be nonempty");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  for (const AffineWeight& lam : lams)
    if (lam.finite.parts.size() != lams[0].finite.parts.size())
      throw domain_error("LengthMismatch", "tensor factors must share the parts count");
  WeightCharacter acc = weight_multiplicities(lams[0], depth_bound);
  for (std::size_t p = 1; p < lams.size(); ++p) {
    WeightCharacter factor = weight_multiplicities(lams[p], depth_bound);
    acc = convolve(acc, factor, depth_bound, threads);
  }
  return acc;
}

DecompositionTable decompose(const WeightCharacter& ch, Int depth_bound) {
  if (depth_bound < 0) throw std::invalid_argument("depth bound must be nonnegative");
  if (ch.level < 1) throw std::invalid_argument("decompose needs a positive level");
  Int d_max = std::min(depth_bound, ch.depth_bound);

  std::map<std::pair<Int, Vec>, Int> remaining;
  for (const auto& e : ch.entries)
    if (e.first.first <= d_max) remaining.insert(e);

  DecompositionTable table;
  table.level = ch.level;
  table.depth_bound = d_max;
  table.top_degree = ch.top_degree;

  for (Int d = 0; d <= d_max; ++d) {
    for (;;) {
      // lexicographically largest remaining weight at depth d; subtraction
      // at this depth only ever lowers weights below it
      auto it = remaining.lower_bound({d + 1, Vec()});
      if (it == remaining.begin()) break;
      --it;
      if (it->first.first != d) break;
      Int m = it->second;
      Vec top = it->first.second;
      if (m < 0)
        throw domain_error("NegativeMultiplicity",
                           "weight " + vec_to_string(top) + " at depth " + std::to_string(d) +
                               " has multiplicity " + std::to_string(m));
      if (m == 0) {
        remaining.erase(it);
        continue;
      }
      if (!is_dominant_at_level(top, ch.level))
        throw domain_error("NegativeMultiplicity",
                           "maximal remaining weight " + vec_to_string(top) + " at depth " +
                               std::to_string(d) + " is not dominant at level " +
                               std::to_string(ch.level));
      table.entries[{d, top}] = m;
      WeightCharacter sub = weight_multiplicities(
          AffineWeight{ch.level, Gyd{top, ch.level}, Rat(0)}, d_max - d);
      for (const auto& e : sub.entries) {
        auto slot = remaining.find({d + e.first.first, e.first.second});
        Int value = (slot == remaining.end() ? 0 : slot->second) - m * e.second;
        if (value < 0)
          throw domain_error("NegativeMultiplicity",
                             "weight " + vec_to_string(e.first.second) + " at depth " +
                                 std::to_string(d + e.first.first) +
                                 " drops below zero while peeling " + vec_to_string(top));
        // value >= 0 forces an existing slot: the subtrahend is positive
        if (value == 0) {
          remaining.erase(slot);
        } else {
          slot->second = value;
        }
      }
    }
  }
  return table;
}

namespace {

// Littlewood-Richardson coefficient: skew semistandard fillings of nu/inner
// with content mu whose reverse reading word is a lattice word.  Cells are
// filled in reverse reading order (rows top to bottom, right to left within
// a row), which makes the lattice condition checkable per placement.
Int lr_count(const Vec& inner, const Vec& nu, const Vec& mu) {
  std::size_t rows = nu.size();
  std::vector<std::pair<Int, Int>> cells;  // (row, column)
  for (std::size_t r = 0; r < rows; ++r) {
    Int in = r < inner.size() ? inner[r] : 0;
    for (Int c = nu[r] - 1; c >= in; --c) cells.push_back({static_cast<Int>(r), c});
  }
  Vec need(mu.begin(), mu.end());
  Int total_need = vec_sum(need);
  if (static_cast<Int>(cells.size()) != total_need) return 0;
  if (cells.empty()) return 1;

  std::size_t values = mu.size();
  Vec count(values, 0);
  // fill[r][c] for the skew cells only
  std::vector<Vec> fill(rows);
  for (std::size_t r = 0; r < rows; ++r) fill[r].assign(static_cast<std::size_t>(nu[r]), 0);

  Int result = 0;
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++result;
      return;
    }
    auto [r, c] = cells[idx];
    for (std::size_t v = 1; v <= values; ++v) {
      if (count[v - 1] >= mu[v - 1]) continue;
      // lattice: after placing v, #v must not exceed #(v-1)
      if (v >= 2 && count[v - 1] + 1 > count[v - 2]) continue;
      // row weakly increasing left to right; the right neighbour is filled
      if (c + 1 < nu[r] && static_cast<Int>(v) > fill[r][c + 1]) continue;
      // column strictly increasing; the cell above is filled iff it is skew
      if (r > 0 && c < nu[r - 1]) {
        Int above_in = static_cast<std::size_t>(r - 1) < inner.size() ? inner[r - 1] : 0;
        if (c >= above_in && static_cast<Int>(v) <= fill[r - 1][c]) continue;
      }
      fill[r][c] = static_cast<Int>(v);
      ++count[v - 1];
      place(idx + 1);
      --count[v - 1];
      fill[r][c] = 0;
    }
  };
  place(0);
  return result;
}

// partition (nonnegative, weakly decreasing, trailing zeros) from a
// sum-zero weight by subtracting the last entry
Vec to_partition(const Vec& w) {
  Vec p = w;
  Int shift = w.back();
  for (Int& x : p) x -= shift;
  return p;
}

std::mutex g_lr_mutex;
std::map<std::pair<Vec, Vec>, std::map<Vec, Int>> g_lr_cache;

// product of two finite irreducibles as a map (sum-zero weight) -> mult
std::map<Vec, Int> lr_pair(const Vec& a, const Vec& b) {
  {
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    auto it = g_lr_cache.find({a, b});
    if (it != g_lr_cache.end()) return it->second;
  }
  std::size_t n = a.size();
  Vec ahat = to_partition(a);
  Vec bhat = to_partition(b);
  Int boxes = vec_sum(bhat);
  Int recenter = a.back() + b.back();

  std::map<Vec, Int> out;
  // enumerate candidate outer shapes: partitions containing ahat with
  // |nu| = |ahat| + |bhat| and nu_1 <= ahat_1 + bhat_1
  Vec nu(n, 0);
  std::function<void(std::size_t, Int)> build = [&](std::size_t row, Int used) {
    if (row == n) {
      if (used != boxes) return;
      Int c = lr_count(ahat, nu, bhat);
      if (c > 0) {
        Vec w = nu;
        for (Int& x : w) x += recenter;
        out[w] += c;
      }
      return;
    }
    Int hi = row == 0 ? ahat[0] + (bhat.empty() ? 0 : bhat[0]) : nu[row - 1];
    for (Int v = ahat[row]; v <= hi; ++v) {
      Int add = v - ahat[row];
      if (used + add > boxes) break;
      nu[row] = v;
      build(row + 1, used + add);
    }
    nu[row] = ahat[row];
  };
  build(0, 0);

  {
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    g_lr_cache.emplace(std::make_pair(a, b), out);
  }
  return out;
}

}  // namespace

DecompositionTable lr_finite(const std::vector<Gyd>& lams) {
  if (lams.empty()) throw std::invalid_argument("factor list must be nonempty");
  std::size_t n = lams[0].parts.size();
  if (n == 0) throw std::invalid_argument("factors need at least one part");
  for (const Gyd& g : lams) {
    if (g.parts.size() != n)
      throw domain_error("LengthMismatch", "tensor factors must share the parts count");
    validate_gyd(g.parts, g.level);
  }
  std::map<Vec, Int> acc{{lams[0].parts, 1}};
  for (std::size_t p = 1; p < lams.size(); ++p) {
    std::map<Vec, Int> next;
    for (const auto& e : acc) {
      std::map<Vec, Int> prod = lr_pair(e.first, lams[p].parts);
      for (const auto& q : prod) next[q.first] += e.second * q.second;
    }
    acc = std::move(next);
  }
  DecompositionTable table;
  table.level = 0;
  table.depth_bound = 0;
  table.top_degree = 0;
  for (const auto& e : acc) table.entries[{0, e.first}] = e.second;
  return table;
}

LevelRankReport level_rank_check(const std::vector<Gyd>& lams, Int depth_bound) {
  if (lams.empty()) throw std::invalid_argument("factor list must be nonempty");
  std::size_t n = lams[0].parts.size();
  if (n == 0) throw std::invalid_argument("block diagrams need at least one part");
  Int k = 0;
  for (const Gyd& g : lams) {
    if (g.parts.size() != n)
      throw domain_error("LengthMismatch", "block diagrams must share the parts count");
    validate_gyd(g.parts, g.level);
    k += g.level;
  }

  std::vector<AffineWeight> primal;
  primal.reserve(lams.size());
  for (const Gyd& g : lams) primal.push_back(AffineWeight{g.level, g, Rat(0)});
  DecompositionTable table_a = decompose(tensor_character(primal, depth_bound), depth_bound);

  LevelRankReport report;
  report.rank = static_cast<Int>(n);
  report.dual_rank = k;

  std::vector<AffineWeight> dual;
  Int dual_total = 0;
  for (const Gyd& g : lams) {
    Gyd t = transpose(g);
    Int width = t.parts.empty() ? 0 : t.parts.front() - t.parts.back();
    Int eta = std::max<Int>(1, width);
    Vec padded = t.parts;
    padded.resize(static_cast<std::size_t>(k), 0);
    std::sort(padded.begin(), padded.end(), std::greater<Int>());
    dual.push_back(AffineWeight{eta, validate_gyd(std::move(padded), eta), Rat(0)});
    report.dual_levels.push_back(eta);
    dual_total += eta;
  }
  report.levels_match = dual_total == static_cast<Int>(n);
  DecompositionTable table_b = decompose(tensor_character(dual, depth_bound), depth_bound);

  std::map<std::pair<Int, Vec>, bool> covered;
  for (const auto& e : table_a.entries) {
    Gyd nu = validate_gyd(e.first.second, k);
    Vec dual_nu = transpose(nu).parts;
    auto it = table_b.entries.find({e.first.first, dual_nu});
    Int dual_mult = it == table_b.entries.end() ? 0 : it->second;
    if (it != table_b.entries.end()) covered[{e.first.first, dual_nu}] = true;
    bool agree = e.second == dual_mult;
    report.rows.push_back(LevelRankRow{e.first.first, e.first.second, e.second, std::move(dual_nu),
                                       dual_mult, agree});
    if (!agree) report.all_agree = false;
  }
  for (const auto& e : table_b.entries) {
    if (covered.count(e.first)) continue;
    report.unmatched_dual.push_back(LevelRankUnmatched{e.first.first, e.first.second, e.second});
    report.all_agree = false;
  }
  return report;
}

}  // namespace aw
