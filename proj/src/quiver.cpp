#include "aw/quiver.hpp"

#include "aw/snf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

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

// Affine Cartan matrix of the k-cycle: 2 on the diagonal, -1 for each arrow
// between neighbours.  k=2 carries a double edge, k=1 a loop (zero matrix).
IMat affine_cartan(Int k) {
  IMat c(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) {
    c.at(i, i) = 2;
    c.at(i, (i + 1) % k) -= 1;
    c.at(i, (i + k - 1) % k) -= 1;
  }
  return c;
}

// Finite sl(k) Cartan columns at the given vertices inside Z^{k-1}.  These
// are the affine columns with the affine row dropped; since every affine
// column sums to zero the dropped row is the negated sum of the kept ones,
// so integer solvability is unchanged.
IMat finite_cartan_columns(Int k, const Vec& vertices) {
  IMat m(static_cast<std::size_t>(k - 1), vertices.size());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    Int i = vertices[j];  // 1-based, in 1..k-1
    m.at(static_cast<std::size_t>(i - 1), j) = 2;
    if (i >= 2) m.at(static_cast<std::size_t>(i - 2), j) -= 1;
    if (i <= k - 2) m.at(static_cast<std::size_t>(i), j) -= 1;
  }
  return m;
}

void require_matching_length(const QuiverData& q, const BlockPartition& p) {
  if (static_cast<Int>(q.v.size()) != p.k())
    throw domain_error("LengthMismatch",
                       "quiver length " + std::to_string(q.v.size()) +
                           " does not match block partition total " + std::to_string(p.k()));
}

}  // namespace

Vec BlockPartition::i0_plus() const {
  Vec out;
  Int acc = 0;
  for (std::size_t p = 0; p + 1 < blocks.size(); ++p) {
    acc += blocks[p];
    out.push_back(acc);
  }
  return out;
}

Vec BlockPartition::i0_zero() const {
  Vec plus = i0_plus();
  Vec out;
  std::size_t next = 0;
  for (Int i = 1; i < k(); ++i) {
    if (next < plus.size() && plus[next] == i) {
      ++next;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

BlockPartition validate_blocks(Vec blocks) {
  if (blocks.empty()) throw std::invalid_argument("block partition must be nonempty");
  for (Int b : blocks)
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
  return BlockPartition{std::move(blocks)};
}

QuiverData validate_quiver(Vec v, Vec w) {
  if (v.size() != w.size())
    throw domain_error("LengthMismatch",
                       "v has length " + std::to_string(v.size()) + " but w has length " +
                           std::to_string(w.size()));
  if (v.empty()) throw std::invalid_argument("quiver data must be nonempty");
  for (Int x : v)
    if (x < 0) throw std::invalid_argument("v entries must be nonnegative");
  for (Int x : w)
    if (x < 0) throw std::invalid_argument("w entries must be nonnegative");
  return QuiverData{std::move(v), std::move(w)};
}

WeightCoeffs wprime(const QuiverData& q) {
  std::size_t k = q.v.size();
  if (k < 2) throw std::invalid_argument("wprime requires at least two vertices");
  Vec out(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t prev = (i + k - 1) % k;
    std::size_t next = (i + 1) % k;
    out[i] = q.w[i] - 2 * q.v[i] + q.v[prev] + q.v[next];
  }
  return WeightCoeffs{std::move(out)};
}

bool check_uslovie(const QuiverData& q, const BlockPartition& p) {
  require_matching_length(q, p);
  Int k = p.k();
  Vec wp = wprime(q).coeffs;
  Int n = vec_sum(q.w);

  Vec zero = p.i0_zero();
  IMat cartan = affine_cartan(k);
  IMat m(static_cast<std::size_t>(k), zero.size());
  for (std::size_t j = 0; j < zero.size(); ++j)
    for (Int i = 0; i < k; ++i)
      m.at(i, j) = cartan.at(i, static_cast<std::size_t>(zero[j] - 1));

  std::vector<BigInt> b(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) b[i] = wp[i];
  b[static_cast<std::size_t>(k - 1)] -= n;
  return solvable(m, b);
}

SigmaResult sigma_sequence(const QuiverData& q, const BlockPartition& p) {
  require_matching_length(q, p);
  Int k = p.k();
  Vec wp = wprime(q).coeffs;
  Int n = vec_sum(q.w);

  // sigma_i = sigma_1 - (w'_1 + ... + w'_{i-1}); the first-block sum-zero
  // anchor determines sigma_1, which must come out integral.
  Vec rel(static_cast<std::size_t>(k), 0);
  for (Int i = 1; i < k; ++i) rel[i] = rel[i - 1] - wp[i - 1];
  Int k1 = p.blocks[0];
  Int first_rel_sum = 0;
  for (Int i = 0; i < k1; ++i) first_rel_sum += rel[i];
  if (first_rel_sum % k1 != 0)
    throw domain_error("UsloviePrecondition",
                       "first block sum cannot vanish over the integers");
  Int anchor = -first_rel_sum / k1;
  Vec sigma(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) sigma[i] = anchor + rel[i];

  Int start = 0;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    Int sum = 0;
    for (Int i = start; i < start + p.blocks[b]; ++i) sum += sigma[i];
    if (sum != 0)
      throw domain_error("UsloviePrecondition",
                         "block " + std::to_string(b + 1) + " of sigma sums to " +
                             std::to_string(sum));
    start += p.blocks[b];
  }

  SigmaResult res;
  res.sigma = IntSeq{sigma, n};
  res.feasible = true;
  for (Int i : p.i0_zero()) {
    if (sigma[i - 1] < sigma[i]) {
      res.feasible = false;
      res.violation = "sigma increases across position " + std::to_string(i);
      break;
    }
  }
  if (res.feasible) {
    start = 0;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      Int width = sigma[start] - sigma[start + p.blocks[b] - 1];
      if (width > n) {
        res.feasible = false;
        res.violation = "block " + std::to_string(b + 1) + " width " + std::to_string(width) +
                        " exceeds level " + std::to_string(n);
        break;
      }
      start += p.blocks[b];
    }
  }
  return res;
}

std::vector<Gyd> lambda_blocks(const IntSeq& sigma, const BlockPartition& p, Int n_parts) {
  if (static_cast<Int>(sigma.entries.size()) != p.k())
    throw domain_error("LengthMismatch",
                       "sigma length " + std::to_string(sigma.entries.size()) +
                           " does not match block partition total " + std::to_string(p.k()));
  if (sigma.level != n_parts)
    throw domain_error("LevelMismatch", "sigma level " + std::to_string(sigma.level) +
                                            " does not match N = " + std::to_string(n_parts));
  std::vector<Gyd> out;
  Int start = 0;
  for (Int kb : p.blocks) {
    Vec block(sigma.entries.begin() + start, sigma.entries.begin() + start + kb);
    out.push_back(transpose(validate_gyd(std::move(block), n_parts)));
    start += kb;
  }
  return out;
}

Gyd mu_bar_from_w(const Vec& w, Int n_parts) {
  if (w.empty()) throw std::invalid_argument("w must be nonempty");
  Int k = static_cast<Int>(w.size());
  // tau_i = tau_1 - (w_1 + ... + w_{i-1}); sum zero makes
  // tau_1 = sum_j (k-j) w_j / k, integral iff sum_j j*w_j = 0 mod k.
  Int weighted = 0;
  for (Int j = 0; j < k; ++j) weighted += ((j + 1) % k) * w[j];
  if (weighted % k != 0)
    throw domain_error("NonIntegralTau", "sum of i*w_i is " + std::to_string(weighted) +
                                             ", not divisible by k = " + std::to_string(k));
  Vec rel(static_cast<std::size_t>(k), 0);
  for (Int i = 1; i < k; ++i) rel[i] = rel[i - 1] - w[i - 1];
  Int rel_sum = std::accumulate(rel.begin(), rel.end(), Int(0));
  if (rel_sum % k != 0) throw std::logic_error("tau anchor lost integrality");
  Int anchor = -rel_sum / k;
  Vec tau(static_cast<std::size_t>(k));
  for (Int i = 0; i < k; ++i) tau[i] = anchor + rel[i];
  return transpose(validate_gyd(std::move(tau), n_parts));
}

bool verify_otvr(const std::vector<Gyd>& lams) {
  if (lams.empty()) throw std::invalid_argument("block weight list must be nonempty");
  std::size_t n = lams[0].parts.size();
  for (const Gyd& g : lams)
    if (g.parts.size() != n)
      throw domain_error("LengthMismatch",
                         "block diagrams must all have " + std::to_string(n) + " parts");
  Vec concat;
  Vec total(n, 0);
  Int k = 0;
  for (const Gyd& g : lams) {
    Gyd t = transpose(g);
    concat.insert(concat.end(), t.parts.begin(), t.parts.end());
    for (std::size_t i = 0; i < n; ++i) total[i] += g.parts[i];
    k += g.level;
  }
  Gyd t_sum = transpose(validate_gyd(std::move(total), k));
  Int level = static_cast<Int>(n);
  return waff_conjugate(IntSeq{std::move(concat), level}, IntSeq{t_sum.parts, level});
}

Rat mu_degree(Int k, const Gyd& mu_bar, const Gyd& lam_bar, Int d) {
  Int num = 2 * d + pairing(mu_bar.parts, mu_bar.parts) - pairing(lam_bar.parts, lam_bar.parts);
  return Rat(-num, 2 * k);
}

AffineWeight nu_weight(Int d, Int d_prime, const Gyd& nu_bar, const Gyd& lam_bar, Int k) {
  Int num = 2 * d_prime - 2 * d - pairing(nu_bar.parts, nu_bar.parts) +
            pairing(lam_bar.parts, lam_bar.parts);
  return AffineWeight{k, nu_bar, Rat(num, 2 * k)};
}

Gyd tensor_class(const Gyd& a, const Gyd& b) {
  if (a.level != b.level)
    throw domain_error("LevelMismatch", "tensor factors have levels " + std::to_string(a.level) +
                                            " and " + std::to_string(b.level));
  Int k = a.level;
  Vec sums;
  sums.reserve(a.parts.size() * b.parts.size());
  for (Int x : a.parts)
    for (Int y : b.parts) {
      Int s = (x + y) % k;
      if (s < 0) s += k;
      sums.push_back(s);
    }
  std::sort(sums.begin(), sums.end(), std::greater<Int>());
  Int total = vec_sum(sums);
  if (total % k != 0) throw std::logic_error("exponent multiset sum not divisible by level");
  Int drops = total / k;
  for (Int i = 0; i < drops; ++i) sums[i] -= k;
  std::sort(sums.begin(), sums.end(), std::greater<Int>());
  return validate_gyd(std::move(sums), k);
}

AffineWeight tensor_mu(const AffineWeight& mu, const AffineWeight& mu_p,
                       const std::vector<Gyd>& lams, const std::vector<Gyd>& lams_p) {
  if (mu.level != mu_p.level)
    throw domain_error("LevelMismatch", "weights have levels " + std::to_string(mu.level) +
                                            " and " + std::to_string(mu_p.level));
  if (lams.size() != lams_p.size())
    throw domain_error("BlockCountMismatch", "block lists have lengths " +
                                                 std::to_string(lams.size()) + " and " +
                                                 std::to_string(lams_p.size()));
  Int k = mu.level;
  Int block_total = 0;
  for (std::size_t p = 0; p < lams.size(); ++p) {
    if (lams[p].level != lams_p[p].level)
      throw domain_error("LevelMismatch",
                         "block " + std::to_string(p + 1) + " has levels " +
                             std::to_string(lams[p].level) + " and " +
                             std::to_string(lams_p[p].level));
    block_total += lams[p].level;
  }
  if (block_total != k)
    throw domain_error("LevelMismatch", "block levels sum to " + std::to_string(block_total) +
                                            ", expected " + std::to_string(k));

  Int n = static_cast<Int>(mu.finite.parts.size());
  Int n_p = static_cast<Int>(mu_p.finite.parts.size());

  Vec lam_sum(mu.finite.parts.size(), 0);
  Vec lam_sum_p(mu_p.finite.parts.size(), 0);
  Gyd t_sum;  // sum over blocks of the per-block tensor classes
  for (std::size_t p = 0; p < lams.size(); ++p) {
    if (lams[p].parts.size() != mu.finite.parts.size() ||
        lams_p[p].parts.size() != mu_p.finite.parts.size())
      throw domain_error("LengthMismatch",
                         "block " + std::to_string(p + 1) + " diagram has wrong parts count");
    for (std::size_t i = 0; i < lam_sum.size(); ++i) lam_sum[i] += lams[p].parts[i];
    for (std::size_t i = 0; i < lam_sum_p.size(); ++i) lam_sum_p[i] += lams_p[p].parts[i];
    Gyd block_t = tensor_class(lams[p], lams_p[p]);
    if (t_sum.parts.empty()) {
      t_sum = Gyd{Vec(block_t.parts.size(), 0), k};
    }
    for (std::size_t i = 0; i < t_sum.parts.size(); ++i) t_sum.parts[i] += block_t.parts[i];
  }

  Gyd finite = tensor_class(mu.finite, mu_p.finite);

  Int bracket = n_p * pairing(mu.finite.parts, mu.finite.parts) -
                n_p * pairing(lam_sum, lam_sum) +
                n * pairing(mu_p.finite.parts, mu_p.finite.parts) -
                n * pairing(lam_sum_p, lam_sum_p) -
                pairing(finite.parts, finite.parts) + pairing(t_sum.parts, t_sum.parts);
  Rat degree = mu.degree * n_p + mu_p.degree * n + Rat(bracket, 2 * k);
  return AffineWeight{k, finite, degree};
}

QuiverData tensor_quiver(const QuiverData& q, const QuiverData& q_p) {
  std::size_t k = q.v.size();
  if (q_p.v.size() != k)
    throw domain_error("LengthMismatch", "quivers have lengths " + std::to_string(k) + " and " +
                                             std::to_string(q_p.v.size()));

  // Character indexing: vertex i carries character i, the affine vertex
  // (stored last) character 0.
  auto to_char = [k](const Vec& x) {
    Vec c(k);
    for (std::size_t i = 0; i + 1 < k; ++i) c[i + 1] = x[i];
    c[0] = x[k - 1];
    return c;
  };
  auto from_char = [k](const Vec& c) {
    Vec x(k);
    for (std::size_t i = 0; i + 1 < k; ++i) x[i] = c[i + 1];
    x[k - 1] = c[0];
    return x;
  };
  auto conv = [k](const Vec& a, const Vec& b) {
    Vec c(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c[(i + j) % k] += a[i] * b[j];
    return c;
  };
  auto shift = [k](const Vec& c, Int by) {
    Vec out(k);
    for (std::size_t t = 0; t < k; ++t)
      out[t] = c[static_cast<std::size_t>((static_cast<Int>(t) - by % static_cast<Int>(k) +
                                           static_cast<Int>(k)) %
                                          static_cast<Int>(k))];
    return out;
  };

  Vec vc = to_char(q.v), wc = to_char(q.w);
  Vec vc_p = to_char(q_p.v), wc_p = to_char(q_p.w);

  Vec ww = conv(wc, wc_p);
  Vec vv = conv(vc, vc_p);
  Vec vw = conv(vc, wc_p);
  Vec vpw = conv(vc_p, wc);
  Vec up = shift(vv, 1), down = shift(vv, -1);

  Vec vchar(k);
  for (std::size_t t = 0; t < k; ++t)
    vchar[t] = vw[t] + vpw[t] + up[t] + down[t] - 2 * vv[t];
  Vec v_out = from_char(vchar);
  Vec w_out = from_char(ww);
  for (std::size_t i = 0; i < k; ++i)
    if (v_out[i] < 0)
      throw domain_error("NegativeDimension", "tensor dimension vector " + vec_to_string(v_out) +
                                                  " has a negative entry");
  return QuiverData{std::move(v_out), std::move(w_out)};
}

GroupShape picard_group(Int k, const BlockPartition& p) {
  if (k < 2) throw std::invalid_argument("picard_group needs at least two vertices");
  if (p.k() != k)
    throw domain_error("LengthMismatch", "block partition sums to " + std::to_string(p.k()) +
                                             ", expected " + std::to_string(k));
  return cokernel(finite_cartan_columns(k, p.i0_zero()));
}

GroupElement det_class(const QuiverData& q, const BlockPartition& p) {
  require_matching_length(q, p);
  Int k = p.k();
  Vec wp = wprime(q).coeffs;
  std::vector<BigInt> b(static_cast<std::size_t>(k - 1));
  for (Int i = 0; i + 1 < k; ++i) b[static_cast<std::size_t>(i)] = wp[static_cast<std::size_t>(i)];
  return cokernel_class(finite_cartan_columns(k, p.i0_zero()), b);
}

}  // namespace aw
