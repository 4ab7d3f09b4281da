#include "aw/gyd.hpp"

#include <algorithm>
#include <map>

namespace aw {

Gyd validate_gyd(Vec parts, Int level) {
  if (level < 1) throw domain_error("LevelExceeded", "level must be a positive integer");
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw domain_error("NotDecreasing", "parts must be weakly decreasing at index " + std::to_string(i + 1));
  if (vec_sum(parts) != 0) throw domain_error("NonzeroSum", "parts must sum to zero");
  if (!parts.empty() && parts.front() - parts.back() > level)
    throw domain_error("LevelExceeded",
                       "width " + std::to_string(parts.front() - parts.back()) +
                           " exceeds level " + std::to_string(level));
  return Gyd{std::move(parts), level};
}

Gyd transpose(const Gyd& d) {
  validate_gyd(d.parts, d.level);
  const Int p = static_cast<Int>(d.parts.size());
  const Int lvl = d.level;
  Vec out;
  out.reserve(static_cast<size_t>(lvl));
  bool zero = true;
  for (Int x : d.parts) zero = zero && x == 0;
  if (zero) {
    out.assign(static_cast<size_t>(lvl), 0);
    return validate_gyd(std::move(out), p);
  }
  // Nonzero sum-zero decreasing tuple: d_1 > 0 and d_p < 0, so the split
  // index r with d_r > 0 >= d_{r+1} exists in 1..p-1.
  Int r = 0;
  for (Int i = 1; i < p; ++i)
    if (d.parts[static_cast<size_t>(i - 1)] > 0 && d.parts[static_cast<size_t>(i)] <= 0) r = i;
  auto part = [&](Int i) { return d.parts[static_cast<size_t>(i - 1)]; };
  auto emit = [&](Int value, Int count) {
    for (Int c = 0; c < count; ++c) out.push_back(value);
  };
  emit(r, part(r));
  for (Int j = r - 1; j >= 1; --j) emit(j, part(j) - part(j + 1));
  emit(0, lvl + part(p) - part(1));
  for (Int j = -1; j > r - p; --j) emit(j, part(p + j) - part(p + j + 1));
  emit(r - p, -part(r + 1));
  if (static_cast<Int>(out.size()) != lvl) throw std::logic_error("transpose part count mismatch");
  std::sort(out.begin(), out.end(), std::greater<Int>());
  return validate_gyd(std::move(out), p);
}

Int pairing(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw domain_error("LengthMismatch", "pairing needs equal lengths, got " +
                                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int orbit_dimension(const Gyd& d) {
  const Int n = static_cast<Int>(d.parts.size());
  Int s = 0;
  for (Int i = 1; i <= n; ++i) s += d.parts[static_cast<size_t>(i - 1)] * (n + 1 - 2 * i);
  return s;
}

Rat convolution_dimension(const Gyd& d1, const Gyd& d2, const Gyd& d3) {
  if (d1.parts.size() != d2.parts.size() || d2.parts.size() != d3.parts.size())
    throw domain_error("LengthMismatch", "convolution_dimension needs equal lengths");
  const Int n = static_cast<Int>(d1.parts.size());
  Int s = 0;
  for (Int i = 1; i <= n; ++i) {
    Int x = d1.parts[static_cast<size_t>(i - 1)] + d2.parts[static_cast<size_t>(i - 1)] +
            d3.parts[static_cast<size_t>(i - 1)];
    s += x * (n + 1 - 2 * i);
  }
  return Rat(s, 2);
}

IntSeq dominant_representative(IntSeq s) {
  if (s.level < 1) throw domain_error("LevelExceeded", "sequence level must be positive");
  auto& t = s.entries;
  std::sort(t.begin(), t.end(), std::greater<Int>());
  while (!t.empty() && t.front() - t.back() > s.level) {
    t.front() -= s.level;
    t.back() += s.level;
    std::sort(t.begin(), t.end(), std::greater<Int>());
  }
  return s;
}

bool waff_conjugate(const IntSeq& s1, const IntSeq& s2) {
  if (s1.entries.size() != s2.entries.size())
    throw domain_error("LengthMismatch", "sequences must have equal lengths");
  if (s1.level != s2.level)
    throw domain_error("LengthMismatch", "sequences must share the same level");
  const Int n = s1.level;
  auto invariant = [n](const IntSeq& s) {
    std::map<Int, Int> residues;
    for (Int x : s.entries) ++residues[((x % n) + n) % n];
    return std::make_pair(vec_sum(s.entries), residues);
  };
  bool by_invariant = invariant(s1) == invariant(s2);
  bool by_canonical = dominant_representative(s1) == dominant_representative(s2);
  if (by_invariant != by_canonical)
    throw std::logic_error("orbit characterizations disagree");
  return by_invariant;
}

}  // namespace aw
