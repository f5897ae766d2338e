#include "qstirling/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qstirling/stirling.hpp"

namespace qstirling {

namespace {

int min_abs(const Block& b) {
  int m = -1;
  for (int x : b) {
    const int a = std::abs(x);
    if (m < 0 || a < m) m = a;
  }
  return m;
}

bool contains(const Block& b, int x) { return std::find(b.begin(), b.end(), x) != b.end(); }

Block negated(const Block& b) {
  Block out;
  out.reserve(b.size());
  for (int x : b) out.push_back(-x);
  return out;
}

Block sorted(Block b) {
  std::sort(b.begin(), b.end());
  return b;
}

// Every element of <n> (or [n] when signed is false) appears exactly once.
bool covers(const std::vector<Block>& blocks, int n, bool signed_ground) {
  std::vector<int> seen(static_cast<std::size_t>(2 * n + 1), 0);
  for (const auto& b : blocks) {
    for (int x : b) {
      if (std::abs(x) > n || (!signed_ground && x <= 0)) return false;
      if (seen[static_cast<std::size_t>(x + n)]++) return false;
    }
  }
  for (int x = signed_ground ? -n : 1; x <= n; ++x) {
    if (!seen[static_cast<std::size_t>(x + n)]) return false;
  }
  return true;
}

// Inversions of a block sequence: pairs (s, S_j) with s in an earlier block
// and s >= min|S_j|. The first block is skipped as a target when skip_first.
int block_inversions(const std::vector<Block>& blocks, bool skip_first) {
  int count = 0;
  for (std::size_t j = skip_first ? 1 : 0; j < blocks.size(); ++j) {
    const int m = min_abs(blocks[j]);
    for (std::size_t i = 0; i < j; ++i) {
      for (int s : blocks[i]) count += (s >= m);
    }
  }
  return count;
}

std::string join(const Block& b) {
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b[i]);
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

Block parse_ints(std::string_view text) {
  Block out;
  std::string cleaned(text);
  for (char& c : cleaned) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    out.push_back(value);
  }
  return out;
}

int infer_n(const std::vector<Block>& blocks) {
  int n = 0;
  for (const auto& b : blocks) {
    for (int x : b) n = std::max(n, std::abs(x));
  }
  return n;
}

void require_standard(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + " is not in standard form");
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::signed_partition: return "signed_partition";
    case Family::signed_permutation: return "signed_permutation";
    case Family::ordered_A: return "ordered_A";
    case Family::ordered_B: return "ordered_B";
  }
  return "?";
}

// --- signed partitions -----------------------------------------------------

std::vector<Block> SignedPartition::blocks() const {
  std::vector<Block> out{zero_block};
  for (const auto& [neg, pos] : pairs) {
    out.push_back(neg);
    out.push_back(pos);
  }
  return out;
}

bool SignedPartition::is_standard() const {
  if (!contains(zero_block, 0) || sorted(zero_block) != sorted(negated(zero_block))) return false;
  int previous = 0;
  for (const auto& [neg, pos] : pairs) {
    if (neg.empty() || sorted(pos) != sorted(negated(neg))) return false;
    const int m = min_abs(pos);
    if (!contains(pos, m) || m <= previous) return false;
    previous = m;
  }
  return covers(blocks(), n, true);
}

SignedPartition SignedPartition::standardized() const {
  SignedPartition out{n, sorted(zero_block), {}};
  for (const auto& [a, b] : pairs) {
    const int m = min_abs(a);
    if (contains(a, m)) out.pairs.emplace_back(sorted(b), sorted(a));
    else out.pairs.emplace_back(sorted(a), sorted(b));
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const auto& x, const auto& y) { return min_abs(x.second) < min_abs(y.second); });
  return out;
}

std::vector<SignedPartition> enumerate_signed_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  std::vector<SignedPartition> level{SignedPartition{}};
  for (int m = 1; m <= n; ++m) {
    std::vector<SignedPartition> next;
    for (const auto& rho : level) {
      auto base = rho;
      base.n = m;
      // n into the zero block, then into each nonzero block.
      auto z = base;
      z.zero_block.insert(z.zero_block.begin(), -m);
      z.zero_block.push_back(m);
      next.push_back(std::move(z));
      for (std::size_t i = 0; i < base.pairs.size(); ++i) {
        for (int side = 0; side < 2; ++side) {
          auto x = base;
          Block& gets_n = side == 0 ? x.pairs[i].first : x.pairs[i].second;
          Block& gets_minus = side == 0 ? x.pairs[i].second : x.pairs[i].first;
          gets_n.push_back(m);
          gets_minus.insert(gets_minus.begin(), -m);
          next.push_back(std::move(x));
        }
      }
      // {-n}/{n} as a new last pair.
      auto fresh = base;
      fresh.pairs.emplace_back(Block{-m}, Block{m});
      next.push_back(std::move(fresh));
    }
    level = std::move(next);
  }
  if (n == 0) level.front().n = 0;
  return level;
}

std::vector<SignedPartition> enumerate_signed_partitions(int n, int k) {
  std::vector<SignedPartition> out;
  for (auto& rho : enumerate_signed_partitions(n)) {
    if (rho.k() == k) out.push_back(std::move(rho));
  }
  return out;
}

int inv(const SignedPartition& rho) {
  require_standard(rho.is_standard(), "signed partition");
  return block_inversions(rho.blocks(), true);
}

int maj(const SignedPartition& rho) {
  require_standard(rho.is_standard(), "signed partition");
  const auto blocks = rho.blocks();
  int total = 0;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const int m = min_abs(blocks[i]);
    int descents = 0;
    for (int s : blocks[i - 1]) descents += (s > m);
    total += static_cast<int>(i) * descents;
  }
  return total;
}

// --- signed permutations ---------------------------------------------------

int SignedPermutation::k() const {
  int paired = 0;
  for (const auto& c : cycles) {
    if (!c.empty() && !contains(c, -c.front())) ++paired;
  }
  return paired / 2;
}

int SignedPermutation::apply(int i) const {
  for (const auto& c : cycles) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == i) return c[(j + 1) % c.size()];
    }
  }
  throw std::out_of_range("SignedPermutation::apply: " + std::to_string(i) + " not in any cycle");
}

namespace {

// Rotates a cycle so that its designated minimum element ends it.
std::vector<int> rotated_to_end(const std::vector<int>& c) {
  const int m = min_abs(c);
  const bool unpaired = contains(c, m) && contains(c, -m);
  const int last = unpaired ? -m : (contains(c, m) ? m : -m);
  const auto it = std::find(c.begin(), c.end(), last);
  std::vector<int> out(it + 1, c.end());
  out.insert(out.end(), c.begin(), it + 1);
  return out;
}

bool cycle_before(const std::vector<int>& a, const std::vector<int>& b) {
  const int ma = min_abs(a), mb = min_abs(b);
  if (ma != mb) return ma < mb;
  return contains(a, -ma) && !contains(b, -mb);
}

bool is_signed_permutation(const SignedPermutation& pi) {
  std::vector<Block> with_zero = pi.cycles;
  with_zero.push_back({0});
  if (!covers(with_zero, pi.n, true)) return false;
  for (int i = 1; i <= pi.n; ++i) {
    if (pi.apply(-i) != -pi.apply(i)) return false;
  }
  return true;
}

}  // namespace

bool SignedPermutation::is_standard() const {
  if (!is_signed_permutation(*this)) return false;
  for (const auto& c : cycles) {
    if (c.empty() || rotated_to_end(c) != c) return false;
  }
  for (std::size_t i = 1; i < cycles.size(); ++i) {
    if (cycle_before(cycles[i], cycles[i - 1])) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::standardized() const {
  SignedPermutation out{n, {}};
  for (const auto& c : cycles) {
    if (!c.empty()) out.cycles.push_back(rotated_to_end(c));
  }
  std::stable_sort(out.cycles.begin(), out.cycles.end(), cycle_before);
  return out;
}

std::vector<int> SignedPermutation::word() const {
  std::vector<int> w;
  for (const auto& c : cycles) w.insert(w.end(), c.begin(), c.end());
  return w;
}

namespace {

// image[i + n] = pi(i)
SignedPermutation from_images(int n, const std::vector<int>& image) {
  SignedPermutation pi{n, {}};
  std::vector<char> seen(image.size(), 0);
  for (int start = -n; start <= n; ++start) {
    if (start == 0 || seen[static_cast<std::size_t>(start + n)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x + n)]; x = image[static_cast<std::size_t>(x + n)]) {
      seen[static_cast<std::size_t>(x + n)] = 1;
      cycle.push_back(x);
    }
    pi.cycles.push_back(std::move(cycle));
  }
  return pi.standardized();
}

}  // namespace

std::vector<SignedPermutation> enumerate_signed_permutations(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  std::vector<SignedPermutation> level{SignedPermutation{}};
  for (int m = 1; m <= n; ++m) {
    std::vector<SignedPermutation> next;
    for (const auto& prev : level) {
      std::vector<int> image(static_cast<std::size_t>(2 * m + 1), 0);
      for (const auto& c : prev.cycles) {
        for (std::size_t j = 0; j < c.size(); ++j) image[static_cast<std::size_t>(c[j] + m)] = c[(j + 1) % c.size()];
      }
      auto at = [&](std::vector<int>& img, int i) -> int& { return img[static_cast<std::size_t>(i + m)]; };

      auto fixed = image;
      at(fixed, m) = m;
      at(fixed, -m) = -m;
      next.push_back(from_images(m, fixed));

      auto swap = image;
      at(swap, m) = -m;
      at(swap, -m) = m;
      next.push_back(from_images(m, swap));

      for (int e = -(m - 1); e <= m - 1; ++e) {
        if (e == 0) continue;
        auto img = image;
        int p = 0;
        for (int x = -(m - 1); x <= m - 1; ++x) {
          if (x != 0 && at(image, x) == e) p = x;
        }
        at(img, p) = m;
        at(img, m) = e;
        at(img, -p) = -m;
        at(img, -m) = -e;
        next.push_back(from_images(m, img));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<SignedPermutation> enumerate_signed_permutations(int n, int k) {
  std::vector<SignedPermutation> out;
  for (auto& pi : enumerate_signed_permutations(n)) {
    if (pi.k() == k) out.push_back(std::move(pi));
  }
  return out;
}

int inv(const SignedPermutation& pi) {
  require_standard(pi.is_standard(), "signed permutation");
  const auto w = pi.word();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) count += (w[i] > std::abs(w[j]));
  }
  return count;
}

// --- ordered partitions ----------------------------------------------------

int OrderedPartition::k() const {
  if (flavor == Flavor::typeA) return static_cast<int>(blocks.size());
  return blocks.empty() ? 0 : static_cast<int>(blocks.size() - 1) / 2;
}

bool OrderedPartition::is_valid() const {
  if (flavor == Flavor::typeA) {
    for (const auto& b : blocks) {
      if (b.empty()) return false;
    }
    return covers(blocks, n, false);
  }
  if (blocks.empty() || blocks.size() % 2 == 0) return false;
  if (!contains(blocks[0], 0) || sorted(blocks[0]) != sorted(negated(blocks[0]))) return false;
  for (std::size_t i = 1; i + 1 < blocks.size(); i += 2) {
    if (blocks[i].empty() || sorted(blocks[i + 1]) != sorted(negated(blocks[i]))) return false;
  }
  return covers(blocks, n, true);
}

std::vector<OrderedPartition> enumerate_ordered(Flavor flavor, int n) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  std::vector<OrderedPartition> level;
  if (flavor == Flavor::typeA) level.push_back(OrderedPartition{Flavor::typeA, 0, {}});
  else level.push_back(OrderedPartition{Flavor::typeB, 0, {Block{0}}});

  for (int m = 1; m <= n; ++m) {
    std::vector<OrderedPartition> next;
    for (const auto& prev : level) {
      auto base = prev;
      base.n = m;
      const std::size_t b = base.blocks.size();
      if (flavor == Flavor::typeA) {
        for (std::size_t i = 0; i < b; ++i) {
          auto x = base;
          x.blocks[i].push_back(m);
          next.push_back(std::move(x));
        }
        for (std::size_t pos = 0; pos <= b; ++pos) {
          auto x = base;
          x.blocks.insert(x.blocks.begin() + static_cast<long>(pos), Block{m});
          next.push_back(std::move(x));
        }
      } else {
        for (std::size_t i = 0; i < b; ++i) {
          auto x = base;
          const std::size_t partner = i == 0 ? 0 : (i % 2 == 1 ? i + 1 : i - 1);
          x.blocks[partner].insert(x.blocks[partner].begin(), -m);
          x.blocks[i].push_back(m);
          next.push_back(std::move(x));
        }
        const std::size_t pairs = (b - 1) / 2;
        for (std::size_t gap = 0; gap <= pairs; ++gap) {
          for (int orientation = 0; orientation < 2; ++orientation) {
            auto x = base;
            const auto at = x.blocks.begin() + static_cast<long>(1 + 2 * gap);
            if (orientation == 0) x.blocks.insert(at, {Block{-m}, Block{m}});
            else x.blocks.insert(at, {Block{m}, Block{-m}});
            next.push_back(std::move(x));
          }
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<OrderedPartition> enumerate_ordered(Flavor flavor, int n, int k) {
  std::vector<OrderedPartition> out;
  for (auto& omega : enumerate_ordered(flavor, n)) {
    if (omega.k() == k) out.push_back(std::move(omega));
  }
  return out;
}

int inv(const OrderedPartition& omega) {
  if (!omega.is_valid()) throw std::invalid_argument("inv: invalid ordered partition");
  return block_inversions(omega.blocks, omega.flavor == Flavor::typeB);
}

// --- generating functions --------------------------------------------------

namespace {

QPoly from_histogram(const std::map<int, BigInt>& histogram) {
  std::vector<BigInt> coeffs;
  for (const auto& [degree, count] : histogram) {
    if (coeffs.size() <= static_cast<std::size_t>(degree)) coeffs.resize(static_cast<std::size_t>(degree) + 1, 0);
    coeffs[static_cast<std::size_t>(degree)] = count;
  }
  return QPoly(std::move(coeffs));
}

}  // namespace

QPoly statistic_gf(Family family, int n, int k, Stat stat) {
  if (stat == Stat::maj && family != Family::signed_partition) {
    throw std::invalid_argument("maj is only defined for signed partitions");
  }
  std::map<int, BigInt> histogram;
  switch (family) {
    case Family::signed_partition:
      for (const auto& rho : enumerate_signed_partitions(n, k)) ++histogram[stat == Stat::inv ? inv(rho) : maj(rho)];
      break;
    case Family::signed_permutation:
      for (const auto& pi : enumerate_signed_permutations(n, k)) ++histogram[inv(pi)];
      break;
    case Family::ordered_A:
      for (const auto& omega : enumerate_ordered(Flavor::typeA, n, k)) ++histogram[inv(omega)];
      break;
    case Family::ordered_B:
      for (const auto& omega : enumerate_ordered(Flavor::typeB, n, k)) ++histogram[inv(omega)];
      break;
  }
  return from_histogram(histogram);
}

BigInt family_count(Family family, int n, int k) {
  switch (family) {
    case Family::signed_partition: return BigInt(static_cast<unsigned long>(enumerate_signed_partitions(n, k).size()));
    case Family::signed_permutation: return BigInt(static_cast<unsigned long>(enumerate_signed_permutations(n, k).size()));
    case Family::ordered_A: return BigInt(static_cast<unsigned long>(enumerate_ordered(Flavor::typeA, n, k).size()));
    case Family::ordered_B: return BigInt(static_cast<unsigned long>(enumerate_ordered(Flavor::typeB, n, k).size()));
  }
  return 0;
}

// --- text ------------------------------------------------------------------

namespace {

std::string pair_text(const std::vector<Block>& blocks) {
  std::string out = join(blocks.at(0));
  for (std::size_t i = 1; i + 1 < blocks.size(); i += 2) out += " | " + join(blocks[i]) + " / " + join(blocks[i + 1]);
  return out;
}

std::vector<Block> parse_pair_text(std::string_view text) {
  const auto groups = split(text, '|');
  std::vector<Block> blocks{parse_ints(groups[0])};
  for (std::size_t g = 1; g < groups.size(); ++g) {
    const auto halves = split(groups[g], '/');
    if (halves.size() != 2) throw std::invalid_argument("expected 'A / B' in group '" + groups[g] + "'");
    blocks.push_back(parse_ints(halves[0]));
    blocks.push_back(parse_ints(halves[1]));
  }
  return blocks;
}

}  // namespace

std::string to_text(const SignedPartition& rho) { return pair_text(rho.blocks()); }

std::string to_text(const SignedPermutation& pi) {
  if (pi.cycles.empty()) return "()";
  std::string out;
  for (const auto& c : pi.cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::string to_text(const OrderedPartition& omega) {
  if (omega.flavor == Flavor::typeB) return pair_text(omega.blocks);
  std::string out;
  for (std::size_t i = 0; i < omega.blocks.size(); ++i) {
    if (i) out += " / ";
    out += join(omega.blocks[i]);
  }
  return out;
}

SignedPartition parse_signed_partition(std::string_view text, int n) {
  const auto blocks = parse_pair_text(text);
  SignedPartition rho{n < 0 ? infer_n(blocks) : n, blocks[0], {}};
  for (std::size_t i = 1; i + 1 < blocks.size(); i += 2) rho.pairs.emplace_back(blocks[i], blocks[i + 1]);
  if (!rho.standardized().is_standard()) throw std::invalid_argument("not a signed partition: '" + std::string(text) + "'");
  return rho;
}

SignedPermutation parse_signed_permutation(std::string_view text, int n) {
  SignedPermutation pi;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in '" + std::string(text) + "'");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unbalanced '(' in '" + std::string(text) + "'");
    auto cycle = parse_ints(text.substr(pos + 1, close - pos - 1));
    if (!cycle.empty()) pi.cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  pi.n = n < 0 ? infer_n(pi.cycles) : n;
  if (!is_signed_permutation(pi)) throw std::invalid_argument("not a signed permutation: '" + std::string(text) + "'");
  return pi;
}

OrderedPartition parse_ordered(Flavor flavor, std::string_view text, int n) {
  OrderedPartition omega{flavor, 0, {}};
  if (flavor == Flavor::typeB) {
    omega.blocks = parse_pair_text(text);
  } else {
    const auto parts = split(text, '/');
    if (!(parts.size() == 1 && parse_ints(parts[0]).empty())) {
      for (const auto& part : parts) omega.blocks.push_back(parse_ints(part));
    }
  }
  omega.n = n < 0 ? infer_n(omega.blocks) : n;
  // Blocks are sets; keep them sorted like everything the enumerators build.
  for (auto& b : omega.blocks) std::sort(b.begin(), b.end());
  if (!omega.is_valid()) throw std::invalid_argument("not an ordered partition: '" + std::string(text) + "'");
  return omega;
}

// --- type B functions ------------------------------------------------------

TypeBFunctionCount count_type_b_functions(int n, int p) {
  if (n < 0 || p < 0) throw std::invalid_argument("count_type_b_functions: n and p must be nonnegative");
  TypeBFunctionCount result{0, std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0)};
  // f is odd, so f(0) = 0 and f is fixed by f(1..n) in {-p..p}.
  std::vector<int> values(static_cast<std::size_t>(n), -p);
  while (true) {
    std::set<int> hit;
    for (int v : values) {
      if (v != 0) hit.insert(std::abs(v));
    }
    ++result.total;
    ++result.histogram[hit.size()];
    int d = 0;
    while (d < n && ++values[static_cast<std::size_t>(d)] > p) values[static_cast<std::size_t>(d++)] = -p;
    if (d == n) break;
  }
  return result;
}

// --- verification ----------------------------------------------------------

Report verify_statistics(int n_signed, int n_ordered_a, int n_ordered_b) {
  Report report{"statistics"};
  auto nk = [](int n, int k) { return " (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; };
  for (int n = 0; n <= n_signed; ++n) {
    for (int k = 0; k <= n; ++k) {
      report.check(statistic_gf(Family::signed_partition, n, k, Stat::inv) == stirling(Kind::S_B, n, k), "sum q^inv over signed partitions = S_B[n,k]" + nk(n, k));
      report.check(statistic_gf(Family::signed_partition, n, k, Stat::maj) == stirling(Kind::S_B, n, k), "sum q^maj over signed partitions = S_B[n,k]" + nk(n, k));
      report.check(statistic_gf(Family::signed_permutation, n, k, Stat::inv) == stirling(Kind::c_B, n, k),
                   "sum q^inv over signed permutations = c_B[n,k]" + nk(n, k));
    }
    for (const auto& rho : enumerate_signed_partitions(n)) {
      // Scramble pair orientation and order, then standardize back.
      SignedPartition scrambled = rho;
      std::reverse(scrambled.pairs.begin(), scrambled.pairs.end());
      for (auto& p : scrambled.pairs) std::swap(p.first, p.second);
      const auto again = scrambled.standardized();
      report.check(again == rho.standardized() && again.standardized() == again && inv(again) == inv(rho) && maj(again) == maj(rho),
                   "standardization idempotent and statistic-preserving at " + to_text(rho));
    }
    for (const auto& pi : enumerate_signed_permutations(n)) {
      SignedPermutation scrambled = pi;
      std::reverse(scrambled.cycles.begin(), scrambled.cycles.end());
      for (auto& c : scrambled.cycles) std::rotate(c.begin(), c.begin() + 1, c.end());
      const auto again = scrambled.standardized();
      report.check(again == pi && again.standardized() == again && inv(again) == inv(pi),
                   "standardization idempotent and statistic-preserving at " + to_text(pi));
    }
  }
  for (int n = 0; n <= n_ordered_a; ++n) {
    for (int k = 0; k <= n; ++k) {
      report.check(statistic_gf(Family::ordered_A, n, k, Stat::inv) == ordered(OrderedKind::S_A, n, k), "sum q^inv over ordered partitions = S^o[n,k]" + nk(n, k));
    }
  }
  for (int n = 0; n <= n_ordered_b; ++n) {
    for (int k = 0; k <= n; ++k) {
      report.check(statistic_gf(Family::ordered_B, n, k, Stat::inv) == ordered(OrderedKind::S_B, n, k),
                   "sum q^inv over signed ordered partitions = S_B^o[n,k]" + nk(n, k));
    }
  }
  return report;
}

Report verify_type_b_functions(int n_max, int p_max) {
  Report report{"type B functions"};
  for (int n = 0; n <= n_max; ++n) {
    for (int p = 0; p <= p_max; ++p) {
      const auto counted = count_type_b_functions(n, p);
      const std::string tag = " (n=" + std::to_string(n) + ",p=" + std::to_string(p) + ")";
      BigInt power = 1;
      for (int i = 0; i < n; ++i) power *= 2 * p + 1;
      report.check(counted.total == power, "count = (2p+1)^n" + tag);
      for (int k = 0; k <= n; ++k) {
        BigInt falling = 1;
        for (int i = 1; i <= k; ++i) falling *= 2 * p + 1 - (2 * i - 1);
        report.check(counted.histogram[static_cast<std::size_t>(k)] == stirling_number(Kind::S_B, n, k) * falling,
                     "kernel histogram = S_B(n,k) (2p+1)_k^B" + tag + " k=" + std::to_string(k));
      }
    }
  }
  return report;
}

}  // namespace qstirling
