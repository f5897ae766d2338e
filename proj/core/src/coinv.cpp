#include "qstirling/coinv.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qstirling {

namespace {

void require_range(const IndexSet& T, int lo, int n) {
  for (int i : T) {
    if (i < lo || i > n) {
      throw std::invalid_argument("index set element " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " + std::to_string(n) + "]");
    }
  }
}

bool in(const IndexSet& T, int i) { return T.count(i) != 0; }

std::string set_text(const IndexSet& T) {
  std::string out = "{";
  for (int i : T) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

std::string comp_text(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + ")";
}

Composition bound_for(const IndexSet& T, int n, Type type) {
  return type == Type::A ? alpha_sequence(T, n) : beta_sequence(T, n);
}

}  // namespace

Composition alpha_sequence(const IndexSet& T, int n) {
  require_range(T, 2, n);
  Composition a;
  for (int i = 1; i <= n; ++i) a.push_back(i == 1 ? 0 : a.back() + !in(T, i));
  return a;
}

Composition beta_sequence(const IndexSet& T, int n) {
  require_range(T, 1, n);
  Composition b;
  for (int i = 1; i <= n; ++i) b.push_back(i == 1 ? !in(T, 1) : b.back() + !in(T, i) + !in(T, i - 1));
  return b;
}

Composition expansion(const IndexSet& T, int n, Type type) {
  const Composition bound = bound_for(T, n, type);
  const int k = n - static_cast<int>(T.size());
  Composition out(static_cast<std::size_t>(type == Type::A ? k : k + 1), 0);
  for (int i : T) {
    const int level = bound[static_cast<std::size_t>(i - 1)];
    const int j = type == Type::A ? level : level / 2;
    if (type == Type::B && level % 2 != 0) throw std::logic_error("odd beta value at an index of T");
    ++out.at(static_cast<std::size_t>(j));
  }
  return out;
}

void for_each_super_monomial(int n, Type type, const std::function<void(const Composition&, const IndexSet&)>& visit, bool classical) {
  if (n < 0) throw std::invalid_argument("for_each_super_monomial: n must be nonnegative");
  const int first = type == Type::A ? 2 : 1;
  const int free = std::max(0, n - first + 1);
  const std::uint64_t subsets = classical ? 1 : (std::uint64_t{1} << free);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    IndexSet T;
    for (int b = 0; b < free; ++b) {
      if (mask >> b & 1) T.insert(first + b);
    }
    const Composition bound = bound_for(T, n, type);
    Composition alpha(static_cast<std::size_t>(n), 0);
    while (true) {
      visit(alpha, T);
      int d = 0;
      while (d < n && ++alpha[static_cast<std::size_t>(d)] > bound[static_cast<std::size_t>(d)]) alpha[static_cast<std::size_t>(d++)] = 0;
      if (d == n) break;
    }
  }
}

TPoly hilbert(int n, Type type, bool classical) {
  std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(n) + 1);
  for_each_super_monomial(
      n, type,
      [&](const Composition& alpha, const IndexSet& T) {
        auto& row = counts[T.size()];
        const auto degree = static_cast<std::size_t>(std::accumulate(alpha.begin(), alpha.end(), 0));
        if (row.size() <= degree) row.resize(degree + 1, 0);
        ++row[degree];
      },
      classical);
  std::vector<QPoly> coeffs;
  for (const auto& row : counts) {
    std::vector<BigInt> c;
    for (auto v : row) c.emplace_back(static_cast<long>(v));
    coeffs.emplace_back(std::move(c));
  }
  return TPoly(std::move(coeffs));
}

EtaT eta_and_T(const OrderedPartition& omega) {
  if (!omega.is_valid()) throw std::invalid_argument("eta_and_T: invalid ordered partition");
  EtaT out{Composition(static_cast<std::size_t>(omega.n), 0), {}};
  const auto& blocks = omega.blocks;
  std::vector<int> minima;
  for (const auto& b : blocks) {
    int m = std::abs(b.front());
    for (int x : b) m = std::min(m, std::abs(x));
    minima.push_back(m);
  }
  const std::size_t first_target = omega.flavor == Flavor::typeB ? 1 : 0;
  for (std::size_t j = first_target; j < blocks.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      for (int s : blocks[i]) {
        if (s >= minima[j] && s > 0) ++out.eta[static_cast<std::size_t>(s - 1)];
      }
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) {
      if (x > 0 && x > minima[i]) out.T.insert(x);
    }
  }
  return out;
}

OrderedPartition insertion_bijection(const IndexSet& T, const Composition& alpha, int n, Type type) {
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("insertion_bijection: alpha must have n parts");
  const Composition bound = bound_for(T, n, type);
  for (int i = 0; i < n; ++i) {
    if (alpha[static_cast<std::size_t>(i)] < 0 || alpha[static_cast<std::size_t>(i)] > bound[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("insertion_bijection: alpha " + comp_text(alpha) + " is not below " + comp_text(bound) + " for T = " +
                                  set_text(T));
    }
  }
  auto add_sorted = [](Block& b, int x) { b.insert(std::lower_bound(b.begin(), b.end(), x), x); };

  if (type == Type::A) {
    OrderedPartition omega{Flavor::typeA, n, {}};
    for (int k = 1; k <= n; ++k) {
      const int a = alpha[static_cast<std::size_t>(k - 1)];
      const int j = static_cast<int>(omega.blocks.size());
      if (in(T, k)) add_sorted(omega.blocks[static_cast<std::size_t>(j - 1 - a)], k);
      else omega.blocks.insert(omega.blocks.begin() + (j - a), Block{k});
    }
    return omega;
  }

  OrderedPartition omega{Flavor::typeB, n, {Block{0}}};
  for (int k = 1; k <= n; ++k) {
    const int a = alpha[static_cast<std::size_t>(k - 1)];
    const int j = static_cast<int>(omega.blocks.size() - 1) / 2;
    if (in(T, k)) {
      const int i = 2 * j - a;
      const int partner = i == 0 ? 0 : (i % 2 == 1 ? i + 1 : i - 1);
      add_sorted(omega.blocks[static_cast<std::size_t>(i)], k);
      add_sorted(omega.blocks[static_cast<std::size_t>(partner)], -k);
    } else {
      const int gap = j - a / 2;
      const auto at = omega.blocks.begin() + (1 + 2 * gap);
      if (a % 2 == 1) omega.blocks.insert(at, {Block{k}, Block{-k}});
      else omega.blocks.insert(at, {Block{-k}, Block{k}});
    }
  }
  return omega;
}

Composition inversion_composition_perm(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<int> sorted_values = pi;
  std::sort(sorted_values.begin(), sorted_values.end());
  for (int i = 0; i < n; ++i) {
    if (sorted_values[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("inversion_composition_perm: not a permutation of [n]");
  }
  Composition code(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pi[static_cast<std::size_t>(j)] < pi[static_cast<std::size_t>(i)]) ++code[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)] - 1)];
    }
  }
  return code;
}

Report verify_hilbert(int n_max_a, int n_max_b) {
  Report report{"hilbert"};
  for (Type type : {Type::A, Type::B}) {
    const int n_max = type == Type::A ? n_max_a : n_max_b;
    const char* name = type == Type::A ? "A" : "B";
    for (int n = 0; n <= n_max; ++n) {
      const std::string tag = std::string(" type ") + name + " (n=" + std::to_string(n) + ")";
      std::vector<QPoly> expected(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) {
        expected[static_cast<std::size_t>(n - k)] = ordered(type == Type::A ? OrderedKind::S_A : OrderedKind::S_B, n, k);
      }
      report.check(hilbert(n, type) == TPoly(expected), "Hilb = sum_k S^o[n,k] t^{n-k}" + tag);
      const QPoly classical = type == Type::A ? q_factorial(n) : q_double_factorial(2 * n);
      report.check(hilbert(n, type, true) == TPoly(classical), std::string(type == Type::A ? "[n]!" : "[2n]!!") + " classical case" + tag);

      // sum over T with #T = n-k of prod [j]^{eps_j} (A) or [2j+1]^{phi_j} (B).
      std::vector<QPoly> by_k(static_cast<std::size_t>(n) + 1);
      const int first = type == Type::A ? 2 : 1;
      const int free = std::max(0, n - first + 1);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
        IndexSet T;
        for (int b = 0; b < free; ++b) {
          if (mask >> b & 1) T.insert(first + b);
        }
        const Composition e = expansion(T, n, type);
        QPoly term{1};
        for (std::size_t j = 0; j < e.size(); ++j) {
          const QPoly base = type == Type::A ? q_bracket(static_cast<int>(j) + 1) : q_bracket(2 * static_cast<int>(j) + 1);
          term *= pow(base, static_cast<unsigned>(e[j]));
        }
        by_k[static_cast<std::size_t>(n) - T.size()] += term;
      }
      for (int k = 0; k <= n; ++k) {
        const QPoly scale = type == Type::A ? q_factorial(k) : q_double_factorial(2 * k);
        report.check(by_k[static_cast<std::size_t>(k)] * scale == expected[static_cast<std::size_t>(n - k)],
                     "expansion product formula" + tag + " k=" + std::to_string(k));
      }
    }
  }
  return report;
}

Report verify_bijection(int n_max_a, int n_max_b, int n_max_perm) {
  Report report{"bijection"};
  for (Type type : {Type::A, Type::B}) {
    const int n_max = type == Type::A ? n_max_a : n_max_b;
    const Flavor flavor = type == Type::A ? Flavor::typeA : Flavor::typeB;
    for (int n = 0; n <= n_max; ++n) {
      const std::string tag = std::string(" type ") + (type == Type::A ? "A" : "B") + " (n=" + std::to_string(n) + ")";
      std::set<std::string> images;
      std::size_t monomials = 0, bad_round_trip = 0;
      std::string first_bad;
      for_each_super_monomial(n, type, [&](const Composition& alpha, const IndexSet& T) {
        ++monomials;
        const OrderedPartition omega = insertion_bijection(T, alpha, n, type);
        images.insert(to_text(omega));
        if (!omega.is_valid() || !(eta_and_T(omega) == EtaT{alpha, T})) {
          if (bad_round_trip++ == 0) first_bad = set_text(T) + " " + comp_text(alpha) + " -> " + to_text(omega);
        }
      });
      report.checks += monomials;
      report.check(bad_round_trip == 0, "eta_and_T(insertion(T, alpha)) = (alpha, T)" + tag + (bad_round_trip ? ", first failure " + first_bad : ""));
      report.check(images.size() == monomials, "insertion is injective" + tag);

      const auto all = enumerate_ordered(flavor, n);
      report.check(images.size() == all.size(), "insertion exhausts all ordered partitions" + tag);
      std::size_t missing = 0, bad_degree = 0;
      for (const auto& omega : all) {
        missing += images.count(to_text(omega)) == 0;
        const EtaT et = eta_and_T(omega);
        const int eta_total = std::accumulate(et.eta.begin(), et.eta.end(), 0);
        bad_degree += eta_total != inv(omega) || static_cast<int>(et.T.size()) != n - omega.k();
        // The inverse direction: (eta, T) of every partition indexes a monomial that maps back to it.
        if (insertion_bijection(et.T, et.eta, n, type) != omega) ++missing;
      }
      report.checks += all.size();
      report.check(missing == 0, "every ordered partition is hit and recovered from its (eta, T)" + tag);
      report.check(bad_degree == 0, "|eta| = inv and #T = n - k" + tag);
    }
  }

  for (int n = 0; n <= n_max_perm; ++n) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    std::set<Composition> codes;
    std::size_t count = 0, above = 0;
    do {
      ++count;
      const Composition code = inversion_composition_perm(pi);
      for (int i = 0; i < n; ++i) above += code[static_cast<std::size_t>(i)] > i;
      codes.insert(code);
    } while (std::next_permutation(pi.begin(), pi.end()));
    const std::string tag = " (n=" + std::to_string(n) + ")";
    report.check(above == 0, "I(pi) <= (0,1,...,n-1)" + tag);
    report.check(codes.size() == count && BigInt(static_cast<unsigned long>(count)) == factorial(n), "I is a bijection onto sub-staircase compositions" + tag);
  }
  return report;
}

}  // namespace qstirling
