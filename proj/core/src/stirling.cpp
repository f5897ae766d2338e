#include "qstirling/stirling.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qstirling {

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::S_A: return "S";
    case Kind::c_A: return "c";
    case Kind::S_B: return "S_B";
    case Kind::c_B: return "c_B";
  }
  return "?";
}

QPoly StirlingTable::weight(int n, int k) const {
  int w = 0;
  switch (kind_) {
    case Kind::S_A: w = k; break;
    case Kind::c_A: w = n - 1; break;
    case Kind::S_B: w = 2 * k + 1; break;
    case Kind::c_B: w = 2 * n - 1; break;
  }
  if (mode_ == QMode::numeric) return QPoly::constant(w);
  return q_bracket(w);
}

void StirlingTable::grow_to(int n) {
  if (rows_.empty()) rows_.push_back({QPoly{1}});
  while (static_cast<int>(rows_.size()) <= n) {
    const int m = static_cast<int>(rows_.size());
    const auto& prev = rows_.back();
    std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      QPoly value;
      if (k >= 1) value += prev[static_cast<std::size_t>(k - 1)];
      if (k <= m - 1) value += weight(m, k) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
    rows_.push_back(std::move(row));
  }
}

QPoly StirlingTable::entry(int n, int k) {
  if (n < 0) throw std::invalid_argument("StirlingTable::entry: n must be nonnegative");
  if (k < 0 || k > n) return {};
  std::lock_guard lock(mutex_);
  grow_to(n);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

StirlingTable& shared_table(Kind kind, QMode mode) {
  static std::array<StirlingTable, 8> tables{
      StirlingTable{Kind::S_A, QMode::numeric},    StirlingTable{Kind::S_A, QMode::polynomial},
      StirlingTable{Kind::c_A, QMode::numeric},    StirlingTable{Kind::c_A, QMode::polynomial},
      StirlingTable{Kind::S_B, QMode::numeric},    StirlingTable{Kind::S_B, QMode::polynomial},
      StirlingTable{Kind::c_B, QMode::numeric},    StirlingTable{Kind::c_B, QMode::polynomial},
  };
  return tables[static_cast<std::size_t>(kind) * 2 + (mode == QMode::polynomial ? 1 : 0)];
}

}  // namespace

QPoly stirling(Kind kind, QMode mode, int n, int k) { return shared_table(kind, mode).entry(n, k); }

BigInt stirling_number(Kind kind, int n, int k) {
  return stirling(kind, QMode::numeric, n, k).coeff(0);
}

QPoly barred(int n, int k) {
  QPoly s = stirling(Kind::S_A, n, k);
  if (k < 2) return s;
  return s.shifted(static_cast<std::size_t>(k) * (k - 1) / 2);
}

QPoly ordered(OrderedKind kind, int n, int k) {
  if (k < 0 || k > n) return {};
  switch (kind) {
    case OrderedKind::S_A: return q_factorial(k) * stirling(Kind::S_A, n, k);
    case OrderedKind::S_A_bar: return q_factorial(k) * barred(n, k);
    case OrderedKind::S_B: return q_double_factorial(2 * k) * stirling(Kind::S_B, n, k);
  }
  return {};
}

BigInt ordered_number(OrderedKind kind, int n, int k) { return ordered(kind, n, k).at_one(); }

QPoly signed_first_kind(Type type, QMode mode, int n, int k) {
  QPoly c = stirling(type == Type::A ? Kind::c_A : Kind::c_B, mode, n, k);
  return ((n - k) % 2 == 0) ? c : -c;
}

Report verify_recursions(int n_max) {
  Report report{"recursions"};
  const std::array kinds{Kind::S_A, Kind::c_A, Kind::S_B, Kind::c_B};
  for (int n = 0; n <= n_max; ++n) {
    const std::string at = "(n=" + std::to_string(n);
    for (Kind kind : kinds) {
      for (int k = -1; k <= n + 1; ++k) {
        report.check(stirling(kind, QMode::polynomial, n, k).at_one() == stirling_number(kind, n, k),
                     std::string(kind_name(kind)) + " q=1 collapse " + at + ",k=" + std::to_string(k) + ")");
      }
    }

    BigInt bell = 0, perms = 0, signed_perms = 0;
    for (int k = 0; k <= n; ++k) {
      bell += stirling_number(Kind::S_A, n, k);
      perms += stirling_number(Kind::c_A, n, k);
      signed_perms += stirling_number(Kind::c_B, n, k);
    }
    // Bell numbers by the binomial recursion B(m+1) = sum C(m,i) B(i).
    std::vector<BigInt> bells{1};
    for (int m = 0; m < n; ++m) {
      BigInt next = 0;
      for (int i = 0; i <= m; ++i) next += binomial(m, i) * bells[static_cast<std::size_t>(i)];
      bells.push_back(next);
    }
    report.check(bell == bells.back(), "row sum of S is the Bell number " + at + ")");
    report.check(perms == factorial(n), "row sum of c is n! " + at + ")");
    report.check(signed_perms == double_factorial(2 * n), "row sum of c_B is (2n)!! " + at + ")");
    report.check(stirling_number(Kind::c_B, n, 0) == double_factorial(2 * n - 1), "c_B(n,0) = (2n-1)!! " + at + ")");

    if (n == 0) continue;
    for (int k = 0; k <= n; ++k) {
      const std::string nk = at + ",k=" + std::to_string(k) + ")";
      QPoly rhs = q_bracket(k) * (ordered(OrderedKind::S_A, n - 1, k - 1) + ordered(OrderedKind::S_A, n - 1, k));
      report.check(ordered(OrderedKind::S_A, n, k) == rhs, "S^o[n,k] = [k](S^o[n-1,k-1] + S^o[n-1,k]) " + nk);

      QPoly rhs_b = q_bracket(std::max(2 * k, 0)) * ordered(OrderedKind::S_B, n - 1, k - 1) +
                    q_bracket(2 * k + 1) * ordered(OrderedKind::S_B, n - 1, k);
      report.check(ordered(OrderedKind::S_B, n, k) == rhs_b,
                   "S_B^o[n,k] = [2k] S_B^o[n-1,k-1] + [2k+1] S_B^o[n-1,k] " + nk);

      QPoly bar = q_bracket(k) * barred(n - 1, k);
      if (k >= 1) bar += barred(n - 1, k - 1).shifted(static_cast<std::size_t>(k - 1));
      report.check(barred(n, k) == bar, "Sbar[n,k] = q^{k-1} Sbar[n-1,k-1] + [k] Sbar[n-1,k] " + nk);
    }
  }
  return report;
}

}  // namespace qstirling
