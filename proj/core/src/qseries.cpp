#include "qstirling/qseries.hpp"

#include <stdexcept>
#include <string>

#include "qstirling/stirling.hpp"

namespace qstirling {

// --- Q[t] helpers ----------------------------------------------------------

namespace {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_add(const RatPoly& a, const RatPoly& b, int sign = 1) {
  RatPoly out(std::max(a.size(), b.size()), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  trim(out);
  return out;
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly rp_const(const BigRational& c) {
  RatPoly p{c};
  trim(p);
  return p;
}

RatPoly rp_from_ints(const std::vector<BigInt>& values) {
  RatPoly p;
  for (const auto& v : values) p.emplace_back(v);
  trim(p);
  return p;
}

std::string rp_text(const RatPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += p[i].get_str() + (i ? "*t^" + std::to_string(i) : "");
  }
  return out;
}

}  // namespace

// --- RatSeries -------------------------------------------------------------

RatSeries::RatSeries(int order) {
  if (order < 0) throw std::invalid_argument("RatSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

RatSeries RatSeries::constant(int order, const BigRational& c) {
  RatSeries s(order);
  s.coeffs_[0] = rp_const(c);
  return s;
}

RatSeries RatSeries::exp_linear(int order, const BigRational& a) {
  RatSeries s(order);
  BigRational term = 1;
  for (int n = 0; n <= order; ++n) {
    s.coeffs_[static_cast<std::size_t>(n)] = rp_const(term);
    term = term * a / (n + 1);
  }
  return s;
}

RatSeries RatSeries::neg_log_one_minus(int order, const BigRational& a) {
  RatSeries s(order);
  BigRational power = 1;
  for (int n = 1; n <= order; ++n) {
    power *= a;
    s.coeffs_[static_cast<std::size_t>(n)] = rp_const(power / n);
  }
  return s;
}

RatSeries& RatSeries::operator+=(const RatSeries& other) {
  if (order() != other.order()) throw std::invalid_argument("RatSeries: order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = rp_add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& other) {
  if (order() != other.order()) throw std::invalid_argument("RatSeries: order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = rp_add(coeffs_[i], other.coeffs_[i], -1);
  return *this;
}

RatSeries& RatSeries::operator*=(const RatPoly& scalar) {
  for (auto& c : coeffs_) c = rp_mul(c, scalar);
  return *this;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("RatSeries: order mismatch");
  RatSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    for (int j = 0; i + j <= a.order(); ++j) out.coeff(i + j) = rp_add(out.coeff(i + j), rp_mul(a.coeff(i), b.coeff(j)));
  }
  return out;
}

RatSeries RatSeries::exp() const {
  if (!coeffs_[0].empty()) throw std::invalid_argument("RatSeries::exp: constant term must vanish");
  RatSeries out(order());
  out.coeffs_[0] = {BigRational(1)};
  for (int n = 1; n <= order(); ++n) {
    RatPoly acc;
    for (int k = 1; k <= n; ++k) acc = rp_add(acc, rp_mul(rp_const(BigRational(k)), rp_mul(coeff(k), out.coeff(n - k))));
    out.coeff(n) = rp_mul(acc, rp_const(BigRational(1, n)));
  }
  return out;
}

RatSeries RatSeries::pow(unsigned k) const {
  RatSeries out = constant(order(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

RatPoly RatSeries::egf_coefficient(int n) const { return rp_mul(coeff(n), rp_const(BigRational(factorial(n)))); }

// --- classical EGFs ---------------------------------------------------------

const char* egf_name(EgfWhich which) {
  switch (which) {
    case EgfWhich::A_second: return "A_second";
    case EgfWhich::A_bivar: return "A_bivar";
    case EgfWhich::A_first: return "A_first";
    case EgfWhich::A_first_bivar: return "A_first_bivar";
    case EgfWhich::B_second: return "B_second";
    case EgfWhich::B_bivar: return "B_bivar";
    case EgfWhich::B_first: return "B_first";
    case EgfWhich::B_first_bivar: return "B_first_bivar";
  }
  return "?";
}

Report egf_verify(EgfWhich which, int N) {
  if (N < 0 || N > 12) throw std::invalid_argument("egf_verify: N must be in [0, 12]");
  Report report{std::string("egf ") + egf_name(which)};
  const RatPoly t{BigRational(0), BigRational(1)};
  const RatSeries one = RatSeries::constant(N, 1);
  const RatSeries ex = RatSeries::exp_linear(N, 1);
  const RatSeries e2x_minus_1 = RatSeries::exp_linear(N, 2) - one;
  const RatSeries log1 = RatSeries::neg_log_one_minus(N, 1);
  const RatSeries half_log2 = RatSeries::neg_log_one_minus(N, 2) * rp_const(BigRational(1, 2));

  auto row = [&](Kind kind, int n) {
    std::vector<BigInt> values;
    for (int k = 0; k <= n; ++k) values.push_back(stirling_number(kind, n, k));
    return rp_from_ints(values);
  };
  auto compare_fixed_k = [&](Kind kind, auto&& series_for_k) {
    for (int k = 0; k <= N; ++k) {
      const RatSeries s = series_for_k(k);
      for (int n = 0; n <= N; ++n) {
        const RatPoly got = s.egf_coefficient(n);
        report.check(got == rp_const(BigRational(stirling_number(kind, n, k))),
                     "n! [x^n] = " + std::string(kind_name(kind)) + "(" + std::to_string(n) + "," + std::to_string(k) + "), got " + rp_text(got));
      }
    }
  };
  auto compare_bivariate = [&](Kind kind, const RatSeries& s) {
    for (int n = 0; n <= N; ++n) {
      const RatPoly got = s.egf_coefficient(n);
      report.check(got == row(kind, n), "n! [x^n] = sum_k " + std::string(kind_name(kind)) + "(" + std::to_string(n) + ",k) t^k, got " + rp_text(got));
    }
  };

  switch (which) {
    case EgfWhich::A_second:
      compare_fixed_k(Kind::S_A, [&](int k) {
        return (ex - one).pow(static_cast<unsigned>(k)) * rp_const(BigRational(1) / BigRational(factorial(k)));
      });
      break;
    case EgfWhich::A_bivar:
      compare_bivariate(Kind::S_A, ((ex - one) * t).exp());
      break;
    case EgfWhich::A_first:
      compare_fixed_k(Kind::c_A, [&](int k) {
        return log1.pow(static_cast<unsigned>(k)) * rp_const(BigRational(1) / BigRational(factorial(k)));
      });
      break;
    case EgfWhich::A_first_bivar:
      compare_bivariate(Kind::c_A, (log1 * t).exp());
      break;
    case EgfWhich::B_second:
      compare_fixed_k(Kind::S_B, [&](int k) {
        const BigRational c = BigRational(1) / (BigRational(factorial(k)) * BigRational(BigInt(1) << k));
        return ex * e2x_minus_1.pow(static_cast<unsigned>(k)) * rp_const(c);
      });
      break;
    case EgfWhich::B_bivar:
      compare_bivariate(Kind::S_B, ex * (e2x_minus_1 * rp_mul(t, rp_const(BigRational(1, 2)))).exp());
      break;
    case EgfWhich::B_first:
      compare_fixed_k(Kind::c_B, [&](int k) {
        return half_log2.exp() * half_log2.pow(static_cast<unsigned>(k)) * rp_const(BigRational(1) / BigRational(factorial(k)));
      });
      break;
    case EgfWhich::B_first_bivar:
      compare_bivariate(Kind::c_B, (half_log2 * RatPoly{BigRational(1), BigRational(1)}).exp());
      break;
  }
  return report;
}

Report egf_verify_all(int N) {
  Report report{"egf"};
  for (auto which : {EgfWhich::A_second, EgfWhich::A_bivar, EgfWhich::A_first, EgfWhich::A_first_bivar, EgfWhich::B_second,
                     EgfWhich::B_bivar, EgfWhich::B_first, EgfWhich::B_first_bivar}) {
    report.absorb(egf_verify(which, N));
  }
  return report;
}

// --- q-EGFs ----------------------------------------------------------------

QEgf QEgf::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("QEgf::truncated: cannot extend order");
  return QEgf(std::vector<TPoly>(num_.begin(), num_.begin() + order + 1));
}

QEgf qegf_one(int order) {
  std::vector<TPoly> num(static_cast<std::size_t>(order) + 1);
  num[0] = TPoly(QPoly{1});
  return QEgf(std::move(num));
}

QEgf qegf_from(const std::vector<QPoly>& numerators) {
  std::vector<TPoly> num;
  for (const auto& c : numerators) num.emplace_back(c);
  return QEgf(std::move(num));
}

namespace {

void require_same_order(const QEgf& f, const QEgf& g, const char* op) {
  if (f.order() != g.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(f.order()) + " vs " + std::to_string(g.order()) + ")");
  }
}

TPoly divide_exact(const TPoly& p, const QPoly& d) {
  return p.map_coeffs([&](const QPoly& c) { return c.exact_divide(d); });
}

bool has_zero_constant(const QEgf& f) { return f.order() < 0 || f.numerator(0).is_zero(); }

}  // namespace

QEgf mul(const QEgf& f, const QEgf& g) {
  require_same_order(f, g, "mul");
  std::vector<TPoly> out(static_cast<std::size_t>(f.order()) + 1);
  for (int n = 0; n <= f.order(); ++n) {
    for (int i = 0; i <= n; ++i) {
      if (f.numerator(i).is_zero() || g.numerator(n - i).is_zero()) continue;
      out[static_cast<std::size_t>(n)] += (f.numerator(i) * g.numerator(n - i)) * gaussian_binomial(n, i);
    }
  }
  return QEgf(std::move(out));
}

QEgf add(const QEgf& f, const QEgf& g) {
  require_same_order(f, g, "add");
  std::vector<TPoly> out = f.numerators();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.numerator(static_cast<int>(i));
  return QEgf(std::move(out));
}

QEgf scale(const QEgf& f, const TPoly& s) {
  std::vector<TPoly> out;
  for (const auto& c : f.numerators()) out.push_back(c * s);
  return QEgf(std::move(out));
}

QEgf dq(const QEgf& f) {
  if (f.order() < 1) throw std::invalid_argument("dq: order must be at least 1");
  return QEgf(std::vector<TPoly>(f.numerators().begin() + 1, f.numerators().end()));
}

QEgf antiderivative(const QEgf& f) {
  std::vector<TPoly> out{TPoly()};
  out.insert(out.end(), f.numerators().begin(), f.numerators().end());
  return QEgf(std::move(out));
}

QEgf times_x(const QEgf& f) {
  std::vector<TPoly> out(f.numerators().size());
  for (int n = 1; n <= f.order(); ++n) out[static_cast<std::size_t>(n)] = f.numerator(n - 1) * q_bracket(n);
  return QEgf(std::move(out));
}

QEgf q_log_one_minus_x(int order) {
  std::vector<QPoly> num(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) num[static_cast<std::size_t>(n)] = q_factorial(n - 1);
  return qegf_from(num);
}

QEgf exp_q(const TPoly& a, int order) {
  std::vector<TPoly> out;
  TPoly power(QPoly{1});
  for (int n = 0; n <= order; ++n) {
    out.push_back(power);
    power = power * a;
  }
  return QEgf(std::move(out));
}

QEgf geometric(int order) {
  std::vector<QPoly> num;
  for (int n = 0; n <= order; ++n) num.push_back(q_factorial(n));
  return qegf_from(num);
}

namespace {

// f^{[0]}, ..., f^{[count]} at f's order.
std::vector<QEgf> symbolic_powers(const QEgf& f, int count) {
  const int N = f.order();
  std::vector<QEgf> powers{qegf_one(N)};
  if (count >= 1 && !has_zero_constant(f)) throw std::invalid_argument("symbolic_power: f must have zero constant term");
  for (int k = 1; k <= count; ++k) {
    if (N == 0) {
      powers.push_back(QEgf(std::vector<TPoly>(1)));
      continue;
    }
    const QEgf integrand = scale(mul(powers.back().truncated(N - 1), dq(f)), TPoly(q_bracket(k)));
    powers.push_back(antiderivative(integrand));
  }
  return powers;
}

}  // namespace

QEgf symbolic_power(const QEgf& f, int k) {
  if (k < 0) throw std::invalid_argument("symbolic_power: k must be nonnegative");
  return symbolic_powers(f, k).back();
}

QEgf q_compose(const QEgf& g, const QEgf& f) {
  const int N = f.order();
  if (g.order() < N) throw std::invalid_argument("q_compose: g must have at least f's order");
  if (!has_zero_constant(f)) throw std::invalid_argument("q_compose: f must have zero constant term");
  const auto powers = symbolic_powers(f, N);
  std::vector<TPoly> out(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    if (g.numerator(n).is_zero()) continue;
    const QPoly fact = q_factorial(n);
    for (int j = 0; j <= N; ++j) {
      const TPoly& c = powers[static_cast<std::size_t>(n)].numerator(j);
      if (c.is_zero()) continue;
      TPoly quotient;
      try {
        quotient = divide_exact(c, fact);
      } catch (const std::domain_error&) {
        throw std::domain_error("q_compose: numerator " + std::to_string(j) + " of f^[" + std::to_string(n) + "] is not divisible by [" +
                                std::to_string(n) + "]!");
      }
      out[static_cast<std::size_t>(j)] += g.numerator(n) * quotient;
    }
  }
  return QEgf(std::move(out));
}

// --- identity suite --------------------------------------------------------

namespace {

QPoly q_power(std::size_t e) { return QPoly::monomial(1, e); }

std::size_t choose2(int k) { return k < 2 ? 0 : static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2; }

// sum_i (-1)^{k-i} q^{c(k-i)} gauss(k,i) exp_q(x_i x), x_i = [i] or [2i+1].
QEgf alternating_exp_sum(int k, int N, bool type_b) {
  QEgf sum(std::vector<TPoly>(static_cast<std::size_t>(N) + 1));
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    QPoly coeff = type_b ? substitute_power(gaussian_binomial(k, i), 2).shifted(2 * choose2(j))
                         : gaussian_binomial(k, i).shifted(choose2(j));
    if (j % 2 == 1) coeff = -coeff;
    const QPoly base = type_b ? q_bracket(2 * i + 1) : q_bracket(i);
    sum = add(sum, scale(exp_q(TPoly(base), N), TPoly(coeff)));
  }
  return sum;
}

std::string nk(int n, int k) { return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }

}  // namespace

Report qegf_identity_suite(int N) {
  if (N < 1 || N > 12) throw std::invalid_argument("qegf_identity_suite: N must be in [1, 12]");
  Report report{"qegf"};

  // E_k and F_k from the cleared-denominator exponential sums.
  std::vector<QEgf> E, F;
  for (int k = 0; k <= N; ++k) {
    const QEgf a = alternating_exp_sum(k, N, false);
    const QEgf b = alternating_exp_sum(k, N, true);
    std::vector<TPoly> e_num, f_num;
    for (int n = 0; n <= N; ++n) {
      report.check(a.numerator(n) == TPoly(ordered(OrderedKind::S_A, n, k).shifted(choose2(k))),
                   "q^C(k,2) S^o[n,k] = sum (-1)^{k-i} q^C(k-i,2) [k,i] [i]^n " + nk(n, k));
      report.check(b.numerator(n) == TPoly(ordered(OrderedKind::S_B, n, k).shifted(static_cast<std::size_t>(k) * k)),
                   "q^{k^2} S_B^o[n,k] = sum (-1)^{k-i} q^{2C(k-i,2)} [k,i]_{q^2} [2i+1]^n " + nk(n, k));
      e_num.push_back(divide_exact(a.numerator(n), q_power(choose2(k))));
      f_num.push_back(divide_exact(b.numerator(n), q_power(static_cast<std::size_t>(k) * k)));
    }
    E.emplace_back(std::move(e_num));
    F.emplace_back(std::move(f_num));
  }

  // Symbolic powers of -log_q(1-x).
  const QEgf L = q_log_one_minus_x(N);
  for (int k = 0; k <= N; ++k) {
    const QEgf power = symbolic_power(L, k);
    for (int n = 0; n <= N; ++n) {
      report.check(power.numerator(n) == TPoly(stirling(Kind::c_A, n, k) * q_factorial(k)),
                   "c[n,k] [k]! = numerator of (-log_q(1-x))^[k] " + nk(n, k));
    }
  }
  const TPoly t = TPoly::monomial(QPoly{1}, 1);
  const QEgf C = q_compose(exp_q(t, N), L);
  for (int n = 0; n <= N; ++n) {
    std::vector<QPoly> row;
    for (int k = 0; k <= n; ++k) row.push_back(stirling(Kind::c_A, n, k));
    report.check(C.numerator(n) == TPoly(row), "exp_q[-t log_q(1-x)] numerator = sum_k c[n,k] t^k (n=" + std::to_string(n) + ")");
  }

  // q-difference equations.
  for (int k = 0; k <= N; ++k) {
    const QEgf lhs_e = dq(E[static_cast<std::size_t>(k)]);
    QEgf rhs_e = E[static_cast<std::size_t>(k)].truncated(N - 1);
    if (k >= 1) rhs_e = add(rhs_e, E[static_cast<std::size_t>(k - 1)].truncated(N - 1));
    rhs_e = scale(rhs_e, TPoly(q_bracket(k)));
    report.check(lhs_e == rhs_e, "D_q E_k = [k](E_k + E_{k-1}) (k=" + std::to_string(k) + ")");

    const QEgf lhs_f = dq(F[static_cast<std::size_t>(k)]);
    QEgf rhs_f = scale(F[static_cast<std::size_t>(k)].truncated(N - 1), TPoly(q_bracket(2 * k + 1)));
    if (k >= 1) rhs_f = add(rhs_f, scale(F[static_cast<std::size_t>(k - 1)].truncated(N - 1), TPoly(q_bracket(2 * k))));
    report.check(lhs_f == rhs_f, "D_q F_k = [2k+1] F_k + [2k] F_{k-1} (k=" + std::to_string(k) + ")");
  }
  report.check(dq(C) == scale(mul(C.truncated(N - 1), geometric(N - 1)), t), "D_q C = t C / (1 - x)");

  for (int n = 0; n < N; ++n) {
    auto row = [](int m) {
      std::vector<QPoly> r;
      for (int k = 0; k <= m; ++k) r.push_back(stirling(Kind::c_B, m, k));
      return TPoly(r);
    };
    const TPoly A = row(n);
    const QPoly qq = QPoly::monomial(1, 2) * QPoly{1, -1} * q_bracket(n) * (n >= 1 ? q_bracket(n - 1) : QPoly{});
    const TPoly lhs = A * qq + row(n + 1) - A * (QPoly{0, 1, 1} * q_bracket(n)) - A * TPoly(std::vector<QPoly>{QPoly{1}, QPoly{1}});
    report.check(lhs.is_zero(), "q^2(1-q)[n][n-1]A_n + A_{n+1} - q(1+q)[n]A_n - (1+t)A_n = 0 (n=" + std::to_string(n) + ")");
  }

  // q-chain rule D_q(g[f]) = (D_q g)[f] D_q f.
  const int M = std::min(N, 8);
  std::vector<QPoly> x_num(static_cast<std::size_t>(M) + 1);
  x_num[1] = QPoly{1};
  const std::vector<std::pair<std::string, QEgf>> inner{
      {"-log_q(1-x)", L.truncated(M)},
      {"x", qegf_from(x_num)},
      {"exp_q(x)-1", add(exp_q(TPoly(QPoly{1}), M), scale(qegf_one(M), TPoly(QPoly{-1})))},
  };
  const std::vector<std::pair<std::string, QEgf>> outer{
      {"exp_q(x)", exp_q(TPoly(QPoly{1}), M)},
      {"exp_q(tx)", exp_q(t, M)},
      {"1/(1-x)", geometric(M)},
  };
  for (const auto& [gname, g] : outer) {
    for (const auto& [fname, f] : inner) {
      const QEgf lhs = dq(q_compose(g, f));
      const QEgf rhs = mul(q_compose(dq(g), f.truncated(M - 1)), dq(f));
      report.check(lhs == rhs, "q-chain rule g=" + gname + " f=" + fname);
    }
  }
  return report;
}

}  // namespace qstirling
