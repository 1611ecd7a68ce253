#include "cubesym/stirling.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "cubesym/errors.hpp"

namespace cubesym {

namespace {

void check_args(int r, int m) {
  if (r < 0 || m < 0) throw Error(ErrorKind::ParameterOutOfRange, "Stirling arguments must be non-negative");
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt power(int base, int exp) {
  BigInt p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (num % den != 0) throw Error(ErrorKind::InternalInconsistency, "Stirling sum not divisible");
  return num / den;
}

// Per alphabet size, the column counts for r = 1, 2, ... up to the first one
// beyond 2^64, so any 64-bit n is covered.
struct Thresholds {
  std::vector<BigInt> stirling;
  std::vector<BigInt> closed;
};

const Thresholds& thresholds(int m) {
  static std::mutex mu;
  static std::map<int, Thresholds> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  Thresholds t;
  const BigInt limit = BigInt(1) << 64;
  for (int r = 1;; ++r) {
    t.stirling.push_back(hamming_column_count(r, m));
    t.closed.push_back(hamming_column_count_closed(r, m));
    if (t.stirling.back() >= limit && t.closed.back() >= limit) break;
  }
  return memo.emplace(m, std::move(t)).first->second;
}

int first_at_least(const std::vector<BigInt>& counts, std::uint64_t n) {
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] >= n) return static_cast<int>(i) + 1;
  throw Error(ErrorKind::Overflow, "threshold table exhausted");
}

void check_hamming(int m, std::uint64_t n) {
  if (m < 2) throw Error(ErrorKind::ParameterOutOfRange, "Hamming alphabet must be at least 2");
  if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "Hamming dimension must be at least 1");
}

}  // namespace

BigInt stirling2_recurrence(int r, int m) {
  check_args(r, m);
  if (m > r) return r == 0 && m == 0 ? 1 : 0;
  std::vector<BigInt> row(m + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= r; ++i)
    for (int j = std::min(i, m); j >= 0; --j) row[j] = j == 0 ? BigInt(0) : j * row[j] + row[j - 1];
  return row[m];
}

BigInt stirling2_sum(int r, int m) {
  check_args(r, m);
  BigInt total = 0;
  for (int i = 0; i <= m; ++i) {
    BigInt term = binomial(m, i) * power(m - i, r);
    total += i % 2 == 0 ? term : BigInt(-term);
  }
  return exact_div(total, factorial(m));
}

BigInt stirling2(int r, int m) {
  BigInt a = stirling2_recurrence(r, m);
  BigInt b = stirling2_sum(r, m);
  if (a != b)
    throw Error(ErrorKind::InternalInconsistency,
                "S(" + std::to_string(r) + "," + std::to_string(m) + ") recurrence and sum disagree");
  return a;
}

BigInt hamming_column_count(int r, int m) { return stirling2_recurrence(r, m) + stirling2_recurrence(r, m - 1); }

BigInt hamming_column_count_closed(int r, int m) {
  if (r < 1 || m < 2) throw Error(ErrorKind::ParameterOutOfRange, "closed form needs r >= 1 and m >= 2");
  BigInt total = (m - 1) % 2 == 0 ? 1 : -1;
  for (int i = 0; i <= m - 2; ++i) {
    BigInt term = binomial(m - 1, i) * (power(m - i, r - 1) + power(m - i - 1, r));
    total += i % 2 == 0 ? term : BigInt(-term);
  }
  return exact_div(total, factorial(m - 1));
}

int hamming_det_number_stirling(int m, std::uint64_t n) {
  check_hamming(m, n);
  return first_at_least(thresholds(m).stirling, n);
}

int hamming_det_number_closed(int m, std::uint64_t n) {
  check_hamming(m, n);
  return first_at_least(thresholds(m).closed, n);
}

int hamming_det_number(int m, std::uint64_t n) {
  const int a = hamming_det_number_stirling(m, n);
  const int b = hamming_det_number_closed(m, n);
  if (a != b)
    throw Error(ErrorKind::InternalInconsistency,
                "det(H(" + std::to_string(m) + "," + std::to_string(n) + ")) differs between the two forms");
  return a;
}

bool hamming_two_distinguishable(int m, std::uint64_t n) {
  return (m == 2 && n >= 4) || (m == 3 && n >= 3) || (m >= 4 && n >= 2);
}

CostBounds hamming_cost_bounds(int m, std::uint64_t n) {
  check_hamming(m, n);
  CostBounds b;
  if (!hamming_two_distinguishable(m, n)) {
    b.reason = "H(" + std::to_string(m) + "," + std::to_string(n) + ") is not 2-distinguishable";
    return b;
  }
  if (m - 1 < 2) {
    b.reason = "requires m - 1 >= 2";
    return b;
  }
  if (static_cast<std::uint64_t>(m - 1) > n) {
    b.reason = "requires m - 1 <= n";
    return b;
  }
  b.applicable = true;
  b.lo = hamming_det_number(m, n);
  b.hi = b.lo + 1;
  return b;
}

}  // namespace cubesym
