#include "cyclicsign/instance_gen.hpp"

#include "cyclicsign/errors.hpp"
#include "cyclicsign/gap_graph.hpp"

#include <algorithm>
#include <functional>

namespace cyclicsign {
namespace {

long long draw(std::mt19937_64& engine, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(engine);
}

Rational floor_div(const Rational& q, int n) {
  const Rational v = q / n;
  Integer f = boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
  if (v < 0 && Rational(f) != v) f -= 1;
  return Rational(f);
}

CyclicMatrix force_row_sums(MatrixQ m, RowSumMode mode) {
  const int n = static_cast<int>(m.rows());
  const VectorQ sums = m.rowwise().sum();
  if (mode == RowSumMode::ForcePositive) {
    const Rational lowest = sums.minCoeff();
    if (lowest <= 0) m.array() += floor_div(-lowest, n) + 1;
  } else if (mode == RowSumMode::ForceNegative) {
    const Rational highest = sums.maxCoeff();
    if (highest >= 0) m.array() -= floor_div(highest, n) + 1;
  }
  return CyclicMatrix(std::move(m));
}

}  // namespace

void validate(const GenConfig& config) {
  if (config.n < 1) throw InvalidDimension("generator: n must be >= 1");
  if (config.entry_bound < 1) throw InvalidArgument("generator: entry bound must be >= 1");
  if (config.non_negative && config.row_sum == RowSumMode::ForceNegative) {
    throw InvalidArgument("generator: a non-negative matrix cannot have negative row sums");
  }
}

std::mt19937_64 make_engine(const GenConfig& config) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(config.stream), static_cast<std::uint32_t>(config.stream >> 32)};
  return std::mt19937_64(seq);
}

CyclicMatrix generate(const GenConfig& config) {
  validate(config);
  auto engine = make_engine(config);
  const int n = config.n;
  const long long lo = config.non_negative ? 0 : -config.entry_bound;
  MatrixQ m(n, n);
  std::vector<long long> row(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (auto& v : row) v = draw(engine, lo, config.entry_bound);
    std::sort(row.begin(), row.end(), std::greater<>());
    for (int k = 0; k < n; ++k) m(i, (i + k) % n) = Rational(row[static_cast<std::size_t>(k)]);
  }
  return force_row_sums(std::move(m), config.row_sum);
}

CyclicMatrix generate_with_gap_pattern(const Eigen::MatrixXi& pattern, const GenConfig& config) {
  const GapGraph checked(pattern);  // validates shape, 0-1 entries and diagonal
  GenConfig effective = config;
  effective.n = checked.n();
  validate(effective);
  auto engine = make_engine(effective);
  const int n = effective.n;
  const long long bound = effective.entry_bound;

  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<long long> drops(static_cast<std::size_t>(n), 0);
    long long total = 0;
    for (int k = 1; k < n; ++k) {
      const int col = (i + k) % n;
      if (pattern(i, col) != 0) {
        drops[static_cast<std::size_t>(k)] = draw(engine, 1, bound);
        total += drops[static_cast<std::size_t>(k)];
      }
    }
    long long value = effective.non_negative ? total + draw(engine, 0, bound)
                                             : draw(engine, -bound, bound) + total / 2;
    m(i, i) = Rational(value);
    for (int k = 1; k < n; ++k) {
      value -= drops[static_cast<std::size_t>(k)];
      m(i, (i + k) % n) = Rational(value);
    }
  }
  CyclicMatrix out = force_row_sums(std::move(m), effective.row_sum);
  if (gap_adjacency(out.matrix()) != pattern) throw InternalError("generated matrix misses the gap pattern");
  return out;
}

CyclicMatrix generate_leading_tie(const GenConfig& config) {
  validate(config);
  if (config.n < 3) throw InvalidDimension("leading-tie matrices need n >= 3");
  auto engine = make_engine(config);
  const int n = config.n;
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) {
    long long value = draw(engine, 0, config.entry_bound);
    for (int k = n - 1; k >= 1; --k) {
      m(i, (i + k) % n) = Rational(value);
      if (k > 1) value += draw(engine, 1, config.entry_bound);
    }
    m(i, i) = Rational(value);
  }
  return CyclicMatrix(std::move(m));
}

Eigen::MatrixXi random_gap_pattern(int n, double edge_probability, std::mt19937_64& engine) {
  if (n < 1) throw InvalidDimension("pattern dimension must be >= 1");
  std::bernoulli_distribution edge(edge_probability);
  Eigen::MatrixXi k = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && edge(engine)) k(i, j) = 1;
    }
  }
  return k;
}

CyclicMatrix shifted(const CyclicMatrix& a, const Rational& shift) {
  MatrixQ m = a.matrix();
  m.array() += shift;
  return CyclicMatrix(std::move(m));
}

std::vector<CyclicMatrix> shrink_candidates(const CyclicMatrix& a) {
  const int n = a.n();
  std::vector<CyclicMatrix> out;
  if (n > 1) {
    for (int drop = 1; drop <= n; ++drop) {
      std::vector<int> keep;
      for (int i = 1; i <= n; ++i) {
        if (i != drop) keep.push_back(i);
      }
      out.push_back(principal_submatrix(a, IndexSet(std::move(keep))));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& v = a.matrix()(i, j);
      if (v == 0) continue;
      const Integer whole = boost::multiprecision::numerator(v) / boost::multiprecision::denominator(v);
      Rational next = Rational(whole) != v ? Rational(whole) : Rational(v - sign(v));
      MatrixQ m = a.matrix();
      m(i, j) = next;
      auto check = validate_class(m);
      if (check.accepted()) out.push_back(std::move(*check.matrix));
    }
  }
  return out;
}

}  // namespace cyclicsign
