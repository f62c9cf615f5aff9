#include "test_support.hpp"

#include <sstream>

namespace cyclicsign::testing {

MatrixQ rows_to_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto cols = n == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  MatrixQ m(n, cols);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

CyclicMatrix cyclic(std::initializer_list<std::initializer_list<long long>> rows) {
  return CyclicMatrix(rows_to_matrix(rows));
}

Eigen::MatrixXi int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXi m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

CyclicMatrix fixture_a1() {
  return cyclic({{2, 1, 1, 1, 0}, {0, 1, 1, 0, 0}, {2, 1, 2, 2, 2}, {2, 1, 0, 2, 2}, {1, 1, 1, 0, 2}});
}

CyclicMatrix fixture_a2() {
  return cyclic({{2, 2, 2, 1, 1}, {1, 3, 3, 2, 2}, {0, 0, 1, 1, 0}, {2, 2, 2, 2, 2}, {1, 1, 0, 0, 1}});
}

CyclicMatrix fixture_a3() {
  return cyclic({{2, 2, 1, 1, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 1}, {1, 0, 0, 1, 1}, {1, 0, 0, 0, 1}});
}

Rational cofactor_determinant(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    MatrixQ minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index c = 0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k != j) minor(i - 1, c++) = m(i, k);
      }
    }
    const Rational term = m(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

Eigen::MatrixXi transitive_closure(const Eigen::MatrixXi& adjacency) {
  const Eigen::Index n = adjacency.rows();
  Eigen::MatrixXi reach = adjacency;
  for (Eigen::Index i = 0; i < n; ++i) reach(i, i) = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (reach(i, k) && reach(k, j)) reach(i, j) = 1;
      }
    }
  }
  return reach;
}

std::vector<BruteComponent> brute_force_components(const Eigen::MatrixXi& adjacency) {
  const Eigen::Index n = adjacency.rows();
  const Eigen::MatrixXi reach = transitive_closure(adjacency);
  std::vector<bool> assigned(static_cast<std::size_t>(n), false);
  std::vector<BruteComponent> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (assigned[static_cast<std::size_t>(i)]) continue;
    BruteComponent c{{}, true};
    for (Eigen::Index j = 0; j < n; ++j) {
      if (reach(i, j) && reach(j, i)) {
        c.vertices.push_back(static_cast<int>(j) + 1);
        assigned[static_cast<std::size_t>(j)] = true;
      }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (reach(i, j) && !reach(j, i)) c.closed = false;
    }
    out.push_back(std::move(c));
  }
  return out;
}

Rational random_rational(std::mt19937_64& engine, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(engine)) / Rational(den(engine));
}

namespace {

struct Regime {
  const char* name;
  bool non_negative;
  RowSumMode mode;
};

constexpr Regime kRegimes[] = {
    {"any", false, RowSumMode::Any},
    {"pos", false, RowSumMode::ForcePositive},
    {"neg", false, RowSumMode::ForceNegative},
    {"nonneg", true, RowSumMode::Any},
    {"nonneg-pos", true, RowSumMode::ForcePositive},
};

std::size_t closed_count(const Eigen::MatrixXi& pattern) {
  std::size_t count = 0;
  for (const auto& c : brute_force_components(pattern)) count += c.closed ? 1 : 0;
  return count;
}

}  // namespace

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> corpus;
  std::uint64_t stream = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& regime : kRegimes) {
      for (int k = 0; k < options.random_per_cell; ++k) {
        GenConfig config;
        config.n = n;
        config.entry_bound = 5;
        config.non_negative = regime.non_negative;
        config.row_sum = regime.mode;
        config.seed = options.seed;
        config.stream = stream++;
        corpus.push_back({generate(config), "generate n=" + std::to_string(n) + " regime=" + regime.name +
                                                " seed=" + std::to_string(config.seed) +
                                                " stream=" + std::to_string(config.stream)});
      }
    }
  }

  std::mt19937_64 engine(options.seed ^ 0x9e3779b97f4a7c15ULL);
  constexpr double kProbabilities[] = {0.1, 0.25, 0.45};
  for (int n = 1; n <= 7; ++n) {
    // Zero pattern: every row constant, n closed singletons.
    for (int k = 0; k < options.pattern_per_bucket; ++k) {
      GenConfig config;
      config.seed = options.seed;
      config.stream = stream++;
      config.row_sum = kRegimes[k % 3].mode;
      corpus.push_back({generate_with_gap_pattern(Eigen::MatrixXi::Zero(n, n), config),
                        "zero pattern n=" + std::to_string(n) + " stream=" + std::to_string(config.stream)});
    }
    for (std::size_t want = 1; want <= 3 && want <= static_cast<std::size_t>(n); ++want) {
      int made = 0;
      for (int attempt = 0; made < options.pattern_per_bucket && attempt < 100000; ++attempt) {
        const Eigen::MatrixXi pattern = random_gap_pattern(n, kProbabilities[attempt % 3], engine);
        if (closed_count(pattern) != want) continue;
        GenConfig config;
        config.seed = options.seed;
        config.stream = stream++;
        config.non_negative = made % 2 == 1;
        config.row_sum = kRegimes[made % 3].mode;
        if (config.non_negative && config.row_sum == RowSumMode::ForceNegative) config.row_sum = RowSumMode::Any;
        corpus.push_back({generate_with_gap_pattern(pattern, config),
                          "gap pattern n=" + std::to_string(n) + " closed=" + std::to_string(want) +
                              " stream=" + std::to_string(config.stream)});
        ++made;
      }
    }
  }
  return corpus;
}

std::string describe(const CyclicMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= a.n(); ++i) {
    os << (i > 1 ? "; " : "");
    for (int j = 1; j <= a.n(); ++j) os << (j > 1 ? " " : "") << to_string(a(i, j));
  }
  os << "]";
  return os.str();
}

}  // namespace cyclicsign::testing
