#include "oracles.hpp"

#include <functional>

namespace brace_forge::oracle {

Dense dense(const LinMap &f) {
  Dense d{f.rows(), f.cols(), std::vector<mpq_class>(f.rows() * f.cols())};
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      d.at(r, c) = f.at(r, c).value();
  return d;
}

Dense multiply(const Dense &f, const Dense &g) {
  Dense out{f.rows, g.cols, std::vector<mpq_class>(f.rows * g.cols)};
  for (std::size_t i = 0; i < f.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j)
      for (std::size_t k = 0; k < f.cols; ++k)
        out.at(i, j) += f.at(i, k) * g.at(k, j);
  return out;
}

Dense kron(const Dense &f, const Dense &g) {
  Dense out{f.rows * g.rows, f.cols * g.cols,
            std::vector<mpq_class>(f.rows * g.rows * f.cols * g.cols)};
  for (std::size_t i = 0; i < f.rows; ++i)
    for (std::size_t j = 0; j < f.cols; ++j)
      for (std::size_t k = 0; k < g.rows; ++k)
        for (std::size_t l = 0; l < g.cols; ++l)
          out.at(i * g.rows + k, j * g.cols + l) = f.at(i, j) * g.at(k, l);
  return out;
}

Dense swap(std::size_t m, std::size_t n) {
  Dense out{m * n, m * n, std::vector<mpq_class>(m * n * m * n)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.at(j * m + i, i * n + j) = 1;
  return out;
}

Dense modulo(Dense d, unsigned long p) {
  const mpz_class q(p);
  for (auto &x : d.a) {
    mpz_class num = x.get_num(), den = x.get_den(), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
    mpz_class r = num * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
    x = r;
  }
  return d;
}

bool same(const Dense &f, const Dense &g) {
  return f.rows == g.rows && f.cols == g.cols && f.a == g.a;
}

std::vector<Table> naive_groups(std::size_t n) {
  std::vector<Table> out;
  Table t(n, std::vector<std::size_t>(n, n));
  for (std::size_t i = 0; i < n; ++i)
    t[0][i] = t[i][0] = i;
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            if (t[t[a][b]][c] != t[a][t[b][c]])
              return;
      out.push_back(t);
      return;
    }
    const std::size_t r = cell / n, c = cell % n;
    if (r == 0 || c == 0) {
      fill(cell + 1);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      bool used = false;
      for (std::size_t k = 0; k < c && !used; ++k)
        used = t[r][k] == v;
      for (std::size_t k = 0; k < r && !used; ++k)
        used = t[k][c] == v;
      if (used)
        continue;
      t[r][c] = v;
      fill(cell + 1);
    }
    t[r][c] = n;
  };
  if (n > 0)
    fill(0);
  return out;
}

bool naive_skew_law(const Table &dot, const Table &circ) {
  const std::size_t n = dot.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (dot[a][b] == 0)
        inv[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (circ[a][dot[b][c]] != dot[dot[circ[a][b]][inv[a]]][circ[a][c]])
          return false;
  return true;
}

LinMap random_map(std::mt19937 &rng, Field field, std::size_t domain, std::size_t codomain) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3), zero(0, 2);
  std::vector<Scalar> entries;
  entries.reserve(domain * codomain);
  for (std::size_t i = 0; i < domain * codomain; ++i) {
    if (zero(rng) == 0) {
      entries.push_back(Scalar::zero(field));
      continue;
    }
    const long d = den(rng);
    Scalar s(field, num(rng));
    if (field.characteristic() == 0 || d % static_cast<long>(field.characteristic()) != 0)
      s /= Scalar(field, d);
    entries.push_back(s);
  }
  return LinMap(field, Space(domain), Space(codomain), std::move(entries));
}

std::size_t naive_skew_brace_count(const Table &dot) {
  std::size_t count = 0;
  for (const auto &circ : naive_groups(dot.size()))
    count += naive_skew_law(dot, circ);
  return count;
}

} // namespace brace_forge::oracle
