#include "nctop/linear.hpp"

#include <random>

#include <catch2/catch_amalgamated.hpp>

using namespace nctop;

namespace {

Matrix from_rows(std::vector<std::vector<unsigned>> rows, std::size_t cols, unsigned p) {
  Matrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % p;
  return m;
}

// Oracle: kernel by exhaustion over all of F_p^cols.
std::vector<Vec> kernel_by_exhaustion(const Matrix& m) {
  std::vector<Vec> out;
  Vec v(m.cols(), 0);
  while (true) {
    if (!is_zero_vec(v) && is_zero_vec(mat_vec(m, v))) out.push_back(v);
    std::size_t k = 0;
    while (k < v.size() && ++v[k] == m.modulus()) v[k++] = 0;
    if (k == v.size()) break;
  }
  return out;
}

bool spans_same(const std::vector<Vec>& basis, const std::vector<Vec>& nonzero_vectors,
                std::size_t ambient, unsigned p) {
  SubspaceForm f = subspace_form(basis, ambient, p);
  long long expect = 1;
  for (std::size_t i = 0; i < f.dim(); ++i) expect *= p;
  if (static_cast<long long>(nonzero_vectors.size()) != expect - 1) return false;
  for (const Vec& v : nonzero_vectors)
    if (!in_span(f, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("Fp arithmetic is exact") {
  Fp a(2, 5), b(4, 5);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 3);
  CHECK((a - b).value() == 3);
  CHECK(a.inv().value() == 3);
  CHECK((b / a).value() == 2);
  CHECK_THROWS_AS(Fp(1, 4), Error);
  CHECK_THROWS_AS(Fp(0, 2).inv(), Error);
}

TEST_CASE("rref on the worked examples") {
  SECTION("zero 2x2 over F_2") {
    Matrix z(2, 2, 2);
    RrefResult r = rref(z);
    CHECK(r.matrix == z);
    CHECK(r.rank == 0);
    CHECK(r.pivot_cols.empty());
  }
  SECTION("identity 2x2 over F_2") {
    Matrix id = Matrix::identity(2, 2);
    RrefResult r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
  }
  SECTION("[[1,1],[1,1]] over F_2 reduces to a single pivot row") {
    Matrix m = from_rows({{1, 1}, {1, 1}}, 2, 2);
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
    CHECK(r.matrix == from_rows({{1, 1}, {0, 0}}, 2, 2));
  }
}

TEST_CASE("kernel_basis on the worked examples") {
  CHECK(kernel_basis(Matrix::identity(2, 2)).empty());
  CHECK(kernel_basis(Matrix(1, 1, 2)) == std::vector<Vec>{{1}});
  Matrix m = from_rows({{1, 1}, {0, 0}}, 2, 2);
  CHECK(kernel_basis(m) == std::vector<Vec>{{1, 1}});
  CHECK(spans_same(kernel_basis(m), kernel_by_exhaustion(m), 2, 2));
}

TEST_CASE("kernel of a matrix with no rows is everything") {
  Matrix m(0, 3, 2);
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == Vec{1, 0, 0});
}

TEST_CASE("quotient_action on the worked examples") {
  SECTION("identity descends to the 1x1 identity") {
    Matrix q = quotient_action(Matrix::identity(2, 2), {{1, 0}});
    REQUIRE(q.rows() == 1);
    REQUIRE(q.cols() == 1);
    CHECK(q(0, 0) == 1);
  }
  SECTION("nilpotent map descends to zero") {
    Matrix m = from_rows({{0, 1}, {0, 0}}, 2, 2);
    Matrix q = quotient_action(m, {{1, 0}});
    REQUIRE(q.rows() == 1);
    CHECK(q(0, 0) == 0);
  }
  SECTION("image escaping the target subspace is rejected") {
    CHECK_THROWS_AS(quotient_action(Matrix::identity(2, 2), {{1, 0}}, {{0, 1}}), NotInvariant);
  }
}

TEST_CASE("rank-nullity, kernel correctness and rref idempotence on random matrices") {
  std::mt19937 rng(20240817);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int iter = 0; iter < 200; ++iter) {
      std::size_t r = rng() % 5 + 1, c = rng() % 5 + 1;
      Matrix m(r, c, p);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % p;

      RrefResult rr = rref(m);
      auto ker = kernel_basis(m);
      CHECK(rr.rank + ker.size() == c);
      for (const Vec& v : ker) CHECK(is_zero_vec(mat_vec(m, v)));
      CHECK(rref(rr.matrix).matrix == rr.matrix);

      // Determinism: a structurally equal copy gives bit-identical output.
      Matrix copy(r, c, p, std::vector<unsigned>(m.entries()));
      CHECK(rref(copy).matrix == rr.matrix);
      CHECK(kernel_basis(copy) == ker);
    }
  }
}

TEST_CASE("solve finds solutions exactly when consistent") {
  Matrix m = from_rows({{1, 1}, {0, 0}}, 2, 2);
  auto x = solve(m, {1, 0});
  REQUIRE(x.has_value());
  CHECK(mat_vec(m, *x) == Vec{1, 0});
  CHECK_FALSE(solve(m, {0, 1}).has_value());
}
