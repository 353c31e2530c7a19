// Exact dense linear algebra: determinants, rank, solving, span
// coordinates, kernels, and exact square roots.

#include <doctest.h>

#include "coxeter/linalg.hpp"

using namespace coxeter;

namespace {

Vec v(std::initializer_list<long long> xs) {
    Vec r;
    for (long long x : xs) r.push_back(Rat(x));
    return r;
}

} // namespace

TEST_CASE("vector operations") {
    Vec a = v({1, 2, 3}), b = v({4, -1, 0});
    CHECK(dot(a, b) == Rat(2));
    CHECK(add(a, b) == v({5, 1, 3}));
    CHECK(sub(a, b) == v({-3, 3, 3}));
    CHECK(scale(a, Rat(1, 2)) == Vec{Rat(1, 2), Rat(1), Rat(3, 2)});
    CHECK(neg(a) == v({-1, -2, -3}));
    CHECK(is_zero_vec(zero_vec(4)));
    CHECK(!is_zero_vec(a));
}

TEST_CASE("determinant") {
    Mat m = {v({2, 1}), v({1, 2})};
    CHECK(det(m) == Rat(3));
    Mat s = {v({1, 2}), v({2, 4})};
    CHECK(det(s) == Rat(0));
    Mat t = {v({0, 1, 0}), v({1, 0, 0}), v({0, 0, 5})};
    CHECK(det(t) == Rat(-5));
}

TEST_CASE("rank and row reduction") {
    Mat m = {v({1, 2, 3}), v({2, 4, 6}), v({1, 0, 1})};
    CHECK(rank_of(m) == 2);
    Mat id = {v({1, 0}), v({0, 1})};
    CHECK(rank_of(id) == 2);
    CHECK(rank_of(Mat{v({0, 0})}) == 0);
}

TEST_CASE("solve_square") {
    Mat a = {v({2, 1}), v({1, 3})};
    auto x = solve_square(a, v({5, 10}));
    REQUIRE(x);
    CHECK(*x == Vec{Rat(1), Rat(3)});
    Mat sing = {v({1, 2}), v({2, 4})};
    CHECK(!solve_square(sing, v({1, 1})));
}

TEST_CASE("coords_in_basis") {
    std::vector<Vec> basis = {v({1, 1, 0}), v({0, 1, 1})};
    auto c = coords_in_basis(basis, v({2, 3, 1}));
    REQUIRE(c);
    CHECK(*c == Vec{Rat(2), Rat(1)});
    CHECK(!coords_in_basis(basis, v({1, 0, 1})));
    auto empty = coords_in_basis({}, zero_vec(3));
    REQUIRE(empty);
    CHECK(empty->empty());
    CHECK(!coords_in_basis({}, v({1, 0, 0})));
}

TEST_CASE("kernel_basis spans the nullspace") {
    Mat m = {v({1, 1, 0}), v({0, 1, 1})};
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero_vec(matvec(m, k[0])));
    Mat full = {v({1, 0}), v({0, 1})};
    CHECK(kernel_basis(full).empty());
}

TEST_CASE("gram matrix") {
    std::vector<Vec> roots = {v({1, -1, 0}), v({0, 1, -1})};
    Mat g = gram(roots);
    CHECK(g[0][0] == Rat(2));
    CHECK(g[0][1] == Rat(-1));
    CHECK(g[1][1] == Rat(2));
    CHECK(det(g) == Rat(3));
}

TEST_CASE("matmul") {
    Mat a = {v({1, 2}), v({3, 4})};
    Mat b = {v({0, 1}), v({1, 0})};
    Mat ab = matmul(a, b);
    CHECK(ab[0] == v({2, 1}));
    CHECK(ab[1] == v({4, 3}));
}

TEST_CASE("exact square roots") {
    CHECK(isqrt_exact(0) == 0);
    CHECK(isqrt_exact(1) == 1);
    CHECK(isqrt_exact(144) == 12);
    CHECK(!isqrt_exact(2));
    CHECK(!isqrt_exact(-4));
    CHECK(isqrt_exact(4611686014132420609LL) == 2147483647LL);
    CHECK(sqrt_exact(Rat(9, 16)) == Rat(3, 4));
    CHECK(sqrt_exact(Rat(1, 432)) == std::nullopt);
    CHECK(sqrt_exact(Rat(0)) == Rat(0));
}
