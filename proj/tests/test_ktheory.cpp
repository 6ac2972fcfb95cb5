#include "magic4/ktheory.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace magic4;

#ifndef MAGIC4_FIXTURES_DIR
#define MAGIC4_FIXTURES_DIR "fixtures"
#endif

namespace {
const KTables& tables() {
  static const KTables t = load_ktables(MAGIC4_FIXTURES_DIR);
  return t;
}
const DeltaData& data() {
  static const DeltaData d = delta_data_from_fixtures(tables());
  return d;
}
}  // namespace

TEST_CASE("exponential map regenerates the shipped table") {
  CHECK(check_delta_table(tables()).pass);
  const KBasis& b = kbasis();
  IntMatrix d = generate_delta();
  // column of the identity permutation: +1 at the three diagonal caps
  int c0 = b.q_index(Perm(std::vector<int>{1, 2, 3, 4}));
  for (int i = 2; i <= 4; ++i) CHECK(d(b.v_index(i, i, 0), c0) == 1);
  Int nz = 0;
  for (int r = 0; r < 18; ++r) nz += abs_int(d(r, c0));
  CHECK(nz == 3);
  // the odd column (1243): -1 at caps (2,2), (4,3), (3,4)
  int c1 = b.q_index(Perm(std::vector<int>{1, 2, 4, 3}));
  CHECK(d(b.v_index(2, 2, 0), c1) == -1);
  CHECK(d(b.v_index(4, 3, 0), c1) == -1);
  CHECK(d(b.v_index(3, 4, 0), c1) == -1);
}

TEST_CASE("projection classes regenerate the shipped table") {
  CHECK(check_p_class_table(tables()).pass);
  const KBasis& b = kbasis();
  IntMatrix pc = generate_p_classes();
  for (int s = 0; s < 24; ++s) CHECK(pc(s, 0) == (b.q[s](1) == 1 ? 1 : 0));
}

TEST_CASE("kernel and cokernel of the exponential map") {
  CHECK(check_kernel_rank(data()).pass);
  CHECK(check_cokernel(data()).pass);
  CHECK(kernel_basis(data().delta).cols() == 10);
  auto co = cokernel_invariants(data().delta);
  CHECK(co.free_rank == 4);
  CHECK(co.torsion == std::vector<Int>{2});
  // delta kills the first class column
  auto img = data().delta.apply(data().p_classes.column(0));
  for (const Int& x : img) CHECK(x == 0);
}

TEST_CASE("projection classes generate the kernel") {
  CHECK(check_p_class_lattice(data()).pass);
}

TEST_CASE("eta: surjectivity and kernel = image") {
  CHECK(check_eta(data()).pass);
}

TEST_CASE("positive cone at the default height") {
  ConeExpresser expr(data().p_classes);
  // a single class expresses as itself
  std::array<long, 24> x{};
  for (int r = 0; r < 24; ++r) x[r] = data().p_classes(r, 4 * 1 + 2).convert_to<long>();
  auto e = expr.express(x);
  REQUIRE(e.has_value());
  long total = 0;
  for (long v : *e) total += v;
  CHECK(total == 1);
  // the all-ones vector is a row sum of classes
  std::array<long, 24> ones{};
  ones.fill(1);
  auto e2 = expr.express(ones);
  REQUIRE(e2.has_value());
  for (long v : *e2) CHECK(v >= 0);
  CHECK(check_positive_cone(data(), 6).pass);
}

TEST_CASE("3x3 sign lemma") {
  CHECK(check_three_by_three().pass);
}
