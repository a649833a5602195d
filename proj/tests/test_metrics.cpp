#include <doctest.h>

#include <random>

#include "abec/codec.hpp"
#include "abec/metrics.hpp"
#include "abec/repair.hpp"

using namespace abec;

namespace {
const CodeParams kTen = CodeParams::make(10, 5, 7, 1);
}

TEST_CASE("normalized bandwidth and its upper bound") {
  RepairReport report;
  report.reads.resize(9);
  CHECK(normalized_bandwidth(report, kTen) == doctest::Approx(1.8));
  CHECK(lambda_upper_bound(kTen) == doctest::Approx(3.0));
  CHECK(lambda_upper_bound(CodeParams::make(10, 5, 8, 2)) ==
        doctest::Approx(2.2));
}

TEST_CASE("closed-form repair complexity") {
  const ComplexityEstimate c = repair_complexity(kTen);
  // (k-1)nu + tau k nu + (k-tau-2)^2 nu = 32 + 40 + 32
  CHECK(c.bit_additions == 104);
  // k nu^2 + tau k nu^2 = 320 + 320
  CHECK(c.bit_mults == 640);
  CHECK(c.total() == 744);
}

TEST_CASE("closed-form encoding complexity") {
  const EncodingComplexity e = encoding_complexity(kTen);
  CHECK(e.class_a.bit_mults == 640);     // (n_a-k) k nu^2
  CHECK(e.class_a.bit_additions == 72);  // (n_a-k)(k-1)nu + tau nu
  CHECK(e.class_b.bit_mults == 0);
  CHECK(e.class_b.bit_additions == 24);  // (2+1+0) nu
  CHECK(e.total().total() == 736);
}

TEST_CASE("measured repair operations stay within the closed form") {
  const Codec codec = Codec::build(kTen);
  std::mt19937 rng(41);
  std::vector<Symbol> data(25);
  for (Symbol& d : data) d = Symbol(rng() % 256);
  const CodeArray arr = codec.encode(data);
  for (int j = 0; j < 5; ++j) {
    const auto [col, report] = repair_data_node(codec, arr, j);
    CHECK(measured_bit_ops(report.ops, 8) <= repair_complexity(kTen).total());
  }
}

TEST_CASE("measured encoding operation counts are exact") {
  const Codec codec = Codec::build(kTen);
  std::mt19937 rng(43);
  std::vector<Symbol> data(25);
  for (Symbol& d : data) d = Symbol(rng() % 256);
  OpCount ops;
  codec.encode(data, &ops);
  // Class A: (n_a-k) k scaled terms per row; adds (n_a-k)(k-1) + tau per row.
  // Class B: 2 + 1 + 0 additions per row.
  CHECK(ops.mults == 50);
  CHECK(ops.adds == 45 + 15);
}

TEST_CASE("baseline rows") {
  const BaselineInputs none;
  const BaselineRow mds = baseline_row("MDS", kTen, none);
  CHECK(mds.lambda == doctest::Approx(5.0));
  CHECK(mds.fault_tolerance == doctest::Approx(5.0));

  const BaselineRow zz = baseline_row("Zigzag", kTen, none);
  CHECK(zz.lambda == doctest::Approx(9.0 / 5.0));
  CHECK(zz.fault_tolerance == doctest::Approx(5.0));

  const BaselineRow mdr = baseline_row("MDR", kTen, none);
  CHECK(mdr.lambda == doctest::Approx(3.0));
  CHECK(mdr.beta == doctest::Approx(32.0));

  const BaselineRow ours = baseline_row("Proposed", kTen, none);
  CHECK(ours.fault_tolerance == doctest::Approx(2.0));
  CHECK(ours.lambda == doctest::Approx(3.0));
  CHECK(ours.repair_complexity == doctest::Approx(744.0 / 5.0));
  CHECK(ours.encoding_complexity == doctest::Approx(736.0));

  CHECK_THROWS_AS(baseline_row("LRC", kTen, none), MissingParameter);
  CHECK_THROWS_AS(baseline_row("Piggyback", kTen, none), MissingParameter);
  CHECK_THROWS_AS(baseline_table(kTen, none), MissingParameter);
  CHECK_THROWS_AS(baseline_row("Hamming", kTen, none), ParamError);

  BaselineInputs in;
  in.lrc_r = 2;
  const BaselineRow lrc = baseline_row("LRC", kTen, in);
  CHECK(lrc.lambda == doctest::Approx(5.0 / 3.0));
  CHECK(lrc.fault_tolerance == doctest::Approx(3.0));

  in.pb_t = 2;
  in.pb_t_r = 1;
  in.pb_ell = 2;
  const BaselineRow pb = baseline_row("Piggyback", kTen, in);
  CHECK(pb.beta == doctest::Approx(2.0));
  CHECK(!pb.repair_complexity.has_value());
  CHECK(baseline_table(kTen, in).size() == 6);
}

TEST_CASE("csv rendering") {
  CsvRow r;
  r.scheme = "MDS";
  r.n = 10;
  r.k = 5;
  r.f = 5;
  r.lambda = 5;
  const std::string csv = metrics_csv({r});
  CHECK(csv ==
        "scheme,n,k,f,lambda,repair_complexity,encoding_complexity\n"
        "MDS,10,5,5,5,not specified,not specified\n");
}
