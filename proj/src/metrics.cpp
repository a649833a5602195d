#include "abec/metrics.hpp"

#include <cmath>
#include <sstream>

namespace abec {

double normalized_bandwidth(const RepairReport& report, const CodeParams& p) {
  return double(report.reads.size()) / p.k;
}

double lambda_upper_bound(const CodeParams& p) {
  const double m = p.k - p.tau - 1;
  return (p.k + p.tau + m * m) / p.k;
}

ComplexityEstimate repair_complexity(const CodeParams& p) {
  const long nu = p.field.width;
  const long k = p.k, tau = p.tau;
  ComplexityEstimate c;
  c.label = "C_R";
  c.bit_additions = (k - 1) * nu + tau * k * nu + (k - tau - 2) * (k - tau - 2) * nu;
  c.bit_mults = k * nu * nu + tau * k * nu * nu;
  return c;
}

EncodingComplexity encoding_complexity(const CodeParams& p) {
  const long nu = p.field.width;
  const long k = p.k, tau = p.tau;
  EncodingComplexity e;
  e.class_a.label = "C_A";
  e.class_a.bit_mults = (p.n_a - k) * k * nu * nu;
  e.class_a.bit_additions = (p.n_a - k) * (k - 1) * nu + tau * nu;
  e.class_b.label = "C_B";
  for (long i = 1; i <= p.class_b_count(); ++i)
    e.class_b.bit_additions += (k - tau - 1 - i) * nu;
  return e;
}

ComplexityEstimate EncodingComplexity::total() const {
  ComplexityEstimate t;
  t.label = "C_E";
  t.bit_additions = class_a.bit_additions + class_b.bit_additions;
  t.bit_mults = class_a.bit_mults + class_b.bit_mults;
  return t;
}

long measured_bit_ops(const OpCount& ops, unsigned nu) {
  return ops.adds * long(nu) + ops.mults * long(nu) * nu;
}

namespace {

long require(const std::optional<long>& v, const char* symbol) {
  if (!v) throw MissingParameter(std::string("missing parameter: ") + symbol);
  return *v;
}

}  // namespace

BaselineRow baseline_row(const std::string& scheme, const CodeParams& p,
                         const BaselineInputs& in) {
  const double n = p.n, k = p.k, nu = p.field.width;
  BaselineRow row;
  row.scheme = scheme;
  if (scheme == "MDS") {
    row.beta = 1;
    row.fault_tolerance = n - k;
    row.lambda = k;
    row.repair_complexity = (k - 1) * nu + k * nu * nu;
    row.encoding_complexity = (n - k) * ((k - 1) * nu) + k * nu * nu;
  } else if (scheme == "LRC") {
    const double r = double(require(in.lrc_r, "r"));
    const double local = n - k - r;
    if (local <= 0) throw ParamError("LRC requires n - k - r > 0");
    row.beta = 1;
    row.fault_tolerance = r + 1;
    row.lambda = k / local;
    row.repair_complexity = (std::ceil(k / local) - 1) * nu;
    row.encoding_complexity = r * ((k - 1) * nu + k * nu * nu) +
                              local * ((std::ceil(k / local) - 1) * nu);
  } else if (scheme == "MDR") {
    row.beta = std::pow(2.0, k);
    row.fault_tolerance = 2;
    row.lambda = (k + 1) / 2.0;
    row.repair_complexity = (k - 1) * nu;
    row.encoding_complexity = (k - 1) * nu;
    row.note = "defined for n = k + 2";
  } else if (scheme == "Zigzag") {
    row.beta = std::pow(n - k, k - 1);
    row.fault_tolerance = n - k;
    row.lambda = (n - 1) / (n - k);
    row.repair_complexity = (k - 1) * nu + k * nu * nu;
    row.encoding_complexity = (n - k) * ((k - 1) * nu) + k * nu * nu;
  } else if (scheme == "Piggyback") {
    const double t = double(require(in.pb_t, "t"));
    const double t_r = double(require(in.pb_t_r, "t_r"));
    const double ell = double(require(in.pb_ell, "ell"));
    row.beta = 2;
    row.fault_tolerance = 1;
    row.lambda = ((k - t_r) * (k + t) + t_r * (k + t_r + ell - 2)) / (2 * k);
    row.note = "repair/encoding complexity not specified";
  } else if (scheme == "Proposed") {
    row.beta = k;
    row.fault_tolerance = p.n - p.n_b() - p.tau + 1;
    row.lambda = lambda_upper_bound(p);
    row.repair_complexity = double(repair_complexity(p).total()) / k;
    row.encoding_complexity = double(encoding_complexity(p).total().total());
    row.note = "fault tolerance is a lower bound; lambda an upper bound";
  } else {
    throw ParamError("unknown scheme: " + scheme);
  }
  return row;
}

std::vector<BaselineRow> baseline_table(const CodeParams& p,
                                        const BaselineInputs& in) {
  std::vector<BaselineRow> rows;
  for (const char* s : {"MDS", "LRC", "MDR", "Zigzag", "Piggyback", "Proposed"})
    rows.push_back(baseline_row(s, p, in));
  return rows;
}

std::string metrics_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "scheme,n,k,f,lambda,repair_complexity,encoding_complexity\n";
  const auto cell = [&](const std::optional<double>& v) {
    if (!v)
      os << "not specified";
    else
      os << *v;
  };
  for (const CsvRow& r : rows) {
    os << r.scheme << ',' << r.n << ',' << r.k << ',';
    cell(r.f);
    os << ',';
    cell(r.lambda);
    os << ',';
    cell(r.repair_complexity);
    os << ',';
    cell(r.encoding_complexity);
    os << '\n';
  }
  return os.str();
}

}  // namespace abec
