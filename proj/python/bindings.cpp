#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hankelcat/analysis.hpp"
#include "hankelcat/conjectures.hpp"
#include "hankelcat/report_io.hpp"

namespace py = pybind11;
using namespace hankelcat;

// Big integers and rationals cross the boundary as decimal / "num/den"
// strings; the Python package converts them to int and Fraction.

namespace {

std::vector<std::string> strings(const std::vector<Int>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

SeqSpec spec_of(const std::string& family, int k) { return SeqSpec(parse_family(family), k); }

IntMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Int(rows[i][j]);
  }
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hankel determinants of Catalan convolution powers";

  m.def("seq_prefix", [](const std::string& family, int k, std::int64_t count) {
    return strings(seq_prefix(spec_of(family, k), count));
  });
  m.def("conv_power_oracle", [](int k, std::int64_t count) { return strings(conv_power_oracle(k, count)); });
  m.def("det_sequence",
        [](const std::string& family, int k, std::int64_t shift, std::int64_t count, unsigned jobs) {
          py::gil_scoped_release release;
          return strings(det_sequence(spec_of(family, k), shift, count, jobs));
        },
        py::arg("family"), py::arg("k"), py::arg("m"), py::arg("count"), py::arg("jobs") = 0);
  m.def("bareiss_det", [](const std::vector<std::vector<std::string>>& rows) {
    return bareiss_det(matrix_of(rows)).get_str();
  });
  m.def("cofactor_det", [](const std::vector<std::vector<std::string>>& rows) {
    return cofactor_det_oracle(matrix_of(rows)).get_str();
  });
  m.def("bernoulli", [](std::int64_t idx) { return to_fraction_string(bernoulli(idx)); });
  m.def("product_formula_pm", [](std::int64_t mm, std::int64_t n) {
    return to_fraction_string(product_formula_pm(mm, n));
  });
  m.def("checker_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : checker_registry()) ids.push_back(info.id);
    return ids;
  });
  m.def("run_checker",
        [](const std::string& id, const std::string& params, const std::string& budget) {
          Json p = params.empty() ? Json::object() : Json::parse(params);
          auto b = parse_budget(budget);
          py::gil_scoped_release release;
          return report_to_json(run_checker(id, DetTable::shared(), p, b)).dump();
        },
        py::arg("id"), py::arg("params") = "", py::arg("budget") = "default");
  m.def("extract_gf", [](const std::string& parity, int k, std::int64_t shift) {
    auto ex = extract_gf(DetTable::shared(), parse_parity(parity), k, shift);
    Json j = {{"numerator", poly_json(ex.numerator)},
              {"degree", ex.degree},
              {"remainder_clean", ex.remainder_clean},
              {"class", ex.pal_class ? to_string(*ex.pal_class) : "undefined"}};
    return j.dump();
  });
}
