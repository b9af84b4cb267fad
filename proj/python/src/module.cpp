#include "lambdag/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lambdag;

namespace {

// Everything crosses the boundary as JSON text; the package decodes it.
std::string dumps(const Json& j) { return j.dump(); }

std::string cases(const std::vector<CaseReport>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(case_to_json(r));
  return a.dump();
}

const LieAlgebra& alg(const std::string& type, int rank) {
  if (type.size() != 1) throw ConfigError("type must be a single letter A-G");
  try {
    return algebra_for(type[0], rank);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SimpleSet zero_based(const std::vector<int>& X) {
  SimpleSet out;
  for (int i : X) out.push_back(i - 1);
  return out;
}

VerifyLimits limits(std::uint64_t max_ambient) {
  VerifyLimits lim;
  lim.max_ambient = max_ambient;
  return lim;
}

} // namespace

PYBIND11_MODULE(_lambdag, m) {
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("root_system", [](const std::string& type, int rank) {
    if (type.size() != 1) throw ConfigError("type must be a single letter A-G");
    try {
      return dumps(root_system_json(build_root_system(type[0], rank)));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  });
  m.def(
      "verify_theorem",
      [](const std::string& type, int rank, const std::vector<int>& X, int k, std::uint64_t max_ambient) {
        const LieAlgebra& L = alg(type, rank);
        py::gil_scoped_release nogil;
        return dumps(case_to_json(verify_theorem(L, zero_based(X), k, limits(max_ambient))));
      },
      py::arg("type"), py::arg("rank"), py::arg("X"), py::arg("k"), py::arg("max_ambient") = kDefaultAmbient);
  m.def(
      "verify_orthogonality",
      [](const std::string& type, int rank, const std::vector<int>& X, int k, const std::string& grading,
         std::uint64_t max_ambient) {
        const LieAlgebra& L = alg(type, rank);
        py::gil_scoped_release nogil;
        return dumps(case_to_json(verify_orthogonality(L, zero_based(X), k, grading, limits(max_ambient))));
      },
      py::arg("type"), py::arg("rank"), py::arg("X"), py::arg("k"), py::arg("grading"),
      py::arg("max_ambient") = kDefaultAmbient);
  m.def(
      "verify_invariants",
      [](const std::string& type, int rank, int beta, int k, std::uint64_t max_ambient) {
        const LieAlgebra& L = alg(type, rank);
        py::gil_scoped_release nogil;
        auto rs = verify_invariant_subspaces(L, beta - 1, k, limits(max_ambient));
        rs.push_back(verify_pau2(L, beta - 1, k, limits(max_ambient)));
        return cases(rs);
      },
      py::arg("type"), py::arg("rank"), py::arg("beta"), py::arg("k"), py::arg("max_ambient") = kDefaultAmbient);
  m.def(
      "verify_appendix",
      [](const std::string& types, int max_rank) {
        py::gil_scoped_release nogil;
        return cases(verify_appendix(types, max_rank));
      },
      py::arg("types") = "ABCDEFG", py::arg("max_rank") = 12);
  m.def(
      "run_suite",
      [](bool deep, int jobs) {
        py::gil_scoped_release nogil;
        SuiteOptions opt{deep, jobs};
        return dumps(report_json(suite_config(opt), run_suite(opt)));
      },
      py::arg("deep") = false, py::arg("jobs") = 1);
  m.attr("report_version") = kReportVersion;
}
