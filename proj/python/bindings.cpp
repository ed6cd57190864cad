#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>

#include "powersq/bench.hpp"
#include "powersq/deflation.hpp"
#include "powersq/errors.hpp"
#include "powersq/oracle.hpp"
#include "powersq/randgen.hpp"
#include "powersq/solvers.hpp"

namespace py = pybind11;
using namespace powersq;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

// Complex dtypes become complex matrices; anything else is cast to float64.
DenseMatrix to_matrix(const py::array& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
    throw RejectedInput("expected a square 2-d array");
  const auto n = static_cast<std::size_t>(arr.shape(0));
  if (arr.dtype().kind() == 'c') {
    const auto c = ComplexArray::ensure(arr);
    std::vector<double> re(n * n);
    std::vector<double> im(n * n);
    const auto* src = c.data();
    for (std::size_t i = 0; i < n * n; ++i) {
      re[i] = src[i].real();
      im[i] = src[i].imag();
    }
    return DenseMatrix::from_parts(n, std::move(re), std::move(im));
  }
  const auto r = RealArray::ensure(arr);
  if (!r) throw RejectedInput("array is not convertible to float64");
  return DenseMatrix::from_real(n, std::vector<double>(r.data(), r.data() + n * n));
}

DenseVector to_vector(const py::array& arr) {
  if (arr.ndim() != 1) throw RejectedInput("expected a 1-d array");
  const auto n = static_cast<std::size_t>(arr.shape(0));
  if (arr.dtype().kind() == 'c') {
    const auto c = ComplexArray::ensure(arr);
    std::vector<double> re(n);
    std::vector<double> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      re[i] = c.data()[i].real();
      im[i] = c.data()[i].imag();
    }
    return DenseVector::from_parts(std::move(re), std::move(im));
  }
  const auto r = RealArray::ensure(arr);
  if (!r) throw RejectedInput("array is not convertible to float64");
  return DenseVector::from_real(std::vector<double>(r.data(), r.data() + n));
}

py::array to_numpy(const DenseMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  if (m.is_real()) {
    RealArray out({n, n});
    std::copy(m.real().begin(), m.real().end(), out.mutable_data());
    return out;
  }
  ComplexArray out({n, n});
  auto* dst = out.mutable_data();
  for (std::size_t i = 0; i < m.real().size(); ++i) dst[i] = {m.real()[i], m.imag()[i]};
  return out;
}

py::array to_numpy(const DenseVector& v) {
  const auto n = static_cast<py::ssize_t>(v.size());
  if (v.is_real()) {
    RealArray out(n);
    std::copy(v.real().begin(), v.real().end(), out.mutable_data());
    return out;
  }
  ComplexArray out(n);
  for (std::size_t i = 0; i < v.size(); ++i) out.mutable_data()[i] = v[i];
  return out;
}

SolverConfig make_config(double tol, std::optional<std::uint64_t> max_iter, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.seed = seed;
  return cfg;
}

py::dict record_dict(const bench::BenchRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["mode"] = std::string(bench::mode_name(r.mode));
  d["algorithm"] = std::string(to_string(r.algorithm));
  d["matrix_index"] = r.matrix_index;
  d["seed"] = r.seed;
  d["wall_time"] = r.wall_time;
  d["iterations"] = r.iterations;
  d["converged"] = r.converged;
  d["eigenvalue"] = r.eigenvalue;
  d["residual"] = r.residual;
  d["oracle_error"] = r.oracle_error ? py::cast(*r.oracle_error) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dominant eigenpairs of self-adjoint matrices by power iteration and repeated squaring.";

  py::register_exception<DegenerateInput>(m, "DegenerateInputError", PyExc_ArithmeticError);
  py::register_exception<NonConvergence>(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception<EmptyData>(m, "EmptyDataError", PyExc_ValueError);
  py::register_exception<NumericOverflow>(m, "NumericOverflowError", PyExc_OverflowError);

  py::class_<EigenEstimate>(m, "EigenEstimate")
      .def_readonly("value", &EigenEstimate::value)
      .def_property_readonly("vector", [](const EigenEstimate& e) { return to_numpy(e.vector); })
      .def_readonly("iterations", &EigenEstimate::iterations)
      .def_readonly("converged", &EigenEstimate::converged)
      .def_readonly("residual", &EigenEstimate::residual)
      .def("__repr__", [](const EigenEstimate& e) {
        return "EigenEstimate(value=" + std::to_string(e.value.real()) +
               ", iterations=" + std::to_string(e.iterations) +
               ", converged=" + (e.converged ? "True" : "False") + ")";
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("values",
                             [](const Spectrum& s) {
                               std::vector<double> v;
                               for (const auto& p : s.pairs) v.push_back(p.value);
                               return v;
                             })
      .def_property_readonly("vectors",
                             [](const Spectrum& s) {
                               py::list out;
                               for (const auto& p : s.pairs) out.append(to_numpy(p.vector));
                               return out;
                             })
      .def_property_readonly("iterations",
                             [](const Spectrum& s) {
                               std::vector<std::uint64_t> v;
                               for (const auto& p : s.pairs) v.push_back(p.iterations);
                               return v;
                             })
      .def_readonly("failed_round", &Spectrum::failed_round)
      .def_property_readonly("complete", &Spectrum::complete)
      .def("max_pairwise_overlap", &max_pairwise_overlap)
      .def("__len__", &Spectrum::size);

  m.def(
      "power_iteration",
      [](const py::array& a, double tol, std::optional<std::uint64_t> max_iter, std::uint64_t seed,
         std::optional<py::array> start) {
        const DenseMatrix mat = to_matrix(a);
        const SolverConfig cfg = make_config(tol, max_iter, seed);
        const std::optional<DenseVector> x0 = start ? std::optional(to_vector(*start)) : std::nullopt;
        py::gil_scoped_release release;
        return x0 ? power_iteration(mat, cfg, *x0) : power_iteration(mat, cfg);
      },
      py::arg("a"), py::arg("tol") = 1e-10, py::arg("max_iter") = py::none(), py::arg("seed") = 0,
      py::arg("start") = py::none());

  m.def(
      "power_iteration_squared",
      [](const py::array& a, double tol, std::optional<std::uint64_t> max_iter, std::uint64_t seed) {
        const DenseMatrix mat = to_matrix(a);
        const SolverConfig cfg = make_config(tol, max_iter, seed);
        py::gil_scoped_release release;
        return power_iteration_squared(mat, cfg);
      },
      py::arg("a"), py::arg("tol") = 1e-10, py::arg("max_iter") = py::none(), py::arg("seed") = 0);

  m.def(
      "matrix_power_squaring",
      [](const py::array& a, unsigned j) { return to_numpy(matrix_power_squaring(to_matrix(a), j)); },
      py::arg("a"), py::arg("j"), "A^(2^j) by j successive squarings.");

  m.def(
      "top_k_eigenpairs",
      [](const py::array& a, std::size_t k, const std::string& method, bool reorthogonalize, double tol,
         std::optional<std::uint64_t> max_iter, std::uint64_t seed) {
        const DenseMatrix mat = to_matrix(a);
        TopKOptions opts;
        opts.method = parse_algorithm(method);
        opts.reorthogonalize = reorthogonalize;
        const SolverConfig cfg = make_config(tol, max_iter, seed);
        py::gil_scoped_release release;
        return top_k_eigenpairs(mat, k, cfg, opts);
      },
      py::arg("a"), py::arg("k"), py::arg("method") = "squared", py::arg("reorthogonalize") = false,
      py::arg("tol") = 1e-10, py::arg("max_iter") = py::none(), py::arg("seed") = 0);

  m.def(
      "jacobi_eigen",
      [](const py::array& a) {
        const auto s = oracle::jacobi_eigen(to_matrix(a));
        py::list vecs;
        for (const auto& v : s.vectors) vecs.append(to_numpy(v));
        return py::make_tuple(s.values, vecs);
      },
      py::arg("a"), "Reference eigendecomposition, sorted by descending modulus.");

  m.def(
      "random_matrix",
      [](std::size_t n, const std::string& mode, std::uint64_t seed) {
        return to_numpy(random_matrix({n, bench::parse_mode(mode), seed}));
      },
      py::arg("n"), py::arg("mode") = "real", py::arg("seed") = 0);

  m.def(
      "random_unit_vector",
      [](std::size_t n, std::uint64_t seed) { return to_numpy(random_unit_vector(n, seed)); },
      py::arg("n"), py::arg("seed") = 0);

  m.def(
      "run_suite",
      [](const std::vector<std::pair<std::size_t, std::size_t>>& sizes, const std::string& mode,
         const std::vector<std::string>& algorithms, double tol, std::optional<std::uint64_t> max_iter,
         std::uint64_t base_seed, unsigned workers, std::size_t oracle_cutoff) {
        bench::SuiteOptions opts;
        for (const auto& [n, count] : sizes) opts.sizes.push_back({n, count});
        opts.mode = bench::parse_mode(mode);
        opts.algorithms.clear();
        for (const auto& a : algorithms) opts.algorithms.push_back(parse_algorithm(a));
        opts.cfg = make_config(tol, max_iter, 0);
        opts.base_seed = base_seed;
        opts.workers = workers;
        opts.oracle_cutoff = oracle_cutoff;
        std::vector<bench::BenchRecord> records;
        {
          py::gil_scoped_release release;
          records = bench::run_suite(opts);
        }
        py::list out;
        for (const auto& r : records) out.append(record_dict(r));
        return out;
      },
      py::arg("sizes"), py::arg("mode") = "real",
      py::arg("algorithms") = std::vector<std::string>{"power", "squared"}, py::arg("tol") = 1e-10,
      py::arg("max_iter") = py::none(), py::arg("base_seed") = 0, py::arg("workers") = 1,
      py::arg("oracle_cutoff") = 200,
      "Benchmark records as dicts with the CSV column names as keys.");
}
