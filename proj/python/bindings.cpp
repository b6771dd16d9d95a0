#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "qpi/periods.hpp"
#include "qpi/quasiperiod.hpp"
#include "qpi/query.hpp"
#include "qpi/serialize.hpp"

namespace py = pybind11;
using namespace qpi;

namespace {

py::list progressions(const std::vector<ArithProg>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(py::make_tuple(p.start, p.diff, p.count));
  return out;
}

// Python-side wrapper: the index is immutable, so queries release the GIL.
class PyIndex {
public:
  explicit PyIndex(std::unique_ptr<Index> idx) : idx_(std::move(idx)) {}

  Pos n() const { return idx_->n(); }
  Pos min_cover(Pos i, Pos j) const {
    py::gil_scoped_release nogil;
    return qpi::min_cover(*idx_, {i, j});
  }
  py::list all_covers(Pos i, Pos j) const {
    CoverAnswer a;
    {
      py::gil_scoped_release nogil;
      a = qpi::all_covers(*idx_, {i, j});
    }
    return progressions(a.progressions);
  }
  bool is_cover(Pos i, Pos j, Pos l) const {
    py::gil_scoped_release nogil;
    return qpi::is_cover(*idx_, l, {i, j});
  }
  Pos covered_pref(Pos i, Pos j, Pos l) const {
    py::gil_scoped_release nogil;
    return qpi::covered_pref(*idx_, l, {i, j});
  }
  py::list borders(Pos i, Pos j) const { return progressions(qpi::borders(idx_->ipm(), {i, j}).progressions); }
  py::list periods(Pos i, Pos j) const { return progressions(qpi::periods(idx_->ipm(), {i, j})); }
  py::list runs() const {
    py::list out;
    for (const auto& r : idx_->runs().runs()) out.append(py::make_tuple(r.a, r.b, r.p));
    return out;
  }
  Pos lcp(Pos i, Pos j) const { return idx_->text_index().lcp(i, j); }
  Pos lcs(Pos i, Pos j) const { return idx_->text_index().lcs(i, j); }
  std::string query(const std::string& line, bool json) const { return answer_query(*idx_, line, json); }
  std::vector<std::string> batch(const std::vector<std::string>& lines, bool json, unsigned threads) const {
    py::gil_scoped_release nogil;
    return answer_batch(*idx_, lines, json, threads);
  }
  void save(const std::string& path) const { save_index(*idx_, path); }

private:
  std::unique_ptr<Index> idx_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Internal quasiperiodicity queries over a fixed text";

  static py::exception<Error> error(m, "QpiError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PyIndex>(m, "Index")
      .def(py::init([](const std::string& text) {
             std::unique_ptr<Index> idx;
             {
               py::gil_scoped_release nogil;
               idx = std::make_unique<Index>(text);
             }
             return PyIndex(std::move(idx));
           }),
           py::arg("text"))
      .def_static("load", [](const std::string& path) { return PyIndex(load_index(path)); }, py::arg("path"))
      .def("save", &PyIndex::save, py::arg("path"))
      .def_property_readonly("n", &PyIndex::n)
      .def("__len__", &PyIndex::n)
      .def("min_cover", &PyIndex::min_cover, py::arg("i"), py::arg("j"))
      .def("all_covers", &PyIndex::all_covers, py::arg("i"), py::arg("j"),
           "Cover lengths as (start, diff, count) progressions")
      .def("is_cover", &PyIndex::is_cover, py::arg("i"), py::arg("j"), py::arg("l"))
      .def("covered_pref", &PyIndex::covered_pref, py::arg("i"), py::arg("j"), py::arg("l"))
      .def("borders", &PyIndex::borders, py::arg("i"), py::arg("j"))
      .def("periods", &PyIndex::periods, py::arg("i"), py::arg("j"))
      .def("runs", &PyIndex::runs, "Runs as (a, b, p) triples")
      .def("lcp", &PyIndex::lcp, py::arg("i"), py::arg("j"))
      .def("lcs", &PyIndex::lcs, py::arg("i"), py::arg("j"))
      .def("query", &PyIndex::query, py::arg("line"), py::arg("json") = false)
      .def("batch", &PyIndex::batch, py::arg("lines"), py::arg("json") = false, py::arg("threads") = 1);
}
