#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact char-2 Cartan prolongation engine";
    m.def("version", [] { return "0.1.0"; });
}
