#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "ldu/errors.hpp"
#include "ldu/factorize.hpp"
#include "ldu/gen.hpp"
#include "ldu/io.hpp"

namespace py = pybind11;

namespace {

using StrMatrix = std::vector<std::vector<std::string>>;

ldu::IntMatrix to_int_matrix(const StrMatrix& entries) {
    if (entries.empty()) throw ldu::ParseError("empty matrix");
    std::size_t rows = entries.size();
    std::size_t cols = entries[0].size();
    ldu::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols)
            throw ldu::ShapeMismatch("rows have different lengths");
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m(i, j) = ldu::parse_int(entries[i][j]);
            } catch (const ldu::ParseError& e) {
                throw ldu::ParseError(e.what(), i + 1, j + 1);
            }
        }
    }
    return m;
}

StrMatrix from_matrix(const ldu::RatMatrix& m) {
    StrMatrix out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).str();
    return out;
}

StrMatrix from_matrix(const ldu::IntMatrix& m) {
    StrMatrix out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).str();
    return out;
}

std::string factorize_json(const StrMatrix& entries, const std::string& alpha) {
    return ldu::bundle_to_json(
        ldu::factorize(to_int_matrix(entries), ldu::parse_int(alpha)));
}

std::vector<std::tuple<std::string, bool, std::string>> verify_json(
    const StrMatrix& entries, const std::string& bundle, bool deep) {
    ldu::Report report = ldu::verify_factorization(
        to_int_matrix(entries), ldu::bundle_from_json(bundle), deep);
    std::vector<std::tuple<std::string, bool, std::string>> out;
    out.reserve(report.size());
    for (const ldu::CheckResult& c : report)
        out.emplace_back(c.name, c.pass, c.detail);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact LDU factorization core";

    m.def("factorize_json", &factorize_json, py::arg("entries"),
          py::arg("alpha") = "1",
          "Factorize an integer matrix; returns the bundle as a JSON string.");
    m.def("verify_json", &verify_json, py::arg("entries"), py::arg("bundle"),
          py::arg("deep") = false,
          "Check a bundle against a matrix; returns (name, pass, detail) triples.");
    m.def(
        "rank",
        [](const StrMatrix& entries) { return ldu::rank(to_int_matrix(entries)); },
        py::arg("entries"));
    m.def(
        "det",
        [](const StrMatrix& entries) {
            return ldu::determinant(to_int_matrix(entries)).str();
        },
        py::arg("entries"));
    m.def(
        "inv",
        [](const StrMatrix& entries) {
            return from_matrix(ldu::inverse(to_int_matrix(entries)));
        },
        py::arg("entries"));
    m.def(
        "solve",
        [](const StrMatrix& entries, const std::vector<std::string>& rhs) {
            ldu::IntMatrix b(rhs.size(), 1);
            for (std::size_t i = 0; i < rhs.size(); ++i)
                b(i, 0) = ldu::parse_int(rhs[i]);
            ldu::RatMatrix x = ldu::solve(to_int_matrix(entries), b);
            std::vector<std::string> out(x.rows());
            for (std::size_t i = 0; i < x.rows(); ++i) out[i] = x(i, 0).str();
            return out;
        },
        py::arg("entries"), py::arg("rhs"));
    m.def(
        "gen",
        [](std::size_t n, std::size_t rank, std::uint64_t seed, std::int64_t bound) {
            return from_matrix(ldu::gen_matrix(n, rank, seed, bound));
        },
        py::arg("n"), py::arg("rank"), py::arg("seed") = 0, py::arg("bound") = 9);

    py::register_exception<ldu::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ldu::SingularMatrix>(m, "SingularMatrixError",
                                                PyExc_ArithmeticError);
}
