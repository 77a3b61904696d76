#include "pspec/io.hpp"

#include "pspec/synth.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

namespace pspec {

using nlohmann::json;

bool SystemFile::is_siso() const {
    if (state_space) return state_space->m() == 1;
    return true;
}

namespace {

// Controllable canonical realization of num/den (den monic).
Realization companion_realization(const RationalFunction& f) {
    const auto n = f.degree();
    const double g_inf = f.num(0);
    const Vector rem = f.num - g_inf * f.den;  // degree <= n-1

    Matrix A = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) A(n - 1, j) = -f.den(n - j);
    Matrix B = Matrix::Zero(n, 1);
    B(n - 1, 0) = 1.0;
    Matrix C(1, n);
    for (Eigen::Index j = 0; j < n; ++j) C(0, j) = rem(n - j);
    Matrix D(1, 1);
    D << g_inf;
    return Realization(A, B, C, D);
}

}  // namespace

Realization SystemFile::realize() const {
    if (state_space) return *state_space;
    if (pole_residue) return symmetric_from_pole_residue(*pole_residue);
    if (rational) {
        try {
            return symmetric_from_pole_residue(pole_residue_from_rational(*rational));
        } catch (const ValidationError&) {
            return companion_realization(*rational);
        }
    }
    throw ValidationError("system file holds no representation");
}

namespace {

Matrix parse_matrix(const json& j, const std::string& key) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ValidationError(key + " must be a nested (row-major) array");
    const size_t rows = j.size();
    const size_t cols = j[0].size();
    Matrix M(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ValidationError(key + " rows must have equal length");
        for (size_t k = 0; k < cols; ++k) {
            if (!j[i][k].is_number())
                throw ValidationError(key + " entries must be numbers");
            M(i, k) = j[i][k].get<double>();
        }
    }
    return M;
}

Vector parse_vector(const json& j, const std::string& key) {
    if (!j.is_array()) throw ValidationError(key + " must be an array");
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number()) throw ValidationError(key + " entries must be numbers");
        v(i) = j[i].get<double>();
    }
    return v;
}

}  // namespace

SystemFile parse_system_file(const json& j) {
    SystemFile f;
    f.name = j.value("name", "");

    const bool has_ss = j.contains("A");
    const bool has_rf = j.contains("num");
    const bool has_pr = j.contains("g_inf");
    if (static_cast<int>(has_ss) + has_rf + has_pr != 1)
        throw ValidationError("exactly one representation (A/B/C/D, num/den, or "
                              "g_inf/poles/residues) must be present");

    if (has_ss) {
        for (const char* key : {"B", "C", "D"})
            if (!j.contains(key)) throw ValidationError(std::string("missing ") + key);
        f.state_space = Realization(parse_matrix(j["A"], "A"), parse_matrix(j["B"], "B"),
                                    parse_matrix(j["C"], "C"), parse_matrix(j["D"], "D"));
    } else if (has_rf) {
        if (!j.contains("den")) throw ValidationError("missing den");
        f.rational = RationalFunction(parse_vector(j["num"], "num"),
                                      parse_vector(j["den"], "den"));
    } else {
        if (!j.contains("poles") || !j.contains("residues"))
            throw ValidationError("missing poles/residues");
        f.pole_residue = PoleResidue(j["g_inf"].get<double>(),
                                     parse_vector(j["poles"], "poles"),
                                     parse_vector(j["residues"], "residues"));
    }
    return f;
}

SystemFile load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return parse_system_file(j);
}

double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(round12(M(i, k)));
        rows.push_back(row);
    }
    return rows;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(round12(v(i)));
    return out;
}

json spectrum_to_json(const Spectrum& s) {
    json out = json::array();
    for (const auto& v : s.values)
        out.push_back({round12(v.real()), round12(v.imag())});
    return out;
}

Matrix matrix_from_json(const json& j) { return parse_matrix(j, "matrix"); }

}  // namespace pspec
