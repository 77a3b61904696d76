#pragma once

#include "pspec/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>

namespace pspec {

// One system description loaded from JSON: exactly one of the three
// representations must be present.
struct SystemFile {
    std::string name;
    std::optional<Realization> state_space;
    std::optional<RationalFunction> rational;
    std::optional<PoleResidue> pole_residue;

    bool is_siso() const;

    // State-space form of whatever representation was given. Rational input
    // goes through pole/residue data when it is a ZIP function (yielding the
    // diagonal symmetric realization) and through controllable canonical
    // form otherwise.
    Realization realize() const;
};

SystemFile parse_system_file(const nlohmann::json& j);
SystemFile load_system_file(const std::string& path);

// Round to 12 significant digits so serialized reports are byte-stable.
double round12(double v);

nlohmann::json matrix_to_json(const Matrix& M);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json spectrum_to_json(const Spectrum& s);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace pspec
