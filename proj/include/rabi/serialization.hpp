// serialization.hpp: JSON documents for JointState / FieldState.
//
//   {"basis": {"n_max": N}, "kind": "joint", "amplitudes": [[re, im], ...], "time": t}
//   {"basis": {"n_max": N}, "kind": "unconditional" | "conditioned_g" | "conditioned_e",
//    "matrix": [[[re, im], ...], ...], "time": t}
//
// Doubles are written in shortest round-trip form, so text -> value -> text
// is idempotent and values round-trip bit-exactly.

#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rabi/state.hpp"

namespace rabi {

using json = nlohmann::json;

namespace detail {

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    for (const auto& [key, _] : j.items())
        if (!allowed.contains(key))
            throw std::invalid_argument(std::string(what) + ": unknown key '" + key + "'");
}

inline FockBasis basis_from_json(const json& j) {
    reject_unknown_keys(j, {"n_max"}, "basis");
    return FockBasis(j.at("n_max").get<int>());
}

}  // namespace detail

inline json to_json(const JointState& s) {
    json amps = json::array();
    for (Index i = 0; i < s.amplitudes().size(); ++i) amps.push_back(detail::complex_to_json(s.amplitudes()(i)));
    return json{{"basis", {{"n_max", s.basis().n_max()}}},
                {"kind", "joint"},
                {"amplitudes", std::move(amps)},
                {"time", s.time()}};
}

inline json to_json(const FieldState& f, std::optional<double> time = std::nullopt) {
    json rows = json::array();
    for (Index r = 0; r < f.matrix().rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < f.matrix().cols(); ++c) row.push_back(detail::complex_to_json(f.matrix()(r, c)));
        rows.push_back(std::move(row));
    }
    json out{{"basis", {{"n_max", f.basis().n_max()}}}, {"kind", to_string(f.kind())}, {"matrix", std::move(rows)}};
    if (time) out["time"] = *time;
    return out;
}

inline bool is_joint_state_json(const json& j) { return j.is_object() && j.value("kind", "") == "joint"; }

inline JointState joint_state_from_json(const json& j) {
    detail::reject_unknown_keys(j, {"basis", "kind", "amplitudes", "time"}, "JointState");
    if (j.at("kind") != "joint") throw std::invalid_argument("JointState: kind must be 'joint'");
    const FockBasis basis = detail::basis_from_json(j.at("basis"));
    const json& amps = j.at("amplitudes");
    if (!amps.is_array() || static_cast<Index>(amps.size()) != basis.joint_dim())
        throw std::invalid_argument("JointState: amplitudes length does not match basis");
    CVector v(basis.joint_dim());
    for (Index i = 0; i < v.size(); ++i) v(i) = detail::complex_from_json(amps[static_cast<std::size_t>(i)]);
    return JointState(basis, std::move(v), j.value("time", 0.0));
}

/// Parses and validates (Hermitian, trace 1, PSD).
inline FieldState field_state_from_json(const json& j) {
    detail::reject_unknown_keys(j, {"basis", "kind", "matrix", "time"}, "FieldState");
    const FockBasis basis = detail::basis_from_json(j.at("basis"));
    const FieldKind kind = field_kind_from_string(j.at("kind").get<std::string>());
    const json& rows = j.at("matrix");
    if (!rows.is_array() || static_cast<Index>(rows.size()) != basis.dim())
        throw std::invalid_argument("FieldState: matrix row count does not match basis");
    CMatrix m(basis.dim(), basis.dim());
    for (Index r = 0; r < basis.dim(); ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != basis.dim())
            throw std::invalid_argument("FieldState: matrix row length does not match basis");
        for (Index c = 0; c < basis.dim(); ++c) m(r, c) = detail::complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    FieldState f(basis, std::move(m), kind);
    f.validate();
    return f;
}

}  // namespace rabi
