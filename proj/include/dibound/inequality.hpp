#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"

namespace dibound {

enum class BellKind { Holz, ParityCHSH, MABK, AsymCHSH };

struct BellSpec {
    BellKind kind = BellKind::Holz;
    double alpha = 1.0;
    double local_bound = 1.0;
    double quantum_bound = 1.5;
    int input_bits = 3;

    int parties() const { return kind == BellKind::AsymCHSH ? 2 : 3; }
    bool is_chsh() const { return kind == BellKind::AsymCHSH && alpha == 1.0; }

    std::string name() const {
        switch (kind) {
            case BellKind::Holz: return "holz";
            case BellKind::ParityCHSH: return "parity-chsh";
            case BellKind::MABK: return "mabk";
            case BellKind::AsymCHSH: return is_chsh() ? "chsh" : "asym-chsh";
        }
        return "?";
    }
};

inline BellSpec holz() { return {BellKind::Holz, 0.0, 1.0, 1.5, 3}; }
inline BellSpec parity_chsh() { return {BellKind::ParityCHSH, 0.0, 1.0, std::sqrt(2.0), 2}; }
inline BellSpec mabk() { return {BellKind::MABK, 0.0, 2.0, 4.0, 3}; }

inline BellSpec asym_chsh(double alpha) {
    if (!std::isfinite(alpha)) throw ValidationError("asym_chsh: alpha must be finite");
    const double a = std::abs(alpha);
    return {BellKind::AsymCHSH, alpha, a > 1.0 ? 2.0 * a : 2.0, 2.0 * std::sqrt(1.0 + alpha * alpha), 2};
}

inline BellSpec chsh() { return asym_chsh(1.0); }

inline BellSpec bell_spec_from_name(const std::string& name, double alpha = 1.0) {
    if (name == "holz") return holz();
    if (name == "parity-chsh") return parity_chsh();
    if (name == "mabk") return mabk();
    if (name == "chsh") return chsh();
    if (name == "asym-chsh") return asym_chsh(alpha);
    throw ValidationError("unknown inequality '" + name + "'");
}

}  // namespace dibound
