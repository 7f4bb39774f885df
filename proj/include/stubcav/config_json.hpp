#pragma once

// JSON (de)serialization of DeviceConfig.  Schema keys:
//   v_m_per_s, impedance_ohm, l2_mm, l3_mm, cs_ff, ic_ua
// Missing keys fall back to the defaults; unknown keys are rejected.

#include <string>

#include <json.hpp>

#include "stubcav/device.hpp"
#include "stubcav/errors.hpp"

namespace stubcav {

inline DeviceConfig device_config_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ValidationError("config must be a JSON object");
    DeviceConfig cfg;
    auto read = [&](const char* key, double& out) {
        if (!j.contains(key)) return;
        if (!j.at(key).is_number())
            throw ValidationError(std::string("config key '") + key + "' must be a number");
        out = j.at(key).get<double>();
    };
    read("v_m_per_s", cfg.v_m_per_s);
    read("impedance_ohm", cfg.impedance_ohm);
    read("l2_mm", cfg.l2_mm);
    read("l3_mm", cfg.l3_mm);
    read("cs_ff", cfg.cs_ff);
    read("ic_ua", cfg.ic_ua);
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "v_m_per_s" && key != "impedance_ohm" && key != "l2_mm" &&
            key != "l3_mm" && key != "cs_ff" && key != "ic_ua")
            throw ValidationError("unknown config key '" + key + "'");
    }
    return cfg;
}

inline nlohmann::ordered_json device_config_to_json(const DeviceConfig& cfg) {
    nlohmann::ordered_json j;
    j["v_m_per_s"] = cfg.v_m_per_s;
    j["impedance_ohm"] = cfg.impedance_ohm;
    j["l2_mm"] = cfg.l2_mm;
    j["l3_mm"] = cfg.l3_mm;
    j["cs_ff"] = cfg.cs_ff;
    j["ic_ua"] = cfg.ic_ua;
    return j;
}

}  // namespace stubcav
