#include "tracksim/env.hpp"

#include <algorithm>
#include <cmath>

#include "tracksim/errors.hpp"

namespace tracksim {

const char* to_string(LinkState s) {
  switch (s) {
    case LinkState::Connected: return "connected";
    case LinkState::Degraded: return "degraded";
    case LinkState::Lost: return "lost";
  }
  return "unknown";
}

void validate(const LinkModel& link) {
  if (link.path_loss_exponent < 1.5 || link.path_loss_exponent > 6.0) {
    throw ValidationError("link '" + link.name + "': path loss exponent out of [1.5, 6]");
  }
  if (!(link.loss_threshold_dbm < link.degraded_threshold_dbm &&
        link.degraded_threshold_dbm < link.reference_rssi_dbm)) {
    throw ValidationError("link '" + link.name + "': thresholds must satisfy loss < degraded < reference");
  }
}

double rssi_at(const LinkModel& link, double distance_m) {
  if (!std::isfinite(distance_m) || distance_m < 0.0) {
    throw ValidationError("rssi_at: distance must be >= 0");
  }
  const double d = std::max(distance_m, 1.0);
  return link.reference_rssi_dbm - 10.0 * link.path_loss_exponent * std::log10(d);
}

LinkState link_state(const LinkModel& link, double rssi_dbm) {
  if (rssi_dbm < link.loss_threshold_dbm) return LinkState::Lost;
  if (rssi_dbm < link.degraded_threshold_dbm) return LinkState::Degraded;
  return LinkState::Connected;
}

double loss_distance_m(const LinkModel& link) {
  return std::pow(10.0, (link.reference_rssi_dbm - link.loss_threshold_dbm) /
                            (10.0 * link.path_loss_exponent));
}

std::vector<LinkModel> default_links() {
  // Exponents solved from the observed operating bands and loss distances:
  // e.g. the 2.4 GHz transmitter spans -40 to -90 dBm and drops out near
  // 250 m, so n = 50 / (10 * log10(250)).
  std::vector<LinkModel> links;
  links.push_back({"transmitter_2g4", -40.0, 2.085, -90.0, -80.0});
  links.push_back({"wifi_2g4", -20.0, 2.502, -80.0, -70.0});
  links.push_back({"telemetry_900", -30.0, 2.8, -120.0, -110.0});
  for (const LinkModel& l : links) validate(l);
  return links;
}

void validate(const AcousticModel& model) {
  if (model.rotor_count < 1 || model.blades_per_rotor < 1 || model.harmonics < 1) {
    throw ValidationError("acoustic model: counts must be >= 1");
  }
  if (!(model.rpm > 0.0)) {
    throw ValidationError("acoustic model: rpm must be > 0");
  }
  if (model.harmonic_rolloff_db < 0.0) {
    throw ValidationError("acoustic model: rolloff must be >= 0");
  }
}

std::vector<Tone> tone_set(const AcousticModel& model) {
  validate(model);
  const double f_rot = model.rpm / 60.0;
  const double f_blade = model.blades_per_rotor * f_rot;
  constexpr double kRotationLineDb = -6.0; // motor line sits below the blade-pass line

  std::vector<Tone> tones;
  for (int k = 1; k <= model.harmonics; ++k) {
    const double drop = (k - 1) * model.harmonic_rolloff_db;
    tones.push_back({k * f_rot, kRotationLineDb - drop});
    tones.push_back({k * f_blade, 0.0 - drop});
  }
  std::sort(tones.begin(), tones.end(),
            [](const Tone& a, const Tone& b) { return a.frequency_hz < b.frequency_hz; });
  std::vector<Tone> unique;
  for (const Tone& t : tones) {
    if (!unique.empty() && std::abs(unique.back().frequency_hz - t.frequency_hz) < 1e-9) {
      unique.back().level_db = std::max(unique.back().level_db, t.level_db);
    } else {
      unique.push_back(t);
    }
  }
  return unique;
}

double spl_at(const AcousticModel& model, double slant_range_m) {
  validate(model);
  if (!std::isfinite(slant_range_m)) {
    throw ValidationError("spl_at: non-finite range");
  }
  const double r = std::max(slant_range_m, 1.0);
  return model.source_spl_db - 20.0 * std::log10(r);
}

} // namespace tracksim
