#ifndef TRACKSIM_ENV_HPP
#define TRACKSIM_ENV_HPP

#include <string>
#include <vector>

namespace tracksim {

/// Log-distance path-loss link: RSSI falls linearly in log10(distance) below
/// the 1 m reference. Deterministic (no fading).
struct LinkModel {
  std::string name;
  double reference_rssi_dbm = -40.0; // at d0 = 1 m
  double path_loss_exponent = 2.0;   // in [1.5, 6]
  double loss_threshold_dbm = -90.0;
  double degraded_threshold_dbm = -80.0;
};

enum class LinkState { Connected, Degraded, Lost };

const char* to_string(LinkState s);

/// RSSI at a distance, dBm. Distances below 1 m clamp to the reference.
double rssi_at(const LinkModel& link, double distance_m);

/// Lost below loss_threshold; Degraded from loss_threshold (inclusive) up to
/// degraded_threshold (exclusive); Connected otherwise.
LinkState link_state(const LinkModel& link, double rssi_dbm);

/// Distance at which the link RSSI reaches its loss threshold.
double loss_distance_m(const LinkModel& link);

/// The three radios carried by the platform, with exponents set so the
/// 2.4 GHz links drop out around 250 m while the 900 MHz telemetry link
/// holds past 500 m.
std::vector<LinkModel> default_links();

/// Validates thresholds ordering and the exponent range.
void validate(const LinkModel& link);

/// Tonal rotor-noise model: rotation frequency and blade-pass lines plus
/// their harmonics, with a fixed per-harmonic rolloff.
struct AcousticModel {
  int rotor_count = 4;
  int blades_per_rotor = 2;
  double rpm = 6000.0;
  double source_spl_db = 80.0; // at 1 m
  int harmonics = 5;
  double harmonic_rolloff_db = 3.0;
};

struct Tone {
  double frequency_hz = 0.0;
  double level_db = 0.0; // relative to the strongest line
};

/// Emitted tone lines, sorted by frequency, duplicates merged at the higher
/// level. Rotation-frequency lines sit 6 dB below the blade-pass lines.
std::vector<Tone> tone_set(const AcousticModel& model);

/// Spherical-spreading level at a slant range (clamped to >= 1 m):
/// SPL = source_spl - 20*log10(r).
double spl_at(const AcousticModel& model, double slant_range_m);

void validate(const AcousticModel& model);

} // namespace tracksim

#endif // TRACKSIM_ENV_HPP
