#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netconv/errors.hpp"

namespace netconv {

/// The supported network representations. Z, Y and S describe any
/// N-port; G, H, A, B and T are defined for exactly two ports.
enum class Representation { Z, Y, G, H, A, B, S, T };

inline constexpr Representation kAllRepresentations[] = {
    Representation::Z, Representation::Y, Representation::G,
    Representation::H, Representation::A, Representation::B,
    Representation::S, Representation::T};

bool is_two_port_only(Representation rep);

/// True for the wave-based representations S and T.
bool is_wave_based(Representation rep);

bool valid_port_count(Representation rep, int n_ports);

/// Throws PortCountMismatch unless valid_port_count holds.
void require_port_count(Representation rep, int n_ports);

char to_char(Representation rep);
std::string to_string(Representation rep);

/// Case-insensitive single-letter lookup ("z", "Y", ...).
std::optional<Representation> representation_from_string(std::string_view s);

/// The four port signals a representation can reference.
enum class SignalKind { Voltage, Current, IncidentWave, ReflectedWave };

/// One signed entry of a stacked signal vector, e.g. -I2 is
/// {Current, port 2, sign -1}. Ports are numbered from 1.
struct SignalRef {
  SignalKind kind;
  int port;
  int sign;  // +1 or -1

  bool operator==(const SignalRef&) const = default;
};

/// Ordered output and input signal lists defining a representation:
/// outputs = R * inputs. Both lists have one entry per port.
struct RepresentationDescriptor {
  std::vector<SignalRef> outputs;
  std::vector<SignalRef> inputs;
};

/// The defining signal lists of each representation:
///   Z: [V1..VN] = Z [I1..IN]          Y: [I1..IN] = Y [V1..VN]
///   G: [I1,V2]  = G [V1,I2]           H: [V1,I2]  = H [I1,V2]
///   A: [V1,I1]  = A [V2,-I2]          B: [V2,-I2] = B [V1,I1]
///   S: [B1..BN] = S [A1..AN]          T: [A1,B1]  = T [B2,A2]
/// Throws PortCountMismatch for two-port-only representations with
/// n_ports != 2.
RepresentationDescriptor descriptor(Representation rep, int n_ports);

}  // namespace netconv
