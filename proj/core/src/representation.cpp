#include "netconv/representation.hpp"

#include <cctype>

namespace netconv {

bool is_two_port_only(Representation rep) {
  switch (rep) {
    case Representation::G:
    case Representation::H:
    case Representation::A:
    case Representation::B:
    case Representation::T:
      return true;
    case Representation::Z:
    case Representation::Y:
    case Representation::S:
      return false;
  }
  return false;
}

bool is_wave_based(Representation rep) {
  return rep == Representation::S || rep == Representation::T;
}

bool valid_port_count(Representation rep, int n_ports) {
  if (n_ports < 1) return false;
  return is_two_port_only(rep) ? n_ports == 2 : true;
}

void require_port_count(Representation rep, int n_ports) {
  if (!valid_port_count(rep, n_ports)) {
    throw PortCountMismatch(to_string(rep) + " parameters require 2 ports, got " +
                            std::to_string(n_ports));
  }
}

char to_char(Representation rep) {
  switch (rep) {
    case Representation::Z: return 'Z';
    case Representation::Y: return 'Y';
    case Representation::G: return 'G';
    case Representation::H: return 'H';
    case Representation::A: return 'A';
    case Representation::B: return 'B';
    case Representation::S: return 'S';
    case Representation::T: return 'T';
  }
  return '?';
}

std::string to_string(Representation rep) { return std::string(1, to_char(rep)); }

std::optional<Representation> representation_from_string(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'Z': return Representation::Z;
    case 'Y': return Representation::Y;
    case 'G': return Representation::G;
    case 'H': return Representation::H;
    case 'A': return Representation::A;
    case 'B': return Representation::B;
    case 'S': return Representation::S;
    case 'T': return Representation::T;
    default: return std::nullopt;
  }
}

namespace {

SignalRef v(int port) { return {SignalKind::Voltage, port, +1}; }
SignalRef i(int port) { return {SignalKind::Current, port, +1}; }
SignalRef neg_i(int port) { return {SignalKind::Current, port, -1}; }
SignalRef a(int port) { return {SignalKind::IncidentWave, port, +1}; }
SignalRef b(int port) { return {SignalKind::ReflectedWave, port, +1}; }

std::vector<SignalRef> all_ports(SignalRef (*make)(int), int n) {
  std::vector<SignalRef> refs;
  refs.reserve(n);
  for (int p = 1; p <= n; ++p) refs.push_back(make(p));
  return refs;
}

}  // namespace

RepresentationDescriptor descriptor(Representation rep, int n_ports) {
  require_port_count(rep, n_ports);
  switch (rep) {
    case Representation::Z:
      return {all_ports(v, n_ports), all_ports(i, n_ports)};
    case Representation::Y:
      return {all_ports(i, n_ports), all_ports(v, n_ports)};
    case Representation::G:
      return {{i(1), v(2)}, {v(1), i(2)}};
    case Representation::H:
      return {{v(1), i(2)}, {i(1), v(2)}};
    case Representation::A:
      return {{v(1), i(1)}, {v(2), neg_i(2)}};
    case Representation::B:
      return {{v(2), neg_i(2)}, {v(1), i(1)}};
    case Representation::S:
      return {all_ports(b, n_ports), all_ports(a, n_ports)};
    case Representation::T:
      return {{a(1), b(1)}, {b(2), a(2)}};
  }
  throw Error("descriptor: unknown representation");
}

}  // namespace netconv
