#pragma once

// Versioned JSON document for HamiltonCertificate.
//
// {
//   "format": "hamlift-certificate", "version": 1,
//   "parameters": {"s", "m", "k", "p", "orbital"},
//   "orbit_cycle": [10 ints], "voltages": [10 ints], "total_voltage": int,
//   "vertices": ["inf:0", ...]       // 10p OmegaPoint strings
// }

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "quotient.hpp"

namespace hamlift {

inline constexpr const char* kCertificateFormat = "hamlift-certificate";
inline constexpr int kCertificateVersion = 1;

class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json to_json(const CosetSpace& space, const HamiltonCertificate& cert) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& w : cert.vertices) vertices.push_back(space.to_string(w));
  return {
      {"format", kCertificateFormat},
      {"version", kCertificateVersion},
      {"parameters", {{"s", cert.s}, {"m", cert.m}, {"k", cert.k}, {"p", cert.p}, {"orbital", cert.orbital}}},
      {"orbit_cycle", cert.orbit_cycle},
      {"voltages", cert.voltages},
      {"total_voltage", cert.total_voltage},
      {"vertices", std::move(vertices)},
  };
}

inline void write_certificate(std::ostream& os, const CosetSpace& space, const HamiltonCertificate& cert) {
  os << to_json(space, cert).dump(1) << '\n';
}

inline HamiltonCertificate read_certificate(std::istream& is) {
  try {
    const auto doc = nlohmann::json::parse(is);
    if (doc.at("format").get<std::string>() != kCertificateFormat) throw format_error("not a hamlift certificate");
    if (doc.at("version").get<int>() != kCertificateVersion)
      throw format_error("unsupported certificate version " + doc.at("version").dump());
    HamiltonCertificate cert;
    const auto& par = doc.at("parameters");
    cert.s = par.at("s").get<std::uint32_t>();
    cert.m = par.at("m").get<std::uint32_t>();
    cert.k = par.at("k").get<std::uint32_t>();
    cert.p = par.at("p").get<std::uint32_t>();
    cert.orbital = par.at("orbital").get<std::uint32_t>();
    cert.orbit_cycle = doc.at("orbit_cycle").get<std::vector<std::uint32_t>>();
    cert.voltages = doc.at("voltages").get<std::vector<std::uint32_t>>();
    cert.total_voltage = doc.at("total_voltage").get<std::uint32_t>();

    const CosetSpace space{Psl2(make_field(cert.s, cert.m))};
    for (const auto& v : doc.at("vertices")) cert.vertices.push_back(space.parse(v.get<std::string>()));
    return cert;
  } catch (const format_error&) {
    throw;
  } catch (const std::exception& e) {
    throw format_error(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace hamlift
