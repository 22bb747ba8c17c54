// hamlift: Hamilton cycles in the orbital graphs of PSL(2,k) on G\H.
//
// Exit codes: 0 success, 2 parameter error, 3 invariant violation,
// 4 verification failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamlift/hamlift.hpp"

namespace {

using namespace hamlift;

constexpr int kExitParameter = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitVerification = 4;

struct ParamFlags {
  std::optional<std::uint64_t> s, m, k;
  bool allow_large = false;

  void attach(CLI::App* sub) {
    sub->add_option("--s", s, "Characteristic (prime)");
    sub->add_option("--m", m, "Extension degree (default 1)");
    sub->add_option("--k", k, "Prime field order, shorthand for --s k --m 1");
    sub->add_flag("--allow-large", allow_large, "Permit k above the desk-scale limit");
  }

  bool given() const { return s || k; }

  InstanceParams resolve(bool guard = true) const {
    if (k && s) throw parameter_error("use either --k or --s/--m, not both");
    if (k && m && *m != 1) throw parameter_error("--k is only for prime fields (m = 1)");
    if (!k && !s) throw parameter_error("missing --s (or --k)");
    const InstanceParams p = k ? make_instance(*k, 1) : make_instance(*s, m.value_or(1));
    if (guard && p.k > kDeskScaleLimit && !allow_large)
      throw parameter_error("k = " + std::to_string(p.k) + " exceeds desk-scale limit " +
                            std::to_string(kDeskScaleLimit) + "; pass --allow-large to override");
    return p;
  }
};

// --out file or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw parameter_error("cannot open output file " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void print_quotient(std::ostream& os, const QuotientMultigraph& q) {
  os << "d(A,B) for Y(" << q.orbitals().front() << "), p = " << q.p() << "\n";
  for (std::size_t a = 0; a < kOrbitCount; ++a) {
    for (std::size_t b = 0; b < kOrbitCount; ++b) os << (b ? "\t" : "") << q.mult(a, b);
    os << '\n';
  }
  os << "complete: " << (q.is_complete() ? "yes" : "no") << ", min off-diagonal d(A,B): " << q.min_off_diagonal() << '\n';
  os << "voltages:\n";
  for (std::size_t a = 0; a < kOrbitCount; ++a)
    for (std::size_t b = 0; b < kOrbitCount; ++b) {
      os << a << ' ' << b << ':';
      for (auto w : q.voltages(a, b)) os << ' ' << w;
      os << '\n';
    }
}

int emit_certificate(const Instance& inst, const PipelineResult& r, const std::string& out) {
  Output o(out);
  write_certificate(o.stream(), inst.space, r.certificate);
  std::cerr << "k=" << inst.params.k << " orbital=" << r.certificate.orbital << " vertices=" << r.certificate.vertices.size()
            << " total_voltage=" << r.certificate.total_voltage << " min_d=" << r.min_multiplicity << " verified="
            << (r.report ? "yes" : "no") << '\n';
  if (!r.report) {
    std::cerr << "verification failed: " << r.report.failure << '\n';
    return kExitVerification;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles of PSL(2,k) orbital graphs of order 10p via S-quotient lifting"};
  app.require_subcommand(1);

  std::string out;
  std::string format = "cert";
  std::uint32_t orbital = 0;

  auto* instances = app.add_subcommand("instances", "List admissible (s, m) with k <= max-k");
  std::uint64_t max_k = 1000;
  instances->add_option("--max-k", max_k, "Largest k to scan")->capture_default_str();

  ParamFlags build_p, quot_p, ham_p, verify_p, weil_p, full_p;

  auto* build = app.add_subcommand("build", "Build Y(i) and export it");
  build_p.attach(build);
  build->add_option("--orbital", orbital, "Orbital index 0..4")->check(CLI::Range(0, 4));
  build->add_option("--format", format, "edgelist or dot")->check(CLI::IsMember({"edgelist", "dot", "cert"}));
  build->add_option("--out", out, "Output file (default stdout)");

  auto* quot = app.add_subcommand("quotient", "Print the S-quotient multigraph of Y(i)");
  quot_p.attach(quot);
  quot->add_option("--orbital", orbital, "Orbital index 0..4")->check(CLI::Range(0, 4));
  quot->add_option("--out", out, "Output file (default stdout)");

  auto* ham = app.add_subcommand("hamilton", "Lift a Hamilton cycle of Y(i) and write its certificate");
  ham_p.attach(ham);
  ham->add_option("--orbital", orbital, "Orbital index 0..4")->check(CLI::Range(0, 4));
  ham->add_option("--format", format, "cert")->check(CLI::IsMember({"cert"}));
  ham->add_option("--out", out, "Certificate file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Independently verify a certificate file");
  verify_p.attach(verify);
  std::string cert_path;
  verify->add_option("--cert", cert_path, "Certificate file")->required();

  auto* weil = app.add_subcommand("weil-report", "Solution counts and Weil bounds for the claim equations");
  weil_p.attach(weil);
  weil->add_option("--out", out, "Output file (default stdout)");

  auto* full = app.add_subcommand("full-graph", "Hamilton cycle of X = union of Y(i) over --orbitals");
  full_p.attach(full);
  std::vector<std::uint32_t> orbitals;
  full->add_option("--orbitals", orbitals, "Orbital indices 0..4")->required()->check(CLI::Range(0, 4))->delimiter(',');
  full->add_option("--format", format, "cert")->check(CLI::IsMember({"cert"}));
  full->add_option("--out", out, "Certificate file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParameter;
  }

  try {
    if (*instances) {
      Output o(out);
      o.stream() << "s\tm\tk\tp\n";
      for (const auto& p : list_instances(max_k)) o.stream() << p.s << '\t' << p.m << '\t' << p.k << '\t' << p.p << '\n';
      return 0;
    }
    if (*build) {
      if (format == "cert") format = "edgelist";
      const auto inst = Instance::build(build_p.resolve());
      const auto graph = build_graph(inst.space, orbital);
      Output o(out);
      if (format == "dot") write_dot(o.stream(), inst.space, graph);
      else write_edge_list(o.stream(), inst.space, graph);
      std::cerr << "Y(" << orbital << "): " << graph.vertex_count() << " vertices, " << *graph.regular_degree()
                << "-regular, " << graph.edge_count() << " edges, connected\n";
      return 0;
    }
    if (*quot) {
      const auto inst = Instance::build(quot_p.resolve());
      const auto q = build_quotient(inst.space, build_graph(inst.space, orbital), inst.orbits);
      Output o(out);
      print_quotient(o.stream(), q);
      return 0;
    }
    if (*ham) {
      const auto inst = Instance::build(ham_p.resolve());
      return emit_certificate(inst, run_pipeline(inst, orbital), out);
    }
    if (*full) {
      const auto inst = Instance::build(full_p.resolve());
      return emit_certificate(inst, full_graph_mode(inst, orbitals), out);
    }
    if (*weil) {
      const auto p = weil_p.resolve();
      Output o(out);
      write_weil_report(o.stream(), make_field(p.s, p.m));
      return 0;
    }
    if (*verify) {
      std::ifstream in(cert_path);
      if (!in) throw parameter_error("cannot open certificate " + cert_path);
      HamiltonCertificate cert;
      try {
        cert = read_certificate(in);
      } catch (const format_error& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitVerification;
      }
      if (verify_p.given()) {
        const auto p = verify_p.resolve(false);
        if (p.s != cert.s || p.m != cert.m) {
          std::cerr << "verification failed: certificate is for s=" << cert.s << " m=" << cert.m << '\n';
          return kExitVerification;
        }
      }
      const auto report = verify_certificate(cert);
      if (!report) {
        std::cerr << "verification failed: " << report.failure << '\n';
        return kExitVerification;
      }
      std::cout << "ok: Hamilton cycle of Y(" << cert.orbital << ") on " << cert.vertices.size() << " vertices, k="
                << cert.k << '\n';
      return 0;
    }
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation [stage " << e.stage() << "]: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitParameter;
}
