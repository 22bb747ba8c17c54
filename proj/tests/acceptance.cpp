// Acceptance suite: one [PASS]/[FAIL] line per criterion.
// Usage: acceptance [n]   (n in 1..8; no argument runs all)

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hamlift/hamlift.hpp"

namespace {

using namespace hamlift;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

std::string kname(const InstanceParams& p) { return "k=" + std::to_string(p.k); }

// Orbit-pair off-diagonal: claim instance (claim, j, n) whose orbit pair is
// {a, b} up to order.
struct ClaimRef {
  int claim;
  std::uint32_t j, n;
};
ClaimRef claim_for(std::size_t a, std::size_t b) {
  if (a >= 5 && b < 5) std::swap(a, b);
  if (a < 5 && b < 5) return {1, static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a)};
  if (a < 5) return {2, static_cast<std::uint32_t>(b - 5), static_cast<std::uint32_t>(a)};
  return {3, static_cast<std::uint32_t>(b - 5), static_cast<std::uint32_t>(a - 5)};
}

// Structural checks shared by AC1 and AC2.
void structural_checks(Outcome& out, const InstanceParams& params) {
  const std::string tag = kname(params);
  const auto inst = Instance::build(params);
  const std::uint32_t k = params.k, p = params.p;
  out.check(inst.space.size() == 10 * p, tag + " |Omega| = " + std::to_string(10 * p));

  const auto h = enumerate_H(inst.group);
  const auto subs = suborbits(inst.space, h);
  bool profile = subs.size() == 10;
  for (std::size_t r = 0; r < subs.size(); ++r) profile = profile && subs[r].points.size() == (r < 5 ? 1u : k);
  out.check(profile, tag + " suborbit profile {1x5, " + std::to_string(k) + "x5}");

  bool orbit_sizes = inst.orbits.count() == 10;
  for (const auto& o : inst.orbits.orbits()) orbit_sizes = orbit_sizes && o.size() == p;
  out.check(orbit_sizes, tag + " ten S-orbits of size " + std::to_string(p));

  std::uint32_t global_min_d = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t i = 0; i < 5; ++i) {
    const std::string yi = tag + " Y(" + std::to_string(i) + ")";
    const auto y = build_graph(inst.space, i);
    out.check(y.regular_degree() == k && y.is_connected(), yi + " " + std::to_string(k) + "-regular and connected");
    const auto q = build_quotient(inst.space, y, inst.orbits);
    out.check(q.is_complete(), yi + " quotient is K10");
    global_min_d = std::min(global_min_d, q.min_off_diagonal());
    std::size_t low = 0;
    for (std::size_t a = 0; a < kOrbitCount; ++a)
      for (std::size_t b = a + 1; b < kOrbitCount; ++b) low += q.mult(a, b) < 2;
    out.check(low == 0, yi + " every off-diagonal d(A,B) >= 2 (" + std::to_string(low) + " unordered pairs with d < 2)");

    const auto r = run_pipeline(inst, i);
    out.check(r.report.ok && r.certificate.vertices.size() == 10 * p,
              yi + " verified Hamilton certificate of length " + std::to_string(10 * p) +
                  (r.report.ok ? "" : ": " + r.report.failure));
  }
  out.note(tag + " min off-diagonal d = " + std::to_string(global_min_d));
}

Outcome ac1() {
  Outcome out;
  const auto t0 = Clock::now();
  structural_checks(out, make_instance(61, 1));
  const double dt = seconds_since(t0);
  out.check(dt < 10.0, "runtime under 10s");
  out.note("runtime " + fmt_seconds(dt));
  return out;
}

Outcome ac2() {
  Outcome out;
  for (auto [s, m] : {std::pair{3u, 4u}, {11u, 2u}}) {
    const auto t0 = Clock::now();
    const auto params = make_instance(s, m);
    structural_checks(out, params);
    const Psl2 g(make_field(s, m));
    const std::uint64_t k = params.k;
    out.check(enumerate_H(g).size() == k * (k - 1) / 10, kname(params) + " |H| = " + std::to_string(k * (k - 1) / 10));
    if (k == 81) {
      const auto lit = closure(g, {g.u(), g.power(g.t(), 5)});
      out.check(lit.size() == 72, "k=81 literal closure of {u, t^5} has order 72");
      out.note("k=81 closure of {u, t^5} = " + std::to_string(lit.size()) + " != 648");
    }
    const double dt = seconds_since(t0);
    out.check(dt < 120.0, kname(params) + " runtime under 2 minutes");
    out.note(kname(params) + " runtime " + fmt_seconds(dt));
  }
  return out;
}

Outcome ac3() {
  Outcome out;
  const auto t0 = Clock::now();
  const Field f = make_field(61, 1);
  std::size_t bad = 0;
  for (auto c : f.elements()) {
    if (c.is_zero()) continue;
    // Exhaustive count over all (a, y) with y != 0.
    bool found = false;
    for (auto y : f.elements()) {
      if (y.is_zero()) continue;
      const auto rest = f.sub(f.one(), f.mul(c, f.pow(y, 10)));
      for (auto a : f.elements())
        if (f.mul(a, a) == rest) found = true;
    }
    bad += !found;
    out.check(found == has_nonzero_y_solution(f, {f.one(), c, 2, 10, f.one()}), "library agrees for c = " + f.to_string(c));
  }
  out.check(bad == 0, std::to_string(bad) + " coefficients c without a y != 0 solution");
  const double dt = seconds_since(t0);
  out.check(dt < 1.0, "runtime under 1s");
  out.note("60 coefficients, runtime " + fmt_seconds(dt));
  return out;
}

Outcome ac4() {
  Outcome out;
  std::mt19937_64 rng(20261016);
  std::size_t fields = 0, total = 0, violations = 0, cross = 0;
  for (std::uint64_t q = 2; q <= 121; ++q) {
    std::uint64_t s = 2;
    while (q % s != 0) ++s;
    std::uint64_t m = 0, r = q;
    while (r % s == 0) r /= s, ++m;
    if (r != 1) continue;
    ++fields;
    const Field f = make_field(s, m);
    std::uniform_int_distribution<std::uint32_t> nz(1, f.order() - 1);
    std::uniform_int_distribution<std::uint64_t> ex(1, 24);
    for (int trial = 0; trial < 200; ++trial) {
      const DiagonalEquation eq{FieldElement(nz(rng)), FieldElement(nz(rng)), ex(rng), ex(rng), FieldElement(nz(rng))};
      const auto rep = weil_check(f, eq);
      ++total;
      violations += !rep.holds;
      if (trial < 5) {
        // Direct double loop over (x, y) as a cross-check of the count.
        std::uint64_t n = 0;
        for (auto x : f.elements())
          for (auto y : f.elements())
            n += f.add(f.mul(eq.a1, f.pow(x, static_cast<std::int64_t>(eq.k1))),
                       f.mul(eq.a2, f.pow(y, static_cast<std::int64_t>(eq.k2)))) == eq.b;
        cross += n != rep.n;
      }
    }
  }
  out.check(violations == 0, std::to_string(violations) + " Weil violations");
  out.check(cross == 0, std::to_string(cross) + " count mismatches against direct enumeration");
  out.note(std::to_string(fields) + " fields, " + std::to_string(total) + " equations");
  return out;
}

Outcome ac5() {
  Outcome out;
  for (auto [s, m] : {std::pair{61u, 1u}, {3u, 4u}, {11u, 2u}}) {
    const Field f = make_field(s, m);
    std::size_t bad = 0;
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (int claim = 1; claim <= 3; ++claim)
      for (std::uint32_t i = 0; i < 5; ++i)
        for (std::uint32_t j = 0; j < 5; ++j)
          for (std::uint32_t n = 0; n < 5; ++n) {
            const auto nz = count_solutions_y_nonzero(f, claim_equation(f, claim, i, j, n));
            least = std::min(least, nz);
            bad += !meets_claim_bound(f.order(), nz);
          }
    out.check(bad == 0, "k=" + std::to_string(f.order()) + ": " + std::to_string(bad) + " violations");
    out.note("k=" + std::to_string(f.order()) + " min N_{y!=0} = " + std::to_string(least));
  }
  return out;
}

Outcome ac6() {
  Outcome out;
  std::mt19937_64 rng(6);
  for (auto [s, m] : {std::pair{61u, 1u}, {3u, 4u}, {11u, 2u}}) {
    const auto params = make_instance(s, m);
    const auto inst = Instance::build(params);
    const std::uint32_t p = params.p;
    const auto cycle = identity_orbit_cycle();
    std::size_t tested = 0, zero_sum = 0, bad = 0;
    for (std::uint32_t i = 0; i < 5; ++i) {
      const auto y = build_graph(inst.space, i);
      const auto q = build_quotient(inst.space, y, inst.orbits);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint32_t> v(10);
        for (std::size_t r = 0; r < 10; ++r) {
          const auto& opts = q.voltages(cycle[r], cycle[(r + 1) % 10]);
          v[r] = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
        }
        if (trial % 4 == 3) {
          // Constructed zero-sum assignment on arbitrary Z_p voltages.
          std::uint64_t sum = 0;
          for (std::size_t r = 0; r + 1 < 10; ++r) sum += v[r];
          v[9] = static_cast<std::uint32_t>((p - sum % p) % p);
        }
        std::uint64_t total = 0;
        for (auto x : v) total += x;
        const bool nonzero = total % p != 0;
        zero_sum += !nonzero;
        ++tested;

        const auto comps = lift_components(v, p);
        bool ok = nonzero ? comps == std::vector<std::uint64_t>{10ull * p}
                          : comps.size() == p && std::ranges::all_of(comps, [](auto c) { return c == 10; });

        // Unroll the walk from (0, 0) and check it in the graph when every
        // voltage comes from the quotient.
        bool genuine = true;
        for (std::size_t r = 0; r < 10; ++r)
          genuine = genuine && std::ranges::binary_search(q.voltages(cycle[r], cycle[(r + 1) % 10]), v[r]);
        std::vector<char> seen(inst.space.size(), 0);
        std::size_t distinct = 0;
        std::uint32_t pos = 0;
        for (std::uint32_t lap = 0; lap < p; ++lap)
          for (std::size_t r = 0; r < 10; ++r) {
            const auto a = inst.space.index(inst.orbits.orbit(cycle[r])[pos]);
            const std::uint32_t next = (pos + v[r]) % p;
            const auto b = inst.space.index(inst.orbits.orbit(cycle[(r + 1) % 10])[next]);
            if (genuine) ok = ok && y.has_edge(a, b);
            distinct += !seen[a];
            seen[a] = 1;
            pos = next;
          }
        ok = ok && distinct == (nonzero ? 10ull * p : 10ull);
        bad += !ok;
      }
    }
    out.check(tested >= 100 && bad == 0, kname(params) + ": " + std::to_string(bad) + " of " + std::to_string(tested) +
                                             " assignments break the dichotomy");
    out.note(kname(params) + " " + std::to_string(tested) + " assignments, " + std::to_string(zero_sum) + " zero-sum");
  }
  return out;
}

Outcome ac7() {
  Outcome out;
  for (auto [s, m] : {std::pair{61u, 1u}, {3u, 4u}, {11u, 2u}}) {
    const auto params = make_instance(s, m);
    const auto inst = Instance::build(params);
    std::size_t pairs = 0, disagree = 0;
    for (std::uint32_t i = 0; i < 5; ++i) {
      const auto q = build_quotient(inst.space, build_graph(inst.space, i), inst.orbits);
      for (std::size_t a = 0; a < kOrbitCount; ++a)
        for (std::size_t b = 0; b < kOrbitCount; ++b) {
          if (a == b) continue;
          const auto c = claim_for(a, b);
          const bool solvable = has_nonzero_y_solution(inst.field, claim_equation(inst.field, c.claim, i, c.j, c.n));
          ++pairs;
          disagree += (q.mult(a, b) >= 2) != solvable;
        }
    }
    out.check(disagree == 0, kname(params) + ": " + std::to_string(disagree) + " of " + std::to_string(pairs) +
                                 " ordered pairs where d(A,B) >= 2 disagrees with solvability");
    if (disagree == 0) out.note(kname(params) + " " + std::to_string(pairs) + " ordered pairs agree");
  }
  return out;
}

int run_cli(const std::string& args, const std::filesystem::path& log) {
  const std::string cmd = std::string(HAMLIFT_CLI) + " " + args + " >" + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome ac8() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hamlift_acceptance_ac8";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> jobs;
  for (const auto* inst : {"--s 61 --m 1", "--s 3 --m 4", "--s 11 --m 2"}) {
    for (int i = 0; i < 5; ++i) jobs.emplace_back(std::string("hamilton ") + inst + " --orbital " + std::to_string(i), "");
    jobs.emplace_back(std::string("full-graph ") + inst + " --orbitals 0,1", "");
  }
  std::size_t emitted = 0, verified = 0;
  for (std::size_t n = 0; n < jobs.size(); ++n) {
    const fs::path cert = dir / ("cert" + std::to_string(n) + ".json");
    const int made = run_cli(jobs[n].first + " --out " + cert.string(), dir / "make.log");
    out.check(made == 0, "emit: " + jobs[n].first + " exited " + std::to_string(made));
    if (made != 0 || !fs::exists(cert)) continue;
    ++emitted;
    const int ok = run_cli("verify --cert " + cert.string(), dir / "verify.log");
    out.check(ok == 0, "verify: " + jobs[n].first + " exited " + std::to_string(ok));
    verified += ok == 0;
  }
  out.check(emitted == jobs.size(), "all certificates emitted");
  out.note(std::to_string(verified) + " of " + std::to_string(emitted) + " certificates verified in a fresh process");
  fs::remove_all(dir);
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "k=61 end-to-end", ac1},
      {2, "k=81 and k=121 end-to-end", ac2},
      {3, "a^2 + c y^10 = 1 solvable with y != 0 for all c in GF(61)*", ac3},
      {4, "Weil inequality on random diagonal equations, q <= 121", ac4},
      {5, "N_{y!=0} >= k - 8 sqrt(k) - 3 for every claim instance", ac5},
      {6, "lift dichotomy over voltage assignments", ac6},
      {7, "d(A,B) >= 2 agrees with claim-equation solvability", ac7},
      {8, "certificates verify in a fresh process", ac8},
  };
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(all.size())) {
      std::cerr << "usage: acceptance [1-8]\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << '\n';
    for (const auto& n : o.notes) std::cout << "       " << n << '\n';
  }
  return all_pass ? 0 : 1;
}
