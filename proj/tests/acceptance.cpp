// Acceptance run: one PASS/FAIL line per criterion.

#include <gitfan/chowring.hpp>
#include <gitfan/linalg.hpp>
#include <gitfan/polycone.hpp>
#include <gitfan/stability.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gitfan;
using fixtures::chamber_for;
using fixtures::to_longs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed expectations of one criterion.
struct Report {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool run_criterion(int id, const std::string& title,
                   const std::function<void(Report&)>& body) {
  Report r;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(t0);
  const bool ok = r.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title << " ("
            << secs << " s" << (r.detail.empty() ? "" : "; " + r.detail) << ")";
  if (!ok) {
    std::cout << ":";
    for (const auto& f : r.failures) std::cout << " [" << f << "]";
  }
  std::cout << "\n";
  return ok;
}

RatCone cone_of(std::size_t rank, const std::vector<LatVec>& rays) {
  return RatCone::from_rays(rank, rays);
}

// ---------------------------------------------------------------------------
// Rank-2 GKZ oracle: sort weight directions by angle, take a point in every
// open sector between consecutive directions, and merge neighbouring sectors
// whose families of orbit cones cone(S) containing the point coincide.

int half(const LatVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

Integer cross(const LatVec& a, const LatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

bool angle_less(const LatVec& a, const LatVec& b) {
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

struct GkzClass {
  std::vector<LatVec> samples;
  std::set<LatVec> boundary;
};

std::vector<GkzClass> gkz_oracle(const std::vector<LatVec>& cols) {
  std::vector<LatVec> dirs;
  for (const auto& c : cols) {
    if (!is_zero(c)) dirs.push_back(primitive(c));
  }
  std::sort(dirs.begin(), dirs.end(), angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  struct Sector {
    LatVec from, to, sample;
    std::vector<bool> family;
  };
  std::vector<Sector> sectors;
  const std::size_t n = dirs.size();
  // Gaps of angle >= pi lie outside the effective cone; there is at most one.
  // Start right after it so that the sectors run contiguously.
  auto open_gap = [&](std::size_t i) { return cross(dirs[i], dirs[(i + 1) % n]) > 0; };
  std::size_t start = 0;
  bool circular = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!open_gap(i)) {
      start = (i + 1) % n;
      circular = false;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (start + k) % n;
    if (!open_gap(i)) continue;
    const LatVec& a = dirs[i];
    const LatVec& b = dirs[(i + 1) % n];
    Sector s{a, b, add(a, b), {}};
    oracle::for_each_subset(cols.size(), [&](const std::vector<std::size_t>& sub) {
      std::vector<LatVec> gens;
      for (auto j : sub) gens.push_back(cols[j]);
      s.family.push_back(oracle::in_cone(gens, s.sample));
    });
    sectors.push_back(std::move(s));
  }
  std::vector<GkzClass> out;
  if (sectors.empty()) return out;
  const std::size_t m = sectors.size();
  std::vector<std::size_t> cls(m);
  std::size_t next = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const bool joins = i > 0 && sectors[i].family == sectors[i - 1].family;
    cls[i] = joins ? cls[i - 1] : next++;
  }
  if (circular && m > 1 && sectors.front().family == sectors.back().family &&
      cls.front() != cls.back()) {
    const std::size_t from = cls.back(), into = cls.front();
    for (auto& c : cls) {
      if (c == from) c = into;
    }
  }
  std::map<std::size_t, GkzClass> grouped;
  for (std::size_t i = 0; i < m; ++i) grouped[cls[i]].samples.push_back(sectors[i].sample);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t prev = (i + m - 1) % m;
    const bool has_prev = i > 0 || circular;
    if (!has_prev || cls[prev] != cls[i]) {
      grouped[cls[i]].boundary.insert(sectors[i].from);
      if (has_prev) grouped[cls[prev]].boundary.insert(sectors[i].from);
    }
    if (i + 1 == m && !circular) grouped[cls[i]].boundary.insert(sectors[i].to);
  }
  for (auto& [k, c] : grouped) out.push_back(std::move(c));
  return out;
}

std::set<LatVec> cone_boundary(const RatCone& c) {
  std::set<LatVec> out;
  const auto lin = c.lineality_basis();
  if (lin.size() == 0) {
    for (const auto& r : c.extreme_rays()) out.insert(primitive(r));
  } else if (lin.size() == 1) {
    out.insert(primitive(lin[0]));
    out.insert(primitive(negate(lin[0])));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string run_cli(const std::string& env, const std::string& args) {
  const std::string cmd = env + " " + std::string(GITFAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (status != 0) throw std::runtime_error("'" + args + "' exited with " + std::to_string(status));
  return out;
}

std::pair<GroupData, WeightSystem> gl_std(unsigned n) {
  Summand s;
  s.kind = SummandKind::std_rep;
  s.block = 0;
  return build_group(GroupSpec{{n}, 0}, ModuleSpec{{s}});
}

Poly random_poly(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, 6);
  Poly f(n);
  for (int k = 0, terms = 1 + rng() % 4; k < terms; ++k) {
    const auto all = oracle::monomials(n, deg(rng));
    f.add_term(all[rng() % all.size()], Rational(coef(rng)));
  }
  return f;
}

}  // namespace

int main() {
  bool all = true;

  all &= run_criterion(1, "projective spaces P^1..P^5", [](Report& r) {
    std::ostringstream times;
    for (unsigned n = 1; n <= 5; ++n) {
      const auto t0 = Clock::now();
      auto [gd, ws] = fixtures::projective(n);
      const Chamber ch = chamber_for(gd, ws, make_vec({1}));
      const auto b = to_longs(betti_numbers(chow_presentation(gd, ws, ch)));
      const auto pic = picard_and_ample(gd, ws, ch);
      const double secs = seconds_since(t0);
      const std::string tag = "P^" + std::to_string(n);
      r.expect(b == std::vector<long>(n + 1, 1), tag + " betti");
      r.expect(pic.rank == 1, tag + " picard rank");
      r.expect(secs < 1.0, tag + " took " + std::to_string(secs) + " s");
      times << (n > 1 ? " " : "") << secs;
    }
    r.detail = "per-case seconds " + times.str();
  });

  all &= run_criterion(2, "P^1 x P^1", [](Report& r) {
    auto [gd, ws] = fixtures::p1xp1();
    const GITFan fan = git_fan(gd, ws);
    r.expect(fan.full_dimensional().size() == 1, "one full-dimensional chamber");
    const Chamber ch = chamber_of(gd, ws, fan, gd.character(make_vec({1, 1})));
    r.expect(to_longs(betti_numbers(chow_presentation(gd, ws, ch))) ==
                 std::vector<long>{1, 2, 1},
             "betti (1,2,1)");
    const auto pic = picard_and_ample(gd, ws, ch);
    r.expect(pic.rank == 2, "picard rank 2");
    // The ample cone is the interior of the closed quadrant, read in the
    // quotient coordinates.
    std::vector<LatVec> rays;
    for (const auto& v : std::vector<LatVec>{make_vec({1, 0}), make_vec({0, 1})}) {
      LatVec q;
      for (const auto& f : pic.quotient_basis) q.push_back(dot(f, v));
      rays.push_back(q);
    }
    r.expect(pic.ample_cone == cone_of(2, rays), "ample cone closure is the quadrant");
    r.expect(pic.ample_cone.contains(pic.ample_cone.interior_point(),
                                     MembershipMode::relative_interior) &&
                 !pic.ample_cone.contains(rays[0], MembershipMode::relative_interior),
             "ample cone is open");
  });

  all &= run_criterion(3, "Hirzebruch surfaces F_1, F_2", [](Report& r) {
    for (long a : {1L, 2L}) {
      const std::string tag = "F_" + std::to_string(a) + " ";
      auto [gd, ws] = fixtures::hirzebruch(a);
      const GITFan fan = git_fan(gd, ws);
      r.expect(fan.full_dimensional().size() == 2, tag + "two chambers");
      const std::set<RatCone> walls(fan.walls.begin(), fan.walls.end());
      const std::set<RatCone> want = {cone_of(2, {make_vec({1, 0})}),
                                      cone_of(2, {make_vec({0, 1})}),
                                      cone_of(2, {make_vec({-a, 1})})};
      r.expect(walls == want, tag + "walls");
      const Chamber ch = chamber_of(gd, ws, fan, gd.character(make_vec({1, 1})));
      r.expect(to_longs(betti_numbers(chow_presentation(gd, ws, ch))) ==
                   std::vector<long>{1, 2, 1},
               tag + "betti (1,2,1)");
      for (const auto& c : ch.components) {
        r.expect(c.codim_orbit == 2 && c.codim_e == 2, tag + "component codim 2");
      }
      r.expect(picard_and_ample(gd, ws, ch).rank == 2, tag + "picard rank 2");
    }
  });

  all &= run_criterion(4, "Grassmannian Gr(2,4)", [](Report& r) {
    auto [gd, ws] = fixtures::grassmannian_24();
    const Chamber ch = chamber_for(gd, ws, make_vec({1}));
    r.expect(ch.components.size() == 1 &&
                 ch.components[0].class_t == Poly::monomial({0, 4}),
             "single component of class t2^4");
    const auto pres = chow_presentation(gd, ws, ch);
    const std::vector<Poly> classical = {oracle::complete_homogeneous(2, 3),
                                         oracle::complete_homogeneous(2, 4)};
    for (unsigned d = 0; d <= 4; ++d) {
      r.expect(oracle::same_slice(pres.ideal_t, classical, {2}, 2, d),
               "ideal differs from <h3,h4> in degree " + std::to_string(d));
    }
    r.expect(to_longs(betti_numbers(pres)) == std::vector<long>{1, 1, 2, 1, 1},
             "betti (1,1,2,1,1)");
    r.expect(picard_and_ample(gd, ws, ch).rank == 1, "picard rank 1");
  });

  all &= run_criterion(5, "weighted projective plane P(1,1,2)", [](Report& r) {
    auto [gd, ws] = fixtures::weighted_112();
    const Chamber ch = chamber_for(gd, ws, make_vec({1}));
    r.expect(to_longs(betti_numbers(chow_presentation(gd, ws, ch))) ==
                 std::vector<long>{1, 1, 1},
             "betti (1,1,1)");
  });

  all &= run_criterion(6, "GKZ chambers of 50 random 2x5 weight matrices", [](Report& r) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> entry(-3, 3);
    int done = 0, chambers = 0;
    while (done < 50) {
      std::vector<LatVec> cols;
      for (int k = 0; k < 5; ++k) cols.push_back(make_vec({entry(rng), entry(rng)}));
      if (oracle::rank_of(cols) != 2) continue;
      ++done;
      auto [gd, ws] = torus_action(cols);
      const GITFan fan = git_fan(gd, ws);
      const auto full = fan.full_dimensional();
      const auto classes = gkz_oracle(cols);
      const std::string tag = "matrix " + std::to_string(done) + ": ";
      chambers += static_cast<int>(classes.size());
      r.expect(full.size() == classes.size(),
               tag + std::to_string(full.size()) + " chambers, oracle " +
                   std::to_string(classes.size()));
      std::set<std::size_t> used;
      for (const auto& c : classes) {
        std::set<std::size_t> hit;
        for (const auto& p : c.samples) {
          for (auto i : full) {
            if (fan.fan.cones[i].contains(p, MembershipMode::relative_interior)) hit.insert(i);
          }
        }
        if (hit.size() != 1) {
          r.expect(false, tag + "oracle class spread over " + std::to_string(hit.size()) +
                              " chambers");
          continue;
        }
        const std::size_t i = *hit.begin();
        r.expect(used.insert(i).second, tag + "two oracle classes in one chamber");
        r.expect(cone_boundary(fan.fan.cones[i]) == c.boundary, tag + "chamber boundary");
      }
    }
    r.detail = std::to_string(chambers) + " oracle chambers";
  });

  all &= run_criterion(7, "property suites", [](Report& r) {
    std::mt19937_64 rng(77);
    std::map<std::string, int> cases;
    auto vec = [&](std::size_t rank, long bound) {
      return fixtures::random_lat(rng, rank, bound);
    };
    auto gens = [&](std::size_t rank) {
      std::vector<LatVec> out;
      for (int i = 0, n = rng() % 9; i < n; ++i) out.push_back(vec(rank, 5));
      return out;
    };

    for (int i = 0; i < 500; ++i) {
      const std::size_t rank = 1 + rng() % 4;
      const RatCone c = RatCone::from_rays(rank, gens(rank));
      r.expect(dual_cone(dual_cone(c)) == c, "duality involution");
      ++cases["polycone duality"];
    }
    for (int i = 0; i < 500; ++i) {
      const std::size_t rank = 1 + rng() % 4;
      const auto g = gens(rank);
      const RatCone c = RatCone::from_rays(rank, g);
      const LatVec v = vec(rank, 6);
      const auto witness = c.violated_facet(v);
      const bool inside = oracle::in_cone(g, v);
      r.expect(inside == !witness.has_value(), "Farkas completeness");
      if (witness) {
        bool sound = dot(*witness, v) < 0;
        for (const auto& x : g) sound = sound && dot(*witness, x) >= 0;
        r.expect(sound, "Farkas witness");
      }
      ++cases["polycone Farkas"];
    }

    while (cases["stability upward closure"] < 500) {
      const std::size_t rank = 1 + rng() % 3;
      auto built = fixtures::random_torus(rng, rank, 2 + rng() % 5, 3);
      if (!built) continue;
      const auto& ws = built->second;
      const LatVec chi = vec(rank, 3);
      Support s, bigger;
      for (std::size_t a = 0; a < ws.num_columns(); ++a) {
        const bool in = rng() & 1;
        if (in) s.push_back(a);
        if (in || rng() % 3 == 0) bigger.push_back(a);
      }
      const bool small_ok = support_semistable(ws, chi, s).verdict != Verdict::unstable;
      const bool big_ok = support_semistable(ws, chi, bigger).verdict != Verdict::unstable;
      r.expect(small_ok == oracle::in_cone(ws.weights(s), chi), "support verdict");
      r.expect(!small_ok || big_ok, "upward closure");
      ++cases["stability upward closure"];
    }
    while (cases["stability chamber interiors"] < 500) {
      auto built = fixtures::random_torus(rng, 2 + rng() % 2, 3 + rng() % 3, 2);
      if (!built) continue;
      const auto& [gd, ws] = *built;
      const GITFan fan = git_fan(gd, ws);
      for (std::size_t i = 0; i < fan.fan.cones.size(); ++i) {
        const RatCone& cone = fan.fan.cones[i];
        LatVec p = zero_vec(cone.rank());
        for (const auto& ray : cone.extreme_rays()) {
          p = add(p, scale(ray, Integer(long(1 + rng() % 5))));
        }
        for (const auto& l : cone.lineality_basis()) {
          p = add(p, scale(l, Integer(long(rng() % 7) - 3)));
        }
        const auto got = minimal_semistable_supports(ws, p);
        const auto& want = fan.chambers[i].semistable_supports;
        r.expect(std::set<Support>(got.begin(), got.end()) ==
                     std::set<Support>(want.begin(), want.end()),
                 "chamber interior consistency");
        r.expect(chamber_lookup(fan, gd.character(p)).cone_index == i,
                 "chamber lookup of interior point");
        ++cases["stability chamber interiors"];
      }
    }

    for (unsigned n : {2u, 3u}) {
      auto [gd, ws] = gl_std(n);
      std::vector<WeylElement> elems;
      gd.for_each_weyl([&](const WeylElement& w) { elems.push_back(w); });
      r.expect(reynolds_divided(gd, gd.discriminant()) ==
                   Poly::constant(n, Rational(gd.weyl_order())),
               "p(Delta) = |W|");
      ++cases["chowring p(Delta)=|W|"];
      for (int i = 0; i < 250; ++i) {
        const Poly f = random_poly(rng, n), g = random_poly(rng, n);
        const Poly pf = reynolds_divided(gd, f);
        bool invariant = true;
        for (const auto& w : elems) invariant = invariant && gd.apply(w, pf) == pf;
        r.expect(invariant, "invariance");
        ++cases["chowring invariance"];
        r.expect(reynolds_divided(gd, f * Rational(3) + g) ==
                     pf * Rational(3) + reynolds_divided(gd, g),
                 "linearity");
        Poly sym(n);
        for (const auto& w : elems) sym += gd.apply(w, g);
        r.expect(reynolds_divided(gd, sym * f) == sym * pf, "invariant linearity");
        ++cases["chowring linearity"];
        // Exact divisibility, checked by evaluation at a random point.
        std::vector<Rational> p;
        for (unsigned k = 0; k < n; ++k) p.push_back(Rational(long(rng() % 21) - 10));
        Rational antisym = 0;
        for (const auto& w : elems) {
          antisym += w.sign * oracle::evaluate(gd.apply(w, f), p);
        }
        r.expect(oracle::evaluate(pf, p) * oracle::evaluate(gd.discriminant(), p) == antisym,
                 "exact divisibility");
        ++cases["chowring divisibility"];
      }
    }
    for (int i = 0; i < 499; ++i) {
      auto [gd, ws] = gl_std(2 + i % 3);
      r.expect(reynolds_divided(gd, gd.discriminant()) ==
                   Poly::constant(gd.rank(), Rational(gd.weyl_order())),
               "p(Delta) = |W|");
      ++cases["chowring p(Delta)=|W|"];
    }

    std::ostringstream os;
    bool first = true;
    for (const auto& [name, n] : cases) {
      os << (first ? "" : ", ") << name << " " << n;
      first = false;
      r.expect(n >= 500, name + " ran only " + std::to_string(n) + " cases");
    }
    r.detail = os.str();
  });

  all &= run_criterion(8, "deterministic CLI output", [](Report& r) {
    const std::string data = GITFAN_DATA_DIR;
    const std::vector<std::string> commands = {
        "fan " + data + "/f1.json",
        "fan " + data + "/p2_rank3.json",
        "fan " + data + "/gr24.json",
        "chow " + data + "/gr24.json --chi det",
        "chow " + data + "/f2.json --chi 1,1",
        "betti " + data + "/f1.json --chi 1,1",
        "betti " + data + "/framed_kronecker.json --chi=-1,2",
    };
    int runs = 0;
    for (const auto& c : commands) {
      const std::string ref = run_cli("", c);
      for (int k = 0; k < 2; ++k) {
        r.expect(run_cli("", c) == ref, "repeat run differs: " + c);
        ++runs;
      }
      for (const char* t : {"GITFAN_THREADS=1", "GITFAN_THREADS=4"}) {
        r.expect(run_cli(t, c) == ref, std::string(t) + " differs: " + c);
        ++runs;
      }
    }
    r.detail = std::to_string(runs + static_cast<int>(commands.size())) + " runs";
  });

  return all ? 0 : 1;
}
