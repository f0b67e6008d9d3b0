/*
 *   Copyright 2026 The normcat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>      // for steady_clock
#include <filesystem>  // for path, temp_directory_path
#include <fstream>     // for ofstream, ifstream
#include <iomanip>     // for setw, setprecision
#include <iostream>    // for cout
#include <sstream>     // for ostringstream

#include "normcat/catcheck.hpp"
#include "normcat/cli.hpp"
#include "normcat/cones.hpp"
#include "normcat/error.hpp"
#include "normcat/generators.hpp"
#include "normcat/homorder.hpp"
#include "normcat/io.hpp"
#include "normcat/lcat.hpp"
#include "normcat/structure.hpp"

#include "support.hpp"

using namespace normcat;
namespace fs = std::filesystem;

namespace {
  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  bool all_ok = true;

  void report(int number, bool ok, std::string const& what, std::string const& detail) {
    all_ok = all_ok && ok;
    std::cout << "criterion " << std::setw(2) << number << ": " << (ok ? "PASS" : "FAIL") << "  "
              << what << " (" << detail << ")" << std::endl;
  }

  //! Counts failing claims among the given ids over every cached report.
  struct ClaimTally {
    std::size_t instances = 0;
    std::size_t failures  = 0;
  };

  std::vector<Band> const& normal_corpus() {
    return corpus::normal_bands();
  }

  std::vector<VerificationReport> const& order_reports() {
    static std::vector<VerificationReport> const reports = [] {
      std::vector<VerificationReport> out;
      for (auto const& b : normal_corpus()) {
        out.push_back(verify_order_theorems(build_category(b)));
      }
      return out;
    }();
    return reports;
  }

  ClaimTally tally(std::vector<std::string> const& ids) {
    ClaimTally t;
    for (auto const& r : order_reports()) {
      for (auto const& id : ids) {
        Claim const* c = r.find(id);
        if (c == nullptr || c->status == ClaimStatus::fail) {
          ++t.failures;
        }
        if (c != nullptr) {
          t.instances += c->checked;
        }
      }
    }
    return t;
  }

  std::string tally_text(ClaimTally const& t) {
    return std::to_string(t.instances) + " instances, " + std::to_string(t.failures)
           + " failing claims";
  }

  void criterion_1() {
    auto        t0 = Clock::now();
    bool        ok = true;
    std::string counts;
    std::vector<EnumerationResult> results;
    for (std::size_t n = 1; n <= 4; ++n) {
      results.push_back(enumerate_bands(n, BandFilter::all));
      results.push_back(enumerate_bands(n, BandFilter::normal));
    }
    double enum_seconds = seconds_since(t0);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto expected = oracle::brute_force(n);
      auto const& all    = results[2 * (n - 1)];
      auto const& normal = results[2 * (n - 1) + 1];
      ok = ok && all.bands.size() == expected.all && normal.bands.size() == expected.normal;
      counts += (n > 1 ? ", " : "") + std::to_string(all.bands.size()) + "/"
                + std::to_string(normal.bands.size());
    }
    ok = ok && enum_seconds < 60;
    std::ostringstream detail;
    detail << "all/normal by order 1..4: " << counts << "; enumeration " << std::fixed
           << std::setprecision(3) << enum_seconds << " s";
    report(1, ok, "enumeration counts equal the brute-force oracle", detail.str());
  }

  void criterion_2() {
    std::size_t mismatches = 0, roundtrips = 0, bad_roundtrips = 0, rejected = 0, leaked = 0;
    for (auto const& b : corpus::small_bands()) {
      auto t = oracle::table_of(b);
      mismatches += oracle::normal(t) != oracle::medial(t);
      mismatches += normality_witness(b).has_value() != medial_witness(b).has_value();
      mismatches += is_normal(b) != oracle::normal(t);
      if (oracle::normal(t)) {
        ++roundtrips;
        try {
          bad_roundtrips += !(compose(decompose(b)) == b);
        } catch (Error const&) {
          ++bad_roundtrips;
        }
      } else {
        try {
          decompose(b);
          ++leaked;
        } catch (Error const& e) {
          rejected += e.kind() == ErrorKind::NotNormal;
          leaked += e.kind() != ErrorKind::NotNormal;
        }
      }
    }
    report(2,
           mismatches == 0 && bad_roundtrips == 0 && leaked == 0,
           "identities agree; decompose/compose round trip; non-normal rejected",
           std::to_string(mismatches) + " mismatches, " + std::to_string(roundtrips - bad_roundtrips)
               + "/" + std::to_string(roundtrips) + " round trips, " + std::to_string(rejected)
               + " rejected");
  }

  void criterion_3() {
    auto        t        = tally({"01_hom_partial_order"});
    std::size_t homsets  = 0;
    std::size_t bad      = 0;
    for (auto const& b : normal_corpus()) {
      LCategory c = build_category(b);
      for (auto const& x : c.objects()) {
        for (auto const& y : c.objects()) {
          try {
            hom_poset(c, x, y);
            ++homsets;
          } catch (Error const&) {
            ++bad;
          }
        }
      }
    }
    report(3,
           t.failures == 0 && bad == 0,
           "hom-set order is a partial order",
           std::to_string(homsets) + " hom-sets, " + tally_text(t));
  }

  void criterion_4() {
    auto        t     = tally({"03_exact_maximum"});
    std::size_t pairs = 0, bad = 0;
    for (auto const& b : normal_corpus()) {
      LCategory c  = build_category(b);
      auto      tb = oracle::table_of(b);
      for (auto const& x : c.objects()) {
        for (auto const& y : c.objects()) {
          auto              mids = oracle::sandwich(tb, x.rep, y.rep);
          std::vector<Elem> tops;
          for (Elem u : mids) {
            if (std::all_of(mids.begin(), mids.end(), [&](Elem v) { return oracle::leq(tb, v, u); })) {
              tops.push_back(u);
            }
          }
          Morphism m = hom_maximum(c, x, y);
          bad += !(tops.size() == 1 && m.mid == tops[0] && m.mid == b(x.rep, y.rep));
        }
      }
      for (Elem a = 0; a < b.size(); ++a) {
        for (Elem d = 0; d < b.size(); ++d) {
          ++pairs;
          auto              s = oracle::sandwich(tb, a, d);
          auto              r = omega_right(b, a), l = omega_left(b, d);
          std::vector<Elem> both;
          std::set_intersection(r.begin(), r.end(), l.begin(), l.end(), std::back_inserter(both));
          bad += !(s == both && s == downset(b, b(a, d)));
        }
      }
    }
    report(4,
           t.failures == 0 && bad == 0,
           "hom-set maximum is rho(a, ab, b); aBb = omega_r(a) & omega_l(b) = downset(ab)",
           std::to_string(pairs) + " element pairs, " + std::to_string(bad) + " mismatches, "
               + tally_text(t));
  }

  void criterion_5() {
    auto t = tally({"02_compatibility",
                    "04_iso_transport",
                    "05_inclusion_transport",
                    "06_retraction_transport",
                    "07_epimorphic_transport"});
    report(5, t.failures == 0, "compatibility and transport of maxima", tally_text(t));
  }

  void criterion_6() {
    auto        t     = tally({"08_principal_cone_maximum"});
    std::size_t cones = 0, bad = 0;
    for (auto const& b : normal_corpus()) {
      LCategory c = build_category(b);
      for (Elem a = 0; a < b.size(); ++a) {
        Cone p = principal_cone(c, a);
        ++cones;
        bool ok = is_normal_cone(c, p) && is_strong_cone(c, p);
        for (std::size_t x = 0; x < c.object_count(); ++x) {
          ok = ok && p.components[x] == hom_maximum(c, c.objects()[x], c.object_of(a));
        }
        bad += !ok;
      }
    }
    report(6,
           t.failures == 0 && bad == 0,
           "principal cones are normal, strong and made of maxima",
           std::to_string(cones) + " cones, " + std::to_string(bad) + " bad, " + tally_text(t));
  }

  void criterion_7() {
    auto        t         = tally({"09_order_iff_image"});
    std::size_t morphisms = 0, bad = 0;
    for (auto const& b : normal_corpus()) {
      LCategory c = build_category(b);
      for (std::size_t i = 0; i < c.object_count(); ++i) {
        for (std::size_t j = 0; j < c.object_count(); ++j) {
          for (auto const& m : c.hom(i, j)) {
            ++morphisms;
            try {
              auto f  = normal_factorization(c, m);
              bool ok = compose(c, {f.retraction, f.isomorphism, f.inclusion}) == m
                        && f.isomorphism.dom == c.object_of(b(m.mid, m.dom)).rep
                        && f.isomorphism.cod == c.object_of(b(m.cod, m.mid)).rep;
              auto all = all_factorizations(c, m);
              ok       = ok && !all.empty();
              for (auto const& g : all) {
                ok = ok && g.inclusion == f.inclusion
                     && compose(c, g.retraction, g.isomorphism)
                            == compose(c, f.retraction, f.isomorphism);
              }
              bad += !ok;
            } catch (Error const&) {
              ++bad;
            }
          }
        }
      }
    }
    report(7,
           t.failures == 0 && bad == 0,
           "order iff image inclusion; closed-form factorization is the unique one",
           std::to_string(morphisms) + " morphisms, " + std::to_string(bad) + " bad, "
               + tally_text(t));
  }

  void criterion_8() {
    std::size_t passed = 0, total = 0;
    for (auto const& b : normal_corpus()) {
      ++total;
      try {
        auto p = export_presentation(build_category(b));
        passed += check_normal_category(p).all_pass() && check_sc(p).all_pass()
                  && check_unique_factorization(p).all_pass();
      } catch (Error const&) {
      }
    }
    std::size_t        surveyed = 0, sc_pass = 0, errors = 0;
    std::ostringstream survey;
    for (auto const& b : corpus::small_bands()) {
      if (b.normal()) {
        continue;
      }
      ++surveyed;
      survey << "  survey order " << b.size() << " hash " << std::hex << b.fingerprint()
             << std::dec << ":";
      try {
        auto p  = export_presentation(build_category(b));
        auto nc = check_normal_category(p);
        auto sc = check_sc(p);
        for (auto const* r : {&nc, &sc}) {
          for (auto const& c : r->claims) {
            survey << " " << c.id.substr(0, c.id.find('_')) << "=" << to_string(c.status);
          }
        }
        sc_pass += sc.all_pass();
      } catch (Error const& e) {
        ++errors;
        survey << " " << e.what();
      }
      survey << "\n";
    }
    report(8,
           passed == total,
           "presentations of L(B) pass the normal category and SC checks",
           std::to_string(passed) + "/" + std::to_string(total) + " normal bands; survey of "
               + std::to_string(surveyed) + " non-normal bands: " + std::to_string(sc_pass)
               + " satisfy SC1-SC3, " + std::to_string(errors) + " errors");
    std::cout << survey.str();
  }

  std::string cli_output(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  }

  std::string directory_contents(fs::path const& dir) {
    std::vector<fs::path> files;
    for (auto const& e : fs::directory_iterator(dir)) {
      files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::string all;
    for (auto const& f : files) {
      std::ifstream      in(f, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      all += f.filename().string() + "\n" + buf.str();
    }
    return all;
  }

  void criterion_9() {
    fs::path const tmp = fs::temp_directory_path() / "normcat_acceptance";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    std::size_t runs = 0, differing = 0;
    std::vector<Band> inputs{fixture_n5(), chain(4)};
    inputs.insert(inputs.end(), corpus::random_bands().begin(), corpus::random_bands().begin() + 5);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      fs::path file = tmp / ("input_" + std::to_string(i) + ".band");
      std::ofstream(file, std::ios::binary) << serialize_band(inputs[i]);
      for (bool as_json : {false, true}) {
        std::vector<std::string> args{"verify", file.string()};
        if (as_json) {
          args.push_back("--json");
        }
        ++runs;
        differing += cli_output(args) != cli_output(args);
      }
    }
    for (std::string order : {"3", "4"}) {
      for (bool normal : {false, true}) {
        std::vector<std::string> args{"enumerate", "--order", order};
        if (normal) {
          args.push_back("--normal");
        }
        auto first_dir = args, second_dir = args;
        first_dir.insert(first_dir.end(), {"--out", (tmp / "a").string()});
        second_dir.insert(second_dir.end(), {"--out", (tmp / "b").string()});
        std::string a = cli_output(first_dir), b = cli_output(second_dir);
        ++runs;
        differing += a != b || directory_contents(tmp / "a") != directory_contents(tmp / "b");
        ++runs;
        differing += cli_output(args) != cli_output(args);
        fs::remove_all(tmp / "a");
        fs::remove_all(tmp / "b");
      }
    }
    fs::remove_all(tmp);
    report(9,
           differing == 0,
           "verify and enumerate are byte-identical across runs",
           std::to_string(runs) + " paired runs, " + std::to_string(differing) + " differing");
  }
}  // namespace

int main() {
  auto t0 = Clock::now();
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
  } catch (std::exception const& e) {
    std::cout << "aborted: " << e.what() << std::endl;
    all_ok = false;
  }
  double             total = seconds_since(t0);
  std::ostringstream detail;
  detail << std::fixed << std::setprecision(2) << total << " s for criteria 1-9, order 5 excluded";
  report(10, all_ok && total < 300, "full suite within five minutes", detail.str());
  return all_ok ? 0 : 1;
}
