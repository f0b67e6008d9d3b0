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

#include "normcat/cli.hpp"

#include <algorithm>   // for reverse
#include <cstdlib>     // for getenv
#include <filesystem>  // for path, create_directories
#include <fstream>     // for ifstream, ofstream
#include <iomanip>     // for setw, setfill
#include <optional>    // for optional
#include <sstream>     // for ostringstream

#include "CLI11.hpp"
#include "json.hpp"

#include "normcat/band.hpp"
#include "normcat/catcheck.hpp"
#include "normcat/cones.hpp"
#include "normcat/error.hpp"
#include "normcat/generators.hpp"
#include "normcat/homorder.hpp"
#include "normcat/io.hpp"
#include "normcat/lcat.hpp"
#include "normcat/structure.hpp"

namespace normcat {

  using nlohmann::json;

  namespace {
    constexpr int exit_ok     = 0;
    constexpr int exit_failed = 1;
    constexpr int exit_input  = 2;

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    json read_json(std::string const& path) {
      try {
        return json::parse(read_file(path));
      } catch (json::parse_error const& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
      }
    }

    Band read_band(std::string const& path) {
      return parse_band(read_file(path));
    }

    std::size_t cone_budget() {
      char const* env = std::getenv("NORMCAT_BUDGET");
      if (env == nullptr) {
        return default_cone_budget;
      }
      try {
        std::size_t used  = 0;
        auto        value = std::stoull(env, &used);
        if (used == std::string(env).size() && value > 0) {
          return value;
        }
      } catch (std::exception const&) {
      }
      throw Error(ErrorKind::ParseError, "NORMCAT_BUDGET must be a positive integer");
    }

    Elem element_arg(Band const& b, Elem x, char const* what) {
      if (x >= b.size()) {
        throw Error(ErrorKind::MalformedData,
                    std::string(what) + " " + std::to_string(x) + " is not an element");
      }
      return x;
    }

    std::string set_text(std::vector<Elem> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? " " : "") + std::to_string(xs[i]);
      }
      return out + "}";
    }

    json factorization_json(Morphism const& m, Factorization const& f) {
      return {{"morphism", to_json(m)},
              {"retraction", to_json(f.retraction)},
              {"isomorphism", to_json(f.isomorphism)},
              {"inclusion", to_json(f.inclusion)}};
    }

    struct CategoryArgs {
      std::string           file;
      std::vector<Elem>     hom;
      bool                  factorize    = false;
      bool                  as_json      = false;
      bool                  presentation = false;
    };

    int cmd_category(CategoryArgs const& a, std::ostream& out) {
      LCategory c = build_category(read_band(a.file));
      if (a.presentation) {
        out << presentation_to_json(export_presentation(c)).dump(2) << "\n";
        return exit_ok;
      }
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      if (!a.hom.empty()) {
        pairs.emplace_back(c.index_of(element_arg(c.band(), a.hom[0], "--hom")),
                           c.index_of(element_arg(c.band(), a.hom[1], "--hom")));
      } else {
        for (std::size_t i = 0; i < c.object_count(); ++i) {
          for (std::size_t j = 0; j < c.object_count(); ++j) {
            pairs.emplace_back(i, j);
          }
        }
      }
      std::vector<std::pair<Morphism, Factorization>> factors;
      if (a.factorize) {
        for (auto [i, j] : pairs) {
          for (auto const& m : c.hom(i, j)) {
            factors.emplace_back(m, normal_factorization(c, m));
          }
        }
      }

      if (a.as_json) {
        json j;
        j["objects"] = json::array();
        for (auto const& o : c.objects()) {
          j["objects"].push_back({{"rep", o.rep}, {"carrier", o.carrier}});
        }
        j["homs"] = json::array();
        for (auto [i, k] : pairs) {
          std::vector<Elem> mids;
          for (auto const& m : c.hom(i, k)) {
            mids.push_back(m.mid);
          }
          j["homs"].push_back(
              {{"dom", c.objects()[i].rep}, {"cod", c.objects()[k].rep}, {"mids", mids}});
        }
        if (a.factorize) {
          j["factorizations"] = json::array();
          for (auto const& [m, f] : factors) {
            j["factorizations"].push_back(factorization_json(m, f));
          }
        }
        out << j.dump(2) << "\n";
        return exit_ok;
      }

      out << "objects " << c.object_count() << "\n";
      for (auto const& o : c.objects()) {
        out << "  B" << o.rep << " = " << set_text(o.carrier) << "\n";
      }
      out << "homs\n";
      for (auto [i, k] : pairs) {
        std::vector<Elem> mids;
        for (auto const& m : c.hom(i, k)) {
          mids.push_back(m.mid);
        }
        out << "  B" << c.objects()[i].rep << " -> B" << c.objects()[k].rep << ": "
            << set_text(mids) << "\n";
      }
      if (a.factorize) {
        out << "factorizations\n";
        for (auto const& [m, f] : factors) {
          out << "  " << to_string(m) << " = " << to_string(f.retraction) << " ; "
              << to_string(f.isomorphism) << " ; " << to_string(f.inclusion) << "\n";
        }
      }
      return exit_ok;
    }

    int cmd_cones(std::string const& file,
                  Elem               vertex,
                  std::string const& mode_name,
                  bool               as_json,
                  std::ostream&      out) {
      static std::map<std::string, ConeMode> const modes{
          {"all", ConeMode::all}, {"normal", ConeMode::normal}, {"strong", ConeMode::strong}};
      ConeMode const  mode   = modes.at(mode_name);
      std::size_t const budget = cone_budget();
      LCategory       c      = build_category(read_band(file));
      LObject const&  v      = c.object_of(element_arg(c.band(), vertex, "--vertex"));
      auto            cones  = enumerate_cones(c, v, mode, budget);
      if (as_json) {
        json j = {{"vertex", v.rep},
                  {"mode", std::string(to_string(mode))},
                  {"count", cones.size()},
                  {"cones", json::array()}};
        for (auto const& cone : cones) {
          j["cones"].push_back(to_json(c, cone));
        }
        out << j.dump(2) << "\n";
        return exit_ok;
      }
      out << cones.size() << " " << to_string(mode) << " cones with vertex B" << v.rep << "\n";
      for (auto const& cone : cones) {
        out << " ";
        for (std::size_t i = 0; i < c.object_count(); ++i) {
          out << " B" << c.objects()[i].rep << ":" << cone.components[i].mid;
        }
        out << "\n";
      }
      return exit_ok;
    }

    int cmd_compose(std::string const& file, std::ostream& out) {
      auto data = ssl_from_json(read_json(file));
      Band b    = compose(data);
      for (auto const& comp : data.components) {
        out << "# component " << comp.alpha << ": " << set_text(comp.members) << "\n";
      }
      out << serialize_band(b);
      return exit_ok;
    }

    struct EnumerateArgs {
      std::size_t order        = 0;
      bool        normal_only  = false;
      std::string out_dir;
      bool        allow_order5 = false;
      std::size_t threads      = 1;
    };

    int cmd_enumerate(EnumerateArgs const& a, std::ostream& out) {
      EnumerationOptions options;
      options.cap     = a.allow_order5 ? 5 : 4;
      options.threads = a.threads;
      BandFilter const filter = a.normal_only ? BandFilter::normal : BandFilter::all;
      auto             result = enumerate_bands(a.order, filter, options);

      auto file_name = [](std::size_t i) {
        std::ostringstream name;
        name << "band_" << std::setw(4) << std::setfill('0') << i << ".band";
        return name.str();
      };
      if (!a.out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(a.out_dir);
        json manifest = {{"order", result.order},
                         {"filter", std::string(to_string(filter))},
                         {"count", result.bands.size()},
                         {"labelled", result.labelled},
                         {"files", json::array()}};
        for (std::size_t i = 0; i < result.bands.size(); ++i) {
          std::ofstream(fs::path(a.out_dir) / file_name(i), std::ios::binary)
              << serialize_band(result.bands[i]);
          manifest["files"].push_back(file_name(i));
        }
        std::ofstream(fs::path(a.out_dir) / "manifest.json", std::ios::binary)
            << manifest.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < result.bands.size(); ++i) {
          out << "# " << file_name(i) << "\n" << serialize_band(result.bands[i]);
        }
      }
      out << "# order " << result.order << ", filter " << to_string(filter) << ": "
          << result.bands.size() << " bands up to isomorphism, " << result.labelled
          << " labelled\n";
      return exit_ok;
    }

    struct GenArgs {
      std::string   kind;
      std::size_t   n             = 2;
      std::size_t   rows          = 2;
      std::size_t   cols          = 2;
      std::size_t   depth         = 3;
      std::size_t   max_component = 4;
      std::uint64_t seed          = 0;
    };

    int cmd_gen(GenArgs const& a, std::ostream& out) {
      std::optional<Band> b;
      if (a.kind == "left_zero") {
        b = left_zero(a.n);
      } else if (a.kind == "right_zero") {
        b = right_zero(a.n);
      } else if (a.kind == "rectangular") {
        b = rectangular(a.rows, a.cols);
      } else if (a.kind == "chain") {
        b = chain(a.n);
      } else if (a.kind == "n5") {
        b = fixture_n5();
      } else {
        b = random_normal_band(a.depth, a.max_component, a.seed);
      }
      out << serialize_band(*b);
      return exit_ok;
    }

    int report_exit(VerificationReport const& r, bool as_json, std::ostream& out) {
      out << render_report(r, as_json ? ReportFormat::json : ReportFormat::text);
      return r.all_pass() ? exit_ok : exit_failed;
    }

    std::vector<std::string> split_claims(std::string const& s) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) {
          end = s.size();
        }
        if (end > start) {
          out.push_back(s.substr(start, end - start));
        }
        start = end + 1;
      }
      return out;
    }

    //! Kinds raised when a checked theorem or structural invariant fails
    //! rather than because the input was bad.
    bool is_verification_failure(ErrorKind k) {
      return k == ErrorKind::InternalInconsistency
             || k == ErrorKind::FactorizationInvariantViolated
             || k == ErrorKind::RoundtripMismatch;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal bands, their categories of principal left ideals and the "
                 "order on hom-sets.",
                 "normcat"};
    app.require_subcommand(1, 1);

    std::string file;

    auto* check = app.add_subcommand("check", "Check the band axioms and normality");
    check->add_option("FILE", file, ".band file")->required();

    auto* decomp = app.add_subcommand(
        "decompose", "Print a normal band as a strong semilattice of rectangular bands");
    decomp->add_option("FILE", file, ".band file")->required();

    auto* comp = app.add_subcommand("compose", "Build a band from a strong semilattice");
    comp->add_option("FILE", file, ".ssl.json file")->required();

    CategoryArgs cat_args;
    auto*        category = app.add_subcommand("category", "Describe L(B)");
    category->add_option("FILE", cat_args.file, ".band file")->required();
    category->add_option("--hom", cat_args.hom, "Only the hom-set from Ba to Bb")
        ->expected(2);
    category->add_flag("--factorize", cat_args.factorize, "Factorize every listed morphism");
    category->add_flag("--json", cat_args.as_json, "JSON output");
    category->add_flag("--presentation",
                       cat_args.presentation,
                       "Print L(B) as a finite category presentation");

    Elem        vertex    = 0;
    std::string cone_mode = "normal";
    bool        as_json   = false;
    auto*       cones     = app.add_subcommand("cones", "Enumerate cones with a given vertex");
    cones->add_option("FILE", file, ".band file")->required();
    cones->add_option("--vertex", vertex, "Element v; the vertex is Bv")->required();
    cones->add_option("--mode", cone_mode, "all, normal or strong")
        ->check(CLI::IsMember({"all", "normal", "strong"}));
    cones->add_flag("--json", as_json, "JSON output");

    std::string claims;
    auto*       verify = app.add_subcommand("verify", "Check the hom-set order claims");
    verify->add_option("FILE", file, ".band file")->required();
    verify->add_option("--claims", claims, "Comma-separated claim ids or numbers");
    verify->add_flag("--json", as_json, "JSON output");

    auto* catcheck = app.add_subcommand(
        "catcheck", "Check the normal category axioms and SC1-SC3 on a presentation");
    catcheck->add_option("FILE", file, "presentation .json file")->required();
    catcheck->add_flag("--json", as_json, "JSON output");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate bands up to isomorphism");
    enumerate->add_option("--order", enum_args.order, "Order n")->required();
    enumerate->add_flag("--normal", enum_args.normal_only, "Normal bands only");
    enumerate->add_option("--out", enum_args.out_dir, "Write .band files and manifest.json");
    enumerate->add_flag("--allow-order5", enum_args.allow_order5, "Permit n = 5");
    enumerate->add_option("--threads", enum_args.threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    GenArgs gen_args;
    auto*   gen = app.add_subcommand("gen", "Print a fixture or seeded random normal band");
    gen->add_option("--kind", gen_args.kind, "left_zero, right_zero, rectangular, chain, n5, random")
        ->required()
        ->check(CLI::IsMember({"left_zero", "right_zero", "rectangular", "chain", "n5", "random"}));
    gen->add_option("--n", gen_args.n, "Order for left_zero, right_zero and chain");
    gen->add_option("--rows", gen_args.rows, "Rows for rectangular");
    gen->add_option("--cols", gen_args.cols, "Columns for rectangular");
    gen->add_option("--depth", gen_args.depth, "Chain length for random");
    gen->add_option("--max-component", gen_args.max_component, "Largest component for random");
    gen->add_option("--seed", gen_args.seed, "Seed for random");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n" << app.help();
      return exit_input;
    }

    try {
      if (check->parsed()) {
        Band b = read_band(file);
        out << "band: ok, normal: " << (is_normal(b) ? "yes" : "no") << "\n";
        return exit_ok;
      }
      if (decomp->parsed()) {
        out << ssl_to_json(decompose(read_band(file))).dump(2) << "\n";
        return exit_ok;
      }
      if (comp->parsed()) {
        return cmd_compose(file, out);
      }
      if (category->parsed()) {
        return cmd_category(cat_args, out);
      }
      if (cones->parsed()) {
        return cmd_cones(file, vertex, cone_mode, as_json, out);
      }
      if (verify->parsed()) {
        LCategory c = build_category(read_band(file));
        return report_exit(verify_order_theorems(c, split_claims(claims)), as_json, out);
      }
      if (catcheck->parsed()) {
        auto p      = presentation_from_json(read_json(file));
        auto report = check_normal_category(p, cone_budget());
        auto sc     = check_sc(p, cone_budget());
        report.claims.insert(report.claims.end(), sc.claims.begin(), sc.claims.end());
        return report_exit(report, as_json, out);
      }
      if (enumerate->parsed()) {
        return cmd_enumerate(enum_args, out);
      }
      return cmd_gen(gen_args, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return is_verification_failure(e.kind()) ? exit_failed : exit_input;
    } catch (std::filesystem::filesystem_error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input;
    }
  }

}  // namespace normcat
