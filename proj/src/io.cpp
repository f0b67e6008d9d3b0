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

#include "normcat/io.hpp"

#include <algorithm>  // for all_of, max
#include <cctype>     // for isdigit, isspace
#include <cstdio>     // for snprintf
#include <sstream>    // for ostringstream

#include "normcat/error.hpp"

namespace normcat {

  using nlohmann::json;

  namespace {
    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i > start) {
          out.push_back({std::string(line.substr(start, i - start)), start + 1});
        }
      }
      return out;
    }

    [[noreturn]] void parse_error(std::size_t line, std::size_t column, std::string const& why) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line) + ", column " + std::to_string(column) + ": "
                      + why);
    }

    std::size_t decimal(Token const& t, std::size_t line) {
      if (t.text.empty() || t.text.size() > 9
          || !std::all_of(t.text.begin(), t.text.end(), [](unsigned char ch) {
               return std::isdigit(ch);
             })) {
        parse_error(line, t.column, "expected a decimal id, got '" + t.text + "'");
      }
      return std::stoul(t.text);
    }

    [[noreturn]] void malformed(std::string const& why) {
      throw Error(ErrorKind::MalformedData, why);
    }

    std::size_t get_size(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned()) {
        malformed(std::string("expected non-negative integer '") + key + "'");
      }
      return j[key].get<std::size_t>();
    }

    std::vector<std::vector<Elem>> get_rows(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
        malformed(std::string("expected array '") + key + "'");
      }
      try {
        return j[key].get<std::vector<std::vector<Elem>>>();
      } catch (json::exception const&) {
        malformed(std::string("'") + key + "' is not an array of id rows");
      }
    }

    std::vector<std::size_t> get_ids(json const& j, char const* key) {
      try {
        return j.at(key).get<std::vector<std::size_t>>();
      } catch (json::exception const&) {
        malformed(std::string("'") + key + "' is not an array of ids");
      }
    }

    std::vector<Elem> flatten(std::vector<std::vector<Elem>> const& rows, std::size_t n) {
      std::vector<Elem> out;
      if (rows.size() != n) {
        throw Error(ErrorKind::MalformedTable, "expected " + std::to_string(n) + " rows");
      }
      for (auto const& r : rows) {
        if (r.size() != n) {
          throw Error(ErrorKind::MalformedTable, "row of wrong length");
        }
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }

    json rows_json(std::vector<Elem> const& flat, std::size_t n) {
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(std::vector<Elem>(flat.begin() + i * n, flat.begin() + (i + 1) * n));
      }
      return rows;
    }

    [[noreturn]] void bad_presentation(std::string const& why) {
      throw Error(ErrorKind::PresentationInvalid, why);
    }

    std::pair<std::size_t, std::size_t> pair_key(std::string const& key) {
      auto comma = key.find(',');
      try {
        if (comma == std::string::npos) {
          throw std::invalid_argument(key);
        }
        std::size_t used1 = 0, used2 = 0;
        auto        a = std::stoul(key.substr(0, comma), &used1);
        auto        b = std::stoul(key.substr(comma + 1), &used2);
        if (used1 != comma || used2 != key.size() - comma - 1) {
          throw std::invalid_argument(key);
        }
        return {a, b};
      } catch (std::exception const&) {
        bad_presentation("key '" + key + "' is not of the form \"a,b\"");
      }
    }

    std::size_t index_key(std::string const& key) {
      try {
        std::size_t used = 0;
        auto        v    = std::stoul(key, &used);
        if (used != key.size()) {
          throw std::invalid_argument(key);
        }
        return v;
      } catch (std::exception const&) {
        bad_presentation("key '" + key + "' is not an id");
      }
    }

    std::size_t as_id(json const& j, std::string const& what) {
      if (!j.is_number_unsigned()) {
        bad_presentation(what + " is not a non-negative integer");
      }
      return j.get<std::size_t>();
    }

    std::string hex(std::uint64_t v) {
      char buf[19];
      std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
      return buf;
    }

    std::string witness_text(Witness const& w) {
      std::string out = w.description;
      if (!w.elements.empty()) {
        out += " [";
        for (std::size_t i = 0; i < w.elements.size(); ++i) {
          out += (i ? " " : "") + std::to_string(w.elements[i]);
        }
        out += "]";
      }
      for (auto const& m : w.morphisms) {
        out += " " + to_string(Morphism{m[0], m[1], m[2]});
      }
      return out;
    }
  }  // namespace

  Band parse_band(std::string_view text) {
    enum class Stage { header, order, table_kw, rows, done } stage = Stage::header;
    std::size_t       n = 0;
    std::vector<Elem> flat;
    std::size_t       line_no = 0;
    std::size_t       start   = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(start, end - start);
      start                 = end + 1;
      ++line_no;
      auto tokens = tokenize(line);
      if (tokens.empty() || tokens[0].text[0] == '#') {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      switch (stage) {
        case Stage::header:
          if (tokens.size() != 2 || tokens[0].text != "band" || tokens[1].text != "v1") {
            parse_error(line_no, tokens[0].column, "expected 'band v1'");
          }
          stage = Stage::order;
          break;
        case Stage::order:
          if (tokens.size() != 2 || tokens[0].text != "n") {
            parse_error(line_no, tokens[0].column, "expected 'n <order>'");
          }
          n = decimal(tokens[1], line_no);
          if (n == 0) {
            parse_error(line_no, tokens[1].column, "order must be positive");
          }
          stage = Stage::table_kw;
          break;
        case Stage::table_kw:
          if (tokens.size() != 1 || tokens[0].text != "table") {
            parse_error(line_no, tokens[0].column, "expected 'table'");
          }
          stage = Stage::rows;
          break;
        case Stage::rows:
          if (tokens.size() != n) {
            parse_error(line_no,
                        tokens.back().column,
                        "row has " + std::to_string(tokens.size()) + " entries, expected "
                            + std::to_string(n));
          }
          for (auto const& t : tokens) {
            flat.push_back(decimal(t, line_no));
          }
          if (flat.size() == n * n) {
            stage = Stage::done;
          }
          break;
        case Stage::done:
          parse_error(line_no, tokens[0].column, "unexpected content after the table");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (stage != Stage::done) {
      parse_error(line_no, 1, "unexpected end of input");
    }
    return Band::from_flat(n, std::move(flat));
  }

  std::string serialize_band(Band const& b) {
    std::ostringstream out;
    out << "band v1\nn " << b.size() << "\ntable\n";
    for (Elem x = 0; x < b.size(); ++x) {
      for (Elem y = 0; y < b.size(); ++y) {
        out << (y ? " " : "") << b(x, y);
      }
      out << "\n";
    }
    return out.str();
  }

  StrongSemilatticeData ssl_from_json(json const& j) {
    if (!j.is_object() || !j.contains("semilattice") || !j.contains("components")) {
      malformed("expected keys 'semilattice' and 'components'");
    }
    json const&       sj = j["semilattice"];
    std::size_t const k  = get_size(sj, "n");
    Band gamma = Band::from_flat(k, flatten(get_rows(sj, "table"), k));

    StrongSemilatticeData data{std::move(gamma), {}, {}};
    if (!j["components"].is_array()) {
      malformed("'components' is not an array");
    }
    Elem next = 0;
    for (json const& cj : j["components"]) {
      std::size_t const alpha = get_size(cj, "alpha");
      std::size_t const size  = get_size(cj, "size");
      Component         c{alpha, {}, flatten(get_rows(cj, "table"), size)};
      if (cj.contains("members")) {
        c.members = get_ids(cj, "members");
        if (c.members.size() != size) {
          malformed("'members' has wrong length");
        }
      } else {
        for (std::size_t i = 0; i < size; ++i) {
          c.members.push_back(next + i);
        }
      }
      next += size;
      data.components.push_back(std::move(c));
    }
    if (j.contains("homs")) {
      if (!j["homs"].is_array()) {
        malformed("'homs' is not an array");
      }
      for (json const& hj : j["homs"]) {
        auto key = std::make_pair(get_size(hj, "from"), get_size(hj, "to"));
        if (!data.homs.emplace(key, get_ids(hj, "map")).second) {
          malformed("repeated map");
        }
      }
    }
    return data;
  }

  json ssl_to_json(StrongSemilatticeData const& data) {
    json out;
    std::size_t const k = data.semilattice.size();
    out["semilattice"]  = {{"n", k},
                           {"table",
                           rows_json({data.semilattice.table().begin(),
                                      data.semilattice.table().end()},
                                     k)}};
    out["components"]   = json::array();
    for (auto const& c : data.components) {
      out["components"].push_back({{"alpha", c.alpha},
                                   {"size", c.size()},
                                   {"table", rows_json(c.table, c.size())},
                                   {"members", c.members}});
    }
    out["homs"] = json::array();
    for (auto const& [key, map] : data.homs) {
      out["homs"].push_back({{"from", key.first}, {"to", key.second}, {"map", map}});
    }
    return out;
  }

  FiniteCategoryPresentation presentation_from_json(json const& j) {
    for (char const* key : {"objects", "morphisms", "identities", "inclusions", "compose"}) {
      if (!j.is_object() || !j.contains(key)) {
        bad_presentation(std::string("missing key '") + key + "'");
      }
    }
    if (!j["objects"].is_array() || !j["morphisms"].is_array()) {
      bad_presentation("'objects' and 'morphisms' must be arrays");
    }
    std::size_t const k = j["objects"].size();
    std::size_t const m = j["morphisms"].size();

    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
    std::vector<bool>              seen(k);
    for (json const& o : j["objects"]) {
      if (!o.is_object() || !o.contains("id") || !o.contains("leq") || !o["leq"].is_array()) {
        bad_presentation("object entries need 'id' and 'leq'");
      }
      std::size_t const id = as_id(o["id"], "object id");
      if (id >= k || seen[id]) {
        bad_presentation("object ids must be 0.." + std::to_string(k - 1));
      }
      seen[id] = true;
      for (json const& b : o["leq"]) {
        std::size_t const up = as_id(b, "leq entry");
        if (up >= k) {
          bad_presentation("leq entry " + std::to_string(up) + " is not an object");
        }
        leq[id][up] = true;
      }
    }

    std::vector<FiniteCategoryPresentation::Arrow> arrows(m);
    std::vector<bool>                              seen_m(m);
    for (json const& f : j["morphisms"]) {
      if (!f.is_object() || !f.contains("id") || !f.contains("dom") || !f.contains("cod")) {
        bad_presentation("morphism entries need 'id', 'dom' and 'cod'");
      }
      std::size_t const id = as_id(f["id"], "morphism id");
      if (id >= m || seen_m[id]) {
        bad_presentation("morphism ids must be 0.." + std::to_string(m - 1));
      }
      seen_m[id] = true;
      arrows[id] = {as_id(f["dom"], "dom"), as_id(f["cod"], "cod")};
    }

    if (!j["identities"].is_object() || !j["inclusions"].is_object()
        || !j["compose"].is_object()) {
      bad_presentation("'identities', 'inclusions' and 'compose' must be objects");
    }
    std::vector<std::size_t> identities(k, m);
    for (auto const& [key, value] : j["identities"].items()) {
      std::size_t const a = index_key(key);
      if (a >= k) {
        bad_presentation("identity for unknown object " + key);
      }
      identities[a] = as_id(value, "identity");
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> inclusions, composition;
    for (auto const& [key, value] : j["inclusions"].items()) {
      inclusions[pair_key(key)] = as_id(value, "inclusion");
    }
    for (auto const& [key, value] : j["compose"].items()) {
      composition[pair_key(key)] = as_id(value, "composite");
    }
    return FiniteCategoryPresentation(std::move(leq),
                                      std::move(arrows),
                                      std::move(identities),
                                      std::move(inclusions),
                                      std::move(composition));
  }

  json presentation_to_json(FiniteCategoryPresentation const& p) {
    json out;
    out["objects"] = json::array();
    for (std::size_t a = 0; a < p.object_count(); ++a) {
      std::vector<std::size_t> up;
      for (std::size_t b = 0; b < p.object_count(); ++b) {
        if (p.leq(a, b)) {
          up.push_back(b);
        }
      }
      out["objects"].push_back({{"id", a}, {"leq", up}});
    }
    out["morphisms"] = json::array();
    for (std::size_t f = 0; f < p.morphism_count(); ++f) {
      out["morphisms"].push_back({{"id", f}, {"dom", p.arrow(f).dom}, {"cod", p.arrow(f).cod}});
    }
    out["identities"] = json::object();
    for (std::size_t a = 0; a < p.object_count(); ++a) {
      out["identities"][std::to_string(a)] = p.identity(a);
    }
    out["inclusions"] = json::object();
    for (auto const& [key, j] : p.inclusions()) {
      out["inclusions"][std::to_string(key.first) + "," + std::to_string(key.second)] = j;
    }
    out["compose"] = json::object();
    for (std::size_t f = 0; f < p.morphism_count(); ++f) {
      for (std::size_t g = 0; g < p.morphism_count(); ++g) {
        std::size_t h = p.compose(f, g);
        if (h != FiniteCategoryPresentation::none) {
          out["compose"][std::to_string(f) + "," + std::to_string(g)] = h;
        }
      }
    }
    return out;
  }

  json to_json(Morphism const& m) {
    return json::array({m.dom, m.mid, m.cod});
  }

  json to_json(LCategory const& c, Cone const& cone) {
    json components = json::object();
    for (std::size_t i = 0; i < c.object_count(); ++i) {
      components[std::to_string(c.objects()[i].rep)] = cone.components[i].mid;
    }
    return {{"vertex", cone.vertex}, {"components", components}};
  }

  json report_to_json(VerificationReport const& r) {
    VerificationReport copy = r;
    copy.normalize();
    json out;
    if (copy.fingerprint) {
      out["fingerprint"] = {{"order", copy.fingerprint->order},
                            {"table_hash", hex(copy.fingerprint->table_hash)}};
    }
    out["claims"] = json::array();
    for (auto const& c : copy.claims) {
      json cj = {{"id", c.id}, {"status", std::string(to_string(c.status))}, {"checked", c.checked}};
      if (c.witness) {
        json morphisms = json::array();
        for (auto const& m : c.witness->morphisms) {
          morphisms.push_back(m);
        }
        cj["witness"] = {{"description", c.witness->description},
                         {"elements", c.witness->elements},
                         {"morphisms", morphisms}};
      }
      out["claims"].push_back(cj);
    }
    return out;
  }

  std::string render_report(VerificationReport const& r, ReportFormat format) {
    if (format == ReportFormat::json) {
      return report_to_json(r).dump(2) + "\n";
    }
    VerificationReport copy = r;
    copy.normalize();
    std::size_t width = 5;
    for (auto const& c : copy.claims) {
      width = std::max(width, c.id.size());
    }
    std::ostringstream out;
    if (copy.fingerprint) {
      out << "# order " << copy.fingerprint->order << ", table hash "
          << hex(copy.fingerprint->table_hash) << "\n";
    }
    auto pad = [](std::string s, std::size_t w) {
      s.resize(std::max(w, s.size()), ' ');
      return s;
    };
    out << pad("claim", width) << "     checked  " << pad("status", 7)
        << "  witness\n";
    std::size_t passed = 0, failed = 0;
    for (auto const& c : copy.claims) {
      std::string checked = std::to_string(c.checked);
      out << pad(c.id, width) << "  " << std::string(10 - std::min<std::size_t>(10, checked.size()), ' ')
          << checked << "  " << pad(std::string(to_string(c.status)), 7) << "  "
          << (c.witness ? witness_text(*c.witness) : "-") << "\n";
      passed += c.status == ClaimStatus::pass;
      failed += c.status == ClaimStatus::fail;
    }
    out << copy.claims.size() << " claims: " << passed << " pass, " << failed << " fail\n";
    return out.str();
  }

}  // namespace normcat
