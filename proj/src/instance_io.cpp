#include "gammakit/instance_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace gammakit {

  namespace {

    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorKind::parse_error, what);
    }

    std::vector<std::string> label_list(ordered_json const& doc,
                                        char const*         key) {
      auto it = doc.find(key);
      if (it == doc.end() || !it->is_array()) {
        fail(std::string("\"") + key + "\" must be an array of strings");
      }
      std::vector<std::string> out;
      std::set<std::string>    seen;
      for (auto const& v : *it) {
        if (!v.is_string()) {
          fail(std::string("\"") + key + "\" must be an array of strings");
        }
        auto s = v.get<std::string>();
        if (!seen.insert(s).second) {
          fail(std::string("duplicate label \"") + s + "\" in \"" + key + "\"");
        }
        out.push_back(std::move(s));
      }
      return out;
    }

  }  // namespace

  std::size_t carrier_limit() {
    std::size_t limit = max_carrier_size;
    if (char const* env = std::getenv("GAMMAKIT_MAX_N")) {
      char*      end   = nullptr;
      auto const value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0 && value < limit) {
        limit = static_cast<std::size_t>(value);
      }
    }
    return limit;
  }

  RawInstance instance_from_json(ordered_json const& doc) {
    if (!doc.is_object()) {
      fail("an instance must be a JSON object");
    }
    RawInstance raw;
    raw.labels.elements = label_list(doc, "elements");
    raw.labels.gammas   = label_list(doc, "gamma");
    auto const n        = raw.size();
    auto const k        = raw.gamma_count();
    if (n > carrier_limit()) {
      throw Error(ErrorKind::carrier_too_large,
                  "carrier size " + std::to_string(n) + " exceeds the limit "
                      + std::to_string(carrier_limit()));
    }
    if (k > max_carrier_size) {
      throw Error(ErrorKind::carrier_too_large,
                  "gamma size " + std::to_string(k) + " exceeds the limit "
                      + std::to_string(max_carrier_size));
    }

    auto table = doc.find("table");
    if (table == doc.end() || !table->is_object()) {
      fail("\"table\" must be an object keyed by gamma label");
    }
    if (table->size() != k) {
      fail("\"table\" must have exactly one entry per gamma label");
    }
    raw.table.assign(n * k * n, 0);
    for (std::size_t g = 0; g < k; ++g) {
      auto const& name = raw.labels.gammas[g];
      auto        m    = table->find(name);
      if (m == table->end()) {
        fail("\"table\" has no entry for gamma \"" + name + "\"");
      }
      if (!m->is_array() || m->size() != n) {
        fail("table[\"" + name + "\"] must be an array of "
             + std::to_string(n) + " rows");
      }
      for (std::size_t a = 0; a < n; ++a) {
        auto const& row = (*m)[a];
        if (!row.is_array() || row.size() != n) {
          fail("table[\"" + name + "\"][" + std::to_string(a)
               + "] must be an array of " + std::to_string(n) + " indices");
        }
        for (std::size_t b = 0; b < n; ++b) {
          auto const& v = row[b];
          if (!v.is_number_unsigned()) {
            fail("table[\"" + name + "\"][" + std::to_string(a) + "]["
                 + std::to_string(b) + "] must be a non-negative integer");
          }
          raw.table[(a * k + g) * n + b] = v.get<std::size_t>();
        }
      }
    }
    return raw;
  }

  RawInstance parse_instance(std::string const& text) {
    ordered_json doc;
    try {
      doc = ordered_json::parse(text);
    } catch (ordered_json::parse_error const& e) {
      fail("malformed JSON at byte " + std::to_string(e.byte) + ": "
           + e.what());
    }
    return instance_from_json(doc);
  }

  RawInstance load_instance_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
  }

  ValidationResult validate(RawInstance const& raw) {
    return validate(raw.table, raw.size(), raw.gamma_count(), raw.labels);
  }

  ordered_json instance_to_json(GammaSemigroup const& s) {
    ordered_json doc;
    doc["elements"] = s.labels().elements;
    doc["gamma"]    = s.labels().gammas;
    ordered_json table = ordered_json::object();
    for (std::size_t g = 0; g < s.gamma_count(); ++g) {
      ordered_json rows = ordered_json::array();
      for (std::size_t a = 0; a < s.size(); ++a) {
        ordered_json row = ordered_json::array();
        for (std::size_t b = 0; b < s.size(); ++b) {
          row.push_back(s.at(a, g, b));
        }
        rows.push_back(std::move(row));
      }
      table[s.labels().gammas[g]] = std::move(rows);
    }
    doc["table"] = std::move(table);
    return doc;
  }

  ordered_json record_to_json(InstanceRecord const& record) {
    ordered_json doc;
    doc["instance"] = instance_to_json(record.instance);
    ordered_json flags = ordered_json::object();
    for (std::size_t i = 0; i < instance_flag_names.size(); ++i) {
      flags[std::string(instance_flag_names[i])] = record.flags[i];
    }
    doc["flags"] = std::move(flags);
    if (record.canonical_key.empty()) {
      doc["canonical_key"] = nullptr;
    } else {
      doc["canonical_key"] = to_hex(record.canonical_key);
    }
    return doc;
  }

}  // namespace gammakit
