#include "gammakit/commands.hpp"

#include <array>
#include <fstream>
#include <map>
#include <ostream>
#include <variant>

#include "gammakit/enumerator.hpp"
#include "gammakit/ideals.hpp"
#include "gammakit/instance_io.hpp"
#include "gammakit/relations.hpp"

namespace gammakit::cli {

  int exit_status(Error const& e) noexcept {
    switch (e.kind()) {
      case ErrorKind::index_out_of_range:
      case ErrorKind::not_associative:
      case ErrorKind::empty_carrier:
      case ErrorKind::empty_gamma:
        return invalid;
      default:
        return usage;
    }
  }

  namespace {

    // Either a validated instance or the exit status to return.
    std::variant<GammaSemigroup, int> load(std::string const& path,
                                           std::ostream&      err) {
      try {
        auto const raw    = load_instance_file(path);
        auto       result = validate(raw);
        if (!result.ok()) {
          for (auto const& issue : result.issues) {
            err << issue.describe(raw.labels) << '\n';
          }
          return invalid;
        }
        return std::move(*result.semigroup);
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return exit_status(e);
      }
    }

    std::vector<std::string> names(GammaSemigroup const& s, ElementSet set) {
      std::vector<std::string> out;
      for (auto x : set) {
        out.push_back(s.labels().elements[x]);
      }
      return out;
    }

    std::string brace(GammaSemigroup const& s, ElementSet set) {
      std::string out   = "{";
      bool        first = true;
      for (auto const& name : names(s, set)) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += name;
      }
      return out + "}";
    }

    ordered_json classes_json(GammaSemigroup const& s, Partition const& p) {
      ordered_json out = ordered_json::array();
      for (auto cls : p.classes()) {
        out.push_back(names(s, cls));
      }
      return out;
    }

    std::string classes_text(GammaSemigroup const& s, Partition const& p) {
      std::string out;
      for (auto cls : p.classes()) {
        if (!out.empty()) {
          out += ' ';
        }
        out += brace(s, cls);
      }
      return out;
    }

    char const* yes_no(bool b) {
      return b ? "true" : "false";
    }

    std::array<std::string_view, 7> condition_text(Theorem theorem) {
      switch (theorem) {
        case Theorem::intra_regular:
          return {"M is intra-regular",
                  "N(x) = {y : x in MΓyΓM} for every x",
                  "N = I",
                  "every ideal is a union of N-classes",
                  "every N-class is a simple subsemigroup",
                  "M is a semilattice of simple semigroups",
                  "every ideal is semiprime"};
        case Theorem::left_regular_duo:
          return {"M is left regular and xΓM ⊆ MΓx for every x",
                  "N(x) = {y : x in MΓy} for every x",
                  "N = L",
                  "every left ideal is a union of N-classes",
                  "every N-class is a left simple subsemigroup",
                  "M is a semilattice of left simple semigroups",
                  "every left ideal is semiprime and two-sided"};
        case Theorem::right_regular_duo:
          return {"M is right regular and MΓx ⊆ xΓM for every x",
                  "N(x) = {y : x in yΓM} for every x",
                  "N = R",
                  "every right ideal is a union of N-classes",
                  "every N-class is a right simple subsemigroup",
                  "M is a semilattice of right simple semigroups",
                  "every right ideal is semiprime and two-sided"};
      }
      return {};
    }

  }  // namespace

  int cmd_validate(std::string const& path, std::ostream& out, std::ostream& err) {
    auto loaded = load(path, err);
    if (auto const* status = std::get_if<int>(&loaded)) {
      if (*status == invalid) {
        out << "invalid\n";
      }
      return *status;
    }
    out << "valid\n";
    return ok;
  }

  int cmd_analyze(std::string const& path,
                  bool               json,
                  std::ostream&      out,
                  std::ostream&      err) {
    auto loaded = load(path, err);
    if (auto const* status = std::get_if<int>(&loaded)) {
      return *status;
    }
    auto const& s = std::get<GammaSemigroup>(loaded);
    try {
      auto const l_rel = ideal_relation(s, Side::left);
      auto const r_rel = ideal_relation(s, Side::right);
      auto const i_rel = ideal_relation(s, Side::two_sided);
      auto const n_rel = filter_relation(s);

      std::array<std::pair<char const*, bool>, 5> const flags{{
          {"intra-regular", is_intra_regular(s)},
          {"left-regular", is_left_regular(s)},
          {"right-regular", is_right_regular(s)},
          {"duo-left", duo_condition(s, Side::left)},
          {"duo-right", duo_condition(s, Side::right)},
      }};

      if (json) {
        ordered_json doc;
        doc["elements"] = s.labels().elements;
        doc["gamma"]    = s.labels().gammas;
        ordered_json principal = ordered_json::array();
        for (std::size_t x = 0; x < s.size(); ++x) {
          ordered_json row;
          row["element"] = s.labels().elements[x];
          row["L"]       = names(s, principal_ideal(s, x, Side::left));
          row["R"]       = names(s, principal_ideal(s, x, Side::right));
          row["I"]       = names(s, principal_ideal(s, x, Side::two_sided));
          row["N"]       = names(s, filter_generated(s, x));
          principal.push_back(std::move(row));
        }
        doc["principal"] = std::move(principal);
        ordered_json relations;
        relations["L"]     = classes_json(s, l_rel);
        relations["R"]     = classes_json(s, r_rel);
        relations["I"]     = classes_json(s, i_rel);
        relations["N"]     = classes_json(s, n_rel);
        doc["relations"]   = std::move(relations);
        ordered_json flag_doc;
        for (auto const& [name, value] : flags) {
          flag_doc[name] = value;
        }
        doc["flags"] = std::move(flag_doc);
        out << doc.dump(2) << '\n';
        return ok;
      }

      out << "elements: " << s.size() << ", gammas: " << s.gamma_count()
          << "\n\n";
      for (std::size_t x = 0; x < s.size(); ++x) {
        auto const& e = s.labels().elements[x];
        out << e << ":  L(" << e << ") = "
            << brace(s, principal_ideal(s, x, Side::left)) << "  R(" << e
            << ") = " << brace(s, principal_ideal(s, x, Side::right))
            << "  I(" << e
            << ") = " << brace(s, principal_ideal(s, x, Side::two_sided))
            << "  N(" << e << ") = " << brace(s, filter_generated(s, x))
            << '\n';
      }
      out << "\nL-classes: " << classes_text(s, l_rel) << '\n'
          << "R-classes: " << classes_text(s, r_rel) << '\n'
          << "I-classes: " << classes_text(s, i_rel) << '\n'
          << "N-classes: " << classes_text(s, n_rel) << "\n\n";
      for (auto const& [name, value] : flags) {
        out << name << ": " << yes_no(value) << '\n';
      }
      return ok;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_status(e);
    }
  }

  int cmd_check(std::string const&  path,
                CheckOptions const& options,
                std::ostream&       out,
                std::ostream&       err) {
    auto loaded = load(path, err);
    if (auto const* status = std::get_if<int>(&loaded)) {
      return *status;
    }
    auto const&     s = std::get<GammaSemigroup>(loaded);
    ConditionVector v;
    try {
      TheoremOptions topts;
      topts.decomposition = options.mode;
      topts.simplicity    = options.simplicity;
      v                   = check_theorem(s, options.theorem, topts);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_status(e);
    }
    auto const agree = v.all_equal();
    auto const text  = condition_text(options.theorem);

    if (options.json) {
      ordered_json doc;
      doc["theorem"]       = static_cast<int>(options.theorem);
      doc["decomposition"] = std::string(to_string(v.decomposition_mode));
      doc["simplicity"]    = std::string(to_string(v.simplicity));
      ordered_json conditions = ordered_json::array();
      for (std::size_t i = 0; i < 7; ++i) {
        ordered_json c;
        c["condition"] = i + 1;
        c["holds"]     = v.flags[i];
        if (auto const& w = v.witnesses[i]) {
          ordered_json wj;
          wj["kind"] = std::string(to_string(w->kind));
          if (w->element) {
            wj["element"] = s.labels().elements[*w->element];
          }
          if (w->other) {
            wj["other"] = s.labels().elements[*w->other];
          }
          if (w->gamma) {
            wj["gamma"] = s.labels().gammas[*w->gamma];
          }
          if (w->subset) {
            wj["subset"] = names(s, *w->subset);
          }
          wj["detail"]   = w->detail;
          c["witness"] = std::move(wj);
        } else {
          c["witness"] = nullptr;
        }
        conditions.push_back(std::move(c));
      }
      doc["conditions"] = std::move(conditions);
      doc["all_equal"]  = agree;
      out << doc.dump(2) << '\n';
    } else {
      out << "theorem " << static_cast<int>(options.theorem)
          << " (decomposition search: " << to_string(v.decomposition_mode)
          << ", simple: " << to_string(v.simplicity) << ")\n";
      for (std::size_t i = 0; i < 7; ++i) {
        out << "  (" << i + 1 << ") " << (v.flags[i] ? "true " : "false")
            << "  " << text[i] << '\n';
        if (auto const& w = v.witnesses[i]) {
          out << "        witness: " << w->detail << '\n';
        }
      }
      if (agree) {
        out << "all seven conditions agree ("
            << yes_no(v.flags.front()) << ")\n";
      } else {
        out << "CONDITIONS DISAGREE\n";
      }
    }
    return agree ? ok : equivalence_violation;
  }

  int cmd_decompose(std::string const&                path,
                    std::optional<std::string> const& quotient_path,
                    std::ostream&                     out,
                    std::ostream&                     err) {
    auto loaded = load(path, err);
    if (auto const* status = std::get_if<int>(&loaded)) {
      return *status;
    }
    auto const& s = std::get<GammaSemigroup>(loaded);
    try {
      auto const n_rel = filter_relation(s);
      out << "N-classes: " << n_rel.class_count() << '\n';
      for (auto cls : n_rel.classes()) {
        out << "  " << brace(s, cls)
            << "  left-simple: " << yes_no(is_simple_sub(s, cls, Simplicity::left))
            << "  right-simple: "
            << yes_no(is_simple_sub(s, cls, Simplicity::right))
            << "  left-and-right-simple: "
            << yes_no(is_simple_sub(s, cls, Simplicity::left_and_right))
            << "  simple: "
            << yes_no(is_simple_sub(s, cls, Simplicity::two_sided)) << '\n';
      }

      auto const q = quotient(s, n_rel);
      bool       semilattice = true;
      for (std::size_t g = 0; g < q.gamma_count(); ++g) {
        for (std::size_t a = 0; a < q.size(); ++a) {
          semilattice = semilattice && q.at(a, g, a) == a;
          for (std::size_t b = 0; b < q.size(); ++b) {
            semilattice = semilattice && q.at(a, g, b) == q.at(b, g, a);
          }
        }
      }
      auto const doc = instance_to_json(q);
      out << "quotient M/N:\n" << doc.dump(2) << '\n';
      out << "quotient is idempotent and commutative: " << yes_no(semilattice)
          << '\n';
      if (quotient_path) {
        std::ofstream file(*quotient_path);
        if (!file) {
          err << "error: cannot write '" << *quotient_path << "'\n";
          return usage;
        }
        file << doc.dump(2) << '\n';
      }
      // N is always a semilattice congruence, so a failure here is a bug.
      return semilattice ? ok : equivalence_violation;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_status(e);
    }
  }

  int cmd_enumerate(EnumerateOptions const& options,
                    std::ostream&           out,
                    std::ostream&           err) {
    try {
      if (options.filter) {
        bool known = false;
        for (auto name : instance_flag_names) {
          known = known || name == *options.filter;
        }
        if (!known) {
          err << "error: unknown flag '" << *options.filter << "'\n";
          return usage;
        }
      }
      if (options.n > carrier_limit()) {
        throw Error(ErrorKind::carrier_too_large,
                    "carrier size exceeds the limit "
                        + std::to_string(carrier_limit()));
      }

      std::ofstream file;
      if (options.out_path) {
        file.open(*options.out_path);
        if (!file) {
          err << "error: cannot write '" << *options.out_path << "'\n";
          return usage;
        }
      }
      std::ostream& records = options.out_path ? file : out;
      std::ostream& report  = options.out_path ? out : err;

      std::uint64_t visited = 0, written = 0;
      std::array<std::uint64_t, 8>           with_flag{};
      std::map<std::string, std::array<bool, 8>> classes;

      auto visit = [&](GammaSemigroup const& s) {
        auto const record = make_record(s);
        ++visited;
        for (std::size_t i = 0; i < with_flag.size(); ++i) {
          with_flag[i] += record.flags[i] ? 1 : 0;
        }
        if (!record.canonical_key.empty()) {
          classes.try_emplace(record.canonical_key, record.flags);
        }
        if (!options.filter || record.flag(*options.filter)) {
          ++written;
          records << record_to_json(record).dump() << '\n';
        }
      };

      if (options.sample) {
        for (std::uint64_t i = 0; i < *options.sample; ++i) {
          visit(random_instance(options.n, options.k, options.seed + i));
        }
      } else {
        enumerate_instances(options.n, options.k, visit);
      }

      report << (options.sample ? "sampled" : "enumerated") << " instances: "
             << visited << '\n'
             << "records written: " << written << '\n'
             << "isomorphism classes: " << classes.size() << '\n';
      for (std::size_t i = 0; i < instance_flag_names.size(); ++i) {
        std::uint64_t class_count = 0;
        for (auto const& [key, flags] : classes) {
          class_count += flags[i] ? 1 : 0;
        }
        report << "  " << instance_flag_names[i] << ": " << with_flag[i]
               << " instances, " << class_count << " classes\n";
      }
      bool const theorems_hold = with_flag[5] == visited
                                 && with_flag[6] == visited
                                 && with_flag[7] == visited;
      return theorems_hold ? ok : equivalence_violation;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_status(e);
    }
  }

}  // namespace gammakit::cli
