#include "mvdual/commands.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "mvdual/dsl.hpp"
#include "mvdual/error.hpp"
#include "mvdual/structure.hpp"

namespace mvdual {

namespace {

CommandResult failure(int code, std::string message) {
  CommandResult r;
  r.status = Status::error;
  r.exit_code = code;
  r.payload = Json::object();
  r.text = "error: " + message;
  r.diagnostics.push_back(std::move(message));
  return r;
}

template <class Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failure(1, std::string(to_string(e.kind())) + ": " + e.what());
  } catch (const std::exception& e) {
    return failure(2, std::string("internal error: ") + e.what());
  }
}

CommandResult success(Json payload, std::string text) {
  CommandResult r;
  r.payload = std::move(payload);
  r.text = std::move(text);
  return r;
}

Profile profile_for(const ParsedObject& object) {
  if (auto* a = std::get_if<ProductAlgebra>(&object)) return profile_of(*a);
  if (auto* m = std::get_if<EMultiset>(&object)) return profile_of(*m);
  return std::get<Profile>(object);
}

}  // namespace

std::string CommandResult::render(OutputFormat format) const {
  if (format == OutputFormat::text) return text;
  Json out = {{"status", ok() ? "ok" : "error"}, {"payload", payload}, {"diagnostics", diagnostics}};
  return out.dump(2);
}

CommandResult cmd_classify(std::string_view input) {
  return guarded([&] {
    const Profile p = profile_for(parse_object(input));
    const Json report = {{"hyperarchimedean", is_hyperarchimedean(p)},
                         {"stone", is_stone(p)},
                         {"projective", is_projective(p)},
                         {"extremally_disconnected", is_extremally_disconnected(p)},
                         {"urysohn_strauss", urysohn_strauss_holds(p)}};
    std::ostringstream text;
    text << "profile " << render(p) << "\n";
    for (const auto& [key, value] : report.items()) {
      text << std::left << std::setw(24) << key << (value.get<bool>() ? "yes" : "no") << "\n";
    }
    std::string t = text.str();
    t.pop_back();
    return success(report, t);
  });
}

CommandResult cmd_dual(std::string_view input) {
  return guarded([&] {
    const ParsedObject object = parse_object(input);
    if (auto* a = std::get_if<ProductAlgebra>(&object)) {
      const EMultiset x = multiset_of(*a);
      return success({{"kind", "multiset"}, {"dual", render(x)}, {"object", to_json(x)}}, render(x));
    }
    if (auto* m = std::get_if<EMultiset>(&object)) {
      const ProductAlgebra a = algebra_of(*m);
      return success({{"kind", "algebra"}, {"dual", render(a)}, {"object", to_json(a)}}, render(a));
    }
    return failure(1, "dual expects an algebra or a multiset, not a profile");
  });
}

CommandResult cmd_homs(std::string_view source, std::string_view target, HomsMode mode) {
  return guarded([&] {
    const ParsedObject src = parse_object(source);
    const ParsedObject dst = parse_object(target);
    Json items = Json::array();
    std::string lines;
    std::size_t count = 0;
    if (std::holds_alternative<EMultiset>(src) && std::holds_alternative<EMultiset>(dst)) {
      for (const auto& phi : enumerate_morphisms(std::get<EMultiset>(src), std::get<EMultiset>(dst))) {
        ++count;
        if (mode == HomsMode::list) {
          Json j = to_json(phi);
          items.push_back(j);
          lines += "\n" + j["map"].dump();
        }
      }
    } else if (std::holds_alternative<ProductAlgebra>(src) &&
               std::holds_alternative<ProductAlgebra>(dst)) {
      for (const auto& h : enumerate_continuous_homs(std::get<ProductAlgebra>(src),
                                                     std::get<ProductAlgebra>(dst))) {
        ++count;
        if (mode == HomsMode::list) {
          Json j = to_json(h);
          items.push_back(j);
          lines += "\n" + j["index_map"].dump();
        }
      }
    } else {
      return failure(1, "homs needs two multisets or two algebras");
    }
    Json payload = {{"count", count}};
    if (mode == HomsMode::list) payload["homs"] = items;
    return success(payload, std::to_string(count) + lines);
  });
}

CommandResult cmd_eval(std::string_view term, std::string_view algebra,
                       const std::vector<std::string>& bindings) {
  return guarded([&] {
    const ProductAlgebra a = parse_algebra(algebra);
    const Term t = parse_term(term);
    Environment env;
    for (const auto& b : bindings) {
      const auto eq = b.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorKind::syntax_error, "binding '" + b + "' must look like name=value");
      }
      env.insert_or_assign(b.substr(0, eq), parse_element(std::string_view(b).substr(eq + 1), a));
    }
    const Element value = eval_term(t, env, a);
    return success({{"term", render(t)}, {"value", to_json(value)}}, render(value));
  });
}

CommandResult cmd_selftest(const SelftestOptions& options) {
  return guarded([&] {
    const auto results = run_all_suites(options);
    Json suites_json = Json::array();
    std::ostringstream text;
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed();
      suites_json.push_back({{"id", r.id},
                             {"name", r.name},
                             {"passed", r.passed()},
                             {"checks", r.checks},
                             {"seconds", r.seconds},
                             {"budget_seconds", r.budget_seconds},
                             {"detail", r.detail}});
      text << (r.passed() ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
           << r.checks << " checks, " << std::fixed << std::setprecision(2) << r.seconds << " s / "
           << r.budget_seconds << " s)";
      if (!r.detail.empty()) text << "\n      " << r.detail;
      text << "\n";
    }
    text << (all ? "all suites passed" : "some suites FAILED");
    CommandResult result = success({{"passed", all}, {"suites", suites_json}}, text.str());
    if (!all) {
      result.status = Status::error;
      result.exit_code = 2;
      for (const auto& r : results) {
        if (!r.passed()) {
          result.diagnostics.push_back("suite " + std::to_string(r.id) + " (" + r.name + ") failed" +
                                       (r.detail.empty() ? ": over time budget" : ": " + r.detail));
        }
      }
    }
    return result;
  });
}

std::string resolve_input(const std::string& argument) {
  if (argument.empty() || argument.front() != '@') return argument;
  std::ifstream in(argument.substr(1));
  if (!in) {
    throw Error(ErrorKind::syntax_error, "cannot read input file '" + argument.substr(1) + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();
  while (!content.empty() && (content.back() == '\n' || content.back() == '\r')) content.pop_back();
  return content;
}

}  // namespace mvdual
