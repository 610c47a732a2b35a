#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& item : items) out += (out.empty() ? "" : sep) + item;
  return out;
}

// Positional integers for the verbs that take them instead of JSON.
gfm::cli::json positional_payload(const std::string& verb, const std::vector<long>& args,
                                  const std::vector<long>& pluri) {
  using gfm::cli::json;
  if (verb == "invariants") {
    if (args.size() != 3) throw std::invalid_argument("usage: gfm invariants d k n [--pluri m1,m2,...]");
    json payload = {{"d", args[0]}, {"k", args[1]}, {"n", args[2]}};
    if (!pluri.empty()) payload["pluri"] = pluri;
    return payload;
  }
  if (args.size() != 2) throw std::invalid_argument("usage: gfm classify-low-n d n");
  return {{"d", args[0]}, {"n", args[1]}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with generalized Fermat manifolds.\nVerbs: " +
               join(gfm::cli::verbs(), ", ")};
  std::string verb;
  std::vector<long> args;
  std::string json_text;
  std::string input_path;
  std::vector<long> pluri;
  gfm::cli::CommandRequest request;
  bool pretty = false;

  app.add_option("verb", verb, "Command to run")->required();
  app.add_option("args", args, "Integers for invariants (d k n) and classify-low-n (d n)");
  app.add_option("--json", json_text, "Payload as a JSON string");
  app.add_option("--input", input_path, "Read the payload from a file")->check(CLI::ExistingFile);
  app.add_option("--pluri", pluri, "Plurigenus indices for invariants")->delimiter(',');
  app.add_option("--budget", request.budget, "Enumeration budget")
      ->envname("GFM_BUDGET")
      ->default_val(gfm::kDefaultBudget);
  app.add_option("--seed", request.seed, "Seed for sampling verbs")->default_val(0);
  app.add_flag("--pretty", pretty, "Indented output");
  CLI11_PARSE(app, argc, argv);

  request.verb = verb;
  try {
    if (verb == "invariants" || verb == "classify-low-n") {
      request.payload = positional_payload(verb, args, pluri);
    } else {
      if (!args.empty()) throw std::invalid_argument("verb " + verb + " takes a JSON payload, not positionals");
      std::string text = json_text;
      if (text.empty() && !input_path.empty()) {
        std::ifstream in(input_path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else if (text.empty()) {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      }
      request.payload = gfm::cli::json::parse(text);
    }
  } catch (const std::exception& e) {
    const gfm::cli::json report = {{"verb", verb}, {"error", {{"kind", "validation"}, {"message", e.what()}}}};
    std::cout << gfm::cli::render(report, pretty) << '\n';
    return gfm::cli::kValidation;
  }

  const auto result = gfm::cli::run(request);
  std::cout << gfm::cli::render(result.report, pretty) << '\n';
  return result.exit_code;
}
