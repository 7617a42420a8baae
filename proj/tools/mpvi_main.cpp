#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mpvi/error.hpp"
#include "mpvi/job.hpp"

namespace {

void emit(const mpvi::Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  // Write to a sibling file and rename so readers never see partial output.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename to " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivic principal value integrals of hyperplane arrangements"};
  app.require_subcommand(1);
  std::string input, output;
  mpvi::JobOptions options;
  const char* commands[][2] = {
      {"edges", "Edge lattice, essentiality, decomposability, dense edges"},
      {"classes", "Complement, strata and resolution classes"},
      {"pv", "Principal value integral for given exponents"},
      {"delta", "Constant term and chain count"},
      {"generic-closed-form", "Closed form for arrangements in general position"},
      {"formal", "Formal multivariate integral"},
      {"poles", "Pole test for every edge direction"},
      {"ndpole", "Residue certificate for the candidate pole -N/sum(m)"},
      {"witness-search", "Scan multiplicity vectors for certified poles"},
      {"positive-a", "Exponent vector with all b_W > 0"},
      {"check", "Run the consistency suite on one arrangement"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "Job file (JSON); stdin if omitted");
    sub->add_option("--output", output, "Result file; stdout if omitted");
    sub->add_option("--truncation", options.truncation, "Series truncation order (0: 4nq)");
    sub->add_option("--samples", options.samples, "Random sample count");
    sub->add_option("--seed", options.seed, "Random seed");
    sub->add_option("--bound", options.bound, "Multiplicity bound for witness search");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  mpvi::Json job;
  try {
    std::stringstream buffer;
    if (input.empty()) {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream in(input);
      if (!in) throw mpvi::Error(mpvi::ErrorKind::ParseError, "cannot open " + input);
      buffer << in.rdbuf();
    }
    job = mpvi::Json::parse(buffer.str());
    emit(mpvi::run_job(command, job, options), output);
    return 0;
  } catch (const mpvi::Error& e) {
    emit(mpvi::error_document(command, job, options, std::string(mpvi::to_string(e.kind())), e.what(), e.subject()),
         output);
    return mpvi::is_validation_error(e.kind()) ? 2 : 3;
  } catch (const mpvi::Json::exception& e) {
    emit(mpvi::error_document(command, job, options, "ParseError", e.what(), ""), output);
    return 2;
  } catch (const std::exception& e) {
    emit(mpvi::error_document(command, job, options, "InternalError", e.what(), ""), output);
    return 3;
  }
}
