#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "insep/errors.hpp"

using namespace insep;
using namespace insep::cli;

int main(int argc, char** argv) {
  CLI::App app{"Genus changes and Jacobian numbers of inseparable base changes of a DVR"};
  app.require_subcommand(1);
  Options opt;
  bool as_json = false;
  std::string out_path;
  std::string doc_path;
  std::string fixture;
  bool corpus = false;
  int random_per_p = 20;

  auto common = [&](CLI::App* sc) {
    sc->add_option("--precision", opt.precision, "Starting S-adic precision");
    sc->add_option("--cap", opt.cap, "Largest S-adic precision to try");
    sc->add_flag("--json", as_json, "Print the report as JSON");
    sc->add_flag("--trace", opt.trace, "Include hill-climbing traces");
    sc->add_option("--out", out_path, "Also write the JSON report to this file");
  };
  CLI::App* inv = app.add_subcommand("invariants", "q, delta, conductor and genus step for x");
  CLI::App* nrm = app.add_subcommand("normalize", "Normalization of the base change and the two-step analysis");
  CLI::App* jac = app.add_subcommand("jacobian", "Jacobian number by two routes and the kernel chain");
  for (CLI::App* sc : {inv, nrm, jac}) {
    sc->add_option("document", doc_path, "Input document (JSON)")->required();
    common(sc);
  }
  CLI::App* ver = app.add_subcommand("verify", "Run the checkers on a document, a fixture or the corpus");
  ver->add_option("document", doc_path, "Input document (JSON)");
  ver->add_option("--fixture", fixture, "Fixture id, e.g. fam1:p=3:n=2");
  ver->add_flag("--corpus", corpus, "Run the whole corpus");
  ver->add_option("--random", random_per_p, "Random presentations per characteristic in corpus mode");
  common(ver);
  CLI::App* cor = app.add_subcommand("corpus", "Run every fixture, random presentations and the coin suite");
  cor->add_option("--random", random_per_p, "Random presentations per characteristic");
  common(cor);
  CLI::App* sch = app.add_subcommand("schema", "Print the input document schema");
  CLI::App* fixtures = app.add_subcommand("fixtures", "List fixture ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (sch->parsed()) {
      std::cout << document_schema() << "\n";
      return 0;
    }
    if (fixtures->parsed()) {
      for (const auto& f : corpus_fixtures()) std::cout << f.id() << "\n";
      return 0;
    }
    Outcome o;
    if (inv->parsed()) {
      o = cmd_invariants(read_document(doc_path), opt);
    } else if (nrm->parsed()) {
      o = cmd_normalize(read_document(doc_path), opt);
    } else if (jac->parsed()) {
      o = cmd_jacobian(read_document(doc_path), opt);
    } else if (ver->parsed()) {
      const int modes = !doc_path.empty() + !fixture.empty() + corpus;
      if (modes != 1) throw InputError("verify: give exactly one of a document, --fixture or --corpus");
      if (corpus) {
        o = cmd_corpus(random_per_p, opt);
      } else if (!fixture.empty()) {
        o = cmd_verify_fixture(fixture, opt);
      } else {
        o = cmd_verify(read_document(doc_path), opt);
      }
    } else {
      o = cmd_corpus(random_per_p, opt);
    }
    if (as_json) {
      std::cout << o.report.dump(2) << "\n";
    } else {
      std::cout << (o.text.empty() ? render_text(o.report) : o.text);
    }
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw InputError("cannot write " + out_path);
      f << o.report.dump(2) << "\n";
    }
    return o.exit_code;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CheckFailure& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
