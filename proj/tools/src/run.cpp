#include "dmod_cli/run.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "dmod/bfunction.hpp"
#include "dmod/errors.hpp"
#include "dmod/generalized.hpp"
#include "dmod/local_bfunction.hpp"
#include "dmod/multiplier.hpp"
#include "dmod_cli/output.hpp"
#include "dmod_cli/parse.hpp"

namespace dmod::cli {

using nlohmann::json;

namespace {

struct Args {
  std::string vars;
  bool json = false;
  bool time = false;
  bool trace = false;
  std::size_t cap = Options{}.iterationCap;
  std::size_t maxReductions = 0;

  std::string f, g = "1", P, method, interval = "0,1", c, dmax;
  std::optional<unsigned> m;
};

Rational parseRational(const std::string& text, const char* what) {
  static const std::regex form(R"(\s*-?\d+(/\d+)?\s*)");
  if (!std::regex_match(text, form)) throw ParseError(std::string("malformed rational for ") + what + ": '" + text + "'", 0);
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  Rational q;
  q.set_str(t, 10);
  if (q.get_den() == 0) throw ParseError(std::string("zero denominator in ") + what, t.find('/') + 1);
  q.canonicalize();
  return q;
}

// Identifiers in order of first appearance.
std::vector<std::string> inferVariables(const std::vector<std::string>& texts) {
  std::vector<std::string> out;
  for (const auto& text : texts) {
    for (std::size_t i = 0; i < text.size();) {
      unsigned char ch = static_cast<unsigned char>(text[i]);
      if (std::isalpha(ch) || ch == '_') {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        std::string name = text.substr(i, j - i);
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        i = j;
      } else if (std::isdigit(ch)) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      } else {
        ++i;
      }
    }
  }
  return out;
}

json polynomialList(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.toString());
  return out;
}

json thresholdJson(const Threshold& t) { return t ? rationalText(*t) : std::string("inf"); }

class Invocation {
 public:
  Invocation(const Args& args, std::istream& in) : args_(args) {
    if (args_.f == "-") {
      args_.f.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      while (!args_.f.empty() && std::isspace(static_cast<unsigned char>(args_.f.back()))) args_.f.pop_back();
    }
    options_.iterationCap = args_.cap;
    options_.maxReductions = args_.maxReductions;
  }

  OutputRecord run(const std::string& command, std::ostream& err) {
    record_.command = command;
    if (args_.trace) options_.trace = [&err](const std::string& line) { err << "trace: " << line << "\n"; };
    options_.warn = [this](const std::string& line) { record_.warnings.push_back(line); };

    std::vector<std::string> texts{args_.f};
    if (command == "generalb") texts.push_back(args_.g);
    if (command == "local") texts.push_back(args_.P);
    vars_ = args_.vars.empty() ? inferVariables(texts) : splitList(args_.vars);
    if (vars_.empty()) vars_ = {"x"};  // constant input still needs a ring
    ring_ = polynomialRing(vars_);
    f_ = parse(args_.f, vars_).polynomials;
    if (f_.empty()) throw ParseError("no polynomial given with -f", 0);
    record_.input = {{"vars", vars_}, {"f", polynomialList(f_)}};

    auto start = std::chrono::steady_clock::now();
    if (command == "global") global();
    else if (command == "local") local();
    else if (command == "stratify") stratify();
    else if (command == "generalb") generalb();
    else if (command == "lct") lctCommand();
    else if (command == "jumping") jumping();
    else if (command == "multiplier") multiplier();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (args_.time) record_.elapsed_ms = long(ms);
    return record_;
  }

 private:
  const Polynomial& single(const char* command) {
    if (f_.size() != 1) throw PreconditionError(std::string(command) + " takes exactly one polynomial");
    return f_.front();
  }

  void global() {
    std::string method = args_.method.empty() ? "initial" : args_.method;
    record_.input["method"] = method;
    auto b = globalBFunction(single("global"), method == "ann" ? BMethod::Annihilator : BMethod::InitialIdeal, options_);
    record_.result = {{"bfunction", bpolyJson(b)}};
  }

  void local() {
    auto P = parse(args_.P, vars_).polynomials;
    record_.input["P"] = polynomialList(P);
    record_.result = {{"bfunction", bpolyJson(localBFunction(single("local"), P, options_))}};
  }

  void stratify() {
    auto st = stratifyByLocalB(single("stratify"), options_);
    json strata = json::array();
    for (const auto& s : st.strata) {
      json excluded = json::array();
      for (const auto& e : s.excluded) excluded.push_back(idealJson(e));
      strata.push_back({{"b", bpolyJson(s.b)}, {"closure", idealJson(s.closure)}, {"excluded", excluded}});
    }
    record_.result = {{"global", bpolyJson(st.global)}, {"strata", strata}};
  }

  void generalb() {
    auto g = parsePolynomial(args_.g, ring_);
    record_.input["g"] = g.toString();
    BPoly b;
    if (args_.m) {
      if (!args_.method.empty()) throw PreconditionError("--method does not apply together with -m");
      record_.input["m"] = *args_.m;
      b = generalBm(f_, g, *args_.m, options_);
    } else {
      std::string method = args_.method.empty() ? "star" : args_.method;
      record_.input["method"] = method;
      b = generalB(f_, g, method == "initial" ? GeneralBMethod::InitialIdeal : GeneralBMethod::StarIdeal, options_);
    }
    record_.result = {{"bfunction", bpolyJson(b)}};
  }

  void lctCommand() { record_.result = {{"lct", thresholdJson(lct(f_, options_))}}; }

  void jumping() {
    auto bounds = splitList(args_.interval);
    if (bounds.size() != 2) throw ParseError("--interval expects lo,hi", 0);
    Rational lo = parseRational(bounds[0], "--interval"), hi = parseRational(bounds[1], "--interval");
    record_.input["interval"] = {rationalText(lo), rationalText(hi)};
    auto data = jumpingCoefficients(f_, lo, hi, options_);
    json jumps = json::array(), rejected = json::array(), ideals = json::array();
    for (const auto& x : data.jumps) jumps.push_back(rationalText(x));
    for (const auto& x : data.rejected) rejected.push_back(rationalText(x));
    for (const auto& piece : data.ideals)
      ideals.push_back({{"from", rationalText(piece.from)},
                        {"to", piece.to ? json(rationalText(*piece.to)) : json(nullptr)},
                        {"generators", idealJson(piece.generators)}});
    record_.result = {{"lct", thresholdJson(data.lct)}, {"jumps", jumps}, {"rejected", rejected}, {"ideals", ideals}};
  }

  void multiplier() {
    Rational c = parseRational(args_.c, "-c");
    std::string method = args_.method.empty() ? "syzygy" : args_.method;
    record_.input["c"] = rationalText(c);
    record_.input["method"] = method;
    MultiplierIdealResult out;
    if (method == "linalg") {
      std::optional<unsigned> dmax;
      if (args_.dmax == "inf") {
        dmax = MultiplierSession::kUnbounded;
      } else if (!args_.dmax.empty()) {
        if (!std::regex_match(args_.dmax, std::regex(R"(\d{1,9})"))) throw ParseError("--dmax expects a natural number or inf", 0);
        dmax = unsigned(std::stoul(args_.dmax));
      }
      record_.input["dmax"] = args_.dmax.empty() ? json(nullptr) : json(args_.dmax);
      out = multiplierIdealLA(f_, c, dmax, options_);
    } else {
      if (!args_.dmax.empty()) throw PreconditionError("--dmax applies to --method linalg only");
      out.generators = multiplierIdeal(f_, c, options_);
    }
    record_.partial = out.partial;
    record_.result = {{"generators", idealJson(out.generators)}};
  }

  Args args_;
  Options options_;
  OutputRecord record_;
  std::vector<std::string> vars_;
  RingPtr ring_;
  std::vector<Polynomial> f_;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Args args;
  CLI::App app{"Bernstein-Sato polynomials, log-canonical thresholds and multiplier ideals over Q", "dmod"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--vars", args.vars, "Comma-separated variable names (default: order of first appearance)");
  app.add_flag("--json", args.json, "Print a JSON record instead of text");
  app.add_flag("--time", args.time, "Report the elapsed time");
  app.add_flag("--trace", args.trace, "Print progress of the expensive steps to stderr");
  app.add_option("--cap", args.cap, "Largest degree tried when searching for a b-function")->check(CLI::PositiveNumber);
  app.add_option("--max-reductions", args.maxReductions, "Abort a Groebner basis after this many reductions (0 = no limit)");

  auto addF = [&](CLI::App* sub, const char* help) { sub->add_option("-f", args.f, help)->required(); };
  auto* global = app.add_subcommand("global", "Global b-function of one polynomial");
  addF(global, "Polynomial (- reads stdin)");
  global->add_option("--method", args.method, "initial | ann")->check(CLI::IsMember({"initial", "ann"}));

  auto* local = app.add_subcommand("local", "Local b-function at a prime ideal");
  addF(local, "Polynomial (- reads stdin)");
  local->add_option("-P", args.P, "Generators of the prime ideal, comma-separated")->required();

  auto* stratify = app.add_subcommand("stratify", "Stratify affine space by the local b-function");
  addF(stratify, "Polynomial (- reads stdin)");

  auto* generalb = app.add_subcommand("generalb", "Generalized b-function of an ideal at g");
  addF(generalb, "Generators, comma-separated (- reads stdin)");
  generalb->add_option("-g", args.g, "The polynomial g (default 1)");
  generalb->add_option("--method", args.method, "star | initial")->check(CLI::IsMember({"star", "initial"}));
  generalb->add_option("-m", args.m, "Compute the m-generalized b-function instead")->check(CLI::PositiveNumber);

  auto* lctCmd = app.add_subcommand("lct", "Log-canonical threshold of an ideal");
  addF(lctCmd, "Generators, comma-separated (- reads stdin)");

  auto* jumping = app.add_subcommand("jumping", "Jumping coefficients in (lo, hi] and the ideals between them");
  addF(jumping, "Generators, comma-separated (- reads stdin)");
  jumping->add_option("--interval", args.interval, "lo,hi (default 0,1)");

  auto* multiplier = app.add_subcommand("multiplier", "Multiplier ideal J(f^c)");
  addF(multiplier, "Generators, comma-separated (- reads stdin)");
  multiplier->add_option("-c", args.c, "Nonnegative rational coefficient")->required();
  multiplier->add_option("--method", args.method, "syzygy | linalg")->check(CLI::IsMember({"syzygy", "linalg"}));
  multiplier->add_option("--dmax", args.dmax, "Degree bound for linalg (natural number or inf)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUserError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Invocation invocation(args, in);
    OutputRecord record = invocation.run(command, err);
    if (args.json) {
      out << toJson(record).dump(2) << "\n";
    } else {
      out << renderText(record);
      for (const auto& w : record.warnings) err << "warning: " << w << "\n";
      if (record.partial) err << "note: partial result, the ideal was not closed up below the degree bound\n";
      if (args.time) err << "elapsed: " << record.elapsed_ms << " ms\n";
    }
    return kSuccess;
  } catch (const IterationCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& line : e.partial()) err << "  " << line << "\n";
    return kLimitReached;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUserError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kLimitReached;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kLimitReached;
  }
}

}  // namespace dmod::cli
