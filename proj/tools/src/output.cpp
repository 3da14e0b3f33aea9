#include "dmod_cli/output.hpp"

#include <algorithm>
#include <sstream>

#include "dmod/errors.hpp"

namespace dmod::cli {

using nlohmann::json;

std::string rationalText(const Rational& q) { return toString(q); }

json bpolyJson(const BPoly& b) {
  json roots = json::array();
  for (const auto& r : b.roots()) roots.push_back({{"root", rationalText(r.root)}, {"multiplicity", r.multiplicity}});
  return {{"factored", b.toString()}, {"expanded", b.expandedString()}, {"roots", roots}};
}

json idealJson(std::vector<Polynomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.ring()->greater(a.leadMonomial(), b.leadMonomial());
  });
  json out = json::array();
  for (const auto& g : gens) out.push_back(g.toString());
  return out;
}

json toJson(const OutputRecord& r) {
  return {{"command", r.command}, {"input", r.input},       {"result", r.result},
          {"partial", r.partial}, {"warnings", r.warnings}, {"elapsed_ms", r.elapsed_ms}};
}

OutputRecord fromJson(const json& j) {
  try {
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input");
    r.result = j.at("result");
    r.partial = j.at("partial").get<bool>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.elapsed_ms = j.at("elapsed_ms").get<long>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed output record: ") + e.what(), 0);
  }
}

namespace {

std::string joined(const json& list, const char* sep = ", ") {
  std::string out;
  for (const auto& item : list) {
    if (!out.empty()) out += sep;
    out += item.get<std::string>();
  }
  return out;
}

std::string idealText(const json& gens) { return gens.empty() ? "0" : joined(gens); }

void renderBPoly(std::ostream& os, const json& b) {
  os << b.at("factored").get<std::string>() << "\n";
  std::string roots;
  for (const auto& r : b.at("roots")) {
    if (!roots.empty()) roots += ", ";
    roots += r.at("root").get<std::string>();
    if (r.at("multiplicity").get<unsigned>() > 1) roots += " (x" + std::to_string(r.at("multiplicity").get<unsigned>()) + ")";
  }
  os << "roots: " << (roots.empty() ? "none" : roots) << "\n";
}

}  // namespace

std::string renderText(const OutputRecord& r) {
  std::ostringstream os;
  const json& res = r.result;
  if (res.contains("bfunction")) renderBPoly(os, res.at("bfunction"));
  if (res.contains("lct")) os << (res.contains("jumps") ? "lct: " : "") << res.at("lct").get<std::string>() << "\n";
  if (res.contains("generators")) os << idealText(res.at("generators")) << "\n";
  if (res.contains("jumps")) {
    os << "jumps: " << joined(res.at("jumps")) << "\n";
    if (!res.at("rejected").empty()) os << "rejected: " << joined(res.at("rejected")) << "\n";
    for (const auto& piece : res.at("ideals")) {
      os << "[" << piece.at("from").get<std::string>() << ", "
         << (piece.at("to").is_null() ? std::string("...") : piece.at("to").get<std::string>())
         << "): " << idealText(piece.at("generators")) << "\n";
    }
  }
  if (res.contains("strata")) {
    os << "global: " << res.at("global").at("factored").get<std::string>() << "\n";
    for (const auto& st : res.at("strata")) {
      os << st.at("b").at("factored").get<std::string>() << " on ";
      const auto& closure = st.at("closure");
      os << (closure.empty() ? std::string("affine space") : "V(" + joined(closure) + ")");
      for (const auto& e : st.at("excluded")) os << " minus V(" << joined(e) << ")";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace dmod::cli
