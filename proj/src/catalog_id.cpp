#include "gentropy/catalog_id.hpp"

#include <map>
#include <set>

#include "gentropy/error.hpp"

namespace gentropy {

namespace {

struct ParsedId {
  std::string name;
  std::map<std::string, double, std::less<>> values;
};

ParsedId split_id(std::string_view id) {
  ParsedId out;
  const auto colon = id.find(':');
  out.name = std::string(id.substr(0, colon));
  if (out.name.empty()) throw Error(Errc::ParseError, "empty identifier");
  if (colon == std::string_view::npos) return out;
  std::string_view rest = id.substr(colon + 1);
  if (rest.empty()) throw Error(Errc::ParseError, "'" + std::string(id) + "': no parameters after ':'");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw Error(Errc::ParseError, "'" + std::string(item) + "' is not key=value");
    std::string key(item.substr(0, eq));
    if (out.values.count(key)) throw Error(Errc::ParseError, "duplicate key '" + key + "'");
    out.values.emplace(std::move(key), parse_real(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

class Reader {
 public:
  explicit Reader(ParsedId id) : id_(std::move(id)) {}

  double required(const std::string& key) {
    auto it = id_.values.find(key);
    if (it == id_.values.end())
      throw Error(Errc::ParseError, id_.name + ": missing parameter '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  double optional(const std::string& key, double fallback) {
    if (!id_.values.count(key)) return fallback;
    return required(key);
  }

  void done() const {
    for (const auto& [k, v] : id_.values)
      if (!used_.count(k)) throw Error(Errc::ParseError, id_.name + ": unknown parameter '" + k + "'");
  }

 private:
  ParsedId id_;
  std::set<std::string> used_;
};

}  // namespace

Entropy parse_entropy(std::string_view id) {
  ParsedId parsed = split_id(id);
  const std::string name = parsed.name;
  Reader r(std::move(parsed));
  Entropy out = [&]() -> Entropy {
    if (name == "bg") return bg_generator(r.optional("c", 1.0));
    if (name == "tsallis") {
      const double q = r.required("q");
      const double c = r.optional("c", 1.0);
      if (q == 1.0) return bg_generator(c);
      return tsallis_generator(q, c);
    }
    if (name == "twopower") {
      const double q1 = r.required("q1");
      return two_power_generator(q1, r.required("q2"));
    }
    if (name == "renyi") return renyi_spec(r.required("alpha"));
    if (name == "logpow") {
      const double a = r.required("a");
      const double b = r.required("b");
      return log_spec(a, b, r.required("q"));
    }
    throw Error(Errc::ParseError, "unknown entropy '" + name + "'");
  }();
  r.done();
  return out;
}

CompositionLaw parse_law(std::string_view id) {
  if (id == "additive") return CompositionLaw::additive();
  constexpr std::string_view kRenyiType = "renyitype:";
  if (id.substr(0, kRenyiType.size()) == kRenyiType) {
    const std::string_view body = id.substr(kRenyiType.size());
    constexpr std::string_view kAlpha = ",alpha=";
    const auto cut = body.rfind(kAlpha);
    if (cut == std::string_view::npos)
      throw Error(Errc::ParseError, "renyitype law needs ',alpha=<r>' after the spec id");
    const double alpha = parse_real(body.substr(cut + kAlpha.size()));
    Entropy spec = parse_entropy(body.substr(0, cut));
    auto* nt = std::get_if<NonTraceSpec>(&spec);
    if (!nt) throw Error(Errc::ParseError, "renyitype law needs a non-trace spec");
    return CompositionLaw::renyi_type(std::move(*nt), alpha);
  }
  ParsedId parsed = split_id(id);
  if (parsed.name != "mult") throw Error(Errc::ParseError, "unknown law '" + std::string(id) + "'");
  Reader r(std::move(parsed));
  const double alpha = r.required("alpha");
  r.done();
  return CompositionLaw::multiplicative(alpha);
}

std::string format_entropy_id(const Entropy& s) {
  const std::string& name = entropy_name(s);
  const Params& params = entropy_params(s);
  if (name == "bg" && params.size() == 1 && params[0].second == 1.0) return name;
  std::string out = name;
  char sep = ':';
  for (const auto& [k, v] : params) {
    out += sep;
    out += k + "=" + format_real(v);
    sep = ',';
  }
  return out;
}

std::string format_law_id(const CompositionLaw& law) {
  switch (law.kind()) {
    case LawKind::Additive: return "additive";
    case LawKind::Multiplicative: return "mult:alpha=" + format_real(law.alpha());
    case LawKind::RenyiType: break;
  }
  return "renyitype:" + format_entropy_id(Entropy(*law.conjugation())) +
         ",alpha=" + format_real(law.alpha());
}

}  // namespace gentropy
