#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wonderful/monomials.hpp"
#include "wonderful/verify.hpp"

namespace wonderful::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& token, const std::string& what) {
  const std::string t = trim(token);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw DomainError("invalid " + what + " '" + token + "'");
  return v;
}

std::string join(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

std::vector<int> one_based(SubsetD s) {
  auto m = s.members();
  for (auto& i : m) ++i;
  return m;
}

Json envelope(const RootSystem& rs) {
  Json j;
  j["group"] = rs.name();
  j["generator_conventions"] = {
      {"numbering", "Bourbaki"},
      {"indices", "1-based"},
      {"words", "products of simple reflections, left to right; [] is the identity"},
      {"weights", "fundamental-weight coordinates"},
  };
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::string group;
  std::string format;
  std::string out;
  std::string weight;
  std::string orbit;
  bool full_order = false;
  bool count_only = false;
  int max_weight = 2;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* a : allowed)
    if (format == a) return;
  throw DomainError("format '" + format + "' is not supported by " + command);
}

// ---------------------------------------------------------------- poset

std::string cmd_poset(const Options& o) {
  const std::string format = o.format.empty() ? "json" : o.format;
  require_format(format, {"json", "csv", "dot"}, "poset");
  const WeylGroup g(parse_group(o.group));
  const OrbitPoset P(g);
  std::ostringstream os;
  if (format == "json") {
    Json j = envelope(g.root_system());
    Json payload = Json::array();
    for (std::size_t i = 0; i < P.size(); ++i) {
      const auto& z = P.label(i);
      Json rec;
      rec["id"] = i;
      rec["I"] = one_based(z.I);
      rec["x"] = g.word_one_based(z.x);
      rec["w"] = g.word_one_based(z.w);
      rec["dim"] = P.dimension(i);
      rec["covers"] = P.covers(i);
      if (o.full_order) {
        std::vector<std::size_t> below;
        const auto& down = P.down_set(i);
        for (auto k = down.find_first(); k != OrbitPoset::Bits::npos; k = down.find_next(k))
          if (k != i) below.push_back(k);
        rec["below"] = below;
      }
      payload.push_back(std::move(rec));
    }
    j["payload"] = std::move(payload);
    return dump(j);
  }
  if (format == "csv") {
    os << "I,x,w,dim,covers\n";
    for (std::size_t i = 0; i < P.size(); ++i) {
      const auto& z = P.label(i);
      std::vector<int> covers(P.covers(i).begin(), P.covers(i).end());
      os << join(one_based(z.I), " ") << ',' << g.word_string(z.x) << ',' << g.word_string(z.w) << ','
         << P.dimension(i) << ',' << join(covers, " ") << '\n';
    }
    return os.str();
  }
  os << "digraph orbits {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    os << "  n" << i << " [label=\"" << to_string(g, P.label(i)) << "\\ndim " << P.dimension(i) << "\"];\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    for (auto c : P.covers(i)) os << "  n" << c << " -> n" << i << ";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------- paths

std::string segments_field(const LSPath& p) {
  std::string out;
  for (std::size_t k = 0; k < p.segments().size(); ++k) {
    if (k) out += ';';
    out += join(p.segments()[k].direction.coords, " ") + ':' + to_string(p.segments()[k].duration);
  }
  return out;
}

Weight dominant_weight(const RootSystem& rs, const std::string& spec) {
  if (spec.empty()) throw DomainError("--weight is required");
  Weight lambda = parse_weight(rs, spec);
  if (!lambda.is_dominant()) throw DomainError("weight not dominant: " + to_string(lambda));
  return lambda;
}

std::string cmd_paths(const Options& o) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  require_format(format, {"json", "csv"}, "paths");
  const WeylGroup g(parse_group(o.group));
  const Weight lambda = dominant_weight(g.root_system(), o.weight);
  PathCache cache(g);
  const auto& entry = cache.get(lambda);
  if (format == "json") {
    Json j = envelope(g.root_system());
    j["weight"] = lambda.coords;
    Json payload = Json::array();
    for (std::size_t k = 0; k < entry.paths.size(); ++k) {
      const auto& p = entry.paths[k];
      Json segs = Json::array();
      for (const auto& s : p.segments()) segs.push_back({{"direction", s.direction.coords}, {"duration", to_string(s.duration)}});
      payload.push_back({{"id", k},
                         {"endpoint", p.endpoint().coords},
                         {"initial_direction", g.word_one_based(entry.initial[k])},
                         {"segments", std::move(segs)}});
    }
    j["payload"] = std::move(payload);
    return dump(j);
  }
  std::ostringstream os;
  os << "id,endpoint,initial_direction,segments\n";
  for (std::size_t k = 0; k < entry.paths.size(); ++k) {
    const auto& p = entry.paths[k];
    os << k << ',' << join(p.endpoint().coords, " ") << ',' << g.word_string(entry.initial[k]) << ','
       << segments_field(p) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- monomials

std::string cmd_monomials(const Options& o) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  require_format(format, {"json", "csv"}, "monomials");
  const WeylGroup g(parse_group(o.group));
  const Weight lambda = dominant_weight(g.root_system(), o.weight);
  if (o.orbit.empty()) throw DomainError("--orbit is required");
  const OrbitLabel z = parse_orbit(g, o.orbit);
  PathCache cache(g);
  const auto indices = enumerate_MZ(cache, z, lambda);
  if (o.count_only) return std::to_string(indices.size()) + "\n";
  const auto table = graded_table(cache, z, lambda);

  if (format == "json") {
    Json j = envelope(g.root_system());
    j["weight"] = lambda.coords;
    j["orbit"] = {{"I", one_based(z.I)}, {"x", g.word_one_based(z.x)}, {"w", g.word_one_based(z.w)}};
    j["count"] = indices.size();
    Json payload = Json::array();
    for (const auto& idx : indices) {
      const auto [wl, wr] = pair_weight(idx.pair);
      payload.push_back({{"n", idx.n.n},
                         {"mu", idx.mu.coords},
                         {"left", idx.left_id},
                         {"right", idx.right_id},
                         {"weight_left", wl.coords},
                         {"weight_right", wr.coords}});
    }
    j["payload"] = std::move(payload);
    Json graded = Json::array();
    for (const auto& row : table.rows) {
      Json entries = Json::array();
      for (const auto& e : row.entries) entries.push_back({{"n", e.n.n}, {"mu", e.mu.coords}, {"count", e.count}});
      graded.push_back({{"degree", row.degree}, {"entries", std::move(entries)}});
    }
    j["graded"] = std::move(graded);
    return dump(j);
  }
  std::ostringstream os;
  os << "n,mu,left,right,weight_left,weight_right\n";
  for (const auto& idx : indices) {
    const auto [wl, wr] = pair_weight(idx.pair);
    os << join(idx.n.n, " ") << ',' << join(idx.mu.coords, " ") << ',' << idx.left_id << ',' << idx.right_id << ','
       << join(wl.coords, " ") << ',' << join(wr.coords, " ") << '\n';
  }
  os << "\ndegree,n,mu,count\n";
  for (const auto& row : table.rows)
    for (const auto& e : row.entries)
      os << row.degree << ',' << join(e.n.n, " ") << ',' << join(e.mu.coords, " ") << ',' << e.count << '\n';
  return os.str();
}

// ---------------------------------------------------------------- verify

const char* status_name(verify::Status s) {
  switch (s) {
    case verify::Status::kPass: return "PASS";
    case verify::Status::kFail: return "FAIL";
    case verify::Status::kSkip: return "SKIP";
  }
  return "?";
}

std::string cmd_verify(const Options& o, bool& failed) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"}, "verify");
  if (o.max_weight < 0) throw DomainError("--max-weight must be nonnegative");
  const WeylGroup g(parse_group(o.group));
  const auto report = verify::run_suite(g, o.max_weight);
  failed = !report.all_passed();
  if (format == "json") {
    Json j = envelope(g.root_system());
    j["max_weight"] = o.max_weight;
    Json payload = Json::array();
    for (const auto& r : report.results)
      payload.push_back({{"check", r.name}, {"status", status_name(r.status)}, {"detail", r.detail}});
    j["payload"] = std::move(payload);
    j["failures"] = report.failures();
    return dump(j);
  }
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& r : report.results) width = std::max(width, r.name.size());
  for (const auto& r : report.results) {
    os << status_name(r.status) << "  " << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail
       << '\n';
  }
  os << report.results.size() << " checks, " << report.failures() << " failed\n";
  return os.str();
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + o.out + "' for writing");
  f << text;
  if (!f) throw DomainError("failed writing '" + o.out + "'");
}

}  // namespace

RootSystem parse_group(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw DomainError("invalid group '" + spec + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDEFG").find(letter) == std::string::npos)
    throw DomainError("unknown type '" + std::string(1, s[0]) + "' in group '" + spec + "'");
  const int rank = parse_int(s.substr(1), "rank in group '" + spec + "':");
  return RootSystem::build(letter, rank);
}

Weight parse_weight(const RootSystem& rs, const std::string& spec) {
  std::vector<int> c;
  for (const auto& tok : split(spec, ',')) c.push_back(parse_int(tok, "weight coordinate"));
  if (static_cast<int>(c.size()) != rs.rank())
    throw DomainError("weight '" + spec + "' has " + std::to_string(c.size()) + " coordinates, expected " +
                      std::to_string(rs.rank()));
  return Weight(std::move(c));
}

WeylElement parse_word(const WeylGroup& g, const std::string& spec) {
  const std::string s = trim(spec);
  if (s == "e") return g.identity();
  if (s == "w0") return g.longest();
  std::vector<int> letters;
  std::size_t k = 0;
  while (k < s.size()) {
    if (s[k] == ' ') {
      ++k;
      continue;
    }
    if (s[k] != 's') throw DomainError("invalid token '" + s.substr(k) + "' in word '" + spec + "'");
    std::size_t e = k + 1;
    while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
    const std::string tok = s.substr(k, e - k);
    if (e == k + 1) throw DomainError("invalid token '" + tok + "' in word '" + spec + "'");
    const int i = parse_int(tok.substr(1), "generator");
    if (i < 1 || i > g.rank()) throw DomainError("generator '" + tok + "' out of range in word '" + spec + "'");
    letters.push_back(i - 1);
    k = e;
  }
  if (letters.empty()) throw DomainError("empty word '" + spec + "'");
  return g.from_word(letters);
}

OrbitLabel parse_orbit(const WeylGroup& g, const std::string& spec) {
  std::optional<SubsetD> I;
  std::optional<WeylElement> x, w;
  for (const auto& part : split(spec, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw DomainError("invalid orbit field '" + part + "'");
    const std::string key = trim(part.substr(0, eq));
    const std::string value = part.substr(eq + 1);
    if (key == "I") {
      std::uint32_t bits = 0;
      if (!trim(value).empty()) {
        for (const auto& tok : split(value, ',')) {
          const int i = parse_int(tok, "index");
          if (i < 1 || i > g.rank()) throw DomainError("index '" + trim(tok) + "' out of range in I");
          bits |= 1u << (i - 1);
        }
      }
      I = SubsetD(bits);
    } else if (key == "x") {
      x = parse_word(g, value);
    } else if (key == "w") {
      w = parse_word(g, value);
    } else {
      throw DomainError("unknown orbit field '" + key + "'");
    }
  }
  if (!I || !x || !w) throw DomainError("orbit '" + spec + "' needs I, x and w");
  return make_orbit(g, *I, *x, *w);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Standard monomial combinatorics on wonderful group compactifications", "wonderful"};
  app.require_subcommand(1);
  Options o;

  auto* poset = app.add_subcommand("poset", "B x B-orbit closures with dimensions and covers");
  auto* paths = app.add_subcommand("paths", "LS-paths of a dominant shape");
  auto* monomials = app.add_subcommand("monomials", "Standard monomial index set of an orbit closure");
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  for (auto* sub : {poset, paths, monomials, verify}) {
    sub->add_option("group", o.group, "Simple type and rank, e.g. A2")->required();
    sub->add_option("--format", o.format, "Output format");
    sub->add_option("--out", o.out, "Write output to a file");
  }
  poset->add_flag("--full-order", o.full_order, "Include the full order relation in JSON");
  for (auto* sub : {paths, monomials})
    sub->add_option("--weight", o.weight, "Dominant weight, comma-separated")->required()->allow_extra_args(false);
  monomials->add_option("--orbit", o.orbit, "Orbit label, e.g. I=1;x=e;w=w0")->required();
  monomials->add_flag("--count-only", o.count_only, "Print |M_Z| only");
  verify->add_option("--max-weight", o.max_weight, "Largest weight coordinate")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }

  try {
    bool failed = false;
    std::string text;
    if (poset->parsed())
      text = cmd_poset(o);
    else if (paths->parsed())
      text = cmd_paths(o);
    else if (monomials->parsed())
      text = cmd_monomials(o);
    else
      text = cmd_verify(o, failed);
    emit(text, o, out);
    return failed ? kExitVerifyFailed : kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace wonderful::cli
