#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "problem.hpp"
#include "serialize.hpp"
#include "svg.hpp"

namespace gitfan::cli {
namespace {

using io::Json;

const std::vector<std::string> kCommands = {
    "fan", "unstable", "chow", "betti", "picard", "ample",
    "test-point", "effective", "walls", "svg"};

// Mathematically empty result, reported with exit code 1.
struct EmptyResult {
  std::string kind;
  std::string message;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw InternalError("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  }
  return os.str();
}

unsigned thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GITFAN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(v);
  }
  return n;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    out.push_back(cur);
  }
  return out;
}

LatVec parse_chi(const std::string& text, const io::Problem& p,
                 std::size_t char_rank) {
  LatVec v;
  if (auto it = p.characters.find(text); it != p.characters.end()) {
    v = it->second;
  } else {
    for (const auto& tok : split(text)) {
      Integer x;
      if (tok.empty() || x.set_str(tok, 10) != 0) {
        throw io::SchemaError("--chi: '" + text +
                              "' is neither a named character nor a list of integers");
      }
      v.push_back(x);
    }
  }
  if (v.size() != char_rank) {
    throw io::SchemaError("--chi: expected " + std::to_string(char_rank) +
                          " coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

Support parse_support(const std::string& text) {
  Support s;
  if (text.empty()) return s;
  for (const auto& tok : split(text)) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
      throw io::SchemaError("--support: '" + tok + "' is not a column index");
    }
    s.push_back(std::stoul(tok));
  }
  return s;
}

Json error_doc(const std::string& kind, const std::string& message) {
  Json doc;
  doc["error"]["kind"] = kind;
  doc["error"]["message"] = message;
  return doc;
}

struct Request {
  std::string command;
  std::string problem_path;
  std::string chi;
  std::string support;
  std::string variant = "stable";
  std::string out;
};

Json support_list(const std::vector<Support>& ss) {
  Json out = Json::array();
  for (const auto& s : ss) out.push_back(s);
  return out;
}

class Runner {
 public:
  Runner(const Request& req, const io::Problem& problem, const GroupData& gd,
         const WeightSystem& ws)
      : req_(req), problem_(problem), gd_(gd), ws_(ws) {
    opts_.threads = thread_count();
    variant_ = req.variant == "semistable" ? Variant::semistable
                                           : Variant::properly_stable;
  }

  Json payload() {
    const std::string& c = req_.command;
    if (c == "fan") return fan_payload();
    if (c == "walls") return walls_payload();
    if (c == "effective") return effective_payload();
    if (c == "unstable") return unstable_payload();
    if (c == "test-point") return test_point_payload();
    if (c == "chow" || c == "betti" || c == "picard" || c == "ample") {
      return quotient_payload();
    }
    throw InternalError("unknown command " + c);
  }

  std::string svg() { return io::render_fan_svg(fan()); }

 private:
  const GITFan& fan() {
    if (!fan_) fan_ = git_fan(gd_, ws_, opts_);
    return *fan_;
  }

  Character character() {
    if (req_.chi.empty()) {
      throw io::SchemaError("--chi is required for '" + req_.command + "'");
    }
    return gd_.character(parse_chi(req_.chi, problem_, gd_.char_rank()));
  }

  Json fan_payload() {
    Json p;
    p["columns"] = io::columns_json(ws_);
    const Json body = io::to_json(fan());
    for (const auto& [k, v] : body.items()) p[k] = v;
    return p;
  }

  Json walls_payload() {
    Json p;
    Json walls = Json::array();
    for (const auto& w : fan().walls) walls.push_back(io::to_json(w));
    p["walls"] = std::move(walls);
    p["complete"] = fan().walls_complete;
    return p;
  }

  Json effective_payload() {
    Json p;
    p["effective_cone"] = io::to_json(fan().effective_cone);
    if (!req_.chi.empty()) {
      const Character chi = character();
      p["character"] = io::to_json(chi.coords);
      p["effective"] = is_effective(gd_, ws_, chi);
    }
    return p;
  }

  Json unstable_payload() {
    const Character chi = character();
    Json p;
    p["columns"] = io::columns_json(ws_);
    p["character"] = io::to_json(chi.coords);
    p["variant"] = io::name(variant_);
    p["effective"] = is_effective(gd_, ws_, chi);
    Json comps = Json::array();
    for (const auto& c : unstable_components(gd_, ws_, chi, variant_)) {
      comps.push_back(io::to_json(c));
    }
    p["components"] = std::move(comps);
    p["semistable_supports"] =
        support_list(minimal_semistable_supports(ws_, chi.embedded));
    return p;
  }

  Json test_point_payload() {
    const Character chi = character();
    PointSupport x;
    x.support = parse_support(req_.support);
    Json p;
    p["character"] = io::to_json(chi.coords);
    p["support"] = x.resolve(ws_);
    p["certificate"] = io::to_json(point_test(gd_, ws_, chi.embedded, x));
    return p;
  }

  Json quotient_payload() {
    const Character chi = character();
    if (!is_effective(gd_, ws_, chi)) {
      throw EmptyResult{"not_effective", "character " + to_string(chi.coords) +
                                             " is outside the effective cone"};
    }
    const Chamber ch = chamber_of(gd_, ws_, fan(), chi);
    Json p;
    p["character"] = io::to_json(chi.coords);
    p["chamber"] = *chamber_lookup(fan(), chi).cone_index;
    p["properly_stable"] = io::name(ch.properly_stable);
    const std::string& c = req_.command;
    if (c == "chow" || c == "betti") {
      const InvariantPresentation pres = chow_presentation(gd_, ws_, ch, variant_);
      if (c == "chow") {
        p["presentation"] = io::to_json(pres);
      } else {
        p["quotient"] = pres.quotient;
        p["projective"] = invariants_trivial(ws_);
        p["dim_quotient"] = pres.dim_quotient;
        p["betti"] = io::to_json(betti_numbers(pres));
      }
    } else {
      const PicardPresentation pic = picard_and_ample(gd_, ws_, ch);
      if (c == "picard") {
        p["picard"] = io::to_json(pic);
      } else {
        p["quotient_basis"] = io::to_json(pic.quotient_basis);
        p["ample_cone_closure"] = io::to_json(pic.ample_cone);
        p["open"] = true;
      }
    }
    return p;
  }

  const Request& req_;
  const io::Problem& problem_;
  const GroupData& gd_;
  const WeightSystem& ws_;
  FanOptions opts_;
  Variant variant_;
  std::optional<GITFan> fan_;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::SchemaError("cannot write " + path);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "gitfan: GIT fans, unstable loci and quotient rings for linear actions "
      "of tori and products of general linear groups.\n"
      "Characters (--chi) are given in the X^*(G) basis: one determinant "
      "coordinate per GL block, then the torus coordinates; a name from the "
      "problem's \"characters\" table is also accepted. Use --chi=-1,2 for "
      "leading minus signs.",
      "gitfan"};
  Request req;
  app.add_option("command", req.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("problem", req.problem_path, "Problem file (JSON)")->required();
  app.add_option("--chi", req.chi, "Character: comma-separated coordinates or a name");
  app.add_option("--support", req.support,
                 "Comma-separated weight-column indices (test-point)");
  app.add_option("--variant", req.variant, "Stability variant")
      ->check(CLI::IsMember({"semistable", "stable"}));
  app.add_option("--out", req.out, "Write the result here instead of stdout");
  app.set_version_flag("--version", kVersion);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_doc("schema", e.what()).dump(2) << '\n';
    return kSchema;
  }

  try {
    std::ifstream in(req.problem_path, std::ios::binary);
    if (!in) throw io::SchemaError("cannot read " + req.problem_path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const io::Problem problem = io::parse_problem(text);
    auto built = [&] {
      try {
        return build_group(problem.group, problem.module);
      } catch (const InvalidInput& e) {
        throw io::SchemaError(e.what());
      }
    }();
    const GroupData& gd = built.first;
    const WeightSystem& ws = built.second;
    Runner runner(req, problem, gd, ws);

    if (req.command == "svg") {
      try {
        emit(runner.svg(), req.out, out);
      } catch (const Unsupported& e) {
        throw EmptyResult{"unsupported_rank", e.what()};
      }
      return kOk;
    }

    Json doc;
    doc["command"]["name"] = req.command;
    doc["command"]["problem"] = req.problem_path;
    if (!req.chi.empty()) doc["command"]["chi"] = req.chi;
    if (!req.support.empty()) doc["command"]["support"] = req.support;
    doc["command"]["variant"] = req.variant;
    doc["input_sha256"] = sha256_hex(text);
    doc["version"] = kVersion;
    doc["payload"] = runner.payload();
    emit(doc.dump(2) + "\n", req.out, out);
    return kOk;
  } catch (const EmptyResult& e) {
    out << error_doc(e.kind, e.message).dump(2) << '\n';
    return kEmpty;
  } catch (const io::SchemaError& e) {
    out << error_doc("schema", e.what()).dump(2) << '\n';
    return kSchema;
  } catch (const DimensionMismatch& e) {
    out << error_doc("schema", e.what()).dump(2) << '\n';
    return kSchema;
  } catch (const InvalidInput& e) {
    out << error_doc("invalid_input", e.what()).dump(2) << '\n';
    return kSchema;
  } catch (const Unsupported& e) {
    out << error_doc("unsupported", e.what()).dump(2) << '\n';
    return kEmpty;
  } catch (const std::exception& e) {
    err << "gitfan: internal error: " << e.what() << '\n';
    out << error_doc("internal", e.what()).dump(2) << '\n';
    return 3;
  }
}

}  // namespace gitfan::cli
