#include "weylmult/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "weylmult/basis.hpp"
#include "weylmult/branch.hpp"
#include "weylmult/monomial.hpp"
#include "weylmult/mult.hpp"
#include "weylmult/oracle.hpp"
#include "weylmult/parallel.hpp"
#include "weylmult/pbw.hpp"
#include "weylmult/sweep.hpp"

namespace weylmult::cli {

namespace {

using nlohmann::json;

json tuple_json(const std::vector<std::int64_t>& v) {
  json a = json::array();
  for (std::int64_t c : v) a.push_back(c);
  return a;
}

std::string render_tuple(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) os << ',';
    os << v[t];
  }
  os << ')';
  return os.str();
}

struct Options {
  int rank = 0;
  std::vector<std::int64_t> lambda;
  std::vector<std::int64_t> mu;
  std::vector<std::int64_t> content;
  std::string method;
  std::string format = "text";
  std::string word;
  std::string cache_path;
  std::uint64_t max_basis = 10'000'000;
  std::uint64_t max_terms = 1'000'000;
  int max_rank = 3;
  int max_coord = 2;
  int threads = 0;
};

bool validate_weight(const Options& o, std::ostream& err, Weight& lambda) {
  if (o.rank < 1) {
    err << "error: --rank must be >= 1\n";
    return false;
  }
  if (o.lambda.size() != static_cast<std::size_t>(o.rank)) {
    err << "error: --lambda must have exactly " << o.rank << " coordinates\n";
    return false;
  }
  lambda = Weight(o.lambda);
  if (!is_dominant(lambda)) {
    err << "error: --lambda must be dominant (all coordinates >= 0)\n";
    return false;
  }
  return true;
}

bool validate_mu(const Options& o, std::ostream& err, Weight& mu) {
  if (o.mu.size() != static_cast<std::size_t>(o.rank)) {
    err << "error: --mu must have exactly " << o.rank << " coordinates\n";
    return false;
  }
  mu = Weight(o.mu);
  return true;
}

// ---- cache file ------------------------------------------------------

// JSON cache: {"freudenthal":[{lambda,mu,rank,value}...],
//              "mult":[{lambda,mu,rank,value}...]}.
// A file that fails any shape check is ignored whole, with a warning.
class CacheFile {
 public:
  CacheFile(std::string path, std::ostream& err) : path_(std::move(path)) {
    if (path_.empty()) return;
    active_ = true;
    std::ifstream in(path_);
    if (!in) return;  // nonexistent file: start empty
    try {
      json j;
      in >> j;
      load(j);
    } catch (const std::exception& e) {
      err << "warning: ignoring corrupt cache file " << path_ << " (" << e.what() << ")\n";
      mult_.clear();
      freud_.clear();
    }
  }

  bool active() const { return active_; }

  void preload_mult(MultMemo& memo) const {
    for (const auto& [key, value] : mult_) memo.store(key, value);
  }

  void preload_freudenthal(FreudenthalTable& table) const {
    for (const auto& [key, value] : freud_) {
      if (key.first != table.lambda().coords) continue;
      const auto a = weight_to_alpha(weight_diff(table.lambda(), Weight(key.second)));
      if (a) table.preload(a->coeffs, value);
    }
  }

  void absorb(const MultMemo& memo) {
    for (const auto& [key, value] : memo.snapshot()) mult_[key] = value;
  }

  void absorb(const FreudenthalTable& table) {
    for (const auto& [a, value] : table.snapshot())
      freud_[{table.lambda().coords, weight_minus_alpha(table.lambda(), a).coords}] = value;
  }

  void save(std::ostream& err) const {
    if (!active_) return;
    json j;
    j["mult"] = json::array();
    for (const auto& [key, value] : mult_) {
      json e;
      e["rank"] = key.rank;
      e["lambda"] = tuple_json(key.lambda);
      e["mu"] = tuple_json(key.mu);
      e["value"] = value.get_str();
      j["mult"].push_back(e);
    }
    j["freudenthal"] = json::array();
    for (const auto& [key, value] : freud_) {
      json e;
      e["rank"] = static_cast<int>(key.first.size());
      e["lambda"] = tuple_json(key.first);
      e["mu"] = tuple_json(key.second);
      e["value"] = value.get_str();
      j["freudenthal"].push_back(e);
    }
    std::ofstream out(path_);
    if (!out) {
      err << "warning: cannot write cache file " << path_ << "\n";
      return;
    }
    out << j.dump() << '\n';
  }

 private:
  static std::vector<std::int64_t> int_tuple(const json& a, std::size_t len) {
    if (!a.is_array() || a.size() != len) throw std::invalid_argument("bad tuple");
    std::vector<std::int64_t> v;
    for (const auto& x : a) {
      if (!x.is_number_integer()) throw std::invalid_argument("bad tuple entry");
      v.push_back(x.get<std::int64_t>());
    }
    return v;
  }

  void load(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("cache root is not an object");
    for (const char* section : {"mult", "freudenthal"}) {
      if (!j.contains(section)) continue;
      if (!j[section].is_array()) throw std::invalid_argument("cache section is not an array");
      for (const auto& e : j[section]) {
        const int rank = e.at("rank").get<int>();
        if (rank < 1) throw std::invalid_argument("bad rank");
        auto lambda = int_tuple(e.at("lambda"), static_cast<std::size_t>(rank));
        auto mu = int_tuple(e.at("mu"), static_cast<std::size_t>(rank));
        const BigInt value(e.at("value").get<std::string>());
        if (value < 0) throw std::invalid_argument("negative multiplicity");
        if (std::string(section) == "mult")
          mult_[MemoKey{rank, std::move(lambda), std::move(mu)}] = value;
        else
          freud_[{std::move(lambda), std::move(mu)}] = value;
      }
    }
  }

  std::string path_;
  bool active_ = false;
  std::map<MemoKey, BigInt> mult_;
  std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, BigInt> freud_;
};

std::string cache_path_or_env(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("WEYLMULT_CACHE")) return env;
  return {};
}

// ---- word parsing ----------------------------------------------------

bool parse_factor(const std::string& tok, int rank, Factor& f, std::string& msg) {
  std::size_t pos = 0;
  const auto digits = [&](std::int64_t& out) {
    if (pos >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos]))) return false;
    std::int64_t v = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      v = v * 10 + (tok[pos] - '0');
      if (v > (std::int64_t(1) << 40)) return false;
      ++pos;
    }
    out = v;
    return true;
  };
  std::int64_t lo = 0, hi = 0, power = 1;
  if (pos >= tok.size() || tok[pos] != 'f') {
    msg = "factor must start with 'f': " + tok;
    return false;
  }
  ++pos;
  if (!digits(lo)) {
    msg = "missing generator index in: " + tok;
    return false;
  }
  hi = lo;
  if (pos < tok.size() && (tok[pos] == '~' || tok[pos] == '-')) {
    ++pos;
    if (!digits(hi)) {
      msg = "missing interval end in: " + tok;
      return false;
    }
  }
  if (pos < tok.size() && tok[pos] == '^') {
    ++pos;
    if (!digits(power)) {
      msg = "missing power in: " + tok;
      return false;
    }
  }
  if (pos != tok.size()) {
    msg = "trailing characters in factor: " + tok;
    return false;
  }
  if (lo < 1 || lo > hi || hi > rank) {
    msg = "root interval out of range for rank: " + tok;
    return false;
  }
  if (power < 1) {
    msg = "powers must be >= 1: " + tok;
    return false;
  }
  f = Factor{RootInterval{static_cast<int>(lo), static_cast<int>(hi)}, power};
  return true;
}

bool parse_word(const std::string& s, int rank, FactorWord& out, std::string& msg) {
  out.clear();
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    Factor f;
    if (!parse_factor(tok, rank, f, msg)) return false;
    out.push_back(f);
  }
  if (out.empty()) {
    msg = "empty word";
    return false;
  }
  return true;
}

// ---- command handlers ------------------------------------------------

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

json base_json(const char* command, const Options& o, bool with_lambda = true) {
  json j;
  j["command"] = command;
  if (with_lambda) {
    j["rank"] = o.rank;
    j["lambda"] = tuple_json(o.lambda);
  } else {
    j["rank"] = nullptr;
    j["lambda"] = nullptr;
  }
  return j;
}

int cmd_dim(const Options& o, std::ostream& out, std::ostream& err) {
  Weight lambda;
  if (!validate_weight(o, err, lambda)) return kExitBadArgs;
  const std::string method = o.method.empty() ? "weyl" : o.method;
  BigInt value;
  if (method == "weyl")
    value = weyl_dim(lambda);
  else if (method == "enum")
    value = count_basis_parallel(lambda, nullptr, o.max_basis);
  else {
    err << "error: --method must be weyl or enum\n";
    return kExitBadArgs;
  }
  if (o.format == "json") {
    json j = base_json("dim", o);
    j["value"] = value.get_str();
    emit(out, j);
  } else {
    out << value.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_mult(const Options& o, std::ostream& out, std::ostream& err) {
  Weight lambda, mu;
  if (!validate_weight(o, err, lambda)) return kExitBadArgs;
  if (!validate_mu(o, err, mu)) return kExitBadArgs;
  const std::string method = o.method.empty() ? "recursive" : o.method;
  if (method != "recursive" && method != "count" && method != "freudenthal" && method != "all") {
    err << "error: --method must be recursive, count, freudenthal or all\n";
    return kExitBadArgs;
  }

  CacheFile cache(cache_path_or_env(o.cache_path), err);
  MultMemo memo;
  FreudenthalTable freud(lambda);
  cache.preload_mult(memo);
  cache.preload_freudenthal(freud);

  std::map<std::string, BigInt> values;
  std::vector<SelectedComponent> selection;
  if (method == "recursive" || method == "all") {
    values["recursive"] = mult_recursive(lambda, mu, memo);
    selection = mult_selection(lambda, mu, memo);
    cache.absorb(memo);
  }
  if (method == "count" || method == "all")
    values["count"] = mult_count_parallel(lambda, mu, o.max_basis);
  if (method == "freudenthal" || method == "all") {
    values["freudenthal"] = freud.mult(mu);
    cache.absorb(freud);
  }
  cache.save(err);

  bool agree = true;
  for (const auto& [name, v] : values)
    if (v != values.begin()->second) agree = false;

  if (o.format == "json") {
    json j = base_json("mult", o);
    j["mu"] = tuple_json(o.mu);
    j["method"] = method;
    if (method == "all") {
      json vs;
      for (const auto& [name, v] : values) vs[name] = v.get_str();
      j["values"] = vs;
    } else {
      j["value"] = values.begin()->second.get_str();
    }
    emit(out, j);
  } else if (method == "all") {
    out << "count: " << values["count"].get_str() << '\n';
    out << "freudenthal: " << values["freudenthal"].get_str() << '\n';
    out << "recursive: " << values["recursive"].get_str() << '\n';
  } else {
    out << values.begin()->second.get_str() << '\n';
    if (method == "recursive" && lambda.rank() >= 2 && !selection.empty()) {
      out << "selected components:\n";
      for (const auto& sc : selection)
        out << "  s=" << sc.s << "  P=" << render_index(pad_pi_prime(sc.P))
            << "  hw=" << render_weight(sc.highest_weight)
            << "  summand=" << sc.summand.get_str() << '\n';
    }
  }

  if (!agree) {
    err << "mismatch:";
    for (const auto& [name, v] : values) err << ' ' << name << '=' << v.get_str();
    err << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_branch(const Options& o, std::ostream& out, std::ostream& err) {
  Weight lambda;
  if (!validate_weight(o, err, lambda)) return kExitBadArgs;
  if (o.rank < 2) {
    err << "error: branch requires rank >= 2\n";
    return kExitBadArgs;
  }
  const auto comps = branch(lambda);
  if (o.format == "json") {
    json j = base_json("branch", o);
    json cs = json::array();
    for (const auto& c : comps) {
      json e;
      e["s"] = c.s;
      e["P"] = tuple_json(c.P.p);
      e["hw"] = tuple_json(c.highest_weight.coords);
      e["dim"] = c.dim.get_str();
      cs.push_back(e);
    }
    j["components"] = cs;
    emit(out, j);
  } else {
    for (const auto& c : comps)
      out << c.s << ", " << render_index(pad_pi_prime(c.P)) << ", "
          << render_weight(c.highest_weight) << ", " << c.dim.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_basis(const Options& o, std::ostream& out, std::ostream& err) {
  Weight lambda;
  if (!validate_weight(o, err, lambda)) return kExitBadArgs;
  AlphaVector filter;
  const AlphaVector* fptr = nullptr;
  if (!o.content.empty()) {
    if (o.content.size() != static_cast<std::size_t>(o.rank)) {
      err << "error: --content must have exactly " << o.rank << " coordinates\n";
      return kExitBadArgs;
    }
    for (std::int64_t c : o.content)
      if (c < 0) {
        err << "error: --content coordinates must be >= 0\n";
        return kExitBadArgs;
      }
    filter = AlphaVector(o.content);
    fptr = &filter;
  }

  std::uint64_t count = 0;
  if (o.format == "json") {
    json elems = json::array();
    enumerate_basis(
        lambda, fptr,
        [&](const MonomialIndex& K) {
          json e;
          e["K"] = tuple_json(K.entries);
          e["theta"] = render_theta(K);
          elems.push_back(e);
          ++count;
          return true;
        },
        o.max_basis);
    json j = base_json("basis", o);
    j["content"] = fptr ? tuple_json(o.content) : json(nullptr);
    j["count"] = std::to_string(count);
    j["elements"] = elems;
    emit(out, j);
  } else {
    enumerate_basis(
        lambda, fptr,
        [&](const MonomialIndex& K) {
          out << render_index(K) << "  " << render_theta(K) << '\n';
          ++count;
          return true;
        },
        o.max_basis);
    out << "count: " << count << '\n';
  }
  return kExitOk;
}

int cmd_char(const Options& o, std::ostream& out, std::ostream& err) {
  Weight lambda;
  if (!validate_weight(o, err, lambda)) return kExitBadArgs;
  const std::string method = o.method.empty() ? "count" : o.method;

  CacheFile cache(cache_path_or_env(o.cache_path), err);
  Character ch;
  if (method == "count") {
    ch = character_count_parallel(lambda, o.max_basis);
  } else if (method == "recursive") {
    MultMemo memo;
    cache.preload_mult(memo);
    ch = character(lambda, CharMethod::recursive, o.max_basis, &memo, nullptr);
    cache.absorb(memo);
  } else if (method == "freudenthal") {
    FreudenthalTable freud(lambda);
    cache.preload_freudenthal(freud);
    ch = character(lambda, CharMethod::freudenthal, o.max_basis, nullptr, &freud);
    cache.absorb(freud);
  } else {
    err << "error: --method must be count, recursive or freudenthal\n";
    return kExitBadArgs;
  }
  cache.save(err);

  if (o.format == "json") {
    json j = base_json("char", o);
    j["method"] = method;
    json table = json::array();
    for (const auto& [mu, m] : ch.table) {
      json e;
      e["mu"] = tuple_json(mu);
      e["mult"] = m.get_str();
      table.push_back(e);
    }
    j["character"] = table;
    j["total"] = ch.total_mass().get_str();
    emit(out, j);
  } else {
    for (const auto& [mu, m] : ch.table)
      out << render_tuple(mu) << ": " << m.get_str() << '\n';
    out << "total: " << ch.total_mass().get_str() << '\n';
  }
  return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.rank < 1) {
    err << "error: --rank must be >= 1\n";
    return kExitBadArgs;
  }
  FactorWord word;
  std::string msg;
  if (!parse_word(o.word, o.rank, word, msg)) {
    err << "error: " << msg << '\n';
    return kExitBadArgs;
  }
  const PBWPolynomial p = straighten(o.rank, word, Strategy::leftmost, o.max_terms);
  const auto [lead, coeff] = leading(p);

  if (o.format == "json") {
    json j = base_json("expand", o, /*with_lambda=*/false);
    j["rank"] = o.rank;
    j["word"] = render_word(word);
    json terms = json::array();
    for (const auto& [exps, c] : p.terms) {
      json e;
      e["exps"] = tuple_json(exps);
      e["coeff"] = c.get_str();
      terms.push_back(e);
    }
    j["terms"] = terms;
    j["leading"] = {{"exps", tuple_json(lead.entries)}, {"coeff", coeff.get_str()}};
    emit(out, j);
  } else {
    out << "word: " << render_word(word) << '\n';
    out << "normal: " << render(p) << '\n';
    out << "leading: " << render_exponents(lead) << "  coefficient " << coeff.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.max_rank < 1 || o.max_coord < 0) {
    err << "error: --max-rank must be >= 1 and --max-coord >= 0\n";
    return kExitBadArgs;
  }
  const auto results = run_all_sweeps(o.max_rank, o.max_coord);
  bool all_pass = true;
  if (o.format == "json") {
    json j = base_json("verify", o, /*with_lambda=*/false);
    j["max_rank"] = o.max_rank;
    j["max_coord"] = o.max_coord;
    json props = json::array();
    for (const auto& r : results) {
      json e;
      e["name"] = r.name;
      e["pass"] = r.pass;
      e["cases"] = r.cases;
      e["detail"] = r.detail;
      props.push_back(e);
      all_pass = all_pass && r.pass;
    }
    j["properties"] = props;
    emit(out, j);
  } else {
    for (const auto& r : results) {
      if (r.pass) {
        out << "PASS " << r.name << " [cases=" << r.cases << "]\n";
      } else {
        out << "FAIL " << r.name << ": " << r.detail << '\n';
        all_pass = false;
      }
    }
    out << (all_pass ? "all properties passed\n" : "verification failed\n");
  }
  return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"monomial bases, branching and weight multiplicities for type-A modules"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "OpenMP thread count (0 = library default)");

  const auto add_common = [&](CLI::App* cmd, bool needs_mu) {
    cmd->add_option("--rank", o.rank, "rank l of A_l")->required();
    cmd->add_option("--lambda", o.lambda, "highest weight, comma separated")
        ->required()
        ->delimiter(',');
    if (needs_mu)
      cmd->add_option("--mu", o.mu, "target weight, comma separated")->required()->delimiter(',');
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* dim_cmd = app.add_subcommand("dim", "module dimension");
  add_common(dim_cmd, false);
  dim_cmd->add_option("--method", o.method)->check(CLI::IsMember({"weyl", "enum"}));
  dim_cmd->add_option("--max-basis", o.max_basis, "enumeration cap");

  CLI::App* mult_cmd = app.add_subcommand("mult", "weight multiplicity");
  add_common(mult_cmd, true);
  mult_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"recursive", "count", "freudenthal", "all"}));
  mult_cmd->add_option("--cache", o.cache_path, "memo cache file (default $WEYLMULT_CACHE)");
  mult_cmd->add_option("--max-basis", o.max_basis, "enumeration cap");

  CLI::App* branch_cmd = app.add_subcommand("branch", "restriction to rank l-1");
  add_common(branch_cmd, false);

  CLI::App* basis_cmd = app.add_subcommand("basis", "stream the monomial basis");
  add_common(basis_cmd, false);
  basis_cmd->add_option("--content", o.content, "restrict to one root-lattice content")
      ->delimiter(',');
  basis_cmd->add_option("--max-basis", o.max_basis, "enumeration cap");

  CLI::App* char_cmd = app.add_subcommand("char", "full weight multiplicity table");
  add_common(char_cmd, false);
  char_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"count", "recursive", "freudenthal"}));
  char_cmd->add_option("--cache", o.cache_path, "memo cache file (default $WEYLMULT_CACHE)");
  char_cmd->add_option("--max-basis", o.max_basis, "enumeration cap");

  CLI::App* expand_cmd = app.add_subcommand("expand", "straighten a product of divided powers");
  expand_cmd->add_option("--rank", o.rank, "rank l of A_l")->required();
  expand_cmd->add_option("--word", o.word, "factors, e.g. f2^2,f1^1 or f1~3^2")->required();
  expand_cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  expand_cmd->add_option("--max-terms", o.max_terms, "straightening term cap");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification sweeps");
  verify_cmd->add_option("--max-rank", o.max_rank, "largest rank to sweep");
  verify_cmd->add_option("--max-coord", o.max_coord, "largest weight coordinate to sweep");
  verify_cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  if (o.threads > 0) omp_set_num_threads(o.threads);

  try {
    if (app.got_subcommand(dim_cmd)) return cmd_dim(o, out, err);
    if (app.got_subcommand(mult_cmd)) return cmd_mult(o, out, err);
    if (app.got_subcommand(branch_cmd)) return cmd_branch(o, out, err);
    if (app.got_subcommand(basis_cmd)) return cmd_basis(o, out, err);
    if (app.got_subcommand(char_cmd)) return cmd_char(o, out, err);
    if (app.got_subcommand(expand_cmd)) return cmd_expand(o, out, err);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(o, out, err);
  } catch (const resource_limit_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
  err << "error: no command\n";
  return kExitBadArgs;
}

}  // namespace weylmult::cli
