// tqd: exact engine for braid-group representations built from twisted doubles
// of finite groups.  Subcommands: group info, selftest, rep emit, image
// braid|pure, report, coxeter, filtration.  Exit codes: 0 ok, 1 verification
// failure, 2 budget incomplete, 3 input error.

#include <fcntl.h>
#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tqd/analysis.hpp"
#include "tqd/double_algebra.hpp"
#include "tqd/spec_parse.hpp"

using nlohmann::json;
using namespace tqd;

namespace {

constexpr int kFormatVersion = 1;

struct Job {
  std::string group = "trivial";
  std::string cocycle = "trivial";
  int n = 2;
  std::size_t max_elements = 1000000;
  std::string format = "text";
  std::string cache;
  std::string variant = "theta:standard";
};

// --variant accepts `theta:standard`, `theta:printed`, or the bare value.
std::string normalized_variant(const std::string& v) {
  std::string s = v.rfind("theta:", 0) == 0 ? v.substr(6) : v;
  if (s != "standard" && s != "printed")
    throw std::runtime_error("unrecognized variant '" + v +
                             "' (expected theta:standard or theta:printed)");
  return s;
}

DoubleOptions algebra_options(const Job& job) {
  DoubleOptions opt;
  opt.theta =
      normalized_variant(job.variant) == "printed" ? ThetaVariant::printed : ThetaVariant::standard;
  return opt;
}

// ---- cache ----------------------------------------------------------------

std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string cache_file_name(const Job& job, const std::string& which) {
  std::string raw = job.group + "~" + job.cocycle + "~" + std::to_string(job.n) + "~" + which +
                    "~" + normalized_variant(job.variant) + "~" + std::to_string(job.max_elements);
  std::string safe;
  for (char c : raw)
    safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-')
                ? c
                : '_';
  if (safe.size() > 80) safe.resize(80);
  return safe + "-" + fnv1a_hex(raw) + ".json";
}

// Advisory lock so two processes never write the cache at once; a stale lock
// is waited out, then overridden rather than deadlocking.
class CacheLock {
 public:
  explicit CacheLock(const std::string& dir) : path_(dir + "/lock") {
    for (int i = 0; i < 500; ++i) {
      fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
      if (fd_ >= 0) return;
      ::usleep(10000);
    }
  }
  ~CacheLock() {
    if (fd_ >= 0) {
      ::close(fd_);
      ::unlink(path_.c_str());
    }
  }

 private:
  std::string path_;
  int fd_ = -1;
};

std::optional<std::string> cache_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void cache_write(const std::string& dir, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(dir);
  CacheLock lock(dir);
  std::string path = dir + "/" + name;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

// ---- rendering ------------------------------------------------------------

std::string num_or(const json& v, const std::string& fallback) {
  return v.is_null() ? fallback : std::to_string(v.get<long long>());
}

std::string yn(const json& v) {
  return v.is_null() ? "unknown" : (v.get<bool>() ? "yes" : "no");
}

json report_to_json(const ImageReport& rep, const std::string& kind, const std::string& variant) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  j["group"] = rep.group_name;
  j["cocycle"] = rep.cocycle_name;
  j["n"] = rep.n;
  j["dim"] = rep.dim;
  j["r"] = rep.r;
  j["theta_variant"] = variant;
  auto opt_ll = [](const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); };
  auto opt_i = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  auto opt_b = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };
  if (kind != "pure") {
    j["braid_order"] = opt_ll(rep.braid_order);
    j["braid_complete"] = rep.braid_complete;
    j["braid_diagonal_order"] = opt_ll(rep.diagonal_order);
    j["braid_permutation_order"] = opt_ll(rep.permutation_order);
  }
  if (kind != "braid") {
    j["pure_order"] = opt_ll(rep.pure_order);
    j["pure_complete"] = rep.pure_complete;
    j["pure_class"] = opt_i(rep.pure_class);
    j["pure_order_p_power"] = opt_b(rep.pure_order_p_power);
  }
  j["generator_order"] = opt_ll(rep.generator_order);
  j["generator_sq_order"] = opt_ll(rep.generator_sq_order);
  j["generator_sq_order_p_power"] = opt_b(rep.generator_sq_order_p_power);
  j["group_prime"] = opt_i(rep.group_prime);
  j["group_class"] = opt_i(rep.group_class);
  j["coxeter_finite"] = rep.coxeter_verdict ? json(*rep.coxeter_verdict) : json(nullptr);
  return j;
}

void render_report_text(const json& j, std::ostream& out) {
  out << "group: " << j["group"].get<std::string>() << "\n";
  out << "cocycle: " << j["cocycle"].get<std::string>() << "\n";
  out << "n: " << j["n"].get<int>() << "\n";
  out << "dim: " << j["dim"].get<long long>() << "\n";
  out << "scalar root order r: " << j["r"].get<int>() << "\n";
  out << "theta variant: " << j["theta_variant"].get<std::string>() << "\n";
  if (j.contains("braid_order")) {
    if (j["braid_complete"].get<bool>()) {
      out << "braid image order: " << num_or(j["braid_order"], "?") << "\n";
      out << "  diagonal subgroup order: " << num_or(j["braid_diagonal_order"], "?") << "\n";
      out << "  permutation quotient order: " << num_or(j["braid_permutation_order"], "?") << "\n";
    } else {
      out << "braid image order: incomplete (raise --max-elements)\n";
    }
  }
  if (j.contains("pure_order")) {
    if (j["pure_complete"].get<bool>()) {
      out << "pure braid image order: " << num_or(j["pure_order"], "?") << "\n";
      out << "  nilpotency class: " << num_or(j["pure_class"], "unknown") << "\n";
      if (!j["pure_order_p_power"].is_null())
        out << "  order is a p-power: " << yn(j["pure_order_p_power"]) << "\n";
    } else {
      out << "pure braid image order: incomplete (raise --max-elements)\n";
    }
  }
  out << "generator image order: " << num_or(j["generator_order"], "not found under cap") << "\n";
  out << "generator^2 image order: " << num_or(j["generator_sq_order"], "not found under cap")
      << "\n";
  if (!j["generator_sq_order_p_power"].is_null())
    out << "  generator^2 order is a p-power: " << yn(j["generator_sq_order_p_power"]) << "\n";
  out << "group prime: " << num_or(j["group_prime"], "not a prime-power group") << "\n";
  out << "group nilpotency class: " << num_or(j["group_class"], "not nilpotent") << "\n";
  out << "coxeter criterion at (n, generator order): " << yn(j["coxeter_finite"]) << "\n";
}

// Emit a report honoring --format and --cache; byte-identical on cache hits
// because both paths print from the same stored JSON document.
int emit_report(const Job& job, const std::string& which,
                const std::function<ImageReport()>& compute) {
  json j;
  std::string serialized;
  bool hit = false;
  std::string file = cache_file_name(job, which);
  if (!job.cache.empty()) {
    if (auto cached = cache_read(job.cache + "/" + file)) {
      j = json::parse(*cached);
      if (j.value("format_version", 0) == kFormatVersion) {
        serialized = *cached;
        hit = true;
      }
    }
  }
  if (!hit) {
    ImageReport rep = compute();
    j = report_to_json(rep, which, normalized_variant(job.variant));
    serialized = j.dump(2) + "\n";
    if (!job.cache.empty()) cache_write(job.cache, file, serialized);
  }
  if (job.format == "json")
    std::cout << serialized;
  else
    render_report_text(j, std::cout);
  bool incomplete = (j.contains("braid_complete") && !j["braid_complete"].get<bool>()) ||
                    (j.contains("pure_complete") && !j["pure_complete"].get<bool>());
  return incomplete ? 2 : 0;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_group_info(const std::string& spec, const std::string& format) {
  FiniteGroup G = parse_group_spec(spec);
  PGroupStatus ps = is_p_group(G);
  std::optional<int> cls = nilpotency_class(G);
  if (format == "json") {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "group";
    j["name"] = G.name();
    j["order"] = G.order();
    j["abelian"] = G.is_abelian();
    j["p"] = ps.pk ? json(ps.pk->first) : json(nullptr);
    j["p_exponent"] = ps.pk ? json(ps.pk->second) : json(nullptr);
    j["nilpotency_class"] = cls ? json(*cls) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << G.name() << "\n";
    std::cout << "order: " << G.order() << "\n";
    std::cout << "abelian: " << (G.is_abelian() ? "yes" : "no") << "\n";
    if (ps.trivial)
      std::cout << "p-group: trivial\n";
    else if (ps.pk)
      std::cout << "p-group: yes (p=" << ps.pk->first << ", order " << ps.pk->first << "^"
                << ps.pk->second << ")\n";
    else
      std::cout << "p-group: no\n";
    if (cls)
      std::cout << "nilpotency class: " << *cls << "\n";
    else
      std::cout << "nilpotency class: not nilpotent\n";
  }
  return 0;
}

int cmd_selftest(const Job& job) {
  FiniteGroup G = parse_group_spec(job.group);
  Cocycle3 w = parse_cocycle_spec(job.cocycle, G);
  DoubleOptions opt = algebra_options(job);
  std::vector<std::pair<std::string, std::optional<std::string>>> items;

  CocycleCheck cc = check_cocycle(w);
  items.emplace_back("cocycle identity", cc.ok ? std::optional<std::string>()
                                               : std::optional<std::string>(
                                                     "violated at (" + std::to_string(cc.violation[0]) +
                                                     "," + std::to_string(cc.violation[1]) + "," +
                                                     std::to_string(cc.violation[2]) + "," +
                                                     std::to_string(cc.violation[3]) + ")"));
  if (G.order() <= 4)
    items.emplace_back("associativity (exhaustive)", check_associativity_exhaustive(w, opt));
  else
    items.emplace_back("associativity (sampled)",
                       check_associativity_sampled(w, 150000, 20260822, opt));
  items.emplace_back("unit law", check_unit_law(w, opt));
  items.emplace_back("coproduct multiplicative", check_coproduct_multiplicative(w, opt));
  items.emplace_back("R inverse", check_r_inverse(w, opt));
  if (G.order() <= 4) {
    items.emplace_back("R commutation", check_r_commutation(w, opt));
    items.emplace_back("counit", check_counit(w, opt));
  }

  bool all_ok = true;
  for (const auto& [name, fail] : items)
    if (fail) all_ok = false;
  if (job.format == "json") {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "selftest";
    j["group"] = G.name();
    j["cocycle"] = w.name();
    j["theta_variant"] = normalized_variant(job.variant);
    j["ok"] = all_ok;
    json arr = json::array();
    for (const auto& [name, fail] : items) {
      json it;
      it["name"] = name;
      it["ok"] = !fail.has_value();
      it["witness"] = fail ? json(*fail) : json(nullptr);
      arr.push_back(it);
    }
    j["items"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "selftest " << G.name() << " / " << w.name() << "\n";
    for (const auto& [name, fail] : items) {
      if (fail)
        std::cout << "FAIL " << name << ": " << *fail << "\n";
      else
        std::cout << "PASS " << name << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_rep_emit(const Job& job, const std::string& out_dir) {
  FiniteGroup G = parse_group_spec(job.group);
  Cocycle3 w = parse_cocycle_spec(job.cocycle, G);
  DoubleOptions opt = algebra_options(job);
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> files;
  for (int i = 1; i < job.n; ++i) {
    MonomialOp op = braid_generator(w, job.n, i, opt);
    std::string path = out_dir + "/braid_" + std::to_string(i) + ".monop";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << "# braid generator " << i << " for group " << G.name() << ", cocycle " << w.name()
        << ", n=" << job.n << "\n";
    write_monomial(out, op);
    files.push_back(path);
  }
  if (job.format == "json") {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "emit";
    j["files"] = files;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& f : files) std::cout << "wrote " << f << "\n";
  }
  return 0;
}

int cmd_image(const Job& job, const std::string& which) {
  return emit_report(job, which, [&] {
    FiniteGroup G = parse_group_spec(job.group);
    Cocycle3 w = parse_cocycle_spec(job.cocycle, G);
    AnalysisOptions opts;
    opts.algebra = algebra_options(job);
    opts.max_elements = job.max_elements;
    opts.want_braid = which != "pure";
    opts.want_pure = which != "braid";
    return analyze(w, job.n, opts);
  });
}

int cmd_coxeter(int n, int k, const std::string& format) {
  bool fin = coxeter_finite(n, k);
  if (format == "json") {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "coxeter";
    j["n"] = n;
    j["k"] = k;
    j["finite"] = fin;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (fin ? "finite" : "infinite") << "\n";
  }
  return 0;
}

int cmd_filtration(const std::string& path, const Job& job) {
  FiltrationFile ff = parse_filtration_file(path);
  FiltrationReport rep = check_filtration_lemma(ff.spec, ff.auts, job.max_elements);
  if (job.format == "json") {
    json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "filtration";
    j["group"] = ff.spec.H.name();
    j["levels"] = ff.spec.chain.size();
    j["hypotheses_ok"] = rep.hypotheses_ok;
    j["violations"] = rep.violations;
    j["aut_group_order"] = rep.aut_group_order;
    j["aut_closure_complete"] = rep.aut_closure_complete;
    j["aut_class"] = rep.aut_class ? json(*rep.aut_class) : json(nullptr);
    j["bound"] = rep.bound;
    j["class_within_bound"] = rep.class_within_bound;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group: " << ff.spec.H.name() << "\n";
    std::cout << "levels: " << ff.spec.chain.size() << " (bound " << rep.bound << ")\n";
    std::cout << "hypotheses: " << (rep.hypotheses_ok ? "ok" : "violated") << "\n";
    for (const auto& v : rep.violations) std::cout << "  - " << v << "\n";
    if (rep.aut_closure_complete) {
      std::cout << "aut group order: " << rep.aut_group_order << "\n";
      std::cout << "aut nilpotency class: "
                << (rep.aut_class ? std::to_string(*rep.aut_class) : std::string("not nilpotent"))
                << "\n";
      std::cout << "class within bound: " << (rep.class_within_bound ? "yes" : "no") << "\n";
    } else {
      std::cout << "aut group: incomplete (raise --max-elements)\n";
    }
  }
  if (!rep.aut_closure_complete) return 2;
  if (!rep.hypotheses_ok) return 1;
  if (!rep.class_within_bound) return 1;
  return 0;
}

void add_job_flags(CLI::App* cmd, Job& job, bool with_n = true) {
  cmd->add_option("--group", job.group, "group spec (cyclic:m, dihedral:m, quaternion, "
                                        "symmetric:m, product:<spec>,<spec>, trivial, file:<path>)");
  cmd->add_option("--cocycle", job.cocycle, "cocycle spec (trivial, cyclic:q, file:<path>)");
  if (with_n) cmd->add_option("-n", job.n, "strand count (>= 2)")->check(CLI::Range(2, 16));
  cmd->add_option("--max-elements", job.max_elements, "closure budget")->check(CLI::PositiveNumber);
  cmd->add_option("--format", job.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cache", job.cache, "cache directory for computed reports");
  cmd->add_option("--variant", job.variant, "multiplication twist variant "
                                            "(theta:standard or theta:printed)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact braid-group representations from twisted doubles of finite groups"};
  app.require_subcommand(1);
  Job job;

  auto* grp = app.add_subcommand("group", "group utilities");
  grp->require_subcommand(1);
  auto* info = grp->add_subcommand("info", "order, p-group status, nilpotency class");
  std::string info_spec;
  info->add_option("spec", info_spec, "group spec")->required();
  std::string info_format = "text";
  info->add_option("--format", info_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* selftest = app.add_subcommand("selftest", "verify the algebra structure exhaustively");
  add_job_flags(selftest, job, false);

  auto* rep = app.add_subcommand("rep", "representation output");
  rep->require_subcommand(1);
  auto* emit = rep->add_subcommand("emit", "write braid generator operator files");
  std::string emit_out = ".";
  emit->add_option("--out", emit_out, "output directory");
  add_job_flags(emit, job);

  auto* image = app.add_subcommand("image", "close and analyze an image group");
  std::string which;
  image->add_option("which", which, "braid or pure")
      ->required()
      ->check(CLI::IsMember({"braid", "pure"}));
  add_job_flags(image, job);

  auto* report = app.add_subcommand("report", "full analysis of one instance");
  add_job_flags(report, job);

  auto* coxeter = app.add_subcommand("coxeter", "finiteness criterion for (n, k)");
  int cox_n = 2, cox_k = 1;
  coxeter->add_option("-n", cox_n, "strand count")->required()->check(CLI::Range(2, 1000000));
  coxeter->add_option("-k", cox_k, "generator order")->required()->check(CLI::PositiveNumber);
  std::string cox_format = "text";
  coxeter->add_option("--format", cox_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* filtration = app.add_subcommand("filtration", "verify a filtration nilpotency bound");
  std::string filt_path;
  filtration->add_option("file", filt_path, "filtration description file")->required();
  add_job_flags(filtration, job, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (grp->parsed() && info->parsed()) return cmd_group_info(info_spec, info_format);
    if (selftest->parsed()) return cmd_selftest(job);
    if (rep->parsed() && emit->parsed()) return cmd_rep_emit(job, emit_out);
    if (image->parsed()) return cmd_image(job, which);
    if (report->parsed()) return emit_report(job, "report", [&] {
      FiniteGroup G = parse_group_spec(job.group);
      Cocycle3 w = parse_cocycle_spec(job.cocycle, G);
      AnalysisOptions opts;
      opts.algebra = algebra_options(job);
      opts.max_elements = job.max_elements;
      return analyze(w, job.n, opts);
    });
    if (coxeter->parsed()) return cmd_coxeter(cox_n, cox_k, cox_format);
    if (filtration->parsed()) return cmd_filtration(filt_path, job);
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
