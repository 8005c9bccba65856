/*
 * Copyright 2026 The SGC Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgc/error.hpp"
#include "sgc/example1.hpp"
#include "sgc/harness.hpp"

namespace sgc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ParamFlags {
  std::optional<int> k;
  int n = 0;
  std::optional<int> nr;
  std::optional<int> mbig;
  int m = 0;
};

struct RunFlags {
  std::uint32_t q = kDefaultModulus;
  std::uint64_t seed = 0;
  std::string out;
};

// Raised for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void AddParamFlags(CLI::App* app, ParamFlags& p, bool need_replication) {
  app->add_option("--k", p.k, "number of datasets (default: N)");
  app->add_option("--n", p.n, "number of servers")->required();
  auto* nr = app->add_option("--nr", p.nr, "servers the master waits for");
  auto* mb = app->add_option("--mbig", p.mbig, "datasets per server");
  nr->excludes(mb);
  if (need_replication) nr->required(false);
  app->add_option("--m", p.m, "parts per gradient")->required();
}

Params Resolve(const ParamFlags& f) {
  if (!f.nr && !f.mbig) throw UsageError("one of --nr or --mbig is required");
  const int K = f.k.value_or(f.n);
  const int Nr = f.nr ? *f.nr : f.n - *f.mbig + f.m;
  return DeriveParams(K, f.n, Nr, f.m);
}

std::uint64_t Seed(std::uint64_t flag) {
  const char* env = std::getenv("SGC_SEED");
  if (env == nullptr || *env == '\0') return flag;
  std::string s(env);
  if (!std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("SGC_SEED must be a non-negative integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw UsageError("SGC_SEED out of range");
  }
}

std::string Str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) {
    os << "/" << r.denominator() << " ("
       << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator())
       << ")";
  }
  return os.str();
}

// Writes to --out when given, else to `out`.
void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + path);
  f << text;
}

int ExitFor(ErrorCode c) {
  switch (c) {
    case ErrorCode::kConstructionFailed:
    case ErrorCode::kIAInfeasible:
    case ErrorCode::kDemandNotRecoverable:
    case ErrorCode::kUnsupportedBranch:
      return kExitConstruct;
    case ErrorCode::kFixtureMismatch:
      return kExitVerify;
    default:
      return kExitUsage;
  }
}

// ---- keysize

int Keysize(const ParamFlags& pf, bool json, std::ostream& out) {
  const Params p = Resolve(pf);
  const KeySizeReport r = ClosedFormReport(p);
  if (json) {
    out << ToJson(r).dump(2) << "\n";
    return kExitOk;
  }
  out << "params    K=" << p.K << " N=" << p.N << " N_r=" << p.Nr
      << " m=" << p.m << " M=" << p.M << "\n"
      << "h         " << r.h_value << "\n"
      << "eta       " << Str(r.eta_achieved) << "\n"
      << "cyclic    " << Str(r.eta_cyclic) << "\n"
      << "converse  " << Str(r.eta_converse) << "\n"
      << "fracrep   " << (r.eta_fracrep ? Str(*r.eta_fracrep) : "-") << "\n"
      << "trace     " << FormatTrace(r.trace) << "\n"
      << "fallback  " << (r.fallback_used ? "yes" : "no") << "\n";
  return kExitOk;
}

// ---- verify

struct VerifyFlags {
  bool exhaustive_security = false;
  std::uint64_t samples = 100000;
  std::uint64_t exhaustive_limit = 1000000;
};

int Verify(const ParamFlags& pf, const RunFlags& rf, const VerifyFlags& vf,
           std::ostream& out, std::ostream& err) {
  std::string stage = "params";
  try {
    const Params p = Resolve(pf);
    const std::uint64_t seed = Seed(rf.seed);
    PrimeField check(rf.q);
    stage = "construction";
    const TransmissionPlan plan = BuildPlan(p, rf.q, seed);
    stage = "keys";
    const KeyPlan keys = GenKeys(plan);
    stage = "verification";
    VerifyOptions opt;
    opt.seed = seed;
    opt.samples = vf.samples;
    opt.exhaustive_limit = vf.exhaustive_limit;
    opt.exhaustive_security = vf.exhaustive_security;
    const VerificationReport r = VerifyAllSubsets(plan, keys, opt);

    Json doc;
    doc["command"] = "verify";
    doc["report"] = ToJson(r);
    doc["keys"] = ToJson(keys);
    Json c;
    c["attempts"] = plan.attempts;
    c["notes"] = plan.notes;
    c["patterns_checked"] = plan.patterns_checked;
    c["patterns_failed"] = plan.patterns_failed;
    doc["construction"] = c;
    Emit(rf.out, doc.dump(2) + "\n", out);

    err << "verify: " << (r.sampled ? "sampled " : "") << r.subsets_checked
        << " subsets, " << r.subsets_failed_count << " undecodable; security "
        << (r.security.pass() ? "pass" : "FAIL");
    if (r.security.mi) err << " (MI " << Str(r.security.mi->log_q) << " log_q)";
    err << "; cost " << Str(r.worst_cost) << "; eta " << Str(r.eta_achieved)
        << "\n";
    if (r.pass()) return kExitOk;
    const char* failed = !r.decodable()          ? "decode"
                         : !r.security.pass()    ? "security"
                                                 : "cost";
    err << "verify: FAIL at stage " << failed << "\n";
    return kExitVerify;
  } catch (const Error& e) {
    err << "verify: " << stage << " failed: "
        << e.what() << "\n";
    // A field too small for the chosen code is a construction failure.
    if (stage == "construction" || stage == "keys") return kExitConstruct;
    return ExitFor(e.code());
  }
}

// ---- sweep

struct SweepFlags {
  int n = 24;
  std::optional<int> mbig;
  std::optional<int> m;
  std::string vary = "m";
  int from = 1;
  int to = 0;
  std::string format = "csv";
  std::uint64_t verify_limit = 100000;
  bool no_verify = false;
};

struct SweepRow {
  std::optional<KeySizeReport> report;
  std::string verified;
  std::string note;
};

SweepRow SweepPoint(int N, int M, int m, std::uint32_t q, std::uint64_t seed,
                    const SweepFlags& sf) {
  SweepRow row;
  try {
    const Params p = ParamsFromReplication(N, M, m);
    row.report = Compare(p, q, seed);
    if (sf.no_verify || Binomial(p.N, p.Nr) > sf.verify_limit) {
      row.verified = "skipped";
      return row;
    }
    const TransmissionPlan plan = BuildPlan(p, q, seed);
    VerifyOptions opt;
    opt.seed = seed;
    row.verified = VerifyAllSubsets(plan, GenKeys(plan), opt).pass() ? "true" : "false";
  } catch (const Error& e) {
    std::ostringstream os;
    os << "skipped (N,M,m)=(" << N << "," << M << "," << m
       << "): " << e.what();
    row.report.reset();
    row.note = os.str();
  }
  return row;
}

int Sweep(const SweepFlags& sf, const RunFlags& rf, std::ostream& out,
          std::ostream& err) {
  if (sf.vary != "M" && !sf.mbig) throw UsageError("--mbig is required unless --vary M");
  if (sf.vary != "m" && !sf.m) throw UsageError("--m is required unless --vary m");
  const std::uint64_t seed = Seed(rf.seed);
  PrimeField check(rf.q);  // reject a bad modulus before any work

  std::vector<int> values;
  for (int v = sf.from; v <= sf.to; ++v) values.push_back(v);
  std::vector<SweepRow> rows(values.size());
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < values.size(); start += workers) {
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t i = start; i < std::min(values.size(), start + workers); ++i) {
      const int v = values[i];
      const int N = sf.vary == "N" ? v : sf.n;
      const int M = sf.vary == "M" ? v : sf.mbig.value_or(0);
      const int m = sf.vary == "m" ? v : sf.m.value_or(0);
      batch.push_back(std::async(std::launch::async, SweepPoint, N, M, m, rf.q,
                                 seed, std::cref(sf)));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) rows[start + i] = batch[i].get();
  }

  std::string text;
  if (sf.format == "csv") {
    text = CsvHeader() + "\n";
    for (const auto& r : rows)
      if (r.report) text += CsvRow(*r.report, r.verified) + "\n";
  } else {
    Json doc;
    doc["command"] = "sweep";
    doc["vary"] = sf.vary;
    doc["q"] = rf.q;
    doc["seed"] = seed;
    doc["rows"] = Json::array();
    doc["notes"] = Json::array();
    for (const auto& r : rows) {
      if (r.report) {
        Json j = ToJson(*r.report);
        j["verified"] = r.verified;
        doc["rows"].push_back(j);
      } else {
        doc["notes"].push_back(r.note);
      }
    }
    text = doc.dump(2) + "\n";
  }
  for (const auto& r : rows)
    if (!r.report) err << "sweep: " << r.note << "\n";
  Emit(rf.out, text, out);
  return kExitOk;
}

// ---- example1

struct Example1Flags {
  std::string fixture;
  bool json = false;
};

int Example1(const Example1Flags& ef, const RunFlags& rf, std::ostream& out,
             std::ostream& err) {
  const std::uint64_t seed = Seed(rf.seed);
  Example1Fixture fx;
  try {
    fx = LoadExample1Fixture(ef.fixture.empty() ? DefaultFixturePath() : ef.fixture);
  } catch (const Error& e) {
    err << "example1: " << e.what() << "\n";
    return ExitFor(e.code());
  }
  const PrimeField f(fx.q);
  const auto checks = CheckFixture(fx);
  const bool identities =
      std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });

  const TransmissionPlan pinned = PinnedPlan(fx);
  const VerificationReport pr = VerifyAllSubsets(pinned, GenKeys(pinned));

  const TransmissionPlan rebuilt = BuildPlan(fx.params, fx.q, seed);
  const KeyPlan keys = GenKeys(rebuilt);
  VerifyOptions opt;
  opt.seed = seed;
  const VerificationReport rr = VerifyAllSubsets(rebuilt, keys, opt);
  const TransmissionPlan base = BuildPlan(fx.params, fx.q, 0);
  const VerificationReport br = VerifyAllSubsets(base, GenKeys(base));
  const bool same_profile = rr.subsets_failed == br.subsets_failed &&
                            rr.subsets_failed_count == br.subsets_failed_count;
  const auto rank = Rank(f, rebuilt.T);

  if (ef.json) {
    Json doc;
    doc["command"] = "example1";
    Json ids = Json::array();
    for (const auto& c : checks) {
      Json j;
      j["name"] = c.name;
      j["pass"] = c.pass;
      if (!c.pass) j["detail"] = c.detail;
      ids.push_back(j);
    }
    doc["identities"] = ids;
    doc["pinned"] = ToJson(pr);
    Json rb;
    rb["seed"] = seed;
    rb["assignment_matches"] = rebuilt.assignment == fx.printed;
    rb["rank"] = rank;
    rb["eta"] = ToJson(keys.eta());
    rb["report"] = ToJson(rr);
    rb["profile_matches_seed0"] = same_profile;
    rb["coefficients_differ_from_seed0"] = !(rebuilt.T == base.T);
    doc["rebuild"] = rb;
    Emit(rf.out, doc.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << "identity " << std::left << std::setw(36) << c.name
         << (c.pass ? "PASS" : "FAIL");
      if (!c.pass) os << "  " << c.detail;
      os << "\n";
    }
    os << "pinned   " << pr.subsets_checked - pr.subsets_failed_count << " of "
       << pr.subsets_checked << " straggler patterns decode\n"
       << "rebuild  seed=" << seed << " rank=" << rank << " eta=" << Str(keys.eta())
       << " assignment=" << (rebuilt.assignment == fx.printed ? "match" : "differs")
       << "\n"
       << "rebuild  " << rr.subsets_checked - rr.subsets_failed_count << " of "
       << rr.subsets_checked << " straggler patterns decode, profile "
       << (same_profile ? "matches" : "differs from") << " seed 0"
       << ", coefficients " << (rebuilt.T == base.T ? "equal" : "differ") << "\n";
    Emit(rf.out, os.str(), out);
  }
  for (const auto& c : checks)
    if (!c.pass) err << "example1: identity " << c.name << " failed: " << c.detail << "\n";
  return identities ? kExitOk : kExitVerify;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"secure gradient coding lab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ParamFlags pf;
  RunFlags rf;
  bool json = false;
  auto* keysize = app.add_subcommand("keysize", "closed-form key sizes and recursion trace");
  AddParamFlags(keysize, pf, true);
  keysize->add_flag("--json", json, "print the report as JSON");

  VerifyFlags vf;
  auto add_verify = [&](CLI::App* cmd) {
    AddParamFlags(cmd, pf, true);
    cmd->add_option("--q", rf.q, "field modulus");
    cmd->add_option("--seed", rf.seed, "RNG seed (SGC_SEED overrides)");
    cmd->add_option("--out", rf.out, "write the JSON report here");
    cmd->add_option("--samples", vf.samples, "subsets drawn when sampling");
    cmd->add_option("--exhaustive-limit", vf.exhaustive_limit,
                    "largest C(N, N_r) checked exhaustively");
  };
  auto* verify = app.add_subcommand("verify", "build, key and check every straggler pattern");
  add_verify(verify);
  verify->add_flag("--exhaustive-security", vf.exhaustive_security,
                   "enumerate messages and keys for the leakage");
  auto* secure = app.add_subcommand("secure-check", "verify --exhaustive-security");
  add_verify(secure);

  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep", "one CSV or JSON row per parameter point");
  sweep->add_option("--n", sf.n, "number of servers (K = N)");
  sweep->add_option("--mbig", sf.mbig, "datasets per server");
  sweep->add_option("--m", sf.m, "parts per gradient");
  sweep->add_option("--vary", sf.vary, "swept parameter")
      ->check(CLI::IsMember({"M", "m", "N"}));
  sweep->add_option("--from", sf.from, "first value")->required();
  sweep->add_option("--to", sf.to, "last value, inclusive")->required();
  sweep->add_option("--q", rf.q, "field modulus");
  sweep->add_option("--seed", rf.seed, "RNG seed (SGC_SEED overrides)");
  sweep->add_option("--out", rf.out, "output file");
  sweep->add_option("--format", sf.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--verify-limit", sf.verify_limit,
                    "skip verification above this many subsets");
  sweep->add_flag("--no-verify", sf.no_verify, "skip verification");

  Example1Flags ef;
  auto* ex1 = app.add_subcommand("example1", "check the printed (12, 7) matrices");
  ex1->add_option("--fixture", ef.fixture, "fixture JSON");
  ex1->add_option("--seed", rf.seed, "seed of the library rebuild");
  ex1->add_option("--out", rf.out, "output file");
  ex1->add_flag("--json", ef.json, "JSON report");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keysize->parsed()) return Keysize(pf, json, out);
    if (verify->parsed()) return Verify(pf, rf, vf, out, err);
    if (secure->parsed()) {
      vf.exhaustive_security = true;
      return Verify(pf, rf, vf, out, err);
    }
    if (sweep->parsed()) return Sweep(sf, rf, out, err);
    if (ex1->parsed()) return Example1(ef, rf, out, err);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return ExitFor(e.code());
  }
  return kExitUsage;
}

}  // namespace sgc::cli
