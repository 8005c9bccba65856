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


// Acceptance run: one PASS/FAIL line per criterion.
//
//   sgc_acceptance                 exit 1 if any criterion fails
//   sgc_acceptance --expect-known  exit 0 iff exactly the known failures fail

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "sgc/error.hpp"
#include "sgc/example1.hpp"
#include "sgc/harness.hpp"

namespace {

using namespace sgc;

constexpr std::uint32_t kQ = kDefaultModulus;

// Structural, see the README. Anything else failing is a regression.
const std::set<int> kKnownFailures = {1, 8};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string Str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

std::string Params3(int N, int M, int m) {
  return "(" + std::to_string(N) + "," + std::to_string(M) + "," +
         std::to_string(m) + ")";
}

// Every valid (N, M, m) with N <= n_max, m <= M <= N.
template <typename Fn>
void ForEachInstance(int n_max, Fn&& fn) {
  for (int N = 1; N <= n_max; ++N)
    for (int M = 1; M <= N; ++M)
      for (int m = 1; m <= M; ++m) fn(ParamsFromReplication(N, M, m));
}

void Criterion1(Outcome& o) {
  const auto fx = LoadExample1Fixture(DefaultFixturePath());
  const Params p = DeriveParams(12, 12, 7, 2);
  o.require(CombinedAssignment(p) == fx.printed, "assignment differs from tables");
  const auto plan = BuildPlan(p, kQ, 0);
  const auto keys = GenKeys(plan);
  const PrimeField f(kQ);
  const auto rank = Rank(f, plan.T);
  const int h = HRecursive(12, 7, 2).h;
  o.require(rank == 6 && h == 6, "rank(T) " + std::to_string(rank) + ", h " +
                                     std::to_string(h));
  const auto r = VerifyAllSubsets(plan, keys);
  o.detail << " rank=" << rank << " eta=" << Str(keys.eta()) << " decoded "
           << r.subsets_checked - r.subsets_failed_count << "/" << r.subsets_checked;
  o.require(r.subsets_checked == 792 && r.decodable(),
            std::to_string(r.subsets_failed_count) +
                " straggler patterns are undecodable for every choice of "
                "group-two/three vectors");
  o.require(keys.eta() == Rational(2), "eta " + Str(keys.eta()));
}

void Criterion2(Outcome& o) {
  const auto fx = LoadExample1Fixture(DefaultFixturePath());
  int n = 0;
  for (const auto& c : CheckFixture(fx)) {
    ++n;
    o.require(c.pass, c.name + ": " + c.detail);
  }
  o.detail << " " << n << " identities";
}

void Criterion3(Outcome& o) {
  const int cases[][2] = {{24, 8}, {24, 12}, {20, 5}};
  for (const auto& c : cases) {
    for (int m = 1; m <= 2; ++m) {
      const int N = c[0], M = c[1];
      const Params p = ParamsFromReplication(N, M, m);
      const auto plan = BuildPlan(p, kQ, 0);
      const auto keys = GenKeys(plan);
      const auto r = VerifyAllSubsets(plan, keys);
      const Rational target(N / M - 1);
      const std::string tag = Params3(N, M, m);
      o.require(keys.eta() == target, tag + " eta " + Str(keys.eta()));
      o.require(EtaConverseClosed(N, p.Nr, m) == target, tag + " converse");
      o.require(r.pass(), tag + " verification");
      o.detail << " " << tag << (r.sampled ? "s" : "e") << r.subsets_checked;
    }
  }
}

void Criterion4(Outcome& o) {
  int plans = 0;
  ForEachInstance(12, [&](const Params& p) {
    const auto plan = CyclicPlan(p, kQ, 0);
    const auto keys = GenKeys(plan);
    const auto r = VerifyAllSubsets(plan, keys);
    const std::string tag = Params3(p.N, p.M, p.m);
    o.require(keys.eta() == EtaCyclicClosed(p.Nr, p.m), tag + " eta");
    o.require(r.decodable() && !r.sampled, tag + " decoding");
    ++plans;
  });
  o.detail << " " << plans << " cyclic plans";
}

void Criterion5(Outcome& o) {
  int strict = 0;
  for (int m = 1; m <= 5; ++m) {
    const auto r = Compare(ParamsFromReplication(24, 10, m), kQ, 0);
    o.require(r.eta_converse <= r.eta_achieved && r.eta_achieved <= r.eta_cyclic,
              "m=" + std::to_string(m) + " ordering");
    if (r.eta_achieved < r.eta_cyclic) ++strict;
    o.detail << " m=" << m << ":" << Str(r.eta_converse) << "<=" << Str(r.eta_achieved)
             << "<=" << Str(r.eta_cyclic);
  }
  o.require(strict > 0, "no strict improvement");
}

// Shared by criteria 6 and 7.
struct ExhaustiveCase {
  std::string name;
  TransmissionPlan plan;
  KeyPlan keys;
  SecurityVerdict keyed, zeroed;
};

std::vector<ExhaustiveCase> ExhaustiveCases() {
  std::vector<ExhaustiveCase> out;
  for (const auto& [name, p, branch] :
       {std::tuple{"(4,4,3,1) fracrep", DeriveParams(4, 4, 3, 1), Branch::kFracRep},
        std::tuple{"(6,6,4,2) scheme2", DeriveParams(6, 6, 4, 2), Branch::kScheme2}}) {
    ExhaustiveCase c;
    c.name = name;
    c.plan = BuildPlan(p, 3, 0);
    if (c.plan.trace.empty() || c.plan.trace.front().branch != branch)
      throw Error(ErrorCode::kUnsupportedBranch, c.name + " took another branch");
    c.keys = GenKeys(c.plan);
    c.keyed = CheckSecurityExhaustive(c.plan, c.keys);
    c.zeroed = CheckSecurityExhaustive(c.plan, ZeroKeys(c.keys));
    out.push_back(std::move(c));
  }
  return out;
}

void Criterion6(Outcome& o) {
  for (const auto& c : ExhaustiveCases()) {
    o.require(c.keyed.mi && c.keyed.mi->log_q == Rational(0), c.name + " MI != 0");
    o.require(c.zeroed.mi && c.zeroed.mi->log_q > Rational(0),
              c.name + " zeroed keys do not leak");
    o.detail << " " << c.name << ": MI=" << Str(c.keyed.mi->log_q)
             << ", zeroed MI=" << Str(c.zeroed.mi->log_q) << " log_q over "
             << c.keyed.mi->states << " states";
  }
}

void Criterion7(Outcome& o) {
  int plans = 0;
  ForEachInstance(16, [&](const Params& p) {
    const auto plan = BuildPlan(p, kQ, 0);
    o.require(CheckSecurityRank(plan, GenKeys(plan)).pass(),
              Params3(p.N, p.M, p.m));
    ++plans;
  });
  for (const auto& c : ExhaustiveCases()) {
    const bool rank_keyed = CheckSecurityRank(c.plan, c.keys).rank_check;
    const bool rank_zeroed = CheckSecurityRank(c.plan, ZeroKeys(c.keys)).rank_check;
    o.require(rank_keyed == c.keyed.pass() && rank_zeroed == c.zeroed.pass(),
              c.name + " rank and enumeration disagree");
  }
  o.detail << " " << plans << " plans, agrees with enumeration on 2 instances";
}

void Criterion8(Outcome& o) {
  const auto cyc = LongestChain(CyclicAssignment(6, 4), 2);
  o.require(cyc.exhaustive && cyc.length == 4 && ChainBound(cyc.length, 2) == Rational(1),
            "cyclic (6,4,2) chain " + std::to_string(cyc.length));
  const auto fr = LongestChain(FractionalRepetitionAssignment(4, 2), 1);
  o.require(fr.exhaustive && fr.length == 2 && ChainBound(fr.length, 1) == Rational(1),
            "fracrep (4,2,1) chain " + std::to_string(fr.length));
  int plans = 0;
  std::vector<std::string> over;
  ForEachInstance(12, [&](const Params& p) {
    const auto plan = BuildPlan(p, kQ, 0);
    const auto chain = LongestChain(plan.assignment, p.m);
    const Rational bound = ChainBound(chain.length, p.m);
    const Rational eta = GenKeys(plan).eta();
    ++plans;
    if (bound > eta)
      over.push_back(Params3(p.N, p.M, p.m) + " bound " + Str(bound) + " > eta " +
                     Str(eta) + " (" + std::to_string(plan.patterns_failed) +
                     " undecodable patterns)");
  });
  o.detail << " chains 4 and 2; " << plans << " plans";
  for (const auto& s : over) o.require(false, s);
}

void Criterion9(Outcome& o) {
  int plans = 0;
  ForEachInstance(16, [&](const Params& p) {
    const auto plan = BuildPlan(p, kQ, 0);
    o.require(MeasureCost(plan) == Rational(p.Nr, p.m), Params3(p.N, p.M, p.m));
    ++plans;
  });
  o.detail << " " << plans << " plans";
}

void Criterion10(Outcome& o) {
  const std::vector<std::string> args = {"verify", "--n", "12", "--nr", "7",
                                         "--m", "2", "--seed", "5"};
  std::ostringstream a, b, err;
  cli::Run(args, a, err);
  cli::Run(args, b, err);
  o.require(!a.str().empty() && a.str() == b.str(), "reports differ");
  o.detail << " " << a.str().size() << " bytes";
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0: no runtime bound
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool expect_known = argc > 1 && std::strcmp(argv[1], "--expect-known") == 0;
  const std::vector<Criterion> criteria = {
      {1, "worked (12,7,2) instance", 10, Criterion1},
      {2, "fixture identities", 1, Criterion2},
      {3, "tightness at divisibility", 30, Criterion3},
      {4, "cyclic baseline N<=12", 0, Criterion4},
      {5, "dominance sweep N=24 M=10", 60, Criterion5},
      {6, "exhaustive security q=3", 120, Criterion6},
      {7, "rank security N<=16", 0, Criterion7},
      {8, "converse machinery", 30, Criterion8},
      {9, "communication cost N<=16", 0, Criterion9},
      {10, "verify determinism", 0, Criterion10},
  };
  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0) o.require(s < c.limit_s, "over time budget");
    if (!o.pass) failed.insert(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " ("
              << static_cast<int>(s * 1000) << " ms)" << o.detail.str() << "\n";
  }
  std::cout << "acceptance: " << criteria.size() - failed.size() << " pass, "
            << failed.size() << " fail\n";
  if (!expect_known) return failed.empty() ? 0 : 1;
  if (failed != kKnownFailures) {
    std::cout << "acceptance: failures differ from the known set {1, 8}\n";
    return 1;
  }
  return 0;
}
