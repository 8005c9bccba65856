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


#include "sgc/harness.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sgc {

namespace {

constexpr std::uint64_t kSubsetStream = 0x737562736574ull;

// Key-cancelling decodability without recovering coefficients.
class SubsetChecker {
 public:
  SubsetChecker(const TransmissionPlan& plan, const KeyPlan& keys)
      : plan_(plan), keys_(keys), f_(plan.q) {
    for (std::size_t j = 0; j < plan.D.rows(); ++j) {
      Row t = plan.D.row_copy(j);
      t.resize(plan.D.cols() + static_cast<std::size_t>(keys.r), 0);
      targets_.push_back(std::move(t));
    }
  }

  bool operator()(const std::vector<int>& servers) const {
    std::vector<std::size_t> idx(servers.begin(), servers.end());
    RowSpaceSolver solver(
        f_, HStack(SelectRows(plan_.T, idx), SelectRows(keys_.Kc, idx)),
        false);
    return std::all_of(targets_.begin(), targets_.end(),
                       [&](const Row& t) { return solver.Contains(t); });
  }

 private:
  const TransmissionPlan& plan_;
  const KeyPlan& keys_;
  PrimeField f_;
  std::vector<Row> targets_;
};

void ForEachSubset(int n, int k,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (int j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

nlohmann::ordered_json OneBased(const std::vector<int>& v) {
  auto a = nlohmann::ordered_json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

}  // namespace

VerificationReport VerifyAllSubsets(const TransmissionPlan& plan,
                                    const KeyPlan& keys,
                                    const VerifyOptions& opt) {
  const int N = plan.params.N, Nr = plan.params.Nr, m = plan.params.m;
  VerificationReport r;
  r.params = plan.params;
  r.q = plan.q;
  r.seed = opt.seed;
  r.subsets_total = Binomial(N, Nr);
  r.sampled = r.subsets_total > opt.exhaustive_limit;

  SubsetChecker decodes(plan, keys);
  auto visit = [&](const std::vector<int>& a) {
    ++r.subsets_checked;
    if (decodes(a)) return;
    ++r.subsets_failed_count;
    if (r.subsets_failed.size() < opt.max_listed_failures)
      r.subsets_failed.push_back(a);
  };
  if (!r.sampled) {
    ForEachSubset(N, Nr, visit);
  } else {
    Rng rng(MixSeed(opt.seed, kSubsetStream));
    std::vector<int> servers(static_cast<std::size_t>(N));
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      for (int n = 0; n < N; ++n) servers[n] = n;
      for (int i = 0; i < Nr; ++i) {
        auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(N - i)));
        std::swap(servers[i], servers[j]);
      }
      std::vector<int> pick(servers.begin(), servers.begin() + Nr);
      std::sort(pick.begin(), pick.end());
      visit(pick);
    }
  }

  r.worst_cost = MeasureCost(plan);
  r.rank_lambda = keys.r + m;
  r.eta_achieved = keys.eta();
  r.security = opt.exhaustive_security ? CheckSecurityExhaustive(plan, keys)
                                       : CheckSecurityRank(plan, keys);
  r.chain = LongestChain(plan.assignment, m, opt.seed);
  r.chain_bound = ChainBound(r.chain.length, m);
  r.converse_closed = EtaConverseClosed(N, Nr, m);
  r.eta_cyclic = EtaCyclicClosed(Nr, m);
  r.trace = plan.trace;
  r.fallback_used = plan.fallback_used;
  return r;
}

Rational MeasureCost(const TransmissionPlan& plan) {
  const int m = plan.params.m;
  std::vector<Rational> load(static_cast<std::size_t>(plan.params.N),
                             Rational(0));
  // Row n of T is server n's single transmitted block.
  for (std::size_t n = 0; n < plan.T.rows(); ++n) load[n] += Rational(1, m);
  std::sort(load.begin(), load.end(), std::greater<>());
  Rational worst(0);
  for (int i = 0; i < plan.params.Nr; ++i) worst += load[i];
  return worst;
}

KeySizeReport Compare(const Params& p, std::uint32_t q, std::uint64_t seed) {
  auto plan = BuildPlan(p, q, seed);
  auto keys = GenKeys(plan);
  KeySizeReport r;
  r.params = p;
  r.h_value = keys.r + p.m;
  r.eta_achieved = keys.eta();
  r.eta_converse = EtaConverseClosed(p.N, p.Nr, p.m);
  r.eta_cyclic = EtaCyclicClosed(p.Nr, p.m);
  r.eta_fracrep = EtaFracRep(p.N, p.M);
  auto chain = LongestChain(plan.assignment, p.m, seed);
  r.chain_length = chain.length;
  r.chain_exhaustive = chain.exhaustive;
  r.chain_bound = ChainBound(chain.length, p.m);
  r.fallback_used = plan.fallback_used;
  r.trace = plan.trace;
  return r;
}

nlohmann::ordered_json ToJson(const ChainResult& c) {
  nlohmann::ordered_json j;
  j["length"] = c.length;
  j["exhaustive"] = c.exhaustive;
  j["witness"] = OneBased(c.witness);
  return j;
}

nlohmann::ordered_json ToJson(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["params"] = ToJson(r.params);
  j["q"] = r.q;
  j["seed"] = r.seed;
  j["mode"] = r.sampled ? "sampled" : "exhaustive";
  j["subsets_total"] = r.subsets_total;
  j["subsets_checked"] = r.subsets_checked;
  j["subsets_failed_count"] = r.subsets_failed_count;
  auto failed = nlohmann::ordered_json::array();
  for (const auto& a : r.subsets_failed) failed.push_back(OneBased(a));
  j["subsets_failed"] = failed;
  j["worst_cost"] = ToJson(r.worst_cost);
  j["rank_lambda"] = r.rank_lambda;
  j["eta_achieved"] = ToJson(r.eta_achieved);
  j["security"] = ToJson(r.security);
  j["chain"] = ToJson(r.chain);
  j["chain_bound"] = ToJson(r.chain_bound);
  j["converse_closed"] = ToJson(r.converse_closed);
  j["eta_cyclic"] = ToJson(r.eta_cyclic);
  j["trace"] = ToJson(r.trace);
  j["fallback_used"] = r.fallback_used;
  j["decodable"] = r.decodable();
  j["cost_optimal"] = r.cost_optimal();
  j["pass"] = r.pass();
  return j;
}

std::string CsvHeader() {
  return "n,nr,m,mbig,h,eta_achieved_num,eta_achieved_den,eta_cyclic_num,"
         "eta_cyclic_den,eta_converse_num,eta_converse_den,fallback,verified";
}

std::string CsvRow(const KeySizeReport& r, const std::string& verified) {
  std::ostringstream os;
  auto frac = [&os](const Rational& x) {
    os << x.numerator() << ',' << x.denominator() << ',';
  };
  os << r.params.N << ',' << r.params.Nr << ',' << r.params.m << ','
     << r.params.M << ',' << r.h_value << ',';
  frac(r.eta_achieved);
  frac(r.eta_cyclic);
  frac(r.eta_converse);
  os << (r.fallback_used ? "true" : "false") << ',' << verified;
  return os.str();
}

}  // namespace sgc
