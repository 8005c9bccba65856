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


#include "sgc/example1.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "sgc/error.hpp"

#ifndef SGC_DATA_DIR
#define SGC_DATA_DIR "data"
#endif

namespace sgc {

namespace {

using Json = nlohmann::json;

Elem ParseEntry(const PrimeField& f, const Json& v) {
  if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
  if (!v.is_string())
    throw Error(ErrorCode::kFixtureMismatch, "matrix entry is not a number");
  const auto s = v.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return f.from_int(std::stoll(s));
    return f.from_fraction(std::stoll(s.substr(0, slash)),
                           std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kFixtureMismatch, "bad matrix entry '" + s + "'");
  }
}

Matrix ParseMatrix(const PrimeField& f, const Json& rows, const char* name) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw Error(ErrorCode::kFixtureMismatch, std::string(name) + " missing");
  Matrix m(0, rows[0].size());
  for (const auto& r : rows) {
    if (r.size() != m.cols())
      throw Error(ErrorCode::kFixtureMismatch,
                  std::string(name) + " has ragged rows");
    Row row;
    for (const auto& v : r) row.push_back(ParseEntry(f, v));
    m.append_row(row);
  }
  return m;
}

// Printed column j * count + k  ->  SubCol(k, j, m).
Matrix FromPartMajor(const Matrix& printed, int count, int m) {
  if (printed.cols() != static_cast<std::size_t>(count * m))
    throw Error(ErrorCode::kFixtureMismatch,
                "expected " + std::to_string(count * m) + " columns, got " +
                    std::to_string(printed.cols()));
  Matrix out(printed.rows(), printed.cols());
  for (std::size_t r = 0; r < printed.rows(); ++r)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < count; ++k)
        out(r, SubCol(k, j, m)) = printed(r, static_cast<std::size_t>(j * count + k));
  return out;
}

std::vector<int> ZeroBased(const Json& v) {
  std::vector<int> out;
  for (const auto& x : v) out.push_back(x.get<int>() - 1);
  return out;
}

IdentityCheck Check(std::string name, bool pass, std::string detail = {}) {
  return {std::move(name), pass, pass ? std::string() : std::move(detail)};
}

}  // namespace

std::string DefaultDataDir() {
  if (const char* env = std::getenv("SGC_DATA_DIR")) return env;
  return SGC_DATA_DIR;
}

std::string DefaultFixturePath() {
  return DefaultDataDir() + "/example1_fixture.json";
}

Example1Fixture LoadExample1Fixture(const std::string& path, std::uint32_t q) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFixtureMismatch, path + ": " + e.what());
  }
  try {
    PrimeField f(q);
    Example1Fixture fx;
    fx.q = q;
    const auto& p = j.at("params");
    fx.params = DeriveParams(p.at("k").get<int>(), p.at("n").get<int>(),
                             p.at("nr").get<int>(), p.at("m").get<int>());
    const int N = fx.params.N, m = fx.params.m;
    fx.printed.n = N;
    fx.printed.m_big = fx.params.M;
    for (const auto& z : j.at("zones")) {
      auto zone = ZeroBased(z);
      std::sort(zone.begin(), zone.end());
      fx.printed.zones.push_back(zone);
    }
    fx.F = FromPartMajor(ParseMatrix(f, j.at("F"), "F"), N, m);
    fx.local_datasets = ZeroBased(j.at("F1_prime_datasets"));
    const int local = static_cast<int>(fx.local_datasets.size());
    fx.F1_prime =
        FromPartMajor(ParseMatrix(f, j.at("F1_prime"), "F1_prime"), local, m);
    fx.e_servers = ZeroBased(j.at("E_servers"));
    fx.E = FromPartMajor(ParseMatrix(f, j.at("E"), "E"), local, m);
    fx.s_servers = ZeroBased(j.at("S_servers"));
    fx.S = ParseMatrix(f, j.at("S"), "S");
    fx.group1_mix = ParseMatrix(f, j.at("group1_mix"), "group1_mix");
    fx.h = j.at("h").get<int>();
    const auto eta = j.at("eta").get<std::string>();
    const auto slash = eta.find('/');
    fx.eta = slash == std::string::npos
                 ? Rational(std::stoll(eta))
                 : Rational(std::stoll(eta.substr(0, slash)),
                            std::stoll(eta.substr(slash + 1)));
    if (fx.printed.zones.size() != static_cast<std::size_t>(N) ||
        fx.E.rows() != fx.e_servers.size() ||
        fx.S.rows() != fx.s_servers.size() || fx.S.cols() != fx.F1_prime.rows() ||
        fx.F.rows() != static_cast<std::size_t>(fx.h) ||
        fx.group1_mix.rows() != static_cast<std::size_t>(m)) {
      throw Error(ErrorCode::kFixtureMismatch, "inconsistent matrix sizes");
    }
    return fx;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFixtureMismatch, path + ": " + e.what());
  }
}

std::vector<std::size_t> LocalMissing(const Example1Fixture& fx, int server) {
  const auto& zone = fx.printed.zones[server];
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < fx.local_datasets.size(); ++i) {
    if (std::binary_search(zone.begin(), zone.end(), fx.local_datasets[i]))
      continue;
    for (int j = 0; j < fx.params.m; ++j)
      cols.push_back(SubCol(static_cast<int>(i), j, fx.params.m));
  }
  return cols;
}

TransmissionPlan PinnedPlan(const Example1Fixture& fx) {
  PrimeField f(fx.q);
  const int N = fx.params.N, m = fx.params.m;
  TransmissionPlan plan;
  plan.params = fx.params;
  plan.assignment = fx.printed;
  plan.q = fx.q;
  plan.D = DemandMatrix(N, m);
  plan.F_full = fx.F;
  plan.T = Matrix(static_cast<std::size_t>(N), fx.F.cols());
  plan.notes.push_back("printed matrices, group two reuses s_{n+5}");

  // Rows over which the S coefficients act, per group.
  Matrix third(0, fx.F.cols()), second(0, fx.F.cols()), first(0, fx.F.cols());
  for (int j = 0; j < m; ++j) {
    Row d(fx.F.cols()), t(fx.F.cols());
    for (std::size_t c = 0; c < d.size(); ++c) {
      d[c] = f.sub(fx.F(j, c), fx.F(m + j, c));
      t[c] = f.sub(f.mul(2, fx.F(j, c)), fx.F(m + j, c));
    }
    first.append_row(d);
    second.append_row(t);
    third.append_row(fx.F.row(m + j));
  }
  for (std::size_t r = 2 * m; r < fx.F.rows(); ++r) {
    second.append_row(fx.F.row(r));
    third.append_row(fx.F.row(r));
  }
  const int y = 2 * fx.params.M - N;
  const int shift = N - fx.params.M;  // server n in group two pairs with n + 5
  auto set = [&](int n, const Row& row) {
    std::copy(row.begin(), row.end(), plan.T.row(n).begin());
  };
  for (int n = 0; n < y; ++n) set(n, MultiplyRow(f, fx.group1_mix.row(n), first));
  for (std::size_t i = 0; i < fx.s_servers.size(); ++i) {
    const int n = fx.s_servers[i];
    set(n, MultiplyRow(f, fx.S.row(i), third));
    set(n - shift, MultiplyRow(f, fx.S.row(i), second));
  }
  return plan;
}

std::vector<IdentityCheck> CheckFixture(const Example1Fixture& fx) {
  PrimeField f(fx.q);
  const int N = fx.params.N, m = fx.params.m;
  std::vector<IdentityCheck> out;

  out.push_back(Check("assignment_matches_tables",
                      CombinedAssignment(N, fx.params.M, m) == fx.printed,
                      "combined assignment differs from the printed tables"));

  bool starts = true;
  for (int j = 0; j < m; ++j)
    starts = starts && fx.F.row_copy(j) == DemandMatrix(N, m).row_copy(j);
  out.push_back(Check("F_starts_with_demand", starts,
                      "first rows of F are not the demand"));

  std::vector<std::size_t> local_cols;
  for (int d : fx.local_datasets)
    for (int j = 0; j < m; ++j) local_cols.push_back(SubCol(d, j, m));
  Matrix restricted = SelectCols(fx.F, local_cols);
  Matrix lower(0, restricted.cols());
  for (std::size_t r = m; r < restricted.rows(); ++r) lower.append_row(restricted.row(r));
  // F1' keeps the demand rows and the two completed rows.
  Matrix expect_f1(0, restricted.cols());
  for (int j = 0; j < m; ++j) expect_f1.append_row(restricted.row(j));
  for (std::size_t r = 2 * m; r < restricted.rows(); ++r)
    expect_f1.append_row(restricted.row(r));
  out.push_back(Check("F1_prime_matches_F", expect_f1 == fx.F1_prime,
                      "F1' is not F restricted to its datasets"));

  Matrix prod = Multiply(f, fx.F1_prime, Transpose(fx.E));
  out.push_back(Check("F1_prime_times_E_transpose_is_zero", prod.is_zero(),
                      "F1' E^T has a nonzero entry"));
  out.push_back(Check("E_full_rank", Rank(f, fx.E) == fx.E.rows(),
                      "E has rank " + std::to_string(Rank(f, fx.E))));

  bool support = true;
  std::string bad_e;
  for (std::size_t i = 0; i < fx.E.rows(); ++i) {
    auto miss = LocalMissing(fx, fx.e_servers[i]);
    for (std::size_t c = 0; c < fx.E.cols(); ++c)
      if (fx.E(i, c) != 0 && !std::binary_search(miss.begin(), miss.end(), c)) {
        support = false;
        bad_e = "e_" + std::to_string(i + 1) + " touches a held column";
      }
  }
  out.push_back(Check("E_rows_on_missing_columns", support, bad_e));

  bool annihilate = true;
  std::string bad_s;
  for (std::size_t i = 0; i < fx.S.rows(); ++i) {
    auto miss = LocalMissing(fx, fx.s_servers[i]);
    Row v = MultiplyRow(f, fx.S.row(i), SelectCols(fx.F1_prime, miss));
    if (std::any_of(v.begin(), v.end(), [](Elem x) { return x != 0; })) {
      annihilate = false;
      bad_s = "s_" + std::to_string(i + 1) + " misses server " +
              std::to_string(fx.s_servers[i] + 1) + "'s columns";
    }
  }
  out.push_back(Check("S_rows_annihilate_missing_columns", annihilate, bad_s));

  out.push_back(Check("F_rank_is_h",
                      Rank(f, fx.F) == static_cast<std::size_t>(fx.h),
                      "rank(F) = " + std::to_string(Rank(f, fx.F))));

  TransmissionPlan pinned = PinnedPlan(fx);
  out.push_back(Check("pinned_support", SupportRespected(pinned),
                      "a printed transmission uses a dataset outside its zone"));
  const auto rank_t = Rank(f, pinned.T);
  out.push_back(Check("pinned_rank_is_h",
                      rank_t == static_cast<std::size_t>(fx.h),
                      "rank(T) = " + std::to_string(rank_t)));
  out.push_back(Check("pinned_demand_recoverable",
                      RowSpaceContains(f, pinned.T, pinned.D),
                      "demand not in the span of all transmissions"));
  out.push_back(Check("eta_is_h_over_m_minus_one",
                      fx.eta == Rational(fx.h, m) - 1,
                      "printed eta disagrees with h/m - 1"));
  return out;
}

}  // namespace sgc
