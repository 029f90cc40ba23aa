//  Copyright 2026 The Latticeflow Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "latticeflow/laws.hpp"

#include <gtest/gtest.h>

#include "latticeflow/confluence.hpp"

namespace latticeflow {
namespace {

TEST(LawSuites, AllPassOnModestIterations) {
  const auto results = run_law_suites(80, 20260809);
  for (const LawResult& r : results)
    EXPECT_TRUE(r.passed()) << r.name << ": " << r.first_failure;
  EXPECT_TRUE(all_passed(results));
  EXPECT_GE(results.size(), 25u);
}

TEST(LawSuites, DifferentSeedsStillPass) {
  EXPECT_TRUE(all_passed(run_law_suites(40, 1)));
  EXPECT_TRUE(all_passed(run_law_suites(40, 2)));
}

TEST(Confluence, SequenceCountMatchesClosedForm) {
  // ops-per-slot o, replicas r, scripts of length k: (o*r)^k scripts, each
  // checked under k! plain orders plus k * (k+1)!/2 duplicated orders.
  const auto closed_form = [](int o, int r, int max_ops) {
    auto fact = [](int n) {
      std::uint64_t f = 1;
      for (int i = 2; i <= n; ++i) f *= i;
      return f;
    };
    std::uint64_t total = 0;
    std::uint64_t scripts = 1;
    for (int k = 1; k <= max_ops; ++k) {
      scripts *= static_cast<std::uint64_t>(o * r);
      total += scripts * (fact(k) + std::uint64_t(k) * (fact(k + 1) / 2));
    }
    return total;
  };
  EXPECT_EQ(expected_confluence_sequences(ConfluenceKind::OrSet, 2, 2),
            closed_form(4, 2, 2));
  EXPECT_EQ(expected_confluence_sequences(ConfluenceKind::PnCounter, 3, 3),
            closed_form(2, 3, 3));

  const ConfluenceReport report = fuzz_confluence(ConfluenceKind::OrSet, 2, 2);
  EXPECT_EQ(report.failures, 0u);
  EXPECT_EQ(report.sequences,
            expected_confluence_sequences(ConfluenceKind::OrSet, 2, 2));
  EXPECT_EQ(report.scripts, 8u + 64u);
}

TEST(Confluence, SmallPnCounterSpace) {
  const ConfluenceReport report =
      fuzz_confluence(ConfluenceKind::PnCounter, 3, 2);
  EXPECT_EQ(report.failures, 0u);
  EXPECT_EQ(report.sequences,
            expected_confluence_sequences(ConfluenceKind::PnCounter, 3, 2));
}

TEST(Confluence, BoundsEnforced) {
  EXPECT_THROW(fuzz_confluence(ConfluenceKind::OrSet, 0, 2),
               std::invalid_argument);
  EXPECT_THROW(fuzz_confluence(ConfluenceKind::OrSet, 6, 2),
               std::invalid_argument);
  EXPECT_THROW(fuzz_confluence(ConfluenceKind::OrSet, 2, 5),
               std::invalid_argument);
}

}  // namespace
}  // namespace latticeflow
