#include <gtest/gtest.h>

#include <thread>

#include "lpdo/factorization.hpp"
#include "lpdo/parser.hpp"

namespace lpdo {
namespace {

// Parameters registered from several threads at once while factoring.
TEST(Concurrency, ParallelFactorization) {
  std::vector<std::thread> threads;
  std::vector<int> ok(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([t, &ok] {
      ParseOptions o;
      o.parameters = {"q" + std::to_string(t)};
      const LPDO a = parse_operator("Dx^2-Dy^2+x*Dy+y*Dx+(y^2-x^2)/4+1 + q" + std::to_string(t) + " - q" +
                                        std::to_string(t),
                                    o);
      ok[static_cast<std::size_t>(t)] = factor_left(a).factored() ? 1 : 0;
    });
  }
  for (auto& th : threads) th.join();
  for (int v : ok) EXPECT_EQ(v, 1);
}

}  // namespace
}  // namespace lpdo
