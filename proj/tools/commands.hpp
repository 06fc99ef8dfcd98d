#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

/// Exit codes.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

struct EnumerateArgs {
  std::string mode = "real";
  std::string format = "json";
  std::string out;
};

struct DecomposeArgs {
  std::string in;
  std::string beta = "000";
  std::string out_dir;
  double div_tol = 1e-10;
};

struct SolveArgs {
  std::string in;
  std::string config;
  std::string out_dir;
};

struct RigidityArgs {
  std::string mode = "real";
  int n = 16;
  int seeds = 3;
  std::string config;
  std::string out;
};

struct BeltramiArgs {
  int n = 32;
  double t = 0.1;
  std::string out;
};

struct Example41Args {
  int n = 32;
  std::uint64_t seed = 1;
  std::string out;
};

struct HalfspaceArgs {
  std::string in;
  std::string extend = "sym";
  std::string config;
  std::string out;
  double split_tol = 1e-8;
};

struct GenerateArgs {
  std::string kind;
  bool beltrami = false;
  int n = 16;
  std::uint64_t seed = 1;
  double amplitude = 1.0;
  bool half = false;
  std::string out;
};

int run_enumerate(const EnumerateArgs& a);
int run_decompose(const DecomposeArgs& a);
int run_solve(const SolveArgs& a);
int run_rigidity(const RigidityArgs& a);
int run_beltrami(const BeltramiArgs& a);
int run_example41(const Example41Args& a);
int run_halfspace(const HalfspaceArgs& a);
int run_selftest();
int run_generate(const GenerateArgs& a);

}  // namespace cli
