// Copyright 2026 The unicomp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNICOMP_COMPRESSOR_HPP_
#define UNICOMP_COMPRESSOR_HPP_

#include <cstdint>
#include <memory>
#include <string>

#include "unicomp/linalg.hpp"

namespace unicomp {

inline constexpr std::uint64_t kFloatBits = 32;

enum class CompressorKind {
  kIdentity,
  kOneBit,
  kSatQuant,
  kTopK,
  kNormSign,
  kUnbiasedKBit,
  kRandK,
  kScalarization,
  kUniformQuant,
  kCompose,
  kNoisy,
};

CompressorKind parse_compressor_kind(const std::string& name);
std::string compressor_kind_name(CompressorKind kind);

struct CompressorSpec {
  CompressorKind kind = CompressorKind::kIdentity;
  double level = 1.0;          // C' for OneBit / SatQuant
  double step = 1.0;           // quantization step
  int count = 1;               // k for TopK / RandK
  int bits = 1;                // bit width for UnbiasedKBit
  double noise = 0.0;          // noise radius for Noisy
  double radius = 1.0;         // contract radius for TopK
  double inner_divisor = 1.0;  // Compose: inner output is divided by this
  std::shared_ptr<const CompressorSpec> inner;  // Compose inner, Noisy base
  std::shared_ptr<const CompressorSpec> outer;  // Compose outer
  std::uint64_t seed = 0;

  static CompressorSpec identity();
  static CompressorSpec one_bit(double level);
  static CompressorSpec sat_quant(double level, double step);
  static CompressorSpec top_k(int k, double radius = 1.0);
  static CompressorSpec norm_sign();
  static CompressorSpec unbiased_kbit(int bits);
  static CompressorSpec rand_k(int k);
  static CompressorSpec scalarization();
  static CompressorSpec uniform_quant(double step);
  static CompressorSpec noisy(const CompressorSpec& base, double noise_bound);
  static CompressorSpec compose(const CompressorSpec& inner, const CompressorSpec& outer,
                                double inner_divisor = 1.0);
};

// Throws InvalidArgument when parameters break the kind's invariants for dimension d.
void validate(const CompressorSpec& spec, int d);

// Propagates a seed to the spec and all nested components.
CompressorSpec with_seed(const CompressorSpec& spec, std::uint64_t seed);

struct Compressed {
  Vec q;
  std::uint64_t bits = 0;
};

Compressed compress(const CompressorSpec& spec, const Vec& x, std::uint64_t iteration,
                    std::uint64_t agent = 0);

enum class ContractClass { kLocal, kGlobal };

struct AssumptionContract {
  ContractClass cls = ContractClass::kGlobal;
  double p = 2.0;
  double r = 1.0;
  double C = 0.0;
  double delta = 1.0;
};

AssumptionContract lemma1_relative_params(double delta_r, double r_r, double C_xi);
AssumptionContract lemma1_absolute_params(double C_a, double r_a, double C_xi);

enum class ComposeOrder { kRelOfAbs, kAbsOfRel };
AssumptionContract lemma2_compose_params(const AssumptionContract& rel,
                                         const AssumptionContract& abs, ComposeOrder order);

// Variance factor w with E||C(x) - x||^2 <= w ||x||^2 for the dithered k-bit quantizer.
double unbiased_kbit_variance_factor(int bits, int d);

// Contract implied by the kind's definition (documented constants for the
// parametric kinds, noise and composition rules for wrapped and composed ones).
AssumptionContract derive_contract(const CompressorSpec& spec, int d);

struct VerificationReport {
  double max_ratio = 0.0;
  bool pass = false;
  long points = 0;
  Vec worst_point;
};

VerificationReport verify_local_assumption(const CompressorSpec& spec,
                                           const AssumptionContract& contract, int d,
                                           long samples, std::uint64_t seed);

VerificationReport verify_global_assumption(const CompressorSpec& spec,
                                            const AssumptionContract& contract, int d,
                                            long samples, long trials_per_sample,
                                            std::uint64_t seed);

NormContext norm_context_for(const AssumptionContract& contract, int d);

}  // namespace unicomp

#endif  // UNICOMP_COMPRESSOR_HPP_
