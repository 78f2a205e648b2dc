#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "occwalk/drift_sequence.hpp"
#include "occwalk/rng.hpp"

namespace occwalk {

// State of the pair chain (X_t, eta_t). eta counts visits to the origin
// including the initial count eta_0 (default 1); it increments exactly when
// a step lands on 0 at t >= 1.
struct WalkState {
    std::int64_t x = 0;
    std::int64_t eta = 1;
    std::int64_t t = 0;
};

struct StepRecord {
    std::int64_t t;
    std::int64_t x;
    std::int64_t eta;
};

// Online path summary; O(1) memory regardless of horizon.
struct PathSummary {
    std::int64_t x_end = 0;
    std::int64_t eta_end = 1;
    std::int64_t max_x = 0;        // max_{i<=n} X_i  (X_0 = 0 included)
    std::int64_t max_abs_x = 0;    // max_{i<=n} |X_i|
    std::int64_t last_zero_time = 0;  // V_n = max{i<=n : X_i = 0}
    bool at_zero = true;
};

// Summary of one excursion away from 0; the k-th excursion runs under
// constant drift eps_k. tau is even and >= 2 for complete excursions;
// a budget-truncated final excursion carries complete = false and tau =
// steps walked so far.
struct ExcursionRecord {
    std::int64_t index;
    int sign;
    std::int64_t tau;
    std::int64_t max_abs;
    std::int64_t end_time;
    bool complete;
};

// One transition of the pair chain: from 0 move +-1 with probability 1/2,
// from x != 0 move toward 0 with probability (1+eps_eta)/2. Consumes exactly
// one 64-bit draw, the same stream layout as the bulk simulators.
WalkState step(const WalkState& state, const DriftSequence& eps, Xoshiro256pp& rng);

// Walk to the horizon collecting online summaries only.
PathSummary simulate_summary(const DriftSequence& eps, std::int64_t horizon, Xoshiro256pp& rng);

// Walk to the horizon recording the full trajectory (records X_1..X_n).
// Consumes the stream identically to simulate_summary, so both report the
// same summary for the same (seed, replicate).
std::vector<StepRecord> simulate_trajectory(const DriftSequence& eps, std::int64_t horizon,
                                            Xoshiro256pp& rng, PathSummary* summary = nullptr);

// Exactly `count` complete excursions.
std::vector<ExcursionRecord> simulate_excursions_count(const DriftSequence& eps,
                                                       std::int64_t count, Xoshiro256pp& rng);

// Excursions until the time budget is exhausted; the in-progress excursion,
// if any, is emitted truncated with complete = false.
std::vector<ExcursionRecord> simulate_excursions_budget(const DriftSequence& eps,
                                                        std::int64_t horizon, Xoshiro256pp& rng);

struct CoupledPaths {
    std::vector<std::int64_t> path1;  // |path1[t]| <= |path2[t]| for all t
    std::vector<std::int64_t> path2;
};

// Monotone coupling driven by one shared uniform stream:
//   Y_{t+1} = Y_t + 2*I{U_t >= (1 + sign(Y_t) eps_eta)/2} - 1.
// Requires sup eps2 <= inf eps1 over indices reachable within the horizon,
// 0 <= x1 <= x2 with x2 - x1 even. The dominance |Y1| <= |Y2| is asserted
// at every step, not sampled.
CoupledPaths coupled_pair(const DriftSequence& eps1, const DriftSequence& eps2, std::int64_t x1,
                          std::int64_t x2, std::int64_t horizon, Xoshiro256pp& rng);

void write_trajectory_csv(std::ostream& os, const std::vector<StepRecord>& steps);
void write_excursions_csv(std::ostream& os, const std::vector<ExcursionRecord>& excursions);

}  // namespace occwalk
