#pragma once

// Zone-level interpreter of the executor that runs a machine M on all binary
// inputs in parallel.  The tape is [left-end][separator] followed by one zone
// per word in length-then-lex order; a zone is
//   [diamond][result][#][input word][#][ T(n) margin | input | T(n) margin ]
// so a zone for a length-n word occupies 4+2n+2T(n) cells counting its
// diamond.  Each stage walks left to right, advances every zone's machine by
// one step, writes a finished zone's result cell once, and appends a fresh
// zone.  The virtual head steps cell by cell; before stepping onto any result
// cell it makes dummy back-and-forth moves so the arrival step is divisible
// by 3.  Offset arithmetic is exact (gmp) far beyond simulated sizes.

#include <gmpxx.h>

#include <string>
#include <unordered_set>
#include <vector>

#include "sgame/automata.hpp"

namespace sgame {

using BigInt = mpz_class;

struct TimeBudget {
    long C = 1;
    long kappa = 1;

    BigInt operator()(long n) const;      // C * 2^(n^kappa)
    long long value_small(long n) const;  // same, guarded against overflow
};

BigInt bin_value(const std::string& w);
BigInt word_index(const std::string& w);  // 2^|w| + bin(w), counting from 1
std::string word_at_index(long long k);

struct ZoneOffsets {
    BigInt S;             // total size of everything left of the zone's diamond
    BigInt result_index;  // S + 1
};
ZoneOffsets zone_offset(const std::string& w, const TimeBudget& T);
// the same sum accumulated Horner-style (different association/order)
BigInt zone_offset_sum_check(const std::string& w, const TimeBudget& T);

long long zone_size(long n, const TimeBudget& T);

struct Zone {
    std::string word;
    long long start = 0;         // cell of the zone's diamond
    long long config_start = 0;  // first cell of the configuration block
    long long config_len = 0;    // |word| + 2 T(|word|)
    int result = -1;             // -1 running, 0 reject, 1 accept
    long long result_step = -1;  // step counter value when the result was written
    // simulated machine inside the block, in absolute tape cells
    std::vector<int> cells;
    long long head = 0;
    int state = 1;
};

// charge model: every head movement costs one step per cell; fixed extras are
// named here so measured running times are reproducible
struct ChargePolicy {
    long long tm_step_backtrack = 2;  // writing the simulated head's neighborhood
    long long increment(long n) const { return 2 * n + 2; }  // next-word arithmetic
    long long compute_t(long n, long bits) const {           // binary T(n) from unary n
        return (n + 1) * bits + static_cast<long long>(bits) * bits;
    }
    long long mark_surcharge(long bits) const { return 2 * bits + 1; }  // per margin cell
};

class ParallelMachine {
public:
    ParallelMachine(TuringMachine m, TimeBudget T);

    void run_stage();

    struct Result {
        bool finished = false;
        bool accept = false;
        long long t_res = -1;
        bool bound_ok = false;  // t_res < 2^(4 n^kappa)
        long long stages = 0;
    };
    // default stage budget: 2^(n+1) + T(n)
    Result run_until_result(const std::string& w, long long stage_budget = -1);

    long long stages_done() const { return stage_; }
    const std::vector<Zone>& zones() const { return zones_; }
    long long steps() const { return t_; }
    long long head() const { return head_; }
    long long tape_end() const { return tape_end_; }
    long long first_block_visits() const { return first_block_visits_; }
    bool mod3_ok() const { return mod3_ok_; }

private:
    void walk_to(long long target);
    void append_fresh_zone();
    void advance_zone(Zone& z);

    TuringMachine m_;
    TimeBudget T_;
    ChargePolicy charge_;
    std::vector<Zone> zones_;
    std::unordered_set<long long> result_cells_;
    long long stage_ = 0;
    long long t_ = 0;
    long long head_ = 0;
    long long tape_end_ = 0;
    long long first_block_visits_ = 0;
    bool mod3_ok_ = true;
};

struct ReductionReport {
    std::string w;
    BigInt k, S, u, t, x1, x2;
    int N = 0;
    int L = 0;
    long kappa = 1;
};

// bit offset of the result inside the phi block of the result cell: the
// accept symbol relabels to L-1 whose block is 1 1 0^{L-1} 1, so the bit at
// offset 2 is 0 exactly when the machine accepts (any other symbol keeps a 1
// there); P-position <=> accepted
inline constexpr int kResultBitOffset = 2;

ReductionReport reduction_position(const std::string& w, int N, int L, long kappa,
                                   long C = 1);
std::string format_report(const ReductionReport& rep);

}  // namespace sgame
