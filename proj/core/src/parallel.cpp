#include "sgame/parallel.hpp"

#include <bit>
#include <stdexcept>

namespace sgame {

namespace {

long long ipow_checked(long base, long exp) {
    long long r = 1;
    for (long i = 0; i < exp; ++i) {
        if (r > (1LL << 40) / (base > 1 ? base : 2))
            throw std::invalid_argument("exponent n^kappa out of range");
        r *= base;
    }
    return r;
}

int bit_width_ll(long long v) {
    return std::bit_width(static_cast<unsigned long long>(v));
}

}  // namespace

BigInt TimeBudget::operator()(long n) const {
    if (C < 1 || kappa < 1) throw std::invalid_argument("time budget needs C, kappa >= 1");
    if (n < 0) throw std::invalid_argument("negative word length");
    long long e = ipow_checked(n, kappa);
    if (e > 100'000'000) throw std::invalid_argument("time budget exponent too large");
    BigInt t = BigInt(C) << static_cast<unsigned long>(e);
    if (t <= n) throw std::invalid_argument("time budget does not dominate input length");
    return t;
}

long long TimeBudget::value_small(long n) const {
    BigInt t = (*this)(n);
    if (!t.fits_slong_p()) throw std::invalid_argument("time budget too large to simulate");
    return t.get_si();
}

BigInt bin_value(const std::string& w) {
    BigInt b = 0;
    for (char c : w) {
        if (c != '0' && c != '1') throw std::invalid_argument("word must be binary");
        b = b * 2 + (c - '0');
    }
    return b;
}

BigInt word_index(const std::string& w) {
    BigInt k = BigInt(1) << static_cast<unsigned long>(w.size());
    return k + bin_value(w);
}

std::string word_at_index(long long k) {
    if (k < 1) throw std::invalid_argument("word indices start at 1");
    int n = bit_width_ll(k) - 1;  // 2^n <= k < 2^(n+1)
    long long v = k - (1LL << n);
    std::string w(n, '0');
    for (int i = n - 1; i >= 0; --i, v /= 2) w[i] = char('0' + v % 2);
    return w;
}

long long zone_size(long n, const TimeBudget& T) {
    return 4 + 2 * static_cast<long long>(n) + 2 * T.value_small(n);
}

ZoneOffsets zone_offset(const std::string& w, const TimeBudget& T) {
    long n = static_cast<long>(w.size());
    BigInt s = 2;  // left end marker and the separator after it
    for (long l = 0; l < n; ++l)
        s += (BigInt(1) << static_cast<unsigned long>(l)) * (4 + 2 * l + 2 * T(l));
    s += bin_value(w) * (4 + 2 * n + 2 * T(n));
    return {s, s + 1};
}

BigInt zone_offset_sum_check(const std::string& w, const TimeBudget& T) {
    // Horner form of sum_{l<n} 2^l (4+2l+2T(l)), folded from the top length down
    long n = static_cast<long>(w.size());
    BigInt acc = 0;
    for (long l = n - 1; l >= 0; --l) {
        BigInt term = 2 * T(l);
        term += 4 + 2 * l;
        acc = term + 2 * acc;
    }
    BigInt tail = bin_value(w);
    tail *= 2 * T(n) + 2 * n + 4;
    return acc + tail + 2;
}

ParallelMachine::ParallelMachine(TuringMachine m, TimeBudget T)
    : m_(std::move(m)), T_(std::move(T)) {}

void ParallelMachine::walk_to(long long target) {
    while (head_ != target) {
        long long next = head_ + (target > head_ ? 1 : -1);
        if (result_cells_.count(next)) {
            // dummy back-and-forth rounds so the arrival step divides by 3
            t_ += 2 * ((t_ + 1) % 3);
        }
        ++t_;
        head_ = next;
        if (result_cells_.count(next)) {
            ++first_block_visits_;
            if (t_ % 3 != 0) mod3_ok_ = false;
        }
        if (t_ > (1LL << 62)) throw std::runtime_error("step counter overflow");
    }
}

void ParallelMachine::advance_zone(Zone& z) {
    if (z.result >= 0) return;  // settled zones are only passed through
    walk_to(z.head);
    const TmRule& r = m_.rule(z.state, z.cells[z.head - z.config_start]);
    z.cells[z.head - z.config_start] = r.write;
    z.state = r.state;
    z.head += r.dir;
    t_ += charge_.tm_step_backtrack;
    if (m_.halted(z.state)) {
        walk_to(z.start + 1);
        z.result = (z.state == 2) ? 1 : 0;
        z.result_step = t_;
        return;
    }
    // a halted head may rest one cell past the margin (it is never read
    // again); a running machine must stay inside its block
    if (z.head < z.config_start || z.head >= z.config_start + z.config_len)
        throw std::runtime_error("simulated head left its zone's margin");
}

void ParallelMachine::append_fresh_zone() {
    long long k = stage_;
    Zone z;
    z.word = word_at_index(k);
    long n = static_cast<long>(z.word.size());
    long long margin = T_.value_small(n);
    long bits = bit_width_ll(margin);
    z.start = tape_end_;
    z.config_start = z.start + 4 + n;
    z.config_len = n + 2 * margin;
    z.cells.assign(z.config_len, m_.ell);
    for (long i = 0; i < n; ++i) z.cells[margin + i] = z.word[i] - '0';
    z.head = z.config_start + margin;
    z.state = 1;

    result_cells_.insert(z.start + 1);
    walk_to(z.start + 1);  // write the diamond and the empty result block
    if (k > 1) {
        // shuttle the previous word across the fresh result cell, symbol by symbol
        const Zone& prev = zones_.back();
        for (size_t i = 0; i < prev.word.size(); ++i) {
            walk_to(prev.start + 3 + static_cast<long long>(i));
            walk_to(z.start + 3 + static_cast<long long>(i));
        }
        t_ += charge_.increment(n);
    }
    t_ += charge_.compute_t(n, bits);
    walk_to(z.config_start - 1);
    for (long long i = 0; i < margin; ++i) {  // counter-assisted left margin marking
        walk_to(head_ + 1);
        t_ += charge_.mark_surcharge(bits);
    }
    for (long i = 0; i < n; ++i) {  // input into the configuration block
        walk_to(z.start + 3 + i);
        walk_to(z.config_start + margin + i);
    }
    if (n == 0) walk_to(z.config_start + margin - 1);
    for (long long i = 0; i < margin; ++i) {
        walk_to(head_ + 1);
        t_ += charge_.mark_surcharge(bits);
    }
    tape_end_ = z.start + zone_size(n, T_);
    zones_.push_back(std::move(z));
}

void ParallelMachine::run_stage() {
    ++stage_;
    walk_to(0);
    if (stage_ == 1) {  // lay down the left end marker and the separator
        walk_to(2);
        tape_end_ = 2;
    }
    for (Zone& z : zones_) advance_zone(z);
    append_fresh_zone();
    walk_to(tape_end_);  // onto the right end marker
}

ParallelMachine::Result ParallelMachine::run_until_result(const std::string& w,
                                                          long long stage_budget) {
    BigInt kb = word_index(w);
    if (!kb.fits_slong_p()) throw std::invalid_argument("word too long to simulate");
    long long k = kb.get_si();
    long n = static_cast<long>(w.size());
    if (stage_budget < 0) stage_budget = (2LL << n) + T_.value_small(n);

    Result res;
    while (stage_ < stage_budget) {
        run_stage();
        if (static_cast<long long>(zones_.size()) >= k && zones_[k - 1].result >= 0) {
            res.finished = true;
            res.accept = zones_[k - 1].result == 1;
            res.t_res = zones_[k - 1].result_step;
            long long e = 4 * ipow_checked(n, T_.kappa);
            res.bound_ok = BigInt(static_cast<long>(res.t_res)) <
                           (BigInt(1) << static_cast<unsigned long>(e));
            break;
        }
    }
    res.stages = stage_;
    return res;
}

ReductionReport reduction_position(const std::string& w, int N, int L, long kappa,
                                   long C) {
    if (N < 1 || L < 2) throw std::invalid_argument("need N >= 1 and L >= 2");
    TimeBudget T{C, kappa};
    ReductionReport rep;
    rep.w = w;
    rep.N = N;
    rep.L = L;
    rep.kappa = kappa;
    rep.k = word_index(w);
    rep.S = zone_offset(w, T).S;
    rep.u = BigInt(L + 2) * (rep.S + 1) + kResultBitOffset;
    long long e = 4 * ipow_checked(static_cast<long>(w.size()), kappa);
    rep.t = BigInt(1) << static_cast<unsigned long>(e);
    rep.x1 = N * rep.t + rep.u;
    rep.x2 = N * rep.t - rep.u;
    if (rep.x2 < 0)
        throw std::invalid_argument("result offset exceeds the light cone for this N");
    return rep;
}

std::string format_report(const ReductionReport& rep) {
    std::string out = "w=" + rep.w + " k=" + rep.k.get_str() + " S=" + rep.S.get_str() +
                      " u=" + rep.u.get_str() + " t=" + rep.t.get_str();
    out += " pos=(" + rep.x1.get_str() + "," + rep.x2.get_str() + ",1";
    for (int i = 1; i < 2 * rep.N; ++i) out += ",0";
    out += ")";
    return out;
}

}  // namespace sgame
