#ifndef SPECDATA_VERIFY_HPP
#define SPECDATA_VERIFY_HPP

#include <cstdio>
#include <future>
#include <string>
#include <vector>

#include "specdata/chow.hpp"
#include "specdata/field.hpp"
#include "specdata/gen.hpp"
#include "specdata/tuples.hpp"

namespace specdata {

struct VerifyConfig {
    std::uint64_t seed = 1;
    int trials = 100;
    int nmax = 4;
    int dmax = 3;
    FieldDesc field = FieldDesc::Q();
    int jobs = 1;
    bool inject_newton_bug = false;  // mutation hook for self-tests
};

struct VerifyOutcome {
    bool all_pass = true;
    int failed_trials = 0;
    std::string report;
};

namespace detail {

struct CheckLine {
    bool pass = true;
    std::string text;
};

/// One trial: sample a block instance with known spectrum, then run the full
/// cross-check battery against it. Everything is derived from (seed, index),
/// so trials are order- and thread-independent.
template <class K>
CheckLine run_verify_trial(const VerifyConfig& cfg, int index) {
    SeededRng rng = SeededRng::for_stream(cfg.seed, static_cast<std::uint64_t>(index));
    const SampledInstance<K> inst = random_instance<K>(rng, cfg.nmax, cfg.dmax, cfg.field);
    const MatrixTuple<K>& t = inst.tuple;

    const ZeroCycle<K> datum = spectral_datum(t);
    const bool round_trip = datum == inst.cycle;

    const MatrixTuple<K> reconjugated = conjugate(t, random_invertible<K>(rng, t.n, cfg.field));
    const bool conj_invariant = spectral_datum(reconjugated) == datum;

    const HitchinCoords<K> traces = trace_powers(t);
    const bool trace_agree = traces == power_sums_from_points(datum.expand());

    ChowCoords<K> from_traces = newton_p_to_e(traces);
    if (cfg.inject_newton_bug && !from_traces.tensors.empty())
        from_traces.tensors[0] = -from_traces.tensors[0];
    const bool newton_agree = from_traces == elementary_from_points(datum.expand());

    const bool cayley = cayley_hamilton_check(t, datum, 5, rng.next()).ok;

    int chow2 = -1;  // n/a
    if (t.n == 2 && t.d == 2) chow2 = chow2_membership(iota(datum)) ? 1 : 0;

    auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "trial %04d: n=%d d=%d round_trip=%s conjugation=%s traces=%s newton=%s cayley=%s chow2=%s",
                  index, t.n, t.d, flag(round_trip), flag(conj_invariant), flag(trace_agree), flag(newton_agree),
                  flag(cayley), chow2 < 0 ? "n/a" : flag(chow2 == 1));
    const bool pass = round_trip && conj_invariant && trace_agree && newton_agree && cayley && chow2 != 0;
    return {pass, std::string(buf)};
}

template <class K>
VerifyOutcome run_verify_typed(const VerifyConfig& cfg) {
    if (!cfg.field.rational && cfg.field.p <= cfg.nmax)
        throw BadInputError("verify: prime modulus must exceed nmax (Newton conversion divides by 1..n)");

    std::vector<CheckLine> lines(static_cast<std::size_t>(cfg.trials));
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (int i = 0; i < cfg.trials; ++i) lines[static_cast<std::size_t>(i)] = run_verify_trial<K>(cfg, i);
    } else {
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.push_back(std::async(std::launch::async, [&cfg, &lines, w, jobs]() {
                for (int i = w; i < cfg.trials; i += jobs)
                    lines[static_cast<std::size_t>(i)] = run_verify_trial<K>(cfg, i);
            }));
        }
        for (auto& f : workers) f.get();
    }

    VerifyOutcome out;
    std::string body;
    for (const auto& line : lines) {
        body += line.text + "\n";
        if (!line.pass) ++out.failed_trials;
    }
    out.all_pass = out.failed_trials == 0;

    out.report = "verify seed=" + std::to_string(cfg.seed) + " trials=" + std::to_string(cfg.trials) +
                 " nmax=" + std::to_string(cfg.nmax) + " dmax=" + std::to_string(cfg.dmax) +
                 " field=" + cfg.field.to_string() + "\n";
    out.report +=
        "checks: round trip, conjugation invariance, trace/power-sum agreement, Newton factorization, "
        "Cayley-Hamilton, degree-2 plane membership (n=d=2 only)\n";
    out.report += body;
    out.report += "summary: " + std::to_string(cfg.trials - out.failed_trials) + "/" + std::to_string(cfg.trials) +
                  " trials passed\n";
    out.report += out.all_pass ? "RESULT PASS\n" : "RESULT FAIL\n";
    return out;
}

}  // namespace detail

/// The batch cross-check harness behind `specdata verify`. The report is a
/// pure function of the config (the job count never changes the bytes).
inline VerifyOutcome run_verify(const VerifyConfig& cfg) {
    if (cfg.field.rational) return detail::run_verify_typed<Rational>(cfg);
    return detail::run_verify_typed<Fp>(cfg);
}

}  // namespace specdata

#endif
