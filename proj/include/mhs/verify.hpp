#pragma once

/// The verifier registry: one entry per congruence family, each binding a
/// hypothesis filter, a predictor and the direct-evaluation oracle. The
/// sweep engine fans primes out to a worker pool (each worker owns its
/// tables) and merges reports back in deterministic (prime, parameter)
/// order. Conjecture-flagged entries never gate: their counterexamples are
/// recorded, not failed.

#include "mhs/congruences.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mhs {

enum class TheoremId {
    wolstenholme,
    bruck,
    zeta_partial,
    valuation_profile,
    equiv_quadruple,
    homogeneous,
    homogeneous_zc,
    irregular_boost,
    length2,
    length2_modp2,
    reversal,
    palindrome,
    length3_odd,
    length3_general,
    weight4_modp2,
    prop_435,
    rsr_modp2,
    prop_1313,
    bern_conv,
    lemma_b2,
    conv_families,
    rs_repeat,
    conjecture_cases,
    hoffman_relations,
};

inline const std::vector<std::pair<TheoremId, std::string>>& theorem_id_names() {
    static const std::vector<std::pair<TheoremId, std::string>> names = {
        {TheoremId::wolstenholme, "wolstenholme"},
        {TheoremId::bruck, "bruck"},
        {TheoremId::zeta_partial, "zeta_partial"},
        {TheoremId::valuation_profile, "valuation_profile"},
        {TheoremId::equiv_quadruple, "equiv_quadruple"},
        {TheoremId::homogeneous, "homogeneous"},
        {TheoremId::homogeneous_zc, "homogeneous_zc"},
        {TheoremId::irregular_boost, "irregular_boost"},
        {TheoremId::length2, "length2"},
        {TheoremId::length2_modp2, "length2_modp2"},
        {TheoremId::reversal, "reversal"},
        {TheoremId::palindrome, "palindrome"},
        {TheoremId::length3_odd, "length3_odd"},
        {TheoremId::length3_general, "length3_general"},
        {TheoremId::weight4_modp2, "weight4_modp2"},
        {TheoremId::prop_435, "prop_435"},
        {TheoremId::rsr_modp2, "rsr_modp2"},
        {TheoremId::prop_1313, "prop_1313"},
        {TheoremId::bern_conv, "bern_conv"},
        {TheoremId::lemma_b2, "lemma_b2"},
        {TheoremId::conv_families, "conv_families"},
        {TheoremId::rs_repeat, "rs_repeat"},
        {TheoremId::conjecture_cases, "conjecture_cases"},
        {TheoremId::hoffman_relations, "hoffman_relations"},
    };
    return names;
}

inline std::string to_string(TheoremId id) {
    for (const auto& [tid, name] : theorem_id_names())
        if (tid == id) return name;
    return "?";
}

inline TheoremId theorem_id_from_string(const std::string& name) {
    for (const auto& [tid, n] : theorem_id_names())
        if (n == name) return tid;
    throw std::invalid_argument("unknown theorem id: " + name);
}

struct VerificationReport {
    std::string theorem;
    std::string params;
    std::uint64_t p = 0;
    unsigned k = 1;
    std::optional<std::uint64_t> predicted;
    std::uint64_t observed = 0;
    enum class Status { Pass, Fail, Skipped } status = Status::Skipped;
    std::string branch;
    bool conjectural = false;

    std::string status_string() const {
        switch (status) {
            case Status::Pass: return "pass";
            case Status::Fail: return "fail";
            case Status::Skipped: return "skipped";
        }
        return "?";
    }

    std::string to_json_line() const {
        auto esc = [](const std::string& s) {
            std::string out;
            for (char c : s) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out;
        };
        std::ostringstream os;
        os << "{\"theorem\": \"" << esc(theorem) << "\", \"params\": \"" << esc(params)
           << "\", \"p\": " << p << ", \"k\": " << k << ", \"predicted\": ";
        if (predicted)
            os << *predicted;
        else
            os << "null";
        os << ", \"observed\": " << observed << ", \"status\": \"" << status_string()
           << "\", \"branch\": \"" << esc(branch) << "\"}";
        return os.str();
    }
};

struct VerifySummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::size_t conjecture_pass = 0;
    std::size_t conjecture_fail = 0;

    void add(const VerificationReport& r) {
        switch (r.status) {
            case VerificationReport::Status::Pass:
                r.conjectural ? ++conjecture_pass : ++pass;
                break;
            case VerificationReport::Status::Fail:
                r.conjectural ? ++conjecture_fail : ++fail;
                break;
            case VerificationReport::Status::Skipped: ++skipped; break;
        }
    }
    /// Theorem regressions gate; conjecture counterexamples do not.
    bool gating_failure() const { return fail > 0; }

    std::string to_json_line() const {
        std::ostringstream os;
        os << "{\"summary\": {\"pass\": " << pass << ", \"fail\": " << fail
           << ", \"skipped\": " << skipped << ", \"conjecture_pass\": " << conjecture_pass
           << ", \"conjecture_fail\": " << conjecture_fail << "}}";
        return os.str();
    }
};

inline VerifySummary summarize(const std::vector<VerificationReport>& reports) {
    VerifySummary s;
    for (const auto& r : reports) s.add(r);
    return s;
}

struct SweepOptions {
    std::uint64_t pmin = 5;
    std::uint64_t pmax = 97;
    std::int64_t max_weight = 7;
    unsigned parallelism = 1;
};

namespace detail {

inline VerificationReport make_report(TheoremId id, std::string params,
                                      const Prediction& pred, std::uint64_t observed) {
    VerificationReport r;
    r.theorem = to_string(id);
    r.params = std::move(params);
    r.branch = pred.branch;
    r.conjectural = pred.conjectural;
    if (!pred.applicable) {
        r.status = VerificationReport::Status::Skipped;
        r.observed = observed;
        return r;
    }
    r.p = pred.ring.p;
    r.k = pred.ring.k;
    r.predicted = pred.residue;
    r.observed = observed;
    r.status = (pred.residue && *pred.residue == observed)
                   ? VerificationReport::Status::Pass
                   : VerificationReport::Status::Fail;
    return r;
}

inline VerificationReport make_bool_report(TheoremId id, std::string params,
                                           std::uint64_t p, unsigned k, bool ok,
                                           std::string branch, bool conjectural = false) {
    VerificationReport r;
    r.theorem = to_string(id);
    r.params = std::move(params);
    r.p = p;
    r.k = k;
    r.predicted = 0;
    r.observed = ok ? 0 : 1;
    r.status = ok ? VerificationReport::Status::Pass : VerificationReport::Status::Fail;
    r.branch = std::move(branch);
    r.conjectural = conjectural;
    return r;
}

inline std::string comp_params(const Composition& s) { return "s=(" + s.to_string() + ")"; }

// ---- per-theorem sweeps over one prime ----

using Sink = std::vector<VerificationReport>;

inline void sweep_wolstenholme(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    PrimePowerRing r2 = ctx.ring(2);
    out.push_back(make_bool_report(TheoremId::wolstenholme, "route=stirling", p, 2,
                                   stirling1_mod(p, 2, r2) == 0, "p^2_divides_St(p,2)"));
    out.push_back(make_bool_report(TheoremId::wolstenholme, "route=harmonic", p, 2,
                                   ctx.eval(2).H(Composition({1}), p - 1) == 0,
                                   "p^2_divides_H(1)"));
}

inline void sweep_bruck(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    std::uint64_t lmax = std::min<std::uint64_t>(p - 3, static_cast<std::uint64_t>(
                                                            std::max<std::int64_t>(opt.max_weight, 1)));
    for (std::uint64_t l = 1; l <= lmax; ++l) {
        unsigned k = (l + 1) % 2 == 0 ? 2 : 1;
        Composition ones(std::vector<std::int64_t>(l, 1));
        bool okH = ctx.eval(k).H(ones, p - 1) == 0;
        bool okSt = stirling1_mod(p, l + 1, ctx.ring(k)) == 0;
        out.push_back(make_bool_report(TheoremId::bruck, "l=" + std::to_string(l), p, k,
                                       okH && okSt, "nested_ones_and_stirling"));
    }
}

inline void sweep_zeta(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    std::vector<std::uint64_t> svals;
    for (std::uint64_t s = 1; s <= static_cast<std::uint64_t>(std::max<std::int64_t>(opt.max_weight, 1)); ++s)
        svals.push_back(s);
    for (std::uint64_t s : {p - 2, p - 1, p, p + 1, 2 * p - 3, 2 * p - 2, 2 * p - 1})
        svals.push_back(s);
    std::sort(svals.begin(), svals.end());
    svals.erase(std::unique(svals.begin(), svals.end()), svals.end());
    for (std::uint64_t s : svals) {
        Prediction pred = predict_zeta(s, ctx);
        std::uint64_t obs = pred.applicable
                                ? ctx.eval(pred.ring.k).H(Composition({static_cast<std::int64_t>(s)}), p - 1)
                                : 0;
        out.push_back(make_report(TheoremId::zeta_partial, "s=" + std::to_string(s), pred, obs));
    }
}

inline void sweep_valuation_profile(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    std::vector<std::uint64_t> svals;
    for (std::uint64_t s = 1; s <= static_cast<std::uint64_t>(std::max<std::int64_t>(opt.max_weight, 1)) + 4; ++s)
        svals.push_back(s);
    for (std::uint64_t s : {p, 2 * p, 3 * p, p * p, p * p - 1}) svals.push_back(s);
    std::sort(svals.begin(), svals.end());
    svals.erase(std::unique(svals.begin(), svals.end()), svals.end());
    for (std::uint64_t s : svals) {
        ValuationProfile prof = valuation_profile(s, ctx);
        VerificationReport r;
        r.theorem = to_string(TheoremId::valuation_profile);
        r.params = "s=" + std::to_string(s);
        r.p = p;
        r.branch = prof.branch;
        if (!prof.applicable) {
            r.status = VerificationReport::Status::Skipped;
            out.push_back(r);
            continue;
        }
        unsigned k = static_cast<unsigned>(prof.hi + 1);
        // stay within the 63-bit modulus budget
        double bits = static_cast<double>(k) * std::log2(static_cast<double>(p));
        if (bits >= 62.0) {
            r.status = VerificationReport::Status::Skipped;
            r.branch += "/modulus_too_large";
            out.push_back(r);
            continue;
        }
        ValuationResult vr = valuation_H(Composition({static_cast<std::int64_t>(s)}), p, k);
        r.k = k;
        r.predicted = static_cast<std::uint64_t>(prof.lo);
        r.observed = vr.at_least ? static_cast<std::uint64_t>(vr.v)
                                 : static_cast<std::uint64_t>(vr.v);
        bool ok = !vr.at_least && vr.v >= prof.lo && vr.v <= prof.hi;
        r.status = ok ? VerificationReport::Status::Pass : VerificationReport::Status::Fail;
        out.push_back(r);
    }
}

inline void sweep_equiv_quadruple(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::uint64_t n = 1; n <= 6 && p >= 2 * n + 3; ++n) {
        auto q = equiv_quadruple(n, ctx);
        bool all_equal = q[0] == q[1] && q[1] == q[2] && q[2] == q[3];
        out.push_back(make_bool_report(TheoremId::equiv_quadruple, "n=" + std::to_string(n),
                                       p, 3, all_equal,
                                       q[0] ? "quadruple_true" : "quadruple_false"));
    }
}

inline void sweep_homogeneous(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::int64_t l = 1; l <= opt.max_weight; ++l) {
        for (std::int64_t s = 1; l * s <= opt.max_weight; ++s) {
            Prediction pred = predict_homogeneous_parity(static_cast<std::uint64_t>(s),
                                                         static_cast<std::uint64_t>(l), ctx);
            std::string params = "s=" + std::to_string(s) + ",l=" + std::to_string(l);
            Composition comp(std::vector<std::int64_t>(l, s));
            if (!pred.applicable) {
                out.push_back(make_report(TheoremId::homogeneous, params, pred, 0));
                continue;
            }
            std::uint64_t obsH = ctx.eval(pred.ring.k).H(comp, p - 1);
            std::uint64_t obsS = ctx.eval(pred.ring.k).S(comp, p - 1);
            auto r = make_report(TheoremId::homogeneous, params, pred, obsH);
            if (obsS != *pred.residue) r.status = VerificationReport::Status::Fail;
            out.push_back(r);
        }
    }
}

inline void sweep_homogeneous_zc(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::int64_t l = 1; l <= opt.max_weight; ++l) {
        for (std::int64_t s = 1; l * s <= opt.max_weight; ++s) {
            std::string params = "s=" + std::to_string(s) + ",l=" + std::to_string(l);
            Prediction ph = predict_homogeneous(static_cast<std::uint64_t>(s),
                                                static_cast<std::uint64_t>(l), SumKind::H, ctx);
            if (!ph.applicable) {
                out.push_back(make_report(TheoremId::homogeneous_zc, params, ph, 0));
                continue;
            }
            Composition comp(std::vector<std::int64_t>(l, s));
            out.push_back(make_report(TheoremId::homogeneous_zc, params + ",sum=H", ph,
                                      ctx.eval(ph.ring.k).H(comp, p - 1)));
            Prediction ps = predict_homogeneous(static_cast<std::uint64_t>(s),
                                                static_cast<std::uint64_t>(l), SumKind::S, ctx);
            out.push_back(make_report(TheoremId::homogeneous_zc, params + ",sum=S", ps,
                                      ctx.eval(ps.ring.k).S(comp, p - 1)));
        }
    }
}

inline void sweep_irregular_boost(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::uint64_t t : ctx.bern().zero_indices()) {
        // (p, p-ls-2) irregular, l and s odd
        std::uint64_t v = p - t - 2;
        for (std::uint64_t l = 1; l <= v; ++l) {
            if (v % l != 0) continue;
            std::uint64_t s = v / l;
            if (l % 2 == 0 || s % 2 == 0) continue;
            Composition comp(std::vector<std::int64_t>(l, static_cast<std::int64_t>(s)));
            std::string params = "s=" + std::to_string(s) + ",l=" + std::to_string(l) +
                                 ",t=" + std::to_string(t);
            bool ok = ctx.eval(3).H(comp, p - 1) == 0 && ctx.eval(3).S(comp, p - 1) == 0;
            out.push_back(make_bool_report(TheoremId::irregular_boost, params, p, 3, ok,
                                           "cube_boost"));
        }
        // (p, p-ls-1) irregular
        std::uint64_t w = p - t - 1;
        for (std::uint64_t l = 1; l <= w; ++l) {
            if (w % l != 0) continue;
            std::uint64_t s = w / l;
            Composition comp(std::vector<std::int64_t>(l, static_cast<std::int64_t>(s)));
            std::string params = "s=" + std::to_string(s) + ",l=" + std::to_string(l) +
                                 ",t=" + std::to_string(t);
            bool ok = ctx.eval(2).H(comp, p - 1) == 0 && ctx.eval(2).S(comp, p - 1) == 0;
            out.push_back(make_bool_report(TheoremId::irregular_boost, params, p, 2, ok,
                                           "square_boost"));
        }
    }
}

inline void sweep_length2(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> insts;
    for (std::int64_t s1 = 1; s1 <= opt.max_weight; ++s1)
        for (std::int64_t s2 = 1; s1 + s2 <= opt.max_weight; ++s2)
            insts.emplace_back(s1, s2);
    // residue-class boundaries, including m+n at and beyond p
    insts.emplace_back(p - 1, 1);
    insts.emplace_back(1, p - 1);
    insts.emplace_back(p - 1, p - 1);
    insts.emplace_back(p, p - 1);
    insts.emplace_back(p - 1, p);
    insts.emplace_back(p + 1, p - 2);
    insts.emplace_back(p - 2, p - 2);
    insts.emplace_back(p - 2, p - 3);
    insts.emplace_back(p - 3, p - 2);
    for (auto [s1, s2] : insts) {
        Prediction pred = predict_length2(s1, s2, ctx);
        std::uint64_t obs = ctx.eval(1).H(
            Composition({static_cast<std::int64_t>(s1), static_cast<std::int64_t>(s2)}), p - 1);
        out.push_back(make_report(TheoremId::length2,
                                  "s1=" + std::to_string(s1) + ",s2=" + std::to_string(s2),
                                  pred, obs));
    }
}

inline void sweep_length2_modp2(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::int64_t s = 1; s <= opt.max_weight; ++s) {
        for (std::int64_t t = 1; s + t <= opt.max_weight; ++t) {
            if ((s % 2) != (t % 2)) continue;
            if (p <= static_cast<std::uint64_t>(s + t + 1)) continue;
            std::string params = "s=" + std::to_string(s) + ",t=" + std::to_string(t);
            Composition comp({s, t});
            Prediction ph = predict_length2_modp2(s, t, SumKind::H, ctx);
            out.push_back(make_report(TheoremId::length2_modp2, params + ",sum=H", ph,
                                      ctx.eval(2).H(comp, p - 1)));
            Prediction ps = predict_length2_modp2(s, t, SumKind::S, ctx);
            out.push_back(make_report(TheoremId::length2_modp2, params + ",sum=S", ps,
                                      ctx.eval(2).S(comp, p - 1)));
        }
    }
}

inline void sweep_reversal(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    PrimePowerRing r1 = ctx.ring(1);
    for (const Composition& s : all_compositions(std::min<std::int64_t>(opt.max_weight, 8))) {
        if (s.length() >= p) continue;
        Composition rev = reverse(s);
        bool flip = s.weight() % 2 != 0;
        std::uint64_t h = ctx.eval(1).H(s, p - 1);
        std::uint64_t hr = ctx.eval(1).H(rev, p - 1);
        std::uint64_t sv = ctx.eval(1).S(s, p - 1);
        std::uint64_t sr = ctx.eval(1).S(rev, p - 1);
        bool ok = (h == (flip ? r1.neg(hr) : hr)) && (sv == (flip ? r1.neg(sr) : sr));
        out.push_back(make_bool_report(TheoremId::reversal, comp_params(s), p, 1, ok,
                                       "sign_of_weight"));
    }
}

inline void sweep_palindrome(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (const Composition& s : all_compositions(std::min<std::int64_t>(opt.max_weight, 9))) {
        if (s.weight() % 2 == 0 || s != reverse(s)) continue;
        if (s.length() >= p) continue;
        bool ok = ctx.eval(1).H(s, p - 1) == 0 && ctx.eval(1).S(s, p - 1) == 0;
        out.push_back(make_bool_report(TheoremId::palindrome, comp_params(s), p, 1, ok,
                                       "odd_palindrome"));
    }
}

inline void sweep_length3_odd(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::int64_t a = 1; a <= opt.max_weight; ++a)
        for (std::int64_t b = 1; a + b < opt.max_weight; ++b)
            for (std::int64_t c = 1; a + b + c <= opt.max_weight; ++c) {
                if ((a + b + c) % 2 == 0) continue;
                bool forms_agree = true;
                Prediction pred = predict_length3_odd(a, b, c, ctx, &forms_agree);
                std::uint64_t obs = ctx.eval(1).H(Composition({a, b, c}), p - 1);
                auto r = make_report(TheoremId::length3_odd,
                                     "s=(" + std::to_string(a) + "," + std::to_string(b) +
                                         "," + std::to_string(c) + ")",
                                     pred, obs);
                if (!forms_agree) r.branch += "/published_forms_disagree";
                out.push_back(r);
            }
}

inline void sweep_length3_general(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::int64_t a = 1; a <= opt.max_weight; ++a)
        for (std::int64_t b = 1; a + b < opt.max_weight; ++b)
            for (std::int64_t c = 1; a + b + c <= opt.max_weight; ++c) {
                Prediction pred = predict_length3_general(a, b, c, ctx);
                std::string params = "s=(" + std::to_string(a) + "," + std::to_string(b) +
                                     "," + std::to_string(c) + ")";
                if (!pred.applicable) {
                    out.push_back(make_report(TheoremId::length3_general, params, pred, 0));
                    continue;
                }
                std::uint64_t obs = ctx.eval(1).H(Composition({a, b, c}), p - 1);
                out.push_back(make_report(TheoremId::length3_general, params, pred, obs));
            }
}

inline void sweep_weight4(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    if (p < 7) return;
    const std::map<Weight4Case, Composition> comps = {
        {Weight4Case::H121, Composition({1, 2, 1})}, {Weight4Case::H211, Composition({2, 1, 1})},
        {Weight4Case::H112, Composition({1, 1, 2})}, {Weight4Case::S121, Composition({1, 2, 1})},
        {Weight4Case::S211, Composition({2, 1, 1})}, {Weight4Case::S112, Composition({1, 1, 2})},
    };
    for (const auto& [which, comp] : comps) {
        Prediction pred = predict_weight4_modp2(which, ctx);
        bool is_s = which == Weight4Case::S121 || which == Weight4Case::S211 ||
                    which == Weight4Case::S112;
        std::uint64_t obs = is_s ? ctx.eval(2).S(comp, p - 1) : ctx.eval(2).H(comp, p - 1);
        out.push_back(make_report(TheoremId::weight4_modp2, to_string(which), pred, obs));
    }
    // the cyclic sum collapses to (4/5) p B_{p-5}
    PrimePowerRing r2 = ctx.ring(2);
    std::uint64_t cyc = r2.add(r2.add(ctx.eval(2).H(Composition({2, 1, 1}), p - 1),
                                      ctx.eval(2).H(Composition({1, 2, 1}), p - 1)),
                               ctx.eval(2).H(Composition({1, 1, 2}), p - 1));
    std::uint64_t want = ctx.coef_p_bern(Rational(Integer(4), Integer(5)), 1, p - 5, 2);
    out.push_back(make_bool_report(TheoremId::weight4_modp2, "cyclic_sum", p, 2, cyc == want,
                                   "cyclic"));
}

inline void sweep_prop_435(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    if (p < 17) return;
    bool ok = ctx.eval(1).H(Composition({4, 3, 5}), p - 1) == 0 &&
              ctx.eval(1).H(Composition({5, 3, 4}), p - 1) == 0;
    out.push_back(make_bool_report(TheoremId::prop_435, "s=(4,3,5)|(5,3,4)", p, 1, ok,
                                   "both_vanish"));
}

inline void sweep_rsr(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> shapes = {
        {1, 3}, {2, 1}, {1, 5}, {2, 3}, {3, 1}};
    for (auto [r, s] : shapes) {
        Prediction pred = predict_rsr_modp2(r, s, ctx);
        std::string params = "s=(" + std::to_string(r) + "," + std::to_string(s) + "," +
                             std::to_string(r) + ")";
        if (!pred.applicable) {
            out.push_back(make_report(TheoremId::rsr_modp2, params, pred, 0));
            continue;
        }
        Composition comp({static_cast<std::int64_t>(r), static_cast<std::int64_t>(s),
                          static_cast<std::int64_t>(r)});
        out.push_back(make_report(TheoremId::rsr_modp2, params + ",sum=H", pred,
                                  ctx.eval(2).H(comp, p - 1)));
        out.push_back(make_report(TheoremId::rsr_modp2, params + ",sum=S", pred,
                                  ctx.eval(2).S(comp, p - 1)));
    }
}

} // namespace detail

/// The two tied weight-8 congruences: H(1,3,1,3;p-1) as -(31/72) p B_{p-9}
/// mod p^2, and S(6,1,1,1;p-1) as -(1/54) B_{p-3}^3 - (1889/648) B_{p-9}
/// mod p. Requires p > 10.
inline std::pair<VerificationReport, VerificationReport> prop_1313_check(PrimeContext& ctx) {
    const std::uint64_t p = ctx.p();
    if (p <= 10) throw std::invalid_argument("prop_1313_check: requires p > 10");
    std::uint64_t predicted =
        ctx.ring(2).neg(ctx.coef_p_bern(Rational(Integer(31), Integer(72)), 1, p - 9, 2));
    std::uint64_t obs = ctx.eval(2).H(Composition({1, 3, 1, 3}), p - 1);
    Prediction pi = Prediction::value(ctx.ring(2), predicted, "quad_alternating");
    VerificationReport first = detail::make_report(TheoremId::prop_1313, "s=(1,3,1,3)", pi, obs);

    PrimePowerRing r1 = ctx.ring(1);
    std::uint64_t b3 = ctx.bern().get(p - 3);
    std::uint64_t cube = r1.mul(b3, r1.mul(b3, b3));
    std::uint64_t term1 = r1.mul(to_residue(Rational(Integer(1), Integer(54)), r1).value, cube);
    std::uint64_t term2 = r1.mul(to_residue(Rational(Integer(1889), Integer(648)), r1).value,
                                 ctx.bern().get(p - 9));
    Prediction pii = Prediction::value(r1, r1.neg(r1.add(term1, term2)), "bernoulli_cubic");
    VerificationReport second =
        detail::make_report(TheoremId::prop_1313, "s=(6,1,1,1),sum=S", pii,
                            ctx.eval(1).S(Composition({6, 1, 1, 1}), p - 1));
    return {first, second};
}

namespace detail {

inline void sweep_prop_1313(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    if (ctx.p() <= 10) return;
    auto [first, second] = prop_1313_check(ctx);
    out.push_back(std::move(first));
    out.push_back(std::move(second));
}

inline void sweep_bern_conv(PrimeContext& ctx, const SweepOptions& opt, Sink& out);

} // namespace detail

/// The Bernoulli convolution battery for one prime: the two weight-(p-3)
/// convolutions vanish, the shifted convolution equals -(2/3) B_{p-3}^2,
/// and the (1,1,1,n) relations hold for n <= 4.
inline std::vector<VerificationReport> bern_conv_check(PrimeContext& ctx) {
    std::vector<VerificationReport> out;
    detail::sweep_bern_conv(ctx, SweepOptions{}, out);
    return out;
}

namespace detail {

inline void sweep_bern_conv(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    PrimePowerRing r1 = ctx.ring(1);
    const auto& bt = ctx.bern();
    if (p >= 7) {
        std::uint64_t A = 0, B = 0;
        for (std::uint64_t a = 0; a <= p - 3; ++a) {
            std::uint64_t prod = r1.mul(bt.get(a), bt.get(p - 3 - a));
            A = r1.add(A, prod);
            B = r1.add(B, r1.mul(a % p, prod));
        }
        out.push_back(make_bool_report(TheoremId::bern_conv, "sum=BB", p, 1, A == 0,
                                       "plain_convolution"));
        out.push_back(make_bool_report(TheoremId::bern_conv, "sum=aBB", p, 1, B == 0,
                                       "weighted_convolution"));
    }
    if (p >= 11) {
        std::uint64_t C = 0;
        for (std::uint64_t a = 0; a <= p - 5; ++a)
            C = r1.add(C, r1.mul(bt.get(a), bt.get(p - 5 - a)));
        std::uint64_t b3 = bt.get(p - 3);
        std::uint64_t want = r1.neg(
            r1.mul(to_residue(Rational(Integer(2), Integer(3)), r1).value, r1.mul(b3, b3)));
        out.push_back(make_bool_report(TheoremId::bern_conv, "sum=BB_shift2", p, 1, C == want,
                                       "shifted_convolution"));
    }
    // triple-sum identity for H(1,1,1,n), n = 1..4
    for (std::uint64_t n = 1; n <= 4 && p > n + 3; ++n) {
        std::uint64_t acc = 0;
        for (std::uint64_t a = 0; a <= p - 2; ++a) {
            if (bt.get(a) == 0 && a != 0) continue;
            for (std::uint64_t b = 0; a + b <= p - n - 1; ++b) {
                std::uint64_t Bb = bt.get(b);
                if (Bb == 0 && b != 0) continue;
                std::uint64_t Bc = bt.get(p - n - 1 - a - b);
                if (Bc == 0) continue;
                std::uint64_t term = r1.mul(ctx.binom_mod_p(static_cast<std::int64_t>(a + b),
                                                            static_cast<std::int64_t>(b)),
                                            ctx.binom_mod_p(static_cast<std::int64_t>(a + b + n),
                                                            static_cast<std::int64_t>(n)));
                term = r1.mul(term, r1.mul(bt.get(a), r1.mul(Bb, Bc)));
                term = r1.mul(term, r1.inv((a + 1) % p));
                term = r1.mul(term, r1.inv((a + b + 1) % p));
                if ((b + n) % 2 != 0) term = r1.neg(term);
                acc = r1.add(acc, term);
            }
        }
        Composition comp({1, 1, 1, static_cast<std::int64_t>(n)});
        std::uint64_t h = ctx.eval(1).H(comp, p - 1);
        std::uint64_t hrev = ctx.eval(1).H(reverse(comp), p - 1);
        std::uint64_t sv = ctx.eval(1).S(comp, p - 1);
        std::uint64_t srev = ctx.eval(1).S(reverse(comp), p - 1);
        // the sign chain between the four sums holds for every n
        bool chain = (h == (n % 2 == 0 ? r1.neg(hrev) : hrev)) &&
                     (sv == (n % 2 == 0 ? h : r1.neg(h))) && (srev == r1.neg(h));
        out.push_back(make_bool_report(TheoremId::bern_conv,
                                       "s=(1,1,1," + std::to_string(n) + "),rel=signs",
                                       p, 1, chain, "triple_sum_signs"));
        // the displayed convolution reproduces the sum for n <= 2 once the
        // weight clears the Fermat block (weight n+3 < p-1); outside that
        // range it is recorded, not gated
        bool in_range = n <= 2 && p > n + 4;
        out.push_back(make_bool_report(TheoremId::bern_conv,
                                       "s=(1,1,1," + std::to_string(n) + "),rel=sum",
                                       p, 1, acc == h,
                                       in_range ? "triple_sum" : "triple_sum_boundary",
                                       /*conjectural=*/!in_range));
    }
}

inline void sweep_lemma_b2(PrimeContext& ctx, const SweepOptions&, Sink& out) {
    const std::uint64_t p = ctx.p();
    PrimePowerRing r1 = ctx.ring(1);
    const auto& bt = ctx.bern();
    for (std::uint64_t n = 0; n <= 8; n += 2) {
        if (p < 3 * n + 7) break;
        const std::uint64_t total = p - 3 * n - 3;
        // factor(x, j) = (B_x / (p-x)) C(p-x, j), with the x = 0 boundary
        // collapsing to C(p-1, j-1)/j
        auto factor = [&](std::uint64_t x, std::uint64_t j) -> std::uint64_t {
            if (x == 0)
                return r1.mul(ctx.binom_mod_p(static_cast<std::int64_t>(p - 1),
                                              static_cast<std::int64_t>(j - 1)),
                              r1.inv(j % p));
            std::uint64_t v = r1.mul(bt.get(x), r1.inv((p - x) % p));
            return r1.mul(v, ctx.binom_mod_p(static_cast<std::int64_t>(p - x),
                                             static_cast<std::int64_t>(j)));
        };
        std::uint64_t s12 = 0, s11 = 0;
        for (std::uint64_t a = 0; a <= total; ++a) {
            std::uint64_t b = total - a;
            if (bt.get(a) == 0 && a != 0) continue;
            if (bt.get(b) == 0 && b != 0) continue;
            s12 = r1.add(s12, r1.mul(factor(b, n + 1), factor(a, n + 2)));
            s11 = r1.add(s11, r1.mul(factor(b, n + 1), factor(a, n + 1)));
        }
        bool ok = s12 == 0 && s11 == 0;
        out.push_back(make_bool_report(TheoremId::lemma_b2, "n=" + std::to_string(n), p, 1,
                                       ok, "paired_convolutions"));
    }
}

inline void sweep_conv_families(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    auto check = [&](const Composition& s, const char* family, bool check_s,
                     bool informational) {
        if (static_cast<std::int64_t>(p) <= s.weight() + 2) return;
        if (s.length() >= p) return;
        bool ok = ctx.eval(1).H(s, p - 1) == 0;
        if (check_s) ok = ok && ctx.eval(1).S(s, p - 1) == 0;
        out.push_back(make_bool_report(TheoremId::conv_families,
                                       comp_params(s) + ",family=" + family, p, 1, ok,
                                       family, informational));
    };
    using detail::build_from_blocks;
    using detail::ones;
    // (1^m, 2, 1^n), m+n even
    for (std::int64_t m = 0; m + 2 <= opt.max_weight; ++m)
        for (std::int64_t n = 0; m + n + 2 <= opt.max_weight; ++n)
            if ((m + n) % 2 == 0)
                check(build_from_blocks({ones(m), Composition({2}), ones(n)}), "ones_2_ones",
                      true, false);
    // stepped and balanced trains; n >= 2 even is the proved range for the
    // stepped shapes, odd n swept informationally
    for (std::int64_t n = 1; 3 * n + 4 <= opt.max_weight; ++n) {
        bool strict = n >= 2 && n % 2 == 0;
        Composition fwd = build_from_blocks({ones(n), Composition({2}), ones(n - 1),
                                             Composition({2}), ones(n + 1)});
        check(fwd, strict ? "stepped_forward" : "stepped_forward_loose", false, !strict);
        check(reverse(fwd), strict ? "stepped_reversed" : "stepped_reversed_loose", false,
              !strict);
    }
    for (std::int64_t n = 0; 3 * n + 4 <= opt.max_weight; ++n) {
        Composition bal = build_from_blocks({ones(n), Composition({2}), ones(n),
                                             Composition({2}), ones(n)});
        // H vanishes for every n; S only for n = 0 and odd n (even weight
        // defeats the palindrome argument for the dual, and S indeed does
        // not vanish at n = 2), so even n >= 2 is swept informationally.
        bool s_proved = (n == 0) || (n % 2 == 1);
        check(bal, "balanced", s_proved, false);
        if (!s_proved && static_cast<std::int64_t>(p) > bal.weight() + 2 &&
            bal.length() < p) {
            bool sok = ctx.eval(1).S(bal, p - 1) == 0;
            out.push_back(make_bool_report(TheoremId::conv_families,
                                           comp_params(bal) + ",family=balanced_S_loose",
                                           p, 1, sok, "balanced_S_loose", true));
        }
    }
}

inline void sweep_rs_repeat(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (std::int64_t r = 1; r <= opt.max_weight; ++r)
        for (std::int64_t s = 1; r + s <= opt.max_weight; ++s) {
            bool both_odd = (r % 2 == 1 && s % 2 == 1);
            bool both_even = (r % 2 == 0 && s % 2 == 0);
            if (!both_odd && !both_even) continue;
            std::int64_t nmax = both_odd ? opt.max_weight / (r + s) : 2;
            for (std::int64_t n = 1; n <= nmax && n * (r + s) <= opt.max_weight; ++n) {
                Composition comp = detail::repeat(Composition({r, s}), n);
                if (static_cast<std::int64_t>(p) <= comp.weight() + 2) continue;
                if (comp.length() >= p) continue;
                bool ok = ctx.eval(1).H(comp, p - 1) == 0 &&
                          ctx.eval(1).S(comp, p - 1) == 0;
                out.push_back(make_bool_report(
                    TheoremId::rs_repeat,
                    "r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",n=" + std::to_string(n),
                    p, 1, ok, both_odd ? "odd_pair" : "even_pair"));
            }
        }
}

inline void sweep_conjecture_cases(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    using detail::build_from_blocks;
    using detail::ones;
    using detail::repeat;
    using detail::twos;
    auto check = [&](const Composition& s, const char* family) {
        // conjectured families inherit the proved families' prime bound;
        // the literal p >= |s| already fails on theorem-covered members
        if (static_cast<std::int64_t>(p) <= s.weight() + 2) return;
        if (s.length() >= p) return;
        bool ok = ctx.eval(1).H(s, p - 1) == 0;
        out.push_back(make_bool_report(TheoremId::conjecture_cases,
                                       comp_params(s) + ",family=" + family, p, 1, ok,
                                       family, /*conjectural=*/true));
    };
    const std::int64_t W = std::max<std::int64_t>(opt.max_weight, 12);
    for (std::int64_t q = 0; q <= 3; ++q)
        for (std::int64_t m = 0; m <= 3; ++m)
            for (std::int64_t n = 0; n <= 3; ++n) {
                if (!(q % 2 == 1 || (m + n) % 2 == 0)) continue;
                Composition block = build_from_blocks(
                    {ones(m), Composition({2}), ones(n), Composition({2})});
                Composition s = concat(repeat(block, q),
                                       build_from_blocks({ones(m), Composition({2}), ones(n)}));
                if (s.weight() > W) continue;
                check(s, "block_train");
            }
    for (std::int64_t m = 0; m <= 3; ++m)
        for (std::int64_t n = 0; n <= 3; ++n) {
            Composition s = concat(twos(m), repeat(concat(Composition({3}), twos(m)), n));
            if (s.empty() || s.weight() > W) continue;
            check(s, "threes_in_twos");
        }
    for (std::int64_t m = 0; m <= 2; ++m)
        for (std::int64_t n = 0; n <= 2; n += 2) {
            Composition s = build_from_blocks(
                {Composition({1}), twos(m), repeat(concat(Composition({1}), twos(m + 1)), n),
                 Composition({1}), twos(m), Composition({1})});
            if (s.weight() > W) continue;
            check(s, "guarded_twos");
        }
}

} // namespace detail

/// The five duality/reversal/split relations for one composition at one
/// prime, each checked by direct evaluation:
///   S(s*) = -S(s) and S(rev s) = (-1)^|s| S(s) mod p,
///   (-1)^l(s) S(rev s) = signed split products of H mod p,
///   -S(s*) = S(s) + p * sum of H(t++(1)) over coarsenings t mod p^2,
///   H(rev s) = (-1)^|s| H(s) mod p (and likewise for S above).
/// Requires p > length(s).
inline std::vector<VerificationReport> hoffman_relations_check(const Composition& s,
                                                               PrimeContext& ctx) {
    const std::uint64_t p = ctx.p();
    if (s.empty() || s.length() >= p)
        throw std::invalid_argument("hoffman_relations_check: requires a nonempty s with p > length(s)");
    std::vector<VerificationReport> out;
    PrimePowerRing r1 = ctx.ring(1);
    PrimePowerRing r2 = ctx.ring(2);
    const std::string base = detail::comp_params(s);
    Composition d = dual(s);
    bool flip = s.weight() % 2 != 0;

    std::uint64_t S_s = ctx.eval(1).S(s, p - 1);
    std::uint64_t S_d = ctx.eval(1).S(d, p - 1);
    out.push_back(detail::make_bool_report(TheoremId::hoffman_relations,
                                           base + ",rel=dual_negation", p, 1,
                                           S_d == r1.neg(S_s), "dual_negation"));

    std::uint64_t S_r = ctx.eval(1).S(reverse(s), p - 1);
    out.push_back(detail::make_bool_report(TheoremId::hoffman_relations,
                                           base + ",rel=reversal", p, 1,
                                           S_r == (flip ? r1.neg(S_s) : S_s), "reversal"));

    // (-1)^{l(s)} S(rev s) = sum over splits of (-1)^{blocks} prod H(block)
    std::uint64_t rhs = 0;
    for (const auto& blocks : splits(s)) {
        std::uint64_t prod = 1 % p;
        for (const Composition& b : blocks) prod = r1.mul(prod, ctx.eval(1).H(b, p - 1));
        if (blocks.size() % 2 != 0) prod = r1.neg(prod);
        rhs = r1.add(rhs, prod);
    }
    std::uint64_t lhs = (s.length() % 2 != 0) ? r1.neg(S_r) : S_r;
    out.push_back(detail::make_bool_report(TheoremId::hoffman_relations,
                                           base + ",rel=split_product", p, 1, lhs == rhs,
                                           "split_product"));

    // mod p^2 refinement of the dual negation
    std::uint64_t S2_s = ctx.eval(2).S(s, p - 1);
    std::uint64_t S2_d = ctx.eval(2).S(d, p - 1);
    std::uint64_t corr = 0;
    for (const Composition& t : coarsenings(s))
        corr = r2.add(corr, ctx.eval(2).H(concat(t, Composition({1})), p - 1));
    std::uint64_t rhs2 = r2.add(S2_s, r2.mul(p % r2.modulus, corr));
    out.push_back(detail::make_bool_report(TheoremId::hoffman_relations,
                                           base + ",rel=dual_negation_modp2", p, 2,
                                           r2.neg(S2_d) == rhs2, "dual_negation_modp2"));

    std::uint64_t H_s = ctx.eval(1).H(s, p - 1);
    std::uint64_t H_r = ctx.eval(1).H(reverse(s), p - 1);
    out.push_back(detail::make_bool_report(TheoremId::hoffman_relations,
                                           base + ",rel=reversal_H", p, 1,
                                           H_r == (flip ? r1.neg(H_s) : H_s), "reversal_H"));
    return out;
}

namespace detail {

inline void sweep_hoffman(PrimeContext& ctx, const SweepOptions& opt, Sink& out) {
    const std::uint64_t p = ctx.p();
    for (const Composition& s : all_compositions(opt.max_weight)) {
        if (s.length() >= p) continue;
        auto reports = hoffman_relations_check(s, ctx);
        out.insert(out.end(), std::make_move_iterator(reports.begin()),
                   std::make_move_iterator(reports.end()));
    }
}

} // namespace detail

/// One registry row: a congruence family bound to its per-prime sweep
/// (hypothesis filter + predictor + oracle live inside the sweep). The
/// engine below only ever iterates this table; adding a congruence means
/// adding a row.
struct RegistryEntry {
    TheoremId id;
    const char* name;
    const char* description;
    bool conjectural; // counterexamples recorded, never gating
    void (*run)(PrimeContext&, const SweepOptions&, std::vector<VerificationReport>&);
};

inline const std::vector<RegistryEntry>& registry() {
    using namespace detail;
    static const std::vector<RegistryEntry> entries = {
        {TheoremId::wolstenholme, "wolstenholme",
         "p^2 divides St(p,2) and the full harmonic sum at p-1", false, sweep_wolstenholme},
        {TheoremId::bruck, "bruck",
         "nested ones vanish mod p^pari(l+1), via both Stirling and H routes", false,
         sweep_bruck},
        {TheoremId::zeta_partial, "zeta_partial",
         "single sums H(s;p-1) mod p, p^2 and p^3 by residue class of s", false, sweep_zeta},
        {TheoremId::valuation_profile, "valuation_profile",
         "predicted v_p(H(s;p-1)) intervals, with the irregular-pair bump", false,
         sweep_valuation_profile},
        {TheoremId::equiv_quadruple, "equiv_quadruple",
         "p | B_{p-2n-1} iff p^2 | H(2n) iff p^3 | H(2n-1) iff p^2 | H(n,n)", false,
         sweep_equiv_quadruple},
        {TheoremId::homogeneous, "homogeneous",
         "{s}^l vanishes mod p^pari(ls-1) away from divisibility obstructions", false,
         sweep_homogeneous},
        {TheoremId::homogeneous_zc, "homogeneous_zc",
         "refined {s}^l values mod p^2 / p^3 as Bernoulli multiples", false,
         sweep_homogeneous_zc},
        {TheoremId::irregular_boost, "irregular_boost",
         "irregular pairs lift homogeneous vanishing to p^2 / p^3", false,
         sweep_irregular_boost},
        {TheoremId::length2, "length2",
         "H(s1,s2;p-1) mod p by residue classes mod p-1", false, sweep_length2},
        {TheoremId::length2_modp2, "length2_modp2",
         "same-parity pairs refined to mod p^2 for both H and S", false,
         sweep_length2_modp2},
        {TheoremId::reversal, "reversal",
         "H and S pick up (-1)^|s| under reversal mod p", false, sweep_reversal},
        {TheoremId::palindrome, "palindrome",
         "odd-weight palindromes vanish mod p", false, sweep_palindrome},
        {TheoremId::length3_odd, "length3_odd",
         "odd-weight length-3 sums via the piecewise kernel", false, sweep_length3_odd},
        {TheoremId::length3_general, "length3_general",
         "length-3 sums via the two Bernoulli convolution sums", false,
         sweep_length3_general},
        {TheoremId::weight4_modp2, "weight4_modp2",
         "the six weight-4 sums as multiples of p B_{p-5} mod p^2", false, sweep_weight4},
        {TheoremId::prop_435, "prop_435",
         "H(4,3,5) and H(5,3,4) vanish mod p for p >= 17", false, sweep_prop_435},
        {TheoremId::rsr_modp2, "rsr_modp2",
         "the five resolved (r,s,r) shapes mod p^2", false, sweep_rsr},
        {TheoremId::prop_1313, "prop_1313",
         "H(1,3,1,3) mod p^2 and S(6,1,1,1) mod p as Bernoulli expressions", false,
         sweep_prop_1313},
        {TheoremId::bern_conv, "bern_conv",
         "Bernoulli convolution identities and the (1,1,1,n) relations", false,
         sweep_bern_conv},
        {TheoremId::lemma_b2, "lemma_b2",
         "the paired binomial-Bernoulli convolutions vanish for even n", false,
         sweep_lemma_b2},
        {TheoremId::conv_families, "conv_families",
         "ones-and-twos families whose H (and sometimes S) vanish mod p", false,
         sweep_conv_families},
        {TheoremId::rs_repeat, "rs_repeat",
         "{r,s}^n vanishing: odd pairs for all n, even pairs for n <= 2", false,
         sweep_rs_repeat},
        {TheoremId::conjecture_cases, "conjecture_cases",
         "conjectured vanishing families, monitored but never gating", true,
         sweep_conjecture_cases},
        {TheoremId::hoffman_relations, "hoffman_relations",
         "duality, reversal and split-product relations for S and H", false, sweep_hoffman},
    };
    return entries;
}

/// Runs the registered sweep for one theorem over one prime.
inline void run_theorem_for_prime(TheoremId id, PrimeContext& ctx,
                                  const SweepOptions& opt,
                                  std::vector<VerificationReport>& out) {
    for (const auto& entry : registry())
        if (entry.id == id) {
            entry.run(ctx, opt, out);
            return;
        }
    throw std::invalid_argument("no registry entry for theorem id");
}

/// Sweeps the given theorems over all odd primes in [pmin, pmax], in
/// parallel across primes, reports merged in (prime, theorem, parameter)
/// order regardless of parallelism.
inline std::vector<VerificationReport> verify(const std::vector<TheoremId>& ids,
                                              const SweepOptions& opt) {
    auto primes = primes_in(std::max<std::uint64_t>(opt.pmin, 3), opt.pmax);
    std::erase_if(primes, [](std::uint64_t p) { return p < 5; });
    std::vector<std::vector<VerificationReport>> per_prime(primes.size());
    unsigned workers = std::max(1u, opt.parallelism);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) break;
            PrimeContext ctx(primes[i]);
            for (TheoremId id : ids) run_theorem_for_prime(id, ctx, opt, per_prime[i]);
        }
    };
    if (workers <= 1 || primes.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    std::vector<VerificationReport> out;
    for (auto& chunk : per_prime)
        for (auto& r : chunk) out.push_back(std::move(r));
    return out;
}

inline std::vector<VerificationReport> verify(TheoremId id, const SweepOptions& opt) {
    return verify(std::vector<TheoremId>{id}, opt);
}

inline std::vector<TheoremId> all_theorem_ids() {
    std::vector<TheoremId> ids;
    for (const auto& [id, name] : theorem_id_names()) ids.push_back(id);
    return ids;
}

} // namespace mhs
