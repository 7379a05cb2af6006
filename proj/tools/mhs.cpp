// Command-line surface for the multiple-harmonic-sum laboratory:
//   eval     exact or modular evaluation of H(s;n) / S(s;n)
//   predict  closed-form residue predictions for single instances
//   verify   predictor-vs-evaluator sweeps, JSON-lines reports
//   scan     irregular-pair discovery with a resumable cache
//   table    residue-class distribution tables from a pair cache
//
// Exit codes: 0 success, 1 usage or hypothesis error, 2 verification
// failure, 3 internal error.

#include <CLI11.hpp>

#include "mhs/eval.hpp"
#include "mhs/irregular.hpp"
#include "mhs/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

namespace {

mhs::PrimePowerRing parse_ring(const std::string& text) {
    auto caret = text.find('^');
    std::uint64_t p = std::stoull(text.substr(0, caret));
    unsigned k = 1;
    if (caret != std::string::npos)
        k = static_cast<unsigned>(std::stoul(text.substr(caret + 1)));
    return mhs::PrimePowerRing::make(p, k);
}

std::string default_cache_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* dir = std::getenv("MHS_CACHE_DIR");
    std::string base = dir ? dir : ".";
    return base + "/irregular_pairs.csv";
}

std::vector<std::uint64_t> parse_milestones(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty()) out.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("--milestones", "no milestones given");
    return out;
}

int run_eval(const std::string& comp_text, std::uint64_t n, const std::string& kind,
             const std::string& mod_text, std::uint64_t work_bound) {
    mhs::EvalRequest req;
    req.kind = kind == "S" ? mhs::EvalRequest::Kind::S : mhs::EvalRequest::Kind::H;
    req.s = mhs::parse_composition(comp_text);
    req.n = n;
    req.modular = !mod_text.empty();
    if (req.modular) req.ring = parse_ring(mod_text);

    bool want_h = req.kind == mhs::EvalRequest::Kind::H;
    if (!req.modular) {
        mhs::Rational v = want_h ? mhs::H_exact(req.s, req.n, work_bound)
                                 : mhs::S_exact(req.s, req.n, work_bound);
        std::cout << v.to_string() << "\n";
        return 0;
    }
    mhs::PrimePowerResidue r =
        want_h ? mhs::H_mod(req.s, req.n, req.ring) : mhs::S_mod(req.s, req.n, req.ring);
    std::cout << r.value << "\n";
    return 0;
}

int run_predict(const std::string& theorem, const std::string& comp_text,
                std::uint64_t p, std::uint64_t s, std::uint64_t l, std::uint64_t s2,
                const std::string& which) {
    using namespace mhs;
    PrimeContext ctx(p);
    Prediction pred;
    TheoremId id = theorem_id_from_string(theorem);
    switch (id) {
        case TheoremId::zeta_partial: pred = predict_zeta(s, ctx); break;
        case TheoremId::homogeneous_zc:
            pred = predict_homogeneous(s, l, which == "S" ? SumKind::S : SumKind::H, ctx);
            break;
        case TheoremId::homogeneous: pred = predict_homogeneous_parity(s, l, ctx); break;
        case TheoremId::length2: pred = predict_length2(s, s2, ctx); break;
        case TheoremId::length2_modp2:
            pred = predict_length2_modp2(s, s2, which == "S" ? SumKind::S : SumKind::H, ctx);
            break;
        case TheoremId::length3_odd: {
            Composition c = parse_composition(comp_text);
            if (c.length() != 3) throw std::invalid_argument("--comp must have length 3");
            pred = predict_length3_odd(c.parts()[0], c.parts()[1], c.parts()[2], ctx);
            break;
        }
        case TheoremId::length3_general: {
            Composition c = parse_composition(comp_text);
            if (c.length() != 3) throw std::invalid_argument("--comp must have length 3");
            pred = predict_length3_general(c.parts()[0], c.parts()[1], c.parts()[2], ctx);
            break;
        }
        case TheoremId::weight4_modp2: {
            const std::map<std::string, Weight4Case> cases = {
                {"H121", Weight4Case::H121}, {"H211", Weight4Case::H211},
                {"H112", Weight4Case::H112}, {"S121", Weight4Case::S121},
                {"S211", Weight4Case::S211}, {"S112", Weight4Case::S112}};
            auto it = cases.find(which);
            if (it == cases.end())
                throw std::invalid_argument("--case must be one of H121 H211 H112 S121 S211 S112");
            pred = predict_weight4_modp2(it->second, ctx);
            break;
        }
        case TheoremId::rsr_modp2: {
            Composition c = parse_composition(comp_text);
            if (c.length() != 3 || c.parts()[0] != c.parts()[2])
                throw std::invalid_argument("--comp must look like r,s,r");
            pred = predict_rsr_modp2(c.parts()[0], c.parts()[1], ctx);
            break;
        }
        case TheoremId::conv_families:
        case TheoremId::rs_repeat:
        case TheoremId::conjecture_cases:
            pred = family_predict(parse_composition(comp_text), ctx);
            break;
        default:
            throw std::invalid_argument("theorem '" + theorem +
                                        "' has no single-instance predictor; use verify");
    }
    std::cout << "{\"theorem\": \"" << theorem << "\", \"p\": " << p
              << ", \"k\": " << (pred.applicable ? pred.ring.k : 0) << ", \"residue\": ";
    if (pred.applicable && pred.residue)
        std::cout << *pred.residue;
    else
        std::cout << "null";
    std::cout << ", \"applicable\": " << (pred.applicable ? "true" : "false")
              << ", \"conjectural\": " << (pred.conjectural ? "true" : "false")
              << ", \"branch\": \"" << pred.branch << "\"}\n";
    return 0;
}

int run_verify(const std::string& theorem, mhs::SweepOptions opt,
               std::optional<unsigned> k_filter, const std::string& out_path) {
    using namespace mhs;
    std::vector<TheoremId> ids;
    if (theorem == "all")
        ids = all_theorem_ids();
    else
        ids.push_back(theorem_id_from_string(theorem));
    std::vector<VerificationReport> reports = verify(ids, opt);
    if (k_filter)
        std::erase_if(reports, [&](const VerificationReport& r) { return r.k != *k_filter; });

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        os = &file;
    }
    VerifySummary summary;
    for (const auto& r : reports) {
        *os << r.to_json_line() << "\n";
        summary.add(r);
    }
    *os << summary.to_json_line() << "\n";
    if (summary.conjecture_fail > 0)
        std::cerr << "note: " << summary.conjecture_fail
                  << " conjecture-flagged instance(s) failed; recorded, not gating\n";
    return summary.gating_failure() ? 2 : 0;
}

int run_scan(std::uint64_t pmax, const std::string& cache_flag, unsigned parallelism) {
    using namespace mhs;
    std::string path = default_cache_path(cache_flag);
    PairCache cache;
    if (std::filesystem::exists(path)) cache = load_cache(path);
    std::uint64_t done = 0;
    cache = scan(pmax, std::move(cache), parallelism,
                 [&](std::uint64_t p) {
                     if (++done % 100 == 0)
                         std::cerr << "scan: " << done << " primes done (at " << p << ")\n";
                 },
                 [&](const PairCache& snap) { save_cache(snap, path); });
    save_cache(cache, path);
    std::cout << "pairs: " << cache.pairs.size() << ", pmax: " << cache.p_max
              << ", cache: " << path << "\n";
    return 0;
}

int run_table(const std::string& cache_flag, std::uint64_t modulus,
              const std::string& milestones_text, std::optional<std::size_t> index,
              const std::string& format, const std::string& out_path) {
    using namespace mhs;
    std::string path = default_cache_path(cache_flag);
    if (!std::filesystem::exists(path))
        throw std::runtime_error("cache file not found: " + path + " (run scan first)");
    PairCache cache = load_cache(path);
    DistributionTable table = tabulate(cache, modulus, parse_milestones(milestones_text), index);
    std::string rendered = format == "text" ? table.to_text() : table.to_csv();
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream file(out_path, std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        file << rendered;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple harmonic sum laboratory"};
    app.require_subcommand(1);

    unsigned parallelism = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--parallelism", parallelism, "worker threads for sweeps and scans");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate H(s;n) or S(s;n)");
    std::string comp_text, kind = "H", mod_text;
    std::uint64_t n = 0, work_bound = mhs::kDefaultWorkBound;
    eval_cmd->add_option("--comp", comp_text, "composition, e.g. 1,2,1 or {2,4}^3")->required();
    eval_cmd->add_option("--n", n, "upper summation bound")->required();
    eval_cmd->add_option("--kind", kind, "H or S")->check(CLI::IsMember({"H", "S"}));
    eval_cmd->add_option("--mod", mod_text, "modulus p^k, e.g. 37^3 (omit for exact)");
    eval_cmd->add_option("--work-bound", work_bound, "exact-mode work bound, length*n")
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{1} << 62));

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "closed-form residue prediction");
    std::string pr_theorem, pr_comp, pr_which = "H";
    std::uint64_t pr_p = 0, pr_s = 1, pr_l = 1, pr_s2 = 1;
    predict_cmd->add_option("--theorem", pr_theorem, "theorem id")->required();
    predict_cmd->add_option("--p", pr_p, "prime")->required();
    predict_cmd->add_option("--comp", pr_comp, "composition parameter");
    predict_cmd->add_option("--s", pr_s, "first integer parameter");
    predict_cmd->add_option("--l", pr_l, "repetition count");
    predict_cmd->add_option("--s2", pr_s2, "second integer parameter");
    predict_cmd->add_option("--case", pr_which, "sum selector (H/S or H121..S112)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "sweep predictors against the evaluator");
    std::string vf_theorem, vf_out;
    mhs::SweepOptions opt;
    std::optional<unsigned> k_filter;
    unsigned k_value = 0;
    verify_cmd->add_option("--theorem", vf_theorem, "theorem id or 'all'")->required();
    verify_cmd->add_option("--pmin", opt.pmin, "smallest prime (default 5)");
    verify_cmd->add_option("--pmax", opt.pmax, "largest prime (default 97)");
    verify_cmd->add_option("--max-weight", opt.max_weight, "parameter weight bound (default 7)");
    auto* kopt = verify_cmd->add_option("--k", k_value, "only report instances at modulus exponent k");
    verify_cmd->add_option("--out", vf_out, "write JSON-lines report here instead of stdout");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "extend the irregular-pair cache");
    std::string sc_cache;
    std::uint64_t sc_pmax = 0;
    scan_cmd->add_option("--pmax", sc_pmax, "scan primes up to this bound")->required();
    scan_cmd->add_option("--cache", sc_cache, "cache file (default $MHS_CACHE_DIR/irregular_pairs.csv)");

    // table
    auto* table_cmd = app.add_subcommand("table", "distribution of p-t over the first m pairs");
    std::string tb_cache, tb_milestones, tb_format = "csv", tb_out;
    std::uint64_t tb_modulus = 3;
    std::optional<std::size_t> tb_index;
    std::size_t tb_index_value = 0;
    table_cmd->add_option("--cache", tb_cache, "cache file (default $MHS_CACHE_DIR/irregular_pairs.csv)");
    table_cmd->add_option("--modulus", tb_modulus, "residue modulus M (default 3)");
    table_cmd->add_option("--milestones", tb_milestones, "comma-separated pair counts")->required();
    auto* iopt = table_cmd->add_option("--index", tb_index_value, "restrict to primes with this irregular index");
    table_cmd->add_option("--format", tb_format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
    table_cmd->add_option("--out", tb_out, "write the table here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval_cmd) return run_eval(comp_text, n, kind, mod_text, work_bound);
        if (*predict_cmd)
            return run_predict(pr_theorem, pr_comp, pr_p, pr_s, pr_l, pr_s2, pr_which);
        if (*verify_cmd) {
            opt.parallelism = parallelism;
            if (*kopt) k_filter = k_value;
            return run_verify(vf_theorem, opt, k_filter, vf_out);
        }
        if (*scan_cmd) return run_scan(sc_pmax, sc_cache, parallelism);
        if (*table_cmd) {
            if (*iopt) tb_index = tb_index_value;
            return run_table(tb_cache, tb_modulus, tb_milestones, tb_index, tb_format, tb_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
