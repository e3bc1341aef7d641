// Command-line surface for the Chebyshev wavelet toolkit: filter
// construction, property verification, cascade synthesis, DWT, denoising,
// and deterministic test-signal generation. All floating-point output goes
// through a fixed 12-significant-digit format so identical invocations are
// byte-identical.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chebwav/cascade.hpp"
#include "chebwav/csv.hpp"
#include "chebwav/denoise.hpp"
#include "chebwav/errors.hpp"
#include "chebwav/filterbank.hpp"
#include "chebwav/filters.hpp"
#include "chebwav/report.hpp"
#include "chebwav/signals.hpp"
#include "chebwav/transition.hpp"
#include "chebwav/version.hpp"

namespace {

using namespace chebwav;

FilterTaps make_taps(int kind, int order, int upsample_k) {
    if (kind == 1) {
        if (upsample_k != 0)
            throw std::invalid_argument("--upsample applies to --kind 2 only");
        return make_type1(order);
    }
    if (kind == 2)
        return upsample_k > 0 ? make_type2_generalized(order, upsample_k)
                              : make_type2(order);
    throw std::invalid_argument("--kind must be 1 or 2");
}

std::vector<double> read_signal_file(const std::string& path) {
    if (path == "-") return read_signal_csv(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return read_signal_csv(in);
}

// Runs fn against the chosen output stream (stdout when path is empty).
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    fn(out);
}

struct BankOptions {
    int kind = 2;
    int order = 3;
    int upsample_k = 0;

    void attach(CLI::App* cmd, bool with_upsample = true) {
        cmd->add_option("--kind", kind, "filter family: 1 or 2")->required();
        cmd->add_option("--order", order, "filter order m (odd)")->required();
        if (with_upsample)
            cmd->add_option("--upsample", upsample_k,
                            "extra selectivity index k (kind 2): upsample the "
                            "taps by 2k+1");
    }
    FilterTaps taps() const { return make_taps(kind, order, upsample_k); }
};

void run_filter(const BankOptions& opt) {
    const FilterTaps taps = opt.taps();
    std::string fractions, decimals;
    for (std::size_t i = 0; i < taps.coefficients.size(); ++i) {
        if (i) {
            fractions += ' ';
            decimals += ' ';
        }
        fractions += taps.coefficients[i].str();
        decimals += format_number(taps.coefficients[i].to_double());
    }
    std::cout << fractions << "\n" << decimals << "\n";
}

void run_response(const BankOptions& opt, int grid,
                  const std::string& out_path) {
    const auto samples = frequency_response(opt.taps(), grid);
    with_output(out_path, [&](std::ostream& out) {
        out << "omega,magnitude,phase\n";
        for (const FrequencySample& s : samples)
            out << format_number(s.omega) << ',' << format_number(s.magnitude)
                << ',' << format_number(s.phase) << "\n";
    });
}

void run_check(int kind, int order) {
    std::cout << serialize_report(make_report(kind, order));
}

void run_cascade(const BankOptions& opt, int iterations,
                 const std::string& out_path) {
    const CascadeResult res = cascade_iterate(opt.taps(), iterations);
    with_output(out_path, [&](std::ostream& out) {
        out << "t,phi,psi\n";
        for (std::size_t n = 0; n < res.phi_samples.size(); ++n)
            out << format_number(static_cast<double>(n) * res.grid_step) << ','
                << format_number(res.phi_samples[n]) << ','
                << format_number(res.psi_samples[n]) << "\n";
        out << "# distances";
        for (double d : res.successive_l2_distances)
            out << ' ' << format_number(d);
        out << "\n";
    });
}

void run_sweep(int kind, int max_m, const std::string& format,
               const std::string& out_path) {
    if (kind != 1 && kind != 2)
        throw std::invalid_argument("--kind must be 1 or 2");
    if (max_m < 1 || max_m > 255)
        throw std::invalid_argument("--max-m must be in [1, 255]");
    const bool markdown = format == "markdown";
    if (!markdown && format != "csv")
        throw std::invalid_argument("--format must be csv or markdown");
    with_output(out_path, [&](std::ostream& out) {
        if (markdown) {
            out << "| m | PR | Orthogonal | Condition E |\n";
            out << "|---|----|------------|-------------|\n";
        } else {
            out << "m,pr,orthogonal,condition_e\n";
        }
        for (int m = 1; m <= max_m; m += 2) {
            const FilterTaps taps = make_taps(kind, m, 0);
            const BankPropertyReport bank = analyze_bank(taps);
            const bool cond_e =
                spectrum(transition_matrix(taps)).satisfies_condition_e;
            const bool pr = bank.pr_delay.has_value();
            if (markdown)
                out << "| " << m << " | " << (pr ? "yes" : "no") << " | "
                    << (bank.is_orthogonal ? "yes" : "no") << " | "
                    << (cond_e ? "yes" : "no") << " |\n";
            else
                out << m << ',' << (pr ? "true" : "false") << ','
                    << (bank.is_orthogonal ? "true" : "false") << ','
                    << (cond_e ? "true" : "false") << "\n";
        }
    });
}

void run_dwt(const BankOptions& opt, const std::string& in_path, int levels,
             const std::string& mode_text, const std::string& out_path) {
    BoundaryMode mode;
    if (mode_text == "periodic")
        mode = BoundaryMode::Periodic;
    else if (mode_text == "zeropad")
        mode = BoundaryMode::ZeroPad;
    else
        throw std::invalid_argument("--mode must be periodic or zeropad");
    Signal signal{read_signal_file(in_path), ""};
    const FilterBank bank = build_bank(opt.taps());
    TreeDocument doc;
    doc.tree = analyze(signal, bank, levels, mode);
    doc.kind = opt.kind;
    doc.order = opt.order;
    doc.upsample_k = opt.upsample_k;
    with_output(out_path, [&](std::ostream& out) { write_tree_csv(out, doc); });
}

void run_idwt(const std::string& in_path, const std::string& out_path) {
    TreeDocument doc;
    if (in_path == "-") {
        doc = read_tree_csv(std::cin);
    } else {
        std::ifstream in(in_path);
        if (!in) throw std::invalid_argument("cannot open input file: " + in_path);
        doc = read_tree_csv(in);
    }
    const FilterBank bank =
        build_bank(make_taps(doc.kind, doc.order, doc.upsample_k));
    const Signal out_signal = synthesize(doc.tree, bank);
    with_output(out_path, [&](std::ostream& out) {
        write_signal_csv(out, out_signal.samples);
    });
}

void run_denoise(const BankOptions& opt, const std::string& in_path,
                 int levels, const std::string& shrink_text,
                 const std::string& threshold_text,
                 const std::string& reference_path,
                 const std::string& out_path) {
    DenoiseConfig config;
    config.levels = levels;
    if (shrink_text == "soft")
        config.mode = ShrinkMode::Soft;
    else if (shrink_text == "hard")
        config.mode = ShrinkMode::Hard;
    else
        throw std::invalid_argument("--shrink must be soft or hard");
    if (threshold_text == "universal") {
        config.rule = ThresholdRule::Universal;
    } else {
        config.rule = ThresholdRule::Manual;
        char* end = nullptr;
        config.manual_threshold = std::strtod(threshold_text.c_str(), &end);
        if (end == threshold_text.c_str() || *end != '\0' ||
            config.manual_threshold < 0.0)
            throw std::invalid_argument(
                "--threshold must be \"universal\" or a nonnegative number");
    }
    if (opt.kind == 1) {
        config.bank_kind = FilterKind::TypeI;
    } else if (opt.kind == 2) {
        config.bank_kind = opt.upsample_k > 0 ? FilterKind::TypeIIGeneralized
                                              : FilterKind::TypeII;
    } else {
        throw std::invalid_argument("--kind must be 1 or 2");
    }
    config.bank_order = opt.order;
    config.bank_upsample_k = opt.upsample_k;

    Signal noisy{read_signal_file(in_path), ""};
    const Signal cleaned = denoise(noisy, config);
    if (!reference_path.empty()) {
        Signal reference{read_signal_file(reference_path), ""};
        const double in_snr = snr_db(reference, noisy);
        const double out_snr = snr_db(reference, cleaned);
        std::cerr << "# snr_in " << format_number(in_snr) << " dB, snr_out "
                  << format_number(out_snr) << " dB, gain "
                  << format_number(out_snr - in_snr) << " dB\n";
    }
    with_output(out_path, [&](std::ostream& out) {
        write_signal_csv(out, cleaned.samples);
    });
}

void run_gen(const std::string& what, int length, std::optional<double> snr,
             std::optional<std::uint64_t> seed, const std::string& clean_path,
             const std::string& out_path) {
    Signal signal;
    if (what == "bumps")
        signal = make_bumps(length);
    else if (what == "freqstep")
        signal = make_freqstep(length);
    else if (what == "noise")
        signal = Signal{{}, "noise"};
    else
        throw std::invalid_argument("--signal must be bumps, freqstep, or noise");

    const bool needs_seed = what == "noise" || snr.has_value();
    if (needs_seed && !seed)
        throw std::invalid_argument(
            "--seed is required whenever noise is generated");

    if (what == "noise") {
        signal.samples = GaussianSource(*seed).sample(length);
    } else if (snr) {
        if (!clean_path.empty())
            with_output(clean_path, [&](std::ostream& out) {
                write_signal_csv(out, signal.samples);
            });
        signal = add_noise_snr(signal, GaussianSource(*seed).sample(length), *snr);
    }
    with_output(out_path, [&](std::ostream& out) {
        write_signal_csv(out, signal.samples);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chebyshev wavelet filter bank toolkit"};
    app.set_version_flag("--version", chebwav::kVersion);
    app.require_subcommand(1);

    // filter
    auto* filter_cmd = app.add_subcommand("filter", "print filter taps");
    BankOptions filter_opt;
    filter_opt.attach(filter_cmd);
    filter_cmd->callback([&] { run_filter(filter_opt); });

    // response
    auto* resp_cmd =
        app.add_subcommand("response", "frequency response CSV over [0, pi]");
    BankOptions resp_opt;
    resp_opt.attach(resp_cmd);
    int resp_grid = 512;
    std::string resp_out;
    resp_cmd->add_option("--grid", resp_grid, "number of grid points (>= 2)");
    resp_cmd->add_option("--output", resp_out, "output file (default stdout)");
    resp_cmd->callback([&] { run_response(resp_opt, resp_grid, resp_out); });

    // check
    auto* check_cmd = app.add_subcommand(
        "check", "JSON property report: bank, spectrum, Markov verdicts");
    int check_kind = 0, check_order = 0;
    check_cmd->add_option("--kind", check_kind, "filter family: 1 or 2")
        ->required();
    check_cmd->add_option("--order", check_order, "filter order m (odd)")
        ->required();
    check_cmd->callback([&] { run_check(check_kind, check_order); });

    // cascade
    auto* casc_cmd = app.add_subcommand(
        "cascade", "scaling/wavelet function samples via the cascade iteration");
    BankOptions casc_opt;
    casc_opt.attach(casc_cmd);
    int casc_iters = 8;
    std::string casc_out;
    casc_cmd->add_option("--iterations", casc_iters, "iteration count (1..20)");
    casc_cmd->add_option("--output", casc_out, "output file (default stdout)");
    casc_cmd->callback([&] { run_cascade(casc_opt, casc_iters, casc_out); });

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "per-order verdict table for one filter family");
    int sweep_kind = 0, sweep_max = 31;
    std::string sweep_format = "csv", sweep_out;
    sweep_cmd->add_option("--kind", sweep_kind, "filter family: 1 or 2")
        ->required();
    sweep_cmd->add_option("--max-m", sweep_max, "largest order (odd, <= 255)");
    sweep_cmd->add_option("--format", sweep_format, "csv (default) or markdown");
    sweep_cmd->add_option("--output", sweep_out, "output file (default stdout)");
    sweep_cmd->callback(
        [&] { run_sweep(sweep_kind, sweep_max, sweep_format, sweep_out); });

    // dwt
    auto* dwt_cmd =
        app.add_subcommand("dwt", "multi-level wavelet analysis of a CSV signal");
    BankOptions dwt_opt;
    dwt_opt.attach(dwt_cmd);
    std::string dwt_in, dwt_mode = "periodic", dwt_out;
    int dwt_levels = 1;
    dwt_cmd->add_option("--input", dwt_in, "signal CSV (one sample per line)")
        ->required();
    dwt_cmd->add_option("--levels", dwt_levels, "decomposition depth")->required();
    dwt_cmd->add_option("--mode", dwt_mode, "periodic (default) or zeropad");
    dwt_cmd->add_option("--output", dwt_out, "output file (default stdout)");
    dwt_cmd->callback(
        [&] { run_dwt(dwt_opt, dwt_in, dwt_levels, dwt_mode, dwt_out); });

    // idwt
    auto* idwt_cmd = app.add_subcommand(
        "idwt", "invert a decomposition tree CSV back to a signal");
    std::string idwt_in, idwt_out;
    idwt_cmd->add_option("--input", idwt_in, "tree CSV from the dwt command")
        ->required();
    idwt_cmd->add_option("--output", idwt_out, "output file (default stdout)");
    idwt_cmd->callback([&] { run_idwt(idwt_in, idwt_out); });

    // denoise
    auto* den_cmd = app.add_subcommand(
        "denoise", "wavelet-shrinkage denoising of a CSV signal");
    BankOptions den_opt;
    den_opt.attach(den_cmd);
    std::string den_in, den_shrink = "soft", den_threshold = "universal";
    std::string den_reference, den_out;
    int den_levels = 2;
    den_cmd->add_option("--input", den_in, "noisy signal CSV")->required();
    den_cmd->add_option("--levels", den_levels, "decomposition depth");
    den_cmd->add_option("--shrink", den_shrink, "soft (default) or hard");
    den_cmd->add_option("--threshold", den_threshold,
                        "\"universal\" (default) or a fixed numeric threshold");
    den_cmd->add_option("--reference", den_reference,
                        "clean reference CSV; reports the SNR gain on stderr");
    den_cmd->add_option("--output", den_out, "output file (default stdout)");
    den_cmd->callback([&] {
        run_denoise(den_opt, den_in, den_levels, den_shrink, den_threshold,
                    den_reference, den_out);
    });

    // gen
    auto* gen_cmd = app.add_subcommand(
        "gen", "deterministic synthetic test signals (seeded noise)");
    std::string gen_signal, gen_clean, gen_out;
    int gen_length = 1024;
    std::optional<double> gen_snr;
    std::optional<std::uint64_t> gen_seed;
    gen_cmd->add_option("--signal", gen_signal, "bumps, freqstep, or noise")
        ->required();
    gen_cmd->add_option("--length", gen_length, "sample count");
    gen_cmd->add_option("--snr", gen_snr,
                        "add Gaussian noise at this SNR in dB (needs --seed)");
    gen_cmd->add_option("--seed", gen_seed, "RNG seed for noise generation");
    gen_cmd->add_option("--clean-out", gen_clean,
                        "also write the clean signal to this file");
    gen_cmd->add_option("--output", gen_out, "output file (default stdout)");
    gen_cmd->callback([&] {
        run_gen(gen_signal, gen_length, gen_snr, gen_seed, gen_clean, gen_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const chebwav::ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const chebwav::CsvError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
