#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebpi/errors.hpp"
#include "chebpi/pi_engines.hpp"
#include "chebpi/sinc_approx.hpp"

namespace chebpi {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start, bool no_timing) {
    if (no_timing) return 0.0;
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Field {
    std::string text;
    nlohmann::ordered_json value;
};

Field fstr(const std::string& s) { return {s, nlohmann::ordered_json(s)}; }

Field fnum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return {buf, nlohmann::ordered_json(v)};
}

Field fint(long long v) { return {std::to_string(v), nlohmann::ordered_json(v)}; }

Field fbool(bool v) { return {v ? "1" : "0", nlohmann::ordered_json(v)}; }

Field fwall(double ms) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return {buf, nlohmann::ordered_json(ms)};
}

// Rows go out as CSV (header first) or are collected and dumped as JSON:
// a single object for one-record commands, an array otherwise.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, bool json, bool single_object,
                 std::vector<std::string> columns)
        : out_(out), json_(json), single_(single_object), columns_(std::move(columns)) {
        if (!json_) {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                out_ << (i ? "," : "") << columns_[i];
            out_ << "\n";
        }
    }

    void row(const std::vector<Field>& fields) {
        if (json_) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < fields.size(); ++i)
                obj[columns_[i]] = fields[i].value;
            rows_.push_back(std::move(obj));
        } else {
            for (std::size_t i = 0; i < fields.size(); ++i)
                out_ << (i ? "," : "") << fields[i].text;
            out_ << "\n";
        }
    }

    void finish() {
        if (!json_) return;
        if (single_ && rows_.size() == 1) out_ << rows_.front().dump(2) << "\n";
        else out_ << nlohmann::ordered_json(rows_).dump(2) << "\n";
    }

private:
    std::ostream& out_;
    bool json_;
    bool single_;
    std::vector<std::string> columns_;
    std::vector<nlohmann::ordered_json> rows_;
};

struct CommonFlags {
    std::string format = "csv";
    std::string out_path;
    bool no_timing = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", flags.out_path, "Write output to a file instead of stdout");
    cmd->add_flag("--no-timing", flags.no_timing, "Report wall_ms as 0 (for golden output)");
}

// "3." on its own line, then the fractional digits in space-separated
// blocks of ten, fifty per line.
void print_digit_block(std::ostream& out, const std::string& dec, bool raw) {
    if (raw) {
        out << dec << "\n";
        return;
    }
    const std::size_t dot = dec.find('.');
    if (dot == std::string::npos) {
        out << dec << "\n";
        return;
    }
    out << dec.substr(0, dot + 1) << "\n";
    const std::string frac = dec.substr(dot + 1);
    for (std::size_t i = 0; i < frac.size(); i += 10) {
        out << frac.substr(i, 10);
        const bool end_of_line = ((i / 10) % 5 == 4) || i + 10 >= frac.size();
        out << (end_of_line ? "\n" : " ");
    }
}

struct PiArgs {
    std::string method;
    int terms = 0;
    int digits = 0;
    int frac_bits = 0;
    bool raw = false;
    bool terms_set = false;
    bool digits_set = false;
    bool frac_bits_set = false;
    CommonFlags common;
};

int run_pi(const PiArgs& args, std::ostream& out, std::ostream& err) {
    PiApproxReport rep;
    int print_digits = 0;
    const auto t0 = Clock::now();
    if (args.method == "viete") {
        if (args.terms_set == args.digits_set) {
            err << "error: viete needs exactly one of --terms or --digits\n";
            return 2;
        }
        if (args.terms_set) {
            const int fb = args.frac_bits_set ? args.frac_bits : 256;
            rep = pi_viete_product(args.terms, fb);
            print_digits = std::min(50, BigFixed::max_decimal_digits(fb));
        } else {
            const VieteSizing sizing = viete_sizing(args.digits);
            const int fb = args.frac_bits_set ? args.frac_bits : sizing.frac_bits;
            rep = pi_viete_product(sizing.terms, fb);
            print_digits = args.digits;
        }
    } else if (args.method == "cheb-sum" || args.method == "cheb-u") {
        if (!args.terms_set || args.digits_set) {
            err << "error: " << args.method << " needs --terms (and no --digits)\n";
            return 2;
        }
        const int fb = args.frac_bits_set ? args.frac_bits : 256;
        rep = args.method == "cheb-sum" ? pi_cheb_t_sum(args.terms, fb)
                                        : pi_cheb_u(args.terms, fb);
        print_digits = std::min(50, BigFixed::max_decimal_digits(fb));
    } else { // machin
        if (!args.digits_set || args.terms_set || args.frac_bits_set) {
            err << "error: machin needs --digits (and no --terms / --frac-bits)\n";
            return 2;
        }
        rep = pi_machin_reference(args.digits);
        print_digits = args.digits;
    }
    const double wall = elapsed_ms(t0, args.common.no_timing);

    print_digit_block(out, rep.estimate.to_decimal(print_digits), args.raw);
    RecordWriter writer(out, args.common.format == "json", true,
                        {"method", "M", "frac_bits", "abs_error", "rel_error",
                         "matched_digits", "wall_ms"});
    writer.row({fstr(pi_method_name(rep.method)), fint(rep.terms), fint(rep.frac_bits),
                fstr(rep.abs_error.to_scientific(17)), fstr(rep.rel_error.to_scientific(17)),
                fint(rep.matched_decimal_digits), fwall(wall)});
    writer.finish();
    return 0;
}

struct SincErrorArgs {
    std::string method;
    long parameter = 0;
    std::vector<double> range;
    long grid = 0;
    CommonFlags common;
};

int run_sinc_error(const SincErrorArgs& args, std::ostream& out, std::ostream&) {
    SincMethod method = SincMethod::CosProduct;
    if (args.method == "product") method = SincMethod::CosProduct;
    else if (args.method == "cos-sum") method = SincMethod::CosSum;
    else if (args.method == "t-sum") method = SincMethod::TSum;
    else method = SincMethod::USingle;

    const auto t0 = Clock::now();
    const SincErrorReport rep =
        measure_sup_error(method, args.parameter, args.range[0], args.range[1], args.grid);
    const double wall = elapsed_ms(t0, args.common.no_timing);

    RecordWriter writer(out, args.common.format == "json", true,
                        {"method", "parameter", "t_lo", "t_hi", "grid_points",
                         "sup_error", "argmax_t", "wall_ms"});
    writer.row({fstr(sinc_method_name(rep.method)), fint(rep.parameter), fnum(rep.t_lo),
                fnum(rep.t_hi), fint(rep.grid_points), fnum(rep.sup_error),
                fnum(rep.argmax_t), fwall(wall)});
    writer.finish();
    return 0;
}

struct IdentityArgs {
    int max_m = 10;
    double tolerance = 1e-12;
    CommonFlags common;
};

// The five identity families the engines must satisfy, one row per family
// per M. The grid families compare double evaluations over 1001 points of
// [-20, 20]; the pi families compare the three bigfix engines at 256
// fractional bits, where any disagreement beyond rounding is a bug.
int run_identity_check(const IdentityArgs& args, std::ostream& out, std::ostream&) {
    if (args.max_m > 24)
        throw cap_exceeded("identity-check: --max-m is capped at 24");
    if (args.max_m < 1)
        throw std::invalid_argument("identity-check: --max-m must be >= 1");

    constexpr int kGridPoints = 1001;
    constexpr double kLo = -20.0, kHi = 20.0;
    const auto grid_t = [&](int i) {
        return kLo + (kHi - kLo) * static_cast<double>(i) / (kGridPoints - 1);
    };

    RecordWriter writer(out, args.common.format == "json", false,
                        {"identity", "M", "max_deviation", "tolerance", "pass", "wall_ms"});
    bool all_pass = true;
    const auto emit = [&](const std::string& name, int m, double dev, double wall) {
        const bool pass = dev <= args.tolerance;
        all_pass = all_pass && pass;
        writer.row({fstr(name), fint(m), fnum(dev), fnum(args.tolerance), fbool(pass),
                    fwall(wall)});
    };

    for (int m = 1; m <= args.max_m; ++m) {
        const long l = 1L << (m - 1);
        {
            const auto t0 = Clock::now();
            double dev = 0.0;
            for (int i = 0; i < kGridPoints; ++i) {
                const double t = grid_t(i);
                dev = std::max(dev, std::fabs(sinc_cos_product(t, m) - sinc_cos_sum(t, m)));
            }
            emit("product-vs-cos-sum", m, dev, elapsed_ms(t0, args.common.no_timing));
        }
        {
            const auto t0 = Clock::now();
            double dev = 0.0;
            for (int i = 0; i < kGridPoints; ++i) {
                const double t = grid_t(i);
                dev = std::max(dev, std::fabs(sinc_cos_sum(t, m) - sinc_t_sum(t, l)));
            }
            emit("cos-sum-vs-t-sum", m, dev, elapsed_ms(t0, args.common.no_timing));
        }
        {
            const auto t0 = Clock::now();
            double dev = 0.0;
            for (int i = 0; i < kGridPoints; ++i) {
                const double t = grid_t(i);
                dev = std::max(dev, std::fabs(sinc_t_sum(t, l) - sinc_u(t, 2 * l)));
            }
            emit("t-sum-vs-u", m, dev, elapsed_ms(t0, args.common.no_timing));
        }
        {
            const auto t0 = Clock::now();
            const BigFixed viete = pi_viete_product(m, 256).estimate;
            const BigFixed tsum = pi_cheb_t_sum(m, 256).estimate;
            const BigFixed usingle = pi_cheb_u(m, 256).estimate;
            const double wall = elapsed_ms(t0, args.common.no_timing);
            emit("pi-product-vs-t-sum", m, (viete - tsum).abs().to_double(), wall);
            emit("pi-t-sum-vs-u", m, (tsum - usingle).abs().to_double(), wall);
        }
    }
    writer.finish();
    return all_pass ? 0 : 1;
}

struct BenchArgs {
    std::string method;
    std::vector<int> m_range;
    int frac_bits = 256;
    CommonFlags common;
};

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    const int m_lo = args.m_range[0], m_hi = args.m_range[1];
    if (m_lo < 1 || m_hi < m_lo) {
        err << "error: bad --m-range\n";
        return 2;
    }
    PiMethod method = PiMethod::VieteProduct;
    if (args.method == "cheb-sum") method = PiMethod::ChebTSum;
    else if (args.method == "cheb-u") method = PiMethod::ChebUSingle;

    RecordWriter writer(out, args.common.format == "json", false,
                        {"method", "M", "frac_bits", "rel_error", "matched_digits",
                         "wall_ms"});
    for (int m = m_lo; m <= m_hi; ++m) {
        const auto t0 = Clock::now();
        const PiApproxReport rep = convergence_sweep(method, m, m, args.frac_bits).front();
        const double wall = elapsed_ms(t0, args.common.no_timing);
        writer.row({fstr(pi_method_name(rep.method)), fint(rep.terms), fint(rep.frac_bits),
                    fstr(rep.rel_error.to_scientific(17)), fint(rep.matched_decimal_digits),
                    fwall(wall)});
    }
    writer.finish();
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Chebyshev / nested-radical pi engines and sinc approximations"};
    app.require_subcommand(1);

    PiArgs pi_args;
    CLI::App* pi_cmd = app.add_subcommand("pi", "Compute pi and print its digits");
    pi_cmd->add_option("--method", pi_args.method, "viete | cheb-sum | cheb-u | machin")
        ->required()
        ->check(CLI::IsMember({"viete", "cheb-sum", "cheb-u", "machin"}));
    auto* terms_opt = pi_cmd->add_option("--terms", pi_args.terms, "Term count M");
    auto* digits_opt = pi_cmd->add_option("--digits", pi_args.digits, "Decimal digits to produce");
    auto* fb_opt = pi_cmd->add_option("--frac-bits", pi_args.frac_bits, "Working precision override");
    pi_cmd->add_flag("--raw", pi_args.raw, "Print the digit string unblocked");
    add_common_flags(pi_cmd, pi_args.common);

    SincErrorArgs sinc_args;
    CLI::App* sinc_cmd = app.add_subcommand("sinc-error", "Sup-norm error of a sinc approximation");
    sinc_cmd->add_option("--method", sinc_args.method, "product | cos-sum | t-sum | u")
        ->required()
        ->check(CLI::IsMember({"product", "cos-sum", "t-sum", "u"}));
    sinc_cmd->add_option("--param", sinc_args.parameter, "Method parameter (M, L or N)")->required();
    sinc_cmd->add_option("--range", sinc_args.range, "t_lo t_hi")->required()->expected(2);
    sinc_cmd->add_option("--grid", sinc_args.grid, "Grid point count")->required();
    add_common_flags(sinc_cmd, sinc_args.common);

    IdentityArgs id_args;
    CLI::App* id_cmd = app.add_subcommand("identity-check", "Verify the product/sum/polynomial identities");
    id_cmd->add_option("--max-m", id_args.max_m, "Largest M to check")->capture_default_str();
    id_cmd->add_option("--tolerance", id_args.tolerance, "Max allowed deviation")->capture_default_str();
    add_common_flags(id_cmd, id_args.common);

    BenchArgs bench_args;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Convergence sweep over M");
    bench_cmd->add_option("--method", bench_args.method, "viete | cheb-sum | cheb-u")
        ->required()
        ->check(CLI::IsMember({"viete", "cheb-sum", "cheb-u"}));
    bench_cmd->add_option("--m-range", bench_args.m_range, "M_lo M_hi")->required()->expected(2);
    bench_cmd->add_option("--frac-bits", bench_args.frac_bits, "Working precision")->capture_default_str();
    add_common_flags(bench_cmd, bench_args.common);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    pi_args.terms_set = terms_opt->count() > 0;
    pi_args.digits_set = digits_opt->count() > 0;
    pi_args.frac_bits_set = fb_opt->count() > 0;

    const CommonFlags* common = nullptr;
    if (*pi_cmd) common = &pi_args.common;
    else if (*sinc_cmd) common = &sinc_args.common;
    else if (*id_cmd) common = &id_args.common;
    else common = &bench_args.common;

    std::ofstream file;
    if (!common->out_path.empty()) {
        file.open(common->out_path);
        if (!file) {
            std::cerr << "error: cannot open output file " << common->out_path << "\n";
            return 2;
        }
    }
    std::ostream& out = file.is_open() ? file : std::cout;

    try {
        if (*pi_cmd) return run_pi(pi_args, out, std::cerr);
        if (*sinc_cmd) return run_sinc_error(sinc_args, out, std::cerr);
        if (*id_cmd) return run_identity_check(id_args, out, std::cerr);
        return run_bench(bench_args, out, std::cerr);
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace chebpi
