#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldu/counters.hpp"
#include "ldu/errors.hpp"
#include "ldu/factorize.hpp"
#include "ldu/gen.hpp"
#include "ldu/io.hpp"
#include "ldu/oracle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitShape = 3;
constexpr int kExitVerify = 4;
constexpr int kExitSingular = 5;

struct Options {
    std::string command;
    std::string input;
    std::string output;
    std::string factors;
    std::string rhs;
    std::string alpha = "1";
    std::string sizes = "4,8,16,32";
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t rank_target = 0;
    bool rank_given = false;
    std::int64_t bound = 9;
    bool deep = false;
};

ldu::IntMatrix load_ring_matrix(const std::string& path) {
    return ldu::require_ring(ldu::parse_matrix_file(path));
}

int cmd_factor(const Options& opt) {
    ldu::IntMatrix a = load_ring_matrix(opt.input);
    ldu::Int alpha = ldu::parse_int(opt.alpha);
    ldu::LduFactorization f = ldu::factorize(a, alpha);
    std::string bundle = ldu::bundle_to_json(f);
    if (opt.output.empty()) {
        std::cout << bundle;
        return 0;
    }
    ldu::write_file(opt.output, bundle);
    std::cout << "rank:    " << f.rank() << "\n";
    std::cout << "alpha_r: " << f.alpha_r.str() << "\n";
    std::cout << "pivots:";
    if (f.pivots.empty()) std::cout << "  (none)";
    std::cout << "\n";
    for (const ldu::PivotInfo& p : f.pivots)
        std::cout << "  (" << p.row + 1 << "," << p.col + 1
                  << ")  det=" << p.det.str() << "\n";
    std::cout << "wrote " << opt.output << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    ldu::IntMatrix a = load_ring_matrix(opt.input);
    ldu::LduFactorization f = ldu::bundle_from_file(opt.factors);
    ldu::Report report = ldu::verify_factorization(a, f, opt.deep);
    for (const ldu::CheckResult& c : report) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    if (ldu::all_pass(report)) {
        std::cout << "VERIFY: PASS\n";
        return 0;
    }
    std::cout << "VERIFY: FAIL\n";
    return kExitVerify;
}

int cmd_rank(const Options& opt) {
    std::cout << ldu::rank(load_ring_matrix(opt.input)) << "\n";
    return 0;
}

int cmd_det(const Options& opt) {
    std::cout << ldu::determinant(load_ring_matrix(opt.input)).str() << "\n";
    return 0;
}

int cmd_inv(const Options& opt) {
    std::cout << ldu::format_matrix(ldu::inverse(load_ring_matrix(opt.input)));
    return 0;
}

int cmd_solve(const Options& opt) {
    ldu::IntMatrix a = load_ring_matrix(opt.input);
    ldu::IntMatrix b = load_ring_matrix(opt.rhs);
    std::cout << ldu::format_matrix(ldu::solve(a, b));
    return 0;
}

int cmd_gen(const Options& opt) {
    std::size_t target = opt.rank_given ? opt.rank_target : opt.n;
    ldu::IntMatrix a = ldu::gen_matrix(opt.n, target, opt.seed, opt.bound);
    std::string text = ldu::matrix_to_json(a);
    if (opt.output.empty())
        std::cout << text;
    else
        ldu::write_file(opt.output, text);
    return 0;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || v == 0)
            throw ldu::ParseError("bad size '" + tok + "'");
        if (!ldu::is_pow2(v)) throw ldu::ShapeMismatch("sizes must be powers of two");
        sizes.push_back(v);
    }
    if (sizes.empty()) throw ldu::ParseError("no sizes given");
    return sizes;
}

int cmd_bench(const Options& opt) {
    std::vector<std::size_t> sizes = parse_sizes(opt.sizes);
    std::cout << std::left << std::setw(8) << "size" << std::setw(12) << "time_ms"
              << std::setw(16) << "mults" << "ratio\n";
    std::uint64_t prev = 0;
    for (std::size_t n : sizes) {
        ldu::IntMatrix a = ldu::gen_matrix(n, n, 1000 + n, opt.bound);
        ldu::reset_mult_count();
        auto t0 = std::chrono::steady_clock::now();
        ldu::LduFactorization f = ldu::factorize(a);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        std::uint64_t mults = ldu::mult_count();
        std::ostringstream row;
        row << std::left << std::setw(8) << n << std::setw(12) << std::fixed
            << std::setprecision(2) << ms << std::setw(16) << mults;
        if (prev > 0)
            row << std::setprecision(2)
                << static_cast<double>(mults) / static_cast<double>(prev);
        else
            row << "-";
        std::cout << row.str() << "\n";
        if (f.rank() != n) throw ldu::Error("benchmark matrix was not full rank");
        prev = mults;
    }
    return 0;
}

int dispatch(const Options& opt) {
    if (opt.command == "factor") return cmd_factor(opt);
    if (opt.command == "verify") return cmd_verify(opt);
    if (opt.command == "rank") return cmd_rank(opt);
    if (opt.command == "det") return cmd_det(opt);
    if (opt.command == "inv") return cmd_inv(opt);
    if (opt.command == "solve") return cmd_solve(opt);
    if (opt.command == "gen") return cmd_gen(opt);
    if (opt.command == "bench") return cmd_bench(opt);
    throw ldu::Error("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact LDU factorization of integer matrices"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* factor = app.add_subcommand("factor", "factorize a matrix");
    factor->add_option("--input", opt.input, "matrix file (JSON or CSV)")->required();
    factor->add_option("--alpha", opt.alpha, "external cofactor (default 1)");
    factor->add_option("--output", opt.output, "bundle path; stdout when omitted");

    CLI::App* verify = app.add_subcommand("verify", "check a factorization bundle");
    verify->add_option("--input", opt.input, "matrix file")->required();
    verify->add_option("--factors", opt.factors, "bundle file")->required();
    verify->add_flag("--deep", opt.deep, "re-derive pivot minors by brute force");

    CLI::App* rank_cmd = app.add_subcommand("rank", "print the rank");
    rank_cmd->add_option("--input", opt.input, "matrix file")->required();

    CLI::App* det = app.add_subcommand("det", "print the determinant");
    det->add_option("--input", opt.input, "matrix file")->required();

    CLI::App* inv = app.add_subcommand("inv", "print the exact inverse");
    inv->add_option("--input", opt.input, "matrix file")->required();

    CLI::App* solve = app.add_subcommand("solve", "solve A x = b exactly");
    solve->add_option("--input", opt.input, "matrix file")->required();
    solve->add_option("--rhs", opt.rhs, "right-hand side column")->required();

    CLI::App* gen = app.add_subcommand("gen", "write a seeded random matrix");
    gen->add_option("--n", opt.n, "size")->required();
    gen->add_option("--rank", opt.rank_target, "target rank (default n)")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", opt.seed, "RNG seed");
    gen->add_option("--bound", opt.bound, "entry bound for the factors");
    gen->add_option("--output", opt.output, "matrix path; stdout when omitted");

    CLI::App* bench = app.add_subcommand("bench", "time the factorization");
    bench->add_option("--sizes", opt.sizes, "comma-separated powers of two");
    bench->add_option("--bound", opt.bound, "entry bound for the inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    opt.rank_given = gen->count("--rank") > 0;
    for (CLI::App* sub : {factor, verify, rank_cmd, det, inv, solve, gen, bench})
        if (sub->parsed()) opt.command = sub->get_name();

    try {
        return dispatch(opt);
    } catch (const ldu::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ldu::MixedKind& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ldu::NotWeightedPermutation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ldu::SingularMatrix& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const ldu::SingularLeadingBlock& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSingular;
    } catch (const ldu::ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const ldu::NonSquare& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const ldu::OddDimension& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const ldu::NotPowerOfTwo& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const ldu::TrimOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
