#include "hychroma/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hychroma/bounds.hpp"
#include "hychroma/errors.hpp"
#include "hychroma/forbidden.hpp"
#include "hychroma/gf2.hpp"
#include "hychroma/partition.hpp"
#include "hychroma/verify.hpp"
#include "hychroma/z4.hpp"

namespace hychroma::cli {

// ---------------------------------------------------------------------------
// Certificate files

void write_certificate(std::ostream& os, const ColoringCertificate& c) {
    os << "hychroma-coloring v1 n=" << c.n << " d=" << c.d << " mode=" << to_string(c.mode)
       << " colors=" << c.color_count << '\n';
    os << "provenance: " << c.provenance << '\n';
    std::string buffer;
    for (auto color : c.assignment) {
        buffer += std::to_string(color);
        buffer += '\n';
        if (buffer.size() > (1U << 16)) {
            os << buffer;
            buffer.clear();
        }
    }
    os << buffer;
}

namespace {

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
    if (text.empty() || text.size() > 19 || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad " + what + ": '" + text + "'");
    return std::stoull(text);
}

std::string field_value(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) != 0) throw ParseError("expected '" + key + "=...', got '" + token + "'");
    return token.substr(key.size() + 1);
}

}  // namespace

ColoringCertificate read_certificate(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty certificate");
    std::istringstream header(line);
    std::vector<std::string> tokens;
    for (std::string t; header >> t;) tokens.push_back(t);
    if (tokens.size() != 6 || tokens[0] != "hychroma-coloring" || tokens[1] != "v1")
        throw ParseError("bad certificate header: '" + line + "'");
    ColoringCertificate c;
    const auto n = parse_unsigned(field_value(tokens[2], "n"), "n");
    const auto d = parse_unsigned(field_value(tokens[3], "d"), "d");
    const std::string mode = field_value(tokens[4], "mode");
    const auto colors = parse_unsigned(field_value(tokens[5], "colors"), "colors");
    if (n < 1 || n > 30) throw ParseError("certificate n out of range 1..30");
    if (d > 64) throw ParseError("certificate d out of range");
    if (colors < 1 || colors > (std::uint64_t{1} << n)) throw ParseError("certificate color count out of range");
    if (mode == "atmost")
        c.mode = ColoringMode::AtMostD;
    else if (mode == "exact")
        c.mode = ColoringMode::ExactD;
    else
        throw ParseError("bad mode '" + mode + "'");
    c.n = static_cast<int>(n);
    c.d = static_cast<int>(d);
    c.color_count = static_cast<std::uint32_t>(colors);

    if (!std::getline(is, line) || line.rfind("provenance: ", 0) != 0) throw ParseError("missing provenance line");
    c.provenance = line.substr(12);

    const std::uint64_t space = std::uint64_t{1} << n;
    c.assignment.reserve(space);
    for (std::uint64_t v = 0; v < space; ++v) {
        if (!std::getline(is, line))
            throw ParseError("certificate truncated: " + std::to_string(v) + " of " + std::to_string(space) +
                             " colors present");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto color = parse_unsigned(line, "color id on line " + std::to_string(v + 3));
        if (color > 0xFFFFFFFFULL) throw ParseError("color id too large on line " + std::to_string(v + 3));
        c.assignment.push_back(static_cast<std::uint32_t>(color));
    }
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("unexpected content after " + std::to_string(space) + " colors");
    return c;
}

std::vector<int> parse_length_list(const std::vector<std::string>& tokens) {
    std::vector<int> out;
    auto to_int = [](const std::string& s) {
        const auto v = parse_unsigned(s, "length");
        if (v > 64) throw UsageError("length " + s + " exceeds 64");
        return static_cast<int>(v);
    };
    for (const auto& token : tokens) {
        std::stringstream ss(token);
        for (std::string part; std::getline(ss, part, ',');) {
            if (part.empty()) continue;
            const auto dots = part.find("..");
            if (dots == std::string::npos) {
                out.push_back(to_int(part));
                continue;
            }
            const int lo = to_int(part.substr(0, dots));
            const int hi = to_int(part.substr(dots + 2));
            if (lo > hi) throw UsageError("empty range '" + part + "'");
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        }
    }
    if (out.empty()) throw UsageError("no lengths given");
    return out;
}

// ---------------------------------------------------------------------------
// Subcommands

namespace {

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

// Writes through `fn` to the output path, or to `out` when no path is set.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    fn(file);
    if (!file) throw UsageError("write to '" + path + "' failed");
}

gf2::BinaryLinearCode named_code(const CliConfig& cfg) {
    const std::string& f = cfg.family;
    if (f == "hamming") return gf2::hamming_code(require(cfg.r, "--r"));
    if (f == "golay") return gf2::golay_code();
    if (f == "repetition") return gf2::repetition_code(require(cfg.n, "--n"));
    if (f == "even-weight") return gf2::even_weight_code(require(cfg.n, "--n"));
    if (f == "full-space") return gf2::full_space(require(cfg.n, "--n"));
    throw UsageError("unknown binary code family '" + f + "'");
}

gf2::BinaryLinearCode input_code(const CliConfig& cfg) {
    if (!cfg.code_path.empty()) {
        auto in = open_input(cfg.code_path);
        return gf2::read_code(in);
    }
    if (!cfg.family.empty()) return named_code(cfg);
    throw UsageError("give a code with --code FILE or --family NAME");
}

ColoringCertificate read_certificate_file(const std::string& path) {
    auto in = open_input(path);
    return read_certificate(in);
}

ColoringCertificate build_certificate(const CliConfig& cfg) {
    const std::string& m = cfg.action;
    if (m == "preparata-coset" || m == "preparata-punctured") {
        const int r = require(cfg.r, "--r");
        const auto code = z4::preparata_code(r);
        const std::string label = "preparata r=" + std::to_string(r) + (m == "preparata-coset" ? " coset" : " punctured");
        return partition_to_coloring(m == "preparata-coset" ? partition::z4_coset_partition(code, label, cfg.force)
                                                            : partition::z4_punctured_partition(code, label, cfg.force));
    }
    if (m == "linear-coset") {
        const auto code = input_code(cfg);
        return partition_to_coloring(partition::from_binary_linear(code, require(cfg.d, "--d"), "", cfg.force));
    }
    if (m == "forbidden-greedy") {
        const int n = require(cfg.n, "--n");
        const int d = require(cfg.d, "--d");
        const auto code = forbidden::code_from_parity(forbidden::greedy_forbidden_matrix(n, d, cfg.force), d, cfg.force);
        const std::string label = "forbidden-greedy n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" +
                                  std::to_string(code.dimension());
        return partition_to_coloring(forbidden::forbidden_coset_partition(code, label, cfg.force));
    }
    if (m == "forbidden-directsum") {
        const auto c1 = input_code(cfg);
        const int d = require(cfg.d, "--d");
        std::optional<forbidden::ForbiddenLinearCode> c2;
        if (!cfg.forbidden_code_path.empty()) {
            auto in = open_input(cfg.forbidden_code_path);
            c2 = forbidden::read_forbidden_code(in, cfg.force);
            if (c2->forbidden_distance() != d) throw UsageError("--d does not match the forbidden code's distance");
        } else {
            c2 = forbidden::full_space_forbidden(d - 1, d);
        }
        const auto sum = forbidden::direct_sum(c1, *c2, cfg.force);
        const std::string label = "forbidden-directsum n=" + std::to_string(sum.length()) + " d=" +
                                  std::to_string(d) + " k=" + std::to_string(sum.dimension());
        return partition_to_coloring(forbidden::forbidden_coset_partition(sum, label, cfg.force));
    }
    if (m == "product") {
        if (cfg.first.empty() || cfg.second.empty()) throw UsageError("product needs --first and --second certificates");
        const auto a = read_certificate_file(cfg.first);
        const auto b = read_certificate_file(cfg.second);
        for (const auto* c : {&a, &b}) {
            const auto report = verify::verify_coloring(*c, verify::Strategy::Auto, cfg.force);
            if (!report.passed) throw UsageError("input certificate (" + c->provenance + ") does not verify");
        }
        return partition_to_coloring(
            partition::product_partition(coloring_to_partition(a), coloring_to_partition(b), cfg.force));
    }
    if (m == "parity") return partition::parity_coloring(require(cfg.n, "--n"), require(cfg.d, "--d"), cfg.force);
    throw UsageError("unknown method '" + m + "'");
}

int cmd_construct(const CliConfig& cfg, std::ostream& out) {
    const auto cert = build_certificate(cfg);
    emit(cfg.output, out, [&](std::ostream& os) { write_certificate(os, cert); });
    if (!cfg.output.empty() && cfg.output != "-")
        out << "wrote " << cfg.output << ": n=" << cert.n << " d=" << cert.d << " mode=" << to_string(cert.mode)
            << " colors=" << cert.color_count << " (" << cert.provenance << ", verified)\n";
    return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 1) throw UsageError("verify takes exactly one certificate path");
    auto cert = read_certificate_file(cfg.inputs.front());
    if (cfg.d) {
        if (*cfg.d < 0) throw UsageError("--d must be >= 0");
        cert.d = *cfg.d;
    }
    if (cfg.mode) {
        if (*cfg.mode == "atmost")
            cert.mode = ColoringMode::AtMostD;
        else if (*cfg.mode == "exact")
            cert.mode = ColoringMode::ExactD;
        else
            throw UsageError("--mode must be atmost or exact");
    }
    const auto report = verify::verify_coloring(cert, verify::parse_strategy(cfg.strategy), cfg.force);
    const auto format = cfg.report_format == "csv" ? verify::ReportFormat::Csv : verify::ReportFormat::Text;
    if (cfg.report_format != "csv" && cfg.report_format != "text")
        throw UsageError("--report-format must be text or csv");
    emit(cfg.report_path, out, [&](std::ostream& os) {
        if (format == verify::ReportFormat::Text)
            os << "certificate: " << cfg.inputs.front() << " (" << cert.provenance << ")\n";
        verify::write_report(os, report, format);
    });
    if (!report.passed && report.counterexample && !verify::confirms_violation(cert, *report.counterexample))
        throw IntegrityError("reported counterexample does not re-check");
    return report.passed ? kExitOk : kExitViolation;
}

int cmd_bounds(const CliConfig& cfg, std::ostream& out) {
    const auto q = bounds::parse_quantity(cfg.quantity);
    const int d = require(cfg.d, "--d");
    const auto ns = parse_length_list(cfg.n_list);
    auto kt = bounds::KTable::builtin();
    if (!cfg.k_table.empty()) {
        auto in = open_input(cfg.k_table);
        kt.merge_csv(in);
    }
    bounds::TableOptions options;
    options.force = cfg.force;
    const auto reports = bounds::bound_table(q, d, ns, kt, options);
    if (cfg.table_format != "text" && cfg.table_format != "csv") throw UsageError("--format must be text or csv");
    emit(cfg.output, out, [&](std::ostream& os) {
        if (cfg.table_format == "csv")
            bounds::write_table_csv(os, reports);
        else
            bounds::write_table_text(os, reports);
    });
    return kExitOk;
}

std::string weight_line(const std::vector<std::uint64_t>& dist) {
    std::string s;
    for (std::size_t w = 0; w < dist.size(); ++w)
        if (dist[w]) s += (s.empty() ? "" : " ") + std::to_string(w) + ":" + std::to_string(dist[w]);
    return s;
}

void describe_binary(std::ostream& os, const gf2::BinaryLinearCode& c) {
    os << "binary linear code n=" << c.length() << " k=" << c.dimension() << '\n';
    if (c.dimension() > gf2::kMinWeightDimensionLimit) {
        os << "minimum distance: not enumerated (k > " << gf2::kMinWeightDimensionLimit << ")\n";
        return;
    }
    const auto w = gf2::min_hamming_weight(c);
    os << "minimum distance: " << (w ? std::to_string(*w) : std::string("none (zero code)")) << '\n';
    os << "weight distribution: " << weight_line(gf2::weight_distribution(c)) << '\n';
}

int cmd_code(const CliConfig& cfg, std::ostream& out) {
    if (cfg.action == "make") {
        const std::string& f = cfg.family;
        if (f == "kerdock" || f == "preparata") {
            const int r = require(cfg.r, "--r");
            const auto code = f == "kerdock" ? z4::kerdock_code(r) : z4::preparata_code(r);
            emit(cfg.output, out, [&](std::ostream& os) { z4::write_z4_code(os, code); });
        } else if (f == "forbidden-greedy") {
            const int n = require(cfg.n, "--n");
            const int d = require(cfg.d, "--d");
            const auto code = forbidden::code_from_parity(forbidden::greedy_forbidden_matrix(n, d, cfg.force), d, cfg.force);
            emit(cfg.output, out, [&](std::ostream& os) { forbidden::write_forbidden_code(os, code); });
        } else if (f == "exact-k2") {
            const auto e = forbidden::exact_k_d2(require(cfg.n, "--n"));
            emit(cfg.output, out, [&](std::ostream& os) { forbidden::write_forbidden_code(os, e.witness); });
        } else {
            const auto code = named_code(cfg);
            emit(cfg.output, out, [&](std::ostream& os) { gf2::write_code(os, code); });
        }
        return kExitOk;
    }
    if (cfg.action == "info") {
        if (cfg.inputs.size() != 1) throw UsageError("code info takes exactly one path");
        auto in = open_input(cfg.inputs.front());
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        std::istringstream is(text);
        if (text.rfind("z4code", 0) == 0) {
            const auto c = z4::read_z4_code(is);
            out << "Z4-linear code n=" << c.length() << " type 4^" << c.k1() << " 2^" << c.k2() << '\n';
            if (c.log2_size() > z4::kEnumerationLimit && !cfg.force) {
                out << "minimum Lee weight: not enumerated (2k1+k2 > " << z4::kEnumerationLimit << ")\n";
                return kExitOk;
            }
            const auto lee = z4::min_lee_weight(c, cfg.force);
            out << "minimum Lee weight: " << (lee ? std::to_string(*lee) : std::string("none (zero code)")) << '\n';
            std::vector<std::uint64_t> dist(static_cast<std::size_t>(2 * c.length()) + 1, 0);
            for (auto w : c.codeword_words(cfg.force)) ++dist[static_cast<std::size_t>(std::popcount(z4::packed_gray(w)))];
            out << "Gray image weight distribution: " << weight_line(dist) << '\n';
        } else if (text.find("\nforbidden ") != std::string::npos) {
            const auto c = forbidden::read_forbidden_code(is, cfg.force);
            describe_binary(out, c.base());
            out << "forbidden distance: " << c.forbidden_distance() << " (validated)\n";
        } else {
            describe_binary(out, gf2::read_code(is));
        }
        return kExitOk;
    }
    throw UsageError("code action must be make or info");
}

// Lee/Hamming isometry and the identity phi(x+y) = phi(x) ^ phi(y) ^ phi(2 alpha(x) alpha(y)).
int gray_identities(const CliConfig& cfg, std::ostream& out) {
    const int n = cfg.n.value_or(4);
    if (n < 1 || n > 16) throw UsageError("gray-identities needs 1 <= n <= 16");
    const std::uint64_t words = std::uint64_t{1} << (2 * n);
    const bool exhaustive = words <= (std::uint64_t{1} << 16) && words * words <= std::max<std::uint64_t>(cfg.trials, 1);
    std::uint64_t violations = 0;
    std::uint64_t pairs = 0;
    auto check = [&](std::uint64_t a, std::uint64_t b) {
        const z4::Z4Vector x(n, a);
        const z4::Z4Vector y(n, b);
        ++pairs;
        const auto gx = z4::gray_map(x);
        const auto gy = z4::gray_map(y);
        bool ok = z4::lee_distance(x, y) == gf2::hamming_distance(gx, gy);
        ok = ok && z4::lee_weight(x) == gf2::hamming_weight(gx);
        const auto carry = z4::Z4Vector::from_binary(z4::alpha_map(x) & z4::alpha_map(y)).scaled(2);
        ok = ok && z4::gray_map(x + y) == (gx ^ gy ^ z4::gray_map(carry));
        if (!ok) {
            if (violations == 0) out << "first violation: x=" << x << " y=" << y << '\n';
            ++violations;
        }
    };
    if (exhaustive) {
        for (std::uint64_t a = 0; a < words; ++a)
            for (std::uint64_t b = 0; b < words; ++b) check(a, b);
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, words - 1);
        for (std::uint64_t t = 0; t < cfg.trials; ++t) check(pick(rng), pick(rng));
    }
    out << "gray identities n=" << n << (exhaustive ? " exhaustive" : " sampled seed=" + std::to_string(cfg.seed))
        << ": " << pairs << " pairs, " << violations << " violations\n";
    return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_oracle(const CliConfig& cfg, std::ostream& out) {
    const std::string& q = cfg.action;
    if (q == "gray-identities") return gray_identities(cfg, out);
    const int n = require(cfg.n, "--n");
    const int d = require(cfg.d, "--d");
    if (q == "chi" || q == "chi_prime") {
        ColoringMode mode = q == "chi" ? ColoringMode::ExactD : ColoringMode::AtMostD;
        if (cfg.mode) mode = *cfg.mode == "atmost" ? ColoringMode::AtMostD : ColoringMode::ExactD;
        const int v = verify::exact_chi_small(n, d, mode);
        out << (mode == ColoringMode::ExactD ? "chi_" : "chi'_") << d << "(" << n << ") = " << v << '\n';
        return kExitOk;
    }
    if (q == "A" || q == "Q") {
        const auto s = q == "A" ? verify::exact_A_small(n, d) : verify::exact_Q_small(n, d);
        out << q << "(" << n << "," << d << ") = " << s.size << '\n';
        out << "witness:";
        for (auto v : s.witness) out << ' ' << gf2::BitVector(n, v).to_string();
        out << '\n';
        return kExitOk;
    }
    throw UsageError("oracle quantity must be chi, chi_prime, A, Q or gray-identities");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    int n = 0, d = 0, r = 0;
    std::string mode;
    CLI::App app{"Distance colorings of the n-cube: constructions, verification and bounds", "hychroma"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Build and verify a coloring certificate");
    construct->add_option("--method", cfg.action, "preparata-coset | preparata-punctured | linear-coset | "
                                                  "forbidden-greedy | forbidden-directsum | product | parity")
        ->required();
    auto* c_n = construct->add_option("--n", n, "Cube dimension");
    auto* c_d = construct->add_option("--d", d, "Distance parameter");
    auto* c_r = construct->add_option("--r", r, "Code parameter r");
    construct->add_option("--code", cfg.code_path, "Binary code file");
    construct->add_option("--family", cfg.family, "Named binary code: hamming, golay, repetition, even-weight, full-space");
    construct->add_option("--forbidden-code", cfg.forbidden_code_path, "Second summand for forbidden-directsum");
    construct->add_option("--first", cfg.first, "Certificate with minimum distance d+1 (product)");
    construct->add_option("--second", cfg.second, "Exact-distance certificate (product)");
    construct->add_option("-o,--output", cfg.output, "Output certificate path (default stdout)");
    construct->add_flag("--force", cfg.force, "Bypass size guards");

    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate exhaustively");
    verify_cmd->add_option("certificate", cfg.inputs, "Certificate path")->required();
    verify_cmd->add_option("--strategy", cfg.strategy, "auto | neighbor | pairwise");
    verify_cmd->add_option("--report-format", cfg.report_format, "text | csv");
    verify_cmd->add_option("--report", cfg.report_path, "Write the report here instead of stdout");
    auto* v_d = verify_cmd->add_option("--d", d, "Override the certificate's d");
    auto* v_mode = verify_cmd->add_option("--mode", mode, "Override the certificate's mode (atmost | exact)");
    verify_cmd->add_flag("--force", cfg.force, "Bypass size guards");

    auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate bounds on chi or chi_prime");
    bounds_cmd->add_option("--quantity", cfg.quantity, "chi | chi_prime")->required();
    auto* b_d = bounds_cmd->add_option("--d", d, "Distance parameter")->required();
    bounds_cmd->add_option("--n", cfg.n_list, "Lengths: values, ranges a..b, comma lists")->required();
    bounds_cmd->add_option("--k-table", cfg.k_table, "CSV of k(n,d) entries: n,d,k,source");
    bounds_cmd->add_option("--format", cfg.table_format, "text | csv");
    bounds_cmd->add_option("-o,--output", cfg.output, "Output path (default stdout)");
    bounds_cmd->add_flag("--force", cfg.force, "Bypass size guards");

    auto* code_cmd = app.add_subcommand("code", "Create or inspect code files");
    code_cmd->add_option("action", cfg.action, "make | info")->required();
    code_cmd->add_option("path", cfg.inputs, "Code file (info)");
    code_cmd->add_option("--family", cfg.family,
                         "hamming | golay | repetition | even-weight | full-space | kerdock | preparata | "
                         "forbidden-greedy | exact-k2");
    auto* k_n = code_cmd->add_option("--n", n, "Length");
    auto* k_d = code_cmd->add_option("--d", d, "Forbidden distance");
    auto* k_r = code_cmd->add_option("--r", r, "Family parameter r");
    code_cmd->add_option("-o,--output", cfg.output, "Output path (default stdout)");
    code_cmd->add_flag("--force", cfg.force, "Bypass size guards");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact values on tiny cubes and Gray map checks");
    oracle_cmd->add_option("quantity", cfg.action, "chi | chi_prime | A | Q | gray-identities")->required();
    auto* o_n = oracle_cmd->add_option("--n", n, "Cube dimension or Z4 length");
    auto* o_d = oracle_cmd->add_option("--d", d, "Distance");
    auto* o_mode = oracle_cmd->add_option("--mode", mode, "atmost | exact (chi)");
    oracle_cmd->add_option("--seed", cfg.seed, "Random seed for sampled checks");
    oracle_cmd->add_option("--trials", cfg.trials, "Pair budget for gray-identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    for (auto* opt : {c_n, k_n, o_n})
        if (opt->count()) cfg.n = n;
    for (auto* opt : {c_d, v_d, b_d, k_d, o_d})
        if (opt->count()) cfg.d = d;
    for (auto* opt : {c_r, k_r})
        if (opt->count()) cfg.r = r;
    if (v_mode->count() || o_mode->count()) cfg.mode = mode;
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (cfg.subcommand == "construct") return cmd_construct(cfg, out);
        if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
        if (cfg.subcommand == "bounds") return cmd_bounds(cfg, out);
        if (cfg.subcommand == "code") return cmd_code(cfg, out);
        return cmd_oracle(cfg, out);
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hychroma::cli
