#include "kaluza/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kaluza/conditions.hpp"
#include "kaluza/json_io.hpp"
#include "kaluza/kernels.hpp"
#include "kaluza/moments.hpp"
#include "kaluza/symmetrize.hpp"

namespace kaluza::cli {

namespace {

// KALUZA_LOG=debug enables timing notes on stderr.
bool debug_logging()
{
    const char* level = std::getenv("KALUZA_LOG");
    return level != nullptr && std::string_view(level) == "debug";
}

struct Options {
    std::string in;
    std::string norms;
    std::string out;
    std::string params;
    std::string family;
    std::string thm;
    std::string point;
    std::optional<unsigned> degree;
    std::optional<std::size_t> dim;
    unsigned threads = 1;
    std::uint64_t max_entries = default_max_entries;
};

Json read_json_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        throw InputError("cannot open " + path);
    }
    try {
        return Json::parse(file);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": malformed JSON: " + e.what());
    }
}

// --params takes a file path, or inline JSON when it starts with '{'.
Json read_params(const std::string& value)
{
    if (value.empty()) {
        return Json::object();
    }
    if (value.front() == '{') {
        try {
            return Json::parse(value);
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("--params: malformed JSON: ") + e.what());
        }
    }
    return read_json_file(value);
}

ParsedTable read_table(const std::string& path, const Options& opt)
{
    ParsedTable parsed = table_from_json(read_json_file(path), TableLimits{opt.max_entries});
    if (opt.degree) {
        std::visit([&](auto& t) { t = t.truncate(*opt.degree); }, parsed.table);
    }
    return parsed;
}

IndexTable require_index_table(ParsedTable parsed, const char* command)
{
    if (auto* t = std::get_if<IndexTable>(&parsed.table)) {
        return std::move(*t);
    }
    throw InputError(std::string(command) + " needs a multiindex table");
}

void emit(const Json& doc, const Options& opt, std::ostream& out)
{
    const std::string text = doc.dump(2) + "\n";
    if (opt.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
        throw InputError("cannot write " + opt.out);
    }
    file << text;
}

std::size_t require_dim(const Options& opt, const char* family)
{
    if (!opt.dim) {
        throw InputError(std::string("--family ") + family + " needs --dim");
    }
    return *opt.dim;
}

std::size_t resolve_dim(const Options& opt, std::size_t inferred)
{
    if (opt.dim && *opt.dim != inferred) {
        throw InputError("--dim " + std::to_string(*opt.dim) + " disagrees with parameters (dimension "
                         + std::to_string(inferred) + ")");
    }
    return inferred;
}

int run_solve(const Options& opt, std::ostream& out)
{
    const ParsedTable parsed = read_table(opt.in, opt);
    const SolveOptions solve{opt.threads};
    const AnyTable q = std::visit([&](const auto& c) { return AnyTable(solve_renewal(c, solve)); }, parsed.table);
    emit(table_to_json(q), opt, out);
    return exit_ok;
}

int run_check(const Options& opt, std::ostream& out)
{
    ParsedTable parsed = read_table(opt.in, opt);
    CheckReport report;
    if (opt.thm == "word") {
        const auto* f = std::get_if<WordTable>(&parsed.table);
        if (f == nullptr) {
            throw InputError("check --thm word needs a word table");
        }
        report = check_word_condition(*f);
    } else {
        const IndexTable c = require_index_table(std::move(parsed), "check");
        if (opt.thm == "1") {
            report = check_theorem1(c);
        } else if (opt.thm == "2") {
            report = check_theorem2(c);
        } else {
            if (c.dim() != 1) {
                throw InputError("check --thm 1d needs a table of dimension 1");
            }
            report = check_kaluza_1d(c.values());
        }
    }
    emit(report_to_json(report), opt, out);
    return report.passed() ? exit_ok : exit_failed;
}

int run_certify(const Options& opt, std::ostream& out)
{
    const bool from_norms = !opt.norms.empty();
    ParsedTable parsed = read_table(from_norms ? opt.norms : opt.in, opt);
    const bool is_norms = from_norms || parsed.content == TableContent::norms_squared;
    IndexTable table = require_index_table(std::move(parsed), "certify");
    const IndexTable c = is_norms ? coeffs_from_norms(table) : std::move(table);
    const CertReport report = certify(c, SolveOptions{opt.threads});
    emit(cert_to_json(report), opt, out);
    return report.verdict == Verdict::not_cnp ? exit_failed : exit_ok;
}

int run_gen(const Options& opt, std::ostream& out)
{
    if (!opt.degree) {
        throw InputError("gen needs --degree");
    }
    const unsigned n = *opt.degree;
    const Json params = read_params(opt.params);
    const std::string& family = opt.family;

    if (family == "multinomial") {
        emit(table_to_json(multinomial_table(require_dim(opt, "multinomial"), n)), opt, out);
    } else if (family == "geometric") {
        // {"ratios":["p/q",...]} per axis, or {"ratio":"p/q"} on every axis.
        std::vector<Rational> ratios;
        if (params.contains("ratios")) {
            for (const auto& t : params.at("ratios")) {
                ratios.push_back(rational_from_json(t));
            }
            resolve_dim(opt, ratios.size());
        } else if (params.contains("ratio")) {
            ratios.assign(require_dim(opt, "geometric"), rational_from_json(params.at("ratio")));
        } else {
            throw InputError("--family geometric needs \"ratio\" or \"ratios\" in --params");
        }
        std::vector<MeasureSpec1D> axes;
        for (const auto& t : ratios) {
            axes.push_back(MeasureSpec1D::atomic({Atom1D{t, Rational(1)}}));
        }
        emit(table_to_json(product_measure_coeffs(axes, n)), opt, out);
    } else if (family == "from-r") {
        const IndexTable r = index_table_from_overrides(params, require_dim(opt, "from-r"), n, 0, 1);
        emit(table_to_json(c_from_r(RatioTable(r))), opt, out);
    } else if (family == "from-b") {
        const IndexTable b = index_table_from_overrides(params, require_dim(opt, "from-b"), n, 0, 0);
        emit(table_to_json(c_from_b(b)), opt, out);
    } else if (family == "product-measure") {
        const auto axes = product_measure_from_json(params);
        resolve_dim(opt, axes.size());
        emit(table_to_json(product_measure_coeffs(axes, n)), opt, out);
    } else if (family == "atomic-measure") {
        const auto measure = atomic_measure_from_json(params);
        resolve_dim(opt, measure.dim());
        emit(table_to_json(atomic_coeffs(measure, n)), opt, out);
    } else if (family == "besov-norms") {
        resolve_dim(opt, 2);
        emit(table_to_json(besov_norms(n), TableContent::norms_squared), opt, out);
    } else {
        throw InputError("unknown family \"" + family + "\"");
    }
    return exit_ok;
}

int run_eval(const Options& opt, std::ostream& out)
{
    const IndexTable f = require_index_table(read_table(opt.in, opt), "eval");
    const auto z = parse_point(opt.point);
    const std::complex<double> value = evaluate(f, z);
    emit(Json{{"re", value.real()}, {"im", value.imag()}}, opt, out);
    return exit_ok;
}

int run_oracle(const Options& opt, std::ostream& out)
{
    const IndexTable c = require_index_table(read_table(opt.in, opt), "oracle");
    const SolveOptions solve{opt.threads};
    const bool equal = solve_renewal(c, solve) == solve_via_words(c, TableLimits{opt.max_entries}, solve);
    emit(Json{{"equal", equal}}, opt, out);
    return equal ? exit_ok : exit_failed;
}

double parse_double(std::string_view text, std::string_view whole)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw InputError("malformed coordinate in point \"" + std::string(whole) + "\"");
    }
    return value;
}

std::complex<double> parse_coordinate(std::string_view text, std::string_view whole)
{
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (text.empty() || text.back() != 'i') {
        std::string_view real = text;
        if (real.starts_with('+')) {
            real.remove_prefix(1);
        }
        return {parse_double(real, whole), 0.0};
    }
    text.remove_suffix(1);
    // Split at the last sign that is not an exponent sign or the leading sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = text.size(); i-- > 1;) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto signed_part = [&](std::string_view part) {
        if (part == "+" || part == "-" || part.empty()) {
            return part == "-" ? -1.0 : 1.0;
        }
        if (part.starts_with('+')) {
            part.remove_prefix(1);
        }
        return parse_double(part, whole);
    };
    if (split == std::string_view::npos) {
        return {0.0, signed_part(text)};
    }
    std::string_view real = text.substr(0, split);
    if (real.starts_with('+')) {
        real.remove_prefix(1);
    }
    return {parse_double(real, whole), signed_part(text.substr(split))};
}

} // namespace

std::vector<std::complex<double>> parse_point(std::string_view text)
{
    std::vector<std::complex<double>> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_coordinate(text.substr(start, comma - start), text));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Renewal equations on graded monoids and Kaluza-type positivity certificates"};
    app.name("kaluza");
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Write JSON here instead of standard output");
        sub->add_option("--threads", opt.threads, "Worker threads per degree level")->check(CLI::PositiveNumber);
    };
    auto add_degree = [&opt](CLI::App* sub, const char* help) {
        sub->add_option("--degree", opt.degree, help)->check(CLI::NonNegativeNumber);
    };

    auto* solve = app.add_subcommand("solve", "Solve c = delta + c*q for q");
    solve->add_option("--in", opt.in, "Coefficient table")->required();
    add_degree(solve, "Truncate the input to this degree first");
    add_common(solve);

    auto* check = app.add_subcommand("check", "Check a sufficient condition for q >= 0");
    check->add_option("--thm", opt.thm, "Condition: 1, 2, 1d or word")
        ->required()
        ->check(CLI::IsMember({"1", "2", "1d", "word"}));
    check->add_option("--in", opt.in, "Coefficient table")->required();
    add_degree(check, "Truncate the input to this degree first");
    add_common(check);

    auto* cert = app.add_subcommand("certify", "Certify a diagonal kernel as complete Nevanlinna-Pick");
    auto* cert_in = cert->add_option("--in", opt.in, "Coefficient table (or a norms_squared table)");
    auto* cert_norms = cert->add_option("--norms", opt.norms, "Table of squared monomial norms");
    cert_in->excludes(cert_norms);
    add_degree(cert, "Truncate the input to this degree first");
    add_common(cert);

    auto* gen = app.add_subcommand("gen", "Generate a coefficient table");
    gen->add_option("--family", opt.family, "Table family")
        ->required()
        ->check(CLI::IsMember(
            {"multinomial", "geometric", "from-r", "from-b", "product-measure", "atomic-measure", "besov-norms"}));
    gen->add_option("--params", opt.params, "Family parameters: JSON file, or inline JSON object");
    gen->add_option("--dim", opt.dim, "Number of variables")->check(CLI::PositiveNumber);
    add_degree(gen, "Truncation degree");
    add_common(gen);

    auto* eval = app.add_subcommand("eval", "Evaluate the truncated series at a point of the l1 ball");
    eval->add_option("--in", opt.in, "Coefficient table")->required();
    eval->add_option("--point", opt.point, "Comma-separated coordinates, e.g. 0.25,0.1-0.2i")->required();
    add_degree(eval, "Truncate the input to this degree first");
    add_common(eval);

    auto* oracle = app.add_subcommand("oracle", "Compare the direct solver with the word-lift solver");
    oracle->add_option("--in", opt.in, "Coefficient table")->required();
    oracle->add_option("--max-entries", opt.max_entries, "Word table size limit");
    add_degree(oracle, "Truncate the input to this degree first");
    add_common(oracle);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "kaluza: " << e.what() << "\n";
        return exit_input_error;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        if (*solve) {
            code = run_solve(opt, out);
        } else if (*check) {
            code = run_check(opt, out);
        } else if (*cert) {
            if (opt.in.empty() && opt.norms.empty()) {
                throw InputError("certify needs --in or --norms");
            }
            code = run_certify(opt, out);
        } else if (*gen) {
            code = run_gen(opt, out);
        } else if (*eval) {
            code = run_eval(opt, out);
        } else {
            code = run_oracle(opt, out);
        }
    } catch (const std::exception& e) {
        // InputError, GuardError, and JSON type errors all mean the input was unusable.
        err << "kaluza: " << e.what() << "\n";
        return exit_input_error;
    }
    if (debug_logging()) {
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        err << "kaluza: " << app.get_subcommands().front()->get_name() << " finished in " << ms.count() << " ms\n";
    }
    return code;
}

} // namespace kaluza::cli
