#include <dilogid/catalog.hpp>
#include <dilogid/report.hpp>
#include <dilogid/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using dilogid::complex;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double number(const std::string& s)
{
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(s, &used);
    } catch (const std::exception&) {
        throw usage_error("not a number: " + s);
    }
    if (used != s.size()) throw usage_error("not a number: " + s);
    return x;
}

// "re", "re,im" or "re+imi".
complex parse_complex(std::string s)
{
    if (auto comma = s.find(','); comma != std::string::npos) return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
    if (!s.empty() && s.back() == 'i') {
        s.pop_back();
        for (std::size_t k = s.size(); k-- > 1;)
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                std::string im = s.substr(k);
                if (im == "+" || im == "-") im += "1";
                return {number(s.substr(0, k)), number(im)};
            }
        if (s.empty() || s == "+" || s == "-") s += "1";
        return {0.0, number(s)};
    }
    return {number(s), 0.0};
}

std::string show(complex z)
{
    char buf[96];
    if (z.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%.15g", z.real());
    else
        std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
    return buf;
}

int run_eval(const std::string& fn, const std::vector<std::string>& args)
{
    auto need = [&](std::size_t n) {
        if (args.size() != n) throw usage_error("eval " + fn + " expects " + std::to_string(n) + " arguments");
    };
    complex v;
    if (fn == "li2" || fn == "li3" || fn == "li4") {
        need(2);
        v = dilogid::li(fn[2] - '0', {number(args[0]), number(args[1])});
    } else if (fn == "hurwitz") {
        need(3);
        v = dilogid::hurwitz_zeta(number(args[0]), {number(args[1]), number(args[2])});
    } else if (fn == "polygamma") {
        need(3);
        double m = number(args[0]);
        if (m != std::floor(m) || m < 0) throw dilogid::domain_error("m", "m = " + args[0] + ": order must be a non-negative integer");
        v = dilogid::polygamma(static_cast<int>(m), complex{number(args[1]), number(args[2])});
    } else if (fn == "digamma") {
        need(2);
        v = dilogid::digamma(complex{number(args[0]), number(args[1])});
    } else if (fn == "zeta") {
        need(1);
        v = dilogid::riemann_zeta(number(args[0]));
    } else {
        throw usage_error("unknown function " + fn + " (li2, li3, li4, hurwitz, polygamma, digamma, zeta)");
    }
    std::cout << show(v) << '\n';
    return 0;
}

std::vector<dilogid::param_map> parse_samples(const std::vector<std::string>& extra)
{
    std::vector<dilogid::param_map> out;
    dilogid::param_map current;
    for (std::size_t i = 0; i < extra.size(); ++i) {
        std::string a = extra[i];
        std::string value;
        if (a == "--sample") {
            if (i + 1 == extra.size()) throw usage_error("--sample needs name=value");
            value = extra[++i];
        } else if (a.rfind("--sample=", 0) == 0) {
            value = a.substr(9);
        } else {
            throw usage_error("unexpected argument " + a);
        }
        auto eq = value.find('=');
        if (eq == std::string::npos || eq == 0) throw usage_error("--sample needs name=value, got " + value);
        std::string name = value.substr(0, eq);
        for (const auto& [k, v] : current)
            if (k == name) {
                out.push_back(current);
                current.clear();
                break;
            }
        current.emplace_back(name, parse_complex(value.substr(eq + 1)));
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

std::set<std::string> parameter_names(const dilogid::identity_record& rec)
{
    std::set<std::string> names;
    for (const auto& s : rec.samples)
        for (const auto& [k, v] : s.params) names.insert(k);
    return names;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical verification of polylogarithm and Hurwitz zeta identities"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "Print catalog ids and anchors");

    std::string fn;
    std::vector<std::string> fn_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one special function");
    eval->add_option("fn", fn, "li2 | li3 | li4 | hurwitz | polygamma | digamma | zeta")->required();
    eval->add_option("args", fn_args, "li*: re im; hurwitz: s re im; polygamma: m re im; digamma: re im; zeta: s");
    eval->allow_extras(false);

    std::vector<std::string> ids;
    double tol = 1e-9;
    std::string jsonl_path;
    bool table = false;
    unsigned parallelism = 1;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool stress = false;
    std::vector<std::string> extra;
    auto* verify = app.add_subcommand("verify", "Verify catalog identities");
    verify->add_option("--id", ids, "Glob over identity ids (repeatable)");
    auto* tol_opt = verify->add_option("--tol", tol, "Absolute tolerance")->check(CLI::Range(1e-13, 1e-3));
    verify->add_option("--jsonl", jsonl_path, "Write JSON lines to PATH (- for stdout)");
    verify->add_flag("--table", table, "Print a table");
    verify->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::PositiveNumber);
    auto* samples_opt = verify->add_option("--samples", samples, "Samples per identity");
    verify->add_option("--seed", seed, "Seed for extra random samples");
    verify->add_flag("--stress", stress, "Include boundary samples and printed variants");
    verify->footer("Explicit samples follow --, e.g. verify --id T1a -- --sample a=0.5+0.2i");

    std::vector<std::string> args;
    bool after = false;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--") {
            extra.assign(argv + i + 1, argv + argc);
            args.erase(args.begin(), args.begin() + (argc - i));
            after = true;
            break;
        }

    try {
        app.parse(args);
        if (after && !*verify) throw CLI::ExtrasError({"--"});
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list) {
            for (const auto& r : dilogid::catalog()) std::cout << r.id << '\t' << r.anchor << '\n';
            return 0;
        }
        if (*eval) return run_eval(fn, fn_args);

        dilogid::verify_options opt;
        opt.patterns = ids;
        if (*tol_opt) opt.tol = tol;
        opt.parallelism = parallelism;
        if (*samples_opt) opt.samples = samples;
        opt.seed = seed;
        opt.stress = stress;
        opt.explicit_samples = parse_samples(extra);

        auto selected = dilogid::select(opt.patterns);
        for (const auto& p : ids)
            if (dilogid::select({p}).empty()) throw usage_error("unknown identity " + p);
        for (const auto* rec : selected) {
            auto names = parameter_names(*rec);
            for (const auto& smp : opt.explicit_samples) {
                for (const auto& [k, v] : smp)
                    if (!names.count(k)) throw usage_error(rec->id + " has no parameter " + k);
                rec->domain.validate(smp);
            }
        }

        auto results = dilogid::verify_all(opt);
        if (!jsonl_path.empty()) {
            if (jsonl_path == "-") {
                dilogid::write_jsonl(std::cout, results);
            } else {
                std::ofstream out(jsonl_path, std::ios::binary);
                if (!out) throw usage_error("cannot open " + jsonl_path);
                dilogid::write_jsonl(out, results);
            }
        }
        if (table) dilogid::write_table(std::cout, results);
        if (jsonl_path.empty() && !table) dilogid::write_jsonl(std::cout, results);

        std::size_t counted = 0, failed = 0;
        for (const auto& r : results)
            if (dilogid::counts(r)) {
                ++counted;
                failed += r.pass ? 0 : 1;
            }
        std::cerr << counted - failed << "/" << counted << " passed\n";
        return failed == 0 ? 0 : 1;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const dilogid::domain_error& e) {
        std::cerr << "domain error (" << e.parameter() << "): " << e.what() << '\n';
        return 3;
    } catch (const dilogid::unsupported_order& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
