#include "nrt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>

#include "nrt/codes.hpp"
#include "nrt/errors.hpp"
#include "nrt/json_io.hpp"
#include "nrt/macwilliams.hpp"
#include "nrt/multipoly.hpp"
#include "nrt/reynolds.hpp"
#include "nrt/transfer.hpp"
#include "nrt/verify.hpp"

namespace nrt {

namespace {

// q -> GF(q) via the built-in defaults; prime powers beyond 4, 8, 9 need a
// code file with an explicit modulus.
FieldPtr field_from_order(long long q) {
    if (q < 2) throw DegreeMismatch("q must be at least 2");
    long long p = q;
    int k = 1;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            k = 0;
            long long rest = q;
            while (rest % d == 0) {
                rest /= d;
                ++k;
            }
            if (rest != 1)
                throw NonPrimeCharacteristic("q = " + std::to_string(q) +
                                             " is not a prime power");
            break;
        }
    }
    return Field::make(static_cast<int>(p), k);
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

std::vector<std::string> generator_names(size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (size_t i = 1; i <= count; ++i) names.push_back("g" + std::to_string(i));
    return names;
}

void print_code_text(std::ostream& out, const LinearCode& c, const std::string& heading) {
    out << heading << ": dim " << c.dim() << " code in M_{" << c.n() << "," << c.m()
        << "}(GF(" << c.field().q() << "))\n";
    for (int i = 0; i < c.dim(); ++i) {
        out << "  [";
        for (int pos = 0; pos < c.n() * c.m(); ++pos) {
            if (pos) out << " ";
            out << c.generators().at(i, pos);
        }
        out << "]\n";
    }
}

struct Options {
    long long q = 0;
    int m = 0;
    int n = 0;
    uint64_t card = 0;
    std::string poly;
    std::string code_file;
    std::string group_file;
    bool paper_t = false;
    int maxdeg = 0;
    uint64_t budget = kDefaultBudget;
    int threads = 1;
    bool json = false;
};

GeneratorSet transferred_basis(const Options& opt) {
    auto sigma = sigma_matrix(opt.q, opt.m);
    RatMatrix t = opt.paper_t ? closed_form_diagonalizer(opt.q, opt.m)
                              : diagonalize_involution(sigma).t;
    return transfer_generators(t, diagonal_invariant_generators(opt.m));
}

int dispatch(const std::string& verb, const Options& opt, std::ostream& out) {
    if (verb == "sigma") {
        auto sigma = sigma_matrix(opt.q, opt.m);
        if (opt.json) {
            out << matrix_to_json(sigma).dump(2) << "\n";
        } else {
            for (int i = 0; i < sigma.rows(); ++i) {
                for (int j = 0; j < sigma.cols(); ++j) {
                    if (j) out << " ";
                    out << rat_str(sigma.at(i, j));
                }
                out << "\n";
            }
        }
        return 0;
    }

    if (verb == "mac") {
        auto h = MultiPoly::parse(opt.poly, opt.m + 1);
        auto transformed = macwilliams_transform(h, opt.q, opt.m, BigInt(opt.card));
        if (opt.json)
            out << Json{{"poly", transformed.str()}}.dump(2) << "\n";
        else
            out << transformed.str() << "\n";
        return 0;
    }

    if (verb == "shape-enum") {
        auto code = code_from_json(load_json_file(opt.code_file));
        auto h = shape_enumerator(code, opt.budget, opt.threads);
        if (opt.json)
            out << Json{{"poly", h.str()}, {"dim", code.dim()}}.dump(2) << "\n";
        else
            out << h.str() << "\n";
        return 0;
    }

    if (verb == "dual") {
        auto code = code_from_json(load_json_file(opt.code_file));
        auto dual = dual_code(code);
        if (opt.json)
            out << code_to_json(dual).dump(2) << "\n";
        else
            print_code_text(out, dual, "dual");
        return 0;
    }

    if (verb == "self-dual-scan") {
        auto field = field_from_order(opt.q);
        auto codes = enumerate_self_dual_codes(field, opt.n, opt.m, opt.budget, opt.threads);
        if (opt.json) {
            Json ja = Json::array();
            for (const auto& c : codes) {
                Json jc = code_to_json(c);
                jc["enumerator"] = shape_enumerator(c, opt.budget, opt.threads).str();
                ja.push_back(std::move(jc));
            }
            out << ja.dump(2) << "\n";
        } else {
            out << codes.size() << " self-dual codes in M_{" << opt.n << "," << opt.m
                << "}(GF(" << opt.q << "))\n";
            for (size_t i = 0; i < codes.size(); ++i) {
                print_code_text(out, codes[i], "code " + std::to_string(i + 1));
                out << "  enumerator: "
                    << shape_enumerator(codes[i], opt.budget, opt.threads).str() << "\n";
            }
        }
        return 0;
    }

    if (verb == "gens") {
        auto b = transferred_basis(opt);
        if (opt.json) {
            Json ja = Json::array();
            size_t i = 1;
            for (const auto& g : b.items) {
                ja.push_back({{"name", "g" + std::to_string(i++)},
                              {"degree", g.degree},
                              {"source", g.source.str()},
                              {"poly", g.poly.str()}});
            }
            out << ja.dump(2) << "\n";
        } else {
            size_t i = 1;
            for (const auto& g : b.items) {
                out << "g" << i++ << " (deg " << g.degree << ", from " << g.source.str()
                    << "): " << g.poly.str() << "\n";
            }
        }
        return 0;
    }

    if (verb == "rewrite") {
        auto b = transferred_basis(opt);
        auto p = MultiPoly::parse(opt.poly, opt.m + 1);
        auto expr = rewrite_in_generators(p, b);
        if (!expr) {
            out << "NotExpressible\n";
            return 1;
        }
        auto names = generator_names(b.size());
        if (opt.json)
            out << Json{{"expressible", true}, {"expression", expr->str(&names)}}.dump(2)
                << "\n";
        else
            out << expr->str(&names) << "\n";
        return 0;
    }

    if (verb == "reynolds") {
        auto gens = group_generators_from_json(load_json_file(opt.group_file));
        // --budget doubles as the closure cap here
        size_t cap = opt.budget == kDefaultBudget ? kDefaultClosureCap
                                                  : static_cast<size_t>(opt.budget);
        auto group = group_closure(gens, cap);
        int maxdeg = opt.maxdeg > 0 ? opt.maxdeg : static_cast<int>(group.order());
        auto result = minimal_generators(group, maxdeg);
        if (opt.json) {
            Json jg;
            jg["order"] = group.order();
            jg["degrees"] = result.degrees();
            Json ja = Json::array();
            for (const auto& g : result.items)
                ja.push_back({{"degree", g.degree}, {"poly", g.poly.str()}});
            jg["generators"] = std::move(ja);
            out << jg.dump(2) << "\n";
        } else {
            out << "group order " << group.order() << ", generator degrees [";
            auto degrees = result.degrees();
            for (size_t i = 0; i < degrees.size(); ++i)
                out << (i ? "," : "") << degrees[i];
            out << "]\n";
            size_t i = 1;
            for (const auto& g : result.items)
                out << "f" << i++ << " (deg " << g.degree << "): " << g.poly.str() << "\n";
        }
        return 0;
    }

    if (verb == "verify-examples") {
        return run_worked_example_checks(out, opt.json) ? 0 : 1;
    }

    throw ParseError("unknown verb: " + verb);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact shape enumerators, MacWilliams transforms and invariant "
                 "generators for codes in the NRT metric",
                 "nrtshape"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", opt.budget, "enumeration budget (work cap)");
        sub->add_option("--threads", opt.threads, "worker threads for enumeration")
            ->check(CLI::Range(1, 256));
        sub->add_flag("--json", opt.json, "machine-readable output");
    };

    auto* shape = app.add_subcommand("shape-enum", "shape enumerator of a code");
    shape->add_option("--code", opt.code_file, "code JSON file")->required();
    add_common(shape);

    auto* dual = app.add_subcommand("dual", "dual of a code");
    dual->add_option("--code", opt.code_file, "code JSON file")->required();
    add_common(dual);

    auto* scan = app.add_subcommand("self-dual-scan", "enumerate all self-dual codes");
    scan->add_option("--q", opt.q, "field order")->required();
    scan->add_option("--n", opt.n, "rows")->required()->check(CLI::PositiveNumber);
    scan->add_option("--m", opt.m, "columns")->required()->check(CLI::PositiveNumber);
    add_common(scan);

    auto* mac = app.add_subcommand("mac", "apply the MacWilliams transform");
    mac->add_option("--q", opt.q, "field order")->required();
    mac->add_option("--m", opt.m, "columns")->required()->check(CLI::PositiveNumber);
    mac->add_option("--card", opt.card, "cardinality of the code")->required();
    mac->add_option("--poly", opt.poly, "shape enumerator in x0..xm")->required();
    add_common(mac);

    auto* sigma = app.add_subcommand("sigma", "print the involution q^(-m/2) g");
    sigma->add_option("--q", opt.q, "field order")->required();
    sigma->add_option("--m", opt.m, "columns (even)")->required()->check(CLI::PositiveNumber);
    add_common(sigma);

    auto* gens = app.add_subcommand("gens", "transferred invariant generators");
    gens->add_option("--q", opt.q, "field order")->required();
    gens->add_option("--m", opt.m, "columns (even)")->required()->check(CLI::PositiveNumber);
    gens->add_flag("--paper-T", opt.paper_t,
                   "use the closed-form basis matrix (m in {2,4,6}) instead of the computed one");
    add_common(gens);

    auto* rewrite = app.add_subcommand("rewrite", "express a polynomial in the generators");
    rewrite->add_option("--q", opt.q, "field order")->required();
    rewrite->add_option("--m", opt.m, "columns (even)")->required()->check(CLI::PositiveNumber);
    rewrite->add_option("--poly", opt.poly, "polynomial in x0..xm")->required();
    rewrite->add_flag("--paper-T", opt.paper_t,
                      "use the closed-form basis matrix (m in {2,4,6}) instead of the computed one");
    add_common(rewrite);

    auto* reyn = app.add_subcommand("reynolds", "minimal invariant generators of a matrix group");
    reyn->add_option("--group", opt.group_file, "group JSON file with generator matrices")
        ->required();
    reyn->add_option("--maxdeg", opt.maxdeg, "generation degree bound (default: group order)");
    add_common(reyn);

    auto* verify = app.add_subcommand("verify-examples", "run the worked-example suite");
    add_common(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        for (auto* sub : {shape, dual, scan, mac, sigma, gens, rewrite, reyn, verify})
            if (sub->parsed()) return dispatch(sub->get_name(), opt, out);
        err << "usage error: no verb given\n" << app.help();
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";  // begins with the error name
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nrt
