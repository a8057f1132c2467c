#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcat/catalog.hpp"
#include "modcat/doubles.hpp"
#include "modcat/io.hpp"
#include "modcat/structure.hpp"
#include "modcat/verify.hpp"

namespace modcat::cli {

namespace {

// locale-independent, deterministic across hosts
std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

int resolve_label(const PremodularData& d, const std::string& token) {
    for (int i = 0; i < d.rank; ++i)
        if (d.labels[i] == token) return i;
    try {
        size_t pos = 0;
        const int idx = std::stoi(token, &pos);
        if (pos == token.size() && idx >= 0 && idx < d.rank) return idx;
    } catch (...) {
    }
    throw IndexOutOfRange("unknown object label: " + token);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void print_info(const PremodularData& d, std::ostream& out) {
    out << "name: " << d.name << "\n";
    out << "rank: " << d.rank << "\n";
    out << "conductor: " << d.conductor << "\n";
    const CycNum dim = dim_category(d);
    const auto en = numeric_eval(dim);
    out << "dim: " << dim.to_string() << " ~= " << fmt_double(en.re) << "\n";
    const auto w = is_modular(d);
    out << "modular: " << (w.modular ? "yes" : "no") << "\n";
    out << "center: " << SubCat{&d, w.center_members}.to_string() << "\n";
    out << "unitary: " << (unitary_diagnostic(d) ? "yes" : "no") << "\n";
}

void print_tree(const FactorNode& n, std::ostream& out, int depth) {
    const std::string indent(static_cast<size_t>(depth) * 2, ' ');
    if (n.is_leaf()) {
        out << indent << "- prime: " << n.data.name << " (rank " << n.data.rank << ")\n";
        return;
    }
    out << indent << "- split: " << n.data.name << " (rank " << n.data.rank << ")\n";
    print_tree(*n.left, out, depth + 1);
    print_tree(*n.right, out, depth + 1);
}

void emit_or_print(const PremodularData& d, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << category_to_json_text(d);
    else
        save_category_file(d, out_path);
}

int report_exit(const Report& rep, bool json, std::ostream& out) {
    out << (json ? rep.to_json_text() : rep.to_text());
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for premodular/modular tensor category data"};
    app.name("modcat");
    app.set_version_flag("--version", "modcat 0.1.0");
    app.require_subcommand(0, 1);

    std::string file, file2, out_path, out_dir, suite = "all", objects, group, key;
    bool numeric = false, all_modes = false, modular_only = false, json = false;
    long p = 0, n = 0, max_rank = 256;

    auto* c_catalog = app.add_subcommand("catalog", "list catalog keys or emit an entry");
    c_catalog->add_option("key", key, "catalog key");
    c_catalog->add_option("--emit", out_path, "write the entry to FILE");

    auto* c_info = app.add_subcommand("info", "rank, dimension, modularity, center");
    c_info->add_option("file", file, "category data file")->required();

    auto* c_smatrix = app.add_subcommand("smatrix", "print the S-matrix");
    c_smatrix->add_option("file", file, "category data file")->required();
    c_smatrix->add_flag("--numeric", numeric, "numeric 53-bit output with radius column");

    auto* c_center = app.add_subcommand("center", "the subcategory of transparent objects");
    c_center->add_option("file", file, "category data file")->required();

    auto* c_centralizer = app.add_subcommand("centralizer", "centralizer of a generated subcategory");
    c_centralizer->add_option("file", file, "category data file")->required();
    c_centralizer->add_option("--objects", objects, "comma-separated labels generating K")->required();

    auto* c_modular = app.add_subcommand("modular", "test modularity via both criteria");
    c_modular->add_option("file", file, "category data file")->required();

    auto* c_subcats = app.add_subcommand("subcats", "enumerate the subcategory lattice");
    c_subcats->add_option("file", file, "category data file")->required();
    c_subcats->add_flag("--modular-only", modular_only, "list only modular subcategories");

    auto* c_factor = app.add_subcommand("factor", "prime factorization");
    c_factor->add_option("file", file, "category data file")->required();
    c_factor->add_flag("--all", all_modes, "enumerate all unordered factorizations");
    c_factor->add_option("--out-dir", out_dir, "directory for factor files (default: alongside input)");

    auto* c_double = app.add_subcommand("double", "Drinfeld double of a finite abelian group");
    c_double->add_option("--group", group, "cyclic factor orders, e.g. 2,3")->required();
    c_double->add_option("--out", out_path, "write to FILE instead of stdout");
    c_double->add_option("--max-rank", max_rank, "rank budget (default 256)");

    auto* c_reverse = app.add_subcommand("reverse", "reverse the braiding (invert twists)");
    c_reverse->add_option("file", file, "category data file")->required();
    c_reverse->add_option("--out", out_path, "write to FILE instead of stdout");

    auto* c_product = app.add_subcommand("product", "Deligne product of two categories");
    c_product->add_option("file1", file, "first factor")->required();
    c_product->add_option("file2", file2, "second factor")->required();
    c_product->add_option("--out", out_path, "write to FILE instead of stdout");

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("file", file, "category data file")->required();
    c_verify->add_option("--suite", suite, "lemmas|dct|bound|all (default all)")
        ->check(CLI::IsMember({"lemmas", "dct", "bound", "all"}));
    c_verify->add_flag("--json", json, "machine-readable report");

    auto* c_classify = app.add_subcommand("classify-double", "modular subcategory classification for D(Z/p^n)");
    c_classify->add_option("--p", p, "prime")->required();
    c_classify->add_option("--n", n, "exponent")->required();
    c_classify->add_option("--max-rank", max_rank, "rank budget (default 256)");
    c_classify->add_flag("--json", json, "machine-readable report");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_catalog->parsed()) {
            if (key.empty()) {
                for (const auto& k : catalog_keys()) out << k << "\n";
                return 0;
            }
            const PremodularData d = catalog_get(key);
            if (!out_path.empty()) {
                save_category_file(d, out_path);
                return 0;
            }
            print_info(d, out);
            return 0;
        }
        if (c_info->parsed()) {
            print_info(load_category_file(file), out);
            return 0;
        }
        if (c_smatrix->parsed()) {
            const PremodularData d = load_category_file(file);
            const CycMatrix& s = d.smatrix();
            for (int i = 0; i < d.rank; ++i) {
                for (int j = 0; j < d.rank; ++j) {
                    if (numeric) {
                        const auto en = numeric_eval(s.at(i, j));
                        out << i << ' ' << j << ' ' << fmt_double(en.re) << ' '
                            << fmt_double(en.im) << ' ' << fmt_double(en.radius) << "\n";
                    } else {
                        out << i << ' ' << j << ' ' << s.at(i, j).to_string() << "\n";
                    }
                }
            }
            return 0;
        }
        if (c_center->parsed()) {
            const PremodularData d = load_category_file(file);
            const SubCat z = center(d);
            out << "center: " << z.to_string() << " (size " << z.size() << ")\n";
            return 0;
        }
        if (c_centralizer->parsed()) {
            const PremodularData d = load_category_file(file);
            std::vector<int> seeds;
            for (const auto& tok : split_commas(objects)) seeds.push_back(resolve_label(d, tok));
            const SubCat k = generated(d, seeds);
            const SubCat cent = centralizer(d, k);
            out << "generated: " << k.to_string() << "\n";
            out << "centralizer: " << cent.to_string() << " (size " << cent.size() << ")\n";
            return 0;
        }
        if (c_modular->parsed()) {
            const PremodularData d = load_category_file(file);
            const auto w = is_modular(d);
            out << (w.modular ? "modular" : "not modular") << ": det S "
                << (w.det_nonzero ? "!= 0" : "= 0") << "; center = "
                << SubCat{&d, w.center_members}.to_string() << "\n";
            return 0;
        }
        if (c_subcats->parsed()) {
            const PremodularData d = load_category_file(file);
            for (const auto& k : enumerate_subcats(d)) {
                const bool mod = k.is_full() ? is_modular(d).modular : is_modular(d, k).modular;
                if (modular_only && !mod) continue;
                out << "size=" << k.size() << " modular=" << (mod ? "yes" : "no")
                    << " members=" << k.to_string() << "\n";
            }
            return 0;
        }
        if (c_factor->parsed()) {
            const PremodularData d = load_category_file(file);
            std::vector<Factorization> fs;
            if (all_modes)
                fs = prime_factorize_all(d);
            else
                fs.push_back(prime_factorize(d));
            const std::filesystem::path input(file);
            const std::filesystem::path dir =
                out_dir.empty() ? (input.has_parent_path() ? input.parent_path()
                                                           : std::filesystem::path("."))
                                : std::filesystem::path(out_dir);
            const std::string stem = input.stem().string();
            nlohmann::ordered_json jout;
            jout["input"] = d.name;
            jout["factorizations"] = nlohmann::ordered_json::array();
            for (size_t fi = 0; fi < fs.size(); ++fi) {
                out << "factorization " << (fi + 1) << " of " << fs.size() << ":\n";
                if (fs[fi].root)
                    print_tree(*fs[fi].root, out, 1);
                else
                    out << "  - trivial (empty product)\n";
                nlohmann::ordered_json jfac;
                jfac["factors"] = nlohmann::ordered_json::array();
                const auto factors = fs[fi].factors();
                for (size_t j = 0; j < factors.size(); ++j) {
                    std::ostringstream fname;
                    fname << stem << ".f" << (fi + 1) << ".p" << (j + 1) << ".json";
                    const auto fpath = dir / fname.str();
                    save_category_file(*factors[j], fpath.string());
                    jfac["factors"].push_back(nlohmann::ordered_json{{"file", fpath.string()},
                                                                     {"name", factors[j]->name},
                                                                     {"rank", factors[j]->rank}});
                }
                jout["factorizations"].push_back(std::move(jfac));
            }
            out << jout.dump(2) << "\n";
            return 0;
        }
        if (c_double->parsed()) {
            std::vector<long> orders;
            for (const auto& tok : split_commas(group)) orders.push_back(std::stol(tok));
            const PremodularData d =
                drinfeld_double(AbelianGroup::from_orders(orders), max_rank);
            emit_or_print(d, out_path, out);
            return 0;
        }
        if (c_reverse->parsed()) {
            emit_or_print(reverse(load_category_file(file)), out_path, out);
            return 0;
        }
        if (c_product->parsed()) {
            emit_or_print(deligne_product(load_category_file(file), load_category_file(file2)),
                          out_path, out);
            return 0;
        }
        if (c_verify->parsed()) {
            const PremodularData d = load_category_file(file);
            Report rep;
            if (suite == "lemmas") {
                rep = verify_lemma_suite(d);
            } else if (suite == "dct") {
                rep = verify_dct(d);
            } else if (suite == "bound") {
                rep = verify_bound(d);
            } else {
                rep = verify_lemma_suite(d);
                rep.merge(verify_modularity_agreement(d));
                const bool modular = is_modular(d).modular;
                std::ostream& note = json ? err : out;
                if (modular)
                    rep.merge(verify_dct(d));
                else
                    note << "SKIP verify-dct " << d.name << " -- not modular\n";
                if (modular && unitary_diagnostic(d))
                    rep.merge(verify_bound(d));
                else
                    note << "SKIP verify-bound " << d.name << " -- requires modular unitary data\n";
            }
            return report_exit(rep, json, out);
        }
        if (c_classify->parsed()) {
            const auto result = classify_modular_subcats_cyclic(p, n, max_rank);
            if (json) {
                auto j = nlohmann::ordered_json::parse(result.report.to_json_text());
                nlohmann::ordered_json head;
                head["p"] = p;
                head["n"] = n;
                head["rank"] = result.double_data.rank;
                head["modular_subcategories"] = nlohmann::ordered_json::array();
                for (const auto& mem : result.modular_subcats) {
                    nlohmann::ordered_json names = nlohmann::ordered_json::array();
                    for (int x : mem) names.push_back(result.double_data.label(x));
                    head["modular_subcategories"].push_back(std::move(names));
                }
                head["checks"] = j["checks"];
                head["summary"] = j["summary"];
                out << head.dump(2) << "\n";
                return result.report.all_pass() ? 0 : 1;
            }
            out << "D(Z/" << p << "^" << n << "): rank " << result.double_data.rank << "\n";
            out << "modular proper subcategories: " << result.modular_subcats.size() << "\n";
            for (const auto& mem : result.modular_subcats)
                out << "  " << SubCat{&result.double_data, mem}.to_string() << "\n";
            return report_exit(result.report, json, out);
        }
        err << app.help();
        return 2;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const SplitFailure& e) {
        err << "split failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace modcat::cli
